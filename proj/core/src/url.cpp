#include "websurf/url.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <vector>

namespace websurf {
namespace {

std::string to_lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

bool is_scheme_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '+' || c == '-' || c == '.';
}

// Length of "scheme:" at the front of `s`, 0 if there is none.
std::size_t scheme_length(std::string_view s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return 0;
  std::size_t i = 1;
  while (i < s.size() && is_scheme_char(s[i])) ++i;
  if (i < s.size() && s[i] == ':') return i + 1;
  return 0;
}

// RFC 3986 5.2.4: collapse "." and ".." path segments. Expects a path that
// starts with '/'; ".." above the root is dropped.
std::string remove_dot_segments(std::string_view path) {
  std::vector<std::string_view> kept;
  std::size_t pos = 0;
  bool trailing_slash = false;
  while (pos < path.size()) {
    std::size_t start = pos;
    while (pos < path.size() && path[pos] != '/') ++pos;
    std::string_view seg = path.substr(start, pos - start);
    if (pos < path.size()) ++pos;  // skip '/'
    if (seg == ".") {
      trailing_slash = true;
    } else if (seg == "..") {
      if (!kept.empty()) kept.pop_back();
      trailing_slash = true;
    } else if (!seg.empty()) {
      kept.push_back(seg);
      trailing_slash = pos >= path.size() && path.back() == '/';
    }
  }
  if (!path.empty() && path.back() == '/') trailing_slash = true;
  std::string out;
  for (const auto& seg : kept) {
    out += '/';
    out += seg;
  }
  if (out.empty() || trailing_slash) out += '/';
  return out;
}

struct UrlParts {
  std::string_view scheme;     // without "://"
  std::string_view authority;  // host[:port], may be empty for relative refs
  std::string_view path_query; // everything after the authority
  bool absolute = false;
};

UrlParts split_url(std::string_view url) {
  UrlParts parts;
  std::size_t sl = scheme_length(url);
  if (sl > 0 && url.substr(sl).starts_with("//")) {
    parts.absolute = true;
    parts.scheme = url.substr(0, sl - 1);
    std::string_view rest = url.substr(sl + 2);
    std::size_t end = rest.find_first_of("/?");
    if (end == std::string_view::npos) {
      parts.authority = rest;
      parts.path_query = {};
    } else {
      parts.authority = rest.substr(0, end);
      parts.path_query = rest.substr(end);
    }
  } else {
    parts.path_query = url;
  }
  return parts;
}

}  // namespace

std::string normalize_url(const std::string& url) {
  if (url.empty()) throw std::invalid_argument("normalize_url: empty URL");

  std::string_view in{url};
  if (auto hash = in.find('#'); hash != std::string_view::npos) in = in.substr(0, hash);
  if (in.empty()) throw std::invalid_argument("normalize_url: fragment-only URL: " + url);

  UrlParts parts = split_url(in);

  std::string host;
  if (parts.absolute) {
    host = to_lower(parts.authority);
    if (host.starts_with("www.")) host.erase(0, 4);
  }

  std::string_view path = parts.path_query;
  std::string_view query;
  bool has_query = false;
  if (auto q = path.find('?'); q != std::string_view::npos) {
    query = path.substr(q + 1);
    path = path.substr(0, q);
    has_query = true;
  }
  // root path "/" survives; anything longer loses its trailing slashes
  while (path.size() > 1 && path.back() == '/') path.remove_suffix(1);

  std::string out;
  if (parts.absolute) {
    out = to_lower(parts.scheme);
    out += "://";
    out += host;
  }
  out += path;
  if (has_query) {
    out += '?';
    out += query;
  }
  if (out.empty()) throw std::invalid_argument("normalize_url: empty URL after normalization: " + url);
  return out;
}

std::string resolve_reference(std::string_view base, std::string_view href) {
  // trim surrounding whitespace from the href, as found in real markup
  while (!href.empty() && std::isspace(static_cast<unsigned char>(href.front()))) href.remove_prefix(1);
  while (!href.empty() && std::isspace(static_cast<unsigned char>(href.back()))) href.remove_suffix(1);

  if (base.empty()) return {};
  if (href.empty() || href.front() == '#') return std::string(base);

  std::size_t sl = scheme_length(href);
  if (sl > 0) {
    std::string scheme = to_lower(href.substr(0, sl - 1));
    if (scheme == "http" || scheme == "https") return std::string(href);
    return {};
  }

  UrlParts b = split_url(base);
  if (!b.absolute) return {};
  std::string origin = std::string(b.scheme) + "://" + std::string(b.authority);

  if (href.starts_with("//")) return std::string(b.scheme) + ":" + std::string(href);

  std::string_view base_path = b.path_query;
  if (auto q = base_path.find('?'); q != std::string_view::npos) base_path = base_path.substr(0, q);

  std::string_view ref_path = href;
  std::string_view ref_query;
  if (auto q = href.find('?'); q != std::string_view::npos) {
    ref_path = href.substr(0, q);
    ref_query = href.substr(q);
  }

  std::string merged;
  if (ref_path.empty()) {
    return origin + std::string(base_path.empty() ? "/" : base_path) + std::string(ref_query);
  }
  if (ref_path.front() == '/') {
    merged = std::string(ref_path);
  } else {
    std::size_t last = base_path.rfind('/');
    std::string dir = last == std::string_view::npos ? "/" : std::string(base_path.substr(0, last + 1));
    merged = dir + std::string(ref_path);
  }
  return origin + remove_dot_segments(merged) + std::string(ref_query);
}

std::string url_host(std::string_view url) {
  UrlParts parts = split_url(url);
  if (!parts.absolute) return {};
  std::string host = to_lower(parts.authority);
  if (host.starts_with("www.")) host.erase(0, 4);
  return host;
}

}  // namespace websurf
