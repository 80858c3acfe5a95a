#pragma once

#include <string>
#include <string_view>

namespace websurf {

/// Canonicalizes a URL so that aliases of the same page compare equal:
/// scheme and host are lowercased, a leading "www." is dropped from the host,
/// the fragment is removed, trailing slashes are stripped from the path unless
/// the path is exactly "/", and the query string is kept verbatim.
/// Works on absolute http(s) URLs and on site-relative references.
/// Idempotent. Throws std::invalid_argument if the input (or what remains of
/// it after fragment removal) is empty.
std::string normalize_url(const std::string& url);

/// Resolves an href against a base URL (RFC 3986 style, including dot-segment
/// removal). Returns an absolute URL, or "" for references that cannot name a
/// page (unsupported schemes such as mailto:, empty base, ...). The result is
/// not yet normalized.
std::string resolve_reference(std::string_view base, std::string_view href);

/// Host (including an explicit port, when present) of an absolute URL,
/// lowercased; "" when the URL has no authority part.
std::string url_host(std::string_view url);

}  // namespace websurf
