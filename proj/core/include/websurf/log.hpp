#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace websurf {

enum class HttpMethod { get, post, other };

std::string_view to_string(HttpMethod m);
HttpMethod method_from_string(std::string_view s);

/// One parsed request from the access log. Targets and referrers are stored
/// normalized (see normalize_url); an absent referrer is the empty string.
struct LogRecord {
  std::string remote_ip;
  std::string session_key;
  std::int64_t timestamp = 0;  // seconds since epoch, UTC
  HttpMethod method = HttpMethod::other;
  std::string target;
  int response_code = 0;
  std::string content_type;
  std::string referrer;
  std::string user_agent;

  bool has_referrer() const { return !referrer.empty(); }
};

/// Canonical layout is a 9-column TSV:
///   remote_ip  session_key  unix_timestamp_seconds  method  target_url
///   response_code  content_type  referrer_url_or_dash  user_agent
/// json_lines carries one JSON object per line with the same field names.
enum class LogFormat { tsv, json_lines };

/// Parses one log line. Returns nullopt on malformed input (wrong column
/// count, unparseable timestamp or response code, empty target) and, when
/// `error` is non-null, stores a description. Filtering is a separate stage:
/// a well-formed 404 or bot line parses fine.
std::optional<LogRecord> parse_log_line(std::string_view line, LogFormat format,
                                        std::string* error = nullptr);

/// Record-level filter configuration. Matching is substring-based: admin
/// patterns against target and referrer URLs, bot substrings against the
/// lowercased user agent. The default admin patterns approximate edit-preview
/// and upload endpoints plus RSS feeds and are meant to be overridden per
/// site.
struct FilterRules {
  std::string allowed_content_type_prefix = "text/html";
  int required_response_code = 200;
  std::vector<std::string> bot_ua_substrings = {"crawl", "slurp", "spider", "bot"};
  std::vector<std::string> admin_path_patterns = default_admin_path_patterns();
  bool drop_self_referrer = true;

  static std::vector<std::string> default_admin_path_patterns();
};

enum class DropReason {
  parse_error = 0,
  wrong_content_type,
  bad_response_code,
  admin_path,
  bot_user_agent,
  self_referrer,
};
inline constexpr std::size_t kDropReasonCount = 6;

std::string_view to_string(DropReason r);

/// Per-reason drop counters. Merging is associative, so partitions of the
/// input can be counted independently and combined.
struct DropAccounting {
  std::uint64_t total_lines = 0;
  std::uint64_t kept = 0;
  std::array<std::uint64_t, kDropReasonCount> dropped{};

  void count_kept() { ++total_lines, ++kept; }
  void count_dropped(DropReason r) { ++total_lines, ++dropped[static_cast<std::size_t>(r)]; }
  std::uint64_t dropped_total() const;
  void merge(const DropAccounting& other);
  /// kept + dropped must reconcile with total_lines.
  bool consistent() const { return kept + dropped_total() == total_lines; }
};

/// Applies the rules in fixed order (content type, response code, admin path,
/// bot user agent, self-referrer) and reports the first match. nullopt means
/// keep. Total function: never throws on any parsed record.
std::optional<DropReason> filter_record(const LogRecord& record, const FilterRules& rules);

}  // namespace websurf
