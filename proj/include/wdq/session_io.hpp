#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "wdq/metrics.hpp"

namespace wdq {

/// One session per line:
///   {"target_resource":"r42","target_category":"c9","visits":["c1","c9"]}
/// plus an optional "truncated" boolean. Blank lines are skipped.

/// Session together with the 1-based line it came from.
struct NumberedSession {
  BrowseSession session;
  std::size_t line = 0;
};

/// Parses and validates every session against wd; throws
/// SessionFormatError naming the offending line.
std::vector<NumberedSession> read_sessions(std::istream& in,
                                           const WebDirectory& wd);
std::vector<NumberedSession> read_sessions_from_string(const std::string& text,
                                                       const WebDirectory& wd);

/// Single compact JSON line, no trailing newline.
std::string session_to_json(const BrowseSession& s);

void write_sessions(const std::vector<BrowseSession>& sessions,
                    std::ostream& out);
std::string sessions_to_jsonl(const std::vector<BrowseSession>& sessions);

}  // namespace wdq
