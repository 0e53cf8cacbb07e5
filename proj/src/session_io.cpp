#include "wdq/session_io.hpp"

#include <istream>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace wdq {

namespace {

using nlohmann::json;
using ordered_json = nlohmann::ordered_json;

BrowseSession parse_session_line(const std::string& line, std::size_t lineno) {
  json doc;
  try {
    doc = json::parse(line);
  } catch (const json::parse_error& e) {
    throw SessionFormatError(e.what(), lineno);
  }
  if (!doc.is_object())
    throw SessionFormatError("session must be a JSON object", lineno);
  for (const auto& [key, value] : doc.items()) {
    (void)value;
    if (key != "target_resource" && key != "target_category" &&
        key != "visits" && key != "truncated")
      throw SessionFormatError("unknown field '" + key + "'", lineno);
  }

  BrowseSession s;
  auto get_string = [&](const char* key) {
    auto it = doc.find(key);
    if (it == doc.end() || !it->is_string())
      throw SessionFormatError(
          std::string("missing or non-string field '") + key + "'", lineno);
    return it->get<std::string>();
  };
  s.target_resource = get_string("target_resource");
  s.target_category = get_string("target_category");

  auto it = doc.find("visits");
  if (it == doc.end() || !it->is_array())
    throw SessionFormatError("missing or non-array field 'visits'", lineno);
  for (const auto& entry : *it) {
    if (!entry.is_string())
      throw SessionFormatError("entries of 'visits' must be strings", lineno);
    s.visits.push_back(entry.get<std::string>());
  }

  if (auto t = doc.find("truncated"); t != doc.end()) {
    if (!t->is_boolean())
      throw SessionFormatError("field 'truncated' must be a boolean", lineno);
    s.truncated = t->get<bool>();
  }
  return s;
}

}  // namespace

std::vector<NumberedSession> read_sessions(std::istream& in,
                                           const WebDirectory& wd) {
  std::vector<NumberedSession> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    BrowseSession s = parse_session_line(line, lineno);
    try {
      check_session(wd, s);
    } catch (const Error& e) {
      throw SessionFormatError(e.what(), lineno);
    }
    out.push_back({std::move(s), lineno});
  }
  return out;
}

std::vector<NumberedSession> read_sessions_from_string(const std::string& text,
                                                       const WebDirectory& wd) {
  std::istringstream in(text);
  return read_sessions(in, wd);
}

std::string session_to_json(const BrowseSession& s) {
  ordered_json doc;
  doc["target_resource"] = s.target_resource;
  doc["target_category"] = s.target_category;
  doc["visits"] = s.visits;
  if (s.truncated) doc["truncated"] = true;
  return doc.dump();
}

void write_sessions(const std::vector<BrowseSession>& sessions,
                    std::ostream& out) {
  for (const auto& s : sessions) out << session_to_json(s) << '\n';
}

std::string sessions_to_jsonl(const std::vector<BrowseSession>& sessions) {
  std::ostringstream out;
  write_sessions(sessions, out);
  return out.str();
}

}  // namespace wdq
