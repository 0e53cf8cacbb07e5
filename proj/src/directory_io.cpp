#include "wdq/directory_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace wdq {

namespace {

using nlohmann::json;
using ordered_json = nlohmann::ordered_json;

// Turns nlohmann's byte offset into a 1-based line/column pair.
std::pair<std::size_t, std::size_t> locate(const std::string& text,
                                           std::size_t byte) {
  std::size_t line = 1, column = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw ParseError(where.empty() ? what : where + ": " + what);
}

void reject_unknown_fields(const json& obj, const std::string& where,
                           std::initializer_list<const char*> allowed) {
  for (const auto& [key, value] : obj.items()) {
    (void)value;
    bool ok = false;
    for (const char* a : allowed)
      if (key == a) ok = true;
    if (!ok) fail(where, "unknown field '" + key + "'");
  }
}

std::string require_string(const json& obj, const std::string& where,
                           const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) fail(where, std::string("missing field '") + key + "'");
  if (!it->is_string())
    fail(where, std::string("field '") + key + "' must be a string");
  return it->get<std::string>();
}

int require_int(const json& obj, const std::string& where, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) fail(where, std::string("missing field '") + key + "'");
  if (!it->is_number_integer())
    fail(where, std::string("field '") + key + "' must be an integer");
  return it->get<int>();
}

std::vector<std::string> optional_string_array(const json& obj,
                                               const std::string& where,
                                               const char* key,
                                               bool reject_empty) {
  std::vector<std::string> out;
  auto it = obj.find(key);
  if (it == obj.end()) return out;
  if (!it->is_array())
    fail(where, std::string("field '") + key + "' must be an array");
  for (const auto& entry : *it) {
    if (!entry.is_string())
      fail(where, std::string("entries of '") + key + "' must be strings");
    std::string s = entry.get<std::string>();
    if (reject_empty && s.empty())
      fail(where, std::string("empty string in '") + key + "'");
    out.push_back(std::move(s));
  }
  return out;
}

WebDirectory from_json(const json& doc) {
  if (!doc.is_object()) fail("", "directory dump must be a JSON object");
  reject_unknown_fields(doc, "dump", {"root", "categories", "resources"});

  std::string root = require_string(doc, "dump", "root");

  auto cats_it = doc.find("categories");
  if (cats_it == doc.end()) fail("dump", "missing field 'categories'");
  if (!cats_it->is_array()) fail("dump", "'categories' must be an array");

  std::vector<Category> categories;
  categories.reserve(cats_it->size());
  std::size_t index = 0;
  for (const auto& entry : *cats_it) {
    std::string where = "categories[" + std::to_string(index++) + "]";
    if (!entry.is_object()) fail(where, "must be an object");
    reject_unknown_fields(entry, where,
                          {"id", "level", "url", "children", "cross_links",
                           "resources", "const_bag"});
    Category c;
    c.id = require_string(entry, where, "id");
    c.level = require_int(entry, where, "level");
    c.url = require_string(entry, where, "url");
    c.children = optional_string_array(entry, where, "children", true);
    c.cross_links = optional_string_array(entry, where, "cross_links", true);
    c.resources = optional_string_array(entry, where, "resources", true);
    if (entry.contains("const_bag"))
      c.constant_bag = ConceptBag::from_terms(
          optional_string_array(entry, where, "const_bag", true));
    categories.push_back(std::move(c));
  }

  std::vector<Resource> resources;
  if (auto res_it = doc.find("resources"); res_it != doc.end()) {
    if (!res_it->is_array()) fail("dump", "'resources' must be an array");
    resources.reserve(res_it->size());
    index = 0;
    for (const auto& entry : *res_it) {
      std::string where = "resources[" + std::to_string(index++) + "]";
      if (!entry.is_object()) fail(where, "must be an object");
      reject_unknown_fields(entry, where, {"id", "url", "concepts"});
      Resource r;
      r.id = require_string(entry, where, "id");
      r.url = require_string(entry, where, "url");
      r.concepts = ConceptBag::from_terms(
          optional_string_array(entry, where, "concepts", true));
      resources.push_back(std::move(r));
    }
  }

  return WebDirectory(std::move(root), std::move(categories),
                      std::move(resources));
}

}  // namespace

WebDirectory parse_directory(const std::string& text, DumpFormat) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    auto [line, column] = locate(text, e.byte > 0 ? e.byte - 1 : 0);
    throw ParseError("parse error at line " + std::to_string(line) +
                         ", column " + std::to_string(column) + ": " +
                         e.what(),
                     line, column);
  }
  return from_json(doc);
}

WebDirectory load_directory_from_string(const std::string& text,
                                        DumpFormat format) {
  WebDirectory wd = parse_directory(text, format);
  auto violations = validate(wd);
  if (!violations.empty()) throw ValidationError(std::move(violations));
  return wd;
}

WebDirectory load_directory(std::istream& in, DumpFormat format) {
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return load_directory_from_string(buffer.str(), format);
}

WebDirectory load_directory_from_file(const std::string& path,
                                      DumpFormat format) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  return load_directory(in, format);
}

std::string write_directory(const WebDirectory& wd) {
  ordered_json doc;
  doc["root"] = wd.root();
  doc["categories"] = ordered_json::array();
  for (const auto& c : wd.categories()) {
    ordered_json jc;
    jc["id"] = c.id;
    jc["level"] = c.level;
    jc["url"] = c.url;
    jc["children"] = c.children;
    jc["cross_links"] = c.cross_links;
    jc["resources"] = c.resources;
    if (c.constant_bag) jc["const_bag"] = c.constant_bag->to_terms();
    doc["categories"].push_back(std::move(jc));
  }
  doc["resources"] = ordered_json::array();
  for (const auto& r : wd.resources()) {
    ordered_json jr;
    jr["id"] = r.id;
    jr["url"] = r.url;
    jr["concepts"] = r.concepts.to_terms();
    doc["resources"].push_back(std::move(jr));
  }
  return doc.dump(2) + "\n";
}

void write_directory(const WebDirectory& wd, std::ostream& out) {
  out << write_directory(wd);
}

}  // namespace wdq
