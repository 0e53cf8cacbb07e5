#pragma once

#include <iosfwd>
#include <string>

#include "wdq/directory.hpp"

namespace wdq {

enum class DumpFormat { json };

/// Parses a directory dump without validating it. Unknown fields, wrong
/// types and empty concept terms are rejected as ParseError.
WebDirectory parse_directory(const std::string& text,
                             DumpFormat format = DumpFormat::json);

/// Parses and validates; throws ParseError on malformed input and
/// ValidationError (listing every violation) on a broken structure.
WebDirectory load_directory(std::istream& in,
                            DumpFormat format = DumpFormat::json);
WebDirectory load_directory_from_string(const std::string& text,
                                        DumpFormat format = DumpFormat::json);
WebDirectory load_directory_from_file(const std::string& path,
                                      DumpFormat format = DumpFormat::json);

/// Canonical dump: categories and resources in stored order, concept bags
/// as sorted term arrays with duplicates encoding multiplicity.
std::string write_directory(const WebDirectory& wd);
void write_directory(const WebDirectory& wd, std::ostream& out);

}  // namespace wdq
