#pragma once

// Field tables: one record per line, `label | c0,c1,...,cn | [expected_disc]`,
// with `#` starting a comment.

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "traceform/exact.hpp"

namespace traceform::cli {

struct FieldTableRecord {
  std::string label;
  IntVector coeffs;  // c0..cn, degree >= 1
  std::optional<Int> expected_disc;
  std::size_t line = 0;
};

struct MalformedRecord {
  std::size_t line = 0;
  std::string text;
  std::string reason;
};

struct FieldTable {
  std::vector<FieldTableRecord> records;
  std::vector<MalformedRecord> malformed;
};

FieldTable parse_field_table(std::istream& in);
/// Throws Error(InvalidArgument) when the file cannot be opened.
FieldTable read_field_table(const std::string& path);

/// Inverse of parsing for a single record.
std::string format_record(const FieldTableRecord& r);

}  // namespace traceform::cli
