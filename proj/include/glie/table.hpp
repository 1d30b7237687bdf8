#pragma once

#include <string>
#include <vector>

#include "glie/gradedquotient.hpp"

namespace glie::table {

inline constexpr const char* kToolVersion = "0.1.0";

struct TableRow {
  int degree = 0;
  std::size_t witt = 0;
  std::size_t rank = 0;
  std::vector<Int> torsion;
  double seconds = 0.0;  // not part of the machine formats
};

struct TableDocument {
  std::string presentation;
  int n = 0;
  std::vector<TableRow> rows;
  std::string version = kToolVersion;
};

bool operator==(const TableDocument& a, const TableDocument& b);  // ignores timings

TableDocument make_document(const std::string& presentation, int n,
                            const std::vector<gradedquotient::GradedComponentReport>& reports);

// Machine formats are byte-stable: timings are omitted.
std::string emit_text(const TableDocument& doc);
std::string emit_json(const TableDocument& doc);
std::string emit_csv(const TableDocument& doc);

TableDocument parse_json(const std::string& text);

}  // namespace glie::table
