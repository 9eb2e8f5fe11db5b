#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "cutpoly/adm.hpp"

namespace cutpoly {

enum class RowKind { kCutFacets, kCutPoints, kMetricFacets, kMetricVertices };
enum class RowStatus { kPending, kPass, kFail, kSkipped };
std::string to_string(RowStatus s);

struct TableRow {
  std::string family;  // "CUTP_n,f", "Table 2", ...
  std::string label;
  std::string graph;   // graph spec; K_n for the metric rows
  Mode mode = Mode::kPolytope;
  RowKind kind = RowKind::kCutFacets;
  int n = 0;
  BigInt expected;
  /// Absent when the table marks the graph as singular.
  std::optional<std::size_t> expected_orbits;

  BigInt count;
  std::optional<std::size_t> orbits;
  std::string method;
  RowStatus status = RowStatus::kPending;
  std::string note;
  double seconds = 0;
};

struct TableCaps {
  std::size_t max_facets = 150'000;
  std::size_t max_points = 8192;
  std::size_t max_vertices = 1'000;
  std::size_t max_edges = 21;
};

std::vector<TableRow> table1_rows();
std::vector<TableRow> table2_rows();

/// Computes the row within the caps and sets status, method and note.
void evaluate_row(TableRow& row, const TableCaps& caps, unsigned workers = 1);

/// Number of orbits of an inequality set under the signed edge maps.
std::size_t count_orbits(const SymmetryAction& action, const std::vector<AffineInequality>& rows);
/// Orbits of vertices (or primitive rays) under the signed edge maps.
std::size_t count_vertex_orbits(const SymmetryAction& action, const std::vector<QVector>& vertices);

void print_table_header(std::ostream& out, const std::string& format);
void print_table_row(std::ostream& out, const std::string& format, const TableRow& row);

}  // namespace cutpoly
