#pragma once

#include <fstream>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "arbigeom/matrix.hpp"
#include "arbigeom/rational.hpp"

namespace arbigeom {

/// CSV matrix: one scenario per row, entries are decimal or p/q
/// fraction literals, '#'-prefixed lines are comments.
inline RatMatrix read_matrix_csv(std::istream& in) {
  std::vector<std::vector<Rational>> rows;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    if (line[first] == '#') continue;
    std::vector<Rational> row;
    std::stringstream cells(line);
    std::string cell;
    while (std::getline(cells, cell, ',')) {
      try {
        row.push_back(parse_rational(cell));
      } catch (const std::exception& e) {
        throw std::runtime_error("malformed CSV entry '" + cell + "' on line " +
                                 std::to_string(lineno) + ": " + e.what());
      }
    }
    if (!rows.empty() && row.size() != rows.front().size())
      throw std::runtime_error("malformed CSV: line " + std::to_string(lineno) + " has " +
                               std::to_string(row.size()) + " entries, expected " +
                               std::to_string(rows.front().size()));
    rows.push_back(std::move(row));
  }
  if (rows.empty() || rows.front().empty()) throw std::runtime_error("malformed CSV: no data rows");
  RatMatrix m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = std::move(rows[i][j]);
  return m;
}

inline RatMatrix load_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read matrix file: " + path);
  return read_matrix_csv(in);
}

/// A vector file is a CSV with a single row or a single column.
inline RatVector load_vector_file(const std::string& path) {
  RatMatrix m = load_matrix_file(path);
  if (m.rows() != 1 && m.cols() != 1)
    throw std::runtime_error("vector file must be a single CSV row or column: " + path);
  return m.rows() == 1 ? m.row(0) : m.col(0);
}

}  // namespace arbigeom
