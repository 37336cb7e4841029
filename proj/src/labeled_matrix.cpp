#include "dckron/labeled_matrix.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

namespace dckron {

std::string format_value(double v) {
  if (v == 0.0) v = 0.0;  // drops the sign of -0
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

void write_matrix(std::ostream& os, const LabeledMatrixd& m) {
  for (std::size_t j = 0; j < m.col_labels().size(); ++j) {
    if (j > 0) os << ' ';
    os << m.col_labels()[j];
  }
  os << '\n';
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    os << m.row_labels()[static_cast<std::size_t>(i)];
    for (Eigen::Index j = 0; j < m.cols(); ++j) os << ' ' << format_value(m(i, j));
    os << '\n';
  }
}

std::string matrix_to_string(const LabeledMatrixd& m) {
  std::ostringstream os;
  write_matrix(os, m);
  return os.str();
}

LabeledMatrixd read_matrix(std::istream& is) {
  std::string line;
  int lineno = 0;
  Labels cols;
  bool header = false;
  Labels rows;
  std::vector<std::vector<double>> values;
  while (std::getline(is, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string tok;
    std::vector<std::string> toks;
    while (ls >> tok) toks.push_back(tok);
    if (toks.empty() || toks[0].front() == '#') continue;
    if (!header) {
      cols = toks;
      header = true;
      continue;
    }
    if (toks.size() != cols.size() + 1) {
      throw ParseError(lineno, "expected row label and " + std::to_string(cols.size()) + " values");
    }
    rows.push_back(toks[0]);
    std::vector<double> row;
    for (std::size_t j = 1; j < toks.size(); ++j) {
      double v = 0.0;
      const auto& s = toks[j];
      const auto r = std::from_chars(s.data(), s.data() + s.size(), v);
      if (r.ec != std::errc() || r.ptr != s.data() + s.size() || !std::isfinite(v)) {
        throw ParseError(lineno, "bad number '" + s + "'");
      }
      row.push_back(v);
    }
    values.push_back(std::move(row));
  }
  if (!header) throw ParseError(0, "empty matrix file");
  LabeledMatrixd::Matrix data(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(cols.size()));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j)
      data(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = values[i][j];
  return {std::move(rows), std::move(cols), std::move(data)};
}

LabeledMatrixd parse_matrix(const std::string& text) {
  std::istringstream is(text);
  return read_matrix(is);
}

}  // namespace dckron
