#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "dckron/errors.hpp"

namespace dckron {

using Labels = std::vector<std::string>;

/// Dense matrix whose rows and columns carry vertex or edge labels.
template <typename Scalar>
class LabeledMatrix {
 public:
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

  LabeledMatrix() = default;

  LabeledMatrix(Labels rows, Labels cols, Matrix data)
      : rows_(std::move(rows)), cols_(std::move(cols)), data_(std::move(data)) {
    if (static_cast<Eigen::Index>(rows_.size()) != data_.rows() ||
        static_cast<Eigen::Index>(cols_.size()) != data_.cols()) {
      throw DimensionError("label count does not match matrix dimensions");
    }
    if (!data_.allFinite()) throw ValidationError("matrix contains non-finite values");
  }

  const Labels& row_labels() const noexcept { return rows_; }
  const Labels& col_labels() const noexcept { return cols_; }
  const Matrix& data() const noexcept { return data_; }

  Eigen::Index rows() const noexcept { return data_.rows(); }
  Eigen::Index cols() const noexcept { return data_.cols(); }
  Scalar operator()(Eigen::Index i, Eigen::Index j) const { return data_(i, j); }

  bool is_square() const noexcept { return data_.rows() == data_.cols(); }

  friend bool operator==(const LabeledMatrix& a, const LabeledMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_.rows() == b.data_.rows() &&
           a.data_.cols() == b.data_.cols() && a.data_ == b.data_;
  }

 private:
  Labels rows_;
  Labels cols_;
  Matrix data_;
};

using LabeledMatrixd = LabeledMatrix<double>;

/// Formats a value with 12 significant digits; negative zero prints as 0.
std::string format_value(double v);

/// Matrix text format: first line holds the column labels, each following
/// line a row label and its values.
void write_matrix(std::ostream& os, const LabeledMatrixd& m);
std::string matrix_to_string(const LabeledMatrixd& m);
LabeledMatrixd read_matrix(std::istream& is);
LabeledMatrixd parse_matrix(const std::string& text);

}  // namespace dckron
