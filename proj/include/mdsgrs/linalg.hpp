#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "mdsgrs/field.hpp"

namespace mdsgrs {

/// Dense row-major matrix over a field.
class GeneratorMatrix {
 public:
  GeneratorMatrix() = default;
  GeneratorMatrix(FieldPtr field, std::size_t rows, std::size_t cols)
      : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols) {}

  const FieldPtr& field_ptr() const { return field_; }
  const Field& field() const { return *field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Elem at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  Elem& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  std::span<const Elem> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

  friend bool operator==(const GeneratorMatrix& a, const GeneratorMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  FieldPtr field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Elem> data_;
};

/// Rank by Gaussian elimination.
std::size_t rank(const GeneratorMatrix& g);

/// Nonsingularity of the square submatrix on the given columns (all rows).
bool columns_nonsingular(const GeneratorMatrix& g, std::span<const std::size_t> columns);

/// G G^T as a rows x rows matrix.
GeneratorMatrix gram(const GeneratorMatrix& g);

}  // namespace mdsgrs
