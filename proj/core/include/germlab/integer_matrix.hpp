#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "germlab/polynomial.hpp"

namespace germlab {

// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  bool is_zero() const;

  IntMatrix operator*(const IntMatrix& other) const;
  // Columns of `other` appended to the right.
  IntMatrix concat_columns(const IntMatrix& other) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

struct SmithForm {
  std::size_t rank = 0;
  // Nonzero diagonal entries, positive, each dividing the next.
  std::vector<Integer> invariant_factors;
};

SmithForm smith_normal_form(IntMatrix m);
std::size_t rank_rational(IntMatrix m);
std::size_t rank_mod_p(const IntMatrix& m, std::uint32_t p);

bool is_prime(std::uint64_t n);

}  // namespace germlab
