#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "ed2/errors.hpp"

namespace ed2 {

// Exact arbitrary-precision integer. Normal-form intermediates overflow
// 64 bits even for small inputs, so all matrix entries use this type.
using Int = boost::multiprecision::cpp_int;

// floor(a/b) for b != 0; the remainder a - b*floordiv(a,b) lies in [0, |b|).
Int floordiv(const Int& a, const Int& b);

/// Dense matrix of exact integers, row-major. Empty shapes (0 rows or
/// 0 columns) are legal everywhere and behave as rank-0 objects.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(std::initializer_list<std::initializer_list<long long>> rows);
  static IntMatrix column(const std::vector<Int>& v);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Int& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool operator==(const IntMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }
  bool operator!=(const IntMatrix& o) const { return !(*this == o); }

  std::vector<Int> col(std::size_t j) const;
  void set_col(std::size_t j, const std::vector<Int>& v);

  bool is_zero() const;

  // Elementary column operations (unimodular).
  void swap_cols(std::size_t a, std::size_t b);
  void negate_col(std::size_t j);
  void add_col(std::size_t dst, std::size_t src, const Int& factor);  // col dst += factor * col src

  // Elementary row operations (unimodular).
  void swap_rows(std::size_t a, std::size_t b);
  void negate_row(std::size_t i);
  void add_row(std::size_t dst, std::size_t src, const Int& factor);

  IntMatrix transpose() const;
  IntMatrix operator*(const IntMatrix& rhs) const;
  std::vector<Int> apply(const std::vector<Int>& v) const;  // matrix * vector

  // New matrix with the columns of `right` appended.
  IntMatrix concat_cols(const IntMatrix& right) const;
  // New matrix with the rows of `below` appended.
  IntMatrix concat_rows(const IntMatrix& below) const;
  // Copy of rows [0, n) only.
  IntMatrix top_rows(std::size_t n) const;
  // Copy of columns [0, n) only.
  IntMatrix left_cols(std::size_t n) const;

  // Exact determinant via fraction-free (Bareiss) elimination.
  Int det() const;

  std::string to_string() const;  // diagnostic rendering

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> data_;
};

}  // namespace ed2
