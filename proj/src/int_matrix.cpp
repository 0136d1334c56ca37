#include "ed2/int_matrix.hpp"

#include <sstream>

namespace ed2 {

Int floordiv(const Int& a, const Int& b) {
  Int q = a / b;  // truncated
  if (q * b != a && ((a < 0) != (b < 0))) --q;
  return q;
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(std::initializer_list<std::initializer_list<long long>> rows) {
  std::size_t r = rows.size();
  std::size_t c = r == 0 ? 0 : rows.begin()->size();
  IntMatrix m(r, c);
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != c) throw RangeError("from_rows: ragged row lengths");
    std::size_t j = 0;
    for (long long v : row) m(i, j++) = v;
    ++i;
  }
  return m;
}

IntMatrix IntMatrix::column(const std::vector<Int>& v) {
  IntMatrix m(v.size(), 1);
  for (std::size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i];
  return m;
}

std::vector<Int> IntMatrix::col(std::size_t j) const {
  std::vector<Int> v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

void IntMatrix::set_col(std::size_t j, const std::vector<Int>& v) {
  if (v.size() != rows_) throw RangeError("set_col: length mismatch");
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
}

bool IntMatrix::is_zero() const {
  for (const Int& x : data_)
    if (x != 0) return false;
  return true;
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void IntMatrix::negate_col(std::size_t j) {
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = -(*this)(i, j);
}

void IntMatrix::add_col(std::size_t dst, std::size_t src, const Int& factor) {
  if (factor == 0) return;
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, dst) += factor * (*this)(i, src);
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::negate_row(std::size_t i) {
  for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = -(*this)(i, j);
}

void IntMatrix::add_row(std::size_t dst, std::size_t src, const Int& factor) {
  if (factor == 0) return;
  for (std::size_t j = 0; j < cols_; ++j) (*this)(dst, j) += factor * (*this)(src, j);
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw RangeError("matrix product: inner dimension mismatch");
  IntMatrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Int& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) += a * rhs(k, j);
    }
  return out;
}

std::vector<Int> IntMatrix::apply(const std::vector<Int>& v) const {
  if (v.size() != cols_) throw RangeError("apply: vector length mismatch");
  std::vector<Int> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if ((*this)(i, j) != 0 && v[j] != 0) out[i] += (*this)(i, j) * v[j];
  return out;
}

IntMatrix IntMatrix::concat_cols(const IntMatrix& right) const {
  if (cols_ == 0 && rows_ == 0) return right;
  if (right.cols_ == 0 && right.rows_ == 0) return *this;
  if (rows_ != right.rows_) throw RangeError("concat_cols: row count mismatch");
  IntMatrix out(rows_, cols_ + right.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out(i, j) = (*this)(i, j);
    for (std::size_t j = 0; j < right.cols_; ++j) out(i, cols_ + j) = right(i, j);
  }
  return out;
}

IntMatrix IntMatrix::concat_rows(const IntMatrix& below) const {
  if (cols_ == 0 && rows_ == 0) return below;
  if (below.cols_ == 0 && below.rows_ == 0) return *this;
  if (cols_ != below.cols_) throw RangeError("concat_rows: column count mismatch");
  IntMatrix out(rows_ + below.rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(i, j) = (*this)(i, j);
  for (std::size_t i = 0; i < below.rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(rows_ + i, j) = below(i, j);
  return out;
}

IntMatrix IntMatrix::top_rows(std::size_t n) const {
  if (n > rows_) throw RangeError("top_rows: out of range");
  IntMatrix out(n, cols_);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(i, j) = (*this)(i, j);
  return out;
}

IntMatrix IntMatrix::left_cols(std::size_t n) const {
  if (n > cols_) throw RangeError("left_cols: out of range");
  IntMatrix out(rows_, n);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = (*this)(i, j);
  return out;
}

Int IntMatrix::det() const {
  if (rows_ != cols_) throw RangeError("det: matrix not square");
  std::size_t n = rows_;
  if (n == 0) return 1;
  IntMatrix a(*this);
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
    prev = a(k, k);
  }
  return sign > 0 ? a(n - 1, n - 1) : -a(n - 1, n - 1);
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << rows_ << "x" << cols_ << " [";
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i == 0 ? "[" : " [");
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) os << " ";
      os << (*this)(i, j);
    }
    os << "]";
  }
  os << "]";
  return os.str();
}

}  // namespace ed2
