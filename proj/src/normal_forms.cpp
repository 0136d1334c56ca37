#include "ed2/normal_forms.hpp"

#include <cstddef>
#include <limits>
#include <sstream>

namespace ed2 {

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

Int abs_int(const Int& x) { return x < 0 ? -x : x; }

}  // namespace

HnfResult hnf(const IntMatrix& m) {
  IntMatrix w = m;
  IntMatrix u = IntMatrix::identity(m.cols());
  std::size_t c = 0;
  for (std::size_t i = 0; i < m.rows() && c < m.cols(); ++i) {
    // Sweep row i to a single nonzero entry at column c.
    for (;;) {
      std::size_t best = kNone;
      for (std::size_t j = c; j < m.cols(); ++j) {
        if (w(i, j) == 0) continue;
        if (best == kNone || abs_int(w(i, j)) < abs_int(w(i, best))) best = j;
      }
      if (best == kNone) break;
      if (best != c) {
        w.swap_cols(best, c);
        u.swap_cols(best, c);
      }
      bool clean = true;
      for (std::size_t j = c + 1; j < m.cols(); ++j) {
        if (w(i, j) == 0) continue;
        Int q = w(i, j) / w(i, c);
        if (q != 0) {
          w.add_col(j, c, -q);
          u.add_col(j, c, -q);
        }
        if (w(i, j) != 0) clean = false;
      }
      if (clean) break;
    }
    if (w(i, c) != 0) {
      if (w(i, c) < 0) {
        w.negate_col(c);
        u.negate_col(c);
      }
      // Reduce the pivot row entries left of the pivot into [0, pivot).
      for (std::size_t j = 0; j < c; ++j) {
        Int q = floordiv(w(i, j), w(i, c));
        if (q != 0) {
          w.add_col(j, c, -q);
          u.add_col(j, c, -q);
        }
      }
      ++c;
    }
  }
  return {std::move(w), std::move(u)};
}

SnfResult snf(const IntMatrix& m) {
  IntMatrix s = m;
  IntMatrix u = IntMatrix::identity(m.rows());
  IntMatrix v = IntMatrix::identity(m.cols());
  const std::size_t nmin = std::min(m.rows(), m.cols());
  for (std::size_t k = 0; k < nmin; ++k) {
    bool block_zero = true;
    for (;;) {
      // Smallest-absolute-value nonzero entry of the trailing block,
      // ties broken by lowest row then lowest column.
      std::size_t pr = kNone, pc = kNone;
      for (std::size_t i = k; i < m.rows(); ++i)
        for (std::size_t j = k; j < m.cols(); ++j) {
          if (s(i, j) == 0) continue;
          if (pr == kNone || abs_int(s(i, j)) < abs_int(s(pr, pc))) {
            pr = i;
            pc = j;
          }
        }
      if (pr == kNone) break;  // trailing block is zero
      block_zero = false;
      if (pr != k) {
        s.swap_rows(pr, k);
        u.swap_rows(pr, k);
      }
      if (pc != k) {
        s.swap_cols(pc, k);
        v.swap_cols(pc, k);
      }
      bool dirty = false;
      for (std::size_t i = k + 1; i < m.rows(); ++i) {
        if (s(i, k) == 0) continue;
        Int q = s(i, k) / s(k, k);
        if (q != 0) {
          s.add_row(i, k, -q);
          u.add_row(i, k, -q);
        }
        if (s(i, k) != 0) dirty = true;
      }
      for (std::size_t j = k + 1; j < m.cols(); ++j) {
        if (s(k, j) == 0) continue;
        Int q = s(k, j) / s(k, k);
        if (q != 0) {
          s.add_col(j, k, -q);
          v.add_col(j, k, -q);
        }
        if (s(k, j) != 0) dirty = true;
      }
      if (dirty) continue;
      // Pivot divides its row/column; enforce divisibility of the block.
      std::size_t bi = kNone, bj = kNone;
      for (std::size_t i = k + 1; i < m.rows() && bi == kNone; ++i)
        for (std::size_t j = k + 1; j < m.cols(); ++j)
          if (s(i, j) % s(k, k) != 0) {
            bi = i;
            bj = j;
            break;
          }
      if (bi == kNone) break;
      (void)bj;
      s.add_row(k, bi, 1);
      u.add_row(k, bi, 1);
    }
    if (block_zero) break;
    if (s(k, k) < 0) {
      s.negate_row(k);
      u.negate_row(k);
    }
  }
  SnfResult out{std::move(s), std::move(u), std::move(v), {}};
  for (std::size_t k = 0; k < nmin; ++k)
    if (out.S(k, k) != 0) out.factors.push_back(out.S(k, k));
  return out;
}

std::size_t rank(const IntMatrix& m) {
  IntMatrix h = hnf(m).H;
  std::size_t r = 0;
  for (std::size_t j = 0; j < h.cols(); ++j) {
    bool zero = true;
    for (std::size_t i = 0; i < h.rows(); ++i)
      if (h(i, j) != 0) {
        zero = false;
        break;
      }
    if (!zero) ++r;
  }
  return r;
}

IntMatrix kernel_basis(const IntMatrix& m) {
  HnfResult r = hnf(m);
  // Zero columns of H sit at the right end; the matching columns of U
  // form a basis of the kernel lattice.
  std::size_t rk = 0;
  for (std::size_t j = 0; j < r.H.cols(); ++j) {
    bool zero = true;
    for (std::size_t i = 0; i < r.H.rows(); ++i)
      if (r.H(i, j) != 0) {
        zero = false;
        break;
      }
    if (!zero) ++rk;
  }
  std::size_t nullity = m.cols() - rk;
  IntMatrix k(m.cols(), nullity);
  for (std::size_t j = 0; j < nullity; ++j)
    for (std::size_t i = 0; i < m.cols(); ++i) k(i, j) = r.U(i, rk + j);
  return hnf(k).H;
}

LatticeSolver::LatticeSolver(const IntMatrix& basis) {
  HnfResult r = hnf(basis);
  input_cols_ = basis.cols();
  std::size_t rk = 0;
  for (std::size_t j = 0; j < r.H.cols(); ++j) {
    std::size_t p = kNone;
    for (std::size_t i = 0; i < r.H.rows(); ++i)
      if (r.H(i, j) != 0) {
        p = i;
        break;
      }
    if (p == kNone) break;  // trailing zero columns
    pivot_row_.push_back(p);
    ++rk;
  }
  h_ = r.H.left_cols(rk);
  u_ = std::move(r.U);
}

std::optional<std::vector<Int>> LatticeSolver::solve(const std::vector<Int>& v) const {
  if (v.size() != h_.rows()) throw RangeError("LatticeSolver::solve: dimension mismatch");
  std::vector<Int> residual = v;
  std::vector<Int> cp(h_.cols());
  for (std::size_t j = 0; j < h_.cols(); ++j) {
    std::size_t p = pivot_row_[j];
    if (residual[p] % h_(p, j) != 0) return std::nullopt;
    Int q = residual[p] / h_(p, j);
    cp[j] = q;
    if (q != 0)
      for (std::size_t i = p; i < h_.rows(); ++i) residual[i] -= q * h_(i, j);
  }
  for (const Int& x : residual)
    if (x != 0) return std::nullopt;
  std::vector<Int> c(input_cols_);
  for (std::size_t j = 0; j < h_.cols(); ++j) {
    if (cp[j] == 0) continue;
    for (std::size_t i = 0; i < input_cols_; ++i) c[i] += u_(i, j) * cp[j];
  }
  return c;
}

std::optional<std::vector<Int>> solve_in_lattice(const IntMatrix& b, const std::vector<Int>& v) {
  return LatticeSolver(b).solve(v);
}

std::optional<Int> lattice_index(const IntMatrix& lsup, const IntMatrix& lsub) {
  IntMatrix hsup = hnf(lsup).H;
  std::size_t rk = rank(hsup);
  LatticeSolver solver(hsup.left_cols(rk));
  IntMatrix coords(rk, lsub.cols());
  for (std::size_t j = 0; j < lsub.cols(); ++j) {
    auto c = solver.solve(lsub.col(j));
    if (!c) {
      std::ostringstream os;
      os << "lattice_index: column " << j << " of the sublattice is outside the superlattice";
      throw MembershipError(os.str(), static_cast<int>(j));
    }
    coords.set_col(j, *c);
  }
  SnfResult s = snf(coords);
  if (s.factors.size() < rk) return std::nullopt;  // rank drop: infinite index
  Int idx = 1;
  for (const Int& d : s.factors) idx *= d;
  return idx;
}

}  // namespace ed2
