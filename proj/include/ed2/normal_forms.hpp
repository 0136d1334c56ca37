#pragma once

#include <optional>
#include <vector>

#include "ed2/int_matrix.hpp"

namespace ed2 {

/// Column-style Hermite normal form: input * U = H with U unimodular.
///
/// H is the canonical lower staircase form: every nonzero column has a
/// positive pivot (its topmost nonzero entry), pivot rows strictly increase
/// left to right, entries to the right of a pivot in its row are zero, and
/// entries to the left of a pivot in its row are reduced into [0, pivot).
/// Zero columns are collected at the right end. Two matrices have equal H
/// iff their columns span the same sublattice.
struct HnfResult {
  IntMatrix H;
  IntMatrix U;
};

/// Smith normal form: U * input * V = S with U, V unimodular and S diagonal,
/// diagonal entries nonnegative with d_i | d_{i+1}. `factors` lists the
/// nonzero invariant factors (the first rank entries of the diagonal).
struct SnfResult {
  IntMatrix S;
  IntMatrix U;
  IntMatrix V;
  std::vector<Int> factors;
};

HnfResult hnf(const IntMatrix& m);
SnfResult snf(const IntMatrix& m);

std::size_t rank(const IntMatrix& m);

/// Canonical HNF basis of {v in Z^cols : m*v = 0}. Column count equals
/// cols(m) - rank(m).
IntMatrix kernel_basis(const IntMatrix& m);

/// Forward-substitution solver against a fixed lattice basis. Construct once,
/// solve many times. Coefficients refer to the original columns of the basis
/// matrix handed in.
class LatticeSolver {
 public:
  explicit LatticeSolver(const IntMatrix& basis);

  // Integer coefficients c with basis * c = v, or nullopt when v lies
  // outside the spanned lattice. Throws RangeError on length mismatch.
  std::optional<std::vector<Int>> solve(const std::vector<Int>& v) const;
  bool contains(const std::vector<Int>& v) const { return solve(v).has_value(); }

  std::size_t rank() const { return pivot_row_.size(); }

 private:
  IntMatrix h_;               // HNF of the basis, zero columns dropped
  IntMatrix u_;               // basis * u_ = [h_ | 0]
  std::vector<std::size_t> pivot_row_;
  std::size_t input_cols_ = 0;
};

/// Integer coefficients c with b * c = v, or nullopt when v is not in the
/// column span of b over Z.
std::optional<std::vector<Int>> solve_in_lattice(const IntMatrix& b, const std::vector<Int>& v);

/// Index of the sublattice spanned by lsub inside the lattice spanned by
/// lsup; nullopt means infinite (the ranks differ). Throws MembershipError
/// naming the first column of lsub outside lsup's span.
std::optional<Int> lattice_index(const IntMatrix& lsup, const IntMatrix& lsub);

}  // namespace ed2
