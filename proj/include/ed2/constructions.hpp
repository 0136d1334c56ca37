#pragma once

#include <string>
#include <vector>

#include "ed2/equivariant.hpp"

namespace ed2 {

enum class ConstructionId { Lemma32i, Lemma32ii, Lemma33, Section5, ExampleR3 };

std::string construction_cli_name(ConstructionId id);

/// One of the shipped torus-normalizer constructions: the group, the
/// equivariant map, the closed-form bound it must reproduce, and the extra
/// identity checks evaluated while building.
struct Construction {
  ConstructionId id;
  std::string cli_name;
  long long parameter = 0;  // n or r
  PermGroup group;
  EquivariantMap map;
  long long expected_bound = 0;
  std::string citation;
  Strategy default_strategy = Strategy::Auto;
  std::vector<NamedCheck> checks;
  std::string range_note;  // set when built outside the documented range
  std::vector<PermGroup> component_subgroups;  // coset-module stabilizers, in component order

  bool checks_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

struct BuildOptions {
  bool range_guard = true;
  bool corrupt_first_image = false;  // negative control: tau1*x - x
  bool drop_singletons = false;      // negative control: pairs-only basis
  int base_point = 0;                // section5 base point
};

// Pairs {i,j} plus singletons k over S_n, mapped identically into the
// even-coordinate-sum sublattice of Z^n. Bound (n^2-n)/2. Range n >= 3.
Construction lemma32i(int n, const BuildOptions& opt = {});

// Pairs only over S_n, mapped into the even-sum sublattice modulo the
// all-ones vector. Bound (n^2-3n+2)/2. Range n >= 6, n even (the all-ones
// divisor lies in the even-sum lattice only for even n).
Construction lemma32ii(int n, const BuildOptions& opt = {});

// Cross pairs (one member per half) plus singletons over the Sylow
// 2-subgroup of S_{2^r}. Bound 2^(2r-2). Range r >= 2.
Construction lemma33(int r, const BuildOptions& opt = {});

// Direct sum of the four coset modules of H_r mapped onto the augmentation
// kernel J_r by tau1*x+x, tau2*x+x, tau1*tau2*x+x, tau_r*x+x.
// Bound 2^(r-1) + 2^(2r-4). Range r >= 3.
Construction section5(int r, const BuildOptions& opt = {});

// The r = 3 special case with components <tau1>, <tau2>, <tau3>, <tau1*tau2>;
// same verdict as section5(3). Bound 8.
Construction example_r3(const BuildOptions& opt = {});

Construction build_construction(ConstructionId id, long long parameter,
                                const BuildOptions& opt = {});

long long expected_bound_for(ConstructionId id, long long parameter);

/// Machine checks of the four recursion claims behind the section5 rank
/// arithmetic, for the block group H_r with base point x = 0:
///   (i)   |stab(x)| factors as |stab_{r-1}(x)| * |P_{2^(r-3)}| with a
///         commuting half-block-supported internal direct decomposition,
///   (ii)  tau1, tau2, tau_r and stab(x) generate H_r,
///   (iii) the Z[H_r]-span of {2x, tau1*x-x, tau2*x-x, tau_r*x-x} equals the
///         augmentation kernel J_r (exact HNF equality),
///   (iv)  stab(tau_r x) meets stab(x) in a group of order |stab_{r-1}(x)|^2
///         with the analogous commuting decomposition.
struct UsssReport {
  int r = 0;
  bool stabilizer_factorization = false;  // (i)
  bool generation = false;                // (ii)
  bool module_generation = false;         // (iii)
  bool intersection = false;              // (iv)
  unsigned long long group_order = 0, stab_order = 0, stab_prev_order = 0, sylow_prev_order = 0,
                     closure_order = 0, intersection_order = 0;
  std::string notes;
  bool pass() const {
    return stabilizer_factorization && generation && module_generation && intersection;
  }
};

UsssReport verify_usss(int r);

// Chosen strategy for a construction when the caller asked for "auto".
Strategy resolve_strategy(const Construction& c, Strategy requested);

}  // namespace ed2
