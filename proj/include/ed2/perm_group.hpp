#pragma once

#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ed2/int_matrix.hpp"
#include "ed2/permutation.hpp"

namespace ed2 {

// Hard ceiling for exhaustive element enumeration. Operations that need the
// element list fail loudly past this, they never guess.
inline constexpr std::size_t kEnumerationLimit = std::size_t(1) << 20;

// Construction tag a witness family can key on. A Generic group can still
// qualify for the 2-group family when its enumerated order is a power of 2.
enum class GroupKind { Generic, Symmetric, TwoGroup };

/// Finitely generated permutation group with named generators and a lazily
/// filled exhaustive element cache. Immutable after construction; the cache
/// fills exactly once and all queries afterwards are read-only.
class PermGroup {
 public:
  PermGroup() = default;

  int degree() const;
  const std::string& name() const;
  GroupKind kind() const;
  bool valid() const { return impl_ != nullptr; }

  std::size_t generator_count() const;
  const Permutation& generator(std::size_t i) const;
  const std::string& generator_name(std::size_t i) const;
  std::optional<std::size_t> find_generator(const std::string& name) const;
  const Permutation& named_generator(const std::string& name) const;

  // Order known in closed form at construction time (no enumeration).
  std::optional<Int> known_order() const;

  // Breadth-first closure from the identity in generator order; element 0 is
  // the identity and the list order is deterministic. Throws TooLargeError
  // beyond kEnumerationLimit.
  const std::vector<Permutation>& elements() const;
  std::size_t order() const { return elements().size(); }
  bool contains(const Permutation& p) const;
  std::optional<std::size_t> element_index(const Permutation& p) const;

  // Generator indices w with element = gen[w0] o gen[w1] o ... o gen[wk-1].
  std::vector<std::size_t> word_of(std::size_t element_index) const;

  // True when the order is known (or discoverable) to be within the
  // enumeration limit.
  bool enumerable() const;

  // Set by product(): the factors commute elementwise and intersect trivially.
  bool is_internal_direct_product() const;

  bool same_group(const PermGroup& o) const { return impl_ == o.impl_; }

  friend PermGroup make_group(int degree, std::vector<std::pair<std::string, Permutation>> gens,
                              std::string name, GroupKind kind, std::optional<Int> known_order,
                              bool idp_flag);

 private:
  struct Impl;
  std::shared_ptr<Impl> impl_;
};

PermGroup trivial_group(int degree);

// Symmetric group on n points, generated by the transposition (1 2) and the
// n-cycle.
PermGroup sym(int n);

// Sylow 2-subgroup of S_n for n = 2^k, built recursively from two embedded
// copies of the previous stage plus the half swap (labeled "tau_top").
// Order 2^(2^k - 1).
PermGroup sylow2_sym(long long n);

// The degree-2^r group generated by the simultaneous block swaps tau1
// (B1<->B2, B3<->B4), tau2 (B1 u B2 <-> B3 u B4) and a diagonal copy of
// sylow2_sym(2^(r-2)) acting identically on the four consecutive blocks of
// size 2^(r-2). The diagonal top swap is labeled "tau_r". Requires r >= 3.
PermGroup h_group(int r);

// Same block structure with a diagonal full symmetric group instead of its
// Sylow 2-subgroup. Requires r >= 3.
PermGroup g_group(int r);

// Degenerate stages (r = 2, four singleton blocks) are meaningful for the
// recursion checks even though the documented range starts at 3.
PermGroup h_group_unchecked(int r);

PermGroup generated_by(int degree, std::vector<std::pair<std::string, Permutation>> gens,
                       std::string name = "");

// Subgroup of elements fixing the point (0-based). Requires enumerability.
PermGroup stabilizer(const PermGroup& g, int point);

PermGroup center(const PermGroup& g);
PermGroup conjugate(const PermGroup& k, const Permutation& g);  // g K g^{-1}
PermGroup intersect(const PermGroup& k1, const PermGroup& k2);

// Product of two elementwise-commuting subgroups of a common symmetric
// group. Errors when the factors do not commute; flags the result as an
// internal direct product when additionally the intersection is trivial.
PermGroup product(const PermGroup& k1, const PermGroup& k2);

/// Left cosets g*K of K in G with representatives discovered breadth-first
/// from the identity in generator order, plus the induced action of each
/// G-generator on representative indices.
struct CosetSpace {
  PermGroup group;
  PermGroup subgroup;
  std::vector<Permutation> reps;
  std::vector<std::vector<int>> generator_action;  // [generator][rep index]

  std::size_t count() const { return reps.size(); }
  // Index of the coset g * (reps[i] * K); g must lie in the group.
  int act(const Permutation& g, int i) const;

  // Canonical key of the coset t*K (index of its minimal element in the
  // group's enumeration order).
  std::size_t coset_key(const Permutation& t) const;
  int coset_id(const Permutation& t) const;

 private:
  friend CosetSpace cosets(const PermGroup& g, const PermGroup& k);
  std::unordered_map<std::size_t, int> key_to_id_;
};

CosetSpace cosets(const PermGroup& g, const PermGroup& k);

}  // namespace ed2
