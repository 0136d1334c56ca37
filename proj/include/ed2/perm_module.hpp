#pragma once

#include <cstddef>
#include <string>
#include <unordered_map>
#include <vector>

#include "ed2/int_matrix.hpp"
#include "ed2/perm_group.hpp"

namespace ed2 {

/// Basis label of a permutation module: a point, an unordered pair {i,j},
/// a singleton mark on a point, or a coset of a component coset space.
/// Pair labels are unordered ({i,j} and {j,i} are the same basis element).
struct Label {
  enum class Kind { Point, Pair, Singleton, Coset };
  Kind kind = Kind::Point;
  int a = 0;
  int b = 0;          // second pair member; unused otherwise
  int component = 0;  // direct-sum component tag (coset labels)

  static Label point(int p) { return {Kind::Point, p, 0, 0}; }
  static Label pair(int i, int j) {
    if (i == j) throw RangeError("pair label: members must differ");
    if (i > j) std::swap(i, j);
    return {Kind::Pair, i, j, 0};
  }
  static Label singleton(int k) { return {Kind::Singleton, k, 0, 0}; }
  static Label coset(int component, int index) { return {Kind::Coset, index, 0, component}; }

  bool operator==(const Label& o) const {
    return kind == o.kind && a == o.a && b == o.b && component == o.component;
  }
  bool operator<(const Label& o) const {
    if (kind != o.kind) return kind < o.kind;
    if (component != o.component) return component < o.component;
    if (a != o.a) return a < o.a;
    return b < o.b;
  }

  std::string to_string() const;  // 1-based: "x3", "f{1,5}", "g2", "c2:4"

  struct Hash {
    std::size_t operator()(const Label& l) const {
      std::size_t h = static_cast<std::size_t>(l.kind);
      h = h * 1000003u + static_cast<std::size_t>(l.a);
      h = h * 1000003u + static_cast<std::size_t>(l.b);
      h = h * 1000003u + static_cast<std::size_t>(l.component);
      return h;
    }
  };
};

/// Free Z-module on a labeled basis with the group permuting the basis.
/// The action is stored per generator as a permutation of basis indices;
/// arbitrary elements act through generator words.
class PermModule {
 public:
  PermModule() = default;

  // Basis = the points the group acts on.
  static PermModule natural(const PermGroup& g);
  // Basis of Point/Pair/Singleton labels; the generator action is induced
  // from the point action and must keep the basis stable.
  static PermModule from_labels(const PermGroup& g, std::vector<Label> basis);
  // Basis = cosets of a coset space, tagged with a component id.
  static PermModule coset_module(const CosetSpace& cs, int component);
  // Concatenation of bases over one common group.
  static PermModule direct_sum(const std::vector<PermModule>& parts);

  const PermGroup& group() const { return group_; }
  std::size_t rank() const { return basis_.size(); }
  const std::vector<Label>& basis() const { return basis_; }
  int index_of(const Label& l) const;
  const std::vector<int>& generator_action(std::size_t gi) const { return gen_action_[gi]; }
  bool has_coset_labels() const { return has_coset_; }

  struct Component {
    int tag;
    std::size_t offset;
    std::size_t length;
  };
  const std::vector<Component>& components() const { return components_; }

  // Basis-index permutation of a group element given directly; valid only
  // for modules without coset labels.
  std::vector<int> index_perm(const Permutation& g) const;
  // Basis-index permutation from a generator word
  // (element = gen[w0] o gen[w1] o ... o gen[wk-1]).
  std::vector<int> index_perm_from_word(const std::vector<std::size_t>& word) const;
  // Word lookup via the group's enumeration, then composition.
  std::vector<int> index_perm_via_group(const Permutation& g) const;

  // Coordinate action: out[perm[i]] = v[i].
  std::vector<Int> act(const std::vector<int>& index_perm, const std::vector<Int>& v) const;

  // Orbits of the basis under the generator action, each listed with its
  // lowest index first; orbit order follows lowest indices.
  std::vector<std::vector<int>> basis_orbits() const;

  // Human-readable rendering of a coordinate vector, e.g. "2 f{1,5} + g1 + g5".
  std::string render_vector(const std::vector<Int>& v) const;

 private:
  PermGroup group_;
  std::vector<Label> basis_;
  std::unordered_map<Label, int, Label::Hash> index_;
  std::vector<std::vector<int>> gen_action_;
  std::vector<Component> components_;
  bool has_coset_ = false;

  void build_index();
};

}  // namespace ed2
