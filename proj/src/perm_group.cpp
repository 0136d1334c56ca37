#include "ed2/perm_group.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

namespace ed2 {

struct PermGroup::Impl {
  int degree = 0;
  std::vector<std::pair<std::string, Permutation>> gens;
  std::string name;
  GroupKind kind = GroupKind::Generic;
  std::optional<Int> known_order;
  bool idp_flag = false;

  mutable std::mutex mu;
  mutable bool enumerated = false;
  mutable bool enum_failed = false;
  mutable std::vector<Permutation> elements;
  mutable std::unordered_map<Permutation, std::size_t, Permutation::Hash> index;
  mutable std::vector<std::pair<std::ptrdiff_t, std::size_t>> parent;  // (parent, generator)

  void ensure_enumerated() const {
    std::lock_guard<std::mutex> lock(mu);
    if (enumerated) return;
    if (enum_failed) throw TooLargeError("group " + name + " is too large to enumerate");
    elements.clear();
    index.clear();
    parent.clear();
    Permutation id = Permutation::identity(degree);
    elements.push_back(id);
    index.emplace(id, 0);
    parent.emplace_back(-1, 0);
    for (std::size_t i = 0; i < elements.size(); ++i) {
      for (std::size_t gi = 0; gi < gens.size(); ++gi) {
        Permutation next = gens[gi].second.compose(elements[i]);
        if (index.count(next)) continue;
        if (elements.size() >= kEnumerationLimit) {
          elements.clear();
          index.clear();
          parent.clear();
          enum_failed = true;
          throw TooLargeError("group " + name + " exceeds the enumeration limit of 2^20 elements");
        }
        index.emplace(next, elements.size());
        elements.push_back(std::move(next));
        parent.emplace_back(static_cast<std::ptrdiff_t>(i), gi);
      }
    }
    enumerated = true;
  }
};

PermGroup make_group(int degree, std::vector<std::pair<std::string, Permutation>> gens,
                     std::string name, GroupKind kind, std::optional<Int> known_order,
                     bool idp_flag) {
  for (const auto& [nm, g] : gens)
    if (g.degree() != degree) throw RangeError("generator " + nm + ": degree mismatch");
  PermGroup pg;
  auto impl = std::make_shared<PermGroup::Impl>();
  impl->degree = degree;
  impl->gens = std::move(gens);
  impl->name = std::move(name);
  impl->kind = kind;
  impl->known_order = std::move(known_order);
  impl->idp_flag = idp_flag;
  pg.impl_ = std::move(impl);
  return pg;
}

int PermGroup::degree() const { return impl_->degree; }
const std::string& PermGroup::name() const { return impl_->name; }
GroupKind PermGroup::kind() const { return impl_->kind; }
std::size_t PermGroup::generator_count() const { return impl_->gens.size(); }
const Permutation& PermGroup::generator(std::size_t i) const { return impl_->gens[i].second; }
const std::string& PermGroup::generator_name(std::size_t i) const { return impl_->gens[i].first; }

std::optional<std::size_t> PermGroup::find_generator(const std::string& name) const {
  for (std::size_t i = 0; i < impl_->gens.size(); ++i)
    if (impl_->gens[i].first == name) return i;
  return std::nullopt;
}

const Permutation& PermGroup::named_generator(const std::string& name) const {
  auto i = find_generator(name);
  if (!i) throw RangeError("group " + impl_->name + " has no generator named " + name);
  return impl_->gens[*i].second;
}

std::optional<Int> PermGroup::known_order() const { return impl_->known_order; }

const std::vector<Permutation>& PermGroup::elements() const {
  impl_->ensure_enumerated();
  return impl_->elements;
}

bool PermGroup::contains(const Permutation& p) const {
  if (p.degree() != impl_->degree) return false;
  impl_->ensure_enumerated();
  return impl_->index.count(p) > 0;
}

std::optional<std::size_t> PermGroup::element_index(const Permutation& p) const {
  impl_->ensure_enumerated();
  auto it = impl_->index.find(p);
  if (it == impl_->index.end()) return std::nullopt;
  return it->second;
}

std::vector<std::size_t> PermGroup::word_of(std::size_t element_index) const {
  impl_->ensure_enumerated();
  std::vector<std::size_t> word;
  std::ptrdiff_t i = static_cast<std::ptrdiff_t>(element_index);
  while (i > 0) {
    word.push_back(impl_->parent[i].second);
    i = impl_->parent[i].first;
  }
  return word;  // element = gen[word[0]] o gen[word[1]] o ...
}

bool PermGroup::enumerable() const {
  if (impl_->known_order) return *impl_->known_order <= Int(kEnumerationLimit);
  try {
    impl_->ensure_enumerated();
    return true;
  } catch (const TooLargeError&) {
    return false;
  }
}

bool PermGroup::is_internal_direct_product() const { return impl_->idp_flag; }

PermGroup trivial_group(int degree) {
  return make_group(degree, {}, "1", GroupKind::Generic, Int(1), false);
}

PermGroup sym(int n) {
  if (n < 1) throw RangeError("sym: n must be >= 1");
  std::vector<std::pair<std::string, Permutation>> gens;
  if (n >= 2) gens.emplace_back("t", Permutation::transposition(n, 0, 1));
  if (n >= 3) {
    std::vector<int> pts(n);
    for (int i = 0; i < n; ++i) pts[i] = i;
    gens.emplace_back("c", Permutation::cycle(n, pts));
  }
  Int order = 1;
  for (int i = 2; i <= n; ++i) order *= i;
  return make_group(n, std::move(gens), "S" + std::to_string(n), GroupKind::Symmetric, order,
                    false);
}

namespace {

Permutation embed(const Permutation& p, int total, int offset) {
  Permutation out = Permutation::identity(total);
  std::vector<int> im = out.images();
  for (int x = 0; x < p.degree(); ++x) im[offset + x] = offset + p(x);
  return Permutation(std::move(im));
}

std::vector<std::pair<std::string, Permutation>> sylow2_generators(int k) {
  int n = 1 << k;
  if (k == 1) return {{"tau_top", Permutation::transposition(2, 0, 1)}};
  auto sub = sylow2_generators(k - 1);
  std::vector<std::pair<std::string, Permutation>> gens;
  for (const auto& [nm, g] : sub) gens.emplace_back("a." + nm, embed(g, n, 0));
  for (const auto& [nm, g] : sub) gens.emplace_back("b." + nm, embed(g, n, n / 2));
  std::vector<int> swap_im(n);
  for (int x = 0; x < n; ++x) swap_im[x] = (x + n / 2) % n;
  gens.emplace_back("tau_top", Permutation(std::move(swap_im)));
  return gens;
}

}  // namespace

PermGroup sylow2_sym(long long n) {
  if (n < 2 || (n & (n - 1)) != 0) throw RangeError("sylow2_sym: argument must be a power of 2, >= 2");
  int k = 0;
  while ((1ll << k) < n) ++k;
  Int order = Int(1) << (n - 1);  // 2^(2^k - 1)
  return make_group(static_cast<int>(n), sylow2_generators(k), "P" + std::to_string(n),
                    GroupKind::TwoGroup, order, false);
}

namespace {

PermGroup block_group(int r, bool sylow_diag) {
  int n = 1 << r;
  int q = n / 4;  // block size
  auto block_perm = [&](int mask) {
    std::vector<int> im(n);
    for (int x = 0; x < n; ++x) {
      int b = x / q, o = x % q;
      im[x] = (b ^ mask) * q + o;
    }
    return Permutation(std::move(im));
  };
  std::vector<std::pair<std::string, Permutation>> gens;
  gens.emplace_back("tau1", block_perm(1));
  gens.emplace_back("tau2", block_perm(2));
  Int diag_order = 1;
  if (q >= 2) {
    std::vector<std::pair<std::string, Permutation>> inner;
    if (sylow_diag) {
      int k = 0;
      while ((1 << k) < q) ++k;
      inner = sylow2_generators(k);
      diag_order = Int(1) << (q - 1);
    } else {
      PermGroup s = sym(q);
      for (std::size_t i = 0; i < s.generator_count(); ++i)
        inner.emplace_back(s.generator_name(i), s.generator(i));
      for (int i = 2; i <= q; ++i) diag_order *= i;
    }
    for (const auto& [nm, g] : inner) {
      std::vector<int> im(n);
      for (int x = 0; x < n; ++x) {
        int b = x / q, o = x % q;
        im[x] = b * q + g(o);
      }
      std::string name = (sylow_diag && nm == "tau_top") ? "tau_r" : "d." + nm;
      gens.emplace_back(name, Permutation(std::move(im)));
    }
  }
  std::string label = (sylow_diag ? "H" : "G") + std::to_string(r);
  GroupKind kind = sylow_diag ? GroupKind::TwoGroup : GroupKind::Generic;
  return make_group(n, std::move(gens), label, kind, Int(4) * diag_order, false);
}

}  // namespace

// Callers below r = 3 are internal (degenerate stages of the recursion
// checks); the public builders guard the documented range.
PermGroup h_group_unchecked(int r) {
  if (r < 2) throw RangeError("h_group: r must be >= 2");
  return block_group(r, true);
}

PermGroup h_group(int r) {
  if (r < 3) throw RangeError("h_group: r must be >= 3");
  return block_group(r, true);
}

PermGroup g_group(int r) {
  if (r < 3) throw RangeError("g_group: r must be >= 3");
  return block_group(r, false);
}

PermGroup generated_by(int degree, std::vector<std::pair<std::string, Permutation>> gens,
                       std::string name) {
  if (name.empty()) name = "<gens>";
  return make_group(degree, std::move(gens), std::move(name), GroupKind::Generic, std::nullopt,
                    false);
}

namespace {

// Small deterministic generating set for an explicit element list: scan in
// order and keep every element not yet in the running closure. For 2-groups
// this yields at most log2(order) generators.
std::vector<Permutation> greedy_generators(int degree, const std::vector<Permutation>& elems) {
  std::vector<Permutation> gens;
  std::unordered_map<Permutation, char, Permutation::Hash> closure;
  auto reclose = [&]() {
    std::vector<Permutation> work;
    work.push_back(Permutation::identity(degree));
    closure.clear();
    closure.emplace(work[0], 1);
    for (std::size_t i = 0; i < work.size(); ++i)
      for (const Permutation& g : gens) {
        Permutation next = g.compose(work[i]);
        if (closure.emplace(next, 1).second) work.push_back(std::move(next));
      }
  };
  reclose();
  for (const Permutation& e : elems) {
    if (closure.count(e)) continue;
    gens.push_back(e);
    reclose();
  }
  return gens;
}

PermGroup subgroup_from_elements(int degree, const std::vector<Permutation>& elems,
                                 std::string name, GroupKind kind) {
  std::vector<std::pair<std::string, Permutation>> gens;
  std::size_t i = 0;
  for (Permutation& g : greedy_generators(degree, elems))
    gens.emplace_back("s" + std::to_string(++i), std::move(g));
  return make_group(degree, std::move(gens), std::move(name), kind,
                    Int(static_cast<unsigned long long>(elems.size())), false);
}

GroupKind inherit_two_group(const PermGroup& g) {
  return g.kind() == GroupKind::TwoGroup ? GroupKind::TwoGroup : GroupKind::Generic;
}

}  // namespace

PermGroup stabilizer(const PermGroup& g, int point) {
  if (point < 0 || point >= g.degree()) throw RangeError("stabilizer: point out of range");
  std::vector<Permutation> fixed;
  for (const Permutation& e : g.elements())
    if (e(point) == point) fixed.push_back(e);
  return subgroup_from_elements(g.degree(), fixed,
                                g.name() + ".stab" + std::to_string(point + 1),
                                inherit_two_group(g));
}

PermGroup center(const PermGroup& g) {
  std::vector<Permutation> central;
  for (const Permutation& e : g.elements()) {
    bool ok = true;
    for (std::size_t i = 0; i < g.generator_count() && ok; ++i)
      ok = e.commutes_with(g.generator(i));
    if (ok) central.push_back(e);
  }
  return subgroup_from_elements(g.degree(), central, "Z(" + g.name() + ")",
                                inherit_two_group(g));
}

PermGroup conjugate(const PermGroup& k, const Permutation& g) {
  if (g.degree() != k.degree()) throw RangeError("conjugate: degree mismatch");
  Permutation ginv = g.inverse();
  std::vector<std::pair<std::string, Permutation>> gens;
  for (std::size_t i = 0; i < k.generator_count(); ++i)
    gens.emplace_back(k.generator_name(i), g.compose(k.generator(i)).compose(ginv));
  return make_group(k.degree(), std::move(gens), k.name() + "^g", k.kind(), k.known_order(),
                    false);
}

PermGroup intersect(const PermGroup& k1, const PermGroup& k2) {
  if (k1.degree() != k2.degree()) throw RangeError("intersect: degree mismatch");
  const auto& small = k1.elements().size() <= k2.elements().size() ? k1 : k2;
  const auto& large = k1.elements().size() <= k2.elements().size() ? k2 : k1;
  std::vector<Permutation> common;
  for (const Permutation& e : small.elements())
    if (large.contains(e)) common.push_back(e);
  GroupKind kind = (k1.kind() == GroupKind::TwoGroup || k2.kind() == GroupKind::TwoGroup)
                       ? GroupKind::TwoGroup
                       : GroupKind::Generic;
  return subgroup_from_elements(k1.degree(), common, k1.name() + "&" + k2.name(), kind);
}

PermGroup product(const PermGroup& k1, const PermGroup& k2) {
  if (k1.degree() != k2.degree()) throw RangeError("product: degree mismatch");
  for (std::size_t i = 0; i < k1.generator_count(); ++i)
    for (std::size_t j = 0; j < k2.generator_count(); ++j)
      if (!k1.generator(i).commutes_with(k2.generator(j)))
        throw RangeError("product: factors do not commute (" + k1.generator_name(i) + " vs " +
                         k2.generator_name(j) + ")");
  bool trivial_meet = true;
  for (const Permutation& e : k1.elements())
    if (!e.is_identity() && k2.contains(e)) {
      trivial_meet = false;
      break;
    }
  std::vector<std::pair<std::string, Permutation>> gens;
  for (std::size_t i = 0; i < k1.generator_count(); ++i)
    gens.emplace_back("l." + k1.generator_name(i), k1.generator(i));
  for (std::size_t i = 0; i < k2.generator_count(); ++i)
    gens.emplace_back("r." + k2.generator_name(i), k2.generator(i));
  std::optional<Int> order;
  if (trivial_meet && k1.known_order() && k2.known_order())
    order = *k1.known_order() * *k2.known_order();
  return make_group(k1.degree(), std::move(gens), k1.name() + "x" + k2.name(),
                    GroupKind::Generic, order, trivial_meet);
}

std::size_t CosetSpace::coset_key(const Permutation& t) const {
  std::size_t best = std::size_t(-1);
  for (const Permutation& k : subgroup.elements()) {
    auto idx = group.element_index(t.compose(k));
    if (!idx) throw RangeError("coset_key: element outside the group");
    best = std::min(best, *idx);
  }
  return best;
}

int CosetSpace::coset_id(const Permutation& t) const {
  auto it = key_to_id_.find(coset_key(t));
  if (it == key_to_id_.end()) throw Error("coset_id: unknown coset (internal)");
  return it->second;
}

int CosetSpace::act(const Permutation& g, int i) const {
  return coset_id(g.compose(reps[i]));
}

CosetSpace cosets(const PermGroup& g, const PermGroup& k) {
  if (g.degree() != k.degree()) throw RangeError("cosets: degree mismatch");
  for (std::size_t i = 0; i < k.generator_count(); ++i)
    if (!g.contains(k.generator(i)))
      throw RangeError("cosets: generator " + k.generator_name(i) + " = " +
                       k.generator(i).cycle_string() + " of " + k.name() + " is not in " +
                       g.name());
  CosetSpace cs;
  cs.group = g;
  cs.subgroup = k;
  cs.generator_action.assign(g.generator_count(), {});
  Permutation id = Permutation::identity(g.degree());
  cs.reps.push_back(id);
  cs.key_to_id_.emplace(cs.coset_key(id), 0);
  for (std::size_t i = 0; i < cs.reps.size(); ++i) {
    for (std::size_t gi = 0; gi < g.generator_count(); ++gi) {
      Permutation t = g.generator(gi).compose(cs.reps[i]);
      std::size_t key = cs.coset_key(t);
      auto it = cs.key_to_id_.find(key);
      int id_next;
      if (it == cs.key_to_id_.end()) {
        id_next = static_cast<int>(cs.reps.size());
        cs.reps.push_back(std::move(t));
        cs.key_to_id_.emplace(key, id_next);
      } else {
        id_next = it->second;
      }
      cs.generator_action[gi].push_back(id_next);  // entry for rep i
    }
  }
  if (cs.reps.size() * k.order() != g.order())
    throw Error("cosets: representative count times subgroup order != group order (internal)");
  return cs;
}

}  // namespace ed2
