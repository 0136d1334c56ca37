#include "ed2/perm_module.hpp"

#include <sstream>

namespace ed2 {

std::string Label::to_string() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::Point:
      os << "x" << (a + 1);
      break;
    case Kind::Pair:
      os << "f{" << (a + 1) << "," << (b + 1) << "}";
      break;
    case Kind::Singleton:
      os << "g" << (a + 1);
      break;
    case Kind::Coset:
      os << "c" << (component + 1) << ":" << (a + 1);
      break;
  }
  return os.str();
}

void PermModule::build_index() {
  index_.clear();
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if (!index_.emplace(basis_[i], static_cast<int>(i)).second)
      throw RangeError("PermModule: duplicate basis label " + basis_[i].to_string());
    if (basis_[i].kind == Label::Kind::Coset) has_coset_ = true;
  }
}

int PermModule::index_of(const Label& l) const {
  auto it = index_.find(l);
  return it == index_.end() ? -1 : it->second;
}

namespace {

Label apply_point_action(const Permutation& g, const Label& l) {
  switch (l.kind) {
    case Label::Kind::Point:
      return Label::point(g(l.a));
    case Label::Kind::Pair:
      return Label::pair(g(l.a), g(l.b));
    case Label::Kind::Singleton:
      return Label::singleton(g(l.a));
    case Label::Kind::Coset:
      throw RangeError("coset labels have no point-induced action");
  }
  throw RangeError("unreachable label kind");
}

}  // namespace

PermModule PermModule::natural(const PermGroup& g) {
  std::vector<Label> basis;
  basis.reserve(g.degree());
  for (int p = 0; p < g.degree(); ++p) basis.push_back(Label::point(p));
  return from_labels(g, std::move(basis));
}

PermModule PermModule::from_labels(const PermGroup& g, std::vector<Label> basis) {
  PermModule m;
  m.group_ = g;
  m.basis_ = std::move(basis);
  m.build_index();
  if (m.has_coset_) throw RangeError("from_labels: coset labels need coset_module");
  m.gen_action_.resize(g.generator_count());
  for (std::size_t gi = 0; gi < g.generator_count(); ++gi) {
    auto& act = m.gen_action_[gi];
    act.resize(m.basis_.size());
    for (std::size_t b = 0; b < m.basis_.size(); ++b) {
      Label img = apply_point_action(g.generator(gi), m.basis_[b]);
      int idx = m.index_of(img);
      if (idx < 0)
        throw RangeError("from_labels: generator " + g.generator_name(gi) + " maps " +
                         m.basis_[b].to_string() + " to " + img.to_string() +
                         ", which is outside the basis");
      act[b] = idx;
    }
  }
  m.components_.push_back({0, 0, m.basis_.size()});
  return m;
}

PermModule PermModule::coset_module(const CosetSpace& cs, int component) {
  PermModule m;
  m.group_ = cs.group;
  for (std::size_t i = 0; i < cs.count(); ++i)
    m.basis_.push_back(Label::coset(component, static_cast<int>(i)));
  m.build_index();
  m.gen_action_.resize(cs.generator_action.size());
  for (std::size_t gi = 0; gi < cs.generator_action.size(); ++gi)
    m.gen_action_[gi] = cs.generator_action[gi];
  m.components_.push_back({component, 0, m.basis_.size()});
  return m;
}

PermModule PermModule::direct_sum(const std::vector<PermModule>& parts) {
  if (parts.empty()) throw RangeError("direct_sum: no parts");
  PermModule m;
  m.group_ = parts[0].group_;
  for (const PermModule& p : parts)
    if (!p.group_.same_group(m.group_)) throw RangeError("direct_sum: parts over different groups");
  for (const PermModule& p : parts) {
    std::size_t offset = m.basis_.size();
    for (const auto& comp : p.components_)
      m.components_.push_back({comp.tag, offset + comp.offset, comp.length});
    m.basis_.insert(m.basis_.end(), p.basis_.begin(), p.basis_.end());
  }
  m.build_index();
  m.gen_action_.resize(m.group_.generator_count());
  for (std::size_t gi = 0; gi < m.gen_action_.size(); ++gi) {
    auto& act = m.gen_action_[gi];
    act.reserve(m.basis_.size());
    std::size_t offset = 0;
    for (const PermModule& p : parts) {
      for (std::size_t b = 0; b < p.basis_.size(); ++b)
        act.push_back(static_cast<int>(offset) + p.gen_action_[gi][b]);
      offset += p.basis_.size();
    }
  }
  return m;
}

std::vector<int> PermModule::index_perm(const Permutation& g) const {
  if (has_coset_) throw RangeError("index_perm: module has coset labels; use a generator word");
  std::vector<int> out(basis_.size());
  for (std::size_t b = 0; b < basis_.size(); ++b) {
    int idx = index_of(apply_point_action(g, basis_[b]));
    if (idx < 0)
      throw RangeError("index_perm: element maps " + basis_[b].to_string() + " outside the basis");
    out[b] = idx;
  }
  return out;
}

std::vector<int> PermModule::index_perm_from_word(const std::vector<std::size_t>& word) const {
  std::vector<int> out(basis_.size());
  for (std::size_t b = 0; b < basis_.size(); ++b) out[b] = static_cast<int>(b);
  // element = gen[w0] o gen[w1] o ...; the rightmost factor acts first, so
  // compose from the back of the word.
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    const auto& act = gen_action_[*it];
    for (std::size_t b = 0; b < out.size(); ++b) out[b] = act[out[b]];
  }
  return out;
}

std::vector<int> PermModule::index_perm_via_group(const Permutation& g) const {
  if (!has_coset_) return index_perm(g);
  auto idx = group_.element_index(g);
  if (!idx) throw RangeError("index_perm_via_group: element not in the group");
  return index_perm_from_word(group_.word_of(*idx));
}

std::vector<Int> PermModule::act(const std::vector<int>& index_perm,
                                 const std::vector<Int>& v) const {
  std::vector<Int> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[index_perm[i]] = v[i];
  return out;
}

std::vector<std::vector<int>> PermModule::basis_orbits() const {
  std::vector<std::vector<int>> orbits;
  std::vector<char> seen(basis_.size(), 0);
  for (std::size_t start = 0; start < basis_.size(); ++start) {
    if (seen[start]) continue;
    std::vector<int> orbit{static_cast<int>(start)};
    seen[start] = 1;
    for (std::size_t i = 0; i < orbit.size(); ++i)
      for (const auto& act : gen_action_) {
        int next = act[orbit[i]];
        if (!seen[next]) {
          seen[next] = 1;
          orbit.push_back(next);
        }
      }
    orbits.push_back(std::move(orbit));
  }
  return orbits;
}

std::string PermModule::render_vector(const std::vector<Int>& v) const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < v.size() && i < basis_.size(); ++i) {
    if (v[i] == 0) continue;
    Int c = v[i];
    if (first) {
      if (c < 0) {
        os << "-";
        c = -c;
      }
      first = false;
    } else {
      if (c < 0) {
        os << " - ";
        c = -c;
      } else {
        os << " + ";
      }
    }
    if (c != 1) os << c << " ";
    os << basis_[i].to_string();
  }
  if (first) return "0";
  return os.str();
}

}  // namespace ed2
