#include "ed2/constructions.hpp"

#include <sstream>

namespace ed2 {

std::string construction_cli_name(ConstructionId id) {
  switch (id) {
    case ConstructionId::Lemma32i:
      return "lemma32i";
    case ConstructionId::Lemma32ii:
      return "lemma32ii";
    case ConstructionId::Lemma33:
      return "lemma33";
    case ConstructionId::Section5:
      return "section5";
    case ConstructionId::ExampleR3:
      return "example-r3";
  }
  return "?";
}

long long expected_bound_for(ConstructionId id, long long p) {
  switch (id) {
    case ConstructionId::Lemma32i:
      return p * (p - 1) / 2;
    case ConstructionId::Lemma32ii:
      return (p - 1) * (p - 2) / 2;
    case ConstructionId::Lemma33:
      return 1ll << (2 * p - 2);
    case ConstructionId::Section5:
      return (1ll << (p - 1)) + (1ll << (2 * p - 4));
    case ConstructionId::ExampleR3:
      return 8;
  }
  return 0;
}

namespace {

const std::string kOutsideRange =
    "outside the stated parameter range; findings are reported but assert nothing";

std::vector<Int> unit_sum(std::size_t dim, std::initializer_list<std::pair<int, int>> terms) {
  std::vector<Int> v(dim);
  for (auto [idx, coeff] : terms) v[idx] += coeff;
  return v;
}

// Images "to themselves" for pair/singleton labels: {i,j} -> e_i + e_j,
// singleton k -> -2 e_k.
std::vector<std::vector<Int>> self_images(const PermModule& source, std::size_t ambient_dim) {
  std::vector<std::vector<Int>> images;
  for (const auto& orbit : source.basis_orbits()) {
    const Label& rep = source.basis()[orbit[0]];
    switch (rep.kind) {
      case Label::Kind::Pair:
        images.push_back(unit_sum(ambient_dim, {{rep.a, 1}, {rep.b, 1}}));
        break;
      case Label::Kind::Singleton:
        images.push_back(unit_sum(ambient_dim, {{rep.a, -2}}));
        break;
      default:
        throw RangeError("self_images: unsupported label kind");
    }
  }
  return images;
}

bool vector_is_zero(const std::vector<Int>& v) {
  for (const Int& x : v)
    if (x != 0) return false;
  return true;
}

// Witness-vector check shared by the pair/singleton constructions: the
// combination 2 f{i,j} + g_i + g_j lies in the kernel and the given element
// moves it.
NamedCheck kernel_witness_check(const Construction& c, int i, int j, const Permutation& elem,
                                const std::string& elem_role) {
  NamedCheck check;
  check.name = "kernel-witness-vector";
  const PermModule& src = c.map.source;
  std::vector<Int> v(src.rank());
  int fi = src.index_of(Label::pair(i, j));
  int gi = src.index_of(Label::singleton(i));
  int gj = src.index_of(Label::singleton(j));
  if (fi < 0 || gi < 0 || gj < 0) {
    check.detail = "required basis labels are absent";
    return check;
  }
  v[fi] = 2;
  v[gi] += 1;
  v[gj] += 1;
  bool in_kernel = vector_is_zero(c.map.matrix.apply(v));
  auto perm = src.index_perm(elem);
  bool moved = src.act(perm, v) != v;
  check.pass = in_kernel && moved;
  std::ostringstream os;
  os << src.render_vector(v) << (in_kernel ? " lies in the kernel" : " is NOT in the kernel")
     << " and is " << (moved ? "moved" : "NOT moved") << " by " << elem_role << " "
     << elem.cycle_string();
  check.detail = os.str();
  return check;
}

}  // namespace

Construction lemma32i(int n, const BuildOptions& opt) {
  if (n < 2) throw RangeError("lemma32i: n must be >= 2");
  if (opt.range_guard && n < 3)
    throw RangeError("lemma32i: stated range is n >= 3 (use --no-range-guard to explore outside it)");
  Construction c;
  c.id = ConstructionId::Lemma32i;
  c.cli_name = construction_cli_name(c.id);
  c.parameter = n;
  if (n < 3) c.range_note = kOutsideRange;
  c.group = sym(n);
  std::vector<Label> labels;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) labels.push_back(Label::pair(i, j));
  if (!opt.drop_singletons)
    for (int k = 0; k < n; ++k) labels.push_back(Label::singleton(k));
  PermModule source = PermModule::from_labels(c.group, std::move(labels));
  GLattice target = augmentation_kernel(PermModule::natural(c.group), 2);
  c.map = build_equivariant_map(source, target, self_images(source, n));
  c.expected_bound = expected_bound_for(c.id, n);
  c.citation = "pair-and-singleton character set for the maximal-torus normalizer in GL_n mod mu_2";

  if (!opt.drop_singletons) {
    NamedCheck span;
    span.name = "e-equals-f-plus-g";
    span.pass = true;
    for (int i = 0; i < n && span.pass; ++i)
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        std::vector<Int> lhs = unit_sum(n, {{i, 1}, {j, -1}});
        std::vector<Int> f = c.map.matrix.col(source.index_of(Label::pair(i, j)));
        std::vector<Int> g = c.map.matrix.col(source.index_of(Label::singleton(j)));
        for (int t = 0; t < n; ++t)
          if (lhs[t] != f[t] + g[t]) {
            span.pass = false;
            break;
          }
        if (!span.pass) break;
      }
    span.detail = "e_{i,j} = f_{i,j} + g_j holds columnwise for all ordered pairs";
    c.checks.push_back(span);

    if (n >= 3)
      c.checks.push_back(
          kernel_witness_check(c, 0, 2, Permutation::cycle(n, {0, 1, 2}), "the 3-cycle"));
  }
  return c;
}

Construction lemma32ii(int n, const BuildOptions& opt) {
  if (n < 4 || n % 2 != 0)
    throw RangeError(
        "lemma32ii: n must be even and >= 4 (the all-ones divisor lies in the even-sum lattice "
        "only for even n)");
  if (opt.range_guard && n < 6)
    throw RangeError("lemma32ii: stated range is n >= 6 even (use --no-range-guard to explore n = 4)");
  Construction c;
  c.id = ConstructionId::Lemma32ii;
  c.cli_name = construction_cli_name(c.id);
  c.parameter = n;
  if (n < 6) c.range_note = kOutsideRange;
  c.group = sym(n);
  std::vector<Label> labels;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) labels.push_back(Label::pair(i, j));
  PermModule source = PermModule::from_labels(c.group, std::move(labels));
  GLattice plain = augmentation_kernel(PermModule::natural(c.group), 2);
  GLattice target = quotient_target(plain, std::vector<Int>(n, 1));
  c.map = build_equivariant_map(source, target, self_images(source, n));
  c.expected_bound = expected_bound_for(c.id, n);
  c.citation = "pair classes for the maximal-torus normalizer in SL_n mod mu_2";

  NamedCheck span;
  span.name = "e-classes-in-pair-span";
  span.pass = true;
  LatticeSolver in_image(c.map.matrix.concat_cols(target.divisor));
  for (int i = 0; i < n && span.pass; ++i)
    for (int j = i + 1; j < n; ++j)
      if (!in_image.contains(unit_sum(n, {{i, 1}, {j, -1}}))) {
        span.pass = false;
        break;
      }
  span.detail = "every class e_{i,j} lies in the span of the pair images plus the divisor";
  c.checks.push_back(span);
  return c;
}

Construction lemma33(int r, const BuildOptions& opt) {
  if (r < 1) throw RangeError("lemma33: r must be >= 1");
  if (opt.range_guard && r < 2)
    throw RangeError("lemma33: stated range is r >= 2 (use --no-range-guard to explore r = 1)");
  Construction c;
  c.id = ConstructionId::Lemma33;
  c.cli_name = construction_cli_name(c.id);
  c.parameter = r;
  if (r < 2) c.range_note = kOutsideRange;
  int n = 1 << r;
  int q = n / 2;
  c.group = sylow2_sym(n);
  std::vector<Label> labels;
  for (int i = 0; i < q; ++i)
    for (int j = q; j < n; ++j) labels.push_back(Label::pair(i, j));
  for (int k = 0; k < n; ++k) labels.push_back(Label::singleton(k));
  PermModule source = PermModule::from_labels(c.group, std::move(labels));
  GLattice target = augmentation_kernel(PermModule::natural(c.group), 2);
  c.map = build_equivariant_map(source, target, self_images(source, n));
  c.expected_bound = expected_bound_for(c.id, r);
  c.default_strategy = Strategy::Witness;
  c.citation = "cross pairs and singletons for the Sylow-2 torus normalizer in GL_{2^r} mod mu_2";

  NamedCheck cross;
  cross.name = "cross-pair-stability";
  cross.pass = true;
  long long swept = 0;
  for (std::size_t gi = 0; gi < c.group.generator_count() && cross.pass; ++gi) {
    const Permutation& g = c.group.generator(gi);
    for (int i = 0; i < q && cross.pass; ++i)
      for (int j = q; j < n; ++j) {
        int a = g(i), b = g(j);
        if ((a < q) == (b < q)) {
          cross.pass = false;
          break;
        }
        ++swept;
      }
  }
  cross.detail = "all generators map cross pairs to cross pairs (" + std::to_string(swept) +
                 " images swept)";
  c.checks.push_back(cross);

  if (r >= 2) {
    // The designated central element: the product of all bottom-level
    // transposition generators, (1 2)(3 4)...(2^r-1 2^r).
    Permutation sigma = Permutation::identity(n);
    for (std::size_t gi = 0; gi < c.group.generator_count(); ++gi)
      if (c.group.generator(gi).support().size() == 2)
        sigma = sigma.compose(c.group.generator(gi));
    bool central = true;
    for (std::size_t gi = 0; gi < c.group.generator_count(); ++gi)
      if (!sigma.commutes_with(c.group.generator(gi))) central = false;
    NamedCheck witness = kernel_witness_check(c, 0, q, sigma, "the central element");
    witness.pass = witness.pass && central;
    if (!central) witness.detail += " (centrality check FAILED)";
    c.checks.push_back(witness);
  }
  return c;
}

namespace {

Construction build_block_construction(ConstructionId id, int r, const BuildOptions& opt,
                                      const std::vector<std::vector<std::string>>& component_gens,
                                      bool include_stab_in_components) {
  Construction c;
  c.id = id;
  c.cli_name = construction_cli_name(id);
  c.parameter = r;
  c.group = h_group(r);
  int n = 1 << r;
  int x = opt.base_point;
  if (x < 0 || x >= n) throw RangeError("base point out of range");
  const Permutation& tau1 = c.group.named_generator("tau1");
  const Permutation& tau2 = c.group.named_generator("tau2");
  const Permutation& tau_r = c.group.named_generator("tau_r");
  Permutation tau12 = tau1.compose(tau2);
  auto named = [&](const std::string& nm) -> Permutation {
    if (nm == "tau1") return tau1;
    if (nm == "tau2") return tau2;
    if (nm == "tau12") return tau12;
    if (nm == "tau_r") return tau_r;
    throw RangeError("unknown component generator tag " + nm);
  };

  PermGroup stab = stabilizer(c.group, x);
  std::vector<PermModule> parts;
  std::vector<std::vector<Int>> images;
  for (std::size_t comp = 0; comp < component_gens.size(); ++comp) {
    PermGroup k;
    const auto& tags = component_gens[comp];
    if (include_stab_in_components) {
      if (tags.size() == 1 && tags[0] != "tau_r") {
        PermGroup span = generated_by(n, {{tags[0], named(tags[0])}}, "<" + tags[0] + ">");
        k = product(span, stab);
      } else {
        // Fourth component: (tau_r stab tau_r ^ stab) extended by tau_r.
        PermGroup meet = intersect(conjugate(stab, tau_r), stab);
        std::vector<std::pair<std::string, Permutation>> gens;
        for (std::size_t i = 0; i < meet.generator_count(); ++i)
          gens.emplace_back("i." + meet.generator_name(i), meet.generator(i));
        gens.emplace_back("tau_r", tau_r);
        k = generated_by(n, std::move(gens), "(stab^tau_r & stab).<tau_r>");
      }
    } else {
      k = generated_by(n, {{tags[0], named(tags[0])}}, "<" + tags[0] + ">");
    }
    CosetSpace cs = cosets(c.group, k);
    c.component_subgroups.push_back(k);
    parts.push_back(PermModule::coset_module(cs, static_cast<int>(comp)));
    // Base-coset image: tag * x + x.
    Permutation t = named(tags[0]);
    std::vector<Int> img(n);
    img[t(x)] += 1;
    img[x] += 1;
    if (opt.corrupt_first_image && comp == 0) {
      img.assign(n, 0);
      img[t(x)] += 1;
      img[x] -= 1;
    }
    images.push_back(std::move(img));
  }
  PermModule source = PermModule::direct_sum(parts);
  GLattice target = augmentation_kernel(PermModule::natural(c.group), 2);
  c.map = build_equivariant_map(source, target, images);

  NamedCheck identity;
  identity.name = "two-x-identity";
  {
    // 2x = (tau1 tau2 x + x) - tau1 (tau2 x + x) + (tau1 x + x), with the
    // middle term pushed through the module action.
    std::vector<Int> lhs = unit_sum(n, {{x, 2}});
    std::vector<Int> mid = unit_sum(n, {{tau2(x), 1}, {x, 1}});
    std::size_t t1 = *c.group.find_generator("tau1");
    std::vector<Int> acted =
        target.ambient.act(target.ambient.generator_action(t1), mid);
    std::vector<Int> rhs = unit_sum(n, {{tau12(x), 1}, {x, 1}});
    for (int i = 0; i < n; ++i) rhs[i] -= acted[i];
    rhs[tau1(x)] += 1;
    rhs[x] += 1;
    identity.pass = lhs == rhs;
    identity.detail = "2x = (tau1 tau2 x + x) - tau1 (tau2 x + x) + (tau1 x + x) as exact vectors";
  }
  c.checks.push_back(identity);

  NamedCheck ranks;
  ranks.name = "component-ranks";
  {
    std::vector<long long> expected;
    if (include_stab_in_components)
      expected = {1ll << (r - 1), 1ll << (r - 1), 1ll << (r - 1), 1ll << (2 * r - 4)};
    else
      expected = {4, 4, 4, 4};
    ranks.pass = true;
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < parts.size(); ++i) {
      long long got = static_cast<long long>(parts[i].rank());
      if (got != expected[i]) ranks.pass = false;
      os << (i ? "," : "") << got;
    }
    os << ")";
    ranks.detail = "component ranks " + os.str();
  }
  c.checks.push_back(ranks);
  return c;
}

}  // namespace

Construction section5(int r, const BuildOptions& opt) {
  if (r < 3) throw RangeError("section5: r must be >= 3");
  Construction c = build_block_construction(
      ConstructionId::Section5, r, opt,
      {{"tau1"}, {"tau2"}, {"tau12"}, {"tau_r"}}, true);
  c.expected_bound = expected_bound_for(ConstructionId::Section5, r);
  c.citation = "four coset modules over H_r mapped onto the index-2 augmentation kernel";
  return c;
}

Construction example_r3(const BuildOptions& opt) {
  Construction c = build_block_construction(
      ConstructionId::ExampleR3, 3, opt,
      {{"tau1"}, {"tau2"}, {"tau_r"}, {"tau12"}}, false);
  c.expected_bound = 8;
  c.citation = "regular H_3 with components <tau1>, <tau2>, <tau3>, <tau1 tau2>";
  return c;
}

Construction build_construction(ConstructionId id, long long parameter, const BuildOptions& opt) {
  switch (id) {
    case ConstructionId::Lemma32i:
      return lemma32i(static_cast<int>(parameter), opt);
    case ConstructionId::Lemma32ii:
      return lemma32ii(static_cast<int>(parameter), opt);
    case ConstructionId::Lemma33:
      return lemma33(static_cast<int>(parameter), opt);
    case ConstructionId::Section5:
      return section5(static_cast<int>(parameter), opt);
    case ConstructionId::ExampleR3:
      return example_r3(opt);
  }
  throw RangeError("unknown construction");
}

Strategy resolve_strategy(const Construction& c, Strategy requested) {
  if (requested != Strategy::Auto) return requested;
  return c.default_strategy;
}

namespace {

// Split a subgroup of the diagonal block action into its two
// half-offset-supported factors; returns false when the split does not
// multiply out to the whole group or the factors fail to commute.
struct HalfSplit {
  std::vector<Permutation> low, high;
  bool clean = false;
};

HalfSplit half_offset_split(const PermGroup& k, int block_size) {
  HalfSplit out;
  int half = block_size / 2;
  std::size_t classified = 0;
  for (const Permutation& e : k.elements()) {
    if (e.is_identity()) {
      out.low.push_back(e);
      out.high.push_back(e);
      classified++;
      continue;
    }
    bool low_only = true, high_only = true;
    for (int p : e.support()) {
      if (p % block_size < half)
        high_only = false;
      else
        low_only = false;
    }
    if (low_only) {
      out.low.push_back(e);
      classified++;
    } else if (high_only) {
      out.high.push_back(e);
      classified++;
    }
  }
  if (out.low.size() * out.high.size() != k.order()) return out;
  for (const Permutation& a : out.low)
    for (const Permutation& b : out.high)
      if (!a.commutes_with(b)) return out;
  (void)classified;
  out.clean = true;
  return out;
}

}  // namespace

UsssReport verify_usss(int r) {
  if (r < 3) throw RangeError("verify_usss: r must be >= 3");
  UsssReport rep;
  rep.r = r;
  PermGroup h = h_group(r);
  int n = 1 << r;
  int q = n / 4;
  rep.group_order = h.order();
  PermGroup stab = stabilizer(h, 0);
  rep.stab_order = stab.order();
  PermGroup hprev = h_group_unchecked(r - 1);
  PermGroup stab_prev = stabilizer(hprev, 0);
  rep.stab_prev_order = stab_prev.order();
  rep.sylow_prev_order = r == 3 ? 1ull : 1ull << ((1u << (r - 3)) - 1);

  // (i) stabilizer order factorization plus the half-supported decomposition.
  {
    HalfSplit split = half_offset_split(stab, q);
    rep.stabilizer_factorization = split.clean &&
                                   rep.stab_order == rep.stab_prev_order * rep.sylow_prev_order &&
                                   split.low.size() == rep.stab_prev_order &&
                                   split.high.size() == rep.sylow_prev_order;
  }

  // (ii) tau1, tau2, tau_r and the stabilizer generate the whole group.
  {
    std::vector<std::pair<std::string, Permutation>> gens;
    gens.emplace_back("tau1", h.named_generator("tau1"));
    gens.emplace_back("tau2", h.named_generator("tau2"));
    gens.emplace_back("tau_r", h.named_generator("tau_r"));
    for (std::size_t i = 0; i < stab.generator_count(); ++i)
      gens.emplace_back(stab.generator_name(i), stab.generator(i));
    PermGroup closure = generated_by(n, std::move(gens), "closure");
    rep.closure_order = closure.order();
    rep.generation = rep.closure_order == rep.group_order;
  }

  // (iii) the orbit span of {2x, tau1 x - x, tau2 x - x, tau_r x - x}
  // equals the augmentation kernel, as an exact HNF equality.
  {
    const Permutation& tau1 = h.named_generator("tau1");
    const Permutation& tau2 = h.named_generator("tau2");
    const Permutation& tau_r = h.named_generator("tau_r");
    IntMatrix gens(n, 4);
    gens(0, 0) = 2;
    gens(tau1(0), 1) = 1;
    gens(0, 1) -= 1;
    gens(tau2(0), 2) = 1;
    gens(0, 2) -= 1;
    gens(tau_r(0), 3) = 1;
    gens(0, 3) -= 1;
    IntMatrix span = hnf(gens).H;
    span = span.left_cols(rank(span));
    for (;;) {
      IntMatrix next = span;
      for (std::size_t gi = 0; gi < h.generator_count(); ++gi) {
        const Permutation& g = h.generator(gi);
        IntMatrix acted(n, span.cols());
        for (std::size_t j = 0; j < span.cols(); ++j)
          for (int i = 0; i < n; ++i) acted(g(i), j) = span(i, j);
        next = next.concat_cols(acted);
      }
      next = hnf(next).H;
      // Trim trailing zero columns for a stable comparison.
      std::size_t rk = rank(next);
      next = next.left_cols(rk);
      if (next == span) break;
      span = next;
    }
    GLattice j = augmentation_kernel(PermModule::natural(h), 2);
    rep.module_generation = span == j.basis;
    if (r == 3)
      rep.notes =
          "r=3: under the simply transitive identification of the point set with the group, "
          "the four generators read 2 and tau_i - 1";
  }

  // (iv) conjugated-stabilizer intersection: order and decomposition.
  {
    PermGroup meet = intersect(conjugate(stab, h.named_generator("tau_r")), stab);
    rep.intersection_order = meet.order();
    HalfSplit split = half_offset_split(meet, q);
    rep.intersection = split.clean &&
                       rep.intersection_order == rep.stab_prev_order * rep.stab_prev_order &&
                       split.low.size() == rep.stab_prev_order &&
                       split.high.size() == rep.stab_prev_order;
  }
  return rep;
}

}  // namespace ed2
