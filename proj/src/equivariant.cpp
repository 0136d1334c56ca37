#include "ed2/equivariant.hpp"

#include <algorithm>
#include <sstream>

namespace ed2 {

namespace {

IntMatrix drop_zero_cols(const IntMatrix& h) {
  std::size_t rk = 0;
  for (std::size_t j = 0; j < h.cols(); ++j) {
    bool zero = true;
    for (std::size_t i = 0; i < h.rows(); ++i)
      if (h(i, j) != 0) {
        zero = false;
        break;
      }
    if (zero) break;  // canonical HNF keeps zero columns at the end
    ++rk;
  }
  return h.left_cols(rk);
}

std::vector<int> invert_index_perm(const std::vector<int>& p) {
  std::vector<int> inv(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) inv[p[i]] = static_cast<int>(i);
  return inv;
}

}  // namespace

GLattice make_glattice(PermModule ambient, const IntMatrix& generators, IntMatrix divisor) {
  GLattice l;
  l.basis = drop_zero_cols(hnf(generators).H);
  l.divisor = divisor.cols() ? drop_zero_cols(hnf(divisor).H) : IntMatrix(l.basis.rows(), 0);
  l.ambient = std::move(ambient);
  if (l.basis.rows() != l.ambient.rank())
    throw RangeError("make_glattice: basis dimension does not match the ambient module");
  LatticeSolver in_basis(l.basis);
  std::optional<LatticeSolver> in_divisor;
  if (l.divisor.cols()) {
    in_divisor.emplace(l.divisor);
    for (std::size_t j = 0; j < l.divisor.cols(); ++j)
      if (!in_basis.contains(l.divisor.col(j)))
        throw RangeError("make_glattice: divisor is not inside the lattice");
  }
  for (std::size_t gi = 0; gi < l.ambient.group().generator_count(); ++gi) {
    const auto& act = l.ambient.generator_action(gi);
    for (std::size_t j = 0; j < l.basis.cols(); ++j)
      if (!in_basis.contains(l.ambient.act(act, l.basis.col(j))))
        throw RangeError("make_glattice: lattice is not invariant under generator " +
                         l.ambient.group().generator_name(gi));
    for (std::size_t j = 0; j < l.divisor.cols(); ++j)
      if (!in_divisor->contains(l.ambient.act(act, l.divisor.col(j))))
        throw RangeError("make_glattice: divisor is not invariant under generator " +
                         l.ambient.group().generator_name(gi));
  }
  return l;
}

GLattice augmentation_kernel(const PermModule& module, long long m) {
  if (m < 1) throw RangeError("augmentation_kernel: modulus must be >= 1");
  std::size_t n = module.rank();
  IntMatrix gens(n, n);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    gens(i, i) = 1;
    gens(i + 1, i) = -1;
  }
  if (n > 0) gens(n - 1, n - 1) = m;
  return make_glattice(module, gens, IntMatrix(n, 0));
}

GLattice even_sum_sublattice(int n, long long m) {
  if (n < 1) throw RangeError("even_sum_sublattice: n must be >= 1");
  return augmentation_kernel(PermModule::natural(sym(n)), m);
}

GLattice quotient_target(const GLattice& l, const std::vector<Int>& divisor_vector) {
  LatticeSolver in_basis(l.basis);
  if (!in_basis.contains(divisor_vector))
    throw RangeError("quotient_target: divisor vector is not in the lattice");
  IntMatrix divisor = l.divisor.concat_cols(IntMatrix::column(divisor_vector));
  return make_glattice(l.ambient, l.basis, divisor);
}

EquivariantMap build_equivariant_map(const PermModule& source, const GLattice& target,
                                     const std::vector<std::vector<Int>>& rep_images) {
  EquivariantMap m;
  m.source = source;
  m.target = target;
  auto orbits = source.basis_orbits();
  if (orbits.size() != rep_images.size()) {
    std::ostringstream os;
    os << "build_equivariant_map: " << orbits.size() << " source orbits but "
       << rep_images.size() << " images supplied";
    throw RangeError(os.str());
  }
  const std::size_t trank = target.ambient.rank();
  LatticeSolver in_target(target.basis);
  std::optional<LatticeSolver> in_divisor;
  if (target.divisor.cols()) in_divisor.emplace(target.divisor);
  auto equal_mod_divisor = [&](const std::vector<Int>& a, const std::vector<Int>& b) {
    std::vector<Int> diff(a.size());
    bool zero = true;
    for (std::size_t i = 0; i < a.size(); ++i) {
      diff[i] = a[i] - b[i];
      if (diff[i] != 0) zero = false;
    }
    if (zero) return true;
    return in_divisor && in_divisor->contains(diff);
  };

  m.matrix = IntMatrix(trank, source.rank());
  std::vector<char> assigned(source.rank(), 0);
  const PermGroup& g = source.group();
  // Transversal permutations: basis element = transversal * orbit rep.
  std::vector<Permutation> transversal(source.rank());

  for (std::size_t oi = 0; oi < orbits.size(); ++oi) {
    int rep = orbits[oi][0];
    m.orbit_reps.push_back(rep);
    const auto& image = rep_images[oi];
    if (image.size() != trank) throw RangeError("build_equivariant_map: image dimension mismatch");
    if (!in_target.contains(image))
      throw RangeError("build_equivariant_map: the image of orbit " + std::to_string(oi + 1) +
                       " (" + source.basis()[rep].to_string() + ") is not in the target lattice");
    m.rep_images.push_back(image);
    m.matrix.set_col(rep, image);
    assigned[rep] = 1;
    transversal[rep] = Permutation::identity(g.degree());

    std::vector<int> queue{rep};
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      int b = queue[qi];
      for (std::size_t gi = 0; gi < g.generator_count(); ++gi) {
        int nb = source.generator_action(gi)[b];
        std::vector<Int> candidate =
            target.ambient.act(target.ambient.generator_action(gi), m.matrix.col(b));
        if (!assigned[nb]) {
          m.matrix.set_col(nb, candidate);
          assigned[nb] = 1;
          transversal[nb] = g.generator(gi).compose(transversal[b]);
          queue.push_back(nb);
        } else if (!equal_mod_divisor(candidate, m.matrix.col(nb))) {
          // Closure failure: the Schreier element t(nb)^-1 * gen * t(b)
          // stabilizes the representative but moves its image.
          Permutation schreier =
              transversal[nb].inverse().compose(g.generator(gi)).compose(transversal[b]);
          std::ostringstream os;
          os << "map is not well defined on component " << (oi + 1) << ": stabilizer element "
             << schreier.cycle_string() << " of " << source.basis()[rep].to_string()
             << " does not fix the assigned image";
          throw WellDefinedError(os.str(), schreier.cycle_string(), static_cast<int>(oi));
        }
      }
    }
  }

  // Full generator equivariance of the derived matrix (exact, modulo divisor).
  for (std::size_t gi = 0; gi < g.generator_count(); ++gi) {
    const auto& sact = source.generator_action(gi);
    const auto& tact = target.ambient.generator_action(gi);
    for (std::size_t b = 0; b < source.rank(); ++b) {
      std::vector<Int> lhs = m.matrix.col(sact[b]);
      std::vector<Int> rhs = target.ambient.act(tact, m.matrix.col(b));
      if (!equal_mod_divisor(lhs, rhs))
        throw WellDefinedError("derived matrix is not equivariant under generator " +
                                   g.generator_name(gi),
                               g.generator(gi).cycle_string(), -1);
    }
  }
  return m;
}

std::string strategy_name(Strategy s) {
  switch (s) {
    case Strategy::Auto:
      return "auto";
    case Strategy::Exhaustive:
      return "exhaustive";
    case Strategy::Witness:
      return "witness";
  }
  return "?";
}

IntMatrix kernel_lattice(const EquivariantMap& map) {
  IntMatrix stacked = map.matrix.concat_cols(map.target.divisor);
  IntMatrix full = kernel_basis(stacked);
  // Divisor columns are independent, so projecting away their coefficients
  // is injective on the kernel lattice.
  IntMatrix projected(map.source.rank(), full.cols());
  for (std::size_t j = 0; j < full.cols(); ++j)
    for (std::size_t i = 0; i < map.source.rank(); ++i) projected(i, j) = full(i, j);
  return drop_zero_cols(hnf(projected).H);
}

namespace {

// Index of a kernel column moved by the index permutation, trying `hint`
// first. -1 when the element fixes every column.
int find_moved_column(const IntMatrix& kernel, const std::vector<int>& perm, int hint) {
  const std::size_t cols = kernel.cols();
  for (std::size_t step = 0; step < cols; ++step) {
    std::size_t j = (static_cast<std::size_t>(hint) + step) % cols;
    for (std::size_t i = 0; i < kernel.rows(); ++i)
      if (kernel(i, j) != kernel(static_cast<std::size_t>(perm[i]), j))
        return static_cast<int>(j);
  }
  return -1;
}

struct WitnessFamily {
  std::vector<Permutation> elements;
  std::string note;
};

WitnessFamily symmetric_family(const PermGroup& g) {
  WitnessFamily f;
  int n = g.degree();
  f.note =
      "witness family for S_" + std::to_string(n) +
      ": the kernel of the action is normal, and every nontrivial normal subgroup of S_n "
      "contains the listed witness types (documented assumption on the normal subgroups of "
      "S_n; cross-validated against the exhaustive sweep for small n)";
  if (n >= 3) f.elements.push_back(Permutation::cycle(n, {0, 1, 2}));
  if (n == 4) {
    Permutation dt = Permutation::transposition(4, 0, 1).compose(Permutation::transposition(4, 2, 3));
    f.elements.push_back(dt);
  }
  if (n == 2) f.elements.push_back(Permutation::transposition(2, 0, 1));
  return f;
}

WitnessFamily two_group_family(const PermGroup& g) {
  const auto& elems = g.elements();
  std::size_t order = elems.size();
  if (order == 0 || (order & (order - 1)) != 0)
    throw WitnessError("no witness family applies: group " + g.name() + " has order " +
                       std::to_string(order) + ", which is not a power of 2");
  PermGroup z = center(g);
  WitnessFamily f;
  f.note =
      "witness family for the 2-group " + g.name() +
      ": all nontrivial central elements (a nontrivial normal subgroup of a finite 2-group "
      "meets the center); centrality machine-verified";
  for (const Permutation& e : z.elements()) {
    if (e.is_identity()) continue;
    for (std::size_t i = 0; i < g.generator_count(); ++i)
      if (!e.commutes_with(g.generator(i)))
        throw WitnessError("witness soundness failure: claimed central element " +
                           e.cycle_string() + " does not commute with generator " +
                           g.generator_name(i));
    f.elements.push_back(e);
  }
  return f;
}

WitnessFamily witness_family(const PermGroup& g) {
  if (g.kind() == GroupKind::Symmetric) return symmetric_family(g);
  return two_group_family(g);  // requires enumerability; throws past the limit
}

}  // namespace

FaithfulnessOutcome faithfulness(const PermModule& module, const IntMatrix& kernel, Strategy s) {
  const PermGroup& g = module.group();

  // Precondition: the kernel is group-stable as a lattice.
  {
    LatticeSolver in_kernel(kernel);
    for (std::size_t gi = 0; gi < g.generator_count(); ++gi) {
      const auto& act = module.generator_action(gi);
      auto inv = invert_index_perm(act);
      for (std::size_t j = 0; j < kernel.cols(); ++j) {
        if (!in_kernel.contains(module.act(act, kernel.col(j))) ||
            !in_kernel.contains(module.act(inv, kernel.col(j))))
          throw Error("faithfulness: kernel lattice is not stable under generator " +
                      g.generator_name(gi));
      }
    }
  }

  if (s == Strategy::Auto) {
    if (auto ko = g.known_order()) {
      s = (*ko <= Int(static_cast<unsigned long long>(kEnumerationLimit))) ? Strategy::Exhaustive
                                                                           : Strategy::Witness;
    } else {
      try {
        g.elements();
        s = Strategy::Exhaustive;
      } catch (const TooLargeError&) {
        s = Strategy::Witness;
      }
    }
  }

  FaithfulnessOutcome out;
  constexpr std::size_t kViolationCap = 8;
  if (s == Strategy::Exhaustive) {
    out.strategy_used = "exhaustive";
    const auto& elems = g.elements();
    int hint = 0;
    std::size_t extra_violations = 0;
    for (std::size_t i = 1; i < elems.size(); ++i) {
      auto perm = module.index_perm_from_word(g.word_of(i));
      int moved = find_moved_column(kernel, perm, hint);
      if (moved < 0) {
        if (out.violations.size() < kViolationCap)
          out.violations.push_back(elems[i].cycle_string());
        else
          ++extra_violations;
      } else {
        hint = moved;
        if (out.certificates.size() < 3)
          out.certificates.emplace_back(elems[i].cycle_string(),
                                        module.render_vector(kernel.col(moved)));
      }
    }
    out.elements_checked = elems.size() - 1;
    if (extra_violations)
      out.violations.push_back("(+" + std::to_string(extra_violations) + " more)");
  } else {
    WitnessFamily family = witness_family(g);
    out.strategy_used = "witness";
    out.family_note = family.note;
    for (const Permutation& w : family.elements) {
      auto perm = module.index_perm_via_group(w);
      int moved = find_moved_column(kernel, perm, 0);
      if (moved < 0)
        out.violations.push_back(w.cycle_string());
      else
        out.certificates.emplace_back(w.cycle_string(),
                                      module.render_vector(kernel.col(moved)));
    }
    out.elements_checked = family.elements.size();
  }
  out.faithful = out.violations.empty();
  return out;
}

Verdict verify_generically_free(const EquivariantMap& map, Strategy s) {
  Verdict v;
  v.well_defined = true;
  v.source_rank = static_cast<long long>(map.source.rank());
  v.target_rank = static_cast<long long>(map.target.effective_rank());
  v.bound = v.source_rank - v.target_rank;

  // Surjectivity: the cokernel of the coordinate matrix (map columns plus
  // divisor columns, written in the target basis) must be trivial.
  LatticeSolver in_target(map.target.basis);
  IntMatrix coords(map.target.rank(), map.source.rank() + map.target.divisor.cols());
  for (std::size_t j = 0; j < map.source.rank(); ++j) {
    auto c = in_target.solve(map.matrix.col(j));
    if (!c) throw Error("verify: map column escaped the target lattice (internal)");
    coords.set_col(j, *c);
  }
  for (std::size_t j = 0; j < map.target.divisor.cols(); ++j) {
    auto c = in_target.solve(map.target.divisor.col(j));
    if (!c) throw Error("verify: divisor column escaped the target lattice (internal)");
    coords.set_col(map.source.rank() + j, *c);
  }
  SnfResult sresult = snf(coords);
  bool full_rank = sresult.factors.size() == map.target.rank();
  bool all_one = true;
  for (const Int& d : sresult.factors)
    if (d != 1) {
      all_one = false;
      v.cokernel_factors.push_back(d.str());
    }
  for (std::size_t k = sresult.factors.size(); k < map.target.rank(); ++k)
    v.cokernel_factors.push_back("0");
  v.surjective = full_rank && all_one;
  if (!v.surjective)
    for (const std::string& d : v.cokernel_factors)
      v.witnesses.push_back("cokernel invariant factor " + d);

  IntMatrix kernel = kernel_lattice(map);
  v.kernel_rank = static_cast<long long>(kernel.cols());

  FaithfulnessOutcome fo = faithfulness(map.source, kernel, s);
  v.faithful = fo.faithful;
  v.strategy = fo.strategy_used;
  for (const std::string& w : fo.violations)
    v.witnesses.push_back("element " + w + " acts trivially on the kernel");
  if (!fo.family_note.empty()) v.notes.push_back(fo.family_note);
  for (const auto& [elem, vec] : fo.certificates)
    v.notes.push_back("element " + elem + " moves kernel vector " + vec);
  return v;
}

}  // namespace ed2
