#include <doctest.h>

#include <algorithm>

#include "ed2/constructions.hpp"

using namespace ed2;

namespace {

Verdict run(const Construction& c, Strategy s = Strategy::Auto) {
  return verify_generically_free(c.map, s == Strategy::Auto ? resolve_strategy(c, s) : s);
}

bool same_verdict(const Verdict& a, const Verdict& b) {
  return a.well_defined == b.well_defined && a.surjective == b.surjective &&
         a.faithful == b.faithful && a.kernel_rank == b.kernel_rank &&
         a.source_rank == b.source_rank && a.target_rank == b.target_rank && a.bound == b.bound;
}

std::vector<Permutation> sorted_elements(const PermGroup& g) {
  std::vector<Permutation> v = g.elements();
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST_CASE("lemma32i: sizes and bounds") {
  Construction c3 = lemma32i(3);
  CHECK(c3.map.source.rank() == 6);
  CHECK(run(c3).bound == 3);
  Construction c8 = lemma32i(8);
  CHECK(c8.map.source.rank() == 36);
  Verdict v8 = run(c8);
  CHECK(v8.conditions_hold());
  CHECK(v8.bound == 28);
  CHECK(v8.bound == c8.expected_bound);
  CHECK_THROWS_AS(lemma32i(2), RangeError);
}

TEST_CASE("lemma32i: the e = f + g identity holds columnwise at n=4") {
  Construction c = lemma32i(4);
  bool found = false;
  for (const auto& check : c.checks)
    if (check.name == "e-equals-f-plus-g") {
      found = true;
      CHECK(check.pass);
    }
  CHECK(found);
}

TEST_CASE("lemma32ii: bounds, parity guard, range guard") {
  Verdict v6 = run(lemma32ii(6));
  CHECK(v6.conditions_hold());
  CHECK(v6.bound == 10);
  Verdict v8 = run(lemma32ii(8));
  CHECK(v8.conditions_hold());
  CHECK(v8.bound == 21);
  CHECK(v8.bound == (8 - 1) * (8 - 2) / 2);  // matches the closed form at n=8

  CHECK_THROWS_AS(lemma32ii(5), RangeError);
  CHECK_THROWS_AS(lemma32ii(7), RangeError);
  CHECK_THROWS_AS(lemma32ii(4), RangeError);  // guarded paper range

  BuildOptions open;
  open.range_guard = false;
  Construction c4 = lemma32ii(4, open);  // runs, reported without assertion
  CHECK_FALSE(c4.range_note.empty());
  Verdict v4 = run(c4);
  CHECK_FALSE(v4.conditions_hold());  // the machine finds the n=4 defect
  CHECK_THROWS_AS(lemma32ii(5, open), RangeError);  // odd n stays impossible
}

TEST_CASE("lemma32ii: surjectivity identity check") {
  Construction c = lemma32ii(6);
  bool found = false;
  for (const auto& check : c.checks)
    if (check.name == "e-classes-in-pair-span") {
      found = true;
      CHECK(check.pass);
    }
  CHECK(found);
}

TEST_CASE("lemma33: bounds, cross-pair stability, center witness") {
  Construction c2 = lemma33(2);
  CHECK(c2.map.source.rank() == 8);  // 4 cross pairs + 4 singletons
  Verdict v2 = run(c2);
  CHECK(v2.conditions_hold());
  CHECK(v2.bound == 4);
  Verdict v3 = run(lemma33(3));
  CHECK(v3.bound == 16);
  CHECK(v3.strategy == "witness");  // construction default
  for (const auto& check : lemma33(3).checks) CHECK(check.pass);
  CHECK_THROWS_AS(lemma33(1), RangeError);
}

TEST_CASE("lemma33: witness verdict equals exhaustive verdict for r = 2, 3") {
  for (int r : {2, 3}) {
    Construction c = lemma33(r);
    CHECK(same_verdict(run(c, Strategy::Witness), run(c, Strategy::Exhaustive)));
  }
}

TEST_CASE("section5: bounds and component ranks") {
  Verdict v3 = run(section5(3));
  CHECK(v3.conditions_hold());
  CHECK(v3.bound == 8);
  Construction c4 = section5(4);
  Verdict v4 = run(c4);
  CHECK(v4.conditions_hold());
  CHECK(v4.bound == 24);
  std::vector<std::size_t> ranks;
  for (const auto& comp : c4.map.source.components()) ranks.push_back(comp.length);
  CHECK(ranks == std::vector<std::size_t>{8, 8, 8, 16});
  for (const auto& check : c4.checks) CHECK(check.pass);
  CHECK_THROWS_AS(section5(2), RangeError);
}

TEST_CASE("section5(3) and the explicit r=3 example produce identical verdicts") {
  Construction a = section5(3);
  Construction b = example_r3();
  CHECK(same_verdict(run(a, Strategy::Exhaustive), run(b, Strategy::Exhaustive)));

  // the component subgroups are the same four groups up to order
  auto key = [](const PermGroup& g) { return sorted_elements(g); };
  std::vector<std::vector<Permutation>> as, bs;
  for (const auto& g : a.component_subgroups) as.push_back(key(g));
  for (const auto& g : b.component_subgroups) bs.push_back(key(g));
  std::sort(as.begin(), as.end());
  std::sort(bs.begin(), bs.end());
  CHECK(as == bs);
}

TEST_CASE("section5: base-point choice does not change the verdict") {
  for (int r : {3, 4}) {
    BuildOptions at0;
    BuildOptions at1;
    at1.base_point = 1;
    CHECK(same_verdict(run(section5(r, at0), Strategy::Exhaustive),
                       run(section5(r, at1), Strategy::Exhaustive)));
  }
}

TEST_CASE("bound bookkeeping across the two symmetric-group constructions") {
  for (int n : {6, 8}) {
    CHECK(lemma32ii(n).expected_bound == lemma32i(n).expected_bound - (n - 1));
    CHECK(run(lemma32ii(n)).bound == run(lemma32i(n)).bound - (n - 1));
  }
}

TEST_CASE("section5 rank arithmetic matches the closed form") {
  for (int r : {3, 4}) {
    Construction c = section5(r);
    long long lam = static_cast<long long>(c.map.source.rank());
    long long j = static_cast<long long>(c.map.target.rank());
    CHECK(lam == 3 * (1ll << (r - 1)) + (1ll << (2 * r - 4)));
    CHECK(j == (1ll << r));
    CHECK(lam - j == c.expected_bound);
  }
}

TEST_CASE("verify_usss: all four recursion claims hold for r = 3, 4") {
  for (int r : {3, 4}) {
    UsssReport rep = verify_usss(r);
    CHECK(rep.stabilizer_factorization);
    CHECK(rep.generation);
    CHECK(rep.module_generation);
    CHECK(rep.intersection);
    CHECK(rep.pass());
  }
  UsssReport r4 = verify_usss(4);
  CHECK(r4.stab_order == 2);
  CHECK(r4.intersection_order == 1);
  UsssReport r3 = verify_usss(3);
  CHECK(r3.notes.find("2 and tau_i - 1") != std::string::npos);
  CHECK_THROWS_AS(verify_usss(2), RangeError);
}

TEST_CASE("negative control: dropped singletons break the n=4 verification") {
  BuildOptions opt;
  opt.drop_singletons = true;
  Construction c = lemma32i(4, opt);
  Verdict v = run(c, Strategy::Exhaustive);
  CHECK_FALSE(v.conditions_hold());
  // The pair vectors still span the even-sum lattice (e_i - e_j = f_ik - f_jk),
  // so the break is faithfulness: the three double transpositions fix the
  // rank-2 kernel pointwise.
  CHECK(v.surjective);
  CHECK_FALSE(v.faithful);
  CHECK(v.kernel_rank == 2);
  CHECK(v.witnesses.size() == 3);
}

TEST_CASE("expected bound formulas") {
  CHECK(expected_bound_for(ConstructionId::Lemma32i, 8) == 28);
  CHECK(expected_bound_for(ConstructionId::Lemma32ii, 6) == 10);
  CHECK(expected_bound_for(ConstructionId::Lemma33, 2) == 4);
  CHECK(expected_bound_for(ConstructionId::Section5, 5) == 80);
  CHECK(expected_bound_for(ConstructionId::ExampleR3, 3) == 8);
}
