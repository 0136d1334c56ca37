#include <doctest.h>

#include <random>

#include "ed2/perm_group.hpp"

using namespace ed2;

namespace {

// Random word in the generators of g (as a composed permutation).
Permutation random_word(std::mt19937& rng, const PermGroup& g, int len) {
  Permutation w = Permutation::identity(g.degree());
  std::uniform_int_distribution<std::size_t> pick(0, g.generator_count() - 1);
  for (int i = 0; i < len; ++i) w = g.generator(pick(rng)).compose(w);
  return w;
}

}  // namespace

TEST_CASE("permutations: composition order and inverses") {
  Permutation a = Permutation::transposition(3, 0, 1);
  Permutation b = Permutation::cycle(3, {0, 1, 2});
  // (a o b)(x) = a(b(x))
  CHECK((a * b)(0) == a(b(0)));
  CHECK((a * b) != (b * a));
  CHECK((a * a.inverse()).is_identity());
  CHECK((b * b.inverse()).is_identity());
  CHECK_THROWS_AS(Permutation({0, 0, 1}), RangeError);
}

TEST_CASE("permutations: cycle notation is 1-based") {
  Permutation p = Permutation::transposition(4, 0, 1) * Permutation::transposition(4, 2, 3);
  CHECK(p.cycle_string() == "(1 2)(3 4)");
  CHECK(Permutation::identity(5).cycle_string() == "()");
}

TEST_CASE("sym: orders and degenerate cases") {
  CHECK(sym(3).order() == 6);
  CHECK(sym(4).order() == 24);
  CHECK(sym(1).order() == 1);
  CHECK_THROWS_AS(sym(0), RangeError);
}

TEST_CASE("sylow2_sym: orders 2^(2^k - 1) by exhaustive closure") {
  CHECK(sylow2_sym(2).order() == 2);
  CHECK(sylow2_sym(4).order() == 8);
  CHECK(sylow2_sym(8).order() == 128);
  CHECK(sylow2_sym(16).order() == 32768);
  CHECK_THROWS_AS(sylow2_sym(6), RangeError);
  CHECK_THROWS_AS(sylow2_sym(1), RangeError);
}

TEST_CASE("h_group: orders, transitivity, simply transitive base case") {
  PermGroup h3 = h_group(3);
  CHECK(h3.order() == 8);
  CHECK(stabilizer(h3, 0).order() == 1);  // simply transitive on 8 points
  CHECK(h_group(4).order() == 32);
  CHECK(h_group(5).order() == 512);
  CHECK_THROWS_AS(h_group(2), RangeError);
  for (int r : {3, 4, 5}) {
    PermGroup h = h_group(r);
    // transitive: the orbit of 0 is everything
    std::vector<char> seen(h.degree(), 0);
    seen[0] = 1;
    std::vector<int> orbit{0};
    for (std::size_t i = 0; i < orbit.size(); ++i)
      for (std::size_t gi = 0; gi < h.generator_count(); ++gi) {
        int y = h.generator(gi)(orbit[i]);
        if (!seen[y]) {
          seen[y] = 1;
          orbit.push_back(y);
        }
      }
    CHECK(orbit.size() == static_cast<std::size_t>(h.degree()));
  }
}

TEST_CASE("g_group: diagonal symmetric variant") {
  CHECK(g_group(3).order() == 8);     // S2 diagonal: same as h_group(3)
  CHECK(g_group(4).order() == 96);    // 4 * |S4|
  CHECK_THROWS_AS(g_group(2), RangeError);
}

TEST_CASE("stabilizer: orders and orbit-stabilizer") {
  CHECK(stabilizer(h_group(4), 0).order() == 2);
  CHECK(stabilizer(sym(3), 0).order() == 2);
  CHECK_THROWS_AS(stabilizer(sym(3), 5), RangeError);
  for (const PermGroup& g : {sym(4), sym(5), sylow2_sym(8), h_group(3), h_group(4)}) {
    for (int x = 0; x < g.degree(); ++x) {
      std::vector<char> seen(g.degree(), 0);
      std::size_t orbit = 0;
      for (const Permutation& e : g.elements())
        if (!seen[e(x)]) {
          seen[e(x)] = 1;
          ++orbit;
        }
      CHECK(orbit * stabilizer(g, x).order() == g.order());
    }
  }
}

TEST_CASE("center: Sylow 2-subgroup of S8 has the product of transpositions") {
  PermGroup z = center(sylow2_sym(8));
  CHECK(z.order() == 2);
  Permutation sigma = Permutation::transposition(8, 0, 1) * Permutation::transposition(8, 2, 3) *
                      Permutation::transposition(8, 4, 5) * Permutation::transposition(8, 6, 7);
  CHECK(z.contains(sigma));
  CHECK(center(sym(4)).order() == 1);
}

TEST_CASE("conjugate, intersect, product") {
  PermGroup h4 = h_group(4);
  PermGroup stab = stabilizer(h4, 0);
  const Permutation& tau_r = h4.named_generator("tau_r");
  PermGroup meet = intersect(conjugate(stab, tau_r), stab);
  CHECK(meet.order() == 1);  // |H_{3,x}|^2 = 1

  PermGroup span_tau1 = generated_by(16, {{"tau1", h4.named_generator("tau1")}});
  PermGroup prod = product(span_tau1, stab);
  CHECK(prod.order() == 4);
  CHECK(prod.is_internal_direct_product());

  // Non-commuting factors are refused.
  PermGroup s3a = generated_by(3, {{"t01", Permutation::transposition(3, 0, 1)}});
  PermGroup s3b = generated_by(3, {{"t12", Permutation::transposition(3, 1, 2)}});
  CHECK_THROWS_AS(product(s3a, s3b), RangeError);

  CHECK_THROWS_AS(intersect(sym(3), sym(4)), RangeError);
}

TEST_CASE("cosets: indices from the degree-16 block group") {
  PermGroup h4 = h_group(4);
  PermGroup stab = stabilizer(h4, 0);
  PermGroup span_tau1 = generated_by(16, {{"tau1", h4.named_generator("tau1")}});
  CosetSpace cs1 = cosets(h4, product(span_tau1, stab));
  CHECK(cs1.count() == 8);

  const Permutation& tau_r = h4.named_generator("tau_r");
  PermGroup meet = intersect(conjugate(stab, tau_r), stab);
  std::vector<std::pair<std::string, Permutation>> k4gens;
  for (std::size_t i = 0; i < meet.generator_count(); ++i)
    k4gens.emplace_back(meet.generator_name(i), meet.generator(i));
  k4gens.emplace_back("tau_r", tau_r);
  CosetSpace cs4 = cosets(h4, generated_by(16, std::move(k4gens)));
  CHECK(cs4.count() == 16);

  CosetSpace full = cosets(h4, h4);
  CHECK(full.count() == 1);
}

TEST_CASE("cosets: non-subgroup is refused with the generator named") {
  PermGroup h3 = h_group(3);
  PermGroup bad = generated_by(8, {{"odd", Permutation::transposition(8, 0, 1)}});
  try {
    cosets(h3, bad);
    FAIL("expected RangeError");
  } catch (const RangeError& e) {
    CHECK(std::string(e.what()).find("odd") != std::string::npos);
  }
}

TEST_CASE("cosets: the representative action is a group action") {
  PermGroup h4 = h_group(4);
  PermGroup stab = stabilizer(h4, 0);
  PermGroup span_tau1 = generated_by(16, {{"tau1", h4.named_generator("tau1")}});
  CosetSpace cs = cosets(h4, product(span_tau1, stab));
  std::mt19937 rng(2024);
  for (int t = 0; t < 100; ++t) {
    Permutation w1 = random_word(rng, h4, 1 + t % 5);
    Permutation w2 = random_word(rng, h4, 1 + (t * 3) % 5);
    for (int i = 0; i < static_cast<int>(cs.count()); ++i)
      CHECK(cs.act(w1.compose(w2), i) == cs.act(w1, cs.act(w2, i)));
  }
}

TEST_CASE("enumerated element sets are closed under composition and inverse") {
  std::mt19937 rng(808);
  for (const PermGroup& g : {sym(5), sylow2_sym(8), h_group(4)}) {
    const auto& elems = g.elements();
    std::uniform_int_distribution<std::size_t> pick(0, elems.size() - 1);
    for (int t = 0; t < 50; ++t) {
      const Permutation& a = elems[pick(rng)];
      const Permutation& b = elems[pick(rng)];
      CHECK(g.contains(a.compose(b)));
      CHECK(g.contains(a.inverse()));
    }
  }
}

TEST_CASE("enumeration limit: S10 is refused, not guessed") {
  PermGroup s10 = sym(10);
  CHECK_FALSE(s10.enumerable());
  CHECK_THROWS_AS(s10.elements(), TooLargeError);
  // and the failure is remembered
  CHECK_THROWS_AS(s10.order(), TooLargeError);
}

TEST_CASE("words reproduce elements") {
  PermGroup h4 = h_group(4);
  const auto& elems = h4.elements();
  for (std::size_t i = 0; i < elems.size(); ++i) {
    // word = [w0, w1, ...] with element = g[w0] o g[w1] o ... (rightmost first)
    Permutation e = Permutation::identity(h4.degree());
    auto word = h4.word_of(i);
    for (auto it = word.rbegin(); it != word.rend(); ++it) e = h4.generator(*it).compose(e);
    CHECK(e == elems[i]);
  }
}
