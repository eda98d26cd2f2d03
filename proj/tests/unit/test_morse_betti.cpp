#include "doctest.h"

#include <set>

#include "gkm/chambers.hpp"
#include "gkm/errors.hpp"
#include "gkm/hilbert.hpp"
#include "gkm/morse.hpp"
#include "support.hpp"

using namespace gkm;
using namespace gkm::testing;

namespace {

// dim of the degree-m part of the ideal generated by products omitting l-1
// forms, recomputed with the naive elimination
std::size_t oracle_ideal_dim(const std::vector<CovectorQ>& fs, int l, int m) {
  const std::size_t n = fs[0].dim(), N = fs.size();
  const auto target = monomials_of_degree(n, m);
  std::map<Exponents, std::size_t> col;
  for (std::size_t i = 0; i < target.size(); ++i) col[target[i]] = i;
  std::vector<std::vector<Rational>> rows;
  for (unsigned mask = 0; mask < (1u << N); ++mask) {
    if (std::popcount(mask) != l - 1) continue;
    Polynomial g = Polynomial::constant(n, 1);
    for (std::size_t i = 0; i < N; ++i)
      if (!(mask & (1u << i))) g *= Polynomial::linear(fs[i]);
    if (g.total_degree() > m) return 0;
    for (const auto& mon : monomials_of_degree(n, m - g.total_degree())) {
      std::vector<Rational> row(target.size());
      const Polynomial shifted = g * Polynomial::monomial(mon, 1);
      for (const auto& [e, c] : shifted.terms()) row[col.at(e)] = c;
      rows.push_back(row);
    }
  }
  if (rows.empty()) return 0;
  // rank = #rows - nullity of the transpose
  std::vector<std::vector<Rational>> t(target.size(), std::vector<Rational>(rows.size()));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < target.size(); ++j) t[j][i] = rows[i][j];
  return rows.size() - naive_kernel(t, rows.size()).size();
}

std::set<std::vector<int>> sign_set(const std::vector<Chamber>& cs) {
  std::set<std::vector<int>> out;
  for (const auto& c : cs) out.insert(c.signs);
  return out;
}

}  // namespace

TEST_SUITE("orientation") {
  TEST_CASE("indices") {
    CHECK(orient(k2(C({1})), VectorQ{1}).sigma == std::vector<std::size_t>{0, 1});
    CHECK(orient(cp2(), VectorQ{1, 2}).sigma == std::vector<std::size_t>{2, 1, 0});
    CHECK(orient(cycle4(), VectorQ{1, 1}).sigma == std::vector<std::size_t>{0, 1, 2, 1});
    CHECK_THROWS_AS(orient(cp2(), VectorQ{1, 1}), PreconditionError);
  }

  TEST_CASE("directed cycles") {
    CHECK(is_acyclic(k2(C({1})), orient(k2(C({1})), VectorQ{1})).acyclic);
    CHECK(is_acyclic(cycle4(), orient(cycle4(), VectorQ{1, 1})).acyclic);
    // deliberately not an axial function: every edge points the same way round
    const GkmPair tri(1, {"a", "b", "c"},
                      {make_edge(0, 1, C({1})), make_edge(1, 2, C({1})), make_edge(2, 0, C({1}))});
    const CycleCheck c = is_acyclic(tri, orient(tri, VectorQ{1}));
    CHECK_FALSE(c.acyclic);
    CHECK(c.cycle.size() == 3);
  }

  TEST_CASE("positively oriented functions") {
    const GkmPair g = cp2();
    const auto phi = positively_oriented_function(g, VectorQ{1, 2});
    CHECK(phi == std::vector<Rational>{0, -1, -2});
    CHECK(is_positively_oriented(g, VectorQ{1, 2}, phi));
    CHECK_FALSE(is_positively_oriented(g, VectorQ{1, 2}, {0, -2, -1}));

    const GkmPair c = cycle4();
    const auto psi = positively_oriented_function(c, VectorQ{1, 1});
    CHECK(psi[0] == -2);
    CHECK(psi[2] == 0);
    // the tied middle vertices are split by 1/6 and 1/3
    const std::set<Rational> middle{psi[1], psi[3]};
    CHECK(middle == std::set<Rational>{Rational(-5, 6), Rational(-2, 3)});
    CHECK(is_positively_oriented(c, VectorQ{1, 1}, psi));
  }

  TEST_CASE("a symplectic class makes every chamber acyclic") {
    const GkmPair g = gamma4_n2();
    const std::vector<CovectorQ> pts{C({0, 0}), C({1, 0}), C({0, 1}), C({Rational(3, 2), Rational(5, 3)})};
    CohClass moment{1, {}};
    for (const auto& a : pts) moment.values.push_back(Polynomial::linear(-a));
    REQUIRE(is_symplectic(g, moment).symplectic);
    for (const auto& ch : enumerate_chambers(arrangement_classes(g), 2))
      CHECK(is_acyclic(g, orient(g, ch.witness)).acyclic);
  }
}

TEST_SUITE("chambers") {
  TEST_CASE("counts") {
    CHECK(enumerate_chambers(arrangement_classes(cp2()), 2).size() == 6);
    CHECK(enumerate_chambers(arrangement_classes(cycle4()), 2).size() == 4);
    CHECK(enumerate_chambers(arrangement_classes(k2(C({1}))), 1).size() == 2);
  }

  TEST_CASE("witnesses lie in their chambers and sampling finds the same chambers") {
    for (const auto& g : {cp2(), gamma4_n2(), gamma4_n3()}) {
      const auto classes = arrangement_classes(g);
      const auto all = enumerate_chambers(classes, g.dim());
      for (const auto& ch : all)
        for (std::size_t i = 0; i < classes.size(); ++i) CHECK(sign(classes[i](ch.witness)) == ch.signs[i]);
      const auto sampled = sample_chambers(classes, g.dim(), 3000, 7);
      for (const auto& s : sign_set(sampled)) CHECK(sign_set(all).count(s) == 1);
    }
  }

  TEST_CASE("strict cone points") {
    const auto p = strict_cone_point({C({1, 0}), C({-1, 1})}, 2);
    REQUIRE(p.has_value());
    CHECK(pair(C({1, 0}), *p) > 0);
    CHECK(pair(C({-1, 1}), *p) > 0);
    CHECK_FALSE(strict_cone_point({C({1, 0}), C({-1, 0})}, 2).has_value());
  }
}

TEST_SUITE("Betti numbers") {
  TEST_CASE("worked examples") {
    CHECK(betti(cp2(), VectorQ{1, 2}) == std::vector<std::size_t>{1, 1, 1});
    CHECK(betti(cycle4(), VectorQ{1, 1}) == std::vector<std::size_t>{1, 2, 1});
    CHECK(betti(blow_up(cp2(), 0).pair, VectorQ{1, 2}) == std::vector<std::size_t>{1, 2, 1});
  }

  TEST_CASE("invariance over chambers") {
    const BettiInvariance a = betti_invariance_check(cp2(), 500, 1);
    CHECK(a.invariant);
    CHECK(a.betti == std::vector<std::size_t>{1, 1, 1});
    CHECK(a.chambers.size() == 6);
    CHECK(a.wall.performed);
    CHECK(a.wall.ok);
    const BettiInvariance b = betti_invariance_check(k2(C({1})), 500, 1);
    CHECK(b.invariant);
    CHECK(b.betti == std::vector<std::size_t>{1, 1});
    CHECK(b.chambers.size() == 2);
    const BettiInvariance c = betti_invariance_check(cycle4(), 500, 1);
    CHECK(c.invariant);
    CHECK(c.chambers.size() == 4);
    for (const auto& bs : c.betti_per_chamber) CHECK(bs == std::vector<std::size_t>{1, 2, 1});
    CHECK(c.symmetric);
  }
}

TEST_SUITE("Morse inequalities") {
  TEST_CASE("CP2 attains equality") {
    const MorseReport r = morse_inequalities(cp2(), VectorQ{1, 2}, 6);
    CHECK(r.ok);
    for (const auto& row : r.rows) CHECK(row.lhs == row.rhs);
    CHECK(r.steps.size() == 7 * 3);
    for (const auto& s : r.steps) CHECK(s.ok);
  }

  TEST_CASE("4-cycle") {
    const MorseReport r = morse_inequalities(cycle4(), VectorQ{1, 1}, 6);
    CHECK(r.ok);
    CHECK(r.rows[0].lhs == 1);
    for (const auto& row : r.rows) CHECK(row.lhs <= row.rhs);
  }

  TEST_CASE("cyclic orientations are rejected") {
    const GkmPair tri(1, {"a", "b", "c"},
                      {make_edge(0, 1, C({1})), make_edge(1, 2, C({1})), make_edge(2, 0, C({1}))});
    CHECK_THROWS_AS(morse_inequalities(tri, VectorQ{1}, 2), PreconditionError);
  }
}

TEST_SUITE("l-independence") {
  TEST_CASE("examples") {
    const std::vector<CovectorQ> fs{C({1, 0}), C({0, 1}), C({1, 1})};
    CHECK(l_independent(fs, 2));
    CHECK_FALSE(l_independent(fs, 3));
    CHECK(l_independent(fs, 1));
    CHECK_FALSE(l_independent({C({1, 0}), C({0, 0})}, 1));
  }

  TEST_CASE("ideal Hilbert function") {
    const std::vector<CovectorQ> fs{C({1, 0}), C({0, 1}), C({1, 1})};
    const HilbertValue h = ideal_hilbert(fs, 2, 2);
    CHECK(h.ideal_dim == 3);
    CHECK(h.ambient_dim == 3);
    CHECK(ideal_hilbert(fs, 2, 0).ideal_dim == 0);
    CHECK(ideal_hilbert(fs, 1, 3).ideal_dim == 1);
    CHECK_THROWS_AS(ideal_hilbert(fs, 4, 2), PreconditionError);
  }

  TEST_CASE("ideal Hilbert function agrees with the naive rank") {
    Random rnd(91);
    for (int t = 0; t < 25; ++t) {
      const std::size_t n = 2 + t % 2, N = n + rnd.integer(0, 2);
      std::vector<CovectorQ> fs;
      for (std::size_t i = 0; i < N; ++i) fs.push_back(rnd.covector(n, 3));
      const int l = static_cast<int>(rnd.integer(1, static_cast<long>(N)));
      const int m = static_cast<int>(rnd.integer(0, 5));
      CHECK(ideal_hilbert(fs, l, m).ideal_dim == oracle_ideal_dim(fs, l, m));
    }
  }

  TEST_CASE("dimension formula under l-independence") {
    const LIndependenceReport a = l_independence_dimension_check(cp2(), VectorQ{1, 2}, 2, 6);
    CHECK(a.stars_l_independent);
    CHECK(a.components_beta0_one);
    CHECK(a.ok);
    for (const auto& row : a.rows) CHECK(row.lhs == row.rhs);
    const LIndependenceReport b = l_independence_dimension_check(gamma4_n3(), VectorQ{1, 3, 9}, 3, 4);
    CHECK(b.ok);
    for (const auto& row : b.rows)
      if (row.k > 0) CHECK(row.asserted);
  }
}
