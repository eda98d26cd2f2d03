#include "doctest.h"

#include "gkm/errors.hpp"
#include "gkm/subobjects.hpp"
#include "support.hpp"

using namespace gkm;
using namespace gkm::testing;

namespace {

// dim H^{2k} from the system f(p) - f(q) = alpha(p->q) * g_e with the quotients
// g_e as extra unknowns; g_e is determined by f, so the kernel has dim H^{2k}.
std::size_t oracle_dimension(const GkmPair& g, int k) {
  const std::size_t n = g.dim();
  const auto top = monomials_of_degree(n, k);
  const auto low = monomials_of_degree(n, k - 1);
  const std::size_t fcols = g.num_vertices() * top.size();
  const std::size_t cols = fcols + g.num_edges() * low.size();
  std::map<Exponents, std::size_t> at;
  for (std::size_t i = 0; i < top.size(); ++i) at[top[i]] = i;
  std::vector<std::vector<Rational>> rows;
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    const Edge& ed = g.edge(e);
    std::vector<std::vector<Rational>> block(top.size(), std::vector<Rational>(cols));
    for (std::size_t i = 0; i < top.size(); ++i) {
      block[i][ed.tail * top.size() + i] += 1;
      block[i][ed.head * top.size() + i] -= 1;
    }
    for (std::size_t j = 0; j < low.size(); ++j)
      for (std::size_t v = 0; v < n; ++v) {
        Exponents m = low[j];
        ++m[v];
        block[at.at(m)][fcols + e * low.size() + j] -= ed.forward.coords[v];
      }
    rows.insert(rows.end(), block.begin(), block.end());
  }
  return naive_kernel(rows, cols).size();
}

CohClass values(int k, std::vector<Polynomial> v) { return CohClass{k, std::move(v)}; }

}  // namespace

TEST_SUITE("classes") {
  TEST_CASE("membership examples") {
    const GkmPair g = k2(C({1, 0}));
    CHECK(is_class(g, constant_class(g, 7)).ok);
    CHECK(is_class(g, {P("x1", 2), Polynomial(2)}).ok);
    const ClassCheck bad = is_class(g, {P("x2", 2), Polynomial(2)});
    CHECK_FALSE(bad.ok);
    CHECK(bad.failing_edge == 0u);
  }

  TEST_CASE("ring closure on random classes") {
    Random rnd(71);
    for (const auto& g : {cp2(), cycle4(), gamma4_n3()}) {
      const CohBasis b1 = coh_basis(g, 1), b2 = coh_basis(g, 2);
      for (int t = 0; t < 10; ++t) {
        const CohClass f = rnd.cohomology_class(b1, g.dim(), g.num_vertices());
        const CohClass h = rnd.cohomology_class(b2, g.dim(), g.num_vertices());
        CHECK(is_class(g, multiply(f, h)).ok);
        CHECK(multiply(f, h).degree == 3);
        CHECK(is_class(g, add(multiply(f, f), h)).ok);
        CHECK(is_class(g, power(f, 3, g.dim())).ok);
      }
    }
  }
}

TEST_SUITE("graded dimensions") {
  TEST_CASE("worked examples") {
    const GkmPair e = k2(C({1}));
    CHECK(coh_dimension(e, 0) == 1);
    for (int k = 1; k <= 4; ++k) CHECK(coh_dimension(e, k) == graded_dim(1, k) + graded_dim(1, k - 1));
    const GkmPair g = cp2();
    CHECK(coh_dimension(g, 0) == 1);
    CHECK(coh_dimension(g, 1) == 3);
    CHECK(coh_dimension(g, 2) == 6);
    const GkmPair two(2, {"a", "b", "c", "d"}, {make_edge(0, 1, C({1, 0})), make_edge(2, 3, C({0, 1}))});
    CHECK(coh_dimension(two, 0) == 2);
  }

  TEST_CASE("rank computation agrees with the unknown-quotient oracle") {
    for (const auto& g : {k2(C({1, 2})), cp2(), cycle4(), gamma4_n2(), gamma4_n3(), blow_up(cp2(), 0).pair})
      for (int k = 0; k <= 3; ++k) CHECK(coh_dimension(g, k) == oracle_dimension(g, k));
  }

  TEST_CASE("basis elements are independent classes") {
    const GkmPair g = gamma4_n2();
    const CohBasis b = coh_basis(g, 2);
    CHECK(b.basis.size() == b.dimension);
    for (const auto& f : b.basis) {
      CHECK(is_class(g, f).ok);
      CHECK(f.degree == 2);
    }
  }

  TEST_CASE("support restriction") {
    const GkmPair g = cp2();
    std::vector<bool> only0{true, false, false};
    // classes vanishing at 2 and 3 are multiples of the Thom class of 1
    CHECK(coh_dimension(g, 1, &only0) == 0);
    CHECK(coh_dimension(g, 2, &only0) == 1);
    CHECK(coh_dimension(g, 3, &only0) == 2);
  }
}

TEST_SUITE("characteristic classes") {
  TEST_CASE("Chern classes") {
    const GkmPair e = k2(C({1, 0}));
    CHECK(chern_class(e, 1) == values(1, {P("x1", 2), P("-x1", 2)}));
    const GkmPair g = cp2();
    const CohClass c1 = chern_class(g, 1);
    CHECK(is_class(g, c1).ok);
    const CohClass c2 = chern_class(g, 2);
    for (std::size_t v = 0; v < 3; ++v) CHECK(c2.values[v] == thom_class_vertex(g, v).values[v]);
    CHECK_THROWS_AS(chern_class(g, 3), PreconditionError);
    CHECK_THROWS_AS(chern_class(g, 0), PreconditionError);
  }

  TEST_CASE("symplectic classes") {
    const GkmPair g = cp2();
    // the same linear form at every vertex: every lambda is 0
    const SymplecticCheck flat = is_symplectic(g, CohClass{1, std::vector<Polynomial>(3, P("x1 + x2", 2))});
    CHECK_FALSE(flat.symplectic);
    for (const auto& l : flat.lambdas) CHECK(l == 0);
    const std::vector<CovectorQ> pts{C({0, 0}), C({1, 0}), C({0, 1})};
    CohClass moment{1, {}}, flipped{1, {}};
    for (const auto& a : pts) {
      moment.values.push_back(Polynomial::linear(-a));
      flipped.values.push_back(Polynomial::linear(a));
    }
    // c(p) - c(q) = -(alpha_p - alpha_q) = -alpha(p -> q) = alpha(q -> p)
    const SymplecticCheck s = is_symplectic(g, moment);
    CHECK(s.symplectic);
    for (const auto& l : s.lambdas) CHECK(l == 1);
    const SymplecticCheck f = is_symplectic(g, flipped);
    CHECK_FALSE(f.symplectic);
    for (const auto& l : f.lambdas) CHECK(l == -1);
    CHECK_THROWS_AS(is_symplectic(g, chern_class(g, 2)), PreconditionError);
  }

  TEST_CASE("Thom classes of vertices") {
    const GkmPair e = k2(C({1, 0}));
    CHECK(thom_class_vertex(e, 0) == values(1, {P("x1", 2), Polynomial(2)}));
    const GkmPair g = cp2();
    const CohClass t = thom_class_vertex(g, 0);
    CHECK(t.degree == 2);
    CHECK(t.values[1].is_zero());
    CHECK(t.values[2].is_zero());
    CHECK(is_class(g, t).ok);
  }

  TEST_CASE("Thom classes of sub-objects") {
    const GkmPair g = cp2();
    CHECK(thom_class_subobject(g, Subgraph{{1}, {}}) == thom_class_vertex(g, 1));
    CHECK(thom_class_subobject(g, full_subgraph(g, {0, 1, 2})) == constant_class(g, 1));
    const CohClass t = thom_class_subobject(g, full_subgraph(g, {0, 1}));
    CHECK(t.degree == 1);
    CHECK(t.values[2].is_zero());
    CHECK_FALSE(t.values[0].is_zero());
    CHECK(is_class(g, t).ok);
    const Subgraph path{{0, 1, 2}, {*g.edge_between(0, 1), *g.edge_between(1, 2)}};
    CHECK_THROWS_AS(thom_class_subobject(g, path), PreconditionError);
  }

  TEST_CASE("Gysin maps") {
    const GkmPair g = gamma4_n3();
    const Subgraph s = full_subgraph(g, {0, 1, 3});
    const SubPair sp = induced_subpair(g, s);
    CHECK(gysin(g, s, constant_class(sp.pair, 1)) == thom_class_subobject(g, s));
    Random rnd(72);
    const CohBasis b = coh_basis(sp.pair, 2);
    const CohClass tau = thom_class_subobject(g, s);
    for (int t = 0; t < 5; ++t) {
      const CohClass f1 = rnd.cohomology_class(b, 3, sp.pair.num_vertices());
      const CohClass pushed = gysin(g, s, f1);
      CHECK(is_class(g, pushed).ok);
      CHECK(pushed.degree == 3);
      CHECK(restrict_class(pushed, s) == multiply(restrict_class(tau, s), f1));
    }
    const CohClass at_vertex = gysin(g, Subgraph{{2}, {}}, CohClass{0, {Polynomial::constant(3, 5)}});
    CHECK(at_vertex == scale(Polynomial::constant(3, 5), thom_class_vertex(g, 2)));
    CHECK_THROWS_AS(gysin(g, s, CohClass{1, {P("x1", 3), Polynomial(3), Polynomial(3)}}), PreconditionError);
  }
}

TEST_SUITE("blow-up cohomology") {
  TEST_CASE("CP2 at a vertex") {
    const BlowupCheck c = blowup_class_check(cp2(), 0, 4);
    CHECK(c.tau_is_class);
    CHECK(c.tau.degree == 1);
    CHECK(c.relation_holds);
    CHECK(c.pullbacks_are_classes);
    CHECK(c.pullback_injective);
    CHECK(c.blowup_dims[1] == 4);
    CHECK(c.blowup_dims == std::vector<std::size_t>{1, 4, 8, 12, 16});
    CHECK(c.blowup_dims == c.expected_dims);
    const GkmPair g = cp2();
    CHECK(pullback(constant_class(g, 3), c.blowup.blow_down) == constant_class(c.blowup.pair, 3));
  }

  TEST_CASE("a 3-valent blow-up") {
    const BlowupCheck c = blowup_class_check(gamma4_n3(), 2, 3);
    CHECK(c.tau_is_class);
    CHECK(c.relation_holds);
    CHECK(c.pullbacks_are_classes);
    CHECK(c.pullback_injective);
    CHECK(c.blowup_dims == c.expected_dims);
  }
}
