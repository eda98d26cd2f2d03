#include "doctest.h"

#include "gkm/errors.hpp"
#include "gkm/subobjects.hpp"
#include "gkm/validation.hpp"
#include "support.hpp"

using namespace gkm;
using namespace gkm::testing;

namespace {

// Same vertex ids, same oriented axial values and, if present, the same
// connection after translating edge indices.
bool equal_by_ids(const GkmPair& a, const GkmPair& b) {
  if (a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges()) return false;
  std::vector<std::size_t> vmap(a.num_vertices()), emap(a.num_edges());
  for (std::size_t v = 0; v < a.num_vertices(); ++v) {
    const auto w = b.find_vertex(a.vertex_id(v));
    if (!w) return false;
    vmap[v] = *w;
  }
  for (std::size_t e = 0; e < a.num_edges(); ++e) {
    const Edge& ed = a.edge(e);
    const auto f = b.edge_between(vmap[ed.tail], vmap[ed.head]);
    if (!f || b.axial(vmap[ed.tail], *f) != ed.forward || b.axial(vmap[ed.head], *f) != ed.backward) return false;
    emap[e] = *f;
  }
  if (a.connection().has_value() != b.connection().has_value()) return false;
  if (!a.connection()) return true;
  for (const auto& [key, m] : a.connection()->maps()) {
    const auto* other = b.connection()->find(vmap[key.first], emap[key.second]);
    if (!other || other->size() != m.size()) return false;
    for (const auto& [x, y] : m)
      if (other->count(emap[x]) == 0 || other->at(emap[x]) != emap[y]) return false;
  }
  return true;
}

}  // namespace

TEST_SUITE("complete graphs") {
  TEST_CASE("CP2 graph") {
    const GkmPair g = cp2();
    CHECK(g.num_vertices() == 3);
    CHECK(g.valence() == 2u);
    CHECK(validate_axial(g).ok());
    CHECK(g.axial(0, *g.edge_between(0, 2)) == C({0, -1}));
  }

  TEST_CASE("single edge in dimension one") {
    const GkmPair g = complete_graph({C({0}), C({1})});
    REQUIRE(g.num_edges() == 1);
    CHECK(g.edge(0).forward == C({-1}));
    CHECK(g.edge(0).backward == C({1}));
    CHECK(validate_axial(g).ok());
  }

  TEST_CASE("collinear triple is rejected") {
    CHECK_THROWS_AS(complete_graph({C({0, 0}), C({1, 1}), C({2, 2})}), PreconditionError);
    CHECK_THROWS_AS(complete_graph({C({0, 0}), C({0, 0})}), PreconditionError);
  }
}

TEST_SUITE("products") {
  TEST_CASE("two edges make the 4-cycle") {
    const ProductResult r = product(k2(C({1, 0})), k2(C({0, 1})));
    CHECK(r.report.ok());
    CHECK(isomorphic(r.pair, cycle4()));
  }

  TEST_CASE("a point is the identity factor") {
    const GkmPair point(2, {"*"}, {});
    const GkmPair g = cp2();
    CHECK(isomorphic(product(g, point).pair, g));
    CHECK(isomorphic(product(point, g).pair, g));
  }

  TEST_CASE("identical factors violate pairwise independence") {
    const ProductResult r = product(k2(C({1, 0})), k2(C({1, 0})));
    CHECK_FALSE(r.report.ok());
    CHECK(r.report.violations[0].axiom == "1.17");
  }

  TEST_CASE("associativity") {
    const GkmPair a = k2(C({1, 2})), b = cp2(), c = k2(C({1, -3}));
    const GkmPair left = product(product(a, b).pair, c).pair;
    const GkmPair right = product(a, product(b, c).pair).pair;
    CHECK(equal_by_ids(left, right));
  }

  TEST_CASE("product connection equals the inferred one") {
    // with alpha = (1,2) the inference is ambiguous: -(1,2) and (-1,1) agree modulo y
    CHECK_THROWS_AS(infer_connection(product(k2(C({1, 2})), cp2()).pair.with_connection(std::nullopt)),
                    AmbiguousConnection);
    const ProductResult r = product(k2(C({2, 3})), cp2());
    CHECK(r.report.ok());
    REQUIRE(r.pair.connection().has_value());
    CHECK(validate_connection(r.pair, *r.pair.connection()).ok());
    CHECK(infer_connection(r.pair.with_connection(std::nullopt)) == *r.pair.connection());
  }
}

TEST_SUITE("blow-up") {
  TEST_CASE("CP2 at a vertex is a quadrilateral") {
    const GkmPair g = cp2();
    const BlowUp b = blow_up(g, 0);
    CHECK(b.pair.num_vertices() == 4);
    CHECK(b.pair.valence() == 2u);
    CHECK(validate_axial(b.pair).ok());
    CHECK(validate_connection(b.pair, *b.pair.connection()).ok());
    CHECK(isomorphic(b.pair, cycle_2valent(4, C({1, 0}), C({0, 1}))) == false);  // different axial values
    for (std::size_t v = 0; v < 4; ++v) CHECK(b.blow_down[v] < 3);
    CHECK(b.singular_locus.vertices.size() == 2);
  }

  TEST_CASE("singular locus is the complete graph on the old star") {
    for (const auto& base : {cp2(), gamma4_n3(), gamma5_n3()}) {
      const std::size_t d = *base.valence();
      const BlowUp b = blow_up(base, 0);
      CHECK(validate_axial(b.pair).ok());
      CHECK(b.singular_locus.vertices.size() == d);
      CHECK(b.singular_locus.edges.size() == d * (d - 1) / 2);
      CHECK(is_compatible_subobject(b.pair, b.singular_locus));
      CHECK(is_totally_geodesic(b.pair, *b.pair.connection(), b.singular_locus));
      // the old star values alpha_i = alpha(p0 -> q_i), in the order of the new vertices
      std::vector<CovectorQ> alphas;
      for (std::size_t v : b.singular_locus.vertices) {
        const std::size_t q = b.blow_down[v];
        REQUIRE(q == 0);
        for (std::size_t e : b.pair.star(v)) {
          const std::size_t w = b.pair.other_end(e, v);
          if (b.blow_down[w] != 0) alphas.push_back(base.axial(0, *base.edge_between(0, b.blow_down[w])));
        }
      }
      REQUIRE(alphas.size() == d);
      // locus values are alpha_j - alpha_i, the negatives of complete_graph's alpha_i - alpha_j
      std::vector<CovectorQ> neg;
      for (const auto& a : alphas) neg.push_back(-a);
      const SubPair locus = induced_subpair(b.pair, b.singular_locus);
      CHECK(isomorphic(locus.pair, complete_graph(neg)));
    }
  }

  TEST_CASE("every vertex of every complete graph can be blown up") {
    for (const auto& base : {cp2(), gamma4_n2(), gamma4_n3()})
      for (std::size_t p = 0; p < base.num_vertices(); ++p) {
        const BlowUp b = blow_up(base, p);
        CHECK(validate_axial(b.pair).ok());
        CHECK(validate_connection(b.pair, *b.pair.connection()).ok());
      }
  }
}

TEST_SUITE("2-valent cycles") {
  TEST_CASE("alternating values") {
    const GkmPair g = cycle4();
    REQUIRE(g.num_edges() == 4);
    CHECK(g.edge(0).forward == C({1, 0}));
    CHECK(g.edge(1).forward == C({0, 1}));
    CHECK(g.edge(2).forward == C({-1, 0}));
    CHECK(g.edge(3).forward == C({0, -1}));
    CHECK(wedge_condition({C({1, 0}), C({0, 1}), C({-1, 0}), C({0, -1})}));
    CHECK_FALSE(wedge_condition({C({1, 0}), C({0, 1}), C({1, 1}), C({0, -1})}));
    CHECK(validate_axial(cycle_2valent(8, C({1, 2}), C({3, -1}))).ok());
  }

  TEST_CASE("other lengths are refused") {
    CHECK_THROWS_AS(cycle_2valent(6, C({1, 0}), C({0, 1})), PreconditionError);
    CHECK_THROWS_AS(cycle_2valent(4, C({1, 0}), C({2, 0})), PreconditionError);
  }
}
