#include "doctest.h"

#include "gkm/errors.hpp"
#include "gkm/linalg.hpp"
#include "gkm/subobjects.hpp"
#include "gkm/validation.hpp"
#include "support.hpp"

using namespace gkm;
using namespace gkm::testing;

namespace {

bool has_axiom(const ValidationReport& r, const std::string& axiom) {
  return std::any_of(r.violations.begin(), r.violations.end(), [&](const Violation& v) { return v.axiom == axiom; });
}

std::vector<GkmPair> valid_fixtures() {
  return {k2(C({1, 2})), cp2(), cycle4(), gamma4_n2(), gamma4_n3(), gamma5_n3(), blow_up(cp2(), 0).pair};
}

}  // namespace

TEST_SUITE("pair construction") {
  TEST_CASE("structural preconditions") {
    CHECK_THROWS_AS(GkmPair(2, {"a", "a"}, {}), PreconditionError);
    CHECK_THROWS_AS(GkmPair(2, {"a"}, {make_edge(0, 0, C({1, 0}))}), PreconditionError);
    CHECK_THROWS_AS(GkmPair(2, {"a", "b"}, {make_edge(0, 1, C({1, 0})), make_edge(1, 0, C({0, 1}))}),
                    PreconditionError);
    CHECK_THROWS_AS(GkmPair(2, {"a", "b"}, {make_edge(0, 1, C({0, 0}))}), PreconditionError);
    CHECK_THROWS_AS(GkmPair(2, {"a", "b"}, {make_edge(0, 1, C({1, 0, 0}))}), PreconditionError);
    CHECK_THROWS_AS(GkmPair(0, {"a"}, {}), PreconditionError);
  }

  TEST_CASE("accessors") {
    const GkmPair g = cp2();
    CHECK(g.valence() == 2u);
    CHECK(g.vertex("2") == 1);
    CHECK_THROWS_AS(g.vertex("9"), PreconditionError);
    const std::size_t e = *g.edge_between(0, 1);
    CHECK(g.axial(0, e) == C({-1, 0}));
    CHECK(g.axial(1, e) == C({1, 0}));
    CHECK(g.other_end(e, 0) == 1);
  }
}

TEST_SUITE("axial axioms") {
  TEST_CASE("valid examples") {
    CHECK(validate_axial(cp2()).ok());
    CHECK(validate_axial(cycle4()).ok());
    for (const auto& g : valid_fixtures()) CHECK(validate_axial(g).ok());
  }

  TEST_CASE("antisymmetry failure names the edge") {
    Edge e = make_edge(0, 1, C({1}));
    e.backward = C({1});
    const ValidationReport r = validate_axial(GkmPair(1, {"p", "q"}, {e}));
    REQUIRE(has_axiom(r, "1.16"));
    CHECK(r.violations[0].vertices == std::vector<std::string>{"p", "q"});
  }

  TEST_CASE("parallel star forms") {
    const GkmPair g(2, {"a", "b", "c"},
                    {make_edge(0, 1, C({1, 0})), make_edge(0, 2, C({2, 0})), make_edge(1, 2, C({0, 1}))});
    CHECK(has_axiom(validate_axial(g), "1.17"));
  }

  TEST_CASE("stars that do not match modulo the edge form") {
    const GkmPair g(2, {"1", "2", "3"},
                    {make_edge(0, 1, C({1, 0})), make_edge(0, 2, C({0, 1})), make_edge(1, 2, C({1, 2}))});
    const ValidationReport r = validate_axial(g);
    CHECK(has_axiom(r, "1.18"));
    CHECK_FALSE(has_axiom(r, "1.16"));
    CHECK_FALSE(has_axiom(r, "1.17"));
  }

  TEST_CASE("irregular valence") {
    const GkmPair g(2, {"a", "b", "c"}, {make_edge(0, 1, C({1, 0})), make_edge(1, 2, C({0, 1}))});
    CHECK(has_axiom(validate_axial(g), "valence"));
  }
}

TEST_SUITE("connections") {
  TEST_CASE("complete graph connection is the standard one") {
    const GkmPair g = gamma4_n2();
    const Connection theta = infer_connection(g.with_connection(std::nullopt));
    CHECK(theta == *g.connection());
    // theta_{i,j} maps (i,k) to (j,k) and (i,j) to (j,i)
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) {
        if (i == j) continue;
        const std::size_t eij = *g.edge_between(i, j);
        const auto& m = theta.at(i, eij);
        CHECK(m.at(eij) == eij);
        for (std::size_t k = 0; k < 4; ++k)
          if (k != i && k != j) CHECK(m.at(*g.edge_between(i, k)) == *g.edge_between(j, k));
      }
    CHECK(validate_connection(g, theta).ok());
  }

  TEST_CASE("inferred connections are valid on every fixture") {
    for (const auto& g : valid_fixtures()) {
      const Connection theta = connection_of(g);
      CHECK(validate_connection(g, theta).ok());
    }
  }

  TEST_CASE("tampering with one star map breaks the inverse axiom") {
    const GkmPair g = gamma4_n3();
    Connection theta = *g.connection();
    const std::size_t e = *g.edge_between(0, 1);
    Connection::StarMap m = theta.at(0, e);
    const std::size_t a = *g.edge_between(0, 2), b = *g.edge_between(0, 3);
    std::swap(m[a], m[b]);
    theta.set(0, e, m);
    const ValidationReport r = validate_connection(g, theta);
    CHECK(has_axiom(r, "1.33"));
  }

  TEST_CASE("missing star maps are reported") {
    const GkmPair g = cp2();
    Connection partial;
    for (const auto& [key, m] : g.connection()->maps())
      if (key.first != 0) partial.set(key.first, key.second, m);
    CHECK(has_axiom(validate_connection(g, partial), "1.31"));
  }

  TEST_CASE("equal residues make inference ambiguous") {
    // at the origin the forms (0,1) and (1,1) agree modulo x
    const GkmPair g = complete_graph({C({0, 0}), C({-1, 0}), C({0, -1}), C({-1, -1})});
    CHECK(validate_axial(g).ok());
    CHECK_THROWS_AS(infer_connection(g.with_connection(std::nullopt)), AmbiguousConnection);
    CHECK(validate_connection(g, *g.connection()).ok());
  }

  TEST_CASE("blow-up connection satisfies all connection axioms") {
    for (const auto& base : {cp2(), gamma4_n3(), gamma5_n3()}) {
      const BlowUp b = blow_up(base, 0);
      REQUIRE(b.pair.connection().has_value());
      CHECK(validate_connection(b.pair, *b.pair.connection()).ok());
    }
  }
}

TEST_SUITE("sub-objects") {
  TEST_CASE("gamma_h for the annihilator of one edge form of CP2") {
    const GkmPair g = cp2();
    const std::size_t e = *g.edge_between(0, 1);
    // h spanned by (0,1), annihilated by alpha = (-1,0)
    const auto comps = subgraph_gamma_h(g, {VectorQ{0, 1}});
    REQUIRE(comps.size() == 2);
    CHECK(comps[0].as_subgraph() == Subgraph{{0, 1}, {e}});
    CHECK(comps[0].pair.valence() == 1u);
    CHECK(comps[1].as_subgraph() == Subgraph{{2}, {}});
    CHECK(comps[1].pair.valence() == 0u);
  }

  TEST_CASE("gamma_h extremes") {
    const GkmPair g = gamma4_n2();
    const auto all = subgraph_gamma_h(g, {});
    REQUIRE(all.size() == 1);
    CHECK(all[0].pair.num_edges() == g.num_edges());
    const auto none = subgraph_gamma_h(g, {VectorQ{1, 0}, VectorQ{0, 1}});
    CHECK(none.size() == g.num_vertices());
    for (const auto& c : none) CHECK(c.pair.num_edges() == 0);
  }

  TEST_CASE("restricted stars agree along gamma_h components") {
    Random rnd(61);
    for (const auto& g : valid_fixtures()) {
      std::vector<std::vector<VectorQ>> hs;
      // annihilators of each star form, plus random lines
      for (const auto& ed : g.edges()) {
        Matrix row(0, 0);
        row.append_row(ed.forward.coords);
        std::vector<VectorQ> h;
        for (auto& v : kernel_basis(row)) h.emplace_back(std::move(v));
        hs.push_back(std::move(h));
      }
      for (int t = 0; t < 3; ++t) hs.push_back({rnd.vector(g.dim())});
      for (const auto& h : hs)
        for (const auto& comp : subgraph_gamma_h(g, h)) {
          const auto ref = restricted_star(g, comp.vertex_map[0], h);
          for (std::size_t v : comp.vertex_map) CHECK(restricted_star(g, v, h) == ref);
        }
    }
  }

  TEST_CASE("gamma_h components partition the vertices") {
    const GkmPair g = gamma5_n3();
    const auto comps = subgraph_gamma_h(g, {VectorQ{0, 0, 1}});
    std::vector<int> seen(g.num_vertices(), 0);
    for (const auto& c : comps)
      for (std::size_t v : c.vertex_map) ++seen[v];
    for (int s : seen) CHECK(s == 1);
  }

  TEST_CASE("compatibility") {
    const GkmPair g = cp2();
    CHECK(is_compatible_subobject(g, Subgraph{{0, 1}, {*g.edge_between(0, 1)}}));
    CHECK_FALSE(is_compatible_subobject(g, Subgraph{{0, 1, 2}, {*g.edge_between(0, 1), *g.edge_between(1, 2)}}));
    const GkmPair g5 = gamma5_n3();
    CHECK(is_compatible_subobject(g5, full_subgraph(g5, {0, 2, 4})));
  }

  TEST_CASE("totally geodesic sub-objects") {
    const GkmPair g = gamma4_n3();
    const Connection& theta = *g.connection();
    CHECK(is_totally_geodesic(g, theta, full_subgraph(g, {0, 1, 3})));
    CHECK(is_totally_geodesic(g, theta, full_subgraph(g, {0, 1, 2, 3})));
    const Subgraph square{{0, 1, 2, 3},
                          {*g.edge_between(0, 1), *g.edge_between(1, 2), *g.edge_between(2, 3), *g.edge_between(3, 0)}};
    CHECK_FALSE(is_totally_geodesic(g, theta, square));
    const auto induced = totally_geodesic_connection(g, theta, full_subgraph(g, {1, 2, 3}));
    REQUIRE(induced.has_value());
    const SubPair sp = induced_subpair(g, full_subgraph(g, {1, 2, 3}));
    CHECK(validate_connection(sp.pair, *induced).ok());
  }
}
