#pragma once

#include <optional>
#include <vector>

#include "gkm/gkm_pair.hpp"
#include "gkm/validation.hpp"

namespace gkm {

// Vertex and edge indices of a subgraph, each sorted ascending.
struct Subgraph {
  std::vector<std::size_t> vertices;
  std::vector<std::size_t> edges;
  bool operator==(const Subgraph&) const = default;
};

// A subgraph turned into a pair of its own, with maps back to the ambient
// indices (sub index -> ambient index).
struct SubPair {
  GkmPair pair;
  std::vector<std::size_t> vertex_map;
  std::vector<std::size_t> edge_map;

  Subgraph as_subgraph() const { return {vertex_map, edge_map}; }
};

// Restricts alpha to the subgraph; no connection is attached. Throws if an
// edge leaves the vertex set.
SubPair induced_subpair(const GkmPair& pair, const Subgraph& sub);

// The subgraph whose edges satisfy alpha_{p,e}(v) = 0 for every v in
// h_basis, split into connected components ordered by smallest vertex.
// Isolated vertices come back as 0-valent components.
std::vector<SubPair> subgraph_gamma_h(const GkmPair& pair, const std::vector<VectorQ>& h_basis);

// The values (alpha_{p,e}(v_1), ..., alpha_{p,e}(v_m)) over the star of p,
// sorted: the multiset of restrictions of the star forms to h.
std::vector<std::vector<Rational>> restricted_star(const GkmPair& pair, std::size_t p,
                                                   const std::vector<VectorQ>& h_basis);

// Regular valence plus the axial axioms on the restriction.
bool is_compatible_subobject(const GkmPair& pair, const Subgraph& sub);

// If theta carries the star of the subgraph at p onto the star at q for
// every sub-edge pq, the induced connection on induced_subpair(pair, sub).
std::optional<Connection> totally_geodesic_connection(const GkmPair& pair, const Connection& theta,
                                                      const Subgraph& sub);
bool is_totally_geodesic(const GkmPair& pair, const Connection& theta, const Subgraph& sub);

// Builds a Subgraph from vertex ids, taking every edge of pair between them.
Subgraph full_subgraph(const GkmPair& pair, const std::vector<std::size_t>& vertices);

}  // namespace gkm
