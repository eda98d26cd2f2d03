#include "gkm/subobjects.hpp"

#include <algorithm>
#include <numeric>

#include "gkm/errors.hpp"

namespace gkm {

SubPair induced_subpair(const GkmPair& pair, const Subgraph& sub) {
  std::vector<std::size_t> local(pair.num_vertices(), pair.num_vertices());
  std::vector<std::string> ids;
  for (std::size_t i = 0; i < sub.vertices.size(); ++i) {
    local.at(sub.vertices[i]) = i;
    ids.push_back(pair.vertex_id(sub.vertices[i]));
  }
  std::vector<Edge> edges;
  for (std::size_t e : sub.edges) {
    const Edge& ed = pair.edge(e);
    if (local[ed.tail] == pair.num_vertices() || local[ed.head] == pair.num_vertices())
      throw PreconditionError("subgraph edge " + std::to_string(e) + " leaves the vertex set");
    edges.push_back({local[ed.tail], local[ed.head], ed.forward, ed.backward});
  }
  return SubPair{GkmPair(pair.dim(), std::move(ids), std::move(edges)), sub.vertices, sub.edges};
}

std::vector<SubPair> subgraph_gamma_h(const GkmPair& pair, const std::vector<VectorQ>& h_basis) {
  const std::size_t nv = pair.num_vertices();
  std::vector<std::size_t> parent(nv);
  std::iota(parent.begin(), parent.end(), 0);
  auto root = [&](std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  std::vector<std::size_t> kept;
  for (std::size_t e = 0; e < pair.num_edges(); ++e) {
    const CovectorQ& a = pair.edge(e).forward;
    if (std::all_of(h_basis.begin(), h_basis.end(), [&](const VectorQ& v) { return gkm::pair(a, v) == 0; })) {
      kept.push_back(e);
      const std::size_t x = root(pair.edge(e).tail), y = root(pair.edge(e).head);
      if (x != y) parent[std::max(x, y)] = std::min(x, y);
    }
  }
  std::vector<Subgraph> comps;
  std::vector<std::size_t> comp_of(nv, nv);
  for (std::size_t v = 0; v < nv; ++v) {
    const std::size_t r = root(v);
    if (comp_of[r] == nv) {
      comp_of[r] = comps.size();
      comps.emplace_back();
    }
    comps[comp_of[r]].vertices.push_back(v);
  }
  for (std::size_t e : kept) comps[comp_of[root(pair.edge(e).tail)]].edges.push_back(e);
  std::vector<SubPair> out;
  for (const auto& c : comps) out.push_back(induced_subpair(pair, c));
  return out;
}

std::vector<std::vector<Rational>> restricted_star(const GkmPair& pair, std::size_t p,
                                                   const std::vector<VectorQ>& h_basis) {
  std::vector<std::vector<Rational>> out;
  for (std::size_t e : pair.star(p)) {
    std::vector<Rational> vals;
    for (const auto& v : h_basis) vals.push_back(gkm::pair(pair.axial(p, e), v));
    out.push_back(std::move(vals));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_compatible_subobject(const GkmPair& pair, const Subgraph& sub) {
  try {
    return validate_axial(induced_subpair(pair, sub).pair).ok();
  } catch (const PreconditionError&) {
    return false;
  }
}

std::optional<Connection> totally_geodesic_connection(const GkmPair& pair, const Connection& theta,
                                                      const Subgraph& sub) {
  std::vector<std::size_t> local_edge(pair.num_edges(), pair.num_edges());
  for (std::size_t i = 0; i < sub.edges.size(); ++i) local_edge[sub.edges[i]] = i;
  std::vector<std::size_t> local_vertex(pair.num_vertices(), pair.num_vertices());
  for (std::size_t i = 0; i < sub.vertices.size(); ++i) local_vertex[sub.vertices[i]] = i;

  auto sub_star = [&](std::size_t v) {
    std::vector<std::size_t> s;
    for (std::size_t e : pair.star(v))
      if (local_edge[e] != pair.num_edges()) s.push_back(e);
    return s;
  };

  Connection induced;
  for (std::size_t e : sub.edges) {
    for (std::size_t p : {pair.edge(e).tail, pair.edge(e).head}) {
      const Connection::StarMap& m = theta.at(p, e);
      Connection::StarMap lm;
      for (std::size_t a : sub_star(p)) {
        const std::size_t b = m.at(a);
        if (local_edge[b] == pair.num_edges()) return std::nullopt;
        lm[local_edge[a]] = local_edge[b];
      }
      induced.set(local_vertex[p], local_edge[e], std::move(lm));
    }
  }
  return induced;
}

bool is_totally_geodesic(const GkmPair& pair, const Connection& theta, const Subgraph& sub) {
  return totally_geodesic_connection(pair, theta, sub).has_value();
}

Subgraph full_subgraph(const GkmPair& pair, const std::vector<std::size_t>& vertices) {
  Subgraph s;
  s.vertices = vertices;
  std::sort(s.vertices.begin(), s.vertices.end());
  std::vector<char> in(pair.num_vertices(), 0);
  for (std::size_t v : s.vertices) in.at(v) = 1;
  for (std::size_t e = 0; e < pair.num_edges(); ++e)
    if (in[pair.edge(e).tail] && in[pair.edge(e).head]) s.edges.push_back(e);
  return s;
}

}  // namespace gkm
