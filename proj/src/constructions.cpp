#include "gkm/constructions.hpp"

#include "gkm/errors.hpp"

namespace gkm {

namespace {

std::string triple(std::size_t i, std::size_t j, std::size_t k) {
  return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "," + std::to_string(k + 1) + ")";
}

std::optional<Connection> try_connection(const GkmPair& g) {
  try {
    return connection_of(g);
  } catch (const AmbiguousConnection&) {
    return std::nullopt;
  }
}

}  // namespace

GkmPair complete_graph(const std::vector<CovectorQ>& alphas) {
  const std::size_t N = alphas.size();
  if (N == 0) throw PreconditionError("complete graph needs at least one vertex");
  const std::size_t n = alphas[0].dim();
  for (const auto& a : alphas)
    if (a.dim() != n) throw PreconditionError("complete graph: alphas differ in dimension");
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) {
      if (j == i) continue;
      if (alphas[i] == alphas[j])
        throw PreconditionError("complete graph: alpha_" + std::to_string(i + 1) + " equals alpha_" +
                                std::to_string(j + 1));
      for (std::size_t k = j + 1; k < N; ++k)
        if (k != i && parallel(alphas[i] - alphas[j], alphas[i] - alphas[k]))
          throw PreconditionError("complete graph: collinear triple " + triple(i, j, k));
    }

  std::vector<std::string> ids;
  for (std::size_t i = 0; i < N; ++i) ids.push_back(std::to_string(i + 1));
  std::vector<std::vector<std::size_t>> idx(N, std::vector<std::size_t>(N));
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = i + 1; j < N; ++j) {
      idx[i][j] = idx[j][i] = edges.size();
      edges.push_back(make_edge(i, j, alphas[i] - alphas[j]));
    }
  Connection theta;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) {
      if (i == j) continue;
      Connection::StarMap m;
      m[idx[i][j]] = idx[i][j];
      for (std::size_t k = 0; k < N; ++k)
        if (k != i && k != j) m[idx[i][k]] = idx[j][k];
      theta.set(i, idx[i][j], std::move(m));
    }
  return GkmPair(n, std::move(ids), std::move(edges), std::move(theta));
}

ProductResult product(const GkmPair& a, const GkmPair& b) {
  if (a.dim() != b.dim()) throw PreconditionError("product: factors live in different dimensions");
  const std::size_t na = a.num_vertices(), nb = b.num_vertices();
  auto vid = [&](std::size_t p, std::size_t q) { return p * nb + q; };
  std::vector<std::string> ids;
  for (std::size_t p = 0; p < na; ++p)
    for (std::size_t q = 0; q < nb; ++q) ids.push_back(a.vertex_id(p) + "," + b.vertex_id(q));

  std::vector<Edge> edges;
  // first-factor edge e at q has index q * |E_a| + e; second-factor edge f at p
  // has index |E_a| * nb + p * |E_b| + f
  const std::size_t ea = a.num_edges(), eb = b.num_edges();
  auto first = [&](std::size_t e, std::size_t q) { return q * ea + e; };
  auto second = [&](std::size_t f, std::size_t p) { return ea * nb + p * eb + f; };
  for (std::size_t q = 0; q < nb; ++q)
    for (std::size_t e = 0; e < ea; ++e) {
      const Edge& ed = a.edge(e);
      edges.push_back({vid(ed.tail, q), vid(ed.head, q), ed.forward, ed.backward});
    }
  for (std::size_t p = 0; p < na; ++p)
    for (std::size_t f = 0; f < eb; ++f) {
      const Edge& ed = b.edge(f);
      edges.push_back({vid(p, ed.tail), vid(p, ed.head), ed.forward, ed.backward});
    }

  std::optional<Connection> theta;
  const auto ta = try_connection(a), tb = try_connection(b);
  if (ta && tb) {
    theta.emplace();
    for (std::size_t p = 0; p < na; ++p)
      for (std::size_t q = 0; q < nb; ++q) {
        for (std::size_t e : a.star(p)) {
          const std::size_t p2 = a.other_end(e, p);
          Connection::StarMap m;
          for (const auto& [x, y] : ta->at(p, e)) m[first(x, q)] = first(y, q);
          for (std::size_t f : b.star(q)) m[second(f, p)] = second(f, p2);
          theta->set(vid(p, q), first(e, q), std::move(m));
        }
        for (std::size_t f : b.star(q)) {
          const std::size_t q2 = b.other_end(f, q);
          Connection::StarMap m;
          for (const auto& [x, y] : tb->at(q, f)) m[second(x, p)] = second(y, p);
          for (std::size_t e : a.star(p)) m[first(e, q)] = first(e, q2);
          theta->set(vid(p, q), second(f, p), std::move(m));
        }
      }
  }
  GkmPair out(a.dim(), std::move(ids), std::move(edges), std::move(theta));
  ValidationReport report = validate_axial(out);
  return {std::move(out), std::move(report)};
}

BlowUp blow_up(const GkmPair& pair, std::size_t p0) {
  if (p0 >= pair.num_vertices()) throw PreconditionError("blow-up: vertex out of range");
  const auto& star0 = pair.star(p0);
  const std::size_t d = star0.size();
  std::vector<CovectorQ> alpha;
  std::vector<std::size_t> q;
  for (std::size_t e : star0) {
    alpha.push_back(pair.axial(p0, e));
    q.push_back(pair.other_end(e, p0));
  }
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = j + 1; k < d; ++k)
        if (j != i && k != i && parallel(alpha[j] - alpha[i], alpha[k] - alpha[i]))
          throw PreconditionError("blow-up: alpha_j - alpha_i and alpha_k - alpha_i parallel for (i,j,k) = " +
                                  triple(i, j, k));

  std::optional<Connection> base_theta;
  if (pair.connection()) base_theta = *pair.connection();
  else base_theta = infer_connection(pair);  // may throw AmbiguousConnection

  // vertex renumbering
  const std::size_t nv = pair.num_vertices();
  std::vector<std::size_t> new_index(nv, 0);
  std::vector<std::string> ids;
  std::vector<std::size_t> blow_down;
  for (std::size_t v = 0; v < nv; ++v) {
    if (v == p0) continue;
    new_index[v] = ids.size();
    ids.push_back(pair.vertex_id(v));
    blow_down.push_back(v);
  }
  std::vector<std::size_t> pv(d);
  for (std::size_t i = 0; i < d; ++i) {
    pv[i] = ids.size();
    ids.push_back(pair.vertex_id(p0) + "#" + std::to_string(i + 1));
    blow_down.push_back(p0);
  }

  std::vector<std::size_t> pos_in_star(pair.num_edges(), d);
  for (std::size_t i = 0; i < d; ++i) pos_in_star[star0[i]] = i;

  std::vector<Edge> edges;
  for (std::size_t e = 0; e < pair.num_edges(); ++e) {
    const Edge& ed = pair.edge(e);
    const std::size_t i = pos_in_star[e];
    if (i == d) {
      edges.push_back({new_index[ed.tail], new_index[ed.head], ed.forward, ed.backward});
    } else {
      edges.push_back(make_edge(pv[i], new_index[q[i]], alpha[i]));
    }
  }
  std::vector<std::vector<std::size_t>> loc(d, std::vector<std::size_t>(d));
  Subgraph locus;
  for (std::size_t i = 0; i < d; ++i) locus.vertices.push_back(pv[i]);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) {
      loc[i][j] = loc[j][i] = edges.size();
      locus.edges.push_back(edges.size());
      edges.push_back(make_edge(pv[i], pv[j], alpha[j] - alpha[i]));
    }

  Connection theta;
  // edges away from p0 keep the base maps (edge indices are unchanged)
  for (const auto& [key, m] : base_theta->maps()) {
    const auto [v, e] = key;
    if (v == p0 || pos_in_star[e] != d) continue;
    theta.set(new_index[v], e, m);
  }
  for (std::size_t i = 0; i < d; ++i) {
    const std::size_t ei = star0[i];
    // along (q_i -> p_i)
    {
      Connection::StarMap m;
      for (const auto& [a, b] : base_theta->at(q[i], ei)) {
        if (a == ei) m[ei] = ei;
        else m[a] = loc[i][pos_in_star[b]];
      }
      theta.set(new_index[q[i]], ei, std::move(m));
    }
    // along (p_i -> q_i)
    {
      Connection::StarMap m;
      m[ei] = ei;
      const auto& base = base_theta->at(p0, ei);
      for (std::size_t j = 0; j < d; ++j)
        if (j != i) m[loc[i][j]] = base.at(star0[j]);
      theta.set(pv[i], ei, std::move(m));
    }
    // along (p_i -> p_j)
    for (std::size_t j = 0; j < d; ++j) {
      if (j == i) continue;
      Connection::StarMap m;
      m[star0[i]] = star0[j];
      m[loc[i][j]] = loc[i][j];
      for (std::size_t k = 0; k < d; ++k)
        if (k != i && k != j) m[loc[i][k]] = loc[j][k];
      theta.set(pv[i], loc[i][j], std::move(m));
    }
  }
  GkmPair out(pair.dim(), std::move(ids), std::move(edges), std::move(theta));
  return {std::move(out), std::move(blow_down), std::move(locus)};
}

bool wedge_condition(const std::vector<CovectorQ>& a) {
  const std::size_t N = a.size();
  auto wedge = [](const CovectorQ& u, const CovectorQ& v) {
    std::vector<Rational> minors;
    for (std::size_t k = 0; k < u.dim(); ++k)
      for (std::size_t l = k + 1; l < u.dim(); ++l) minors.push_back(u.coords[k] * v.coords[l] - u.coords[l] * v.coords[k]);
    return minors;
  };
  for (std::size_t i = 0; i < N; ++i)
    if (wedge(a[(i + 1) % N], a[i]) != wedge(a[i], a[(i + N - 1) % N])) return false;
  return true;
}

GkmPair cycle_2valent(std::size_t N, const CovectorQ& a1, const CovectorQ& a2) {
  if (N == 0 || N % 4 != 0) throw PreconditionError("2-valent cycle: N must be a positive multiple of 4");
  if (a1.dim() != a2.dim() || a1.dim() < 2) throw PreconditionError("2-valent cycle: need two covectors in n >= 2");
  if (parallel(a1, a2)) throw PreconditionError("2-valent cycle: a1 and a2 must be linearly independent");
  const std::size_t n = a1.dim();
  std::vector<std::string> ids;
  std::vector<CovectorQ> vals;
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < N; ++i) {
    ids.push_back("p" + std::to_string(i + 1));
    const CovectorQ& base = i % 2 == 0 ? a1 : a2;
    vals.push_back((i / 2) % 2 == 0 ? base : -base);
  }
  if (!wedge_condition(vals)) throw IntegrityError("2-valent cycle: wedge condition fails");
  for (std::size_t i = 0; i < N; ++i) edges.push_back(make_edge(i, (i + 1) % N, vals[i]));
  // edge i joins p_{i+1} -> p_{i+2}; along it the incoming edge goes to the outgoing one
  Connection theta;
  for (std::size_t i = 0; i < N; ++i) {
    const std::size_t prev = (i + N - 1) % N, next = (i + 1) % N;
    theta.set(i, i, {{i, i}, {prev, next}});
    theta.set(next, i, {{i, i}, {next, prev}});
  }
  return GkmPair(n, std::move(ids), std::move(edges), std::move(theta));
}

}  // namespace gkm
