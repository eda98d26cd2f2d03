#include "gkm/validation.hpp"

#include <functional>
#include <set>

#include "gkm/errors.hpp"
#include "gkm/linear_form.hpp"

namespace gkm {

namespace {

std::vector<CovectorQ> residues_at(const GkmPair& pair, std::size_t v, const LinearForm& line) {
  std::vector<CovectorQ> out;
  for (std::size_t e : pair.star(v)) out.push_back(reduce_mod_line(pair.axial(v, e), line));
  return out;
}

std::string edge_name(const GkmPair& pair, std::size_t e) {
  return pair.vertex_id(pair.edge(e).tail) + "-" + pair.vertex_id(pair.edge(e).head);
}

}  // namespace

ValidationReport validate_axial(const GkmPair& pair) {
  ValidationReport r;
  const std::size_t d0 = pair.num_vertices() ? pair.star(0).size() : 0;
  for (std::size_t v = 0; v < pair.num_vertices(); ++v)
    if (pair.star(v).size() != d0)
      r.violations.push_back({"valence",
                              "vertex has degree " + std::to_string(pair.star(v).size()) + ", expected " +
                                  std::to_string(d0),
                              {pair.vertex_id(v)},
                              {}});

  for (std::size_t e = 0; e < pair.num_edges(); ++e) {
    const Edge& ed = pair.edge(e);
    if (ed.backward != -ed.forward)
      r.violations.push_back({"1.16", "alpha(q->p) is not -alpha(p->q)",
                              {pair.vertex_id(ed.tail), pair.vertex_id(ed.head)}, {e}});
  }

  for (std::size_t v = 0; v < pair.num_vertices(); ++v) {
    const auto& s = pair.star(v);
    for (std::size_t i = 0; i < s.size(); ++i)
      for (std::size_t j = i + 1; j < s.size(); ++j)
        if (parallel(pair.axial(v, s[i]), pair.axial(v, s[j])))
          r.violations.push_back({"1.17", "parallel axial values at a vertex", {pair.vertex_id(v)}, {s[i], s[j]}});
  }

  for (std::size_t e = 0; e < pair.num_edges(); ++e)
    if (!star_matching(pair, e))
      r.violations.push_back({"1.18", "no residue matching between the stars of " + edge_name(pair, e),
                              {pair.vertex_id(pair.edge(e).tail), pair.vertex_id(pair.edge(e).head)}, {e}});
  return r;
}

std::optional<Connection::StarMap> star_matching(const GkmPair& pair, std::size_t e) {
  const Edge& ed = pair.edge(e);
  const LinearForm line(ed.forward);
  const auto& sp = pair.star(ed.tail);
  const auto& sq = pair.star(ed.head);
  if (sp.size() != sq.size()) return std::nullopt;
  const auto rp = residues_at(pair, ed.tail, line);
  const auto rq = residues_at(pair, ed.head, line);
  const std::size_t m = sp.size();

  std::vector<std::vector<std::size_t>> adj(m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (rp[i] == rq[j]) adj[i].push_back(j);

  std::vector<std::size_t> match_right(m, m);
  std::vector<char> seen;
  std::function<bool(std::size_t)> augment = [&](std::size_t i) {
    for (std::size_t j : adj[i]) {
      if (seen[j]) continue;
      seen[j] = 1;
      if (match_right[j] == m || augment(match_right[j])) {
        match_right[j] = i;
        return true;
      }
    }
    return false;
  };
  for (std::size_t i = 0; i < m; ++i) {
    seen.assign(m, 0);
    if (!augment(i)) return std::nullopt;
  }
  Connection::StarMap out;
  for (std::size_t j = 0; j < m; ++j) out[sp[match_right[j]]] = sq[j];
  return out;
}

ValidationReport validate_connection(const GkmPair& pair, const Connection& theta) {
  ValidationReport r;
  for (std::size_t p = 0; p < pair.num_vertices(); ++p) {
    for (std::size_t e : pair.star(p)) {
      const std::size_t q = pair.other_end(e, p);
      const std::vector<std::string> ends{pair.vertex_id(p), pair.vertex_id(q)};
      const Connection::StarMap* m = theta.find(p, e);
      if (!m) {
        r.violations.push_back({"1.31", "no map along this oriented edge", ends, {e}});
        continue;
      }
      const std::set<std::size_t> dom(pair.star(p).begin(), pair.star(p).end());
      const std::set<std::size_t> cod(pair.star(q).begin(), pair.star(q).end());
      std::set<std::size_t> keys, image;
      for (const auto& [a, b] : *m) {
        keys.insert(a);
        image.insert(b);
      }
      if (keys != dom || image != cod || m->size() != cod.size()) {
        r.violations.push_back({"1.31", "not a bijection between the two stars", ends, {e}});
        continue;
      }
      if (m->at(e) != e) r.violations.push_back({"1.32", "the edge itself is not fixed", ends, {e}});

      const Connection::StarMap* back = theta.find(q, e);
      if (back) {
        for (const auto& [a, b] : *m) {
          auto it = back->find(b);
          if (it == back->end() || it->second != a) {
            r.violations.push_back({"1.33", "the reverse map is not the inverse", ends, {e, a}});
            break;
          }
        }
      }

      const LinearForm line(pair.axial(p, e));
      for (const auto& [a, b] : *m)
        if (reduce_mod_line(pair.axial(p, a), line) != reduce_mod_line(pair.axial(q, b), line))
          r.violations.push_back({"1.34", "residues of matched edges differ modulo the edge form", ends, {e, a, b}});
    }
  }
  return r;
}

Connection infer_connection(const GkmPair& pair) {
  Connection theta;
  for (std::size_t p = 0; p < pair.num_vertices(); ++p) {
    for (std::size_t e : pair.star(p)) {
      const std::size_t q = pair.other_end(e, p);
      const LinearForm line(pair.axial(p, e));
      const auto rp = residues_at(pair, p, line);
      const auto rq = residues_at(pair, q, line);
      const auto& sp = pair.star(p);
      const auto& sq = pair.star(q);
      for (std::size_t i = 0; i < rp.size(); ++i)
        for (std::size_t j = i + 1; j < rp.size(); ++j)
          if (rp[i] == rp[j])
            throw AmbiguousConnection("edges " + std::to_string(sp[i]) + " and " + std::to_string(sp[j]) + " at '" +
                                      pair.vertex_id(p) + "' agree modulo edge " + std::to_string(e) +
                                      "; supply a connection");
      if (sp.size() != sq.size())
        throw NoConnection("stars of '" + pair.vertex_id(p) + "' and '" + pair.vertex_id(q) + "' differ in size");
      Connection::StarMap m;
      for (std::size_t i = 0; i < rp.size(); ++i) {
        std::size_t j = 0;
        while (j < rq.size() && rq[j] != rp[i]) ++j;
        if (j == rq.size())
          throw NoConnection("edge " + std::to_string(sp[i]) + " at '" + pair.vertex_id(p) +
                             "' has no partner modulo edge " + std::to_string(e));
        m[sp[i]] = sq[j];
      }
      theta.set(p, e, std::move(m));
    }
  }
  return theta;
}

Connection connection_of(const GkmPair& pair) {
  if (pair.connection()) return *pair.connection();
  return infer_connection(pair);
}

}  // namespace gkm
