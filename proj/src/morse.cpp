#include "gkm/morse.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "gkm/cohomology.hpp"
#include "gkm/errors.hpp"
#include "gkm/hilbert.hpp"
#include "gkm/linalg.hpp"
#include "gkm/subobjects.hpp"

namespace gkm {

Orientation orient(const GkmPair& pair, const VectorQ& xi) {
  if (xi.dim() != pair.dim()) throw PreconditionError("xi has the wrong dimension");
  Orientation o;
  o.xi = xi;
  o.sigma.assign(pair.num_vertices(), 0);
  for (std::size_t e = 0; e < pair.num_edges(); ++e) {
    const Edge& ed = pair.edge(e);
    const Rational f = gkm::pair(ed.forward, xi), b = gkm::pair(ed.backward, xi);
    if (f == 0 || b == 0)
      throw PreconditionError("xi lies on a wall: alpha vanishes on edge " + pair.vertex_id(ed.tail) + "-" +
                              pair.vertex_id(ed.head));
    if (f > 0) o.directed.push_back({ed.tail, ed.head});
    else o.directed.push_back({ed.head, ed.tail});
    if (f < 0) ++o.sigma[ed.tail];
    if (b < 0) ++o.sigma[ed.head];
  }
  return o;
}

namespace {

std::vector<std::vector<std::size_t>> up_adjacency(const GkmPair& pair, const Orientation& o) {
  std::vector<std::vector<std::size_t>> up(pair.num_vertices());
  for (const auto& [lo, hi] : o.directed) up[lo].push_back(hi);
  return up;
}

}  // namespace

CycleCheck is_acyclic(const GkmPair& pair, const Orientation& o) {
  const auto up = up_adjacency(pair, o);
  std::vector<int> color(pair.num_vertices(), 0);
  std::vector<std::size_t> stack;
  CycleCheck out;
  std::function<bool(std::size_t)> dfs = [&](std::size_t v) {
    color[v] = 1;
    stack.push_back(v);
    for (std::size_t w : up[v]) {
      if (color[w] == 1) {
        auto it = std::find(stack.begin(), stack.end(), w);
        out.cycle.assign(it, stack.end());
        return true;
      }
      if (color[w] == 0 && dfs(w)) return true;
    }
    color[v] = 2;
    stack.pop_back();
    return false;
  };
  for (std::size_t v = 0; v < pair.num_vertices(); ++v)
    if (color[v] == 0 && dfs(v)) {
      out.acyclic = false;
      return out;
    }
  return out;
}

std::vector<Rational> longest_path_levels(const GkmPair& pair, const Orientation& o) {
  const auto check = is_acyclic(pair, o);
  if (!check.acyclic) throw PreconditionError("orientation has a directed cycle");
  const auto up = up_adjacency(pair, o);
  std::vector<long> memo(pair.num_vertices(), -1);
  std::function<long(std::size_t)> longest = [&](std::size_t v) {
    if (memo[v] >= 0) return memo[v];
    long best = 0;
    for (std::size_t w : up[v]) best = std::max(best, 1 + longest(w));
    return memo[v] = best;
  };
  std::vector<Rational> out;
  for (std::size_t v = 0; v < pair.num_vertices(); ++v) out.emplace_back(-longest(v));
  return out;
}

std::vector<Rational> positively_oriented_function(const GkmPair& pair, const VectorQ& xi) {
  const Orientation o = orient(pair, xi);
  std::vector<Rational> phi = longest_path_levels(pair, o);
  std::map<Rational, std::vector<std::size_t>> by_level;
  for (std::size_t v = 0; v < phi.size(); ++v) by_level[phi[v]].push_back(v);
  Rational gap = 1;
  if (by_level.size() > 1) {
    std::optional<Rational> min_gap;
    for (auto it = std::next(by_level.begin()); it != by_level.end(); ++it) {
      const Rational g = it->first - std::prev(it)->first;
      if (!min_gap || g < *min_gap) min_gap = g;
    }
    gap = *min_gap;
  }
  const Rational delta = gap / 2;
  for (const auto& [level, vs] : by_level) {
    if (vs.size() < 2) continue;
    const Rational r1 = static_cast<long>(vs.size()) + 1;
    for (std::size_t i = 0; i < vs.size(); ++i) phi[vs[i]] += Rational(static_cast<long>(i) + 1) / r1 * delta;
  }
  if (!is_positively_oriented(pair, xi, phi)) throw IntegrityError("level function is not positively oriented");
  return phi;
}

bool is_positively_oriented(const GkmPair& pair, const VectorQ& xi, const std::vector<Rational>& phi) {
  if (phi.size() != pair.num_vertices()) return false;
  for (const auto& ed : pair.edges()) {
    // p = tail, q = head: (phi(p) - phi(q)) / alpha_{q,e}(xi) > 0
    const Rational a = gkm::pair(ed.backward, xi);
    if (a == 0) return false;
    if (sign(phi[ed.tail] - phi[ed.head]) * sign(a) <= 0) return false;
    const Rational b = gkm::pair(ed.forward, xi);
    if (sign(phi[ed.head] - phi[ed.tail]) * sign(b) <= 0) return false;
  }
  return true;
}

std::vector<std::size_t> betti(const GkmPair& pair, const VectorQ& xi) {
  const Orientation o = orient(pair, xi);
  std::size_t d = 0;
  for (std::size_t v = 0; v < pair.num_vertices(); ++v) d = std::max(d, pair.star(v).size());
  std::vector<std::size_t> b(d + 1, 0);
  for (std::size_t s : o.sigma) ++b[s];
  return b;
}

WallCheck wall_crossing_check(const GkmPair& pair, const std::vector<Chamber>& chambers) {
  WallCheck out;
  const auto classes = arrangement_classes(pair);
  const std::size_t n = pair.dim();
  for (const auto& ch : chambers) {
    for (std::size_t c = 0; c < classes.size(); ++c) {
      // project the witness onto the wall of class c along the normal h = c^T
      const CovectorQ& cv = classes[c].covector();
      VectorQ h(cv.coords);
      Rational hh = 0;
      for (const auto& x : cv.coords) hh += x * x;
      VectorQ w0 = ch.witness;
      const Rational t = classes[c](w0) / hh;
      for (std::size_t i = 0; i < n; ++i) w0.coords[i] -= t * h.coords[i];
      bool generic = true;
      Rational eps = 1;
      for (std::size_t o = 0; o < classes.size() && generic; ++o) {
        if (o == c) continue;
        const Rational at = classes[o](w0);
        if (at == 0) {
          generic = false;
          break;
        }
        const Rational slope = classes[o](h);
        if (slope != 0) {
          Rational abs_at = at < 0 ? Rational(-at) : at;
          Rational abs_slope = slope < 0 ? Rational(-slope) : slope;
          const Rational bound = abs_at / (2 * abs_slope);
          if (bound < eps) eps = bound;
        }
      }
      if (!generic) continue;
      VectorQ minus = w0, plus = w0;
      for (std::size_t i = 0; i < n; ++i) {
        minus.coords[i] -= eps * h.coords[i];
        plus.coords[i] += eps * h.coords[i];
      }
      const Orientation om = orient(pair, minus), op = orient(pair, plus);
      bool ok = true;
      std::vector<char> on_wall(pair.num_vertices(), 0);
      for (std::size_t e = 0; e < pair.num_edges(); ++e) {
        if (!LinearForm(pair.edge(e).forward).parallel_to(classes[c])) continue;
        // orient the pair so that p is the lower end on the minus side
        const auto [p, q] = om.directed[e];
        on_wall[p] = on_wall[q] = 1;
        if (om.sigma[q] != om.sigma[p] + 1) ok = false;
        if (op.sigma[p] != om.sigma[q] || op.sigma[q] != om.sigma[p]) ok = false;
      }
      for (std::size_t v = 0; v < pair.num_vertices(); ++v)
        if (!on_wall[v] && om.sigma[v] != op.sigma[v]) ok = false;
      out = {true, ok, c, minus, plus};
      return out;
    }
  }
  return out;
}

BettiInvariance betti_invariance_check(const GkmPair& pair, int samples, std::uint64_t seed) {
  BettiInvariance out;
  out.chambers = find_chambers(pair, samples, seed);
  for (const auto& ch : out.chambers) {
    out.betti_per_chamber.push_back(betti(pair, ch.witness));
    if (out.betti_per_chamber.back() != out.betti_per_chamber.front()) out.invariant = false;
  }
  if (!out.betti_per_chamber.empty()) out.betti = out.betti_per_chamber.front();
  for (std::size_t k = 0; k < out.betti.size(); ++k)
    if (out.betti[k] != out.betti[out.betti.size() - 1 - k]) out.symmetric = false;
  out.wall = wall_crossing_check(pair, out.chambers);
  return out;
}

MorseReport morse_inequalities(const GkmPair& pair, const VectorQ& xi, int max_k) {
  MorseReport out;
  const std::size_t n = pair.dim();
  out.betti = betti(pair, xi);
  out.phi = positively_oriented_function(pair, xi);
  const Orientation o = orient(pair, xi);

  std::vector<CovectorQ> class_forms;
  for (const auto& c : arrangement_classes(pair)) class_forms.push_back(c.covector());
  // a single class gives the principal ideal it generates
  const int ideal_l = std::min<int>(2, static_cast<int>(class_forms.size()));

  for (int k = 0; k <= max_k; ++k) {
    MorseRow row{k, coh_dimension(pair, k), 0, false};
    for (std::size_t r = 0; r < out.betti.size(); ++r) row.rhs += out.betti[r] * graded_dim(n, k - static_cast<int>(r));
    row.ok = row.lhs <= row.rhs;
    out.ok = out.ok && row.ok;
    out.rows.push_back(row);
  }

  // vertices in increasing phi; H_c = classes supported on phi >= c
  std::vector<std::size_t> order(pair.num_vertices());
  for (std::size_t v = 0; v < order.size(); ++v) order[v] = v;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return out.phi[a] < out.phi[b]; });
  for (int k = 0; k <= max_k; ++k) {
    std::vector<bool> support(pair.num_vertices(), true);
    std::size_t dim_c = coh_dimension(pair, k, &support);
    for (std::size_t p : order) {
      support[p] = false;
      const std::size_t dim_next = coh_dimension(pair, k, &support);
      MorseStep s;
      s.vertex = p;
      s.level = out.phi[p];
      s.sigma = o.sigma[p];
      s.k = k;
      s.difference = dim_c - dim_next;
      const int m = k - static_cast<int>(s.sigma);
      s.upper = graded_dim(n, m);
      s.lower = m < 0 || class_forms.empty() ? 0 : ideal_hilbert(class_forms, ideal_l, m).ideal_dim;
      s.ok = s.lower <= s.difference && s.difference <= s.upper;
      out.ok = out.ok && s.ok;
      out.steps.push_back(s);
      dim_c = dim_next;
    }
  }
  return out;
}

LIndependenceReport l_independence_dimension_check(const GkmPair& pair, const VectorQ& xi, int l, int max_k) {
  LIndependenceReport out;
  out.l = l;
  const std::size_t n = pair.dim();
  for (std::size_t p = 0; p < pair.num_vertices(); ++p)
    if (!l_independent(pair.star_forms(p), l)) out.stars_l_independent = false;

  // subspaces h: annihilators of independent sets of fewer than l star forms
  std::set<std::vector<std::vector<Rational>>> seen;
  for (std::size_t p = 0; p < pair.num_vertices(); ++p) {
    const auto forms = pair.star_forms(p);
    const std::size_t m = forms.size();
    for (std::size_t mask = 1; mask < (std::size_t{1} << m); ++mask) {
      const int size = __builtin_popcountll(mask);
      if (size >= l) continue;
      Matrix rows;
      for (std::size_t i = 0; i < m; ++i)
        if (mask >> i & 1) rows.append_row(forms[i].coords);
      if (rank(rows) != static_cast<std::size_t>(size)) continue;
      const Echelon ech = reduced_echelon(rows);
      std::vector<std::vector<Rational>> key;
      for (std::size_t r = 0; r < ech.reduced.rows(); ++r)
        key.emplace_back(ech.reduced.row(r).begin(), ech.reduced.row(r).end());
      if (!seen.insert(key).second) continue;
      GammaHCheck g;
      for (auto& v : kernel_basis(rows)) g.h_basis.emplace_back(std::move(v));
      for (const auto& comp : subgraph_gamma_h(pair, g.h_basis)) {
        const Orientation oc = orient(comp.pair, xi);
        std::size_t b0 = 0;
        for (std::size_t s : oc.sigma) b0 += s == 0;
        g.component_beta0.push_back(b0);
        if (b0 != 1) g.ok = false;
      }
      out.components_beta0_one = out.components_beta0_one && g.ok;
      out.subspaces.push_back(std::move(g));
    }
  }

  const auto b = betti(pair, xi);
  const auto d = pair.valence().value_or(0);
  const bool hypotheses = out.stars_l_independent && out.components_beta0_one;
  for (int k = 0; k <= max_k; ++k) {
    LIndependenceRow row{k, coh_dimension(pair, k), 0, false, true};
    for (std::size_t r = 0; r < b.size(); ++r) row.rhs += b[r] * graded_dim(n, k - static_cast<int>(r));
    row.asserted = hypotheses && l == static_cast<int>(n) && k > static_cast<int>(d) - static_cast<int>(n);
    if (row.asserted) row.ok = row.lhs == row.rhs;
    out.ok = out.ok && row.ok;
    out.rows.push_back(row);
  }
  return out;
}

}  // namespace gkm
