#include "gkm/localization.hpp"

#include <algorithm>
#include <set>

#include "gkm/chambers.hpp"
#include "gkm/errors.hpp"
#include "gkm/morse.hpp"
#include "gkm/validation.hpp"

namespace gkm {

namespace {

std::vector<LinearForm> star_linear_forms(const GkmPair& pair, std::size_t p) {
  std::vector<LinearForm> out;
  for (const auto& c : pair.star_forms(p)) out.emplace_back(c);
  return out;
}

}  // namespace

LocalizedSum pushforward_sum(const GkmPair& pair, const CohClass& f) {
  if (f.values.size() != pair.num_vertices()) throw PreconditionError("class has the wrong number of values");
  LocalizedSum s(pair.dim());
  for (std::size_t p = 0; p < pair.num_vertices(); ++p) s.add(f.values[p], star_linear_forms(pair, p));
  return s;
}

Polynomial integrate(const GkmPair& pair, const CohClass& f) {
  Fraction r = simplify(pushforward_sum(pair, f));
  if (!r.is_polynomial()) throw NonPolynomialResult("pushforward is not a polynomial", r);
  const int d = static_cast<int>(pair.valence().value_or(0));
  if (!r.numerator.is_homogeneous_of(f.degree - d))
    throw IntegrityError("pushforward has the wrong degree");
  return r.numerator;
}

std::optional<ResidueAgreement> polynomiality_by_residues(const GkmPair& pair, const CohClass& f) {
  const std::size_t n = pair.dim();
  if (n < 2) return std::nullopt;
  const LocalizedSum s = pushforward_sum(pair, f);
  const auto classes = denominator_classes(s);
  const VectorQ xi = generic_vector(pair);
  // theta = c / c(xi) for the first c = (1, t, ..., t^{n-1}) off every class
  for (long t = -1;; --t) {
    CovectorQ c = CovectorQ::zero(n);
    Rational x = 1;
    for (std::size_t i = 0; i < n; ++i) {
      c.coords[i] = x;
      x *= t;
    }
    const Rational at = gkm::pair(c, xi);
    if (at == 0) continue;
    const CovectorQ theta = (1 / at) * c;
    const LinearForm tl(theta);
    if (std::any_of(classes.begin(), classes.end(), [&](const LinearForm& l) { return l.parallel_to(tl); })) continue;
    ResidueAgreement r;
    r.xi = xi;
    r.theta = theta;
    r.agree = is_polynomial_via_residues(s, xi, theta, static_cast<int>(classes.size()));
    return r;
  }
}

bool divisibility_mechanism_check(const GkmPair& pair, const CohClass& f) {
  for (std::size_t e = 0; e < pair.num_edges(); ++e) {
    const Edge& ed = pair.edge(e);
    const LinearForm line(ed.forward);
    if (!reduce_mod_line(f.values[ed.tail] - f.values[ed.head], line).is_zero()) return false;
    const auto match = star_matching(pair, e);
    if (!match) return false;
    for (const auto& [a, b] : *match)
      if (reduce_mod_line(pair.axial(ed.tail, a), line) != reduce_mod_line(pair.axial(ed.head, b), line)) return false;
  }
  return true;
}

void check_level_cut(const GkmPair& pair, const LevelCut& cut) {
  orient(pair, cut.xi);  // throws on a wall
  if (cut.phi.size() != pair.num_vertices()) throw PreconditionError("level function has the wrong size");
  const std::set<Rational> distinct(cut.phi.begin(), cut.phi.end());
  if (distinct.size() != cut.phi.size()) throw PreconditionError("level function must be injective");
  if (!is_positively_oriented(pair, cut.xi, cut.phi)) throw PreconditionError("level function is not positively oriented");
  if (distinct.count(cut.c)) throw PreconditionError("level c is a vertex value");
}

std::vector<std::size_t> cross_section(const GkmPair& pair, const LevelCut& cut) {
  std::vector<std::size_t> out;
  for (std::size_t e = 0; e < pair.num_edges(); ++e) {
    const Edge& ed = pair.edge(e);
    if ((cut.phi[ed.tail] > cut.c) != (cut.phi[ed.head] > cut.c)) out.push_back(e);
  }
  return out;
}

std::map<std::size_t, Polynomial> kirwan_map(const GkmPair& pair, const LevelCut& cut, const CohClass& f) {
  check_level_cut(pair, cut);
  std::map<std::size_t, Polynomial> out;
  for (std::size_t e : cross_section(pair, cut)) {
    const Edge& ed = pair.edge(e);
    const Polynomial a = project_along(f.values[ed.tail], ed.forward, cut.xi);
    const Polynomial b = project_along(f.values[ed.head], ed.forward, cut.xi);
    if (a != b) throw IntegrityError("Kirwan images differ at the two ends of edge " + std::to_string(e));
    out.emplace(e, a);
  }
  return out;
}

JkResult jk_pushforward(const GkmPair& pair, const LevelCut& cut, const CohClass& f) {
  const std::size_t n = pair.dim();
  const auto kirwan = kirwan_map(pair, cut, f);
  LocalizedSum sum(n);
  for (const auto& [e, fe] : kirwan) {
    const Edge& ed = pair.edge(e);
    const std::size_t p = cut.phi[ed.tail] > cut.c ? ed.tail : ed.head;
    const std::size_t q = pair.other_end(e, p);
    const Rational m = gkm::pair(pair.axial(q, e), cut.xi);
    if (m <= 0) throw IntegrityError("edge " + std::to_string(e) + " points the wrong way across the cut");
    const CovectorQ& ape = pair.axial(p, e);
    std::vector<LinearForm> den;
    std::size_t i = 0;
    for (std::size_t ei : pair.star(p)) {
      if (ei == e) continue;
      const CovectorQ sharp = project_along(pair.axial(p, ei), ape, cut.xi);
      if (sharp.is_zero())
        throw PreconditionError("projected form " + std::to_string(i) + " vanishes on edge " + std::to_string(e));
      den.emplace_back(sharp);
      ++i;
    }
    sum.add(fe * (1 / m), std::move(den));
  }
  Fraction r = simplify(sum);
  if (!r.is_polynomial()) throw NonPolynomialResult("cross-section sum is not a polynomial", r);

  JkResult out;
  out.value = r.numerator;
  const int d = static_cast<int>(pair.valence().value_or(0));
  if (!out.value.is_homogeneous_of(f.degree - d + 1)) throw IntegrityError("cross-section sum has the wrong degree");
  out.residue_side = Polynomial(n);
  for (std::size_t v = 0; v < pair.num_vertices(); ++v) {
    if (cut.phi[v] > cut.c) continue;
    Polynomial res = residue(f.values[v], star_linear_forms(pair, v), cut.xi, ResidueMethod::series);
    out.residue_side += res;
    out.per_vertex.emplace(v, std::move(res));
  }
  out.agree = out.value == out.residue_side;
  return out;
}

WallStep wall_crossing_step(const GkmPair& pair, const VectorQ& xi, const std::vector<Rational>& phi,
                            const Rational& c_upper, const Rational& c_lower, const CohClass& f) {
  if (!(c_lower < c_upper)) throw PreconditionError("wall crossing: levels out of order");
  std::vector<std::size_t> between;
  for (std::size_t v = 0; v < phi.size(); ++v)
    if (c_lower < phi[v] && phi[v] < c_upper) between.push_back(v);
  if (between.size() != 1)
    throw PreconditionError("wall crossing: expected exactly one vertex between the levels, found " +
                            std::to_string(between.size()));
  const JkResult up = jk_pushforward(pair, {xi, phi, c_upper}, f);
  const JkResult lo = jk_pushforward(pair, {xi, phi, c_lower}, f);
  WallStep s;
  s.vertex = between[0];
  s.difference = up.value - lo.value;
  s.residue = residue(f.values[s.vertex], star_linear_forms(pair, s.vertex), xi, ResidueMethod::series);
  s.agree = s.difference == s.residue;
  return s;
}

LevelSweep level_sweep(const GkmPair& pair, const VectorQ& xi, const std::vector<Rational>& phi, const CohClass& f) {
  LevelSweep out;
  std::vector<Rational> vals = phi;
  std::sort(vals.begin(), vals.end(), std::greater<>());
  if (vals.empty()) {
    out.total = Polynomial(pair.dim());
    out.ok = true;
    return out;
  }
  out.levels.push_back(vals.front() + 1);
  for (std::size_t i = 0; i + 1 < vals.size(); ++i) out.levels.push_back((vals[i] + vals[i + 1]) / 2);
  out.levels.push_back(vals.back() - 1);

  out.ok = true;
  for (const auto& c : out.levels) {
    out.cuts.push_back(jk_pushforward(pair, {xi, phi, c}, f));
    out.ok = out.ok && out.cuts.back().agree;
  }
  for (std::size_t i = 0; i + 1 < out.levels.size(); ++i) {
    WallStep s;
    s.vertex = 0;
    for (std::size_t v = 0; v < phi.size(); ++v)
      if (out.levels[i + 1] < phi[v] && phi[v] < out.levels[i]) s.vertex = v;
    s.difference = out.cuts[i].value - out.cuts[i + 1].value;
    s.residue = out.cuts[i].per_vertex.at(s.vertex);
    s.agree = s.difference == s.residue;
    out.ok = out.ok && s.agree;
    out.steps.push_back(std::move(s));
  }
  out.total = out.cuts.front().residue_side;
  out.ok = out.ok && out.total.is_zero() && out.cuts.front().value.is_zero() && out.cuts.back().value.is_zero();
  return out;
}

}  // namespace gkm
