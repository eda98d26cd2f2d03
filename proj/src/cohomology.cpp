#include "gkm/cohomology.hpp"

#include <map>

#include "gkm/errors.hpp"
#include "gkm/linalg.hpp"
#include "gkm/linear_form.hpp"

namespace gkm {

int common_degree(const std::vector<Polynomial>& values, int fallback) {
  std::optional<int> deg;
  for (const auto& v : values) {
    const auto d = v.homogeneous_degree();
    if (!d) throw PreconditionError("class values must be homogeneous");
    if (*d == -1) continue;
    if (deg && *deg != *d) throw PreconditionError("class values have different degrees");
    deg = *d;
  }
  return deg.value_or(fallback);
}

ClassCheck is_class(const GkmPair& pair, const std::vector<Polynomial>& values) {
  if (values.size() != pair.num_vertices()) throw PreconditionError("class has the wrong number of values");
  for (const auto& v : values)
    if (v.nvars() != pair.dim()) throw PreconditionError("class value has the wrong number of variables");
  common_degree(values, 0);
  for (std::size_t e = 0; e < pair.num_edges(); ++e) {
    const Edge& ed = pair.edge(e);
    const Polynomial diff = values[ed.tail] - values[ed.head];
    if (!reduce_mod_line(diff, LinearForm(ed.forward)).is_zero()) return {false, e};
  }
  return {};
}

ClassCheck is_class(const GkmPair& pair, const CohClass& f) {
  if (common_degree(f.values, f.degree) != f.degree) throw PreconditionError("class values do not match its degree");
  return is_class(pair, f.values);
}

namespace {

// Rows of the edge constraints, one column per (vertex, monomial) unknown
// that is not forced to zero.
Matrix constraint_matrix(const GkmPair& pair, const std::vector<Exponents>& mons,
                         const std::vector<std::ptrdiff_t>& column_of_vertex) {
  const std::size_t m = mons.size();
  std::size_t ncols = 0;
  for (auto c : column_of_vertex)
    if (c >= 0) ncols += m;
  Matrix mat;
  std::vector<Rational> row(ncols);
  // reduction of every monomial, cached per parallel class
  std::map<std::vector<Integer>, std::vector<Polynomial>> cache;
  for (std::size_t e = 0; e < pair.num_edges(); ++e) {
    const Edge& ed = pair.edge(e);
    const std::ptrdiff_t cp = column_of_vertex[ed.tail], cq = column_of_vertex[ed.head];
    if (cp < 0 && cq < 0) continue;
    const LinearForm line(ed.forward);
    auto [it, fresh] = cache.try_emplace(line.canonical());
    if (fresh)
      for (const auto& mon : mons) it->second.push_back(reduce_mod_line(Polynomial::monomial(mon, 1), line));
    const auto& red = it->second;
    // equations indexed by monomials of the reduced polynomial
    std::map<Exponents, std::vector<std::pair<std::size_t, Rational>>, GrlexGreater> eqs;
    for (std::size_t j = 0; j < m; ++j)
      for (const auto& [ex, c] : red[j].terms()) {
        if (cp >= 0) eqs[ex].push_back({static_cast<std::size_t>(cp) + j, c});
        if (cq >= 0) eqs[ex].push_back({static_cast<std::size_t>(cq) + j, -c});
      }
    for (const auto& [ex, entries] : eqs) {
      std::fill(row.begin(), row.end(), Rational(0));
      for (const auto& [col, c] : entries) row[col] += c;
      mat.append_row(row);
    }
  }
  if (mat.rows() == 0) mat = Matrix(0, ncols);
  return mat;
}

std::vector<std::ptrdiff_t> columns(const GkmPair& pair, std::size_t m, const std::vector<bool>* support) {
  std::vector<std::ptrdiff_t> col(pair.num_vertices(), -1);
  std::ptrdiff_t next = 0;
  for (std::size_t v = 0; v < pair.num_vertices(); ++v)
    if (!support || (*support).at(v)) {
      col[v] = next;
      next += static_cast<std::ptrdiff_t>(m);
    }
  return col;
}

}  // namespace

CohBasis coh_basis(const GkmPair& pair, int k, const std::vector<bool>* support) {
  CohBasis out;
  out.degree = k;
  if (k < 0) return out;
  const auto mons = monomials_of_degree(pair.dim(), k);
  const auto col = columns(pair, mons.size(), support);
  const Matrix mat = constraint_matrix(pair, mons, col);
  for (const auto& v : kernel_basis(mat)) {
    CohClass c{k, std::vector<Polynomial>(pair.num_vertices(), Polynomial(pair.dim()))};
    for (std::size_t p = 0; p < pair.num_vertices(); ++p) {
      if (col[p] < 0) continue;
      for (std::size_t j = 0; j < mons.size(); ++j) c.values[p].add_term(mons[j], v[col[p] + j]);
    }
    out.basis.push_back(std::move(c));
  }
  out.dimension = out.basis.size();
  return out;
}

std::size_t coh_dimension(const GkmPair& pair, int k, const std::vector<bool>* support) {
  if (k < 0) return 0;
  const auto mons = monomials_of_degree(pair.dim(), k);
  const auto col = columns(pair, mons.size(), support);
  const Matrix mat = constraint_matrix(pair, mons, col);
  return mat.cols() - rank(mat);
}

CohClass constant_class(const GkmPair& pair, const Rational& c) {
  return {0, std::vector<Polynomial>(pair.num_vertices(), Polynomial::constant(pair.dim(), c))};
}

CohClass chern_class(const GkmPair& pair, int k) {
  const auto d = pair.valence();
  if (!d) throw PreconditionError("Chern classes need a regular graph");
  if (k < 1 || k > static_cast<int>(*d)) throw PreconditionError("Chern class index out of range");
  CohClass c{k, {}};
  for (std::size_t p = 0; p < pair.num_vertices(); ++p)
    c.values.push_back(elementary_symmetric(pair.dim(), pair.star_forms(p), k));
  return c;
}

CohClass thom_class_vertex(const GkmPair& pair, std::size_t p) {
  if (p >= pair.num_vertices()) throw PreconditionError("vertex out of range");
  CohClass c{static_cast<int>(pair.star(p).size()), std::vector<Polynomial>(pair.num_vertices(), Polynomial(pair.dim()))};
  c.values[p] = product_of(pair.dim(), pair.star_forms(p));
  return c;
}

CohClass thom_class_subobject(const GkmPair& pair, const Subgraph& sub) {
  if (!is_compatible_subobject(pair, sub)) throw PreconditionError("Thom class: subgraph is not a compatible subobject");
  const auto d = pair.valence();
  if (!d) throw PreconditionError("Thom class needs a regular graph");
  std::vector<char> in_sub(pair.num_edges(), 0);
  for (std::size_t e : sub.edges) in_sub[e] = 1;
  const std::size_t r = sub.vertices.empty() ? 0 : [&] {
    std::size_t cnt = 0;
    for (std::size_t e : pair.star(sub.vertices[0])) cnt += in_sub[e];
    return cnt;
  }();
  CohClass c{static_cast<int>(*d - r), std::vector<Polynomial>(pair.num_vertices(), Polynomial(pair.dim()))};
  for (std::size_t p : sub.vertices) {
    std::vector<CovectorQ> normal;
    for (std::size_t e : pair.star(p))
      if (!in_sub[e]) normal.push_back(pair.axial(p, e));
    c.values[p] = product_of(pair.dim(), normal);
  }
  return c;
}

CohClass gysin(const GkmPair& pair, const Subgraph& sub, const CohClass& f1) {
  const SubPair sp = induced_subpair(pair, sub);
  if (!is_class(sp.pair, f1).ok) throw PreconditionError("Gysin map: input is not a class of the subobject");
  const CohClass tau = thom_class_subobject(pair, sub);
  CohClass out{f1.degree + tau.degree, std::vector<Polynomial>(pair.num_vertices(), Polynomial(pair.dim()))};
  for (std::size_t i = 0; i < sub.vertices.size(); ++i)
    out.values[sub.vertices[i]] = tau.values[sub.vertices[i]] * f1.values[i];
  return out;
}

CohClass restrict_class(const CohClass& f, const Subgraph& sub) {
  CohClass out{f.degree, {}};
  for (std::size_t v : sub.vertices) out.values.push_back(f.values.at(v));
  return out;
}

CohClass pullback(const CohClass& f, const std::vector<std::size_t>& vertex_map) {
  CohClass out{f.degree, {}};
  for (std::size_t v : vertex_map) out.values.push_back(f.values.at(v));
  return out;
}

CohClass multiply(const CohClass& f, const CohClass& g) {
  if (f.values.size() != g.values.size()) throw PreconditionError("classes live on different graphs");
  CohClass out{f.degree + g.degree, {}};
  for (std::size_t i = 0; i < f.values.size(); ++i) out.values.push_back(f.values[i] * g.values[i]);
  return out;
}

CohClass add(const CohClass& f, const CohClass& g) {
  if (f.values.size() != g.values.size()) throw PreconditionError("classes live on different graphs");
  if (f.degree != g.degree) throw PreconditionError("cannot add classes of different degrees");
  CohClass out{f.degree, {}};
  for (std::size_t i = 0; i < f.values.size(); ++i) out.values.push_back(f.values[i] + g.values[i]);
  return out;
}

CohClass scale(const Polynomial& h, const CohClass& f) {
  const auto d = h.homogeneous_degree();
  if (!d) throw PreconditionError("scale: polynomial must be homogeneous");
  CohClass out{f.degree + std::max(*d, 0), {}};
  for (const auto& v : f.values) out.values.push_back(h * v);
  return out;
}

CohClass power(const CohClass& f, unsigned k, std::size_t nvars) {
  CohClass out{0, std::vector<Polynomial>(f.values.size(), Polynomial::constant(nvars, 1))};
  for (unsigned i = 0; i < k; ++i) out = multiply(out, f);
  return out;
}

bool is_zero(const CohClass& f) {
  for (const auto& v : f.values)
    if (!v.is_zero()) return false;
  return true;
}

SymplecticCheck is_symplectic(const GkmPair& pair, const CohClass& c) {
  if (c.degree != 1) throw PreconditionError("symplectic check needs a degree-1 class");
  if (!is_class(pair, c).ok) throw PreconditionError("symplectic check: input is not a class");
  SymplecticCheck out;
  out.symplectic = true;
  for (std::size_t e = 0; e < pair.num_edges(); ++e) {
    const Edge& ed = pair.edge(e);
    // p = tail, q = head: alpha(q -> p) = backward
    const Polynomial diff = c.values[ed.tail] - c.values[ed.head];
    const Polynomial a = Polynomial::linear(ed.backward);
    Rational lambda = 0;
    if (!diff.is_zero()) {
      const auto& [ex, coef] = *a.terms().begin();
      lambda = diff.coefficient(ex) / coef;
    }
    if (diff != a * lambda) throw IntegrityError("symplectic check: difference is not a multiple of the edge form");
    out.lambdas.push_back(lambda);
    if (lambda <= 0) out.symplectic = false;
  }
  return out;
}

BlowupCheck blowup_class_check(const GkmPair& base, std::size_t p0, int max_k) {
  BlowupCheck out{blow_up(base, p0), true, true, {}, false, false, {}, {}, {}};
  const GkmPair& sharp = out.blowup.pair;
  const std::size_t n = base.dim();
  const auto dval = base.valence();
  if (!dval) throw PreconditionError("blow-up check needs a regular graph");
  const int d = static_cast<int>(*dval);

  for (int k = 0; k <= max_k; ++k) {
    const CohBasis b = coh_basis(base, k);
    Matrix images;
    for (const auto& f : b.basis) {
      const CohClass g = pullback(f, out.blowup.blow_down);
      if (!is_class(sharp, g).ok) out.pullbacks_are_classes = false;
      std::vector<Rational> flat;
      const auto mons = monomials_of_degree(n, k);
      for (const auto& v : g.values)
        for (const auto& m : mons) flat.push_back(v.coefficient(m));
      images.append_row(flat);
    }
    if (b.dimension > 0 && rank(images) != b.dimension) out.pullback_injective = false;
    out.base_dims.push_back(b.dimension);
    out.blowup_dims.push_back(coh_dimension(sharp, k));
    std::size_t expected = b.dimension;
    for (int j = 1; j < d; ++j) expected += graded_dim(n, k - j);
    out.expected_dims.push_back(expected);
  }

  out.tau = thom_class_subobject(sharp, out.blowup.singular_locus);
  out.tau_is_class = is_class(sharp, out.tau).ok;

  // sum_{j=0}^{d} (-1)^j (beta^* c_j) tau^{d-j}
  CohClass total{d, std::vector<Polynomial>(sharp.num_vertices(), Polynomial(n))};
  for (int j = 0; j <= d; ++j) {
    CohClass cj = j == 0 ? constant_class(base, 1) : j < d ? chern_class(base, j) : thom_class_vertex(base, p0);
    CohClass term = multiply(pullback(cj, out.blowup.blow_down), power(out.tau, static_cast<unsigned>(d - j), n));
    if (j % 2 == 1) term = scale(Polynomial::constant(n, -1), term);
    term.degree = d;
    total = add(total, term);
  }
  out.relation_holds = is_zero(total);
  return out;
}

}  // namespace gkm
