#include "gkm/residue.hpp"

#include <set>
#include <stdexcept>

#include "gkm/linalg.hpp"

namespace gkm {

namespace {

void check_poles(std::span<const LinearForm> alphas, const VectorQ& xi, std::size_t n) {
  if (xi.dim() != n) throw std::invalid_argument("residue: xi has the wrong dimension");
  for (std::size_t i = 0; i < alphas.size(); ++i) {
    if (alphas[i].dim() != n) throw std::invalid_argument("residue: form has the wrong dimension");
    if (alphas[i](xi) == 0)
      throw PreconditionError("residue: denominator form " + std::to_string(i) + " vanishes on xi");
  }
}

// Complete homogeneous symmetric polynomials h_0..h_top of the given betas.
std::vector<Polynomial> complete_symmetric(std::size_t n, const std::vector<Polynomial>& betas, int top) {
  std::vector<Polynomial> h(top + 1, Polynomial(n));
  if (top < 0) return h;
  h[0] = Polynomial::constant(n, 1);
  // h_s(b_1..b_m) = h_s(b_1..b_{m-1}) + b_m h_{s-1}(b_1..b_m)
  for (const auto& b : betas)
    for (int s = 1; s <= top; ++s) h[s] += b * h[s - 1];
  return h;
}

}  // namespace

ResidueBasis default_residue_basis(const VectorQ& xi) {
  const std::size_t n = xi.dim();
  std::size_t j = 0;
  while (j < n && xi.coords[j] == 0) ++j;
  if (j == n) throw PreconditionError("residue: xi must be nonzero");
  ResidueBasis b;
  b.x = (1 / xi.coords[j]) * CovectorQ::basis(n, j);
  for (std::size_t i = 0; i < n; ++i)
    if (i != j) b.ys.push_back(CovectorQ::basis(n, i) - xi.coords[i] * b.x);
  return b;
}

Polynomial residue(const Polynomial& f, std::span<const LinearForm> alphas, const VectorQ& xi,
                   const ResidueBasis& basis) {
  const std::size_t n = f.nvars();
  check_poles(alphas, xi, n);
  if (basis.x.dim() != n || basis.ys.size() + 1 != n)
    throw std::invalid_argument("residue: basis has the wrong shape");
  if (pair(basis.x, xi) != 1) throw PreconditionError("residue basis: x(xi) must be 1");
  Matrix b(n, n);
  for (std::size_t c = 0; c < n; ++c) b(0, c) = basis.x.coords[c];
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (basis.ys[k].dim() != n) throw std::invalid_argument("residue: basis has the wrong shape");
    if (pair(basis.ys[k], xi) != 0) throw PreconditionError("residue basis: every y must annihilate xi");
    for (std::size_t c = 0; c < n; ++c) b(k + 1, c) = basis.ys[k].coords[c];
  }
  const auto binv = inverse(b);
  if (!binv) throw PreconditionError("residue basis: covectors are not a basis");

  // Variable 0 is x, variable k is y_k. Covector c = (c B^-1) in these
  // coordinates, so e_i maps to row i of B^-1.
  std::vector<Polynomial> to_adapted;
  for (std::size_t i = 0; i < n; ++i) {
    CovectorQ row = CovectorQ::zero(n);
    for (std::size_t k = 0; k < n; ++k) row.coords[k] = (*binv)(i, k);
    to_adapted.push_back(Polynomial::linear(row));
  }

  const int d = static_cast<int>(alphas.size());
  if (d == 0) return Polynomial(n);  // a polynomial has no residue
  const Polynomial g = f.substitute(to_adapted);
  std::vector<Polynomial> fr = g.coefficients_in(0);  // free of x
  const int top = static_cast<int>(fr.size()) - d;   // largest useful h index
  if (g.is_zero() || top < 0) return Polynomial(n);

  // alpha_i = m_i (x - beta_i) with beta_i free of x
  Rational mprod = 1;
  std::vector<Polynomial> betas;
  for (const auto& a : alphas) {
    const Polynomial adapted = a.as_polynomial().substitute(to_adapted);
    const Rational m = a(xi);
    mprod *= m;
    Polynomial beta = adapted - Polynomial::variable(n, 0) * m;
    betas.push_back(beta * (-1 / m));
  }
  const std::vector<Polynomial> h = complete_symmetric(n, betas, top);

  Polynomial sum(n);
  for (int r = d - 1; r < static_cast<int>(fr.size()); ++r) sum += fr[r] * h[r - d + 1];
  sum *= 1 / mprod;

  std::vector<Polynomial> back;
  back.push_back(Polynomial(n));
  for (const auto& y : basis.ys) back.push_back(Polynomial::linear(y));
  return sum.substitute(back);
}

CovectorQ project_along(const CovectorQ& beta, const CovectorQ& alpha, const VectorQ& xi) {
  const Rational a = pair(alpha, xi);
  if (a == 0) throw PreconditionError("projection: form vanishes on xi");
  return beta - (pair(beta, xi) / a) * alpha;
}

Polynomial project_along(const Polynomial& f, const CovectorQ& alpha, const VectorQ& xi) {
  const std::size_t n = f.nvars();
  std::vector<Polynomial> images;
  for (std::size_t l = 0; l < n; ++l)
    images.push_back(Polynomial::linear(project_along(CovectorQ::basis(n, l), alpha, xi)));
  return f.substitute(images);
}

Polynomial residue(const Polynomial& f, std::span<const LinearForm> alphas, const VectorQ& xi,
                   ResidueMethod method) {
  if (method == ResidueMethod::series) return residue(f, alphas, xi, default_residue_basis(xi));

  const std::size_t n = f.nvars();
  check_poles(alphas, xi, n);
  for (std::size_t i = 0; i < alphas.size(); ++i)
    for (std::size_t j = i + 1; j < alphas.size(); ++j)
      if (alphas[i].parallel_to(alphas[j]))
        throw PreconditionError("residue formula: forms " + std::to_string(i) + " and " + std::to_string(j) +
                                " are parallel");
  LocalizedSum sum(n);
  for (std::size_t i = 0; i < alphas.size(); ++i) {
    const CovectorQ& ai = alphas[i].covector();
    const Rational mi = alphas[i](xi);
    std::vector<LinearForm> den;
    for (std::size_t j = 0; j < alphas.size(); ++j)
      if (j != i) den.emplace_back(project_along(alphas[j].covector(), ai, xi));
    sum.add(project_along(f, ai, xi) * (1 / mi), std::move(den));
  }
  Fraction out = simplify(sum);
  if (!out.is_polynomial()) throw NonPolynomialResult("residue formula: sum did not reduce to a polynomial", out);
  return out.numerator;
}

Polynomial residue_partial_fractions(const Polynomial& f, std::size_t x_var, std::span<const Polynomial> z) {
  const std::size_t n = f.nvars();
  if (x_var >= n) throw std::invalid_argument("partial fractions: variable out of range");
  bool constants = true, linear = true;
  for (const auto& zi : z) {
    if (zi.nvars() != n) throw std::invalid_argument("partial fractions: dimension mismatch");
    if (zi.degree_in(x_var) > 0) throw PreconditionError("partial fractions: poles must not involve x");
    constants = constants && zi.is_constant();
    const auto deg = zi.homogeneous_degree();
    linear = linear && deg && *deg == 1;
  }
  if (!z.empty() && !constants && !linear)
    throw PreconditionError("partial fractions: poles must be all constants or all linear forms");
  for (std::size_t i = 0; i < z.size(); ++i)
    for (std::size_t j = i + 1; j < z.size(); ++j)
      if (z[i] == z[j]) throw PreconditionError("partial fractions: repeated pole");

  auto at = [&](const Polynomial& zi) {
    std::vector<Polynomial> images;
    for (std::size_t l = 0; l < n; ++l) images.push_back(l == x_var ? zi : Polynomial::variable(n, l));
    return f.substitute(images);
  };

  if (constants) {
    Polynomial out(n);
    for (std::size_t i = 0; i < z.size(); ++i) {
      Rational den = 1;
      for (std::size_t j = 0; j < z.size(); ++j)
        if (j != i) den *= z[i].coefficient(Exponents(n, 0)) - z[j].coefficient(Exponents(n, 0));
      out += at(z[i]) * (1 / den);
    }
    return out;
  }

  LocalizedSum sum(n);
  for (std::size_t i = 0; i < z.size(); ++i) {
    std::vector<LinearForm> den;
    for (std::size_t j = 0; j < z.size(); ++j) {
      if (j == i) continue;
      const Polynomial diff = z[i] - z[j];
      CovectorQ c = CovectorQ::zero(n);
      for (const auto& [e, coef] : diff.terms())
        for (std::size_t l = 0; l < n; ++l)
          if (e[l] == 1) c.coords[l] = coef;
      den.emplace_back(std::move(c));
    }
    sum.add(at(z[i]), std::move(den));
  }
  Fraction out = simplify(sum);
  if (!out.is_polynomial())
    throw NonPolynomialResult("partial fractions: sum did not reduce to a polynomial", out);
  return out.numerator;
}

bool is_polynomial_via_residues(const LocalizedSum& sum, const VectorQ& xi, const CovectorQ& theta,
                                int max_power) {
  const std::size_t n = sum.nvars();
  if (theta.dim() != n || xi.dim() != n) throw std::invalid_argument("polynomiality test: dimension mismatch");
  if (pair(theta, xi) != 1) throw PreconditionError("polynomiality test: theta(xi) must be 1");
  const LinearForm th(theta);
  const auto classes = denominator_classes(sum);
  for (const auto& c : classes)
    if (c.parallel_to(th)) throw PreconditionError("polynomiality test: theta is parallel to a denominator form");
  if (max_power < static_cast<int>(classes.size()))
    throw PreconditionError("polynomiality test: max_power below the number of denominator classes");

  const Polynomial t = Polynomial::linear(theta);
  Polynomial tk = Polynomial::constant(n, 1);
  for (int k = 0; k <= max_power; ++k) {
    Polynomial total(n);
    for (const auto& term : sum.terms()) total += residue(tk * term.numerator, term.denominator, xi);
    if (!total.is_zero()) return false;
    tk *= t;
  }
  return true;
}

}  // namespace gkm
