#include "gkm/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace gkm {

CovectorQ CovectorQ::basis(std::size_t n, std::size_t i) {
  CovectorQ c = zero(n);
  c.coords.at(i) = 1;
  return c;
}

bool CovectorQ::is_zero() const {
  return std::all_of(coords.begin(), coords.end(), [](const Rational& q) { return q == 0; });
}

CovectorQ CovectorQ::operator-() const {
  CovectorQ r = *this;
  for (auto& q : r.coords) q = -q;
  return r;
}

CovectorQ& CovectorQ::operator+=(const CovectorQ& o) {
  if (o.dim() != dim()) throw std::invalid_argument("covector dimension mismatch");
  for (std::size_t i = 0; i < coords.size(); ++i) coords[i] += o.coords[i];
  return *this;
}

CovectorQ& CovectorQ::operator-=(const CovectorQ& o) {
  if (o.dim() != dim()) throw std::invalid_argument("covector dimension mismatch");
  for (std::size_t i = 0; i < coords.size(); ++i) coords[i] -= o.coords[i];
  return *this;
}

CovectorQ& CovectorQ::operator*=(const Rational& s) {
  for (auto& q : coords) q *= s;
  return *this;
}

bool VectorQ::is_zero() const {
  return std::all_of(coords.begin(), coords.end(), [](const Rational& q) { return q == 0; });
}

Rational pair(const CovectorQ& a, const VectorQ& v) {
  if (a.dim() != v.dim()) throw std::invalid_argument("pairing dimension mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.dim(); ++i) s += a.coords[i] * v.coords[i];
  return s;
}

bool parallel(const CovectorQ& a, const CovectorQ& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("covector dimension mismatch");
  // all 2x2 minors vanish
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = i + 1; j < a.dim(); ++j)
      if (a.coords[i] * b.coords[j] != a.coords[j] * b.coords[i]) return false;
  return true;
}

int total_degree(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0); }

bool GrlexGreater::operator()(const Exponents& a, const Exponents& b) const {
  const int da = total_degree(a), db = total_degree(b);
  if (da != db) return da > db;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

std::size_t graded_dim(std::size_t n, int k) {
  if (n == 0) throw std::invalid_argument("graded_dim: n must be positive");
  if (k < 0) return 0;
  // binomial(k + n - 1, n - 1), computed incrementally to stay exact
  Integer b = 1;
  for (std::size_t i = 1; i < n; ++i) {
    b *= static_cast<unsigned long>(k) + i;
    b /= static_cast<unsigned long>(i);
  }
  return b.get_ui();
}

namespace {

void fill_monomials(std::size_t n, int k, std::size_t var, Exponents& cur, std::vector<Exponents>& out) {
  if (var + 1 == n) {
    cur[var] = k;
    out.push_back(cur);
    return;
  }
  for (int e = k; e >= 0; --e) {
    cur[var] = e;
    fill_monomials(n, k - e, var + 1, cur, out);
  }
  cur[var] = 0;
}

}  // namespace

std::vector<Exponents> monomials_of_degree(std::size_t n, int k) {
  std::vector<Exponents> out;
  if (k < 0 || n == 0) return out;
  Exponents cur(n, 0);
  fill_monomials(n, k, 0, cur, out);
  return out;
}

Polynomial Polynomial::constant(std::size_t nvars, const Rational& c) {
  Polynomial p(nvars);
  p.add_term(Exponents(nvars, 0), c);
  return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t i) {
  Exponents e(nvars, 0);
  e.at(i) = 1;
  return monomial(std::move(e), 1);
}

Polynomial Polynomial::monomial(Exponents e, const Rational& c) {
  Polynomial p(e.size());
  p.add_term(e, c);
  return p;
}

Polynomial Polynomial::linear(const CovectorQ& c) {
  Polynomial p(c.dim());
  for (std::size_t i = 0; i < c.dim(); ++i) {
    if (c.coords[i] == 0) continue;
    Exponents e(c.dim(), 0);
    e[i] = 1;
    p.terms_.emplace(std::move(e), c.coords[i]);
  }
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && gkm::total_degree(terms_.begin()->first) == 0);
}

Rational Polynomial::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Exponents& e, const Rational& c) {
  if (e.size() != nvars_) throw std::invalid_argument("add_term: exponent length mismatch");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

int Polynomial::total_degree() const {
  if (terms_.empty()) return -1;
  return gkm::total_degree(terms_.begin()->first);
}

std::optional<int> Polynomial::homogeneous_degree() const {
  if (terms_.empty()) return -1;
  const int d = gkm::total_degree(terms_.begin()->first);
  if (gkm::total_degree(terms_.rbegin()->first) != d) return std::nullopt;
  return d;
}

bool Polynomial::is_homogeneous_of(int k) const {
  const auto d = homogeneous_degree();
  return d && (*d == -1 || *d == k);
}

int Polynomial::degree_in(std::size_t var) const {
  int d = terms_.empty() ? -1 : 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e.at(var));
  return d;
}

std::vector<Polynomial> Polynomial::coefficients_in(std::size_t var) const {
  std::vector<Polynomial> out(std::max(degree_in(var) + 1, 0), Polynomial(nvars_));
  for (const auto& [e, c] : terms_) {
    Exponents rest = e;
    rest[var] = 0;
    out[e[var]].terms_.emplace(std::move(rest), c);
  }
  return out;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.nvars_ != nvars_) throw std::invalid_argument("polynomial variable count mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.nvars_ != nvars_) throw std::invalid_argument("polynomial variable count mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.nvars_ != b.nvars_) throw std::invalid_argument("polynomial variable count mismatch");
  Polynomial r(a.nvars_);
  Exponents e(a.nvars_);
  Rational c;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      c = ca * cb;
      r.add_term(e, c);
    }
  return r;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) { return *this = *this * o; }

Polynomial& Polynomial::operator*=(const Rational& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= s;
  return *this;
}

Polynomial Polynomial::pow(unsigned k) const {
  Polynomial result = constant(nvars_, 1);
  Polynomial base = *this;
  while (k > 0) {
    if (k & 1u) result *= base;
    k >>= 1u;
    if (k > 0) base *= base;
  }
  return result;
}

Rational Polynomial::evaluate(std::span<const Rational> point) const {
  if (point.size() != nvars_) throw std::invalid_argument("evaluate: point dimension mismatch");
  Rational sum = 0;
  Rational term;
  for (const auto& [e, c] : terms_) {
    term = c;
    for (std::size_t i = 0; i < nvars_; ++i)
      for (int k = 0; k < e[i]; ++k) term *= point[i];
    sum += term;
  }
  return sum;
}

Polynomial Polynomial::substitute(std::span<const Polynomial> images) const {
  if (images.size() != nvars_) throw std::invalid_argument("substitute: wrong number of images");
  std::size_t out_vars = nvars_;
  if (!images.empty()) {
    out_vars = images[0].nvars();
    for (const auto& im : images)
      if (im.nvars() != out_vars) throw std::invalid_argument("substitute: image variable counts differ");
  }
  // powers[i][k] = images[i]^k
  std::vector<std::vector<Polynomial>> powers(nvars_);
  for (std::size_t i = 0; i < nvars_; ++i) {
    const int d = degree_in(i);
    powers[i].push_back(constant(out_vars, 1));
    for (int k = 1; k <= d; ++k) powers[i].push_back(powers[i].back() * images[i]);
  }
  Polynomial result(out_vars);
  for (const auto& [e, c] : terms_) {
    Polynomial t = constant(out_vars, c);
    for (std::size_t i = 0; i < nvars_; ++i)
      if (e[i] > 0) t *= powers[i][e[i]];
    result += t;
  }
  return result;
}

std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "x" + std::to_string(i + 1);
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) {
      out += to_string(mag);
    } else if (mag == 1) {
      out += mono;
    } else {
      out += to_string(mag) + "*" + mono;
    }
  }
  return out;
}

Polynomial product_of(std::size_t n, std::span<const CovectorQ> forms) {
  Polynomial p = Polynomial::constant(n, 1);
  for (const auto& f : forms) p *= Polynomial::linear(f);
  return p;
}

Polynomial elementary_symmetric(std::size_t n, std::span<const CovectorQ> forms, int k) {
  // e[j] after processing the first i forms; e_j(new) = e_j + f * e_{j-1}
  std::vector<Polynomial> e(std::max(k, 0) + 1, Polynomial(n));
  if (k < 0) return Polynomial(n);
  e[0] = Polynomial::constant(n, 1);
  for (const auto& f : forms) {
    const Polynomial lf = Polynomial::linear(f);
    for (int j = k; j >= 1; --j) e[j] += lf * e[j - 1];
  }
  return e[k];
}

}  // namespace gkm
