#include "gkm/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace gkm {

namespace {

using IntRows = std::vector<std::vector<Integer>>;

IntRows integer_rows(const Matrix& m) {
  IntRows rows(m.rows(), std::vector<Integer>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    const auto row = m.row(r);
    const Integer d = common_denominator(row);
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const Rational scaled = row[c] * d;
      rows[r][c] = scaled.get_num();
    }
  }
  return rows;
}

// Fraction-free forward elimination in place. Returns the pivot columns; the
// first pivots.size() rows hold the echelon rows.
std::vector<std::size_t> bareiss(IntRows& a, std::size_t cols) {
  std::vector<std::size_t> pivots;
  const std::size_t nrows = a.size();
  Integer prev = 1;
  Integer t;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < nrows; ++col) {
    std::size_t piv = row;
    while (piv < nrows && a[piv][col] == 0) ++piv;
    if (piv == nrows) continue;
    std::swap(a[row], a[piv]);
    const Integer& p = a[row][col];
    for (std::size_t i = row + 1; i < nrows; ++i) {
      const Integer lead = a[i][col];
      for (std::size_t j = col + 1; j < cols; ++j) {
        // a[i][j] = (p * a[i][j] - lead * a[row][j]) / prev, exact
        t = p * a[i][j];
        mpz_submul(t.get_mpz_t(), lead.get_mpz_t(), a[row][j].get_mpz_t());
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][col] = 0;
    }
    prev = p;
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

void Matrix::append_row(std::span<const Rational> values) {
  if (rows_ == 0 && cols_ == 0) cols_ = values.size();
  if (values.size() != cols_) throw std::invalid_argument("Matrix::append_row: width mismatch");
  data_.insert(data_.end(), values.begin(), values.end());
  ++rows_;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
  if (cols_ != rhs.rows_) throw std::invalid_argument("Matrix::operator*: shape mismatch");
  Matrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) += a * rhs(k, j);
    }
  return out;
}

Echelon reduced_echelon(const Matrix& m) {
  IntRows a = integer_rows(m);
  const auto pivots = bareiss(a, m.cols());
  const std::size_t r = pivots.size();

  Matrix red(r, m.cols());
  for (std::size_t i = 0; i < r; ++i) {
    const Rational p(a[i][pivots[i]]);
    for (std::size_t c = pivots[i]; c < m.cols(); ++c)
      if (a[i][c] != 0) red(i, c) = Rational(a[i][c]) / p;
  }
  for (std::size_t i = r; i-- > 0;) {
    for (std::size_t h = 0; h < i; ++h) {
      const Rational f = red(h, pivots[i]);
      if (f == 0) continue;
      for (std::size_t c = pivots[i]; c < m.cols(); ++c)
        if (red(i, c) != 0) red(h, c) -= f * red(i, c);
    }
  }
  return {std::move(red), pivots};
}

std::size_t rank(const Matrix& m) {
  IntRows a = integer_rows(m);
  return bareiss(a, m.cols()).size();
}

std::vector<std::vector<Rational>> kernel_basis(const Matrix& m) {
  const Echelon e = reduced_echelon(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;

  std::vector<std::vector<Rational>> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> v(m.cols());
    v[f] = 1;
    for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.reduced(i, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  const std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  const Echelon e = reduced_echelon(aug);
  if (e.pivots.size() != n || (n > 0 && e.pivots.back() != n - 1)) return std::nullopt;
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
  return inv;
}

}  // namespace gkm
