#include "feec4d/linalg.hpp"

#include <stdexcept>

namespace feec4d {

void RowBasis::reduce(RatVec& v) const {
  if (v.size() != width_) throw std::invalid_argument("RowBasis: width mismatch");
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const Rational& f = v[pivots_[r]];
    if (f.is_zero()) continue;
    Rational factor = f;  // pivot of stored row is 1
    const RatVec& row = rows_[r];
    for (std::size_t c = 0; c < width_; ++c) {
      if (!row[c].is_zero()) v[c] -= factor * row[c];
    }
  }
}

bool RowBasis::insert(RatVec v) {
  reduce(v);
  std::size_t p = width_;
  for (std::size_t c = 0; c < width_; ++c) {
    if (!v[c].is_zero()) {
      p = c;
      break;
    }
  }
  if (p == width_) return false;
  Rational inv = v[p].reciprocal();
  for (std::size_t c = p; c < width_; ++c) v[c] *= inv;
  // Eliminate the new pivot column from the stored rows to keep RREF shape.
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    Rational f = rows_[r][p];
    if (f.is_zero()) continue;
    for (std::size_t c = 0; c < width_; ++c) {
      if (!v[c].is_zero()) rows_[r][c] -= f * v[c];
    }
  }
  rows_.push_back(std::move(v));
  pivots_.push_back(p);
  return true;
}

bool RowBasis::contains(RatVec v) const {
  reduce(v);
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

int rank_of(const RatMat& a) {
  if (a.empty()) return 0;
  RowBasis rb(a[0].size());
  for (const auto& row : a) rb.insert(row);
  return rb.rank();
}

Rational det(const RatMat& a) {
  std::size_t n = a.size();
  for (const auto& row : a)
    if (row.size() != n) throw std::invalid_argument("det: matrix not square");
  if (n == 0) return Rational(1);

  // Clear denominators row by row, tracking the accumulated scale factor.
  std::vector<std::vector<mpz_class>> m(n, std::vector<mpz_class>(n));
  mpq_class scale(1);
  for (std::size_t i = 0; i < n; ++i) {
    mpz_class l(1);
    for (std::size_t j = 0; j < n; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a[i][j].den().get_mpz_t());
    for (std::size_t j = 0; j < n; ++j) {
      mpz_class q = l / a[i][j].den();
      m[i][j] = a[i][j].num() * q;
    }
    scale *= mpq_class(l);
  }

  // Fraction-free Bareiss elimination; every division below is exact.
  int sign = 1;
  mpz_class prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t swap_row = n;
      for (std::size_t i = k + 1; i < n; ++i) {
        if (m[i][k] != 0) {
          swap_row = i;
          break;
        }
      }
      if (swap_row == n) return Rational(0);
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        mpz_class t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  mpq_class d(m[n - 1][n - 1] * sign);
  d /= scale;
  return Rational(d);
}

RatMat kernel_basis(const RatMat& a) {
  if (a.empty()) return {};
  std::size_t cols = a[0].size();
  RowBasis rb(cols);
  for (const auto& row : a) rb.insert(row);

  std::vector<bool> is_pivot(cols, false);
  for (std::size_t p : rb.pivots()) is_pivot[p] = true;

  RatMat kernel;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    RatVec x(cols, Rational(0));
    x[f] = Rational(1);
    for (std::size_t r = 0; r < rb.rows().size(); ++r) {
      // Pivot column value of row r forces x[pivot] = -row[f].
      x[rb.pivots()[r]] = -rb.rows()[r][f];
    }
    kernel.push_back(std::move(x));
  }
  return kernel;
}

bool span_contains(const RatMat& a, const RatMat& b) {
  if (b.empty()) return true;
  std::size_t width = b[0].size();
  RowBasis rb(a.empty() ? width : a[0].size());
  for (const auto& row : a) rb.insert(row);
  for (const auto& row : b)
    if (!rb.contains(row)) return false;
  return true;
}

bool span_equal(const RatMat& a, const RatMat& b) {
  return span_contains(a, b) && span_contains(b, a);
}

}  // namespace feec4d
