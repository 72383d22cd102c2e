#include "feec4d/orthopoly.hpp"

#include <stdexcept>

namespace feec4d {

Polynomial legendre(int i) {
  if (i < 0) throw std::invalid_argument("legendre: negative index");
  Polynomial prev = Polynomial::constant(1, Rational(1));
  if (i == 0) return prev;
  Polynomial y = Polynomial::variable(1, 0) * Rational(2);
  y.add_term({0, 0, 0, 0}, Rational(-1));  // y = 2x - 1
  Polynomial cur = y;
  for (int n = 1; n < i; ++n) {
    Polynomial next = (y * cur * Rational(2 * n + 1) - prev * Rational(n)) * Rational(1, n + 1);
    prev = cur;
    cur = next;
  }
  return cur;
}

Polynomial jacobi(int i, int alpha) {
  if (i < 0) throw std::invalid_argument("jacobi: negative index");
  if (alpha < 0) throw std::invalid_argument("jacobi: negative weight exponent");
  if (alpha == 0) return legendre(i);
  Polynomial prev = Polynomial::constant(1, Rational(1));
  if (i == 0) return prev;
  Polynomial y = Polynomial::variable(1, 0) * Rational(2);
  y.add_term({0, 0, 0, 0}, Rational(-1));
  Polynomial cur = (y * Rational(alpha + 2) + Polynomial::constant(1, Rational(alpha))) * Rational(1, 2);
  for (int n = 2; n <= i; ++n) {
    long a = alpha;
    Rational c1(2L * n * (n + a) * (2 * n + a - 2));
    Rational c2((2L * n + a - 1) * a * a);
    Rational c3((2L * n + a - 1) * (2 * n + a) * (2 * n + a - 2));
    Rational c4(2L * (n + a - 1) * (n - 1) * (2 * n + a));
    Polynomial next = ((y * c3 + Polynomial::constant(1, c2)) * cur - prev * c4) * c1.reciprocal();
    prev = cur;
    cur = next;
  }
  return cur;
}

Polynomial integrated_legendre(int i) {
  if (i < 1) throw std::invalid_argument("integrated_legendre: index must be >= 1");
  return legendre(i - 1).antiderivative(0);
}

Polynomial integrated_jacobi(int i, int alpha) {
  if (i < 1) throw std::invalid_argument("integrated_jacobi: index must be >= 1");
  return jacobi(i - 1, alpha).antiderivative(0);
}

Polynomial scaled_compose(const Polynomial& f, int deg, const Polynomial& S, const Polynomial& T) {
  if (f.nvars() != 1) throw std::invalid_argument("scaled_compose: f must be univariate");
  if (deg < f.degree()) throw std::invalid_argument("scaled_compose: degree below deg f");
  if (S.nvars() != T.nvars()) throw std::invalid_argument("scaled_compose: S/T variable mismatch");
  int nvars = S.nvars();
  Polynomial out(nvars);
  // t^deg f(s/t) = sum_j c_j s^j t^(deg-j)
  std::vector<Polynomial> s_pow = {Polynomial::constant(nvars, Rational(1))};
  std::vector<Polynomial> t_pow = {Polynomial::constant(nvars, Rational(1))};
  for (const auto& [m, c] : f.terms()) {
    int j = m[0];
    while (static_cast<int>(s_pow.size()) <= j) s_pow.push_back(s_pow.back() * S);
    while (static_cast<int>(t_pow.size()) <= deg - j) t_pow.push_back(t_pow.back() * T);
    out += s_pow[j] * t_pow[deg - j] * c;
  }
  return out;
}

}  // namespace feec4d
