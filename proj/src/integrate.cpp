#include "feec4d/integrate.hpp"

#include <stdexcept>

namespace feec4d {

int domain_dim(Domain d) {
  switch (d) {
    case Domain::unit_segment:
    case Domain::ref_segment:
      return 1;
    case Domain::unit_triangle:
    case Domain::unit_square:
      return 2;
    case Domain::unit_tet:
    case Domain::unit_tri_x_seg:
    case Domain::ref_tet:
      return 3;
    case Domain::unit_simplex4:
    case Domain::unit_tet_x_seg:
    case Domain::ref_pentatope:
    case Domain::ref_prism:
      return 4;
  }
  throw std::invalid_argument("domain_dim: unknown domain");
}

Rational unit_simplex_moment(int d, const MultiIndex& alpha) {
  if (d < 1 || d > 4) throw std::invalid_argument("unit_simplex_moment: d must be 1..4");
  Rational num(1);
  int total = 0;
  for (int i = 0; i < d; ++i) {
    num *= factorial(alpha[i]);
    total += alpha[i];
  }
  for (int i = d; i < 4; ++i)
    if (alpha[i] != 0) throw std::invalid_argument("unit_simplex_moment: exponent beyond dim");
  return num / factorial(d + total);
}

Rational moment(Domain dom, const MultiIndex& alpha) {
  switch (dom) {
    case Domain::unit_segment:
      return Rational(1, alpha[0] + 1);
    case Domain::unit_triangle:
      return unit_simplex_moment(2, alpha);
    case Domain::unit_tet:
      return unit_simplex_moment(3, alpha);
    case Domain::unit_simplex4:
      return unit_simplex_moment(4, alpha);
    case Domain::unit_square:
      return Rational(1, alpha[0] + 1) * Rational(1, alpha[1] + 1);
    case Domain::unit_tri_x_seg:
      return unit_simplex_moment(2, {alpha[0], alpha[1], 0, 0}) * Rational(1, alpha[2] + 1);
    case Domain::unit_tet_x_seg:
      return unit_simplex_moment(3, {alpha[0], alpha[1], alpha[2], 0}) * Rational(1, alpha[3] + 1);
    default:
      throw std::invalid_argument("moment: reference domains handled by integrate()");
  }
}

namespace {

// x_i = 2 u_i - 1 on every coordinate; returns |det| of the map and the
// substitution polynomials.
std::pair<Rational, std::vector<Polynomial>> dilation_to_unit(int nvars) {
  std::vector<Polynomial> subs;
  Rational jac(1);
  for (int i = 0; i < nvars; ++i) {
    Polynomial s = Polynomial::variable(nvars, i) * Rational(2);
    s.add_term({0, 0, 0, 0}, Rational(-1));
    subs.push_back(s);
    jac *= Rational(2);
  }
  return {jac, subs};
}

}  // namespace

Rational integrate(const Polynomial& p, Domain dom) {
  if (p.nvars() != domain_dim(dom))
    throw std::invalid_argument("integrate: polynomial/domain dimension mismatch");
  Domain unit = dom;
  Polynomial q = p;
  Rational jac(1);
  switch (dom) {
    case Domain::ref_segment:
      unit = Domain::unit_segment;
      break;
    case Domain::ref_tet:
      unit = Domain::unit_tet;
      break;
    case Domain::ref_pentatope:
      unit = Domain::unit_simplex4;
      break;
    case Domain::ref_prism:
      unit = Domain::unit_tet_x_seg;
      break;
    default:
      break;
  }
  if (unit != dom) {
    auto [j, subs] = dilation_to_unit(p.nvars());
    jac = j;
    q = p.compose(subs);
  }
  Rational sum(0);
  for (const auto& [m, c] : q.terms()) sum += c * moment(unit, m);
  return sum * jac;
}

}  // namespace feec4d
