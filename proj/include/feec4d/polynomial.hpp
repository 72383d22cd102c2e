#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "feec4d/rational.hpp"

namespace feec4d {

/// Exponent tuple of a monomial in up to four variables.  Unused trailing
/// variables carry exponent zero.
using MultiIndex = std::array<int, 4>;

inline int total_degree(const MultiIndex& m) { return m[0] + m[1] + m[2] + m[3]; }

/// Monomial order used throughout: ascending total degree, ties broken by
/// ascending lexicographic comparison of the exponent tuple.
struct MonomialLess {
  bool operator()(const MultiIndex& a, const MultiIndex& b) const {
    int da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    return a < b;
  }
};

/// Sparse polynomial with exact rational coefficients in `nvars` variables
/// (1 <= nvars <= 4).  Terms are kept in canonical (degree, lex) order and
/// zero coefficients are never stored.
class Polynomial {
public:
  using TermMap = std::map<MultiIndex, Rational, MonomialLess>;

  explicit Polynomial(int nvars = 4);

  static Polynomial zero(int nvars) { return Polynomial(nvars); }
  static Polynomial constant(int nvars, const Rational& c);
  static Polynomial monomial(int nvars, const MultiIndex& m, const Rational& c);
  /// The coordinate polynomial x_i (0-based variable index).
  static Polynomial variable(int nvars, int i);

  int nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  /// Total degree; -1 for the zero polynomial.
  int degree() const;
  /// Largest exponent of variable i appearing in any term.
  int degree_in(int i) const;
  bool is_homogeneous() const;

  Rational coefficient(const MultiIndex& m) const;
  /// Adds c * x^m, dropping the term if the sum cancels.
  void add_term(const MultiIndex& m, const Rational& c);

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator*(const Rational& c) const;

  Polynomial derivative(int i) const;
  /// Antiderivative in variable i with zero constant term.
  Polynomial antiderivative(int i) const;

  Rational eval(const std::vector<Rational>& point) const;

  /// Substitutes subs[i] for variable i; all subs must share one variable
  /// count, which becomes the variable count of the result.
  Polynomial compose(const std::vector<Polynomial>& subs) const;

  /// Reinterprets this polynomial in a larger variable set (coefficients
  /// unchanged); nvars may only grow.
  Polynomial widened(int nvars) const;

  bool operator==(const Polynomial& o) const {
    return nvars_ == o.nvars_ && terms_ == o.terms_;
  }

  std::string str() const;

private:
  int nvars_;
  TermMap terms_;
};

inline Polynomial operator*(const Rational& c, const Polynomial& p) { return p * c; }

/// All monomial exponents in `nvars` variables with total degree <= deg
/// (empty for deg < 0), in (degree, lex) order.
std::vector<MultiIndex> monomials_up_to(int nvars, int deg);

/// All monomial exponents with total degree exactly deg (empty for deg < 0).
std::vector<MultiIndex> monomials_of_degree(int nvars, int deg);

/// All monomial exponents with per-variable caps: exponent of variable i at
/// most caps[i].  Empty if any cap is negative.  (degree, lex) order.
std::vector<MultiIndex> monomials_boxed(const std::vector<int>& caps);

}  // namespace feec4d
