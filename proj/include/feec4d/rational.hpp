#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>

namespace feec4d {

/// Exact rational scalar with arbitrary-precision numerator and denominator.
///
/// Values are kept in canonical form at all times: fully reduced, denominator
/// strictly positive, zero stored as 0/1.  Every operation is exact; there is
/// no floating point anywhere in this library's computational paths.
class Rational {
public:
  Rational() : v_(0) {}
  Rational(int n) : v_(n) {}
  Rational(long n) : v_(static_cast<signed long>(n)) {}
  Rational(long long n) : v_(mpz_class(std::to_string(n))) {}

  Rational(long num, long den) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }

  explicit Rational(mpq_class q) : v_(std::move(q)) { v_.canonicalize(); }

  Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    v_ = mpq_class(num) / mpq_class(den);
  }

  /// Parses "p" or "p/q" with optional sign; throws on malformed input or q = 0.
  static Rational from_string(const std::string& s) {
    auto slash = s.find('/');
    try {
      if (slash == std::string::npos) {
        return Rational(mpq_class(mpz_class(s)));
      }
      mpz_class num(s.substr(0, slash));
      mpz_class den(s.substr(slash + 1));
      return Rational(num, den);
    } catch (const std::invalid_argument&) {
      throw std::invalid_argument("Rational: cannot parse '" + s + "'");
    }
  }

  const mpq_class& raw() const { return v_; }
  mpz_class num() const { return v_.get_num(); }
  mpz_class den() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  int sign() const { return sgn(v_); }

  Rational operator-() const { return Rational(mpq_class(-v_)); }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::invalid_argument("Rational: division by zero");
    v_ /= o.v_;
    return *this;
  }

  Rational reciprocal() const {
    if (is_zero()) throw std::invalid_argument("Rational: reciprocal of zero");
    return Rational(mpq_class(1) / v_);
  }

  Rational abs() const { return sign() < 0 ? -*this : *this; }

  Rational pow(int e) const {
    if (e < 0) return reciprocal().pow(-e);
    Rational r(1), b(*this);
    while (e > 0) {
      if (e & 1) r *= b;
      b *= b;
      e >>= 1;
    }
    return r;
  }

  /// Serializes as "p" for integers, "p/q" otherwise (q > 0, reduced).
  std::string str() const { return v_.get_str(); }

private:
  mpq_class v_;
};

inline Rational operator+(Rational a, const Rational& b) { a += b; return a; }
inline Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
inline Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
inline Rational operator/(Rational a, const Rational& b) { a /= b; return a; }

inline bool operator==(const Rational& a, const Rational& b) { return a.raw() == b.raw(); }
inline bool operator!=(const Rational& a, const Rational& b) { return a.raw() != b.raw(); }
inline bool operator<(const Rational& a, const Rational& b) { return a.raw() < b.raw(); }
inline bool operator<=(const Rational& a, const Rational& b) { return a.raw() <= b.raw(); }
inline bool operator>(const Rational& a, const Rational& b) { return a.raw() > b.raw(); }
inline bool operator>=(const Rational& a, const Rational& b) { return a.raw() >= b.raw(); }

inline std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

/// Exact n! as a Rational (n >= 0).
inline Rational factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial: negative argument");
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return Rational(mpq_class(f));
}

/// Exact binomial coefficient C(n, k); zero when k < 0 or k > n.
inline long long binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  if (!b.fits_slong_p()) throw std::overflow_error("binomial: result too large");
  return static_cast<long long>(b.get_si());
}

}  // namespace feec4d
