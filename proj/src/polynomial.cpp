#include "feec4d/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace feec4d {

namespace {

void check_nvars(int nvars) {
  if (nvars < 1 || nvars > 4) throw std::invalid_argument("Polynomial: nvars must be 1..4");
}

void check_index(int nvars, const MultiIndex& m) {
  for (int i = 0; i < 4; ++i) {
    if (m[i] < 0) throw std::invalid_argument("Polynomial: negative exponent");
    if (i >= nvars && m[i] != 0)
      throw std::invalid_argument("Polynomial: exponent on unused variable");
  }
}

}  // namespace

Polynomial::Polynomial(int nvars) : nvars_(nvars) { check_nvars(nvars); }

Polynomial Polynomial::constant(int nvars, const Rational& c) {
  Polynomial p(nvars);
  p.add_term({0, 0, 0, 0}, c);
  return p;
}

Polynomial Polynomial::monomial(int nvars, const MultiIndex& m, const Rational& c) {
  Polynomial p(nvars);
  check_index(nvars, m);
  p.add_term(m, c);
  return p;
}

Polynomial Polynomial::variable(int nvars, int i) {
  check_nvars(nvars);
  if (i < 0 || i >= nvars) throw std::invalid_argument("Polynomial: variable index out of range");
  MultiIndex m{0, 0, 0, 0};
  m[i] = 1;
  return monomial(nvars, m, Rational(1));
}

int Polynomial::degree() const {
  if (terms_.empty()) return -1;
  return total_degree(terms_.rbegin()->first);
}

int Polynomial::degree_in(int i) const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m[i]);
  return d;
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  int d = total_degree(terms_.begin()->first);
  for (const auto& [m, c] : terms_)
    if (total_degree(m) != d) return false;
  return true;
}

Rational Polynomial::coefficient(const MultiIndex& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const MultiIndex& m, const Rational& c) {
  if (c.is_zero()) return;
  check_index(nvars_, m);
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial r(nvars_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.nvars_ != nvars_) throw std::invalid_argument("Polynomial: mixed variable counts");
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.nvars_ != nvars_) throw std::invalid_argument("Polynomial: mixed variable counts");
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  Polynomial r(*this);
  r += o;
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  Polynomial r(*this);
  r -= o;
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  if (o.nvars_ != nvars_) throw std::invalid_argument("Polynomial: mixed variable counts");
  Polynomial r(nvars_);
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : o.terms_) {
      MultiIndex m{ma[0] + mb[0], ma[1] + mb[1], ma[2] + mb[2], ma[3] + mb[3]};
      r.add_term(m, ca * cb);
    }
  }
  return r;
}

Polynomial Polynomial::operator*(const Rational& c) const {
  Polynomial r(nvars_);
  if (c.is_zero()) return r;
  for (const auto& [m, cc] : terms_) r.terms_.emplace(m, cc * c);
  return r;
}

Polynomial Polynomial::derivative(int i) const {
  if (i < 0 || i >= nvars_) throw std::invalid_argument("Polynomial: variable index out of range");
  Polynomial r(nvars_);
  for (const auto& [m, c] : terms_) {
    if (m[i] == 0) continue;
    MultiIndex d = m;
    d[i] -= 1;
    r.add_term(d, c * Rational(m[i]));
  }
  return r;
}

Polynomial Polynomial::antiderivative(int i) const {
  if (i < 0 || i >= nvars_) throw std::invalid_argument("Polynomial: variable index out of range");
  Polynomial r(nvars_);
  for (const auto& [m, c] : terms_) {
    MultiIndex d = m;
    d[i] += 1;
    r.add_term(d, c / Rational(d[i]));
  }
  return r;
}

Rational Polynomial::eval(const std::vector<Rational>& point) const {
  if (static_cast<int>(point.size()) != nvars_)
    throw std::invalid_argument("Polynomial: evaluation point has wrong dimension");
  // Memoized powers per variable.
  std::vector<std::vector<Rational>> pows(nvars_);
  for (int i = 0; i < nvars_; ++i) pows[i].push_back(Rational(1));
  Rational sum(0);
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (int i = 0; i < nvars_; ++i) {
      while (static_cast<int>(pows[i].size()) <= m[i]) pows[i].push_back(pows[i].back() * point[i]);
      t *= pows[i][m[i]];
    }
    sum += t;
  }
  return sum;
}

Polynomial Polynomial::compose(const std::vector<Polynomial>& subs) const {
  if (static_cast<int>(subs.size()) != nvars_)
    throw std::invalid_argument("Polynomial: substitution count mismatch");
  int out_nvars = subs.empty() ? nvars_ : subs[0].nvars();
  for (const auto& s : subs)
    if (s.nvars() != out_nvars) throw std::invalid_argument("Polynomial: mixed substitution vars");
  std::vector<std::vector<Polynomial>> pows(nvars_);
  for (int i = 0; i < nvars_; ++i) pows[i].push_back(Polynomial::constant(out_nvars, Rational(1)));
  Polynomial r(out_nvars);
  for (const auto& [m, c] : terms_) {
    Polynomial t = Polynomial::constant(out_nvars, c);
    for (int i = 0; i < nvars_; ++i) {
      while (static_cast<int>(pows[i].size()) <= m[i]) pows[i].push_back(pows[i].back() * subs[i]);
      if (m[i] > 0) t = t * pows[i][m[i]];
    }
    r += t;
  }
  return r;
}

Polynomial Polynomial::widened(int nvars) const {
  if (nvars < nvars_) throw std::invalid_argument("Polynomial: cannot shrink variable set");
  Polynomial r(nvars);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, c);
  return r;
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << (c.sign() > 0 ? " + " : " - ");
    else if (c.sign() < 0) os << "-";
    first = false;
    Rational a = c.abs();
    bool has_vars = total_degree(m) > 0;
    if (!a.is_one() || !has_vars) os << a.str();
    bool star = !a.is_one() || !has_vars;
    for (int i = 0; i < nvars_; ++i) {
      if (m[i] == 0) continue;
      if (star) os << "*";
      star = true;
      os << "x" << (i + 1);
      if (m[i] > 1) os << "^" << m[i];
    }
  }
  return os.str();
}

std::vector<MultiIndex> monomials_up_to(int nvars, int deg) {
  std::vector<MultiIndex> out;
  for (int d = 0; d <= deg; ++d) {
    auto layer = monomials_of_degree(nvars, d);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

std::vector<MultiIndex> monomials_of_degree(int nvars, int deg) {
  check_nvars(nvars);
  std::vector<MultiIndex> out;
  if (deg < 0) return out;
  MultiIndex m{0, 0, 0, 0};
  // Depth-first enumeration in ascending lex order of the exponent tuple.
  auto rec = [&](auto&& self, int var, int rem) -> void {
    if (var == nvars - 1) {
      m[var] = rem;
      out.push_back(m);
      m[var] = 0;
      return;
    }
    for (int e = 0; e <= rem; ++e) {
      m[var] = e;
      self(self, var + 1, rem - e);
    }
    m[var] = 0;
  };
  rec(rec, 0, deg);
  return out;
}

std::vector<MultiIndex> monomials_boxed(const std::vector<int>& caps) {
  int nvars = static_cast<int>(caps.size());
  check_nvars(nvars);
  std::vector<MultiIndex> out;
  for (int c : caps)
    if (c < 0) return out;
  MultiIndex m{0, 0, 0, 0};
  auto rec = [&](auto&& self, int var) -> void {
    if (var == nvars) {
      out.push_back(m);
      return;
    }
    for (int e = 0; e <= caps[var]; ++e) {
      m[var] = e;
      self(self, var + 1);
    }
    m[var] = 0;
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end(), MonomialLess{});
  return out;
}

}  // namespace feec4d
