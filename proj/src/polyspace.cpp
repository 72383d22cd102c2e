#include "feec4d/polyspace.hpp"

#include <stdexcept>

namespace feec4d {

long long dim_P(int nvars, int k) {
  if (k < 0) return 0;
  return binomial(nvars + k, nvars);
}

long long dim_Ptilde(int nvars, int k) {
  if (k < 0) return 0;
  return binomial(k + nvars - 1, nvars - 1);
}

std::vector<Polynomial> space_P(int nvars, int k) {
  std::vector<Polynomial> out;
  for (const auto& m : monomials_up_to(nvars, k))
    out.push_back(Polynomial::monomial(nvars, m, Rational(1)));
  return out;
}

std::vector<Polynomial> space_Ptilde(int nvars, int k) {
  std::vector<Polynomial> out;
  for (const auto& m : monomials_of_degree(nvars, k))
    out.push_back(Polynomial::monomial(nvars, m, Rational(1)));
  return out;
}

std::vector<Polynomial> space_Q(const std::vector<int>& caps) {
  std::vector<Polynomial> out;
  int nvars = static_cast<int>(caps.size());
  for (const auto& m : monomials_boxed(caps))
    out.push_back(Polynomial::monomial(nvars, m, Rational(1)));
  return out;
}

std::vector<VecPoly> space_P_vec(int nvars, int k, int ncomps) {
  std::vector<VecPoly> out;
  auto scalars = space_P(nvars, k);
  for (int c = 0; c < ncomps; ++c) {
    for (const auto& s : scalars) {
      VecPoly v(ncomps, Polynomial::zero(nvars));
      v[c] = s;
      out.push_back(std::move(v));
    }
  }
  return out;
}

MonomialTable::MonomialTable(int nvars, int max_deg) : nvars_(nvars) {
  mons_ = monomials_up_to(nvars, std::max(max_deg, 0));
  for (std::size_t i = 0; i < mons_.size(); ++i) index_[mons_[i]] = i;
}

std::size_t MonomialTable::index_of(const MultiIndex& m) const {
  auto it = index_.find(m);
  if (it == index_.end()) throw std::out_of_range("MonomialTable: monomial beyond table degree");
  return it->second;
}

RatVec flatten(const VecPoly& v, const MonomialTable& table) {
  RatVec row(v.size() * table.size(), Rational(0));
  for (std::size_t c = 0; c < v.size(); ++c) {
    for (const auto& [m, coef] : v[c].terms()) {
      row[c * table.size() + table.index_of(m)] = coef;
    }
  }
  return row;
}

Span::Span(int nvars, int ncomps, int max_deg)
    : table_(nvars, max_deg), ncomps_(ncomps), basis_(ncomps * table_.size()) {}

Span::Span(const std::vector<VecPoly>& members)
    : Span(members.empty() ? 1 : members[0][0].nvars(),
           members.empty() ? 1 : static_cast<int>(members[0].size()),
           max_degree(members)) {
  for (const auto& v : members) insert(v);
}

bool Span::insert(const VecPoly& v) { return basis_.insert(flatten(v, table_)); }

bool Span::contains(const VecPoly& v) const { return basis_.contains(flatten(v, table_)); }

bool Span::contains_all(const std::vector<VecPoly>& vs) const {
  for (const auto& v : vs)
    if (!contains(v)) return false;
  return true;
}

bool same_span(const std::vector<VecPoly>& a, const std::vector<VecPoly>& b) {
  if (a.empty() && b.empty()) return true;
  const std::vector<VecPoly>& ref = a.empty() ? b : a;
  int nvars = ref[0][0].nvars();
  int ncomps = static_cast<int>(ref[0].size());
  int deg = std::max(max_degree(a), max_degree(b));
  Span sa(nvars, ncomps, deg), sb(nvars, ncomps, deg);
  for (const auto& v : a) sa.insert(v);
  for (const auto& v : b) sb.insert(v);
  if (sa.rank() != sb.rank()) return false;
  return sa.contains_all(b);
}

int max_degree(const std::vector<VecPoly>& members) {
  int d = -1;
  for (const auto& v : members)
    for (const auto& p : v) d = std::max(d, p.degree());
  return d;
}

PolySpace PolySpace::from_basis(int nvars, int ncomps, std::vector<VecPoly> members) {
  Span span(nvars, ncomps, max_degree(members));
  for (const auto& v : members) {
    if (!span.insert(v)) throw std::runtime_error("PolySpace: family is linearly dependent");
  }
  PolySpace s;
  s.nvars = nvars;
  s.ncomps = ncomps;
  s.basis = std::move(members);
  return s;
}

PolySpace PolySpace::from_generators(int nvars, int ncomps, const std::vector<VecPoly>& gens) {
  Span span(nvars, ncomps, max_degree(gens));
  PolySpace s;
  s.nvars = nvars;
  s.ncomps = ncomps;
  for (const auto& v : gens) {
    if (span.insert(v)) s.basis.push_back(v);
  }
  return s;
}

}  // namespace feec4d
