#pragma once

#include <vector>

#include "feec4d/linalg.hpp"
#include "feec4d/polynomial.hpp"

namespace feec4d {

/// A vector-valued polynomial: fixed number of scalar components sharing one
/// variable count.  Scalar spaces use a single component.
using VecPoly = std::vector<Polynomial>;

/// dim P^k in n variables: C(n+k, n); zero for k < 0.
long long dim_P(int nvars, int k);
/// dim of the homogeneous degree-k slice: C(k+n-1, n-1); zero for k < 0.
long long dim_Ptilde(int nvars, int k);

/// Monomial basis of P^k (total degree <= k), (degree, lex) order.
std::vector<Polynomial> space_P(int nvars, int k);
/// Monomial basis of the homogeneous degree-k polynomials.
std::vector<Polynomial> space_Ptilde(int nvars, int k);
/// Monomial basis of the tensor space with per-variable degree caps.
std::vector<Polynomial> space_Q(const std::vector<int>& caps);

/// Component-wise vector basis e_c * m over all components c and monomials m
/// of P^k; component index runs slowest.
std::vector<VecPoly> space_P_vec(int nvars, int k, int ncomps);

/// Canonical indexing of all monomials of total degree <= max_deg, used to
/// flatten polynomials into exact coefficient vectors.
class MonomialTable {
public:
  MonomialTable(int nvars, int max_deg);
  int nvars() const { return nvars_; }
  std::size_t size() const { return mons_.size(); }
  const std::vector<MultiIndex>& monomials() const { return mons_; }
  std::size_t index_of(const MultiIndex& m) const;

private:
  int nvars_;
  std::vector<MultiIndex> mons_;
  std::map<MultiIndex, std::size_t, MonomialLess> index_;
};

/// Flattens v into one long coefficient row (components concatenated).
RatVec flatten(const VecPoly& v, const MonomialTable& table);

/// Exact span of a family of vector polynomials; supports rank and
/// membership queries.  All members must agree in nvars and component count.
class Span {
public:
  Span(int nvars, int ncomps, int max_deg);
  explicit Span(const std::vector<VecPoly>& members);

  /// Returns true if the member enlarged the span.
  bool insert(const VecPoly& v);
  bool contains(const VecPoly& v) const;
  int rank() const { return basis_.rank(); }
  int nvars() const { return table_.nvars(); }
  int ncomps() const { return ncomps_; }
  const MonomialTable& table() const { return table_; }

  bool contains_all(const std::vector<VecPoly>& vs) const;

private:
  MonomialTable table_;
  int ncomps_;
  RowBasis basis_;
};

/// True iff the two families span the same subspace.
bool same_span(const std::vector<VecPoly>& a, const std::vector<VecPoly>& b);

/// Largest total degree over all components of all members (-1 if none).
int max_degree(const std::vector<VecPoly>& members);

/// An ordered basis of a finite-dimensional space of vector polynomials.
struct PolySpace {
  int nvars = 0;
  int ncomps = 1;
  std::vector<VecPoly> basis;

  int dim() const { return static_cast<int>(basis.size()); }

  /// Wraps an independent family; throws if it is linearly dependent.
  static PolySpace from_basis(int nvars, int ncomps, std::vector<VecPoly> members);

  /// Deterministically extracts a basis from a spanning family, keeping the
  /// earliest generators that enlarge the span.
  static PolySpace from_generators(int nvars, int ncomps, const std::vector<VecPoly>& gens);
};

}  // namespace feec4d
