#pragma once

#include <array>
#include <vector>

#include "feec4d/formcalc.hpp"
#include "feec4d/polyspace.hpp"
#include "feec4d/tracedof.hpp"

namespace feec4d {

/// The four skew matrix fields with linear entries whose homogeneous
/// multiples extend the full polynomial 2-forms to the trimmed space:
///   V^{k,2} = L((P^{k-1})^6) (+) Ptilde^{k-1} B_1 (+) ... (+) Ptilde^{k-1} B_4.
/// Each satisfies B_r x = 0 identically and is skew.
std::array<Mat4Poly, 4> b_matrices();

/// Closed-form dimensions for the pentatope spaces and dof families.
long long dim_space_t4(int k, int s);
long long dim_trace_t4(int k, int s);
long long dim_volume_t4(int k, int s);

/// Primary construction of V^{k,s} on the pentatope via the trimmed-space
/// (Koszul) route: P^{k-1} Lambda^s (+) kappa(Ptilde^{k-1} Lambda^{s+1}),
/// reduced to a linearly independent basis of raw form-component vectors.
std::vector<FormPoly> build_space_t4(int k, int s);

/// Independent construction from the proxy constraint characterizations
/// (s=1: p.x = 0 kernel; s=2: Bx = 0 kernel; s=3: (P^{k-1})^4 + Ptilde^{k-1} x).
std::vector<FormPoly> build_space_t4_constraint(int k, int s);

/// Explicit interior (bubble) basis from the integrated Legendre / Jacobi
/// families; every member lies in V^{k,s} and has vanishing trace dofs.
std::vector<FormPoly> bubble_basis_t4(int k, int s);

/// Full ordered dof set: trace groups entity by entity, then volume moments
/// with monomial test spaces (s=3 tests are stated for the vector proxy and
/// converted to raw component form internally).
std::vector<Dof> dofs_t4(int k, int s);

/// Exact determinant of the square matrix dof_i(basis_j); nonzero iff the
/// dof set is unisolvent for the space.
Rational unisolvency_det_t4(int k, int s);

/// Finite element triple for one (k, s).
struct Element {
  int k = 0;
  int s = 0;
  std::vector<FormPoly> space;
  std::vector<Dof> dofs;
  std::vector<FormPoly> bubbles;
};

Element element_t4(int k, int s);

/// Exact-sequence audit of a chain of five form spaces under d.  Generic in
/// the cell: d acts on global polynomial components.
struct ExactnessReport {
  std::array<bool, 4> d_maps_into_next{};  // d(V^s) is a subset of V^{s+1}
  std::array<long long, 4> rank_d{};       // rank of d restricted to V^s
  std::array<long long, 5> dim_v{};        // dimensions of the given spaces
  bool exact = false;  // ker d|V^0 = constants, im d^{s-1} = ker d^s,
                       // and d^3 maps V^3 onto V^4
};

ExactnessReport check_exactness(const std::array<std::vector<FormPoly>, 5>& v);

ExactnessReport exactness_t4(int k);

}  // namespace feec4d
