#pragma once

#include <array>
#include <string>
#include <vector>

#include "feec4d/formcalc.hpp"
#include "feec4d/pentatope.hpp"
#include "feec4d/polyspace.hpp"
#include "feec4d/tracedof.hpp"

namespace feec4d {

/// One scalar or vector building-block space over the prism's tetrahedral
/// factor (3 variables) or segment factor (1 variable).  Recognized names:
///   CG_T1, DG_T1        scalar P^k on the segment
///   CG_T3, DG_T3        scalar P^k on the tetrahedron
///   N_T3                Nedelec first kind: (P^k)^3 + x cross (P^k)^3
///   RT_T3               Raviart-Thomas:     (P^k)^3 + x P^k
struct Block3D {
  std::string name;
  int k = 0;
  int nvars = 0;
  int ncomps = 1;
  std::vector<VecPoly> members;  // ordered basis (independent)
};

Block3D block3d(const std::string& name, int k);

/// Shared interior weight factors of the prism bubble families.  The tet
/// factors are stored as 4-variable polynomials constant in x4; the r index
/// runs over the cyclic barycentric tuples (1,2,3,4), (2,3,4,1), (3,4,1,2).
struct BubbleFactors {
  Polynomial theta_seg;                  // nu1 nu2
  Polynomial theta_tet;                  // lam1 lam2 lam3 lam4
  std::array<Vec3Poly, 3> edge_field;    // N^r = lam_a grad lam_b - lam_b grad lam_a
  std::array<Polynomial, 3> phi_weight;  // lam_c lam_d
  std::array<Vec3Poly, 3> face_field;    // lam_a grad lam_b x grad lam_c + cyclic
  std::array<Polynomial, 3> psi_weight;  // lam_d
};

BubbleFactors bubble_factors_w4();

/// Closed-form dimensions for the prism spaces and dof families.
long long dim_space_w4(int k, int s);
long long dim_trace_w4(int k, int s);
long long dim_volume_w4(int k, int s);

/// Primary construction of V^{k,s} on the tetrahedral prism: segment factors
/// times Nedelec/Raviart-Thomas tetrahedral blocks slotted into the form
/// components (N into the (i4) slots, RT into the (ij) slots with i,j <= 3).
std::vector<FormPoly> nrt_space_w4(int k, int s);

/// Independent construction as the tensor product of the trimmed tetrahedral
/// complex (with its homogeneous constraint kernels) and the segment complex,
/// with wedge factors dx^I and dx^I ^ dx^4 slotted directly into components.
std::vector<FormPoly> tensor_space_w4(int k, int s);

/// Explicit interior (bubble) basis from the integrated Legendre / Jacobi
/// families on the tetrahedral factor tensored with segment bubbles.
std::vector<FormPoly> bubble_basis_w4(int k, int s);

/// Full ordered dof set: trace groups entity by entity, then volume moments
/// whose tests are products of segment and tetrahedron polynomials weighted
/// by the BubbleFactors, in the documented family order.
std::vector<Dof> dofs_w4(int k, int s);

/// Exact determinant of the square matrix dof_i(basis_j) in the nrt basis.
Rational unisolvency_det_w4(int k, int s);

Element element_w4(int k, int s);

ExactnessReport exactness_w4(int k);

}  // namespace feec4d
