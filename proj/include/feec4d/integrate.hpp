#pragma once

#include "feec4d/polynomial.hpp"

namespace feec4d {

/// Integration domains.
///
/// Unit domains live in local coordinates:
///   unit_simplex_d : {u in R^d : u_i >= 0, sum u_i <= 1}
///   unit_square    : [0,1]^2
///   unit_tri_x_seg : unit_simplex_2 x [0,1]   (local triangular prism)
///   unit_tet_x_seg : unit_simplex_3 x [0,1]
///
/// Reference domains live in ambient coordinates with vertices at +-1:
///   ref_segment    : [-1,1]
///   ref_tet        : {-1 <= x_i <= 1, x1+x2+x3 <= -1}
///   ref_pentatope  : {-1 <= x_i <= 1, x1+x2+x3+x4 <= -2}
///   ref_prism      : ref_tet x [-1,1] in (x1,x2,x3) x x4
enum class Domain {
  unit_segment,
  unit_triangle,
  unit_tet,
  unit_simplex4,
  unit_square,
  unit_tri_x_seg,
  unit_tet_x_seg,
  ref_segment,
  ref_tet,
  ref_pentatope,
  ref_prism,
};

/// Number of coordinates of the domain.
int domain_dim(Domain d);

/// Exact integral of the monomial u^alpha over the unit d-simplex:
/// prod(alpha_i!) / (d + |alpha|)!.
Rational unit_simplex_moment(int d, const MultiIndex& alpha);

/// Exact integral of u^alpha over the given domain (alpha wider than the
/// domain dimension must be zero there).
Rational moment(Domain dom, const MultiIndex& alpha);

/// Exact integral of p over the domain; p.nvars() must equal domain_dim.
Rational integrate(const Polynomial& p, Domain dom);

}  // namespace feec4d
