#pragma once

#include "feec4d/polynomial.hpp"

namespace feec4d {

/// Shifted Legendre polynomial P_i on [0,1]:
///   P_0 = 1,  P_1 = 2x - 1,
///   (i+1) P_{i+1}(x) = (2i+1)(2x-1) P_i(x) - i P_{i-1}(x).
/// Orthogonal on [0,1] with unit weight; P_i(1) = 1.
Polynomial legendre(int i);

/// Shifted Jacobi polynomial P_i^{(alpha,0)} on [0,1], orthogonal under the
/// weight (1-x)^alpha, normalized so that P_i^{(alpha,0)}(1) = C(i+alpha, i).
/// jacobi(i, 0) coincides with legendre(i).
Polynomial jacobi(int i, int alpha);

/// Integrated Legendre L_i(x) = integral of P_{i-1} from 0 to x, i >= 1.
/// L_i(0) = 0 for all i; L_i(1) = 0 for i >= 2.
Polynomial integrated_legendre(int i);

/// Integrated Jacobi L_i^alpha(x) = integral of P_{i-1}^{(alpha,0)} from 0 to
/// x, i >= 1.
Polynomial integrated_jacobi(int i, int alpha);

/// Homogenized substitution: for a univariate f of family degree `deg`
/// (deg >= deg f), returns t^deg f(s/t) with the polynomials S and T
/// substituted for s and t.  S and T must share a variable count, which the
/// result inherits.
Polynomial scaled_compose(const Polynomial& f, int deg, const Polynomial& S, const Polynomial& T);

}  // namespace feec4d
