#pragma once

#include <array>
#include <vector>

#include "feec4d/polynomial.hpp"
#include "feec4d/polyspace.hpp"

namespace feec4d {

using Vec3Poly = std::array<Polynomial, 3>;
using Vec4Poly = std::array<Polynomial, 4>;
using Mat4Poly = std::array<std::array<Polynomial, 4>, 4>;

/// Polynomial differential s-form on R^4 (0 <= s <= 4), stored through its
/// coefficient components on the increasing-index basis s-covectors.
///
/// Component order (1-based index tuples):
///   s=1: (1),(2),(3),(4)
///   s=2: (12),(13),(14),(23),(24),(34)
///   s=3: (123),(124),(134),(234)
struct FormPoly {
  int s = 0;
  VecPoly comp;  // size C(4,s), each a 4-variable Polynomial

  FormPoly() : s(0), comp(1, Polynomial::zero(4)) {}
  explicit FormPoly(int degree);

  static int ncomp(int s);
};

/// Increasing 0-based index tuples of the s-component basis, in order.
const std::vector<std::vector<int>>& form_tuples(int s);

/// Position of the sorted tuple in the component list.
int comp_index(int s, const std::vector<int>& sorted_tuple);

/// Levi-Civita symbol on four 0-based indices.
int epsilon4(int i, int j, int k, int l);

/// Exterior derivative.
FormPoly dform(const FormPoly& w);

/// Koszul (position-vector contraction) operator.
FormPoly koszul(const FormPoly& w);

/// Proxy maps.
Polynomial upsilon0(const FormPoly& w);
Vec4Poly upsilon1(const FormPoly& w);
/// Skew matrix proxy of a 2-form: (1/2) L(component vector).
Mat4Poly upsilon2(const FormPoly& w);
/// Vector proxy of a 3-form: (w_234, -w_134, w_124, -w_123).
Vec4Poly upsilon3(const FormPoly& w);
Polynomial upsilon4(const FormPoly& w);

/// Inverse proxy maps (build a form from its proxy).
FormPoly form_from_scalar(int s, const Polynomial& u);  // s = 0 or 4
FormPoly form_from_proxy1(const Vec4Poly& e);
FormPoly form_from_proxy2(const Mat4Poly& f);
FormPoly form_from_proxy3(const Vec4Poly& g);
/// 2-form whose raw component vector is w (no factor 1/2).
FormPoly form_from_vec6(const std::array<Polynomial, 6>& w);

/// Bijection between 6-vectors (w12,w13,w14,w23,w24,w34) and skew 4x4
/// matrices with that upper triangle.
Mat4Poly vtom(const std::array<Polynomial, 6>& w);
std::array<Polynomial, 6> mtov(const Mat4Poly& m);

/// First-order operators on proxies.
Vec4Poly grad4(const Polynomial& u);
/// [Grad E]_ij = d_j E_i.
Mat4Poly grad_mat(const Vec4Poly& e);
/// skwGrad E = ((Grad E)^T - Grad E) / 2.
Mat4Poly skw_grad(const Vec4Poly& e);
/// [curl F]_i = sum_{j,k,l} eps_{ijkl} d_j F_kl  (skew matrix to vector).
Vec4Poly curl_skew(const Mat4Poly& f);
/// [Curl E]_ij = sum_{k,l} eps_{ijkl} d_k E_l  (vector to skew matrix).
Mat4Poly curl_vec(const Vec4Poly& e);
/// [Div F]_i = sum_j d_j F_ij.
Vec4Poly div_skew(const Mat4Poly& f);
Polynomial div_vec(const Vec4Poly& g);

/// Cross products built on eps_{ijkl}.  These and the pairings below are
/// purely algebraic, so they accept entries of any consistent variable
/// count (e.g. facet-chart compositions in three parameters).
/// [M x N]_ij = sum_{k,l} eps_{ijkl} M_k N_l.
Mat4Poly cross_vv(const Vec4Poly& m, const Vec4Poly& n);
/// [M x U]_i = sum_{j,k,l} eps_{ijkl} M_j U_kl.
Vec4Poly cross_vm(const Vec4Poly& m, const Mat4Poly& u);
/// [a x b x c]_i = sum eps_{ijkl} a_j b_k c_l.
Vec4Poly triple_cross(const Vec4Poly& a, const Vec4Poly& b, const Vec4Poly& c);

/// Pairings.
Polynomial dot4(const Vec4Poly& a, const Vec4Poly& b);
Polynomial frobenius(const Mat4Poly& a, const Mat4Poly& b);

/// Outer product a b^T.
Mat4Poly outer(const Vec4Poly& a, const Vec4Poly& b);

/// Three-variable helpers for the prism's tetrahedral blocks.  grad3
/// differentiates in the first three variables and keeps the input's
/// variable count, so it also applies to tetrahedral fields embedded in
/// four variables.
Vec3Poly grad3(const Polynomial& u);
Vec3Poly cross3(const Vec3Poly& a, const Vec3Poly& b);
Polynomial dot3(const Vec3Poly& a, const Vec3Poly& b);

/// Constant vectors as polynomial vectors.
Vec4Poly const_vec4(const std::array<Rational, 4>& v);
Vec3Poly const_vec3(const std::array<Rational, 3>& v);

}  // namespace feec4d
