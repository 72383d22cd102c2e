#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <array>
#include <vector>

#include "feec4d/formcalc.hpp"
#include "feec4d/linalg.hpp"
#include "test_util.hpp"

using namespace feec4d;
using testutil::Rng;

namespace {

// Independent Levi-Civita oracle: sort by adjacent swaps, count them.
int epsilon4_oracle(int i, int j, int k, int l) {
  std::array<int, 4> idx = {i, j, k, l};
  int swaps = 0;
  for (int pass = 0; pass < 4; ++pass)
    for (int a = 0; a + 1 < 4; ++a) {
      if (idx[a] == idx[a + 1]) return 0;
      if (idx[a] > idx[a + 1]) {
        std::swap(idx[a], idx[a + 1]);
        ++swaps;
      }
    }
  return (swaps % 2 == 0) ? 1 : -1;
}

FormPoly random_form(Rng& rng, int s, int deg) {
  FormPoly w(s);
  for (auto& c : w.comp) c = rng.polynomial(4, deg, 5);
  return w;
}

FormPoly random_homogeneous_form(Rng& rng, int s, int deg) {
  FormPoly w(s);
  auto mons = monomials_of_degree(4, deg);
  for (auto& c : w.comp)
    for (int t = 0; t < 4; ++t)
      c.add_term(mons[static_cast<std::size_t>(
                     rng.int_in(0, static_cast<int>(mons.size()) - 1))],
                 rng.rational());
  return w;
}

bool vec_eq(const Vec4Poly& a, const Vec4Poly& b) {
  for (int i = 0; i < 4; ++i)
    if (!(a[i] == b[i])) return false;
  return true;
}

bool mat_eq(const Mat4Poly& a, const Mat4Poly& b) {
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (!(a[i][j] == b[i][j])) return false;
  return true;
}

bool mat_zero(const Mat4Poly& a) {
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (!a[i][j].is_zero()) return false;
  return true;
}

bool vec_zero(const Vec4Poly& a) {
  for (int i = 0; i < 4; ++i)
    if (!a[i].is_zero()) return false;
  return true;
}

Vec4Poly matvec(const Mat4Poly& m, const Vec4Poly& v) {
  Vec4Poly out = {Polynomial::zero(4), Polynomial::zero(4), Polynomial::zero(4),
                  Polynomial::zero(4)};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) out[i] += m[i][j] * v[j];
  return out;
}

Vec4Poly coordinate_vec4() {
  return {Polynomial::variable(4, 0), Polynomial::variable(4, 1),
          Polynomial::variable(4, 2), Polynomial::variable(4, 3)};
}

Mat4Poly scale_mat(const Mat4Poly& m, const Rational& c) {
  Mat4Poly out;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) out[i][j] = m[i][j] * c;
  return out;
}

Mat4Poly add_mat(const Mat4Poly& a, const Mat4Poly& b) {
  Mat4Poly out;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) out[i][j] = a[i][j] + b[i][j];
  return out;
}

}  // namespace

TEST_CASE("epsilon4 matches the adjacent-swap oracle and contraction identity") {
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k)
        for (int l = 0; l < 4; ++l) CHECK(epsilon4(i, j, k, l) == epsilon4_oracle(i, j, k, l));
  // sum_{k,l} eps_{ijkl} eps_{mnkl} = 2 (delta_im delta_jn - delta_in delta_jm)
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int m = 0; m < 4; ++m)
        for (int n = 0; n < 4; ++n) {
          int sum = 0;
          for (int k = 0; k < 4; ++k)
            for (int l = 0; l < 4; ++l) sum += epsilon4(i, j, k, l) * epsilon4(m, n, k, l);
          int expected = 2 * ((i == m && j == n ? 1 : 0) - (i == n && j == m ? 1 : 0));
          CHECK(sum == expected);
        }
}

TEST_CASE("component tuple tables are the increasing tuples in lex order") {
  CHECK(form_tuples(0) == std::vector<std::vector<int>>{{}});
  CHECK(form_tuples(1) == std::vector<std::vector<int>>{{0}, {1}, {2}, {3}});
  CHECK(form_tuples(2) ==
        std::vector<std::vector<int>>{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  CHECK(form_tuples(3) == std::vector<std::vector<int>>{{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
  CHECK(form_tuples(4) == std::vector<std::vector<int>>{{0, 1, 2, 3}});
  CHECK(comp_index(2, {1, 3}) == 4);
  CHECK(comp_index(3, {0, 2, 3}) == 2);
  for (int s = 0; s <= 4; ++s) CHECK(static_cast<int>(form_tuples(s).size()) == FormPoly::ncomp(s));
}

TEST_CASE("exterior derivative hand examples") {
  // d(x1^2 x3) = (2 x1 x3, 0, x1^2, 0)
  Polynomial u = Polynomial::monomial(4, {2, 0, 1, 0}, Rational(1));
  Vec4Poly g = upsilon1(dform(form_from_scalar(0, u)));
  CHECK(g[0] == Polynomial::monomial(4, {1, 0, 1, 0}, Rational(2)));
  CHECK(g[1].is_zero());
  CHECK(g[2] == Polynomial::monomial(4, {2, 0, 0, 0}, Rational(1)));
  CHECK(g[3].is_zero());

  // omega = x2 dx1: (d omega)_12 = -1, all other components vanish.
  FormPoly w(1);
  w.comp[0] = Polynomial::variable(4, 1);
  FormPoly dw = dform(w);
  CHECK(dw.comp[comp_index(2, {0, 1})] == Polynomial::constant(4, Rational(-1)));
  for (int c = 1; c < 6; ++c) CHECK(dw.comp[c].is_zero());
}

TEST_CASE("d compose d is zero") {
  Rng rng(11);
  for (int s = 0; s <= 2; ++s)
    for (int rep = 0; rep < 3; ++rep) {
      FormPoly w = random_form(rng, s, 3);
      FormPoly ddw = dform(dform(w));
      for (const auto& c : ddw.comp) CHECK(c.is_zero());
    }
}

TEST_CASE("koszul compose koszul is zero") {
  Rng rng(12);
  for (int s = 2; s <= 4; ++s)
    for (int rep = 0; rep < 3; ++rep) {
      FormPoly w = random_form(rng, s, 3);
      FormPoly kkw = koszul(koszul(w));
      for (const auto& c : kkw.comp) CHECK(c.is_zero());
    }
}

TEST_CASE("homotopy formula (d koszul + koszul d) = (poly degree + form degree) id") {
  Rng rng(13);
  for (int s = 0; s <= 4; ++s)
    for (int r = 0; r <= 3; ++r) {
      FormPoly w = random_homogeneous_form(rng, s, r);
      FormPoly sum(s);
      if (s > 0) sum = dform(koszul(w));
      if (s < 4) {
        FormPoly kd = koszul(dform(w));
        for (int c = 0; c < FormPoly::ncomp(s); ++c) sum.comp[c] += kd.comp[c];
      }
      for (int c = 0; c < FormPoly::ncomp(s); ++c)
        CHECK(sum.comp[c] == w.comp[c] * Rational(r + s));
    }
}

TEST_CASE("proxy commuting diagram: upsilon converts d to grad/skwGrad/curl/div") {
  Rng rng(14);
  for (int rep = 0; rep < 4; ++rep) {
    FormPoly w0 = random_form(rng, 0, 3);
    CHECK(vec_eq(upsilon1(dform(w0)), grad4(upsilon0(w0))));

    FormPoly w1 = random_form(rng, 1, 3);
    CHECK(mat_eq(upsilon2(dform(w1)), skw_grad(upsilon1(w1))));

    FormPoly w2 = random_form(rng, 2, 3);
    CHECK(vec_eq(upsilon3(dform(w2)), curl_skew(upsilon2(w2))));

    FormPoly w3 = random_form(rng, 3, 3);
    CHECK(upsilon4(dform(w3)) == div_vec(upsilon3(w3)));
  }
}

TEST_CASE("proxy round trips and skew-vector bijection") {
  Rng rng(15);
  for (int s = 0; s <= 4; ++s) {
    FormPoly w = random_form(rng, s, 2);
    FormPoly back(s);
    switch (s) {
      case 0: back = form_from_scalar(0, upsilon0(w)); break;
      case 1: back = form_from_proxy1(upsilon1(w)); break;
      case 2: back = form_from_proxy2(upsilon2(w)); break;
      case 3: back = form_from_proxy3(upsilon3(w)); break;
      case 4: back = form_from_scalar(4, upsilon4(w)); break;
    }
    for (int c = 0; c < FormPoly::ncomp(s); ++c) CHECK(back.comp[c] == w.comp[c]);
  }

  std::array<Polynomial, 6> w6;
  for (auto& p : w6) p = rng.polynomial(4, 2, 3);
  Mat4Poly m = vtom(w6);
  // Layout: row 1 is (0, w12, w13, w14), and skewness fills the rest.
  CHECK(m[0][1] == w6[0]);
  CHECK(m[0][2] == w6[1]);
  CHECK(m[0][3] == w6[2]);
  CHECK(m[1][2] == w6[3]);
  CHECK(m[1][3] == w6[4]);
  CHECK(m[2][3] == w6[5]);
  CHECK(m[1][0] == -w6[0]);
  for (int i = 0; i < 4; ++i) CHECK(m[i][i].is_zero());
  auto back6 = mtov(m);
  for (int c = 0; c < 6; ++c) CHECK(back6[c] == w6[c]);

  Mat4Poly notskew = m;
  notskew[2][2] = Polynomial::constant(4, Rational(1));
  CHECK_THROWS(mtov(notskew));
}

TEST_CASE("koszul hand images: constant forms of each degree") {
  Rng rng(16);

  // s=1, constant a: koszul(omega) = a . x.
  std::array<Rational, 4> a4;
  for (auto& r : a4) r = rng.nonzero_rational();
  FormPoly w1 = form_from_proxy1(const_vec4(a4));
  Polynomial expect0 = Polynomial::zero(4);
  for (int i = 0; i < 4; ++i) expect0 += Polynomial::variable(4, i) * a4[i];
  CHECK(upsilon0(koszul(w1)) == expect0);

  // s=2, constant 6-vector a: upsilon1(koszul(omega)) = L(a) (-x).
  std::array<Polynomial, 6> a6;
  for (auto& p : a6) p = Polynomial::constant(4, rng.nonzero_rational());
  FormPoly w2 = form_from_vec6(a6);
  Vec4Poly minus_x = coordinate_vec4();
  for (auto& p : minus_x) p = -p;
  CHECK(vec_eq(upsilon1(koszul(w2)), matvec(vtom(a6), minus_x)));

  // s=3, constant (a123, a124, a134, a234):
  // upsilon2(koszul(omega)) = (a234 B1 - a134 B2 + a124 B3 - a123 B4) / 2
  // with the rotation-field matrices B_r = L(...) below.
  auto x = [](int i) { return Polynomial::variable(4, i); };
  Polynomial zp = Polynomial::zero(4);
  Mat4Poly b1 = vtom({zp, zp, zp, x(3), -x(2), x(1)});
  Mat4Poly b2 = vtom({zp, -x(3), x(2), zp, zp, -x(0)});
  Mat4Poly b3 = vtom({x(3), zp, -x(1), zp, x(0), zp});
  Mat4Poly b4 = vtom({-x(2), x(1), zp, -x(0), zp, zp});
  std::array<Rational, 4> a3;
  for (auto& r : a3) r = rng.nonzero_rational();  // order: a123, a124, a134, a234
  FormPoly w3(3);
  for (int c = 0; c < 4; ++c) w3.comp[c] = Polynomial::constant(4, a3[c]);
  Mat4Poly expect2 = add_mat(add_mat(scale_mat(b1, a3[3]), scale_mat(b2, -a3[2])),
                             add_mat(scale_mat(b3, a3[1]), scale_mat(b4, -a3[0])));
  expect2 = scale_mat(expect2, Rational(1, 2));
  CHECK(mat_eq(upsilon2(koszul(w3)), expect2));

  // s=4, constant a: upsilon3(koszul(omega)) = a x.
  Rational a = rng.nonzero_rational();
  FormPoly w4 = form_from_scalar(4, Polynomial::constant(4, a));
  Vec4Poly ax = coordinate_vec4();
  for (auto& p : ax) p = p * a;
  CHECK(vec_eq(upsilon3(koszul(w4)), ax));
}

TEST_CASE("second-order operator identities vanish") {
  Rng rng(17);
  for (int rep = 0; rep < 3; ++rep) {
    Polynomial u = rng.polynomial(4, 4, 6);
    CHECK(mat_zero(skw_grad(grad4(u))));
    CHECK(mat_zero(curl_vec(grad4(u))));

    Vec4Poly e;
    for (auto& p : e) p = rng.polynomial(4, 3, 5);
    CHECK(vec_zero(div_skew(curl_vec(e))));
    CHECK(vec_zero(curl_skew(skw_grad(e))));

    std::array<Polynomial, 6> w6;
    for (auto& p : w6) p = rng.polynomial(4, 3, 5);
    CHECK(div_vec(curl_skew(vtom(w6))).is_zero());
  }
}

TEST_CASE("grad and div hand examples") {
  // E = (x2, 0, 0, 0): [Grad E]_12 = 1, all else zero.
  Vec4Poly e = {Polynomial::variable(4, 1), Polynomial::zero(4), Polynomial::zero(4),
                Polynomial::zero(4)};
  Mat4Poly g = grad_mat(e);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      if (i == 0 && j == 1)
        CHECK(g[i][j] == Polynomial::constant(4, Rational(1)));
      else
        CHECK(g[i][j].is_zero());
    }

  // F skew with F_12 = x2: Div F = (1, 0, 0, 0).
  Polynomial zp = Polynomial::zero(4);
  Mat4Poly f = vtom({Polynomial::variable(4, 1), zp, zp, zp, zp, zp});
  Vec4Poly dv = div_skew(f);
  CHECK(dv[0] == Polynomial::constant(4, Rational(1)));
  CHECK(dv[1].is_zero());
  CHECK(dv[2].is_zero());
  CHECK(dv[3].is_zero());
}

TEST_CASE("cross products: spot values, symmetry, determinant pairing") {
  Rng rng(18);
  Polynomial zp = Polynomial::zero(4);

  // e4 x L(w) with only w23 = c gives (2c, 0, 0, 0).
  Rational c = rng.nonzero_rational();
  Mat4Poly u = vtom({zp, zp, zp, Polynomial::constant(4, c), zp, zp});
  Vec4Poly e4 = const_vec4({Rational(0), Rational(0), Rational(0), Rational(1)});
  Vec4Poly r = cross_vm(e4, u);
  CHECK(r[0] == Polynomial::constant(4, c * Rational(2)));
  CHECK(r[1].is_zero());
  CHECK(r[2].is_zero());
  CHECK(r[3].is_zero());

  for (int rep = 0; rep < 3; ++rep) {
    Vec4Poly m, n;
    for (auto& p : m) p = rng.polynomial(4, 2, 3);
    for (auto& p : n) p = rng.polynomial(4, 2, 3);
    Mat4Poly mxn = cross_vv(m, n);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) CHECK(mxn[i][j] == -mxn[j][i]);
    CHECK(mat_zero(cross_vv(m, m)));
  }

  // dot(a x b x c, v) equals det with rows (v, a, b, c); orthogonality follows.
  for (int rep = 0; rep < 3; ++rep) {
    std::array<std::array<Rational, 4>, 4> rows;
    for (auto& row : rows)
      for (auto& x : row) x = rng.rational();
    Vec4Poly a = const_vec4(rows[1]), b = const_vec4(rows[2]), cc = const_vec4(rows[3]);
    Vec4Poly t = triple_cross(a, b, cc);
    RatMat dm(4, RatVec(4));
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) dm[i][j] = rows[i][j];
    Rational lhs;
    for (int i = 0; i < 4; ++i) lhs += t[i].coefficient({0, 0, 0, 0}) * rows[0][i];
    CHECK(lhs == det(dm));
    CHECK(dot4(t, a).is_zero());
    CHECK(dot4(t, b).is_zero());
    CHECK(dot4(t, cc).is_zero());
  }
}

TEST_CASE("three-variable helpers") {
  Rng rng(19);
  Vec3Poly e1 = const_vec3({Rational(1), Rational(0), Rational(0)});
  Vec3Poly e2 = const_vec3({Rational(0), Rational(1), Rational(0)});
  Vec3Poly x12 = cross3(e1, e2);
  CHECK(x12[0].is_zero());
  CHECK(x12[1].is_zero());
  CHECK(x12[2] == Polynomial::constant(3, Rational(1)));

  for (int rep = 0; rep < 3; ++rep) {
    Vec3Poly a, b;
    for (auto& p : a) p = rng.polynomial(3, 2, 3);
    for (auto& p : b) p = rng.polynomial(3, 2, 3);
    CHECK(dot3(cross3(a, b), a).is_zero());
    CHECK(dot3(cross3(a, b), b).is_zero());
  }

  Polynomial u = rng.polynomial(3, 3, 4);
  Vec3Poly g = grad3(u);
  for (int i = 0; i < 3; ++i) CHECK(g[i] == u.derivative(i));
}

TEST_CASE("frobenius pairing against raw component dot") {
  Rng rng(20);
  for (int rep = 0; rep < 3; ++rep) {
    FormPoly w = random_form(rng, 2, 2);
    std::array<Polynomial, 6> t6;
    for (auto& p : t6) p = rng.polynomial(4, 2, 3);
    Polynomial raw_dot = Polynomial::zero(4);
    for (int c = 0; c < 6; ++c) raw_dot += w.comp[c] * t6[c];
    CHECK(frobenius(upsilon2(w), vtom(t6)) == raw_dot);
  }
}
