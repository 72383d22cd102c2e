#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <vector>

#include "feec4d/tracedof.hpp"
#include "test_util.hpp"

using namespace feec4d;
using testutil::Rng;

namespace {

FormPoly random_form(Rng& rng, int s, int deg) {
  FormPoly w(s);
  for (auto& c : w.comp) c = rng.polynomial(4, deg, 4);
  return w;
}

const Facet& find_facet(const RefCell& cell, const std::vector<int>& verts) {
  for (const auto& f : cell.facets())
    if (f.entity.verts == verts) return f;
  throw std::runtime_error("facet not found");
}

Rational norm2(const std::array<Rational, 4>& v) {
  Rational out;
  for (const auto& x : v) out += x * x;
  return out;
}

long long t4_trace_dim(int s, int k) {
  switch (s) {
    case 0:
      return 5 + 10 * (k - 1) + 10 * binomial(k - 1, 2) + 5 * binomial(k - 1, 3);
    case 1: return 10 * k + 20 * binomial(k, 2) + 15 * binomial(k, 3);
    case 2: return 10 * binomial(k + 1, 2) + 15 * binomial(k + 1, 3);
    case 3: return 5 * binomial(k + 2, 3);
    default: return 0;
  }
}

long long w4_trace_dim(int s, int k) {
  long long kk = k;
  switch (s) {
    case 0: return kk * (7 * kk * kk + 17) / 3;
    case 1: return kk * (7 * kk * kk + 3 * kk + 6);
    case 2: return kk * (7 * kk * kk + 6 * kk + 1);
    case 3: return kk * (7 * kk * kk + 9 * kk + 2) / 3;
    default: return 0;
  }
}

}  // namespace

TEST_CASE("trace formulas on the x4 = +1 facet of the prism") {
  const RefCell& w4 = RefCell::get(CellKind::tet_prism);
  const Facet& top = find_facet(w4, {4, 5, 6, 7});
  REQUIRE(top.normal == std::array<Rational, 4>{Rational(0), Rational(0), Rational(0), Rational(1)});
  auto coords = top.chart.coords();
  Rng rng(31);

  // 0-form: the restriction itself.
  FormPoly w0 = random_form(rng, 0, 3);
  TraceResult t0 = trace(w0, w4, top);
  REQUIRE(t0.raw.size() == 1);
  CHECK(t0.raw[0] == w0.comp[0].compose(coords));
  REQUIRE(t0.local.size() == 1);
  CHECK(t0.local[0] == t0.raw[0]);

  // 1-form: bivector with the first components of E in the last column.
  FormPoly w1 = random_form(rng, 1, 3);
  Vec4Poly e = upsilon1(w1);
  TraceResult t1 = trace(w1, w4, top);
  REQUIRE(t1.raw.size() == 16);
  for (int i = 0; i < 3; ++i) {
    CHECK(t1.raw[4 * i + 3] == e[i].compose(coords) * Rational(1, 2));
    CHECK(t1.raw[4 * 3 + i] == e[i].compose(coords) * Rational(-1, 2));
    for (int j = 0; j < 3; ++j) CHECK(t1.raw[4 * i + j].is_zero());
  }
  CHECK(t1.raw[15].is_zero());

  // 2-form: 2 [F23, -F13, F12, 0]^T.
  FormPoly w2 = random_form(rng, 2, 3);
  Mat4Poly f = upsilon2(w2);
  TraceResult t2 = trace(w2, w4, top);
  REQUIRE(t2.raw.size() == 4);
  CHECK(t2.raw[0] == f[1][2].compose(coords) * Rational(2));
  CHECK(t2.raw[1] == f[0][2].compose(coords) * Rational(-2));
  CHECK(t2.raw[2] == f[0][1].compose(coords) * Rational(2));
  CHECK(t2.raw[3].is_zero());

  // 3-form: the normal component G4.
  FormPoly w3 = random_form(rng, 3, 3);
  TraceResult t3 = trace(w3, w4, top);
  REQUIRE(t3.raw.size() == 1);
  CHECK(t3.raw[0] == upsilon3(w3)[3].compose(coords));

  // 4-forms have no trace.
  FormPoly w4f = random_form(rng, 4, 2);
  CHECK_THROWS(trace(w4f, w4, top));
}

TEST_CASE("raw and local traces agree through the chart identification") {
  Rng rng(32);
  for (CellKind kind : {CellKind::pentatope, CellKind::tet_prism}) {
    const RefCell& cell = RefCell::get(kind);
    for (const auto& f : cell.facets()) {
      Rational n2 = norm2(f.normal);
      Vec4Poly nvec = const_vec4(f.normal);
      std::array<Vec4Poly, 3> tvec = {const_vec4(f.chart.tangents[0]),
                                      const_vec4(f.chart.tangents[1]),
                                      const_vec4(f.chart.tangents[2])};

      // s=1: t_i^T W n = |n|^2/2 * local_i.
      FormPoly w1 = random_form(rng, 1, 2);
      TraceResult t1 = trace(w1, cell, f);
      for (int i = 0; i < 3; ++i) {
        Polynomial lhs = Polynomial::zero(3);
        for (int a = 0; a < 4; ++a)
          for (int b = 0; b < 4; ++b)
            lhs += t1.raw[4 * a + b] * (f.chart.tangents[i][a] * f.normal[b]);
        CHECK(lhs == t1.local[i] * (n2 / Rational(2)));
      }

      // s=2: V . (t_i x t_j x n) = |n|^2 * local_(i,j).
      FormPoly w2 = random_form(rng, 2, 2);
      TraceResult t2 = trace(w2, cell, f);
      const auto& pairs = subset_tuples(3, 2);
      for (std::size_t p = 0; p < pairs.size(); ++p) {
        Vec4Poly txn = triple_cross(tvec[pairs[p][0]], tvec[pairs[p][1]], nvec);
        Polynomial lhs = Polynomial::zero(3);
        for (int a = 0; a < 4; ++a)
          lhs += t2.raw[a] * txn[a].coefficient({0, 0, 0, 0});
        CHECK(lhs == t2.local[p] * n2);
      }

      // s=3: t1 x t2 x t3 = c n and local = c raw.
      FormPoly w3 = random_form(rng, 3, 2);
      TraceResult t3 = trace(w3, cell, f);
      Vec4Poly tx = triple_cross(tvec[0], tvec[1], tvec[2]);
      Rational c = (tx[0].coefficient({0, 0, 0, 0}) * f.normal[0] +
                    tx[1].coefficient({0, 0, 0, 0}) * f.normal[1] +
                    tx[2].coefficient({0, 0, 0, 0}) * f.normal[2] +
                    tx[3].coefficient({0, 0, 0, 0}) * f.normal[3]) /
                   n2;
      for (int a = 0; a < 4; ++a)
        CHECK(tx[a].coefficient({0, 0, 0, 0}) == c * f.normal[a]);
      CHECK(t3.local[0] == t3.raw[0] * c);
    }
  }
}

TEST_CASE("trace dof counts match the closed-form dimensions") {
  for (int k = 1; k <= 4; ++k) {
    const RefCell& t4 = RefCell::get(CellKind::pentatope);
    for (int s = 0; s <= 3; ++s)
      CHECK(static_cast<long long>(all_trace_dofs(t4, s, k).size()) == t4_trace_dim(s, k));
    const RefCell& w4 = RefCell::get(CellKind::tet_prism);
    for (int s = 0; s <= 3; ++s)
      CHECK(static_cast<long long>(all_trace_dofs(w4, s, k).size()) == w4_trace_dim(s, k));
  }

  // Per-type group sizes quoted for edges: 10(k-1)/10k on the pentatope and
  // 16(k-1)/16k on the prism.
  for (int k = 1; k <= 3; ++k) {
    for (CellKind kind : {CellKind::pentatope, CellKind::tet_prism}) {
      const RefCell& cell = RefCell::get(kind);
      long long e0 = 0, e1 = 0;
      for (const auto& e : cell.entities(EntityType::edge)) {
        e0 += static_cast<long long>(entity_dofs(cell, e, 0, k).size());
        e1 += static_cast<long long>(entity_dofs(cell, e, 1, k).size());
      }
      long long nedge = kind == CellKind::pentatope ? 10 : 16;
      CHECK(e0 == nedge * (k - 1));
      CHECK(e1 == nedge * k);
    }
  }

  // Negative-degree test spaces produce empty groups.
  const RefCell& t4 = RefCell::get(CellKind::pentatope);
  const Entity& tet = t4.entities(EntityType::tet)[0];
  CHECK(entity_dofs(t4, tet, 0, 3).empty());
  const Entity& tri = t4.entities(EntityType::triangle)[0];
  CHECK(entity_dofs(t4, tri, 0, 2).empty());
}

TEST_CASE("entity dof error cases") {
  const RefCell& t4 = RefCell::get(CellKind::pentatope);
  CHECK_THROWS(entity_dofs(t4, t4.entities(EntityType::vertex)[0], 1, 2));
  CHECK_THROWS(entity_dofs(t4, t4.entities(EntityType::triangle)[0], 3, 2));
  CHECK_THROWS(entity_dofs(t4, t4.entities(EntityType::edge)[0], 0, 0));
}

TEST_CASE("dof application examples") {
  const RefCell& t4 = RefCell::get(CellKind::pentatope);

  // Vertex dofs pick out shape-function values.
  auto vdofs = entity_dofs(t4, t4.entities(EntityType::vertex)[0], 0, 2);
  REQUIRE(vdofs.size() == 1);
  FormPoly n0 = form_from_scalar(0, t4.shape()[0]);
  FormPoly n1 = form_from_scalar(0, t4.shape()[1]);
  CHECK(apply_dof(t4, vdofs[0], n0) == Rational(1));
  CHECK(apply_dof(t4, vdofs[0], n1) == Rational(0));

  // Lowest-order edge dofs integrate the tangential component: on the
  // gradient of p they give the difference of endpoint values, so they all
  // vanish for p = lam1 lam2 (zero at every vertex).
  auto bary = barycentrics_t4();
  FormPoly grad12 = dform(form_from_scalar(0, bary[0] * bary[1]));
  for (const auto& e : t4.entities(EntityType::edge)) {
    auto edofs = entity_dofs(t4, e, 1, 1);
    REQUIRE(edofs.size() == 1);
    CHECK(apply_dof(t4, edofs[0], grad12) == Rational(0));
  }
  // And on grad(lam_j) over edge {i,j} they give exactly 1.
  for (const auto& e : t4.entities(EntityType::edge)) {
    FormPoly gj = dform(form_from_scalar(0, bary[e.verts[1]]));
    auto edofs = entity_dofs(t4, e, 1, 1);
    CHECK(apply_dof(t4, edofs[0], gj) == Rational(1));
    FormPoly gi = dform(form_from_scalar(0, bary[e.verts[0]]));
    CHECK(apply_dof(t4, edofs[0], gi) == Rational(-1));
  }

  // Every dof kills the zero form, and application is linear.
  Rng rng(33);
  const RefCell& w4 = RefCell::get(CellKind::tet_prism);
  for (int s = 0; s <= 3; ++s) {
    auto dofs = all_trace_dofs(w4, s, 2);
    FormPoly zero(s);
    FormPoly a = random_form(rng, s, 2);
    FormPoly b = random_form(rng, s, 2);
    Rational ca = rng.nonzero_rational(), cb = rng.nonzero_rational();
    FormPoly combo(s);
    for (int c = 0; c < FormPoly::ncomp(s); ++c)
      combo.comp[c] = a.comp[c] * ca + b.comp[c] * cb;
    for (std::size_t i = 0; i < dofs.size(); i += 7) {
      CHECK(apply_dof(w4, dofs[i], zero) == Rational(0));
      CHECK(apply_dof(w4, dofs[i], combo) ==
            ca * apply_dof(w4, dofs[i], a) + cb * apply_dof(w4, dofs[i], b));
    }
  }
}

TEST_CASE("volume dofs pair tests with raw components") {
  Rng rng(34);
  const RefCell& t4 = RefCell::get(CellKind::pentatope);
  FormPoly w = random_form(rng, 2, 2);
  std::vector<Polynomial> tests;
  for (int c = 0; c < 6; ++c) tests.push_back(rng.polynomial(4, 2, 3));
  Dof d = make_volume_dof(2, tests);
  Polynomial acc = Polynomial::zero(4);
  for (int c = 0; c < 6; ++c) acc += w.comp[c] * tests[c];
  CHECK(apply_dof(t4, d, w) == integrate(acc, Domain::ref_pentatope));
  CHECK_THROWS(make_volume_dof(1, tests));
}

TEST_CASE("dof matrix agrees with individual application") {
  Rng rng(35);
  for (CellKind kind : {CellKind::pentatope, CellKind::tet_prism}) {
    const RefCell& cell = RefCell::get(kind);
    auto dofs = all_trace_dofs(cell, 1, 2);
    std::vector<FormPoly> basis;
    for (int j = 0; j < 4; ++j) basis.push_back(random_form(rng, 1, 2));
    // Add one volume dof row to exercise that path too.
    std::vector<Polynomial> tests(4, Polynomial::zero(4));
    tests[0] = Polynomial::constant(4, Rational(1));
    dofs.push_back(make_volume_dof(1, tests));
    RatMat m = dof_matrix(cell, dofs, basis);
    for (std::size_t i = 0; i < dofs.size(); i += 5)
      for (std::size_t j = 0; j < basis.size(); ++j)
        CHECK(m[i][j] == apply_dof(cell, dofs[i], basis[j]));
    CHECK(m.back()[0] == apply_dof(cell, dofs.back(), basis[0]));
  }
}

TEST_CASE("dof groups transform exactly under test-basis recombination") {
  Rng rng(36);
  const RefCell& t4 = RefCell::get(CellKind::pentatope);
  const Entity& tri = t4.entities(EntityType::triangle)[4];
  auto group = entity_dofs(t4, tri, 1, 3);
  const std::size_t n = group.size();
  REQUIRE(n == 6);

  // Random invertible recombination matrix R.
  RatMat r(n, RatVec(n));
  do {
    for (auto& row : r)
      for (auto& x : row) x = rng.rational();
  } while (det(r).is_zero());

  std::vector<Dof> recombined;
  for (std::size_t i = 0; i < n; ++i) {
    Dof d = group[0];
    for (auto& t : d.test) t = Polynomial::zero(2);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t c = 0; c < d.test.size(); ++c)
        d.test[c] += group[j].test[c] * r[i][j];
    recombined.push_back(d);
  }

  for (int rep = 0; rep < 3; ++rep) {
    FormPoly w = random_form(rng, 1, 3);
    RatVec old_vals, new_vals;
    for (const auto& d : group) old_vals.push_back(apply_dof(t4, d, w));
    for (const auto& d : recombined) new_vals.push_back(apply_dof(t4, d, w));
    for (std::size_t i = 0; i < n; ++i) {
      Rational expect;
      for (std::size_t j = 0; j < n; ++j) expect += r[i][j] * old_vals[j];
      CHECK(new_vals[i] == expect);
    }
  }
}
