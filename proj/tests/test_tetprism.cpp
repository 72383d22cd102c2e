#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <string>
#include <vector>

#include "feec4d/integrate.hpp"
#include "feec4d/linalg.hpp"
#include "feec4d/refgeom.hpp"
#include "feec4d/tetprism.hpp"
#include "test_util.hpp"

using namespace feec4d;
using testutil::Rng;

namespace {

std::vector<VecPoly> comps(const std::vector<FormPoly>& fam) {
  std::vector<VecPoly> out;
  for (const auto& w : fam) out.push_back(w.comp);
  return out;
}

Span span_of(const std::vector<FormPoly>& fam, int s, int max_deg) {
  Span sp(4, FormPoly::ncomp(s), max_deg);
  for (const auto& w : fam) sp.insert(w.comp);
  return sp;
}

// Tensor-degree bound of the prism spaces: segment degree and tetrahedral
// degree are capped separately, so total degree runs up to 2k.
int prism_deg(const std::vector<FormPoly>& fam) {
  int d = 1;
  for (const auto& w : fam)
    for (const auto& c : w.comp) d = std::max(d, c.degree());
  return d;
}

// Independent homogeneous tangential kernel for the block cross-checks:
// {p in (Ptilde^k)^3 : p . x = 0} assembled by brute coefficient elimination.
std::vector<VecPoly> kernel3_oracle(int k) {
  auto mono = space_Ptilde(3, k);
  MonomialTable table(3, k + 1);
  RatMat a(table.size(), RatVec(3 * mono.size()));
  for (int c = 0; c < 3; ++c)
    for (std::size_t mi = 0; mi < mono.size(); ++mi) {
      Polynomial q = mono[mi] * Polynomial::variable(3, c);
      for (const auto& term : q.terms())
        a[table.index_of(term.first)][c * mono.size() + mi] = term.second;
    }
  std::vector<VecPoly> out;
  for (const auto& ker : kernel_basis(a)) {
    VecPoly p(3, Polynomial::zero(3));
    for (int c = 0; c < 3; ++c)
      for (std::size_t mi = 0; mi < mono.size(); ++mi) p[c] += mono[mi] * ker[c * mono.size() + mi];
    out.push_back(p);
  }
  return out;
}

FormPoly random_form(Rng& rng, int s, int deg, int nterms) {
  FormPoly w(s);
  for (auto& c : w.comp) c = rng.polynomial(4, deg, nterms);
  return w;
}

}  // namespace

TEST_CASE("building blocks have the classical dimensions") {
  for (int k = 0; k <= 3; ++k) {
    CHECK(block3d("CG_T1", k).members.size() == static_cast<std::size_t>(k + 1));
    CHECK(block3d("DG_T1", k).members.size() == static_cast<std::size_t>(k + 1));
    CHECK(block3d("CG_T3", k).members.size() == static_cast<std::size_t>(dim_P(3, k)));
    CHECK(block3d("DG_T3", k).members.size() == static_cast<std::size_t>(dim_P(3, k)));
  }
  // Nedelec: (k+1)(k+3)(k+4)/2 -> 6, 20, 45; Raviart-Thomas:
  // (k+1)(k+2)(k+4)/2 -> 4, 15, 36.
  const long long ndim[3] = {6, 20, 45};
  const long long rtdim[3] = {4, 15, 36};
  for (int k = 0; k <= 2; ++k) {
    Block3D n = block3d("N_T3", k);
    Block3D rt = block3d("RT_T3", k);
    CHECK(n.members.size() == static_cast<std::size_t>(ndim[k]));
    CHECK(rt.members.size() == static_cast<std::size_t>(rtdim[k]));
    CHECK(n.nvars == 3);
    CHECK(n.ncomps == 3);

    // Cross-route: the same spans from the constraint-kernel characterization
    // (P^k)^3 (+) {p in (Ptilde^{k+1})^3 : p . x = 0} and from the literal
    // (P^k)^3 + x P^k sum.
    std::vector<VecPoly> n_alt = space_P_vec(3, k, 3);
    for (const auto& p : kernel3_oracle(k + 1)) n_alt.push_back(p);
    CHECK(same_span(n.members, n_alt));

    std::vector<VecPoly> rt_alt = space_P_vec(3, k, 3);
    for (const auto& m : space_P(3, k)) {
      VecPoly xm;
      for (int c = 0; c < 3; ++c) xm.push_back(Polynomial::variable(3, c) * m);
      rt_alt.push_back(xm);
    }
    CHECK(same_span(rt.members, rt_alt));
  }
  CHECK_THROWS(block3d("XX_T3", 1));
  CHECK_THROWS(block3d("CG_T1", -1));
}

TEST_CASE("prism space dimensions match the closed forms") {
  const RefCell& cell = RefCell::get(CellKind::tet_prism);
  const long long k1_dims[5] = {8, 16, 14, 6, 1};
  for (int k = 1; k <= 3; ++k)
    for (int s = 0; s <= 4; ++s) {
      auto nrt = nrt_space_w4(k, s);
      auto ten = tensor_space_w4(k, s);
      CHECK(static_cast<long long>(nrt.size()) == dim_space_w4(k, s));
      CHECK(static_cast<long long>(ten.size()) == dim_space_w4(k, s));
      // independence of the stated generators
      Span sp = span_of(nrt, s, prism_deg(nrt));
      CHECK(sp.rank() == static_cast<int>(nrt.size()));
      // tensor degrees: at most k in x4 and at most k in the tet slice
      for (const auto& w : nrt)
        for (const auto& c : w.comp) {
          CHECK(c.degree_in(3) <= k);
          CHECK(c.degree() - c.degree_in(3) <= k);
        }
      if (k == 1) CHECK(static_cast<long long>(nrt.size()) == k1_dims[s]);
      CHECK(dim_space_w4(k, s) ==
            dim_trace_w4(k, s) + dim_volume_w4(k, s));
      CHECK(static_cast<long long>(all_trace_dofs(cell, s, k).size()) == dim_trace_w4(k, s));
    }
  CHECK(dim_space_w4(2, 3) == 42);
  for (int k = 4; k <= 6; ++k)
    for (int s = 0; s <= 4; ++s)
      CHECK(dim_space_w4(k, s) == dim_trace_w4(k, s) + dim_volume_w4(k, s));
  CHECK_THROWS(nrt_space_w4(0, 0));
  CHECK_THROWS(nrt_space_w4(2, 5));
  CHECK_THROWS(tensor_space_w4(0, 2));
}

TEST_CASE("tensor-product and nrt constructions are span-equal") {
  for (int k = 1; k <= 3; ++k)
    for (int s = 0; s <= 4; ++s) {
      auto nrt = nrt_space_w4(k, s);
      auto ten = tensor_space_w4(k, s);
      CHECK(same_span(comps(nrt), comps(ten)));
    }
}

TEST_CASE("bubble factor fields satisfy the divergence identity") {
  auto bf = bubble_factors_w4();
  auto lam = prism_tet_barycentrics();
  auto nu = prism_seg_functions();
  CHECK(bf.theta_seg == nu[0] * nu[1]);
  CHECK(bf.theta_tet == lam[0] * lam[1] * lam[2] * lam[3]);

  const std::array<std::array<int, 4>, 3> tuples = {{{0, 1, 2, 3}, {1, 2, 3, 0}, {2, 3, 0, 1}}};
  for (int r = 0; r < 3; ++r) {
    int a = tuples[r][0], b = tuples[r][1], c = tuples[r][2], d = tuples[r][3];
    Vec3Poly ga = grad3(lam[a]), gb = grad3(lam[b]), gc = grad3(lam[c]);
    // div of the face field is the constant 3 grad(lam_a) . (grad(lam_b) x
    // grad(lam_c)), by direct differentiation.
    Polynomial div = Polynomial::zero(4);
    for (int q = 0; q < 3; ++q) div += bf.face_field[r][q].derivative(q);
    Polynomial expect = dot3(ga, cross3(gb, gc)) * Rational(3);
    CHECK(div == expect);
    CHECK(expect.degree() == 0);

    CHECK(bf.phi_weight[r] == lam[c] * lam[d]);
    CHECK(bf.psi_weight[r] == lam[d]);
    for (int q = 0; q < 3; ++q)
      CHECK(bf.edge_field[r][q] == lam[a] * gb[q] - lam[b] * ga[q]);
  }
}

TEST_CASE("bubble families: counts, membership, independence, annihilation") {
  const RefCell& cell = RefCell::get(CellKind::tet_prism);
  for (int k = 1; k <= 3; ++k)
    for (int s = 0; s <= 4; ++s) {
      auto bub = bubble_basis_w4(k, s);
      CHECK(static_cast<long long>(bub.size()) == dim_volume_w4(k, s));
      if (bub.empty()) continue;

      auto space = nrt_space_w4(k, s);
      int deg = std::max(prism_deg(space), prism_deg(bub));
      Span sp = span_of(space, s, deg);
      for (const auto& w : bub) CHECK(sp.contains(w.comp));

      Span bs = span_of(bub, s, deg);
      CHECK(bs.rank() == static_cast<int>(bub.size()));

      auto tdofs = all_trace_dofs(cell, s, k);
      RatMat m = dof_matrix(cell, tdofs, bub);
      for (const auto& row : m)
        for (const auto& v : row) CHECK(v == Rational(0));
    }

  // first nonempty scalar bubbles appear at k = 4, three of them
  CHECK(bubble_basis_w4(3, 0).empty());
  CHECK(bubble_basis_w4(4, 0).size() == 3);
  CHECK(dim_volume_w4(5, 0) == 16);
  CHECK(static_cast<long long>(bubble_basis_w4(5, 0).size()) == 16);
  CHECK(bubble_basis_w4(1, 3).empty());

  auto b41 = bubble_basis_w4(4, 0);
  Span sp40 = span_of(nrt_space_w4(4, 0), 0, 8);
  for (const auto& w : b41) CHECK(sp40.contains(w.comp));

  // k = 1 volume constant for 4-forms
  auto b14 = bubble_basis_w4(1, 4);
  REQUIRE(b14.size() == 1);
  CHECK(b14[0].comp[0] == Polynomial::constant(4, Rational(1)));
}

TEST_CASE("volume dof tests span the bubble spaces") {
  // The factored families (shared bubble factors times full polynomial
  // products) must span exactly what the orthogonal families span; the
  // volume dof test vectors are precisely those factored members.
  for (int k = 1; k <= 4; ++k)
    for (int s = 0; s <= 4; ++s) {
      if (k == 4 && s != 0) continue;
      auto bub = bubble_basis_w4(k, s);
      std::vector<VecPoly> tests;
      for (const auto& dof : dofs_w4(k, s))
        if (dof.is_volume) tests.push_back(dof.test);
      CHECK(tests.size() == bub.size());
      CHECK(same_span(comps(bub), tests));
    }
}

TEST_CASE("dof sets: sizes, ordering, and the proxy pairing for 3-forms") {
  const RefCell& cell = RefCell::get(CellKind::tet_prism);
  for (int k = 1; k <= 3; ++k)
    for (int s = 0; s <= 4; ++s) {
      auto dofs = dofs_w4(k, s);
      CHECK(static_cast<long long>(dofs.size()) == dim_space_w4(k, s));
      long long ntrace = 0;
      bool seen_volume = false;
      for (const auto& dof : dofs) {
        if (dof.is_volume) {
          seen_volume = true;
        } else {
          CHECK(!seen_volume);  // trace dofs come first
          ++ntrace;
        }
      }
      CHECK(ntrace == dim_trace_w4(k, s));
    }

  auto d10 = dofs_w4(1, 0);
  CHECK(d10.size() == 8);
  for (const auto& dof : d10) CHECK(dof.etype == EntityType::vertex);

  auto d12 = dofs_w4(1, 2);
  CHECK(d12.size() == 14);
  int ntri = 0, nquad = 0;
  for (const auto& dof : d12) {
    CHECK(!dof.is_volume);
    if (dof.etype == EntityType::triangle) ++ntri;
    if (dof.etype == EntityType::quad) ++nquad;
  }
  CHECK(ntri == 8);
  CHECK(nquad == 6);

  auto d21 = dofs_w4(2, 1);
  CHECK(d21.size() == 80);
  for (const auto& dof : d21) CHECK(!dof.is_volume);

  // 3-form volume dofs: stated for the vector proxy, applied to raw
  // components.  Rebuild the first proxy test and compare both pairings.
  auto bf = bubble_factors_w4();
  auto d23 = dofs_w4(2, 3);
  const Dof* first_vol = nullptr;
  for (const auto& dof : d23)
    if (dof.is_volume) {
      first_vol = &dof;
      break;
    }
  REQUIRE(first_vol != nullptr);
  Vec4Poly m = {bf.psi_weight[0] * bf.face_field[0][0], bf.psi_weight[0] * bf.face_field[0][1],
                bf.psi_weight[0] * bf.face_field[0][2], Polynomial::zero(4)};
  CHECK(first_vol->test[0] == -m[3]);
  CHECK(first_vol->test[1] == m[2]);
  CHECK(first_vol->test[2] == -m[1]);
  CHECK(first_vol->test[3] == m[0]);
  Rng rng(923);
  for (int rep = 0; rep < 3; ++rep) {
    FormPoly w = random_form(rng, 3, 2, 5);
    Rational direct = integrate(dot4(upsilon3(w), m), Domain::ref_prism);
    CHECK(apply_dof(cell, *first_vol, w) == direct);
  }

  CHECK_THROWS(dofs_w4(0, 1));
  CHECK_THROWS(dofs_w4(2, 5));
}

TEST_CASE("unisolvency") {
  const RefCell& cell = RefCell::get(CellKind::tet_prism);

  // k = 1 scalar dofs are vertex evaluations: Kronecker on the multilinear
  // shape functions.
  std::vector<FormPoly> shape_forms;
  for (const auto& n : cell.shape()) shape_forms.push_back(form_from_scalar(0, n));
  RatMat m = dof_matrix(cell, dofs_w4(1, 0), shape_forms);
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j)
      CHECK(m[i][j] == (i == j ? Rational(1) : Rational(0)));
  CHECK(det(m) == Rational(1));

  // single 4-form dof at k = 1 integrates the constant against 1
  CHECK(unisolvency_det_w4(1, 4) == cell.measure());
  CHECK(cell.measure() == Rational(8, 3));

  for (int k = 1; k <= 3; ++k)
    for (int s = 0; s <= 4; ++s) {
      CAPTURE(k);
      CAPTURE(s);
      CHECK(unisolvency_det_w4(k, s) != Rational(0));
    }
}

TEST_CASE("polynomial de Rham sequence on the prism is exact") {
  for (int k = 1; k <= 3; ++k) {
    ExactnessReport rep = exactness_w4(k);
    CAPTURE(k);
    CHECK(rep.exact);
    CHECK(rep.dim_v[0] - rep.rank_d[0] == 1);
    for (int s = 0; s <= 4; ++s) CHECK(rep.dim_v[s] == dim_space_w4(k, s));
  }
  ExactnessReport rep1 = exactness_w4(1);
  CHECK(rep1.rank_d[0] == 7);
  CHECK(rep1.rank_d[3] == 1);

  // d composed with d vanishes on the generators
  for (int s = 0; s <= 2; ++s)
    for (const auto& w : nrt_space_w4(2, s)) {
      FormPoly ddw = dform(dform(w));
      for (const auto& c : ddw.comp) CHECK(c.is_zero());
    }
}

TEST_CASE("element aggregate") {
  Element el = element_w4(2, 3);
  CHECK(el.k == 2);
  CHECK(el.s == 3);
  CHECK(el.space.size() == 42);
  CHECK(el.dofs.size() == el.space.size());
  CHECK(static_cast<long long>(el.bubbles.size()) == dim_volume_w4(2, 3));
  CHECK(el.bubbles.size() == 10);
}
