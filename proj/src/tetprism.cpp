#include "feec4d/tetprism.hpp"

#include <stdexcept>

#include "feec4d/linalg.hpp"
#include "feec4d/orthopoly.hpp"
#include "feec4d/refgeom.hpp"

namespace feec4d {

namespace {

Polynomial var3(int i) { return Polynomial::variable(3, i); }

// Scaled orthogonal-factor helpers, as in the pentatope families.
Polynomial il_s(int i, const Polynomial& num, const Polynomial& den) {
  return scaled_compose(integrated_legendre(i), i, num, den);
}
Polynomial ij_s(int i, int alpha, const Polynomial& num, const Polynomial& den) {
  return scaled_compose(integrated_jacobi(i, alpha), i, num, den);
}
Polynomial pl_s(int i, const Polynomial& num, const Polynomial& den) {
  return scaled_compose(legendre(i), i, num, den);
}
Polynomial pj_s(int i, int alpha, const Polynomial& num, const Polynomial& den) {
  return scaled_compose(jacobi(i, alpha), i, num, den);
}

// Segment polynomials substituted at x4; tetrahedral polynomials widened
// from three variables to four.
Polynomial seg4(const Polynomial& p) { return p.compose({Polynomial::variable(4, 3)}); }
Polynomial tet4(const Polynomial& p) { return p.widened(4); }

// Cyclic barycentric tuples (a,b,c,d) of the tetrahedral factor, 0-based.
constexpr std::array<std::array<int, 4>, 3> kCyclic3 = {{{0, 1, 2, 3}, {1, 2, 3, 0}, {2, 3, 0, 1}}};

struct TetTuple {
  int a = 0, b = 0, c = 0, d = 0;
  Polynomial sab, sabc;    // partial barycentric sums
  Vec3Poly ga, gb, gc;     // constant gradients
};

TetTuple tet_tuple(const std::vector<Polynomial>& lam, const std::array<int, 4>& t) {
  TetTuple td;
  td.a = t[0];
  td.b = t[1];
  td.c = t[2];
  td.d = t[3];
  td.sab = lam[td.a] + lam[td.b];
  td.sabc = td.sab + lam[td.c];
  td.ga = grad3(lam[td.a]);
  td.gb = grad3(lam[td.b]);
  td.gc = grad3(lam[td.c]);
  return td;
}

// H1 bubbles of the tetrahedral factor (degree 4..k) and the L2 family
// (degree 0..k-1), as 4-variable polynomials constant in x4.
std::vector<Polynomial> tet_h1_bubbles(int k) {
  auto lam = prism_tet_barycentrics();
  Polynomial s2 = lam[0] + lam[1], s3 = s2 + lam[2];
  std::vector<Polynomial> out;
  for (int n = 4; n <= k; ++n)
    for (int i = 2; i <= n - 2; ++i)
      for (int j = 1; j <= n - i - 1; ++j) {
        int l = n - i - j;
        out.push_back(il_s(i, lam[1], s2) * ij_s(j, 2 * i, lam[2], s3) *
                      integrated_jacobi(l, 2 * (i + j)).compose({lam[3]}));
      }
  return out;
}

std::vector<Polynomial> tet_l2_family(int k) {
  auto lam = prism_tet_barycentrics();
  Polynomial s2 = lam[0] + lam[1], s3 = s2 + lam[2];
  std::vector<Polynomial> out;
  for (int n = 0; n <= k - 1; ++n)
    for (int i = 0; i <= n; ++i)
      for (int j = 0; j <= n - i; ++j) {
        int l = n - i - j;
        out.push_back(pl_s(i, lam[1], s2) * pj_s(j, 2 * i + 1, lam[2], s3) *
                      jacobi(l, 2 * (i + j + 1)).compose({lam[3]}));
      }
  return out;
}

// Scalar coefficient families of the tangential (curl-type) and normal
// (div-type) tetrahedral bubbles for one tuple.
std::vector<Polynomial> tet_curl_scalars(const std::vector<Polynomial>& lam, const TetTuple& td,
                                         int k) {
  std::vector<Polynomial> out;
  for (int n = 2; n <= k - 1; ++n)
    for (int i = 0; i <= n - 2; ++i)
      for (int j = 1; j <= n - i - 1; ++j) {
        int l = n - i - j;
        out.push_back(pl_s(i, lam[td.b], td.sab) * ij_s(j, 2 * i + 1, lam[td.c], td.sabc) *
                      integrated_jacobi(l, 2 * (i + j)).compose({lam[td.d]}));
      }
  return out;
}

std::vector<Polynomial> tet_div_scalars(const std::vector<Polynomial>& lam, const TetTuple& td,
                                        int k) {
  std::vector<Polynomial> out;
  for (int n = 1; n <= k - 1; ++n)
    for (int i = 0; i <= n - 1; ++i)
      for (int j = 0; j <= n - i - 1; ++j) {
        int l = n - i - j;
        out.push_back(pl_s(i, lam[td.b], td.sab) * pj_s(j, 2 * i + 1, lam[td.c], td.sabc) *
                      integrated_jacobi(l, 2 * (i + j + 1)).compose({lam[td.d]}));
      }
  return out;
}

// Segment bubble families in x4: integrated Legendre (2..k) and Legendre
// (0..k-1) composed at nu2.
std::vector<Polynomial> seg_h1_bubbles(int k) {
  Polynomial nu2 = prism_seg_functions()[1];
  std::vector<Polynomial> out;
  for (int m = 2; m <= k; ++m) out.push_back(integrated_legendre(m).compose({nu2}));
  return out;
}

std::vector<Polynomial> seg_l2_family(int k) {
  Polynomial nu2 = prism_seg_functions()[1];
  std::vector<Polynomial> out;
  for (int m = 0; m <= k - 1; ++m) out.push_back(legendre(m).compose({nu2}));
  return out;
}

// Homogeneous tangential kernel {p in (Ptilde^k)^3 : p . x = 0}.
std::vector<Vec3Poly> xdot_kernel3(int k) {
  auto mono = space_Ptilde(3, k);
  MonomialTable table(3, k + 1);
  RatMat a(table.size(), RatVec(3 * mono.size()));
  for (int c = 0; c < 3; ++c)
    for (std::size_t mi = 0; mi < mono.size(); ++mi) {
      Polynomial q = mono[mi] * var3(c);
      for (const auto& term : q.terms())
        a[table.index_of(term.first)][c * mono.size() + mi] = term.second;
    }
  std::vector<Vec3Poly> out;
  for (const auto& ker : kernel_basis(a)) {
    Vec3Poly p;
    p.fill(Polynomial::zero(3));
    for (int c = 0; c < 3; ++c)
      for (std::size_t mi = 0; mi < mono.size(); ++mi) p[c] += mono[mi] * ker[c * mono.size() + mi];
    out.push_back(p);
  }
  return out;
}

// 2-form wedge slice of the tetrahedral factor: members (q1, q2, q3) stand
// for q1 dx2^dx3 + q2 dx1^dx3 + q3 dx1^dx2, free part first, then the
// homogeneous tail Ptilde^{k-1} (x1, -x2, x3).
std::vector<Vec3Poly> tet_two_form_slice(int k) {
  std::vector<Vec3Poly> out;
  for (int c = 0; c < 3; ++c)
    for (const auto& m : space_P(3, k - 1)) {
      Vec3Poly q;
      q.fill(Polynomial::zero(3));
      q[c] = m;
      out.push_back(q);
    }
  for (const auto& m : space_Ptilde(3, k - 1))
    out.push_back({var3(0) * m, -(var3(1) * m), var3(2) * m});
  return out;
}

}  // namespace

Block3D block3d(const std::string& name, int k) {
  if (k < 0) throw std::runtime_error("block3d: k must be >= 0");
  Block3D b;
  b.name = name;
  b.k = k;
  if (name == "CG_T1" || name == "DG_T1") {
    b.nvars = 1;
    b.ncomps = 1;
    for (const auto& m : space_P(1, k)) b.members.push_back({m});
    return b;
  }
  if (name == "CG_T3" || name == "DG_T3") {
    b.nvars = 3;
    b.ncomps = 1;
    for (const auto& m : space_P(3, k)) b.members.push_back({m});
    return b;
  }
  if (name == "N_T3") {
    b.nvars = 3;
    b.ncomps = 3;
    std::vector<VecPoly> gens = space_P_vec(3, k, 3);
    Vec3Poly x = {var3(0), var3(1), var3(2)};
    for (int c = 0; c < 3; ++c)
      for (const auto& m : space_P(3, k)) {
        Vec3Poly e;
        e.fill(Polynomial::zero(3));
        e[c] = m;
        Vec3Poly w = cross3(x, e);
        gens.push_back({w[0], w[1], w[2]});
      }
    b.members = PolySpace::from_generators(3, 3, gens).basis;
    return b;
  }
  if (name == "RT_T3") {
    b.nvars = 3;
    b.ncomps = 3;
    std::vector<VecPoly> gens = space_P_vec(3, k, 3);
    for (const auto& m : space_Ptilde(3, k))
      gens.push_back({var3(0) * m, var3(1) * m, var3(2) * m});
    b.members = PolySpace::from_generators(3, 3, gens).basis;
    return b;
  }
  throw std::runtime_error("block3d: unknown name " + name);
}

BubbleFactors bubble_factors_w4() {
  auto lam = prism_tet_barycentrics();
  auto nu = prism_seg_functions();
  BubbleFactors bf;
  bf.theta_seg = nu[0] * nu[1];
  bf.theta_tet = lam[0] * lam[1] * lam[2] * lam[3];
  for (int r = 0; r < 3; ++r) {
    TetTuple td = tet_tuple(lam, kCyclic3[r]);
    for (int q = 0; q < 3; ++q)
      bf.edge_field[r][q] = lam[td.a] * td.gb[q] - lam[td.b] * td.ga[q];
    bf.phi_weight[r] = lam[td.c] * lam[td.d];
    Vec3Poly bc = cross3(td.gb, td.gc), ca = cross3(td.gc, td.ga), ab = cross3(td.ga, td.gb);
    for (int q = 0; q < 3; ++q)
      bf.face_field[r][q] = lam[td.a] * bc[q] + lam[td.b] * ca[q] + lam[td.c] * ab[q];
    bf.psi_weight[r] = lam[td.d];
  }
  return bf;
}

long long dim_space_w4(int k, int s) {
  long long kk = k;
  switch (s) {
    case 0: return (kk + 1) * (kk + 1) * (kk + 2) * (kk + 3) / 6;
    case 1: return 2 * kk * (kk + 1) * (kk + 2) * (kk + 3) / 3;
    case 2: return kk * kk * (kk + 2) * (kk + 3) / 2 + kk * (kk + 1) * (kk + 1) * (kk + 3) / 2;
    case 3: return kk * (kk + 1) * (kk + 1) * (kk + 2) / 6 + kk * kk * (kk + 1) * (kk + 3) / 2;
    case 4: return kk * kk * (kk + 1) * (kk + 2) / 6;
    default: throw std::runtime_error("dim_space_w4: s out of range");
  }
}

long long dim_trace_w4(int k, int s) {
  long long kk = k;
  switch (s) {
    case 0: return kk * (7 * kk * kk + 17) / 3;
    case 1: return kk * (7 * kk * kk + 3 * kk + 6);
    case 2: return kk * (7 * kk * kk + 6 * kk + 1);
    case 3: return kk * (7 * kk * kk + 9 * kk + 2) / 3;
    case 4: return 0;
    default: throw std::runtime_error("dim_trace_w4: s out of range");
  }
}

long long dim_volume_w4(int k, int s) {
  switch (s) {
    case 0: return (k - 1) * binomial(k - 1, 3);
    case 1: return 3 * (k - 1) * binomial(k, 3) + k * binomial(k - 1, 3);
    case 2: return 3 * k * binomial(k, 3) + 3 * (k - 1) * binomial(k + 1, 3);
    case 3: return 3 * k * binomial(k + 1, 3) + (k - 1) * binomial(k + 2, 3);
    case 4: return k * binomial(k + 2, 3);
    default: throw std::runtime_error("dim_volume_w4: s out of range");
  }
}

std::vector<FormPoly> nrt_space_w4(int k, int s) {
  if (k < 1 || s < 0 || s > 4) throw std::runtime_error("nrt_space_w4: bad (k, s)");
  std::vector<FormPoly> out;
  Polynomial z = Polynomial::zero(4);
  switch (s) {
    case 0:
      for (const auto& g : space_P(1, k))
        for (const auto& q : space_P(3, k)) out.push_back(form_from_scalar(0, seg4(g) * tet4(q)));
      return out;
    case 1: {
      Block3D n = block3d("N_T3", k - 1);
      for (const auto& g1 : space_P(1, k)) {
        Polynomial g = seg4(g1);
        for (const auto& u : n.members)
          out.push_back(form_from_proxy1({g * tet4(u[0]), g * tet4(u[1]), g * tet4(u[2]), z}));
      }
      for (const auto& g1 : space_P(1, k - 1))
        for (const auto& q : space_P(3, k))
          out.push_back(form_from_proxy1({z, z, z, seg4(g1) * tet4(q)}));
      return out;
    }
    case 2: {
      Block3D n = block3d("N_T3", k - 1);
      for (const auto& g1 : space_P(1, k - 1)) {
        Polynomial g = seg4(g1);
        for (const auto& u : n.members)
          out.push_back(form_from_vec6({z, z, g * tet4(u[0]), z, g * tet4(u[1]), g * tet4(u[2])}));
      }
      Block3D rt = block3d("RT_T3", k - 1);
      for (const auto& g1 : space_P(1, k)) {
        Polynomial g = seg4(g1);
        for (const auto& v : rt.members)
          out.push_back(
              form_from_vec6({g * tet4(v[2]), -(g * tet4(v[1])), z, g * tet4(v[0]), z, z}));
      }
      return out;
    }
    case 3: {
      for (const auto& g1 : space_P(1, k))
        for (const auto& q : space_P(3, k - 1))
          out.push_back(form_from_proxy3({z, z, z, seg4(g1) * tet4(q)}));
      Block3D rt = block3d("RT_T3", k - 1);
      for (const auto& g1 : space_P(1, k - 1)) {
        Polynomial g = seg4(g1);
        for (const auto& v : rt.members)
          out.push_back(form_from_proxy3({g * tet4(v[0]), g * tet4(v[1]), g * tet4(v[2]), z}));
      }
      return out;
    }
    case 4:
      for (const auto& g : space_P(1, k - 1))
        for (const auto& q : space_P(3, k - 1))
          out.push_back(form_from_scalar(4, seg4(g) * tet4(q)));
      return out;
    default: return out;
  }
}

std::vector<FormPoly> tensor_space_w4(int k, int s) {
  if (k < 1 || s < 0 || s > 4) throw std::runtime_error("tensor_space_w4: bad (k, s)");
  std::vector<FormPoly> out;
  Polynomial z = Polynomial::zero(4);
  // 1-form slice of the tetrahedral factor: homogeneous kernel first, then
  // the full lower-order components.
  auto one_form_slice = [&]() {
    std::vector<Vec3Poly> u1 = xdot_kernel3(k);
    for (int c = 0; c < 3; ++c)
      for (const auto& m : space_P(3, k - 1)) {
        Vec3Poly q;
        q.fill(Polynomial::zero(3));
        q[c] = m;
        u1.push_back(q);
      }
    return u1;
  };
  switch (s) {
    case 0:
      for (const auto& g : space_P(1, k))
        for (const auto& q : space_P(3, k)) out.push_back(form_from_scalar(0, seg4(g) * tet4(q)));
      return out;
    case 1: {
      for (const auto& g1 : space_P(1, k)) {
        Polynomial g = seg4(g1);
        for (const auto& u : one_form_slice())
          out.push_back(form_from_proxy1({g * tet4(u[0]), g * tet4(u[1]), g * tet4(u[2]), z}));
      }
      for (const auto& g1 : space_P(1, k - 1))
        for (const auto& q : space_P(3, k))
          out.push_back(form_from_proxy1({z, z, z, seg4(g1) * tet4(q)}));
      return out;
    }
    case 2: {
      // (one-form slice) ^ dx4, then the two-form slice of the factor.
      for (const auto& g1 : space_P(1, k - 1)) {
        Polynomial g = seg4(g1);
        for (const auto& u : one_form_slice())
          out.push_back(form_from_vec6({z, z, g * tet4(u[0]), z, g * tet4(u[1]), g * tet4(u[2])}));
      }
      for (const auto& g1 : space_P(1, k)) {
        Polynomial g = seg4(g1);
        for (const auto& q : tet_two_form_slice(k)) {
          FormPoly w(2);
          w.comp[comp_index(2, {1, 2})] = g * tet4(q[0]);
          w.comp[comp_index(2, {0, 2})] = g * tet4(q[1]);
          w.comp[comp_index(2, {0, 1})] = g * tet4(q[2]);
          out.push_back(w);
        }
      }
      return out;
    }
    case 3: {
      for (const auto& g1 : space_P(1, k))
        for (const auto& q : space_P(3, k - 1)) {
          FormPoly w(3);
          w.comp[comp_index(3, {0, 1, 2})] = seg4(g1) * tet4(q);
          out.push_back(w);
        }
      for (const auto& g1 : space_P(1, k - 1)) {
        Polynomial g = seg4(g1);
        for (const auto& q : tet_two_form_slice(k)) {
          FormPoly w(3);
          w.comp[comp_index(3, {1, 2, 3})] = g * tet4(q[0]);
          w.comp[comp_index(3, {0, 2, 3})] = g * tet4(q[1]);
          w.comp[comp_index(3, {0, 1, 3})] = g * tet4(q[2]);
          out.push_back(w);
        }
      }
      return out;
    }
    case 4:
      for (const auto& g : space_P(1, k - 1))
        for (const auto& q : space_P(3, k - 1))
          out.push_back(form_from_scalar(4, seg4(g) * tet4(q)));
      return out;
    default: return out;
  }
}

std::vector<FormPoly> bubble_basis_w4(int k, int s) {
  if (k < 1) throw std::runtime_error("bubble_basis_w4: k must be >= 1");
  auto lam = prism_tet_barycentrics();
  std::vector<FormPoly> out;
  Polynomial z = Polynomial::zero(4);
  switch (s) {
    case 0:
      for (const auto& f : tet_h1_bubbles(k))
        for (const auto& g : seg_h1_bubbles(k)) out.push_back(form_from_scalar(0, f * g));
      return out;
    case 1: {
      for (const auto& t : kCyclic3) {
        TetTuple td = tet_tuple(lam, t);
        Vec3Poly dir;
        for (int q = 0; q < 3; ++q) dir[q] = lam[td.a] * td.gb[q] - lam[td.b] * td.ga[q];
        for (const auto& f : tet_curl_scalars(lam, td, k))
          for (const auto& g : seg_h1_bubbles(k)) {
            Polynomial fg = f * g;
            out.push_back(form_from_proxy1({fg * dir[0], fg * dir[1], fg * dir[2], z}));
          }
      }
      for (const auto& f : tet_h1_bubbles(k))
        for (const auto& g : seg_l2_family(k)) out.push_back(form_from_proxy1({z, z, z, f * g}));
      return out;
    }
    case 2: {
      for (const auto& t : kCyclic3) {
        TetTuple td = tet_tuple(lam, t);
        Vec3Poly dir;
        for (int q = 0; q < 3; ++q) dir[q] = lam[td.a] * td.gb[q] - lam[td.b] * td.ga[q];
        for (const auto& f : tet_curl_scalars(lam, td, k))
          for (const auto& g : seg_l2_family(k)) {
            Polynomial fg = f * g;
            out.push_back(form_from_vec6({z, z, fg * dir[0], z, fg * dir[1], fg * dir[2]}));
          }
      }
      for (const auto& t : kCyclic3) {
        TetTuple td = tet_tuple(lam, t);
        Vec3Poly bc = cross3(td.gb, td.gc), ca = cross3(td.gc, td.ga), ab = cross3(td.ga, td.gb);
        Vec3Poly nrm;
        for (int q = 0; q < 3; ++q)
          nrm[q] = lam[td.a] * bc[q] + lam[td.b] * ca[q] + lam[td.c] * ab[q];
        for (const auto& f : tet_div_scalars(lam, td, k))
          for (const auto& g : seg_h1_bubbles(k)) {
            Polynomial fg = f * g;
            out.push_back(form_from_vec6({fg * nrm[2], -(fg * nrm[1]), z, fg * nrm[0], z, z}));
          }
      }
      return out;
    }
    case 3: {
      for (const auto& f : tet_l2_family(k))
        for (const auto& g : seg_h1_bubbles(k)) out.push_back(form_from_proxy3({z, z, z, f * g}));
      for (const auto& t : kCyclic3) {
        TetTuple td = tet_tuple(lam, t);
        Vec3Poly bc = cross3(td.gb, td.gc), ca = cross3(td.gc, td.ga), ab = cross3(td.ga, td.gb);
        Vec3Poly nrm;
        for (int q = 0; q < 3; ++q)
          nrm[q] = lam[td.a] * bc[q] + lam[td.b] * ca[q] + lam[td.c] * ab[q];
        for (const auto& f : tet_div_scalars(lam, td, k))
          for (const auto& g : seg_l2_family(k)) {
            Polynomial fg = f * g;
            out.push_back(form_from_proxy3({fg * nrm[0], fg * nrm[1], fg * nrm[2], z}));
          }
      }
      return out;
    }
    case 4:
      for (const auto& f : tet_l2_family(k))
        for (const auto& g : seg_l2_family(k)) out.push_back(form_from_scalar(4, f * g));
      return out;
    default: throw std::runtime_error("bubble_basis_w4: s out of range");
  }
}

std::vector<Dof> dofs_w4(int k, int s) {
  if (k < 1 || s < 0 || s > 4) throw std::runtime_error("dofs_w4: bad (k, s)");
  const RefCell& cell = RefCell::get(CellKind::tet_prism);
  std::vector<Dof> dofs = all_trace_dofs(cell, s, k);
  BubbleFactors bf = bubble_factors_w4();
  Polynomial z = Polynomial::zero(4);
  switch (s) {
    case 0:
      for (const auto& p : space_P(1, k - 2))
        for (const auto& q : space_P(3, k - 4))
          dofs.push_back(make_volume_dof(0, {seg4(p) * tet4(q) * bf.theta_tet * bf.theta_seg}));
      break;
    case 1: {
      for (int r = 0; r < 3; ++r)
        for (const auto& p : space_P(1, k - 2))
          for (const auto& q : space_P(3, k - 3)) {
            Polynomial f = seg4(p) * tet4(q) * bf.phi_weight[r] * bf.theta_seg;
            dofs.push_back(make_volume_dof(
                1, {f * bf.edge_field[r][0], f * bf.edge_field[r][1], f * bf.edge_field[r][2], z}));
          }
      for (const auto& p : space_P(1, k - 1))
        for (const auto& q : space_P(3, k - 4))
          dofs.push_back(make_volume_dof(1, {z, z, z, seg4(p) * tet4(q) * bf.theta_tet}));
      break;
    }
    case 2: {
      for (int r = 0; r < 3; ++r)
        for (const auto& p : space_P(1, k - 1))
          for (const auto& q : space_P(3, k - 3)) {
            Polynomial f = seg4(p) * tet4(q) * bf.phi_weight[r];
            dofs.push_back(make_volume_dof(
                2, {z, z, f * bf.edge_field[r][0], z, f * bf.edge_field[r][1],
                    f * bf.edge_field[r][2]}));
          }
      for (int r = 0; r < 3; ++r)
        for (const auto& p : space_P(1, k - 2))
          for (const auto& q : space_P(3, k - 2)) {
            Polynomial f = seg4(p) * tet4(q) * bf.psi_weight[r] * bf.theta_seg;
            dofs.push_back(make_volume_dof(
                2, {f * bf.face_field[r][2], -(f * bf.face_field[r][1]), z,
                    f * bf.face_field[r][0], z, z}));
          }
      break;
    }
    case 3: {
      // Tests are stated for the vector proxy (m1,m2,m3,m4); the raw pairing
      // vector is (-m4, m3, -m2, m1), as in the pentatope volume dofs.
      for (int r = 0; r < 3; ++r)
        for (const auto& p : space_P(1, k - 1))
          for (const auto& q : space_P(3, k - 2)) {
            Polynomial f = seg4(p) * tet4(q) * bf.psi_weight[r];
            dofs.push_back(make_volume_dof(
                3, {z, f * bf.face_field[r][2], -(f * bf.face_field[r][1]),
                    f * bf.face_field[r][0]}));
          }
      for (const auto& p : space_P(1, k - 2))
        for (const auto& q : space_P(3, k - 1)) {
          Polynomial m4 = seg4(p) * tet4(q) * bf.theta_seg;
          dofs.push_back(make_volume_dof(3, {-m4, z, z, z}));
        }
      break;
    }
    case 4:
      for (const auto& p : space_P(1, k - 1))
        for (const auto& q : space_P(3, k - 1))
          dofs.push_back(make_volume_dof(4, {seg4(p) * tet4(q)}));
      break;
    default: break;
  }
  return dofs;
}

Rational unisolvency_det_w4(int k, int s) {
  const RefCell& cell = RefCell::get(CellKind::tet_prism);
  auto basis = nrt_space_w4(k, s);
  auto dofs = dofs_w4(k, s);
  if (basis.size() != dofs.size())
    throw std::runtime_error("unisolvency_det_w4: dof count differs from space dimension");
  return det(dof_matrix(cell, dofs, basis));
}

Element element_w4(int k, int s) {
  return Element{k, s, nrt_space_w4(k, s), dofs_w4(k, s), bubble_basis_w4(k, s)};
}

ExactnessReport exactness_w4(int k) {
  std::array<std::vector<FormPoly>, 5> v;
  for (int s = 0; s <= 4; ++s) v[s] = nrt_space_w4(k, s);
  return check_exactness(v);
}

}  // namespace feec4d
