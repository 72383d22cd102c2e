#include "feec4d/pentatope.hpp"

#include <algorithm>
#include <stdexcept>

#include "feec4d/integrate.hpp"
#include "feec4d/orthopoly.hpp"
#include "feec4d/refgeom.hpp"

namespace feec4d {

namespace {

Polynomial var(int i) { return Polynomial::variable(4, i); }

// Scaled orthogonal-factor helpers: f(num/den) * den^index, homogenized so
// the factor stays polynomial.
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

struct TupleData {
  int a = 0, b = 0, c = 0, d = 0, e = 0;  // 0-based barycentric indices
  Polynomial sab, sabc, sabcd;            // partial barycentric sums
  Vec4Poly ga, gb, gc, gd;                // constant gradients
};

TupleData tuple_data(const std::vector<Polynomial>& lam, const std::array<int, 5>& t1) {
  TupleData td;
  td.a = t1[0] - 1;
  td.b = t1[1] - 1;
  td.c = t1[2] - 1;
  td.d = t1[3] - 1;
  td.e = t1[4] - 1;
  td.sab = lam[td.a] + lam[td.b];
  td.sabc = td.sab + lam[td.c];
  td.sabcd = td.sabc + lam[td.d];
  td.ga = grad4(lam[td.a]);
  td.gb = grad4(lam[td.b]);
  td.gc = grad4(lam[td.c]);
  td.gd = grad4(lam[td.d]);
  return td;
}

constexpr std::array<std::array<int, 5>, 4> kCyclic4 = {
    {{1, 2, 3, 4, 5}, {2, 3, 4, 5, 1}, {3, 4, 5, 1, 2}, {4, 5, 1, 2, 3}}};
constexpr std::array<std::array<int, 5>, 6> kTuples6 = {
    {{1, 2, 3, 4, 5},
     {2, 3, 4, 5, 1},
     {3, 4, 5, 1, 2},
     {4, 5, 1, 2, 3},
     {5, 1, 2, 3, 4},
     {1, 2, 4, 3, 5}}};

// Keep a vector polynomial only if it enlarges the span.
std::vector<FormPoly> reduce_independent(const std::vector<FormPoly>& members, int s, int max_deg) {
  Span span(4, FormPoly::ncomp(s), max_deg);
  std::vector<FormPoly> out;
  for (const auto& w : members)
    if (span.insert(w.comp)) out.push_back(w);
  return out;
}

}  // namespace

std::array<Mat4Poly, 4> b_matrices() {
  auto six = [](const Polynomial& w12, const Polynomial& w13, const Polynomial& w14,
                const Polynomial& w23, const Polynomial& w24, const Polynomial& w34) {
    return std::array<Polynomial, 6>{w12, w13, w14, w23, w24, w34};
  };
  Polynomial z = Polynomial::zero(4);
  Polynomial x1 = var(0), x2 = var(1), x3 = var(2), x4 = var(3);
  return {vtom(six(z, z, z, x4, -x3, x2)), vtom(six(z, -x4, x3, z, z, -x1)),
          vtom(six(x4, z, -x2, z, x1, z)), vtom(six(-x3, x2, z, -x1, z, z))};
}

long long dim_space_t4(int k, int s) {
  long long kk = k;
  switch (s) {
    case 0: return binomial(k + 4, 4);
    case 1: return kk * (kk + 2) * (kk + 3) * (kk + 4) / 6;
    case 2: return kk * (kk * kk * kk + 8 * kk * kk + 19 * kk + 12) / 4;
    case 3: return kk * (kk + 1) * (kk + 2) * (kk + 4) / 6;
    case 4: return binomial(k + 3, 4);
    default: throw std::runtime_error("dim_space_t4: s out of range");
  }
}

long long dim_trace_t4(int k, int s) {
  switch (s) {
    case 0:
      return 5 + 10 * binomial(k - 1, 1) + 10 * binomial(k - 1, 2) + 5 * binomial(k - 1, 3);
    case 1: return 10 * binomial(k, 1) + 20 * binomial(k, 2) + 15 * binomial(k, 3);
    case 2: return 10 * binomial(k + 1, 2) + 15 * binomial(k + 1, 3);
    case 3: return 5 * binomial(k + 2, 3);
    case 4: return 0;
    default: throw std::runtime_error("dim_trace_t4: s out of range");
  }
}

long long dim_volume_t4(int k, int s) {
  switch (s) {
    case 0: return binomial(k - 1, 4);
    case 1: return 4 * binomial(k, 4);
    case 2: return 6 * binomial(k + 1, 4);
    case 3: return 4 * binomial(k + 2, 4);
    case 4: return binomial(k + 3, 4);
    default: throw std::runtime_error("dim_volume_t4: s out of range");
  }
}

std::vector<FormPoly> build_space_t4(int k, int s) {
  if (k < 1 || s < 0 || s > 4) throw std::runtime_error("build_space_t4: bad (k, s)");
  std::vector<FormPoly> members;
  for (int c = 0; c < FormPoly::ncomp(s); ++c)
    for (const auto& m : space_P(4, k - 1)) {
      FormPoly w(s);
      w.comp[c] = m;
      members.push_back(w);
    }
  if (s < 4) {
    for (int c = 0; c < FormPoly::ncomp(s + 1); ++c)
      for (const auto& m : space_Ptilde(4, k - 1)) {
        FormPoly w(s + 1);
        w.comp[c] = m;
        members.push_back(koszul(w));
      }
  }
  return reduce_independent(members, s, k);
}

std::vector<FormPoly> build_space_t4_constraint(int k, int s) {
  if (k < 1) throw std::runtime_error("build_space_t4_constraint: k must be >= 1");
  std::vector<FormPoly> out;
  switch (s) {
    case 0:
      for (const auto& m : space_P(4, k)) out.push_back(form_from_scalar(0, m));
      return out;
    case 1: {
      for (const auto& v : space_P_vec(4, k - 1, 4))
        out.push_back(form_from_proxy1({v[0], v[1], v[2], v[3]}));
      // homogeneous tail {p in (Ptilde^k)^4 | p . x = 0} by exact kernel
      auto mono = space_Ptilde(4, k);
      MonomialTable table(4, k + 1);
      RatMat a(table.size(), RatVec(4 * mono.size()));
      for (int c = 0; c < 4; ++c)
        for (std::size_t mi = 0; mi < mono.size(); ++mi) {
          Polynomial q = mono[mi] * var(c);
          for (const auto& term : q.terms())
            a[table.index_of(term.first)][c * mono.size() + mi] = term.second;
        }
      for (const auto& ker : kernel_basis(a)) {
        Vec4Poly p;
        p.fill(Polynomial::zero(4));
        for (int c = 0; c < 4; ++c)
          for (std::size_t mi = 0; mi < mono.size(); ++mi)
            p[c] += mono[mi] * ker[c * mono.size() + mi];
        out.push_back(form_from_proxy1(p));
      }
      return out;
    }
    case 2: {
      for (const auto& v : space_P_vec(4, k - 1, 6))
        out.push_back(form_from_vec6({v[0], v[1], v[2], v[3], v[4], v[5]}));
      // homogeneous tail {B in L((Ptilde^k)^6) | B x = 0} by exact kernel
      auto mono = space_Ptilde(4, k);
      MonomialTable table(4, k + 1);
      RatMat a(4 * table.size(), RatVec(6 * mono.size()));
      Vec4Poly x = {var(0), var(1), var(2), var(3)};
      for (int c = 0; c < 6; ++c)
        for (std::size_t mi = 0; mi < mono.size(); ++mi) {
          std::array<Polynomial, 6> w6;
          w6.fill(Polynomial::zero(4));
          w6[c] = mono[mi];
          Mat4Poly b = vtom(w6);
          for (int row = 0; row < 4; ++row) {
            Polynomial bx = Polynomial::zero(4);
            for (int col = 0; col < 4; ++col) bx += b[row][col] * x[col];
            for (const auto& term : bx.terms())
              a[row * table.size() + table.index_of(term.first)][c * mono.size() + mi] =
                  term.second;
          }
        }
      for (const auto& ker : kernel_basis(a)) {
        std::array<Polynomial, 6> w6;
        w6.fill(Polynomial::zero(4));
        for (int c = 0; c < 6; ++c)
          for (std::size_t mi = 0; mi < mono.size(); ++mi) w6[c] += mono[mi] * ker[c * mono.size() + mi];
        out.push_back(form_from_vec6(w6));
      }
      return out;
    }
    case 3: {
      for (const auto& v : space_P_vec(4, k - 1, 4))
        out.push_back(form_from_proxy3({v[0], v[1], v[2], v[3]}));
      for (const auto& m : space_Ptilde(4, k - 1))
        out.push_back(form_from_proxy3({m * var(0), m * var(1), m * var(2), m * var(3)}));
      return out;
    }
    case 4:
      for (const auto& m : space_P(4, k - 1)) out.push_back(form_from_scalar(4, m));
      return out;
    default: throw std::runtime_error("build_space_t4_constraint: s out of range");
  }
}

std::vector<FormPoly> bubble_basis_t4(int k, int s) {
  if (k < 1) throw std::runtime_error("bubble_basis_t4: k must be >= 1");
  auto lam = barycentrics_t4();
  std::vector<FormPoly> out;
  switch (s) {
    case 0: {
      Polynomial s2 = lam[0] + lam[1], s3 = s2 + lam[2], s4 = s3 + lam[3];
      for (int n = 5; n <= k; ++n)
        for (int i = 2; i <= n - 3; ++i)
          for (int j = 1; j <= n - i - 2; ++j)
            for (int l = 1; l <= n - i - j - 1; ++l) {
              int m = n - i - j - l;
              Polynomial f = il_s(i, lam[1], s2) * ij_s(j, 2 * i, lam[2], s3) *
                             ij_s(l, 2 * (i + j), lam[3], s4) *
                             integrated_jacobi(m, 2 * (i + j + l)).compose({lam[4]});
              out.push_back(form_from_scalar(0, f));
            }
      return out;
    }
    case 1: {
      for (const auto& t : kCyclic4) {
        TupleData td = tuple_data(lam, t);
        Vec4Poly dir;
        for (int q = 0; q < 4; ++q) dir[q] = lam[td.a] * td.gb[q] - lam[td.b] * td.ga[q];
        for (int n = 3; n <= k - 1; ++n)
          for (int i = 0; i <= n - 3; ++i)
            for (int j = 1; j <= n - i - 2; ++j)
              for (int l = 1; l <= n - i - j - 1; ++l) {
                int m = n - i - j - l;
                Polynomial f = pl_s(i, lam[td.b], td.sab) *
                               ij_s(j, 2 * i + 1, lam[td.c], td.sabc) *
                               ij_s(l, 2 * (i + j), lam[td.d], td.sabcd) *
                               integrated_jacobi(m, 2 * (i + j + l)).compose({lam[td.e]});
                Vec4Poly e;
                for (int q = 0; q < 4; ++q) e[q] = f * dir[q];
                out.push_back(form_from_proxy1(e));
              }
      }
      return out;
    }
    case 2: {
      for (const auto& t : kTuples6) {
        TupleData td = tuple_data(lam, t);
        Mat4Poly bc = outer(td.gb, td.gc), cb = outer(td.gc, td.gb);
        Mat4Poly ca = outer(td.gc, td.ga), ac = outer(td.ga, td.gc);
        Mat4Poly ab = outer(td.ga, td.gb), ba = outer(td.gb, td.ga);
        Mat4Poly mat;
        for (int r = 0; r < 4; ++r)
          for (int c = 0; c < 4; ++c)
            mat[r][c] = lam[td.a] * (bc[r][c] - cb[r][c]) + lam[td.b] * (ca[r][c] - ac[r][c]) +
                        lam[td.c] * (ab[r][c] - ba[r][c]);
        for (int n = 2; n <= k - 1; ++n)
          for (int i = 0; i <= n - 2; ++i)
            for (int j = 0; j <= n - i - 2; ++j)
              for (int l = 1; l <= n - i - j - 1; ++l) {
                int m = n - i - j - l;
                Polynomial f = pl_s(i, lam[td.b], td.sab) *
                               pj_s(j, 2 * i + 1, lam[td.c], td.sabc) *
                               ij_s(l, 2 * (i + j + 1), lam[td.d], td.sabcd) *
                               integrated_jacobi(m, 2 * (i + j + l)).compose({lam[td.e]});
                Mat4Poly fmat;
                for (int r = 0; r < 4; ++r)
                  for (int c = 0; c < 4; ++c) fmat[r][c] = f * mat[r][c];
                out.push_back(form_from_proxy2(fmat));
              }
      }
      return out;
    }
    case 3: {
      for (const auto& t : kCyclic4) {
        TupleData td = tuple_data(lam, t);
        Vec4Poly tbcd = triple_cross(td.gb, td.gc, td.gd);
        Vec4Poly tcda = triple_cross(td.gc, td.gd, td.ga);
        Vec4Poly tdab = triple_cross(td.gd, td.ga, td.gb);
        Vec4Poly tabc = triple_cross(td.ga, td.gb, td.gc);
        Vec4Poly dir;
        for (int q = 0; q < 4; ++q)
          dir[q] = lam[td.a] * tbcd[q] - lam[td.b] * tcda[q] + lam[td.c] * tdab[q] -
                   lam[td.d] * tabc[q];
        for (int n = 1; n <= k - 1; ++n)
          for (int i = 0; i <= n - 1; ++i)
            for (int j = 0; j <= n - i - 1; ++j)
              for (int l = 0; l <= n - i - j - 1; ++l) {
                int m = n - i - j - l;
                Polynomial f = pl_s(i, lam[td.b], td.sab) *
                               pj_s(j, 2 * i + 1, lam[td.c], td.sabc) *
                               pj_s(l, 2 * (i + j + 1), lam[td.d], td.sabcd) *
                               integrated_jacobi(m, 2 * (i + j + l) + 3).compose({lam[td.e]});
                Vec4Poly g;
                for (int q = 0; q < 4; ++q) g[q] = f * dir[q];
                out.push_back(form_from_proxy3(g));
              }
      }
      return out;
    }
    case 4: {
      Polynomial s2 = lam[0] + lam[1], s3 = s2 + lam[2], s4 = s3 + lam[3];
      for (int n = 0; n <= k - 1; ++n)
        for (int i = 0; i <= n; ++i)
          for (int j = 0; j <= n - i; ++j)
            for (int l = 0; l <= n - i - j; ++l) {
              int m = n - i - j - l;
              Polynomial f = pl_s(i, lam[1], s2) * pj_s(j, 2 * i + 1, lam[2], s3) *
                             pj_s(l, 2 * (i + j + 1), lam[3], s4) *
                             jacobi(m, 2 * (i + j + l) + 3).compose({lam[4]});
              out.push_back(form_from_scalar(4, f));
            }
      return out;
    }
    default: throw std::runtime_error("bubble_basis_t4: s out of range");
  }
}

std::vector<Dof> dofs_t4(int k, int s) {
  if (k < 1 || s < 0 || s > 4) throw std::runtime_error("dofs_t4: bad (k, s)");
  const RefCell& cell = RefCell::get(CellKind::pentatope);
  std::vector<Dof> dofs = all_trace_dofs(cell, s, k);
  const int vol_deg[5] = {k - 5, k - 4, k - 3, k - 2, k - 1};
  const int ncomp = FormPoly::ncomp(s);
  if (s == 0 || s == 4) {
    for (const auto& m : space_P(4, vol_deg[s])) dofs.push_back(make_volume_dof(s, {m}));
  } else if (s == 3) {
    // Tests are stated for the vector proxy; component c of the proxy pairs
    // with raw component 3-c carrying the alternating sign.
    for (int c = 0; c < 4; ++c)
      for (const auto& m : space_P(4, vol_deg[s])) {
        std::vector<Polynomial> t(4, Polynomial::zero(4));
        t[3 - c] = c % 2 == 0 ? m : -m;
        dofs.push_back(make_volume_dof(s, t));
      }
  } else {
    for (int c = 0; c < ncomp; ++c)
      for (const auto& m : space_P(4, vol_deg[s])) {
        std::vector<Polynomial> t(ncomp, Polynomial::zero(4));
        t[c] = m;
        dofs.push_back(make_volume_dof(s, t));
      }
  }
  return dofs;
}

Rational unisolvency_det_t4(int k, int s) {
  const RefCell& cell = RefCell::get(CellKind::pentatope);
  auto basis = build_space_t4(k, s);
  auto dofs = dofs_t4(k, s);
  if (basis.size() != dofs.size())
    throw std::runtime_error("unisolvency_det_t4: dof count differs from space dimension");
  return det(dof_matrix(cell, dofs, basis));
}

Element element_t4(int k, int s) {
  return Element{k, s, build_space_t4(k, s), dofs_t4(k, s), bubble_basis_t4(k, s)};
}

ExactnessReport check_exactness(const std::array<std::vector<FormPoly>, 5>& v) {
  ExactnessReport rep;
  int max_deg = 1;
  for (const auto& space : v)
    for (const auto& w : space)
      for (const auto& c : w.comp) max_deg = std::max(max_deg, c.degree());
  for (int s = 0; s < 5; ++s) rep.dim_v[s] = static_cast<long long>(v[s].size());
  for (int s = 0; s < 4; ++s) {
    Span target(4, FormPoly::ncomp(s + 1), max_deg);
    for (const auto& w : v[s + 1]) target.insert(w.comp);
    Span image(4, FormPoly::ncomp(s + 1), max_deg);
    bool inside = true;
    for (const auto& w : v[s]) {
      FormPoly dw = dform(w);
      inside = inside && target.contains(dw.comp);
      image.insert(dw.comp);
    }
    rep.d_maps_into_next[s] = inside;
    rep.rank_d[s] = image.rank();
  }
  bool ok = rep.dim_v[0] - rep.rank_d[0] == 1;
  for (int s = 0; s < 4; ++s) ok = ok && rep.d_maps_into_next[s];
  for (int s = 1; s < 4; ++s) ok = ok && rep.rank_d[s - 1] == rep.dim_v[s] - rep.rank_d[s];
  ok = ok && rep.rank_d[3] == rep.dim_v[4];
  rep.exact = ok;
  return rep;
}

ExactnessReport exactness_t4(int k) {
  std::array<std::vector<FormPoly>, 5> v;
  for (int s = 0; s <= 4; ++s) v[s] = build_space_t4(k, s);
  return check_exactness(v);
}

}  // namespace feec4d
