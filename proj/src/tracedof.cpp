#include "feec4d/tracedof.hpp"

#include <map>
#include <stdexcept>
#include <utility>

namespace feec4d {

namespace {

/// Monomials in three chart variables with (u1,u2)-total degree <= tri_deg
/// and u3-degree <= seg_deg; empty if either bound is negative.
std::vector<Polynomial> tri_seg_monomials(int tri_deg, int seg_deg) {
  std::vector<Polynomial> out;
  if (tri_deg < 0 || seg_deg < 0) return out;
  for (int m = 0; m <= seg_deg; ++m)
    for (int d = 0; d <= tri_deg; ++d)
      for (int i = d; i >= 0; --i) {
        MultiIndex mi = {i, d - i, m, 0};
        out.push_back(Polynomial::monomial(3, mi, Rational(1)));
      }
  return out;
}

std::vector<Polynomial> monomial_polys(int nvars, int deg) {
  std::vector<Polynomial> out;
  for (const auto& m : monomials_up_to(nvars, deg))
    out.push_back(Polynomial::monomial(nvars, m, Rational(1)));
  return out;
}

std::vector<Polynomial> boxed_polys(const std::vector<int>& caps) {
  std::vector<Polynomial> out;
  for (const auto& m : monomials_boxed(caps))
    out.push_back(Polynomial::monomial(static_cast<int>(caps.size()), m, Rational(1)));
  return out;
}

/// Appends one moment dof per test polynomial, placing the test into
/// component `comp` of an `ncomp`-component test tuple.
void append_component_dofs(std::vector<Dof>& dofs, const Entity& e, int s, int ncomp,
                           int comp, int chart_dim, const std::vector<Polynomial>& tests) {
  for (const auto& q : tests) {
    Dof d;
    d.s = s;
    d.etype = e.type;
    d.entity_index = e.index;
    d.test.assign(ncomp, Polynomial::zero(chart_dim));
    d.test[comp] = q;
    dofs.push_back(d);
  }
}

}  // namespace

TraceResult trace(const FormPoly& w, const RefCell&, const Facet& f) {
  if (w.s == 4) throw std::runtime_error("trace: traces of 4-forms are not well-defined");
  TraceResult out;
  out.s = w.s;
  out.entity = f.entity;
  out.chart = f.chart;
  out.normal = f.normal;
  out.local = chart_pullback(f.chart, w);
  const auto coords = f.chart.coords();
  const Vec4Poly n = const_vec4(f.normal);
  switch (w.s) {
    case 0:
      out.raw = {w.comp[0].compose(coords)};
      break;
    case 1: {
      // (E (x) n - n (x) E)/2, composed with the chart.
      Vec4Poly e = upsilon1(w);
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
          Polynomial entry = (e[i] * n[j] - n[i] * e[j]) * Rational(1, 2);
          out.raw.push_back(entry.compose(coords));
        }
      break;
    }
    case 2: {
      Vec4Poly v = cross_vm(n, upsilon2(w));
      for (int i = 0; i < 4; ++i) out.raw.push_back(v[i].compose(coords));
      break;
    }
    case 3: {
      out.raw = {dot4(upsilon3(w), n).compose(coords)};
      break;
    }
  }
  return out;
}

std::vector<Polynomial> trace_local(const FormPoly& w, const RefCell& cell, const Entity& e) {
  return chart_pullback(entity_chart(cell, e), w);
}

Dof make_volume_dof(int s, std::vector<Polynomial> raw_tests) {
  if (static_cast<int>(raw_tests.size()) != FormPoly::ncomp(s))
    throw std::runtime_error("make_volume_dof: wrong component count");
  Dof d;
  d.s = s;
  d.is_volume = true;
  d.test = std::move(raw_tests);
  return d;
}

std::vector<Dof> entity_dofs(const RefCell& cell, const Entity& e, int s, int k) {
  if (k < 1) throw std::runtime_error("entity_dofs: k must be >= 1");
  const int dim = entity_dim(e.type);
  if (s < 0 || s > dim)
    throw std::runtime_error("entity_dofs: form degree incompatible with entity dimension");

  std::vector<Dof> dofs;
  if (e.type == EntityType::vertex) {
    Dof d;
    d.s = 0;
    d.etype = EntityType::vertex;
    d.entity_index = e.index;
    const auto& v = cell.vertices()[e.verts[0]];
    d.point = {v[0], v[1], v[2], v[3]};
    dofs.push_back(d);
    return dofs;
  }

  const int ncomp = static_cast<int>(subset_tuples(dim, s).size());
  switch (e.type) {
    case EntityType::edge:
      append_component_dofs(dofs, e, s, ncomp, 0, 1,
                            monomial_polys(1, s == 0 ? k - 2 : k - 1));
      break;
    case EntityType::triangle:
      if (s == 0) {
        append_component_dofs(dofs, e, s, 1, 0, 2, monomial_polys(2, k - 3));
      } else if (s == 1) {
        for (int c = 0; c < 2; ++c)
          append_component_dofs(dofs, e, s, 2, c, 2, monomial_polys(2, k - 2));
      } else {
        append_component_dofs(dofs, e, s, 1, 0, 2, monomial_polys(2, k - 1));
      }
      break;
    case EntityType::quad:
      // Chart order: u1 along the tetrahedral edge, u2 vertical.
      if (s == 0) {
        append_component_dofs(dofs, e, s, 1, 0, 2, boxed_polys({k - 2, k - 2}));
      } else if (s == 1) {
        append_component_dofs(dofs, e, s, 2, 0, 2, boxed_polys({k - 1, k - 2}));
        append_component_dofs(dofs, e, s, 2, 1, 2, boxed_polys({k - 2, k - 1}));
      } else {
        append_component_dofs(dofs, e, s, 1, 0, 2, boxed_polys({k - 1, k - 1}));
      }
      break;
    case EntityType::tet: {
      const int deg = (s == 0) ? k - 4 : (s == 1) ? k - 3 : (s == 2) ? k - 2 : k - 1;
      for (int c = 0; c < ncomp; ++c)
        append_component_dofs(dofs, e, s, ncomp, c, 3, monomial_polys(3, deg));
      break;
    }
    case EntityType::prism3d:
      // Chart order: (u1, u2) span the triangle, u3 is vertical.  The local
      // 2-form components are indexed (01), (02), (12).
      if (s == 0) {
        append_component_dofs(dofs, e, s, 1, 0, 3, tri_seg_monomials(k - 3, k - 2));
      } else if (s == 1) {
        for (int c = 0; c < 2; ++c)
          append_component_dofs(dofs, e, s, 3, c, 3, tri_seg_monomials(k - 2, k - 2));
        append_component_dofs(dofs, e, s, 3, 2, 3, tri_seg_monomials(k - 3, k - 1));
      } else if (s == 2) {
        append_component_dofs(dofs, e, s, 3, 1, 3, tri_seg_monomials(k - 2, k - 1));
        append_component_dofs(dofs, e, s, 3, 2, 3, tri_seg_monomials(k - 2, k - 1));
        append_component_dofs(dofs, e, s, 3, 0, 3, tri_seg_monomials(k - 1, k - 2));
      } else {
        append_component_dofs(dofs, e, s, 1, 0, 3, tri_seg_monomials(k - 1, k - 1));
      }
      break;
    default:
      throw std::runtime_error("entity_dofs: unsupported entity");
  }
  return dofs;
}

std::vector<Dof> all_trace_dofs(const RefCell& cell, int s, int k) {
  std::vector<Dof> out;
  for (EntityType t : {EntityType::vertex, EntityType::edge, EntityType::triangle,
                       EntityType::quad, EntityType::tet, EntityType::prism3d}) {
    if (s > entity_dim(t)) continue;
    for (const auto& e : cell.entities(t)) {
      auto group = entity_dofs(cell, e, s, k);
      out.insert(out.end(), group.begin(), group.end());
    }
  }
  return out;
}

Rational apply_dof(const RefCell& cell, const Dof& dof, const FormPoly& w) {
  if (w.s != dof.s) throw std::runtime_error("apply_dof: form degree mismatch");
  if (dof.is_volume) {
    Polynomial acc = Polynomial::zero(4);
    for (int c = 0; c < FormPoly::ncomp(dof.s); ++c) acc += w.comp[c] * dof.test[c];
    return integrate(acc, cell.domain());
  }
  if (dof.etype == EntityType::vertex) return w.comp[0].eval(dof.point);
  const Entity& e = cell.entities(dof.etype)[dof.entity_index];
  Chart chart = entity_chart(cell, e);
  auto local = chart_pullback(chart, w);
  Polynomial acc = Polynomial::zero(chart.dim);
  for (std::size_t c = 0; c < local.size(); ++c) acc += local[c] * dof.test[c];
  return integrate(acc, chart.domain);
}

RatMat dof_matrix(const RefCell& cell, const std::vector<Dof>& dofs,
                  const std::vector<FormPoly>& basis) {
  RatMat m(dofs.size(), RatVec(basis.size()));
  // Entity-local traces are shared by every dof on that entity.
  std::map<std::pair<int, int>, std::vector<std::vector<Polynomial>>> cache;
  for (std::size_t i = 0; i < dofs.size(); ++i) {
    const Dof& d = dofs[i];
    if (d.is_volume || d.etype == EntityType::vertex) {
      for (std::size_t j = 0; j < basis.size(); ++j) m[i][j] = apply_dof(cell, d, basis[j]);
      continue;
    }
    auto key = std::make_pair(static_cast<int>(d.etype), d.entity_index);
    auto it = cache.find(key);
    if (it == cache.end()) {
      const Entity& e = cell.entities(d.etype)[d.entity_index];
      Chart chart = entity_chart(cell, e);
      std::vector<std::vector<Polynomial>> locs;
      for (const auto& w : basis) locs.push_back(chart_pullback(chart, w));
      it = cache.emplace(key, std::move(locs)).first;
    }
    const Entity& e = cell.entities(d.etype)[d.entity_index];
    Chart chart = entity_chart(cell, e);
    for (std::size_t j = 0; j < basis.size(); ++j) {
      Polynomial acc = Polynomial::zero(chart.dim);
      for (std::size_t c = 0; c < it->second[j].size(); ++c)
        acc += it->second[j][c] * d.test[c];
      m[i][j] = integrate(acc, chart.domain);
    }
  }
  return m;
}

}  // namespace feec4d
