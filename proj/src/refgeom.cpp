#include "feec4d/refgeom.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

namespace feec4d {

namespace {

using Vec4R = std::array<Rational, 4>;

Vec4R sub(const Vec4R& a, const Vec4R& b) {
  return {a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3]};
}

Rational dot(const Vec4R& a, const Vec4R& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2] + a[3] * b[3];
}

/// Constant generalized cross product of three rational vectors.
Vec4R cross_const(const Vec4R& t1, const Vec4R& t2, const Vec4R& t3) {
  Vec4R out = {Rational(0), Rational(0), Rational(0), Rational(0)};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k)
        for (int l = 0; l < 4; ++l) {
          int e = epsilon4(i, j, k, l);
          if (e == 0) continue;
          Rational term = t1[j] * t2[k] * t3[l];
          out[i] += (e > 0) ? term : -term;
        }
  return out;
}

/// Primitive integer vector parallel to v, keeping its direction.
Vec4R primitive_direction(const Vec4R& v) {
  mpz_class scale(1);
  for (const auto& x : v) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), x.den().get_mpz_t());
  std::array<mpz_class, 4> ints;
  mpz_class g(0);
  for (int i = 0; i < 4; ++i) {
    ints[i] = v[i].num() * (scale / v[i].den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ints[i].get_mpz_t());
  }
  if (g == 0) throw std::runtime_error("primitive_direction: zero vector");
  Vec4R out;
  for (int i = 0; i < 4; ++i) out[i] = Rational(mpq_class(ints[i] / g));
  return out;
}

std::vector<int> sorted(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  return v;
}

void sort_and_index(std::vector<Entity>& list) {
  std::sort(list.begin(), list.end(),
            [](const Entity& a, const Entity& b) { return a.verts < b.verts; });
  for (std::size_t i = 0; i < list.size(); ++i) list[i].index = static_cast<int>(i);
}

Polynomial half_shift(int var, int sign) {
  // (1 + sign*x_var) / 2 as a 4-variable polynomial.
  Polynomial p = Polynomial::constant(4, Rational(1, 2));
  MultiIndex m = {0, 0, 0, 0};
  m[var] = 1;
  p.add_term(m, Rational(sign, 2));
  return p;
}

}  // namespace

int entity_dim(EntityType t) {
  switch (t) {
    case EntityType::vertex: return 0;
    case EntityType::edge: return 1;
    case EntityType::triangle: return 2;
    case EntityType::quad: return 2;
    case EntityType::tet: return 3;
    case EntityType::prism3d: return 3;
  }
  throw std::runtime_error("entity_dim: bad type");
}

std::vector<Polynomial> Chart::coords() const {
  std::vector<Polynomial> out;
  for (int a = 0; a < 4; ++a) {
    Polynomial p = Polynomial::constant(dim, origin[a]);
    for (int i = 0; i < dim; ++i) p += Polynomial::variable(dim, i) * tangents[i][a];
    out.push_back(p);
  }
  return out;
}

const RefCell& RefCell::get(CellKind kind) {
  static const RefCell pent(CellKind::pentatope);
  static const RefCell prism(CellKind::tet_prism);
  return kind == CellKind::pentatope ? pent : prism;
}

const std::vector<Entity>& RefCell::entities(EntityType t) const {
  return entities_[static_cast<int>(t)];
}

std::array<Rational, 4> RefCell::centroid() const {
  Vec4R c = {Rational(0), Rational(0), Rational(0), Rational(0)};
  for (const auto& v : vertices_)
    for (int i = 0; i < 4; ++i) c[i] += v[i];
  Rational n(static_cast<long>(vertices_.size()));
  for (int i = 0; i < 4; ++i) c[i] /= n;
  return c;
}

RefCell::RefCell(CellKind kind) : kind_(kind) {
  const Rational one(1), mone(-1);
  auto& ents = entities_;
  auto at = [&](EntityType t) -> std::vector<Entity>& {
    return ents[static_cast<int>(t)];
  };

  if (kind == CellKind::pentatope) {
    domain_ = Domain::ref_pentatope;
    vertices_ = {{one, mone, mone, mone},
                 {mone, one, mone, mone},
                 {mone, mone, one, mone},
                 {mone, mone, mone, one},
                 {mone, mone, mone, mone}};
    // All subsets of the five vertices are entities.
    for (int i = 0; i < 5; ++i) at(EntityType::vertex).push_back({EntityType::vertex, 0, {i}});
    for (int i = 0; i < 5; ++i)
      for (int j = i + 1; j < 5; ++j)
        at(EntityType::edge).push_back({EntityType::edge, 0, {i, j}});
    for (int i = 0; i < 5; ++i)
      for (int j = i + 1; j < 5; ++j)
        for (int k = j + 1; k < 5; ++k)
          at(EntityType::triangle).push_back({EntityType::triangle, 0, {i, j, k}});
    for (int i = 0; i < 5; ++i) {
      std::vector<int> verts;
      for (int j = 0; j < 5; ++j)
        if (j != i) verts.push_back(j);
      at(EntityType::tet).push_back({EntityType::tet, 0, verts});
    }
    shape_ = barycentrics_t4();
  } else {
    domain_ = Domain::ref_prism;
    // Bottom tetrahedron at x4 = -1, top copy at x4 = +1.
    std::vector<Vec4R> bottom = {{one, mone, mone, mone},
                                 {mone, one, mone, mone},
                                 {mone, mone, one, mone},
                                 {mone, mone, mone, mone}};
    vertices_ = bottom;
    for (auto v : bottom) {
      v[3] = one;
      vertices_.push_back(v);
    }
    for (int i = 0; i < 8; ++i) at(EntityType::vertex).push_back({EntityType::vertex, 0, {i}});
    for (int i = 0; i < 4; ++i) {
      at(EntityType::edge).push_back({EntityType::edge, 0, {i, i + 4}});
      for (int j = i + 1; j < 4; ++j) {
        at(EntityType::edge).push_back({EntityType::edge, 0, {i, j}});
        at(EntityType::edge).push_back({EntityType::edge, 0, {i + 4, j + 4}});
        at(EntityType::quad).push_back({EntityType::quad, 0, {i, j, i + 4, j + 4}});
      }
    }
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j)
        for (int k = j + 1; k < 4; ++k) {
          at(EntityType::triangle).push_back({EntityType::triangle, 0, {i, j, k}});
          at(EntityType::triangle).push_back({EntityType::triangle, 0, {i + 4, j + 4, k + 4}});
          at(EntityType::prism3d)
              .push_back({EntityType::prism3d, 0, {i, j, k, i + 4, j + 4, k + 4}});
        }
    at(EntityType::tet).push_back({EntityType::tet, 0, {0, 1, 2, 3}});
    at(EntityType::tet).push_back({EntityType::tet, 0, {4, 5, 6, 7}});

    auto lam = prism_tet_barycentrics();
    auto nu = prism_seg_functions();
    for (int i = 0; i < 4; ++i) shape_.push_back(lam[i] * nu[0]);
    for (int i = 0; i < 4; ++i) shape_.push_back(lam[i] * nu[1]);
  }

  for (auto& list : entities_) {
    for (auto& e : list) e.verts = sorted(e.verts);
    sort_and_index(list);
  }

  measure_ = integrate(Polynomial::constant(4, Rational(1)), domain_);

  // Facets: the 3D boundary entities, with outward-oriented normal data.
  Vec4R cc = centroid();
  for (EntityType t : {EntityType::tet, EntityType::prism3d}) {
    for (const auto& e : entities(t)) {
      Facet f;
      f.entity = e;
      f.chart = entity_chart(*this, e);
      Vec4R n = cross_const(f.chart.tangents[0], f.chart.tangents[1], f.chart.tangents[2]);
      Vec4R fc = {Rational(0), Rational(0), Rational(0), Rational(0)};
      for (int v : e.verts)
        for (int i = 0; i < 4; ++i) fc[i] += vertices_[v][i];
      Rational nv(static_cast<long>(e.verts.size()));
      for (int i = 0; i < 4; ++i) fc[i] /= nv;
      if (dot(n, sub(fc, cc)).sign() < 0)
        for (auto& x : n) x = -x;
      f.vector_area = n;
      f.normal = primitive_direction(n);
      facets_.push_back(f);
    }
  }
}

Chart entity_chart(const RefCell& cell, const Entity& e) {
  const auto& verts = cell.vertices();
  Chart c;
  c.origin = verts[e.verts[0]];
  auto tangent_to = [&](int v) { return sub(verts[v], verts[e.verts[0]]); };
  switch (e.type) {
    case EntityType::vertex:
      throw std::runtime_error("entity_chart: vertices have no chart");
    case EntityType::edge:
      c.domain = Domain::unit_segment;
      c.dim = 1;
      c.tangents = {tangent_to(e.verts[1])};
      break;
    case EntityType::triangle:
      c.domain = Domain::unit_triangle;
      c.dim = 2;
      c.tangents = {tangent_to(e.verts[1]), tangent_to(e.verts[2])};
      break;
    case EntityType::quad:
      // Vertex list {a, b, a+4, b+4}: u1 along the tet edge, u2 vertical.
      c.domain = Domain::unit_square;
      c.dim = 2;
      c.tangents = {tangent_to(e.verts[1]), tangent_to(e.verts[2])};
      break;
    case EntityType::tet:
      c.domain = Domain::unit_tet;
      c.dim = 3;
      c.tangents = {tangent_to(e.verts[1]), tangent_to(e.verts[2]), tangent_to(e.verts[3])};
      break;
    case EntityType::prism3d:
      // Vertex list {a, b, c, a+4, b+4, c+4}: (u1, u2) span the bottom
      // triangle, u3 is vertical.
      c.domain = Domain::unit_tri_x_seg;
      c.dim = 3;
      c.tangents = {tangent_to(e.verts[1]), tangent_to(e.verts[2]), tangent_to(e.verts[3])};
      break;
  }
  return c;
}

std::vector<Polynomial> barycentrics_t4() {
  std::vector<Polynomial> out;
  for (int i = 0; i < 4; ++i) out.push_back(half_shift(i, +1));
  Polynomial last = Polynomial::constant(4, Rational(-1));
  for (int i = 0; i < 4; ++i) {
    MultiIndex m = {0, 0, 0, 0};
    m[i] = 1;
    last.add_term(m, Rational(-1, 2));
  }
  out.push_back(last);
  return out;
}

std::vector<Polynomial> prism_tet_barycentrics() {
  std::vector<Polynomial> out;
  for (int i = 0; i < 3; ++i) out.push_back(half_shift(i, +1));
  Polynomial last = Polynomial::constant(4, Rational(-1, 2));
  for (int i = 0; i < 3; ++i) {
    MultiIndex m = {0, 0, 0, 0};
    m[i] = 1;
    last.add_term(m, Rational(-1, 2));
  }
  out.push_back(last);
  return out;
}

std::array<Polynomial, 2> prism_seg_functions() {
  return {half_shift(3, -1), half_shift(3, +1)};
}

std::vector<Polynomial> CellMap::coords() const {
  std::vector<Polynomial> out;
  for (int i = 0; i < 4; ++i) {
    Polynomial p = Polynomial::constant(4, b[i]);
    for (int j = 0; j < 4; ++j) p += Polynomial::variable(4, j) * a[i][j];
    out.push_back(p);
  }
  return out;
}

CellMap make_map(CellKind kind, const std::vector<std::array<Rational, 4>>& phys) {
  CellMap m;
  m.a.assign(4, RatVec(4));
  m.b.assign(4, Rational(0));
  if (kind == CellKind::pentatope) {
    if (phys.size() != 5) throw std::runtime_error("make_map: pentatope needs 5 vertices");
    m.kind = CellMap::Kind::affine;
    // Reference vertices satisfy v_i - v_5 = 2 e_i, so the columns of A are
    // (p_i - p_5)/2 and b = p_5 + A (1,1,1,1)^T.
    for (int col = 0; col < 4; ++col) {
      Vec4R d = sub(phys[col], phys[4]);
      for (int row = 0; row < 4; ++row) m.a[row][col] = d[row] / Rational(2);
    }
    for (int row = 0; row < 4; ++row) {
      m.b[row] = phys[4][row];
      for (int col = 0; col < 4; ++col) m.b[row] += m.a[row][col];
    }
  } else {
    if (phys.size() != 8) throw std::runtime_error("make_map: prism needs 8 vertices");
    m.kind = CellMap::Kind::prismatic;
    Vec4R lift = sub(phys[4], phys[0]);
    if (!lift[0].is_zero() || !lift[1].is_zero() || !lift[2].is_zero())
      throw std::runtime_error("make_map: sheared prism (top tet is not an x4-translate)");
    for (int i = 0; i < 4; ++i) {
      Vec4R d = sub(phys[i + 4], phys[i]);
      if (!(d[0].is_zero() && d[1].is_zero() && d[2].is_zero() && d[3] == lift[3]))
        throw std::runtime_error("make_map: sheared prism (top tet is not an x4-translate)");
      if (phys[i][3] != phys[0][3])
        throw std::runtime_error("make_map: sheared prism (bottom tet is not flat in x4)");
    }
    // Spatial block: bottom reference tet vertices satisfy q_i - q_4 = 2 e_i.
    for (int col = 0; col < 3; ++col) {
      Vec4R d = sub(phys[col], phys[3]);
      for (int row = 0; row < 3; ++row) m.a[row][col] = d[row] / Rational(2);
    }
    for (int row = 0; row < 3; ++row) {
      m.b[row] = phys[3][row];
      for (int col = 0; col < 3; ++col) m.b[row] += m.a[row][col];
    }
    m.a[3][3] = lift[3] / Rational(2);
    m.b[3] = phys[0][3] + m.a[3][3];
  }
  m.det_a = det(m.a);
  if (m.det_a.is_zero()) throw std::runtime_error("make_map: degenerate map");
  return m;
}

CellMap identity_map(CellKind kind) {
  CellMap m;
  m.kind = kind == CellKind::pentatope ? CellMap::Kind::affine : CellMap::Kind::prismatic;
  m.a.assign(4, RatVec(4));
  m.b.assign(4, Rational(0));
  for (int i = 0; i < 4; ++i) m.a[i][i] = Rational(1);
  m.det_a = Rational(1);
  return m;
}

CellMap compose(const CellMap& outer, const CellMap& inner) {
  CellMap m;
  m.kind = (outer.kind == CellMap::Kind::affine || inner.kind == CellMap::Kind::affine)
               ? CellMap::Kind::affine
               : CellMap::Kind::prismatic;
  m.a.assign(4, RatVec(4));
  m.b = outer.b;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      for (int k = 0; k < 4; ++k) m.a[i][j] += outer.a[i][k] * inner.a[k][j];
      m.b[i] += outer.a[i][j] * inner.b[j];
    }
  m.det_a = outer.det_a * inner.det_a;
  return m;
}

namespace {

/// det of the submatrix of `a` with the given rows and columns.
Rational minor_det(const RatMat& a, const std::vector<int>& rows, const std::vector<int>& cols) {
  const std::size_t n = rows.size();
  if (n == 0) return Rational(1);
  RatMat sub(n, RatVec(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) sub[i][j] = a[rows[i]][cols[j]];
  return det(sub);
}

}  // namespace

FormPoly pullback(const FormPoly& w, const CellMap& phi) {
  const auto coords = phi.coords();
  FormPoly out(w.s);
  const auto& tuples = form_tuples(w.s);
  for (std::size_t i = 0; i < tuples.size(); ++i) {
    Polynomial acc = Polynomial::zero(4);
    for (std::size_t j = 0; j < tuples.size(); ++j) {
      Rational m = minor_det(phi.a, tuples[j], tuples[i]);
      if (m.is_zero()) continue;
      acc += w.comp[j].compose(coords) * m;
    }
    out.comp[i] = acc;
  }
  return out;
}

const std::vector<std::vector<int>>& subset_tuples(int n, int s) {
  // Map references stay valid across inserts, so callers can keep the
  // returned reference after the lock is released.
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::vector<std::vector<int>>> cache;
  if (n < 0 || n > 4 || s < 0) throw std::runtime_error("subset_tuples: bad arguments");
  auto key = std::make_pair(n, s);
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(cur.size()) == s) {
      out.push_back(cur);
      return;
    }
    for (int i = start; i < n; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return cache.emplace(key, std::move(out)).first->second;
}

std::vector<Polynomial> chart_pullback(const Chart& chart, const FormPoly& w) {
  const auto coords = chart.coords();
  const auto& in_tuples = form_tuples(w.s);
  const auto& out_tuples = subset_tuples(chart.dim, w.s);
  std::vector<Polynomial> out;
  // Tangent matrix T[a][i] = tangents[i][a]; minors pair ambient rows with
  // parameter columns.
  RatMat t(4, RatVec(chart.dim));
  for (int a = 0; a < 4; ++a)
    for (int i = 0; i < chart.dim; ++i) t[a][i] = chart.tangents[i][a];
  for (const auto& oi : out_tuples) {
    Polynomial acc = Polynomial::zero(chart.dim == 0 ? 1 : chart.dim);
    for (std::size_t j = 0; j < in_tuples.size(); ++j) {
      Rational m = minor_det(t, in_tuples[j], oi);
      if (m.is_zero()) continue;
      acc += w.comp[j].compose(coords) * m;
    }
    out.push_back(acc);
  }
  return out;
}

}  // namespace feec4d
