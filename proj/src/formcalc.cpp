#include "feec4d/formcalc.hpp"

#include <algorithm>
#include <stdexcept>

namespace feec4d {

namespace {

Polynomial z4() { return Polynomial::zero(4); }

std::vector<std::vector<int>> make_tuples(int s) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  // Depth-first enumeration of increasing tuples gives lexicographic order.
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(cur.size()) == s) {
      out.push_back(cur);
      return;
    }
    for (int i = start; i < 4; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

}  // namespace

FormPoly::FormPoly(int degree) : s(degree) {
  if (s < 0 || s > 4) throw std::runtime_error("FormPoly: degree out of range");
  comp.assign(ncomp(s), z4());
}

int FormPoly::ncomp(int s) {
  static const int c[5] = {1, 4, 6, 4, 1};
  if (s < 0 || s > 4) throw std::runtime_error("FormPoly: degree out of range");
  return c[s];
}

const std::vector<std::vector<int>>& form_tuples(int s) {
  static const std::array<std::vector<std::vector<int>>, 5> tables = {
      make_tuples(0), make_tuples(1), make_tuples(2), make_tuples(3), make_tuples(4)};
  if (s < 0 || s > 4) throw std::runtime_error("form_tuples: degree out of range");
  return tables[s];
}

int comp_index(int s, const std::vector<int>& sorted_tuple) {
  const auto& table = form_tuples(s);
  for (std::size_t i = 0; i < table.size(); ++i)
    if (table[i] == sorted_tuple) return static_cast<int>(i);
  throw std::runtime_error("comp_index: tuple not found");
}

int epsilon4(int i, int j, int k, int l) {
  int idx[4] = {i, j, k, l};
  for (int a = 0; a < 4; ++a)
    for (int b = a + 1; b < 4; ++b)
      if (idx[a] == idx[b]) return 0;
  int inversions = 0;
  for (int a = 0; a < 4; ++a)
    for (int b = a + 1; b < 4; ++b)
      if (idx[a] > idx[b]) ++inversions;
  return (inversions % 2 == 0) ? 1 : -1;
}

FormPoly dform(const FormPoly& w) {
  if (w.s >= 4) throw std::runtime_error("dform: no 5-forms on R^4");
  FormPoly out(w.s + 1);
  const auto& tuples = form_tuples(w.s);
  for (std::size_t ci = 0; ci < tuples.size(); ++ci) {
    const auto& t = tuples[ci];
    for (int a = 0; a < 4; ++a) {
      if (std::find(t.begin(), t.end(), a) != t.end()) continue;
      std::vector<int> j = t;
      auto pos_it = std::lower_bound(j.begin(), j.end(), a);
      int pos = static_cast<int>(pos_it - j.begin());
      j.insert(pos_it, a);
      Polynomial term = w.comp[ci].derivative(a);
      if (pos % 2 != 0) term = -term;
      out.comp[comp_index(w.s + 1, j)] += term;
    }
  }
  return out;
}

FormPoly koszul(const FormPoly& w) {
  if (w.s <= 0) throw std::runtime_error("koszul: not defined on 0-forms");
  FormPoly out(w.s - 1);
  const auto& tuples = form_tuples(w.s);
  for (std::size_t ci = 0; ci < tuples.size(); ++ci) {
    const auto& t = tuples[ci];
    for (int r = 0; r < w.s; ++r) {
      std::vector<int> j = t;
      j.erase(j.begin() + r);
      Polynomial term = Polynomial::variable(4, t[r]) * w.comp[ci];
      if (r % 2 != 0) term = -term;
      out.comp[comp_index(w.s - 1, j)] += term;
    }
  }
  return out;
}

Polynomial upsilon0(const FormPoly& w) {
  if (w.s != 0) throw std::runtime_error("upsilon0: wrong form degree");
  return w.comp[0];
}

Vec4Poly upsilon1(const FormPoly& w) {
  if (w.s != 1) throw std::runtime_error("upsilon1: wrong form degree");
  return {w.comp[0], w.comp[1], w.comp[2], w.comp[3]};
}

Mat4Poly upsilon2(const FormPoly& w) {
  if (w.s != 2) throw std::runtime_error("upsilon2: wrong form degree");
  Rational half(1, 2);
  Mat4Poly f;
  for (auto& row : f)
    for (auto& e : row) e = z4();
  const auto& tuples = form_tuples(2);
  for (std::size_t ci = 0; ci < tuples.size(); ++ci) {
    int i = tuples[ci][0], j = tuples[ci][1];
    f[i][j] = w.comp[ci] * half;
    f[j][i] = -f[i][j];
  }
  return f;
}

Vec4Poly upsilon3(const FormPoly& w) {
  if (w.s != 3) throw std::runtime_error("upsilon3: wrong form degree");
  // Component order (123),(124),(134),(234); proxy (w234,-w134,w124,-w123).
  return {w.comp[3], -w.comp[2], w.comp[1], -w.comp[0]};
}

Polynomial upsilon4(const FormPoly& w) {
  if (w.s != 4) throw std::runtime_error("upsilon4: wrong form degree");
  return w.comp[0];
}

FormPoly form_from_scalar(int s, const Polynomial& u) {
  if (s != 0 && s != 4) throw std::runtime_error("form_from_scalar: s must be 0 or 4");
  FormPoly w(s);
  w.comp[0] = u.nvars() == 4 ? u : u.widened(4);
  return w;
}

FormPoly form_from_proxy1(const Vec4Poly& e) {
  FormPoly w(1);
  for (int i = 0; i < 4; ++i) w.comp[i] = e[i];
  return w;
}

FormPoly form_from_proxy2(const Mat4Poly& f) {
  FormPoly w(2);
  Rational two(2);
  const auto& tuples = form_tuples(2);
  for (std::size_t ci = 0; ci < tuples.size(); ++ci)
    w.comp[ci] = f[tuples[ci][0]][tuples[ci][1]] * two;
  return w;
}

FormPoly form_from_proxy3(const Vec4Poly& g) {
  FormPoly w(3);
  w.comp[0] = -g[3];
  w.comp[1] = g[2];
  w.comp[2] = -g[1];
  w.comp[3] = g[0];
  return w;
}

FormPoly form_from_vec6(const std::array<Polynomial, 6>& w6) {
  FormPoly w(2);
  for (int c = 0; c < 6; ++c) w.comp[c] = w6[c].nvars() == 4 ? w6[c] : w6[c].widened(4);
  return w;
}

Mat4Poly vtom(const std::array<Polynomial, 6>& w) {
  Mat4Poly m;
  for (auto& row : m)
    for (auto& e : row) e = z4();
  const auto& tuples = form_tuples(2);
  for (int c = 0; c < 6; ++c) {
    int i = tuples[c][0], j = tuples[c][1];
    m[i][j] = w[c].nvars() == 4 ? w[c] : w[c].widened(4);
    m[j][i] = -m[i][j];
  }
  return m;
}

std::array<Polynomial, 6> mtov(const Mat4Poly& m) {
  for (int i = 0; i < 4; ++i) {
    if (!m[i][i].is_zero()) throw std::runtime_error("mtov: matrix not skew");
    for (int j = i + 1; j < 4; ++j)
      if (!(m[j][i] + m[i][j]).is_zero()) throw std::runtime_error("mtov: matrix not skew");
  }
  const auto& tuples = form_tuples(2);
  std::array<Polynomial, 6> w = {z4(), z4(), z4(), z4(), z4(), z4()};
  for (int c = 0; c < 6; ++c) w[c] = m[tuples[c][0]][tuples[c][1]];
  return w;
}

Vec4Poly grad4(const Polynomial& u) {
  const Polynomial p = u.nvars() == 4 ? u : u.widened(4);
  return {p.derivative(0), p.derivative(1), p.derivative(2), p.derivative(3)};
}

Mat4Poly grad_mat(const Vec4Poly& e) {
  Mat4Poly g;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) g[i][j] = e[i].derivative(j);
  return g;
}

Mat4Poly skw_grad(const Vec4Poly& e) {
  Mat4Poly g = grad_mat(e);
  Mat4Poly out;
  Rational half(1, 2);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) out[i][j] = (g[j][i] - g[i][j]) * half;
  return out;
}

Vec4Poly curl_skew(const Mat4Poly& f) {
  Vec4Poly out = {z4(), z4(), z4(), z4()};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k)
        for (int l = 0; l < 4; ++l) {
          int e = epsilon4(i, j, k, l);
          if (e == 0) continue;
          Polynomial term = f[k][l].derivative(j);
          out[i] += (e > 0) ? term : -term;
        }
  return out;
}

Mat4Poly curl_vec(const Vec4Poly& e) {
  Mat4Poly out;
  for (auto& row : out)
    for (auto& x : row) x = z4();
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k)
        for (int l = 0; l < 4; ++l) {
          int eps = epsilon4(i, j, k, l);
          if (eps == 0) continue;
          Polynomial term = e[l].derivative(k);
          out[i][j] += (eps > 0) ? term : -term;
        }
  return out;
}

Vec4Poly div_skew(const Mat4Poly& f) {
  Vec4Poly out = {z4(), z4(), z4(), z4()};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) out[i] += f[i][j].derivative(j);
  return out;
}

Polynomial div_vec(const Vec4Poly& g) {
  Polynomial out = z4();
  for (int j = 0; j < 4; ++j) out += g[j].derivative(j);
  return out;
}

Mat4Poly cross_vv(const Vec4Poly& m, const Vec4Poly& n) {
  Mat4Poly out;
  for (auto& row : out)
    for (auto& x : row) x = Polynomial::zero(m[0].nvars());
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k)
        for (int l = 0; l < 4; ++l) {
          int eps = epsilon4(i, j, k, l);
          if (eps == 0) continue;
          Polynomial term = m[k] * n[l];
          out[i][j] += (eps > 0) ? term : -term;
        }
  return out;
}

Vec4Poly cross_vm(const Vec4Poly& m, const Mat4Poly& u) {
  Vec4Poly out;
  out.fill(Polynomial::zero(m[0].nvars()));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k)
        for (int l = 0; l < 4; ++l) {
          int eps = epsilon4(i, j, k, l);
          if (eps == 0) continue;
          Polynomial term = m[j] * u[k][l];
          out[i] += (eps > 0) ? term : -term;
        }
  return out;
}

Vec4Poly triple_cross(const Vec4Poly& a, const Vec4Poly& b, const Vec4Poly& c) {
  Vec4Poly out;
  out.fill(Polynomial::zero(a[0].nvars()));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k)
        for (int l = 0; l < 4; ++l) {
          int eps = epsilon4(i, j, k, l);
          if (eps == 0) continue;
          Polynomial term = a[j] * b[k] * c[l];
          out[i] += (eps > 0) ? term : -term;
        }
  return out;
}

Polynomial dot4(const Vec4Poly& a, const Vec4Poly& b) {
  Polynomial out = Polynomial::zero(a[0].nvars());
  for (int i = 0; i < 4; ++i) out += a[i] * b[i];
  return out;
}

Polynomial frobenius(const Mat4Poly& a, const Mat4Poly& b) {
  Polynomial out = Polynomial::zero(a[0][0].nvars());
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) out += a[i][j] * b[i][j];
  return out;
}

Mat4Poly outer(const Vec4Poly& a, const Vec4Poly& b) {
  Mat4Poly out;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) out[i][j] = a[i] * b[j];
  return out;
}

Vec3Poly grad3(const Polynomial& u) {
  const Polynomial p = u.nvars() >= 3 ? u : u.widened(3);
  return {p.derivative(0), p.derivative(1), p.derivative(2)};
}

Vec3Poly cross3(const Vec3Poly& a, const Vec3Poly& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

Polynomial dot3(const Vec3Poly& a, const Vec3Poly& b) {
  Polynomial out = a[0] * b[0];
  for (int i = 1; i < 3; ++i) out += a[i] * b[i];
  return out;
}

Vec4Poly const_vec4(const std::array<Rational, 4>& v) {
  return {Polynomial::constant(4, v[0]), Polynomial::constant(4, v[1]),
          Polynomial::constant(4, v[2]), Polynomial::constant(4, v[3])};
}

Vec3Poly const_vec3(const std::array<Rational, 3>& v) {
  return {Polynomial::constant(3, v[0]), Polynomial::constant(3, v[1]),
          Polynomial::constant(3, v[2])};
}

}  // namespace feec4d
