#include "feec4d/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <tuple>

#include "feec4d/integrate.hpp"
#include "feec4d/pentatope.hpp"
#include "feec4d/tetprism.hpp"
#include "feec4d/tracedof.hpp"

namespace feec4d {

namespace {

// Deterministic xorshift generator: verification data must not depend on the
// platform or the standard library's distribution implementations.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : s_(seed ? seed : 1) {}

  std::uint64_t next() {
    s_ ^= s_ << 13;
    s_ ^= s_ >> 7;
    s_ ^= s_ << 17;
    return s_;
  }

  int int_in(int lo, int hi) {
    return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  Rational rational() { return Rational(int_in(-9, 9), int_in(1, 4)); }

  Polynomial polynomial(int nvars, int deg, int nterms) {
    Polynomial p(nvars);
    auto mons = monomials_up_to(nvars, deg);
    for (int t = 0; t < nterms; ++t) {
      const auto& m = mons[static_cast<std::size_t>(int_in(0, static_cast<int>(mons.size()) - 1))];
      p.add_term(m, rational());
    }
    return p;
  }

private:
  std::uint64_t s_;
};

std::string cell_label(CellKind cell) {
  return cell == CellKind::pentatope ? "pentatope" : "prism";
}

// Per-case seeds: fixed function of the case identity so the worker-pool
// schedule cannot change any random draw.
std::uint64_t case_seed(CellKind cell, int k, int s, int salt) {
  std::uint64_t v = 0x6b4feec4d5ULL;
  v = v * 1000003 + static_cast<std::uint64_t>(cell == CellKind::pentatope ? 1 : 2);
  v = v * 1000003 + static_cast<std::uint64_t>(k + 7);
  v = v * 1000003 + static_cast<std::uint64_t>(s + 7);
  v = v * 1000003 + static_cast<std::uint64_t>(salt + 7);
  return v;
}

long long dim_space(CellKind cell, int k, int s) {
  return cell == CellKind::pentatope ? dim_space_t4(k, s) : dim_space_w4(k, s);
}
long long dim_trace(CellKind cell, int k, int s) {
  return cell == CellKind::pentatope ? dim_trace_t4(k, s) : dim_trace_w4(k, s);
}
long long dim_volume(CellKind cell, int k, int s) {
  return cell == CellKind::pentatope ? dim_volume_t4(k, s) : dim_volume_w4(k, s);
}
std::vector<FormPoly> alternate_space(CellKind cell, int k, int s) {
  return cell == CellKind::pentatope ? build_space_t4_constraint(k, s) : tensor_space_w4(k, s);
}
std::vector<FormPoly> bubble_family(CellKind cell, int k, int s) {
  return cell == CellKind::pentatope ? bubble_basis_t4(k, s) : bubble_basis_w4(k, s);
}
std::vector<Dof> dof_set(CellKind cell, int k, int s) {
  return cell == CellKind::pentatope ? dofs_t4(k, s) : dofs_w4(k, s);
}

int family_degree(const std::vector<FormPoly>& fam) {
  int d = 1;
  for (const auto& w : fam)
    for (const auto& c : w.comp) d = std::max(d, c.degree());
  return d;
}

std::vector<VecPoly> comps(const std::vector<FormPoly>& fam) {
  std::vector<VecPoly> out;
  for (const auto& w : fam) out.push_back(w.comp);
  return out;
}

std::string rational_witness(const Rational& r) {
  std::string s = r.str();
  if (s.size() <= 40) return s;
  std::ostringstream os;
  os << "nonzero (" << s.size() << " digits incl. sign/slash)";
  return os.str();
}

CheckRecord make_record(CellKind cell, int s, int k, const std::string& check, bool pass,
                        std::string witness) {
  CheckRecord r;
  r.cell = cell_label(cell);
  r.s = s;
  r.k = k;
  r.check = check;
  r.pass = pass;
  r.witness = std::move(witness);
  return r;
}

CheckRecord check_dims(CellKind cell, int k, int s, const VerifyOptions& opt) {
  auto fam = primary_space(cell, k, s, opt.corrupt);
  long long want = dim_space(cell, k, s);
  long long wt = dim_trace(cell, k, s);
  long long wv = dim_volume(cell, k, s);
  Span sp(4, FormPoly::ncomp(s), family_degree(fam));
  for (const auto& w : fam) sp.insert(w.comp);
  bool pass = static_cast<long long>(fam.size()) == want &&
              sp.rank() == static_cast<int>(fam.size()) && want == wt + wv;
  std::ostringstream os;
  os << "constructed " << fam.size() << ", formula " << want << " (trace " << wt << " + volume "
     << wv << "), rank " << sp.rank();
  return make_record(cell, s, k, "dims", pass, os.str());
}

CheckRecord check_exactness_case(CellKind cell, int k, const VerifyOptions& opt) {
  std::array<std::vector<FormPoly>, 5> v;
  for (int s = 0; s <= 4; ++s) v[s] = primary_space(cell, k, s, opt.corrupt);
  ExactnessReport rep = check_exactness(v);
  std::ostringstream os;
  os << "rank d = [" << rep.rank_d[0] << ", " << rep.rank_d[1] << ", " << rep.rank_d[2] << ", "
     << rep.rank_d[3] << "], dims = [";
  for (int s = 0; s <= 4; ++s) os << rep.dim_v[s] << (s < 4 ? ", " : "]");
  return make_record(cell, -1, k, "exactness", rep.exact, os.str());
}

CheckRecord check_unisolvency(CellKind cell, int k, int s, const VerifyOptions& opt) {
  const RefCell& rc = RefCell::get(cell);
  auto fam = primary_space(cell, k, s, opt.corrupt);
  auto dofs = dof_set(cell, k, s);
  if (fam.size() != dofs.size())
    return make_record(cell, s, k, "unisolvency", false, "dof/basis count mismatch");
  Rational d = det(dof_matrix(rc, dofs, fam));
  std::ostringstream os;
  os << dofs.size() << "x" << fam.size() << " det = " << rational_witness(d);
  return make_record(cell, s, k, "unisolvency", !d.is_zero(), os.str());
}

CheckRecord check_bubbles(CellKind cell, int k, int s, const VerifyOptions& opt) {
  const RefCell& rc = RefCell::get(cell);
  auto bub = bubble_family(cell, k, s);
  long long wv = dim_volume(cell, k, s);
  bool count_ok = static_cast<long long>(bub.size()) == wv;
  bool member_ok = true;
  bool indep_ok = true;
  bool trace_ok = true;
  if (!bub.empty()) {
    auto fam = primary_space(cell, k, s, opt.corrupt);
    int deg = std::max(family_degree(fam), family_degree(bub));
    Span sp(4, FormPoly::ncomp(s), deg);
    for (const auto& w : fam) sp.insert(w.comp);
    for (const auto& w : bub)
      if (!sp.contains(w.comp)) member_ok = false;
    Span bs(4, FormPoly::ncomp(s), deg);
    for (const auto& w : bub) bs.insert(w.comp);
    indep_ok = bs.rank() == static_cast<int>(bub.size());
    RatMat m = dof_matrix(rc, all_trace_dofs(rc, s, k), bub);
    for (const auto& row : m)
      for (const auto& v : row)
        if (!v.is_zero()) trace_ok = false;
  }
  std::ostringstream os;
  os << bub.size() << " bubbles, volume formula " << wv << "; in-space " << (member_ok ? "yes" : "NO")
     << ", independent " << (indep_ok ? "yes" : "NO") << ", trace-annihilated "
     << (trace_ok ? "yes" : "NO");
  return make_record(cell, s, k, "bubbles", count_ok && member_ok && indep_ok && trace_ok,
                     os.str());
}

CheckRecord check_trace_count(CellKind cell, int k, int s) {
  const RefCell& rc = RefCell::get(cell);
  long long have = static_cast<long long>(all_trace_dofs(rc, s, k).size());
  long long want = dim_trace(cell, k, s);
  std::ostringstream os;
  os << "enumerated " << have << ", formula " << want;
  return make_record(cell, s, k, "traces", have == want, os.str());
}

CheckRecord check_span_pair(CellKind cell, int k, int s, const VerifyOptions& opt) {
  auto fam = primary_space(cell, k, s, opt.corrupt);
  auto alt = alternate_space(cell, k, s);
  bool pass = same_span(comps(fam), comps(alt));
  std::ostringstream os;
  os << "primary " << fam.size() << " vs alternate " << alt.size() << " generators";
  return make_record(cell, s, k, "tensor-vs-nrt", pass, os.str());
}

// ---- trace identities on the reference pentatope ------------------------

Vec4Poly compose_vec(const Vec4Poly& v, const std::vector<Polynomial>& coords) {
  Vec4Poly out;
  for (int i = 0; i < 4; ++i) out[i] = v[i].compose(coords);
  return out;
}

Mat4Poly compose_mat(const Mat4Poly& m, const std::vector<Polynomial>& coords) {
  Mat4Poly out;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) out[i][j] = m[i][j].compose(coords);
  return out;
}

Vec4Poly area_vec(const Facet& f) {
  Vec4Poly out;
  for (int i = 0; i < 4; ++i) out[i] = Polynomial::constant(f.chart.dim, f.vector_area[i]);
  return out;
}

Vec4Poly random_vec4(Rng& rng, int deg, int nterms) {
  Vec4Poly e;
  for (auto& p : e) p = rng.polynomial(4, deg, nterms);
  return e;
}

Mat4Poly random_skew(Rng& rng, int deg, int nterms) {
  std::array<Polynomial, 6> w;
  for (auto& p : w) p = rng.polynomial(4, deg, nterms);
  return vtom(w);
}

// (1/2) int_bd [E (x) n - n (x) E] : F ds = int (Div F).E - int F : skwGrad E
bool ibp_skw_grad_holds(const RefCell& cell, const Vec4Poly& e, const Mat4Poly& f) {
  Rational interior = integrate(dot4(div_skew(f), e), cell.domain()) -
                      integrate(frobenius(f, skw_grad(e)), cell.domain());
  Rational boundary;
  for (const auto& facet : cell.facets()) {
    auto coords = facet.chart.coords();
    Vec4Poly ec = compose_vec(e, coords);
    Mat4Poly fc = compose_mat(f, coords);
    Vec4Poly n = area_vec(facet);
    Mat4Poly skw;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) skw[i][j] = ec[i] * n[j] - n[i] * ec[j];
    boundary += integrate(frobenius(skw, fc), facet.chart.domain) * Rational(1, 2);
  }
  return interior == boundary;
}

// int_bd (n x F).E ds = int (curl F).E - int (Curl E) : F
bool ibp_curl_holds(const RefCell& cell, const Vec4Poly& e, const Mat4Poly& f) {
  Rational interior = integrate(dot4(curl_skew(f), e), cell.domain()) -
                      integrate(frobenius(curl_vec(e), f), cell.domain());
  Rational boundary;
  for (const auto& facet : cell.facets()) {
    auto coords = facet.chart.coords();
    Vec4Poly ec = compose_vec(e, coords);
    Mat4Poly fc = compose_mat(f, coords);
    boundary += integrate(dot4(cross_vm(area_vec(facet), fc), ec), facet.chart.domain);
  }
  return interior == boundary;
}

// int_bd (G.n) u ds = int (div G) u + int G . grad u
bool ibp_div_grad_holds(const RefCell& cell, const Vec4Poly& g, const Polynomial& u) {
  Rational interior = integrate(div_vec(g) * u, cell.domain()) +
                      integrate(dot4(g, grad4(u)), cell.domain());
  Rational boundary;
  for (const auto& facet : cell.facets()) {
    auto coords = facet.chart.coords();
    Vec4Poly gc = compose_vec(g, coords);
    Polynomial uc = u.compose(coords);
    boundary += integrate(dot4(gc, area_vec(facet)) * uc, facet.chart.domain);
  }
  return interior == boundary;
}

CheckRecord check_trace_identity(int which) {
  const RefCell& cell = RefCell::get(CellKind::pentatope);
  Rng rng(case_seed(CellKind::pentatope, 0, which, 101));
  const int pairs = 5;
  int held = 0;
  for (int rep = 0; rep < pairs; ++rep) {
    bool ok = false;
    if (which == 1) ok = ibp_skw_grad_holds(cell, random_vec4(rng, 2, 3), random_skew(rng, 2, 3));
    if (which == 2) ok = ibp_curl_holds(cell, random_vec4(rng, 2, 3), random_skew(rng, 2, 3));
    if (which == 3) ok = ibp_div_grad_holds(cell, random_vec4(rng, 2, 3), rng.polynomial(4, 2, 3));
    if (ok) ++held;
  }
  static const char* names[4] = {"", "1-form (skwGrad/Div pairing)", "2-form (curl/Curl pairing)",
                                 "3-form (div/grad pairing)"};
  std::ostringstream os;
  os << "trace identity for " << names[which] << ": " << held << "/" << pairs
     << " random pairs, boundary assembled facet-by-facet";
  return make_record(CellKind::pentatope, which, -1, "traces", held == pairs, os.str());
}

// ---- pullback naturality -------------------------------------------------

CellMap random_map(CellKind kind, Rng& rng) {
  for (int attempt = 0; attempt < 64; ++attempt) {
    auto verts = RefCell::get(kind).vertices();
    if (kind == CellKind::pentatope) {
      for (auto& v : verts)
        for (int a = 0; a < 4; ++a) v[a] += Rational(rng.int_in(-2, 2), 4);
    } else {
      // Prismatic: one spatial affine map for every vertex, one segment map
      // for x4, so the top tet stays a pure vertical translate.
      RatMat a3(3, RatVec(3));
      RatVec b3(3);
      for (int i = 0; i < 3; ++i) {
        b3[i] = Rational(rng.int_in(-2, 2), 2);
        for (int j = 0; j < 3; ++j) a3[i][j] = Rational(rng.int_in(-2, 2));
      }
      Rational c(rng.int_in(1, 3));
      Rational d(rng.int_in(-2, 2));
      for (auto& v : verts) {
        std::array<Rational, 4> w = v;
        for (int i = 0; i < 3; ++i) {
          w[i] = b3[i];
          for (int j = 0; j < 3; ++j) w[i] += a3[i][j] * v[j];
        }
        w[3] = c * v[3] + d;
        v = w;
      }
    }
    try {
      return make_map(kind, verts);
    } catch (const std::exception&) {
      // degenerate draw; try again
    }
  }
  throw std::runtime_error("random_map: no nondegenerate map found");
}

CheckRecord check_pullback(CellKind cell) {
  Rng rng(case_seed(cell, 0, 0, 202));
  const int nmaps = 10;
  bool pass = true;
  for (int m = 0; m < nmaps; ++m) {
    CellMap phi = random_map(cell, rng);
    for (int s = 0; s <= 3; ++s) {
      FormPoly w(s);
      for (auto& c : w.comp) c = rng.polynomial(4, 2, 3);
      FormPoly lhs = pullback(dform(w), phi);
      FormPoly rhs = dform(pullback(w, phi));
      for (int c = 0; c < FormPoly::ncomp(s + 1); ++c)
        if (!(lhs.comp[c] == rhs.comp[c])) pass = false;
    }
  }
  std::ostringstream os;
  os << "d(pullback w) = pullback(d w) for " << nmaps << " random "
     << (cell == CellKind::pentatope ? "affine" : "prismatic") << " maps, s = 0..3";
  return make_record(cell, -1, -1, "pullback", pass, os.str());
}

int resolve_threads(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("FEEC4D_THREADS")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

struct Task {
  CheckRecord proto;  // used when the body throws
  std::function<CheckRecord()> run;
};

}  // namespace

bool VerifyReport::all_pass() const {
  for (const auto& r : records)
    if (!r.pass) return false;
  return true;
}

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names = {
      "dims", "exactness", "unisolvency", "bubbles", "traces", "tensor-vs-nrt", "pullback"};
  return names;
}

std::vector<FormPoly> primary_space(CellKind cell, int k, int s,
                                    const std::optional<CorruptSpec>& corrupt) {
  auto fam = cell == CellKind::pentatope ? build_space_t4(k, s) : nrt_space_w4(k, s);
  if (corrupt && corrupt->cell == cell && corrupt->s == s && corrupt->k == k && !fam.empty()) {
    FormPoly& w = fam[static_cast<std::size_t>(corrupt->member) % fam.size()];
    std::vector<std::pair<int, MultiIndex>> slots;
    for (int c = 0; c < static_cast<int>(w.comp.size()); ++c)
      for (const auto& term : w.comp[c].terms()) slots.emplace_back(c, term.first);
    if (!slots.empty()) {
      const auto& slot = slots[static_cast<std::size_t>(corrupt->term) % slots.size()];
      w.comp[slot.first] += Polynomial::monomial(4, slot.second, Rational(1));
    }
  }
  return fam;
}

VerifyReport run_verify(const VerifyOptions& opt) {
  if (opt.max_k < 1) throw std::runtime_error("run_verify: max_k must be >= 1");
  std::vector<std::string> checks = opt.checks.empty() ? check_names() : opt.checks;
  for (const auto& c : checks)
    if (std::find(check_names().begin(), check_names().end(), c) == check_names().end())
      throw std::runtime_error("run_verify: unknown check '" + c + "'");
  auto wants = [&checks](const char* name) {
    return std::find(checks.begin(), checks.end(), name) != checks.end();
  };

  std::vector<CellKind> cells;
  if (opt.pentatope) cells.push_back(CellKind::pentatope);
  if (opt.prism) cells.push_back(CellKind::tet_prism);

  std::vector<Task> tasks;
  auto add = [&tasks](CellKind cell, int s, int k, const char* check,
                      std::function<CheckRecord()> run) {
    Task t;
    t.proto = make_record(cell, s, k, check, false, "");
    t.run = std::move(run);
    tasks.push_back(std::move(t));
  };

  for (CellKind cell : cells)
    for (int k = 1; k <= opt.max_k; ++k) {
      if (wants("exactness"))
        add(cell, -1, k, "exactness", [cell, k, &opt] { return check_exactness_case(cell, k, opt); });
      for (int s = 0; s <= 4; ++s) {
        if (wants("dims"))
          add(cell, s, k, "dims", [cell, k, s, &opt] { return check_dims(cell, k, s, opt); });
        if (wants("unisolvency"))
          add(cell, s, k, "unisolvency",
              [cell, k, s, &opt] { return check_unisolvency(cell, k, s, opt); });
        if (wants("bubbles"))
          add(cell, s, k, "bubbles", [cell, k, s, &opt] { return check_bubbles(cell, k, s, opt); });
        if (wants("traces"))
          add(cell, s, k, "traces", [cell, k, s] { return check_trace_count(cell, k, s); });
        if (wants("tensor-vs-nrt"))
          add(cell, s, k, "tensor-vs-nrt",
              [cell, k, s, &opt] { return check_span_pair(cell, k, s, opt); });
      }
    }
  if (opt.pentatope && wants("traces"))
    for (int which = 1; which <= 3; ++which)
      add(CellKind::pentatope, which, -1, "traces",
          [which] { return check_trace_identity(which); });
  for (CellKind cell : cells)
    if (wants("pullback")) add(cell, -1, -1, "pullback", [cell] { return check_pullback(cell); });

  std::vector<CheckRecord> results(tasks.size());
  std::atomic<std::size_t> cursor{0};
  auto worker = [&tasks, &results, &cursor] {
    for (;;) {
      std::size_t i = cursor.fetch_add(1);
      if (i >= tasks.size()) return;
      try {
        results[i] = tasks[i].run();
      } catch (const std::exception& ex) {
        results[i] = tasks[i].proto;
        results[i].pass = false;
        results[i].witness = std::string("exception: ") + ex.what();
      }
    }
  };

  int nthreads = std::min<int>(resolve_threads(opt.threads), static_cast<int>(tasks.size()));
  if (nthreads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  VerifyReport report;
  report.records = std::move(results);
  std::stable_sort(report.records.begin(), report.records.end(),
                   [](const CheckRecord& a, const CheckRecord& b) {
                     return std::tie(a.cell, a.s, a.k, a.check) <
                            std::tie(b.cell, b.s, b.k, b.check);
                   });
  return report;
}

}  // namespace feec4d
