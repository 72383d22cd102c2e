// Command-line front end: verification suites, dimension tables, basis
// tabulations, and dof-matrix export, all in exact rational arithmetic.
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "feec4d/pentatope.hpp"
#include "feec4d/polyspace.hpp"
#include "feec4d/tetprism.hpp"
#include "feec4d/tracedof.hpp"
#include "feec4d/verify.hpp"

using json = nlohmann::ordered_json;
using namespace feec4d;

namespace {

struct OutputTarget {
  std::string path;  // empty = stdout

  void write(const std::string& text) const {
    if (path.empty()) {
      std::cout << text;
      return;
    }
    std::ofstream os(path, std::ios::binary);  // binary: keep LF endings
    if (!os) throw std::runtime_error("cannot open output file: " + path);
    os << text;
  }
};

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::vector<CellKind> parse_cells(const std::string& cell) {
  if (cell == "pentatope") return {CellKind::pentatope};
  if (cell == "prism") return {CellKind::tet_prism};
  return {CellKind::pentatope, CellKind::tet_prism};
}

std::string cell_label(CellKind cell) {
  return cell == CellKind::pentatope ? "pentatope" : "prism";
}

void warn_large_k(int max_k) {
  if (max_k >= 4)
    std::cerr << "warning: k >= 4 runs exact elimination on matrices beyond 280x280; "
                 "expect minutes, not seconds\n";
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
std::vector<Dof> dof_set(CellKind cell, int k, int s) {
  return cell == CellKind::pentatope ? dofs_t4(k, s) : dofs_w4(k, s);
}

const char* component_ordering(int s) {
  switch (s) {
    case 0: return "scalar";
    case 1: return "(1),(2),(3),(4)";
    case 2: return "(12),(13),(14),(23),(24),(34)";
    case 3: return "(123),(124),(134),(234)";
    default: return "(1234)";
  }
}

std::string basis_ordering(CellKind cell) {
  if (cell == CellKind::pentatope)
    return "full-degree component block in monomial order, then Koszul images of homogeneous "
           "higher-degree forms; dependent generators dropped in construction order";
  return "block products in display order per form degree; segment factor outer, tetrahedral "
         "factor inner";
}

const char* dof_ordering() {
  return "trace dofs by entity dimension then entity index, then volume moment families in "
         "display order";
}

// ---- dims ----------------------------------------------------------------

struct DimsRow {
  std::string cell;
  int k;
  int s;
  long long formula;
  long long trace;
  long long volume;
  long long constructed;
  long long rank;
  bool match;
};

int run_dims(const std::string& cell, int max_k, const std::string& format,
             const OutputTarget& out) {
  warn_large_k(max_k);
  std::vector<DimsRow> rows;
  for (CellKind ck : parse_cells(cell))
    for (int k = 1; k <= max_k; ++k)
      for (int s = 0; s <= 4; ++s) {
        auto fam = primary_space(ck, k, s, std::nullopt);
        int deg = 1;
        for (const auto& w : fam)
          for (const auto& c : w.comp) deg = std::max(deg, c.degree());
        Span sp(4, FormPoly::ncomp(s), deg);
        for (const auto& w : fam) sp.insert(w.comp);
        DimsRow r;
        r.cell = cell_label(ck);
        r.k = k;
        r.s = s;
        r.formula = dim_space(ck, k, s);
        r.trace = dim_trace(ck, k, s);
        r.volume = dim_volume(ck, k, s);
        r.constructed = static_cast<long long>(fam.size());
        r.rank = sp.rank();
        r.match = r.constructed == r.formula && r.rank == r.formula &&
                  r.formula == r.trace + r.volume;
        rows.push_back(r);
      }

  bool all_match = true;
  for (const auto& r : rows) all_match = all_match && r.match;

  std::ostringstream os;
  if (format == "json") {
    json doc;
    doc["command"] = "dims";
    doc["max_k"] = max_k;
    doc["rows"] = json::array();
    for (const auto& r : rows) {
      json row;
      row["cell"] = r.cell;
      row["k"] = r.k;
      row["s"] = r.s;
      row["formula"] = r.formula;
      row["trace"] = r.trace;
      row["volume"] = r.volume;
      row["constructed"] = r.constructed;
      row["rank"] = r.rank;
      row["match"] = r.match;
      doc["rows"].push_back(row);
    }
    doc["all_match"] = all_match;
    os << doc.dump(2) << "\n";
  } else if (format == "csv") {
    os << "cell,k,s,formula,trace,volume,constructed,rank,match\n";
    for (const auto& r : rows)
      os << r.cell << "," << r.k << "," << r.s << "," << r.formula << "," << r.trace << ","
         << r.volume << "," << r.constructed << "," << r.rank << ","
         << (r.match ? "MATCH" : "MISMATCH") << "\n";
  } else {
    os << std::left << std::setw(11) << "cell" << std::right << std::setw(3) << "k" << std::setw(3)
       << "s" << std::setw(9) << "formula" << std::setw(7) << "trace" << std::setw(8) << "volume"
       << std::setw(13) << "constructed" << std::setw(6) << "rank"
       << "  status\n";
    for (const auto& r : rows)
      os << std::left << std::setw(11) << r.cell << std::right << std::setw(3) << r.k
         << std::setw(3) << r.s << std::setw(9) << r.formula << std::setw(7) << r.trace
         << std::setw(8) << r.volume << std::setw(13) << r.constructed << std::setw(6) << r.rank
         << "  " << (r.match ? "MATCH" : "MISMATCH") << "\n";
    os << (all_match ? "all dimensions match\n" : "DIMENSION MISMATCH\n");
  }
  out.write(os.str());
  return all_match ? 0 : 1;
}

// ---- verify ----------------------------------------------------------------

std::optional<CorruptSpec> parse_corrupt(const std::string& arg) {
  if (arg.empty()) return std::nullopt;
  std::vector<std::string> parts;
  std::string cur;
  for (char c : arg) {
    if (c == ':') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  if (parts.size() != 5) throw CLI::ValidationError("--corrupt expects cell:s:k:member:term");
  CorruptSpec spec;
  if (parts[0] == "pentatope")
    spec.cell = CellKind::pentatope;
  else if (parts[0] == "prism")
    spec.cell = CellKind::tet_prism;
  else
    throw CLI::ValidationError("--corrupt cell must be pentatope or prism");
  try {
    spec.s = std::stoi(parts[1]);
    spec.k = std::stoi(parts[2]);
    spec.member = std::stoi(parts[3]);
    spec.term = std::stoi(parts[4]);
  } catch (const std::exception&) {
    throw CLI::ValidationError("--corrupt indices must be integers");
  }
  if (spec.s < 0 || spec.s > 4 || spec.k < 1)
    throw CLI::ValidationError("--corrupt requires 0 <= s <= 4 and k >= 1");
  return spec;
}

int run_verify_cmd(const std::string& cell, int max_k, const std::vector<std::string>& checks,
                   const std::string& corrupt_arg, const std::string& format,
                   const OutputTarget& out) {
  warn_large_k(max_k);
  VerifyOptions opt;
  opt.pentatope = cell != "prism";
  opt.prism = cell != "pentatope";
  opt.max_k = max_k;
  opt.checks = checks;
  opt.corrupt = parse_corrupt(corrupt_arg);

  VerifyReport rep = run_verify(opt);

  std::ostringstream os;
  int pass_count = 0;
  for (const auto& r : rep.records)
    if (r.pass) ++pass_count;
  if (format == "json") {
    json doc;
    doc["command"] = "verify";
    doc["max_k"] = max_k;
    doc["records"] = json::array();
    for (const auto& r : rep.records) {
      json rec;
      rec["cell"] = r.cell;
      rec["s"] = r.s;
      rec["k"] = r.k;
      rec["check"] = r.check;
      rec["status"] = r.pass ? "PASS" : "FAIL";
      rec["witness"] = r.witness;
      doc["records"].push_back(rec);
    }
    doc["passed"] = pass_count;
    doc["total"] = rep.records.size();
    doc["all_pass"] = rep.all_pass();
    os << doc.dump(2) << "\n";
  } else if (format == "csv") {
    os << "cell,s,k,check,status,witness\n";
    for (const auto& r : rep.records)
      os << r.cell << "," << r.s << "," << r.k << "," << r.check << ","
         << (r.pass ? "PASS" : "FAIL") << "," << csv_field(r.witness) << "\n";
  } else {
    for (const auto& r : rep.records) {
      os << (r.pass ? "[PASS] " : "[FAIL] ") << std::left << std::setw(10) << r.cell;
      if (r.k >= 0)
        os << " k=" << r.k;
      else
        os << "    ";
      if (r.s >= 0)
        os << " s=" << r.s;
      else
        os << "    ";
      os << "  " << std::setw(14) << r.check << std::right << " " << r.witness << "\n";
    }
    os << "verify: " << pass_count << "/" << rep.records.size() << " checks passed\n";
  }
  out.write(os.str());
  return rep.all_pass() ? 0 : 1;
}

// ---- tabulate --------------------------------------------------------------

struct PointRecord {
  std::vector<Rational> coords;  // size 4
  bool inside = true;
  std::string error;
};

bool point_inside(CellKind cell, const std::vector<Rational>& pt) {
  if (cell == CellKind::pentatope) {
    for (const auto& lam : barycentrics_t4())
      if (lam.eval(pt) < Rational(0)) return false;
    return true;
  }
  for (const auto& lam : prism_tet_barycentrics())
    if (lam.eval(pt) < Rational(0)) return false;
  for (const auto& nu : prism_seg_functions())
    if (nu.eval(pt) < Rational(0)) return false;
  return true;
}

std::vector<PointRecord> lattice_points(CellKind cell, int order) {
  std::vector<PointRecord> pts;
  const auto& verts = RefCell::get(cell).vertices();
  Rational m(order);
  if (cell == CellKind::pentatope) {
    // all nonnegative integer barycentric 5-tuples summing to the order
    for (int i0 = 0; i0 <= order; ++i0)
      for (int i1 = 0; i0 + i1 <= order; ++i1)
        for (int i2 = 0; i0 + i1 + i2 <= order; ++i2)
          for (int i3 = 0; i0 + i1 + i2 + i3 <= order; ++i3) {
            int i4 = order - i0 - i1 - i2 - i3;
            std::array<int, 5> w = {i0, i1, i2, i3, i4};
            PointRecord rec;
            rec.coords.assign(4, Rational(0));
            for (int v = 0; v < 5; ++v)
              for (int a = 0; a < 4; ++a) rec.coords[a] += verts[v][a] * Rational(w[v]) / m;
            pts.push_back(std::move(rec));
          }
    return pts;
  }
  // product lattice: tetrahedral barycentric lattice times segment lattice
  for (int i0 = 0; i0 <= order; ++i0)
    for (int i1 = 0; i0 + i1 <= order; ++i1)
      for (int i2 = 0; i0 + i1 + i2 <= order; ++i2) {
        int i3 = order - i0 - i1 - i2;
        std::array<int, 4> w = {i0, i1, i2, i3};
        for (int j = 0; j <= order; ++j) {
          PointRecord rec;
          rec.coords.assign(4, Rational(0));
          // bottom tet vertices 0..3 carry the spatial coordinates
          for (int v = 0; v < 4; ++v)
            for (int a = 0; a < 3; ++a) rec.coords[a] += verts[v][a] * Rational(w[v]) / m;
          rec.coords[3] = Rational(-1) + Rational(2 * j) / m;
          pts.push_back(std::move(rec));
        }
      }
  return pts;
}

std::vector<PointRecord> read_points_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("cannot open points file: " + path);
  std::vector<PointRecord> pts;
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    for (char& c : line)
      if (c == ',' || c == '\t' || c == '\r') c = ' ';
    std::istringstream ls(line);
    std::vector<std::string> tokens;
    std::string tok;
    while (ls >> tok) tokens.push_back(tok);
    if (tokens.empty() || tokens[0][0] == '#') continue;
    PointRecord rec;
    if (tokens.size() != 4) {
      rec.inside = false;
      rec.error = "line " + std::to_string(lineno) + ": expected 4 rational coordinates";
      pts.push_back(std::move(rec));
      continue;
    }
    try {
      for (const auto& t : tokens) rec.coords.push_back(Rational::from_string(t));
    } catch (const std::exception&) {
      rec.coords.clear();
      rec.inside = false;
      rec.error = "line " + std::to_string(lineno) + ": malformed rational";
    }
    pts.push_back(std::move(rec));
  }
  return pts;
}

int run_tabulate(const std::string& cell, int s, int k, const std::string& points_path,
                 int lattice, const std::string& format, const OutputTarget& out) {
  if (cell == "all") throw CLI::ValidationError("tabulate requires --cell pentatope or prism");
  if ((points_path.empty() && lattice <= 0) || (!points_path.empty() && lattice > 0))
    throw CLI::ValidationError("tabulate requires exactly one of --points FILE or --lattice M");
  CellKind ck = parse_cells(cell)[0];
  warn_large_k(k);

  std::vector<PointRecord> pts =
      points_path.empty() ? lattice_points(ck, lattice) : read_points_file(points_path);
  for (auto& p : pts)
    if (p.inside && !point_inside(ck, p.coords)) {
      p.inside = false;
      p.error = "point outside the reference cell";
    }

  auto fam = primary_space(ck, k, s, std::nullopt);
  bool any_bad = false;
  for (const auto& p : pts) any_bad = any_bad || !p.inside;

  std::ostringstream os;
  if (format == "csv") {
    os << "basis,x1,x2,x3,x4,components:" << component_ordering(s) << "\n";
    for (std::size_t b = 0; b < fam.size(); ++b)
      for (const auto& p : pts) {
        if (!p.inside) continue;
        os << b;
        for (const auto& c : p.coords) os << "," << c.str();
        for (const auto& comp : fam[b].comp) os << "," << comp.eval(p.coords).str();
        os << "\n";
      }
    for (const auto& p : pts)
      if (!p.inside) os << "error,," << csv_field(p.error) << "\n";
  } else if (format == "text") {
    os << "tabulation: cell=" << cell_label(ck) << " s=" << s << " k=" << k
       << " basis size=" << fam.size() << " points=" << pts.size() << "\n";
    for (std::size_t b = 0; b < fam.size(); ++b)
      for (const auto& p : pts) {
        if (!p.inside) continue;
        os << "basis " << b << " at (";
        for (int a = 0; a < 4; ++a) os << p.coords[a].str() << (a < 3 ? ", " : ")");
        os << ":";
        for (const auto& comp : fam[b].comp) os << " " << comp.eval(p.coords).str();
        os << "\n";
      }
    for (const auto& p : pts)
      if (!p.inside) os << "error: " << p.error << "\n";
  } else {
    json doc;
    doc["cell"] = cell_label(ck);
    doc["s"] = s;
    doc["k"] = k;
    doc["basis_ordering"] = basis_ordering(ck);
    doc["component_ordering"] = component_ordering(s);
    doc["dof_ordering"] = dof_ordering();
    doc["basis_size"] = fam.size();
    doc["rows"] = json::array();
    for (std::size_t b = 0; b < fam.size(); ++b)
      for (const auto& p : pts) {
        if (!p.inside) continue;
        json row;
        row["basis"] = b;
        json coords = json::array();
        for (const auto& c : p.coords) coords.push_back(c.str());
        row["point"] = coords;
        json values = json::array();
        for (const auto& comp : fam[b].comp) values.push_back(comp.eval(p.coords).str());
        row["values"] = values;
        doc["rows"].push_back(row);
      }
    doc["errors"] = json::array();
    for (const auto& p : pts)
      if (!p.inside) {
        json err;
        json coords = json::array();
        for (const auto& c : p.coords) coords.push_back(c.str());
        err["point"] = coords;
        err["error"] = p.error;
        doc["errors"].push_back(err);
      }
    os << doc.dump(2) << "\n";
  }
  out.write(os.str());
  return any_bad ? 1 : 0;
}

// ---- dof-matrix ------------------------------------------------------------

int run_dof_matrix(const std::string& cell, int s, int k, const std::string& format,
                   const OutputTarget& out) {
  if (cell == "all") throw CLI::ValidationError("dof-matrix requires --cell pentatope or prism");
  CellKind ck = parse_cells(cell)[0];
  warn_large_k(k);
  const RefCell& rc = RefCell::get(ck);
  auto fam = primary_space(ck, k, s, std::nullopt);
  auto dofs = dof_set(ck, k, s);
  RatMat m = dof_matrix(rc, dofs, fam);
  Rational d = det(m);

  std::ostringstream os;
  if (format == "csv") {
    os << "# cell=" << cell_label(ck) << " s=" << s << " k=" << k << " n=" << m.size()
       << " det=" << d.str() << "\n";
    for (const auto& row : m) {
      for (std::size_t j = 0; j < row.size(); ++j) os << (j ? "," : "") << row[j].str();
      os << "\n";
    }
  } else if (format == "text") {
    os << "dof matrix: cell=" << cell_label(ck) << " s=" << s << " k=" << k << " n=" << m.size()
       << "\n";
    for (const auto& row : m) {
      for (std::size_t j = 0; j < row.size(); ++j) os << (j ? " " : "") << row[j].str();
      os << "\n";
    }
    os << "det = " << d.str() << "\n";
  } else {
    json doc;
    doc["cell"] = cell_label(ck);
    doc["s"] = s;
    doc["k"] = k;
    doc["n"] = m.size();
    doc["dof_ordering"] = dof_ordering();
    doc["basis_ordering"] = basis_ordering(ck);
    doc["det"] = d.str();
    doc["rows"] = json::array();
    for (const auto& row : m) {
      json r = json::array();
      for (const auto& v : row) r.push_back(v.str());
      doc["rows"].push_back(r);
    }
    os << doc.dump(2) << "\n";
  }
  out.write(os.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verification of 4D conforming finite element spaces"};
  app.require_subcommand(1);

  std::string cell = "all";
  int max_k = 3;
  std::vector<std::string> checks;
  std::string corrupt_arg;
  std::string points_path;
  int lattice = 0;
  int s = 0;
  int k = 1;
  std::string out_path;
  std::string format;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--out", out_path, "write output to this path instead of stdout");
    cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "csv", "text"}));
  };
  // default format is text for reports, json for file-artifact commands
  auto effective_format = [&format](CLI::App* cmd, const char* dflt) {
    return cmd->get_option("--format")->count() > 0 ? format : std::string(dflt);
  };

  bool all_cells = false;
  auto add_cell_choice = [&](CLI::App* cmd) {
    cmd->add_option("--cell", cell)->check(CLI::IsMember({"pentatope", "prism", "all"}));
    cmd->add_flag("--all", all_cells, "run on both reference cells (same as --cell all)");
  };

  CLI::App* dims = app.add_subcommand("dims", "dimension tables: formula vs constructed rank");
  add_cell_choice(dims);
  dims->add_option("--max-k", max_k, "largest polynomial order")->check(CLI::PositiveNumber);
  add_common(dims);

  CLI::App* verify = app.add_subcommand("verify", "run the verification suites");
  add_cell_choice(verify);
  verify->add_option("--max-k", max_k, "largest polynomial order")->check(CLI::PositiveNumber);
  verify->add_option("--checks", checks,
                     "subset of: dims exactness unisolvency bubbles traces tensor-vs-nrt pullback")
      ->delimiter(',');
  verify->add_option("--corrupt", corrupt_arg)->group("");  // test-harness hook, hidden
  add_common(verify);

  CLI::App* tab = app.add_subcommand("tabulate", "evaluate a space basis at rational points");
  tab->add_option("--cell", cell, "reference cell")
      ->check(CLI::IsMember({"pentatope", "prism"}))
      ->required();
  tab->add_option("--s", s, "form degree 0..4")->check(CLI::Range(0, 4))->required();
  tab->add_option("--k", k, "polynomial order")->check(CLI::PositiveNumber)->required();
  tab->add_option("--points", points_path, "file of rational 4-tuples, one point per line");
  tab->add_option("--lattice", lattice, "barycentric/product lattice order")
      ->check(CLI::PositiveNumber);
  add_common(tab);

  CLI::App* dm = app.add_subcommand("dof-matrix", "export the dof-by-basis matrix and determinant");
  dm->add_option("--cell", cell, "reference cell")
      ->check(CLI::IsMember({"pentatope", "prism"}))
      ->required();
  dm->add_option("--s", s, "form degree 0..4")->check(CLI::Range(0, 4))->required();
  dm->add_option("--k", k, "polynomial order")->check(CLI::PositiveNumber)->required();
  add_common(dm);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;  // usage errors exit 2; --help exits 0
  }

  if (all_cells) cell = "all";

  OutputTarget out{out_path};
  try {
    if (dims->parsed()) return run_dims(cell, max_k, effective_format(dims, "text"), out);
    if (verify->parsed())
      return run_verify_cmd(cell, max_k, checks, corrupt_arg, effective_format(verify, "text"), out);
    if (tab->parsed())
      return run_tabulate(cell, s, k, points_path, lattice, effective_format(tab, "json"), out);
    if (dm->parsed()) return run_dof_matrix(cell, s, k, effective_format(dm, "json"), out);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    // unknown check names and malformed requests are usage errors
    std::string msg = e.what();
    std::cerr << "error: " << msg << "\n";
    return msg.find("unknown check") != std::string::npos ? 2 : 1;
  }
  return 2;
}
