#include <cstdio>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "grayform/io.hpp"

using namespace grayform;

namespace {

enum Exit { kPass = 0, kIdentityFail = 1, kParse = 2, kInvalidAlgebra = 3, kResolution = 4 };

int exit_for(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::InvalidAlgebra: return kInvalidAlgebra;
    case ErrorKind::Unresolved: return kResolution;
    default: return kParse;
  }
}

struct CheckArgs {
  std::string file;
  std::string j;
  std::string suite = "all";
  std::string out;
  bool json = false;
  bool use_float = false;
  double tol = 1e-9;
};

struct TorusArgs {
  std::string file;
  int n = 16;
  bool convergence = false;
  std::string out;
};

struct SearchArgs {
  std::string file;
  int starts = 20;
  std::uint64_t seed = 7;
  double margin = 0.1;
  double penalty = 1e3;
  std::string out;
  bool json = false;
};

template <class T>
std::vector<SuiteReport> run_suites(const Structure<T>& st, const std::vector<SuiteKind>& kinds) {
  std::vector<SuiteReport> out;
  for (SuiteKind k : kinds) out.push_back(run_suite(st, k));
  return out;
}

void print_rows(const std::vector<SuiteReport>& reps) {
  for (const SuiteReport& s : reps) {
    if (!s.applicable) {
      std::printf("%-9s not applicable: %s\n", s.name.c_str(), s.note.c_str());
      continue;
    }
    for (const Row& r : s.rows) {
      const char* status = !r.applicable ? "n/a" : r.kind == RowKind::Measurement ? "value" : r.pass ? "PASS" : "FAIL";
      std::printf("%-9s %-5s %-34s %-24s %s\n", s.name.c_str(), status, std::string(tag_name(r.tag)).c_str(),
                  r.value.c_str(), r.detail.c_str());
    }
  }
}

int cmd_check(const CheckArgs& a) {
  AlgebraSpec spec = parse_algebra_spec(read_file(a.file));
  LieAlgebra4<Rational> alg = to_algebra(spec);
  std::string jname = a.j.empty() ? (spec.J ? "file" : "standard") : a.j;
  AcsJ<Rational> J;
  if (jname == "file") {
    if (!spec.J) throw Error(ErrorKind::InvalidInput, "--j file needs a J matrix in the algebra spec");
    J = AcsJ<Rational>(*spec.J);
  } else {
    J = named_j(jname);
  }
  std::vector<SuiteKind> kinds = a.suite == "all" ? all_suites() : std::vector<SuiteKind>{suite_from_name(a.suite)};

  std::optional<Mat4<Rational>> frame = Mat4<Rational>::identity();
  if (spec.metric) frame = rational_orthonormal_frame(*spec.metric);
  bool use_float = a.use_float || !frame;
  std::vector<SuiteReport> reps;
  std::string backend = "rational";
  if (!use_float) {
    try {
      LieAlgebra4<Rational> ortho = alg.change_basis(*frame);
      ortho.name = alg.name;
      reps = run_suites(Structure<Rational>(ortho, J), kinds);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::GaugeIrrational) throw;
      use_float = true;
    }
  }
  if (use_float) {
    backend = "float";
    LieAlgebra4<double> d = alg.convert<double>();
    if (spec.metric) {
      Mat4<double> g;
      for (int i = 0; i < kDim; ++i)
        for (int j = 0; j < kDim; ++j) g(i, j) = spec.metric->operator()(i, j).get_d();
      d = d.change_basis(float_orthonormal_frame(g));
    }
    Mat4<double> jm;
    for (int i = 0; i < kDim; ++i)
      for (int j = 0; j < kDim; ++j) jm(i, j) = J.matrix()(i, j).get_d();
    Tol tol{a.tol};
    reps = run_suites(Structure<double>(d, AcsJ<double>(jm, tol), std::nullopt, tol), kinds);
  }

  std::string name = spec.name.empty() ? a.file : spec.name;
  std::string report = run_report_json(name, jname, backend, reps);
  if (!a.out.empty()) write_file(a.out, report);
  if (a.json) {
    std::cout << report;
  } else {
    print_rows(reps);
  }
  bool ok = true;
  for (const SuiteReport& s : reps) ok = ok && s.passed();
  std::fprintf(a.json ? stderr : stdout, "%s: %s (%s backend, J %s)\n", name.c_str(), ok ? "pass" : "FAIL",
               backend.c_str(), jname.c_str());
  return ok ? kPass : kIdentityFail;
}

int cmd_torus(const TorusArgs& a) {
  FSpec spec = parse_fspec(read_file(a.file));
  HKFrame hk = HKFrame::standard();
  std::string csv;
  if (a.convergence) {
    ConvergenceResult c = convergence_study(spec, hk, a.n, 2 * a.n);
    csv = torus_csv_header() + torus_csv_row(c.coarse) + torus_csv_row(c.fine) + "\n" + convergence_csv(c);
  } else {
    csv = torus_csv_header() + torus_csv_row(TorusSolver(spec, hk, a.n).report());
  }
  if (!a.out.empty()) write_file(a.out, csv);
  std::cout << csv;
  return kPass;
}

int cmd_search(const SearchArgs& a) {
  AlgebraSpec spec = parse_algebra_spec(read_file(a.file));
  LieAlgebra4<Rational> alg = to_algebra(spec);
  if (spec.metric) {
    std::optional<Mat4<Rational>> f = rational_orthonormal_frame(*spec.metric);
    if (!f) throw Error(ErrorKind::InvalidInput, "search needs a metric with a rational orthonormal frame");
    alg = alg.change_basis(*f);
  }
  LieAlgebra4<double> d = alg.convert<double>();
  d.name = spec.name;
  SearchConfig cfg;
  cfg.starts = a.starts;
  cfg.seed = a.seed;
  cfg.margin = a.margin;
  cfg.penalty = a.penalty;
  SearchReport rep = search(d, cfg);
  std::string text = search_report_json(rep);
  if (!a.out.empty()) write_file(a.out, text);
  if (a.json) std::cout << text;
  std::fprintf(a.json ? stderr : stdout,
               "%s: %s (best defect %.6g, kahler margin %.6g, start %d of %d, threshold %.1g, margin %.3g)\n",
               spec.name.c_str(), rep.found() ? "found" : "not found", rep.best_defect, rep.best_margin,
               rep.best_index, cfg.starts, cfg.found_threshold, cfg.margin);
  return kPass;
}

int cmd_catalog(const std::string& name) {
  if (name.empty()) {
    for (const std::string& n : catalog::names()) std::cout << n << "\n";
    return kPass;
  }
  std::cout << serialize(to_spec(catalog::by_name(name), name));
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verification and search for left-invariant almost Hermitian structures in dimension four"};
  app.require_subcommand(1);

  CheckArgs ca;
  auto* check = app.add_subcommand("check", "Run identity suites on an algebra spec");
  check->add_option("algebra", ca.file, "Algebra spec (JSON)")->required();
  check->add_option("--j", ca.j, "standard, anti-standard, alt, alt-anti or file");
  check->add_option("--suite", ca.suite, "s2, bianchi, sekigawa, g1, ah1, h1 or all");
  check->add_option("--out", ca.out, "Write the run report (JSON)");
  check->add_flag("--json", ca.json, "Print the run report instead of the row table");
  check->add_flag("--float", ca.use_float, "Use the float backend");
  check->add_option("--tol", ca.tol, "Float backend tolerance")->check(CLI::PositiveNumber);

  TorusArgs ta;
  auto* torus = app.add_subcommand("torus", "Closed forms vs finite differences on the flat torus");
  torus->add_option("fspec", ta.file, "f-spec (JSON)")->required();
  torus->add_option("--n", ta.n, "Grid points per axis");
  torus->add_flag("--convergence", ta.convergence, "Run n and 2n and report observed orders");
  torus->add_option("--out", ta.out, "Write the CSV table");

  SearchArgs sa;
  auto* srch = app.add_subcommand("search", "Multistart search for non-Kahler first-Gray structures");
  srch->add_option("algebra", sa.file, "Algebra spec (JSON)")->required();
  srch->add_option("--starts", sa.starts, "Number of starts")->check(CLI::PositiveNumber);
  srch->add_option("--seed", sa.seed, "Seed");
  srch->add_option("--margin", sa.margin, "Minimum |N|^2 + |theta|^2")->check(CLI::NonNegativeNumber);
  srch->add_option("--penalty", sa.penalty, "Penalty weight")->check(CLI::PositiveNumber);
  srch->add_option("--out", sa.out, "Write the search report (JSON)");
  srch->add_flag("--json", sa.json, "Print the search report");

  std::string cat_name;
  auto* cat = app.add_subcommand("catalog", "List catalog algebras or print one as an algebra spec");
  cat->add_option("name", cat_name, "Catalog name");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kParse;
  }

  try {
    if (*check) return cmd_check(ca);
    if (*torus) return cmd_torus(ta);
    if (*srch) return cmd_search(sa);
    if (*cat) return cmd_catalog(cat_name);
  } catch (const Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return exit_for(e);
  }
  return kParse;
}
