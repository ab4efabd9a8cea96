#include "grayform/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <Eigen/Cholesky>
#include <Eigen/Dense>

#include "json.hpp"

namespace grayform {

using json = nlohmann::ordered_json;

namespace {

Error bad(const std::string& what) { return Error(ErrorKind::InvalidInput, what); }

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw bad(std::string("malformed JSON: ") + e.what());
  }
}

Rational rational_of(const json& v, const std::string& where) {
  if (v.is_number_integer()) return Rational(v.get<long>());
  if (v.is_string()) return parse_rational(v.get<std::string>());
  throw bad(where + ": expected an integer or a \"p/q\" string");
}

std::string rational_text(const Rational& x) {
  mpq_class y = x;
  y.canonicalize();
  if (y.get_den() == 1) return y.get_num().get_str();
  return y.get_str();
}

Mat4<Rational> matrix_of(const json& v, const std::string& where) {
  if (!v.is_array() || v.size() != 4) throw bad(where + ": expected a 4x4 array");
  Mat4<Rational> m;
  for (int i = 0; i < kDim; ++i) {
    const json& row = v[i];
    if (!row.is_array() || row.size() != 4) throw bad(where + ": expected a 4x4 array");
    for (int j = 0; j < kDim; ++j) m(i, j) = rational_of(row[j], where);
  }
  return m;
}

json matrix_json(const Mat4<Rational>& m) {
  json a = json::array();
  for (int i = 0; i < kDim; ++i) {
    json row = json::array();
    for (int j = 0; j < kDim; ++j) row.push_back(rational_text(m(i, j)));
    a.push_back(row);
  }
  return a;
}

json double_matrix_json(const Mat4<double>& m) {
  json a = json::array();
  for (int i = 0; i < kDim; ++i) {
    json row = json::array();
    for (int j = 0; j < kDim; ++j) row.push_back(m(i, j));
    a.push_back(row);
  }
  return a;
}

std::string kind_name(RowKind k) {
  switch (k) {
    case RowKind::Identity: return "identity";
    case RowKind::Measurement: return "measurement";
    case RowKind::Check: return "check";
  }
  return "?";
}

template <class T>
T get_or(const json& o, const char* key, T fallback) {
  auto it = o.find(key);
  if (it == o.end()) return fallback;
  try {
    return it->get<T>();
  } catch (const json::exception&) {
    throw bad(std::string("field '") + key + "' has the wrong type");
  }
}

}  // namespace

AlgebraSpec parse_algebra_spec(std::string_view text) {
  json doc = parse_json(text);
  if (!doc.is_object()) throw bad("algebra spec must be a JSON object");
  AlgebraSpec s;
  s.name = get_or<std::string>(doc, "name", "");
  auto c = doc.find("c");
  if (c == doc.end() || !c->is_array()) throw bad("algebra spec needs a 'c' array");
  for (const json& t : *c) {
    if (!t.is_array() || t.size() != 4) throw bad("each structure constant is [i, j, k, value]");
    AlgebraSpec::Constant k;
    for (int a = 0; a < 3; ++a) {
      if (!t[a].is_number_integer()) throw bad("structure constant indices must be integers");
      int v = t[a].get<int>();
      if (v < 1 || v > 4) throw bad("structure constant indices must be in 1..4");
      (a == 0 ? k.i : a == 1 ? k.j : k.k) = v;
    }
    if (k.i == k.j) throw bad("[e_i, e_i] must vanish");
    k.value = rational_of(t[3], "structure constant");
    s.c.push_back(k);
  }
  if (auto j = doc.find("J"); j != doc.end()) s.J = matrix_of(*j, "J");
  if (auto g = doc.find("metric"); g != doc.end()) s.metric = matrix_of(*g, "metric");
  return s;
}

std::string serialize(const AlgebraSpec& s) {
  // One structure constant or matrix row per line.
  auto rows = [](const std::vector<json>& items) {
    std::string out = "[\n";
    for (std::size_t i = 0; i < items.size(); ++i)
      out += "    " + items[i].dump() + (i + 1 < items.size() ? ",\n" : "\n");
    return out + "  ]";
  };
  std::vector<json> c;
  for (const auto& k : s.c) c.push_back(json::array({k.i, k.j, k.k, rational_text(k.value)}));
  std::string out = "{\n  \"name\": " + json(s.name).dump() + ",\n  \"c\": " + rows(c);
  auto matrix = [&](const char* key, const Mat4<Rational>& m) {
    json a = matrix_json(m);
    out += ",\n  \"" + std::string(key) + "\": " + rows(std::vector<json>(a.begin(), a.end()));
  };
  if (s.J) matrix("J", *s.J);
  if (s.metric) matrix("metric", *s.metric);
  return out + "\n}\n";
}

AlgebraSpec to_spec(const LieAlgebra4<Rational>& alg, const std::string& name) {
  AlgebraSpec s;
  s.name = name;
  for (int i = 0; i < kDim; ++i)
    for (int j = i + 1; j < kDim; ++j)
      for (int k = 0; k < kDim; ++k)
        if (alg.c(i, j, k) != 0) s.c.push_back({i + 1, j + 1, k + 1, alg.c(i, j, k)});
  return s;
}

LieAlgebra4<Rational> to_algebra(const AlgebraSpec& s) {
  LieAlgebra4<Rational> alg;
  alg.name = s.name;
  Tensor<Rational> acc(3);
  for (const auto& k : s.c) {
    acc(k.i - 1, k.j - 1, k.k - 1) += k.value;
    acc(k.j - 1, k.i - 1, k.k - 1) -= k.value;
  }
  for (int i = 0; i < kDim; ++i)
    for (int j = i + 1; j < kDim; ++j)
      for (int k = 0; k < kDim; ++k)
        if (acc(i, j, k) != 0) alg.set(i, j, k, acc(i, j, k));
  validate(alg);
  return alg;
}

std::optional<Mat4<Rational>> rational_orthonormal_frame(const Mat4<Rational>& g) {
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j)
      if (g(i, j) != g(j, i)) throw bad("metric must be symmetric");
  // g = L L^T with L lower triangular; the frame is L^{-T}.
  Mat4<Rational> L;
  for (int j = 0; j < kDim; ++j) {
    Rational d = g(j, j);
    for (int k = 0; k < j; ++k) d -= L(j, k) * L(j, k);
    if (d <= 0) throw bad("metric must be positive definite");
    mpz_class num = d.get_num(), den = d.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) return std::nullopt;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    L(j, j) = Rational(rn, rd);
    for (int i = j + 1; i < kDim; ++i) {
      Rational s = g(i, j);
      for (int k = 0; k < j; ++k) s -= L(i, k) * L(j, k);
      L(i, j) = s / L(j, j);
    }
  }
  return inverse(L.transpose());
}

Mat4<double> float_orthonormal_frame(const Mat4<double>& g) {
  Eigen::Matrix4d m;
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j) m(i, j) = g(i, j);
  Eigen::LLT<Eigen::Matrix4d> llt(m);
  if (llt.info() != Eigen::Success) throw bad("metric must be positive definite");
  Eigen::Matrix4d f = llt.matrixL().transpose().toDenseMatrix().inverse();
  Mat4<double> out;
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j) out(i, j) = f(i, j);
  return out;
}

AcsJ<Rational> named_j(const std::string& name) {
  if (name == "standard") return catalog::j_standard();
  if (name == "anti-standard") return catalog::j_anti_standard();
  if (name == "alt") return catalog::j_alt();
  if (name == "alt-anti") return catalog::j_alt_anti();
  throw bad("unknown J '" + name + "'");
}

std::string run_report_json(const std::string& algebra, const std::string& j, const std::string& backend,
                            const std::vector<SuiteReport>& suites) {
  json doc;
  doc["algebra"] = algebra;
  doc["J"] = j;
  doc["backend"] = backend;
  bool all = true;
  json arr = json::array();
  for (const SuiteReport& s : suites) {
    json o;
    o["suite"] = s.name;
    o["applicable"] = s.applicable;
    if (!s.note.empty()) o["note"] = s.note;
    o["passed"] = s.passed();
    o["seconds"] = s.seconds;
    json rows = json::array();
    for (const Row& r : s.rows) {
      json row;
      row["tag"] = std::string(tag_name(r.tag));
      row["detail"] = r.detail;
      row["kind"] = kind_name(r.kind);
      row["value"] = r.value;
      row["applicable"] = r.applicable;
      row["pass"] = r.pass;
      rows.push_back(row);
    }
    o["rows"] = rows;
    all = all && s.passed();
    arr.push_back(o);
  }
  doc["passed"] = all;
  doc["suites"] = arr;
  return doc.dump(2) + "\n";
}

std::string search_report_json(const SearchReport& r) {
  auto params = [](const StructureParams& p) {
    json o;
    o["metric_chol"] = double_matrix_json(p.chol);
    o["jsphere"] = p.jsphere;
    o["orient"] = p.orient;
    return o;
  };
  json doc;
  doc["algebra"] = r.algebra;
  json cfg;
  cfg["starts"] = r.config.starts;
  cfg["seed"] = r.config.seed;
  cfg["margin"] = r.config.margin;
  cfg["penalty"] = r.config.penalty;
  cfg["fd_step"] = r.config.fd_step;
  cfg["gtol"] = r.config.gtol;
  cfg["max_iterations"] = r.config.max_iterations;
  cfg["found_threshold"] = r.config.found_threshold;
  doc["config"] = cfg;
  doc["found"] = r.found();
  doc["best_index"] = r.best_index;
  doc["best_defect"] = r.best_defect;
  doc["kahler_margin"] = r.best_margin;
  doc["best_params"] = params(r.best_params);
  json trace = json::array();
  for (const StartResult& s : r.trace) {
    json o;
    o["start"] = s.index;
    o["defect"] = s.defect;
    o["margin"] = s.margin;
    o["objective"] = s.objective;
    o["iterations"] = s.iterations;
    trace.push_back(o);
  }
  doc["trace"] = trace;
  doc["seconds"] = r.seconds;
  return doc.dump(2) + "\n";
}

FSpec parse_fspec(std::string_view text) {
  json doc = parse_json(text);
  if (!doc.is_object()) throw bad("f-spec must be a JSON object");
  auto f = doc.find("f");
  if (f == doc.end() || !f->is_array() || f->size() != 3) throw bad("f-spec needs 'f' with three term lists");
  FSpec s;
  s.renormalize = get_or<bool>(doc, "renormalize", false);
  for (int i = 0; i < 3; ++i) {
    const json& terms = (*f)[i];
    if (!terms.is_array()) throw bad("each component of 'f' is a list of terms");
    for (const json& t : terms) {
      if (!t.is_object()) throw bad("a trig term is an object {k, a, b}");
      TrigTerm term;
      auto k = t.find("k");
      if (k == t.end() || !k->is_array() || k->size() != 4) throw bad("a trig term needs k with 4 integers");
      for (int a = 0; a < kDim; ++a) {
        if (!(*k)[a].is_number_integer()) throw bad("wavenumbers must be integers");
        term.k[a] = (*k)[a].get<int>();
      }
      term.a = get_or<double>(t, "a", 0.0);
      term.b = get_or<double>(t, "b", 0.0);
      s.f[i].push_back(term);
    }
  }
  return s;
}

std::string serialize(const FSpec& s) {
  json doc;
  json f = json::array();
  for (const auto& terms : s.f) {
    json arr = json::array();
    for (const TrigTerm& t : terms) {
      json o;
      o["k"] = t.k;
      o["a"] = t.a;
      o["b"] = t.b;
      arr.push_back(o);
    }
    f.push_back(arr);
  }
  doc["f"] = f;
  doc["renormalize"] = s.renormalize;
  return doc.dump(2) + "\n";
}

std::string torus_csv_header() {
  return "n,h,unit_defect,j_defect,theta_error,nijenhuis_error,delta_theta_error,phi_error,"
         "scalar_residual,lee_integral_fd,lee_integral,nijenhuis_integral,theta_integral,seconds\n";
}

std::string torus_csv_row(const TorusReport& r) {
  std::ostringstream o;
  o.precision(17);
  o << r.n << ',' << r.h << ',' << r.unit_defect << ',' << r.j_defect << ',' << r.theta_error << ','
    << r.nijenhuis_error << ',' << r.delta_theta_error << ',' << r.phi_error << ',' << r.scalar_residual << ','
    << r.lee_integral_fd << ',' << r.lee_integral << ',' << r.nijenhuis_integral << ',' << r.theta_integral
    << ',' << r.seconds << '\n';
  return o.str();
}

std::string convergence_csv(const ConvergenceResult& c) {
  std::ostringstream o;
  o.precision(17);
  o << "quantity,n_coarse,n_fine,coarse,fine,observed_order\n";
  auto line = [&](const char* q, double a, double b, double order) {
    o << q << ',' << c.coarse.n << ',' << c.fine.n << ',' << a << ',' << b << ',' << order << '\n';
  };
  line("theta", c.coarse.theta_error, c.fine.theta_error, c.theta_order);
  line("nijenhuis", c.coarse.nijenhuis_error, c.fine.nijenhuis_error, c.nijenhuis_order);
  line("delta_theta", c.coarse.delta_theta_error, c.fine.delta_theta_error, c.delta_theta_order);
  o << "scalar_relation_c," << c.coarse.n << ',' << c.fine.n << ',' << c.c_coarse << ',' << c.c_fine << ",\n";
  return o.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw bad("cannot read '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw bad("cannot write '" + path + "'");
  out << text;
}

}  // namespace grayform
