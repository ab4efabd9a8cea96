#include <filesystem>

#include "doctest.h"
#include "grayform/io.hpp"

using namespace grayform;
namespace fs = std::filesystem;

namespace {

ErrorKind kind_of(const std::string& text) {
  try {
    to_algebra(parse_algebra_spec(text));
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::InvalidInput;
}

}  // namespace

TEST_CASE("shipped catalog files round-trip byte for byte") {
  int files = 0;
  for (const auto& entry : fs::directory_iterator(GRAYFORM_CATALOG_DIR)) {
    CAPTURE(entry.path().string());
    std::string text = read_file(entry.path().string());
    AlgebraSpec spec = parse_algebra_spec(text);
    CHECK(serialize(spec) == text);
    LieAlgebra4<Rational> a = to_algebra(spec);
    CHECK(serialize(to_spec(a, spec.name)) == text);
    ++files;
  }
  CHECK(files == 7);
}

TEST_CASE("rational values") {
  AlgebraSpec s = parse_algebra_spec(R"({"name": "x", "c": [[1, 2, 2, "3/6"], [1, 3, 3, -2]]})");
  REQUIRE(s.c.size() == 2);
  CHECK(s.c[0].value == Rational(1, 2));
  CHECK(s.c[1].value == -2);
  std::string out = serialize(s);
  CHECK(out.find("\"1/2\"") != std::string::npos);
  CHECK(out.find("\"-2\"") != std::string::npos);
}

TEST_CASE("malformed specs") {
  CHECK(kind_of("{") == ErrorKind::InvalidInput);
  CHECK(kind_of("[]") == ErrorKind::InvalidInput);
  CHECK(kind_of(R"({"c": [[1, 5, 2, 1]]})") == ErrorKind::InvalidInput);
  CHECK(kind_of(R"({"c": [[1, 1, 2, 1]]})") == ErrorKind::InvalidInput);
  CHECK(kind_of(R"({"c": [[1, 2, 3, 1.5]]})") == ErrorKind::InvalidInput);
  CHECK(kind_of(R"({"c": [[1, 2, 3, "1/0"]]})") == ErrorKind::InvalidInput);
  CHECK(kind_of(R"({"c": [[1, 2, 3, 1]], "J": [[0, 1]]})") == ErrorKind::InvalidInput);
}

TEST_CASE("Jacobi failure is an invalid algebra") {
  CHECK(kind_of(R"({"c": [[1, 2, 3, 1], [1, 3, 4, 1], [2, 3, 4, 1], [3, 4, 1, 1]]})") ==
        ErrorKind::InvalidAlgebra);
}

TEST_CASE("antisymmetry is completed and duplicates accumulate") {
  LieAlgebra4<Rational> a = to_algebra(parse_algebra_spec(R"({"c": [[2, 1, 3, 1], [1, 2, 3, 2]]})"));
  CHECK(a.c(0, 1, 2) == 1);
}

TEST_CASE("orthonormal frames for a Gram matrix") {
  Mat4<Rational> g = Mat4<Rational>::identity();
  g(0, 0) = 4;
  g(1, 1) = Rational(9, 4);
  std::optional<Mat4<Rational>> f = rational_orthonormal_frame(g);
  REQUIRE(f);
  Mat4<Rational> check = f->transpose() * g * *f;
  CHECK(frobenius2(check - Mat4<Rational>::identity()) == 0);
  g(2, 2) = 2;
  CHECK_FALSE(rational_orthonormal_frame(g));
  Mat4<double> gd = Mat4<double>::identity();
  gd(2, 2) = 2.0;
  gd(0, 1) = gd(1, 0) = 0.5;
  Mat4<double> fd = float_orthonormal_frame(gd);
  CHECK(frobenius2(fd.transpose() * gd * fd - Mat4<double>::identity()) < 1e-24);
  g(0, 1) = 1;
  CHECK_THROWS_AS(rational_orthonormal_frame(g), Error);
}

TEST_CASE("named structures") {
  CHECK(named_j("alt") == catalog::j_alt());
  CHECK_THROWS_AS(named_j("other"), Error);
}

TEST_CASE("f-spec round trip") {
  for (const auto& entry : fs::directory_iterator(GRAYFORM_FSPEC_DIR)) {
    CAPTURE(entry.path().string());
    FSpec s = parse_fspec(read_file(entry.path().string()));
    FSpec t = parse_fspec(serialize(s));
    CHECK(t.renormalize == s.renormalize);
    for (int i = 0; i < 3; ++i) {
      REQUIRE(t.f[i].size() == s.f[i].size());
      for (std::size_t j = 0; j < s.f[i].size(); ++j) {
        CHECK(t.f[i][j].k == s.f[i][j].k);
        CHECK(t.f[i][j].a == s.f[i][j].a);
        CHECK(t.f[i][j].b == s.f[i][j].b);
      }
    }
  }
  CHECK_THROWS_AS(parse_fspec(R"({"f": [[], []]})"), Error);
}

TEST_CASE("run report carries tags and overall status") {
  Structure<Rational> st(catalog::a36_a1(), catalog::j_alt());
  std::string rep = run_report_json("a36a1", "alt", "rational", {run_suite(st, SuiteKind::G1)});
  CHECK(rep.find("\"passed\": true") != std::string::npos);
  CHECK(rep.find(std::string(tag_name(IdentityTag::G1Equivalence))) != std::string::npos);
  CHECK(rep.find("\"0/1\"") != std::string::npos);
}

TEST_CASE("torus CSV has one column per header field") {
  TorusReport r;
  std::string head = torus_csv_header(), row = torus_csv_row(r);
  CHECK(std::count(head.begin(), head.end(), ',') == std::count(row.begin(), row.end(), ','));
}
