#include <cstdlib>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include "doctest.h"

namespace {

int run(const std::string& args) {
  std::string cmd = std::string(GRAYFORM_CLI) + " " + args + " > /dev/null 2>&1";
  int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string catalog(const char* name) { return std::string(GRAYFORM_CATALOG_DIR) + "/" + name + ".json"; }
std::string fspec(const char* name) { return std::string(GRAYFORM_FSPEC_DIR) + "/" + name + ".json"; }

std::string temp_file(const char* name, const char* text) {
  std::string path = std::string(GRAYFORM_TEST_TMP) + "/" + name;
  std::ofstream(path) << text;
  return path;
}

}  // namespace

TEST_CASE("check exit codes") {
  CHECK(run("check " + catalog("a36a1") + " --j standard --suite all") == 0);
  CHECK(run("check " + catalog("a36a1") + " --j alt --suite g1") == 0);
  CHECK(run("check " + catalog("abelian") + " --suite all") == 0);
  CHECK(run("check " + temp_file("malformed.json", "{\"c\": [")) == 2);
  CHECK(run("check " + temp_file("jacobi.json", R"({"c": [[1,2,3,1],[1,3,4,1],[2,3,4,1],[3,4,1,1]]})")) == 3);
  CHECK(run("check " + catalog("a36a1") + " --suite nope") == 2);
  CHECK(run("check /nonexistent.json") == 2);
}

TEST_CASE("irrational metric falls back to the float backend") {
  CHECK(run("check " + temp_file("metric.json", R"({"name": "m", "c": [[1,2,3,1]],
    "metric": [[2,0,0,0],[0,1,0,0],[0,0,1,0],[0,0,0,1]]})")) == 0);
}

TEST_CASE("torus exit codes") {
  CHECK(run("torus " + fspec("constant") + " --n 8") == 0);
  CHECK(run("torus " + fspec("degree10") + " --n 8") == 4);
  CHECK(run("torus " + fspec("circle") + " --n 7") == 2);
}

TEST_CASE("search exit codes") {
  CHECK(run("search " + catalog("a36a1") + " --starts 0") == 2);
  CHECK(run("search " + catalog("a36a1") + " --starts 2") == 0);
}

TEST_CASE("usage errors") {
  CHECK(run("") == 2);
  CHECK(run("frobnicate") == 2);
}
