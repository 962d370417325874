#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"

namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = smallcover::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "smallcover_cli_test";
  fs::create_directories(dir);
  return dir / name;
}

void write(const fs::path& path, const std::string& text) { std::ofstream(path) << text; }

std::string slurp(const fs::path& path) {
  std::ifstream in(path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("hvector") {
  const auto r = run({"hvector", "--builtin", "dodecahedron"});
  CHECK(r.code == 0);
  CHECK(r.out == "1 9 9 1\n");
  CHECK(run({"hvector", "--builtin", "square"}).out == "1 2 1\n");
}

TEST_CASE("validate") {
  const auto ok = run({"validate", "--builtin", "dodecahedron", "--strict", "--pogorelov"});
  CHECK(ok.code == 0);
  CHECK(ok.out.find("validate: ok") != std::string::npos);
  CHECK(ok.out.find("f-vector: V=20 E=30 F=12") != std::string::npos);
  CHECK(ok.out.find("automorphisms: 120") != std::string::npos);

  const fs::path open = scratch("open_cube.txt");
  write(open, "dim=3\nface 0: 0 1 2 3\nface 1: 4 7 6 5\nface 2: 0 4 5 1\nface 3: 1 5 6 2\nface 4: 2 6 7 3\n");
  const auto bad = run({"validate", "--polytope", open.string()});
  CHECK(bad.code == 1);
  CHECK(bad.out.find("[edge-faces] edge in 1 face") != std::string::npos);

  const auto prism = run({"validate", "--builtin", "5-prism", "--pogorelov"});
  CHECK(prism.out.find("face-size") != std::string::npos);
}

TEST_CASE("covers") {
  CHECK(run({"covers", "enumerate", "--builtin", "cube"}).out == "count: 4200\n");
  CHECK(run({"covers", "enumerate", "--builtin", "cube", "--threads", "4"}).out == "count: 4200\n");
  const auto listed = run({"covers", "enumerate", "--builtin", "square", "--list"});
  CHECK(listed.out.rfind("count: 18\n", 0) == 0);
  CHECK(std::count(listed.out.begin(), listed.out.end(), '\n') == 19);

  const auto classes = run({"covers", "classify", "--builtin", "dodecahedron"});
  CHECK(classes.code == 0);
  CHECK(classes.out.find("classes: 25") != std::string::npos);
  CHECK(classes.out.find("total: 363720") != std::string::npos);
  CHECK(run({"covers", "classify", "--builtin", "cube", "--no-pruning"}).out.find("classes: 5") != std::string::npos);

  const auto found = run({"covers", "orientable", "--builtin", "square"});
  CHECK(found.out == "0: 10\n1: 01\n2: 10\n3: 01\n");
  CHECK(run({"covers", "orientable", "--builtin", "triangle"}).out == "none\n");
  const fs::path klein = scratch("klein.txt");
  write(klein, "0: 10\n1: 01\n2: 11\n3: 01\n");
  CHECK(run({"covers", "orientable", "--builtin", "square", "--coloring", klein.string()}).out == "orientable: false\n");
}

TEST_CASE("homology") {
  const fs::path t3 = scratch("t3.txt");
  write(t3, "0: 001\n1: 001\n2: 100\n3: 010\n4: 100\n5: 010\n");
  const auto r = run({"homology", "--builtin", "cube", "--coloring", t3.string()});
  CHECK(r.code == 0);
  CHECK(r.out == "cells: 8 24 24 8\nbetti: 1 3 3 1\nh-vector: 1 3 3 1\norientable: true\nverify_dj: true\n");

  const fs::path bad = scratch("bad.txt");
  write(bad, "0: 100\n1: 100\n2: 100\n3: 100\n4: 100\n5: 100\n");
  const auto e = run({"homology", "--builtin", "cube", "--coloring", bad.string()});
  CHECK(e.code == 1);
  CHECK(e.err.find("not characteristic") != std::string::npos);
}

TEST_CASE("tower and rgr") {
  const auto tower = run({"tower", "--seed", "dodecahedron", "--depth", "3"});
  CHECK(tower.code == 0);
  CHECK(tower.out == "j,V,E,F,k,index,h1\n0,20,30,12,5,1,9\n1,30,45,17,5,2,14\n2,50,75,27,5,4,24\n3,90,135,47,5,8,44\n");

  const auto cube = run({"rgr", "--seed", "cube", "--depth", "5"});
  CHECK(cube.code == 0);
  CHECK(cube.out.find("# limit_estimate: 0.000000 (closed form)") != std::string::npos);

  const auto atk = run({"rgr", "--seed", "dodecahedron", "--depth", "4", "--rho", "5/6"});
  CHECK(atk.out.find("# atkinson: rho=0.833333 pass max_rho=0.833333") != std::string::npos);
  const auto cube_atk = run({"rgr", "--seed", "cube", "--depth", "2", "--rho", "1/2"});
  CHECK(cube_atk.code == 0);
  CHECK(cube_atk.out.find("precondition violated") != std::string::npos);
}

TEST_CASE("tower CSV feeds rgr identically and output is deterministic") {
  const fs::path csv = scratch("tower.csv");
  const fs::path out_a = scratch("rgr_a.csv"), out_b = scratch("rgr_b.csv");
  REQUIRE(run({"tower", "--seed", "dodecahedron", "--depth", "6", "--csv", csv.string()}).code == 0);
  const auto from_file = run({"rgr", "--tower", csv.string(), "--rho", "5/6", "--base-rank", "10", "--csv", out_a.string()});
  const auto from_seed = run({"rgr", "--seed", "dodecahedron", "--depth", "6", "--rho", "5/6", "--base-rank", "10", "--csv", out_b.string()});
  CHECK(from_file.code == 0);
  CHECK(from_file.out == from_seed.out);
  CHECK(slurp(out_a) == slurp(out_b));
  CHECK(from_file.out.rfind("# limit_estimate: 5.000000", 0) == 0);

  const auto again = run({"rgr", "--seed", "dodecahedron", "--depth", "6", "--rho", "5/6", "--base-rank", "10"});
  const auto twice = run({"rgr", "--seed", "dodecahedron", "--depth", "6", "--rho", "5/6", "--base-rank", "10"});
  CHECK(again.out == twice.out);
  CHECK(again.out == slurp(out_a) + from_file.out);
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"hvector"}).code == 2);
  CHECK(run({"hvector", "--builtin", "cube", "--polytope", "x.txt"}).code == 2);
  CHECK(run({"tower", "--seed", "cube"}).code == 2);
  CHECK(run({"rgr", "--rho", "1/2"}).code == 2);
  CHECK(run({"covers", "enumerate", "--builtin", "cube", "--threads", "0"}).code == 2);
  CHECK(run({"--help"}).code == 0);

  CHECK(run({"hvector", "--builtin", "icosahedron"}).code == 1);
  CHECK(run({"hvector", "--polytope", "/nonexistent/poly.txt"}).code == 1);
  CHECK(run({"tower", "--seed", "cube", "--depth", "2", "--strategy", "biggest"}).code == 1);
  CHECK(run({"tower", "--seed", "square", "--depth", "2"}).code == 1);
  CHECK(run({"rgr", "--seed", "dodecahedron", "--depth", "2", "--rho", "1/0"}).code == 1);
  const auto unknown = run({"hvector", "--builtin", "icosahedron"});
  CHECK(unknown.err.find("unknown builtin") != std::string::npos);
}
