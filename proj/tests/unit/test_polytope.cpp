#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "smallcover/error.hpp"
#include "smallcover/polytope.hpp"
#include "smallcover/tower.hpp"

using namespace smallcover;

namespace {

constexpr const char* kCubeFile = R"(# unit cube
dim=3
face 0: 0 1 2 3
face 1: 4 7 6 5
face 2: 0 4 5 1
face 3: 1 5 6 2
face 4: 2 6 7 3
face 5: 3 7 4 0
)";

int parse_error_column(const std::string& text) {
  try {
    parse_polytope(text);
  } catch (const ParseError& e) {
    return e.column();
  }
  return -1;
}

}  // namespace

TEST_CASE("parse cube and square files") {
  const Polytope cube = parse_polytope(kCubeFile);
  CHECK(cube.dim() == 3);
  CHECK(cube.num_vertices() == 8);
  CHECK(cube.edges().size() == 12);
  CHECK(cube.num_facets() == 6);

  const Polytope square = parse_polytope("dim=2\nface 0: 0 1\nface 1: 1 2\nface 2: 2 3\nface 3: 3 0\n");
  CHECK(square.num_vertices() == 4);
  CHECK(square.num_facets() == 4);
  CHECK(validate(square).ok());
}

TEST_CASE("facets may appear in any order and with a detached colon") {
  const Polytope p = parse_polytope("dim = 2\nface 2 : 2 0\nface 0: 0 1\nface 1: 1 2\n");
  CHECK(p.facet(2)[0] == 2);
  CHECK(validate(p).ok());
}

TEST_CASE("parse errors carry positions") {
  CHECK_THROWS_AS(parse_polytope("dim=3\nface 0: 0 1 2 1\n"), ParseError);
  CHECK(parse_error_column("dim=3\nface 0: 0 1 2 1\n") == 15);
  CHECK_THROWS_WITH_AS(parse_polytope("dim=2\nface 0: 0 1\nface 0: 1 2\n"), doctest::Contains("duplicate facet id"), ParseError);
  CHECK_THROWS_WITH_AS(parse_polytope("dim=2\nface 0: 0 1\nface 1: 1 3\n"), doctest::Contains("vertex id gap"), ParseError);
  CHECK_THROWS_WITH_AS(parse_polytope("dim=2\nface 0: 0 1\nface 2: 1 0\n"), doctest::Contains("contiguous"), ParseError);
  CHECK_THROWS_AS(parse_polytope("face 0: 0 1\n"), ParseError);
  CHECK_THROWS_AS(parse_polytope("dim=4\nface 0: 0 1\n"), ParseError);
  CHECK_THROWS_AS(parse_polytope("dim=3\nface 0 0 1 2\n"), ParseError);
  CHECK_THROWS_AS(parse_polytope("dim=3\nface 0: 0 x 2\n"), ParseError);
  CHECK_THROWS_AS(parse_polytope("dim=3\n"), ParseError);
}

TEST_CASE("serialize then parse is the identity") {
  for (const char* name : {"square", "pentagon", "tetrahedron", "cube", "dodecahedron", "7-prism"}) {
    const Polytope p = builtin(name);
    CHECK(parse_polytope(serialize(p)) == p);
  }
}

TEST_CASE("validate") {
  CHECK(validate(builtin("cube")).ok());
  CHECK(validate(builtin("dodecahedron")).ok());
  CHECK(validate(builtin("dodecahedron"), true).ok());

  // Cube with face 5 removed.
  const Polytope open = parse_polytope("dim=3\nface 0: 0 1 2 3\nface 1: 4 7 6 5\nface 2: 0 4 5 1\nface 3: 1 5 6 2\nface 4: 2 6 7 3\n");
  const auto report = validate(open);
  CHECK_FALSE(report.ok());
  REQUIRE(report.has("edge-faces"));
  bool found_message = false;
  for (const auto& v : report.violations) found_message |= v.message == "edge in 1 face";
  CHECK(found_message);
  CHECK(report.has("vertex-degree"));
  CHECK(report.has("euler"));

  // Two disjoint triangles: every vertex in two edges, but not one cycle.
  const Polytope two = parse_polytope("dim=2\nface 0: 0 1\nface 1: 1 2\nface 2: 2 0\nface 3: 3 4\nface 4: 4 5\nface 5: 5 3\n");
  CHECK(validate(two).has("connected"));

  // Octahedron: vertices of degree 4.
  const Polytope octa = parse_polytope(
      "dim=3\nface 0: 0 2 4\nface 1: 2 1 4\nface 2: 1 3 4\nface 3: 3 0 4\nface 4: 2 0 5\nface 5: 1 2 5\nface 6: 3 1 5\nface 7: 0 3 5\n");
  CHECK(validate(octa).has("vertex-degree"));
  CHECK_THROWS_AS(require_valid(octa), Error);
}

TEST_CASE("f-vector") {
  const auto d = f_vector(builtin("dodecahedron"));
  CHECK(d.vertices == 20);
  CHECK(d.edges == 30);
  CHECK(d.faces == 12);
  CHECK(d.dual() == std::vector<std::int64_t>{12, 30, 20});
  const auto c = f_vector(builtin("cube"));
  CHECK(c.vertices == 8);
  CHECK(c.edges == 12);
  CHECK(c.faces == 6);
  const auto s = f_vector(builtin("square"));
  CHECK(s.vertices == 4);
  CHECK(s.edges == 4);
  CHECK(s.dual() == std::vector<std::int64_t>{4, 4});
}

TEST_CASE("builtins") {
  const auto prism = f_vector(builtin("6-prism"));
  CHECK(prism.vertices == 12);
  CHECK(prism.edges == 18);
  CHECK(prism.faces == 8);
  CHECK(f_vector(builtin("dodecahedron")).vertices == 20);
  CHECK(builtin("7-gon").num_facets() == 7);
  CHECK_THROWS_WITH_AS(builtin("icosahedron"), doctest::Contains("unknown builtin"), Error);
  CHECK_THROWS_AS(builtin("2-prism"), Error);
  CHECK_THROWS_AS(builtin("x-prism"), Error);
}

TEST_CASE("automorphism group orders match the brute-force vertex search") {
  CHECK(automorphism_group(builtin("cube")).size() == 48);
  CHECK(automorphism_group(builtin("dodecahedron")).size() == 120);
  CHECK(automorphism_group(builtin("6-prism")).size() == 24);
  CHECK(oracle::automorphism_count(builtin("cube")) == 48);
  CHECK(oracle::automorphism_count(builtin("dodecahedron")) == 120);
  CHECK(oracle::automorphism_count(builtin("6-prism")) == 24);

  const Polytope doubled = double_along(builtin("dodecahedron"), 0);
  for (const Polytope& p : {builtin("square"), builtin("pentagon"), builtin("tetrahedron"), builtin("5-prism"), doubled})
    CHECK(automorphism_group(p).size() == oracle::automorphism_count(p));
}

TEST_CASE("automorphisms form a group preserving incidence") {
  for (const char* name : {"cube", "6-prism", "dodecahedron", "pentagon"}) {
    const Polytope p = builtin(name);
    const auto group = automorphism_group(p);
    const std::set<FacePermutation> elements(group.begin(), group.end());
    CHECK(elements.size() == group.size());
    const std::size_t flags = p.dim() == 3 ? 4 * p.edges().size() : 2 * static_cast<std::size_t>(p.num_facets());
    CHECK(flags % group.size() == 0);
    for (const auto& g : group) {
      CHECK(elements.count(inverse(g)));
      for (int f = 0; f < p.num_facets(); ++f) {
        std::set<int> image;
        for (int v : p.facet(f)) image.insert(g.vertex_map[static_cast<std::size_t>(v)]);
        const auto target = p.facet(g.facet_map[static_cast<std::size_t>(f)]);
        CHECK(image == std::set<int>(target.begin(), target.end()));
      }
    }
    for (std::size_t i = 0; i < group.size(); i += 7)
      for (std::size_t j = 0; j < group.size(); j += 5) CHECK(elements.count(compose(group[i], group[j])));
  }
}

TEST_CASE("pogorelov check") {
  CHECK(pogorelov_check(builtin("dodecahedron")).ok());
  const auto cube = pogorelov_check(builtin("cube"));
  CHECK(cube.has("face-size"));
  CHECK(pogorelov_check(builtin("5-prism")).has("face-size"));
  CHECK(pogorelov_check(builtin("3-prism")).has("prismatic-3-circuit"));
  CHECK(pogorelov_check(builtin("5-prism")).has("prismatic-4-circuit"));
  CHECK_THROWS_AS(pogorelov_check(builtin("square")), Error);

  const Polytope doubled = double_along(builtin("dodecahedron"), 0);
  CHECK(pogorelov_check(doubled).ok());
}

TEST_CASE("prismatic circuits agree with the exhaustive dual scan") {
  const Polytope doubled = double_along(builtin("dodecahedron"), 3);
  for (const Polytope& p : {builtin("dodecahedron"), builtin("cube"), builtin("3-prism"), builtin("5-prism"), builtin("6-prism"),
                            builtin("tetrahedron"), doubled}) {
    const auto report = pogorelov_check(p);
    std::size_t three = 0, four = 0;
    for (const auto& v : report.violations) {
      three += v.rule == "prismatic-3-circuit";
      four += v.rule == "prismatic-4-circuit";
    }
    const auto expected = oracle::prismatic_circuits(p);
    CHECK(three == expected.three);
    CHECK(four == expected.four);
  }
}
