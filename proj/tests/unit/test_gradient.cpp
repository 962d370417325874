#include <doctest.h>

#include "smallcover/csv.hpp"
#include "smallcover/error.hpp"
#include "smallcover/gradient.hpp"

using namespace smallcover;

namespace {

TowerState dodeca_tower(int depth) {
  const Polytope p = builtin("dodecahedron");
  return build_tower(p, *find_orientable(p), Strategy::parse("min-face"), depth);
}

TowerState cube_tower(int depth) {
  const Polytope p = builtin("cube");
  return build_tower(p, *find_orientable(p), Strategy::parse("min-face"), depth);
}

}  // namespace

TEST_CASE("Reidemeister-Schreier bound") {
  CHECK(rs_upper_bound(10, 8) == 73);
  CHECK(rs_upper_bound(1, 1000) == 1);
  CHECK(rs_upper_bound(2, 1) == 2);
  CHECK_THROWS_AS(rs_upper_bound(0, 4), Error);
  CHECK_THROWS_AS(rs_upper_bound(3, 0), Error);
  CHECK_THROWS_AS(rs_upper_bound(INT64_MAX, 4), Error);
}

TEST_CASE("b1 lower bounds") {
  CHECK(b1_bound_sequence(dodeca_tower(3)) == std::vector<std::int64_t>{9, 14, 24, 44});
  CHECK(b1_bound_sequence(cube_tower(3)) == std::vector<std::int64_t>{3, 3, 3, 3});
  TowerProfile odd;
  odd.levels.push_back({0, 7, 0, 0, std::nullopt, 1});
  CHECK_THROWS_AS(b1_bound_sequence(odd), Error);
}

TEST_CASE("rank gradient ratios") {
  const auto d = rgr_ratios(dodeca_tower(3));
  REQUIRE(d.levels.size() == 4);
  CHECK(d.levels[0].ratio == 8);
  CHECK(d.levels[1].ratio == Rational(13, 2));
  CHECK(d.levels[2].ratio == Rational(23, 4));
  CHECK(d.levels[3].ratio == Rational(43, 8));
  CHECK(d.levels[0].paper_ratio == Rational(17, 2));
  CHECK(d.closed_form);
  CHECK(d.limit_estimate == 5);

  const auto c = rgr_ratios(cube_tower(3));
  CHECK(c.levels[0].ratio == 2);
  CHECK(c.levels[1].ratio == 1);
  CHECK(c.levels[2].ratio == Rational(1, 2));
  CHECK(c.limit_estimate == 0);

  // Ratios decrease toward the limit for the dodecahedron tower.
  const auto deep = rgr_ratios(dodeca_tower(10));
  for (std::size_t j = 1; j < deep.levels.size(); ++j) {
    CHECK(deep.levels[j].ratio < deep.levels[j - 1].ratio);
    CHECK(deep.levels[j].ratio > deep.limit_estimate);
  }
  CHECK_THROWS_AS(rgr_ratios(TowerProfile{}), Error);
}

TEST_CASE("closed-form limit") {
  const std::vector<int> five{5}, four{4, 4}, mixed{5, 6, 6};
  CHECK(closed_form_limit(20, five) == 5);
  CHECK(closed_form_limit(8, four) == 0);
  CHECK(closed_form_limit(20, mixed) == Rational(9, 2));
  CHECK_THROWS_AS(closed_form_limit(20, std::vector<int>{}), Error);
}

TEST_CASE("limit estimate falls back to the last ratio") {
  TowerProfile t;
  t.levels.push_back({0, 20, 30, 12, 5, 1});
  t.levels.push_back({1, 30, 45, 17, 6, 2});
  t.levels.push_back({2, 48, 72, 26, std::nullopt, 4});
  const auto r = rgr_ratios(t);
  CHECK_FALSE(r.closed_form);
  CHECK(r.limit_estimate == Rational(44, 8));
}

TEST_CASE("Atkinson check") {
  const auto tower = dodeca_tower(8);
  const auto equal = atkinson_check(tower, Rational(5), Rational(6));
  CHECK(equal.precondition_ok);
  CHECK(equal.rho == Rational(5, 6));
  CHECK(equal.all_pass());
  for (const auto& level : equal.levels) CHECK(level.required_vertices == Rational(10 * (std::int64_t{1} << level.j) + 10));
  REQUIRE(equal.max_rho.has_value());
  CHECK(*equal.max_rho == Rational(5, 6));

  const auto strict = atkinson_check(tower, Rational(1), Rational(1));
  CHECK_FALSE(strict.all_pass());
  for (const auto& level : strict.levels)
    if (level.j >= 1) CHECK_FALSE(level.pass);

  const auto cube = atkinson_check(cube_tower(2), Rational(1), Rational(2));
  CHECK_FALSE(cube.precondition_ok);
  CHECK(cube.levels.empty());
  CHECK_FALSE(cube.max_rho.has_value());
  CHECK_FALSE(cube.all_pass());
  CHECK_THROWS_AS(atkinson_check(tower, Rational(0), Rational(1)), Error);
}

TEST_CASE("Atkinson interval") {
  const auto i = atkinson_interval(20, Rational(1, 2), Rational(1));
  CHECK(i.lo == 6);
  CHECK(i.hi == 10);
  CHECK(i.consistent());
  CHECK_FALSE(atkinson_interval(8, Rational(1), Rational(1)).consistent());
  CHECK_FALSE(atkinson_interval(20, Rational(2), Rational(1)).consistent());
}

TEST_CASE("commensurable bounds") {
  const auto d = commensurable_bounds(dodeca_tower(2));
  CHECK(d.b1_lower == std::vector<std::int64_t>{8, 13, 23});
  CHECK(d.index_upper == std::vector<std::uint64_t>{1, 2, 4});
  CHECK(commensurable_bounds(cube_tower(2)).b1_lower == std::vector<std::int64_t>{2, 2, 2});
}

TEST_CASE("b1 lower bound sits below the Reidemeister-Schreier bound") {
  const auto tower = dodeca_tower(12);
  const auto b1 = b1_bound_sequence(tower);
  for (std::size_t j = 0; j < b1.size(); ++j) {
    const auto index = static_cast<std::int64_t>(tower.levels[j].index_over_base);
    CHECK(b1[j] <= rs_upper_bound(10, index));
    CHECK(b1[j] - 1 >= index * 5);  // ratio never drops below the limit
  }
}

TEST_CASE("decimal rendering and rational parsing") {
  CHECK(to_decimal(Rational(5)) == "5.000000");
  CHECK(to_decimal(Rational(13, 2)) == "6.500000");
  CHECK(to_decimal(Rational(1, 3)) == "0.333333");
  CHECK(to_decimal(Rational(2, 3)) == "0.666667");
  CHECK(to_decimal(Rational(-1, 8), 2) == "-0.13");
  CHECK(to_decimal(Rational(1, 2), 0) == "1");
  CHECK(to_decimal(Rational(-1, 1000), 2) == "0.00");
  CHECK(parse_rational("5/6") == Rational(5, 6));
  CHECK(parse_rational("-3") == -3);
  CHECK(parse_rational("+4/8") == Rational(1, 2));
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("a/b"), Error);
  CHECK_THROWS_AS(parse_rational(""), Error);
}

TEST_CASE("tower CSV round trip") {
  const auto tower = dodeca_tower(4);
  const std::string csv = tower_csv(tower);
  CHECK(csv.rfind("j,V,E,F,k,index,h1\n0,20,30,12,5,1,9\n1,30,45,17,5,2,14\n", 0) == 0);
  CHECK(parse_tower_csv(csv) == profile(tower));
  CHECK_THROWS_AS(parse_tower_csv("j,V,E,F,k,index,h1\n0,20,30,12,5,1,8\n"), Error);
  CHECK_THROWS_AS(parse_tower_csv("j,V\n0,20\n"), Error);
  CHECK_THROWS_AS(parse_tower_csv(""), Error);
}

TEST_CASE("rgr CSV") {
  const auto tower = dodeca_tower(2);
  RgrOptions options;
  options.atkinson = atkinson_check(tower, Rational(5), Rational(6));
  options.base_rank = 10;
  const std::string csv = rgr_csv(rgr_ratios(tower), options);
  CHECK(csv ==
        "j,index,V,b1_lower,ratio,paper_ratio,commensurable_b1,atkinson_pass,rs_upper\n"
        "0,1,20,9,8.000000,8.500000,8,pass,10\n"
        "1,2,30,14,6.500000,6.750000,13,pass,19\n"
        "2,4,50,24,5.750000,5.875000,23,pass,37\n");
  const std::string plain = rgr_csv(rgr_ratios(cube_tower(1)));
  CHECK(plain ==
        "j,index,V,b1_lower,ratio,paper_ratio,commensurable_b1,atkinson_pass\n"
        "0,1,8,3,2.000000,2.500000,2,na\n"
        "1,2,8,3,1.000000,1.250000,2,na\n");
}
