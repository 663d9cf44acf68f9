#include <doctest.h>

#include "orbitduality/io.hpp"
#include "orbitduality/suites.hpp"

using namespace orbitduality;

TEST_CASE("partition text") {
  CHECK(parse_partition("[5,3,1]") == Partition{5, 3, 1});
  CHECK(parse_partition("[]") == Partition{});
  CHECK(parse_partition("[5,2^2, 1]") == Partition{5, 2, 2, 1});
  CHECK_THROWS_AS(parse_partition("[1,3]"), ParseError);
  CHECK_THROWS_AS(parse_partition("[3,0]"), ParseError);
  CHECK_THROWS_AS(parse_partition("5,3"), ParseError);
  CHECK_THROWS_AS(parse_partition("[a]"), ParseError);
  CHECK(partition_from_json(nlohmann::json::parse("[4,2]")) == Partition{4, 2});
  CHECK_THROWS_AS(partition_from_json(nlohmann::json::parse("[2,4]")), ParseError);
}

TEST_CASE("orbit and datum text") {
  CHECK(parse_orbit("D:[2,2]I") == make_orbit(Kind::D, {2, 2}, Decoration::I));
  CHECK(parse_orbit("B:[5,3,1]") == make_orbit(Kind::B, {5, 3, 1}));
  CHECK_THROWS_AS(parse_orbit("C:[3]"), DomainError);
  CHECK_THROWS_AS(parse_orbit("[3]"), ParseError);
  CHECK_THROWS_AS(parse_orbit("B:[3]x"), ParseError);
  CHECK(parse_marked("B:<[5,1]>[5,3,1]") == make_marked(Kind::B, {5, 3, 1}, {5, 1}));
  CHECK(parse_marked(Kind::C, "<[2]>[2,2]") == make_marked(Kind::C, {2, 2}, {2}));
  CHECK_THROWS_AS(parse_marked("B:<[4]>[5,3,1]"), DomainError);
}

TEST_CASE("Levi and weight text") {
  const LeviShape l = parse_levi(Kind::B, "gl(4)+gl(1)+so(9)");
  CHECK(l == LeviShape{{4, 1}, 9, false});
  CHECK(parse_levi(Kind::D, "gl(2)+gl(2)'") == LeviShape{{2, 2}, 0, true});
  CHECK_THROWS_AS(parse_levi(Kind::B, "gl(2)+sp(4)"), DomainError);
  CHECK_THROWS_AS(parse_levi(Kind::B, "gl(2"), ParseError);
  CHECK(parse_weight(Kind::B, "(5/2,3/2,1,0)").twice == std::vector<int>{5, 3, 2, 0});
  CHECK_THROWS_AS(parse_weight(Kind::B, "(1/3)"), ParseError);
}

TEST_CASE("printed values parse back") {
  for (auto [k, n] : sizes_in_range(5)) {
    for (const auto& o : enumerate_orbits(k, n)) {
      CHECK(parse_orbit(to_string(o)) == o);
      CHECK(parse_partition(to_string(o.partition)) == o.partition);
      CHECK(orbit_from_json(to_json(o)) == o);
    }
    for (const auto& d : la_data(k, n)) {
      CHECK(parse_marked(to_string(d)) == d);
      CHECK(marked_from_json(to_json(d)) == d);
      const Weight g = gamma_la(d);
      CHECK(parse_weight(g.kind, to_string(g)) == g);
      CHECK(weight_from_json({{"kind", std::string(1, kind_letter(g.kind))}, {"coords", to_json(g)}}) == g);
    }
  }
  for (const auto& levi : {LeviShape{{4, 1}, 9, false}, LeviShape{{3}, 0, false}})
    CHECK(parse_levi(Kind::B, to_string(Kind::B, levi)) == levi);
}
