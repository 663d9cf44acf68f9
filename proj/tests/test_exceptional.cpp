#include <doctest.h>

#include "orbitduality/exceptional.hpp"

using namespace orbitduality;

namespace {
QVec q(const std::string& s) { return parse_qvec(s); }
}  // namespace

TEST_CASE("root systems") {
  const std::vector<std::pair<Group, std::size_t>> counts{
      {Group::G2, 6}, {Group::F4, 24}, {Group::E6, 36}, {Group::E7, 63}, {Group::E8, 120}};
  for (auto [g, n] : counts)
    for (bool dual : {false, true}) {
      const RootSystem rs = root_system(g, dual);
      CHECK(rs.positive.size() == n);
      CHECK(positive_definite(rs.simple_gram));
      CHECK(positive_definite(rs.coweight_gram));
      const bool inverse_ok = rs.simple_gram * rs.coweight_gram == QMatrix::Identity(group_rank(g), group_rank(g));
      CHECK(inverse_ok);
    }
}

TEST_CASE("subsystem classification") {
  const RootSystem g2 = root_system(Group::G2);
  const SubsystemTypes rho = subsystem_classify(g2, q("(1,1)"));
  CHECK(to_string(rho.integral) == "G2");
  CHECK(rho.singular.empty());
  CHECK(subsystem_classify(g2, q("(1,1)/2")).integral == type_from_label("A1+~A1"));
  CHECK(subsystem_classify(g2, q("(3,1)/3")).integral == type_from_label("A2"));
  CHECK(type_from_label("2A2+A1") == type_from_label("A1+A2+A2"));
  CHECK(type_from_label("C3(a1)+~A1") == type_from_label("A1+C3"));
  CHECK(type_from_label("C2") == type_from_label("B2"));
}

TEST_CASE("table lookups") {
  const Tables g2 = load_tables(Group::G2);
  const auto rows = table_lookup(g2, "G2(a1)", "A1+~A1");
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].d_S == "~A1");
  CHECK(rows[0].gamma_M == q("(1,1)/2"));
  CHECK(rows[0].r_O == "A1");
  const Tables f4 = load_tables(Group::F4);
  const auto f = table_lookup(f4, "F4(a3)", "A3+A1");
  REQUIRE(f.size() == 1);
  CHECK(f[0].d_S == "A2+~A1");
  CHECK(f[0].gamma_M == q("(1,1,2,2)/4"));
  bool found = false;
  for (const auto& r : g2.gamma)
    if (r.datum == "(A1,A1)") {
      found = true;
      CHECK(r.orbit == "G2(a1)");
      CHECK(r.Gamma == "1");
      CHECK(r.method == "5");
    }
  CHECK(found);
  CHECK_THROWS_AS(table_lookup(g2, "E8"), DomainError);
}

TEST_CASE("table checks") {
  for (Group g : {Group::G2, Group::F4}) {
    const Tables t = load_tables(g);
    REQUIRE(matching_convention(t).has_value());
    const RootSystem rs = root_system(g, *matching_convention(t));
    CHECK(verify_tables(t, rs).pass());
    CHECK(verify_classification(t, rs).pass());
    CHECK(verify_shell(t, rs).pass());
    CHECK(verify_gamma_table(t).pass());
  }
  CHECK(verify_tables(load_tables(Group::G2), root_system(Group::G2)).checks == 8);
  const Tables e6 = load_tables(Group::E6);
  CHECK(verify_tables(e6, root_system(Group::E6)).pass());
  CHECK(verify_gamma_table(e6).pass());
  CHECK(load_tables(Group::E8).gamma.empty());
}

TEST_CASE("F4(a2) minimum") {
  const Tables f4 = load_tables(Group::F4);
  const RootSystem rs = root_system(Group::F4);
  CHECK(norm2(rs, q("(1,0,1,0)")) < norm2(rs, q("(1,1,1,1)/2")));
}

TEST_CASE("vector text") {
  CHECK(to_string(q("(2,2)/2")) == "(1,1)");
  CHECK(to_string(q("(2,1)/2")) == "(2,1)/2");
  CHECK(to_string(q("(3,1)/3")) == "(3,1)/3");
  CHECK_THROWS_AS(parse_qvec("1,2"), ParseError);
  CHECK(group_label_rank("S2") == 1);
  CHECK_THROWS_AS(group_label_rank("S3"), DomainError);
}
