#include <doctest.h>

#include "orbitduality/covers.hpp"
#include "orbitduality/suites.hpp"

using namespace orbitduality;

namespace {
const MarkedPartition kWitness = make_marked(Kind::B, {5, 4, 4, 3, 1}, {5, 1});
}

TEST_CASE("rigidity examples") {
  const CoverSpec c = lusztig_cover(make_orbit(Kind::C, {2, 2, 2, 1, 1}));
  CHECK(rigidity(c).birationally_rigid);
  const Orbit zero = make_orbit(Kind::B, {1, 1, 1, 1, 1});
  CHECK(rigidity(zero.kind, zero.partition, TwoSubgroup(A_elements(zero.kind, zero.partition))).birationally_rigid);
  // Universal cover of an orbit whose lambda^eps part 2 has multiplicity two.
  CHECK_FALSE(rigidity(Kind::C, {4, 2, 2}, TwoSubgroup()).h2_zero);
}

TEST_CASE("phi maps") {
  const PhiData p = phi_data(Kind::C, {4, 2}, 1);
  CHECK(p.lambda0 == Partition{2, 2});
  for (const auto& e : A_elements(Kind::C, {4, 2})) CHECK(in_A(Kind::C, p.apply(e)));
  CHECK_THROWS_AS(phi_data(Kind::B, {1, 1}, 1), DomainError);
}

TEST_CASE("duality map D") {
  const DCover w = d_map(kWitness);
  CHECK(w.cover.base == make_orbit(Kind::C, {4, 4, 4, 2, 2}));
  CHECK(w.cover.log2_degree == 1);
  // Trivial class and trivial Abar: the trivial cover of d(lambda).
  const MarkedPartition t = make_marked(Kind::C, {4, 2, 2}, {});
  CHECK(d_map(t).cover.log2_degree == 0);
  CHECK(d_map(t).cover.base == bvls_dual(t.orbit()));
}

TEST_CASE("pseudo-Levi lifts") {
  const MSLift a = ms_lift(make_marked(Kind::C, {2, 2}, {2}));
  CHECK(a.first == Factor{Kind::C, 2, {2}});
  CHECK(a.second == Factor{Kind::C, 2, {2}});
  const MSLift b = ms_lift(kWitness);
  CHECK(b.first == Factor{Kind::D, 16, {5, 4, 4, 3}});
  CHECK(b.second == Factor{Kind::B, 1, {1}});
  // Even orbit, trivial class: the lift is the whole group and the orbit itself.
  const MSLift e = ms_lift(make_marked(Kind::B, {5, 3, 1}, {}));
  CHECK(e.second == Factor{Kind::B, 9, {5, 3, 1}});
  CHECK(e.first.partition.empty());
}

TEST_CASE("Gamma and Abar ranks") {
  const MarkedPartition a = make_marked(Kind::B, {5, 3, 1}, {5, 1});
  CHECK(gamma_group_rank(a) == abar_R_rank(a));
  for (auto [k, n] : sizes_in_range(4))
    for (const auto& lam : partitions_of_type(k, n)) {
      if (!orbit_predicates(make_orbit(k, lam)).even) continue;
      CHECK(abar_R_rank(make_marked(k, lam, {})) == abar_rank(k, lam));
    }
  CHECK(abar_R_rank(kWitness) == 0);
  CHECK(gamma_group_rank(kWitness) == 1);
}

TEST_CASE("saturation steps") {
  const StepAnalysis s = saturation_step_analysis(4, make_marked(Kind::B, {5, 3, 1}, {5, 1}));
  CHECK_FALSE(s.abar_changes);
  CHECK(s.bind_nonbirational);
  const StepAnalysis t = saturation_step_analysis(3, make_marked(Kind::B, {5, 3, 1}, {5, 1}));
  CHECK_FALSE(t.abar_changes);
  CHECK_FALSE(t.bind_nonbirational);
  CHECK_FALSE(t.actual_nonbirational);
}

TEST_CASE("type D eta part is empty exactly when lambda is empty or very even") {
  for (int n = 4; n <= 12; n += 2)
    for (const auto& d : la_data(Kind::D, n)) {
      if (!classify_marked(d).special) continue;
      for (const auto& s : saturation_chain(d)) {
        const bool empty_eta = nu_eta_extended(s.before).second.empty();
        CHECK(empty_eta == (s.before.lambda.empty() || is_very_even(s.before.lambda)));
      }
    }
}
