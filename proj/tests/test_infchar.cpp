#include <doctest.h>

#include "orbitduality/infchar.hpp"
#include "orbitduality/sommers.hpp"
#include "orbitduality/suites.hpp"

using namespace orbitduality;

namespace {

Weight w(Kind k, std::vector<int> twice) { return Weight{k, std::move(twice)}; }

// Norm of the positive halves of the rho strings, computed from the strings.
Rational string_norm(const Partition& q) {
  Rational s = 0;
  for (int x : q.parts())
    for (int i = 0; i < x; ++i) {
      const Rational c(x - 1 - 2 * i, 2);
      if (c > Rational(0)) s += c * c;
    }
  return s;
}

}  // namespace

TEST_CASE("rho plus") {
  CHECK(rho_plus(Partition{3, 2}, 2).twice == std::vector<int>{2, 1});
  CHECK(rho_plus(Partition{6, 2, 1}, 4).twice == std::vector<int>{5, 3, 1, 1});
  CHECK(rho_plus(Partition{1, 1, 1}, 1).twice == std::vector<int>{0});
  CHECK_THROWS_AS(rho_plus(Partition{7}, 2), DomainError);
}

TEST_CASE("f maps and the x/y/g split") {
  CHECK(f1(Partition{5, 3}) == Partition{6, 2, 1});
  CHECK(f1(Partition{}) == Partition{1});
  CHECK(f0(Partition{3, 2}) == Partition{3, 2});
  const XYG a = xy_g(Partition{5, 3});
  CHECK(a.x == Partition{5, 3});
  CHECK(a.y.empty());
  const XYG b = xy_g(Partition{3, 3, 1, 1});
  CHECK(b.x.empty());
  CHECK(b.g == Partition{4, 2, 2});
  const XYG c = xy_g(Partition{4, 2, 2});
  CHECK(c.x == Partition{4});
  CHECK(c.y == Partition{2, 2});
  CHECK(c.g == Partition{3, 1});
}

TEST_CASE("gamma of rigid covers") {
  CHECK(to_string(gamma_rigid_cover(make_orbit(Kind::B, {2, 2, 1}))) == "(1,1/2)");
  CHECK(to_string(gamma_rigid_cover(make_orbit(Kind::C, {2, 2, 2, 1, 1}))) == "(5/2,3/2,1/2,1/2)");
  for (int n = 1; n <= 5; ++n) {
    std::vector<int> rho;
    for (int i = n; i >= 1; --i) rho.push_back(2 * i);
    CHECK(gamma_rigid_cover(make_orbit(Kind::C, Partition(std::vector<int>(2 * n, 1)))).twice == rho);
  }
}

TEST_CASE("gamma of LA data") {
  CHECK(to_string(gamma_la(make_marked(Kind::B, {5, 3, 1}, {5, 1}))) == "(5/2,3/2,1/2,1/2)");
  CHECK(to_string(gamma_la(make_marked(Kind::B, {5, 4, 4, 3, 1}, {5, 1}))) == "(5/2,3/2,3/2,3/2,1/2,1/2,1/2,1/2)");
  CHECK(to_string(gamma_la(make_marked(Kind::C, {2, 2}, {2}))) == "(1,1/2)");
  for (auto [k, n] : sizes_in_range(5))
    for (const auto& d : la_data(k, n)) CHECK(gamma_la(d).rank() == rank_of(dual_kind(k), dual_ambient(k, n)));
}

TEST_CASE("Weyl group canonical forms") {
  CHECK(canonical(w(Kind::B, {-1, 3})).twice == std::vector<int>{3, 1});
  CHECK_FALSE(w_equivalent(w(Kind::D, {2, -2}), w(Kind::D, {2, 2})));
  CHECK(w_equivalent(w(Kind::D, {2, 0, -2}), w(Kind::D, {2, 2, 0})));
  CHECK(w_equivalent(w(Kind::C, {2, -2}), w(Kind::C, {2, 2})));
  CHECK(single_coset(w(Kind::B, {3, 1})));
  CHECK_FALSE(single_coset(w(Kind::B, {2, 1})));
}

TEST_CASE("two-row norm grows under the box move") {
  for (int q1 = 1; q1 <= 12; ++q1)
    for (int q2 = 1; q2 <= q1; ++q2) {
      const Partition q{q1, q2};
      const Partition up = uparrow2(q);
      CHECK(string_norm(q) < string_norm(up));
      CHECK(rho_plus(q, q1).norm2() == string_norm(q));
    }
}
