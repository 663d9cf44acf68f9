#include <doctest.h>
#include <map>

#include "orbitduality/oracle.hpp"
#include "orbitduality/suites.hpp"

using namespace orbitduality;

TEST_CASE("Richardson orbits of zero on a Levi") {
  CHECK(richardson_zero(Kind::D, 16, {3, 3, 3, 1, 1, 1, 1, 5}) == Partition{5, 5, 3, 3});
  CHECK(richardson_zero(Kind::C, 2, {1}) == Partition{2});
  CHECK(richardson_zero(Kind::B, 9, {0, 0, 0, 0}) == Partition{1, 1, 1, 1, 1, 1, 1, 1, 1});
  CHECK_THROWS_AS(richardson_zero(Kind::C, 4, {2, 1}), DomainError);
}

TEST_CASE("Richardson orbits agree with induction from zero") {
  // Oracle: group equal |coordinates| into gl blocks and induce the zero orbit.
  for (Kind k : {Kind::B, Kind::C, Kind::D})
    for (int r = 1; r <= 4; ++r) {
      const int size = k == Kind::B ? 2 * r + 1 : 2 * r;
      for (int parity : {0, 1})
        for (const auto& v : shell(r, 4 * 16)) {
          bool ok = true;
          for (int x : v)
            if (x % 2 != parity) ok = false;
          if (!ok) continue;
          std::map<int, int> blocks;
          int zeros = 0;
          for (int x : v)
            if (x == 0) ++zeros;
            else ++blocks[x];
          LeviShape levi;
          std::vector<Partition> gl;
          for (auto& [x, m] : blocks) {
            levi.gl_sizes.push_back(m);
            gl.push_back(Partition(std::vector<int>(m, 1)));
          }
          levi.residual = size - 2 * (r - zeros);
          const Orbit core = make_orbit(k, Partition(std::vector<int>(levi.residual, 1)));
          CHECK(richardson_zero(k, size, v) == induce(levi, gl, core).orbit.partition);
        }
    }
}

TEST_CASE("membership in S") {
  const MarkedPartition c = make_marked(Kind::C, {2, 2}, {2});
  CHECK(in_S(Weight{Kind::B, {2, 1}}, c));
  CHECK_FALSE(in_S(Weight{Kind::B, {1, 1}}, c));
  CHECK(in_S(Weight{Kind::B, {-1, 2}}, c));
  for (const auto& d : data_in_range(4, true, true)) CHECK(in_S(gamma_distinguished(d), d));
}

TEST_CASE("shell enumeration") {
  for (int n = 1; n <= 3; ++n)
    for (long long b : {0, 1, 5, 20, 41}) CHECK(shell(n, b) == shell_naive(n, b));
  CHECK(shell(2, 0).size() == 1);
}

TEST_CASE("minimality certificates") {
  const MinCertificate a = verify_min(make_marked(Kind::C, {2, 2}, {2}));
  CHECK(a.pass);
  CHECK(to_string(a.candidate) == "(1,1/2)");
  const MinCertificate b = verify_min(make_marked(Kind::B, {5, 3, 1}, {5, 1}));
  CHECK(b.pass);
  CHECK(to_string(b.candidate) == "(5/2,3/2,1/2,1/2)");
  const MarkedPartition even = make_marked(Kind::B, {7, 3, 1}, {});
  const MinCertificate e = verify_min(even);
  CHECK(e.pass);
  CHECK(e.candidate == gamma_rigid_cover(bvls_dual(even.orbit())));
  CHECK_THROWS_AS(verify_min(make_marked(Kind::B, {5, 4, 4, 3, 1}, {5, 1})), DomainError);
}
