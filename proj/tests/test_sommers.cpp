#include <doctest.h>

#include "orbitduality/sommers.hpp"
#include "orbitduality/suites.hpp"

using namespace orbitduality;

TEST_CASE("Sommers dual examples") {
  const MarkedPartition a = make_marked(Kind::B, {5, 3, 1}, {5, 1});
  for (Route r : {Route::General, Route::Distinguished, Route::Blocks})
    CHECK(sommers_dual(a, r) == make_orbit(Kind::C, {2, 2, 2, 1, 1}));
  CHECK(sommers_dual(make_marked(Kind::B, {5, 4, 4, 3, 1}, {5, 1})).partition == Partition{4, 4, 4, 2, 2});
  CHECK(sommers_dual(make_marked(Kind::C, {2, 2}, {2})).partition == Partition{2, 2, 1});
}

TEST_CASE("trivial class gives the BVLS dual") {
  for (auto [k, n] : sizes_in_range(5))
    for (const auto& o : enumerate_orbits(k, n))
      CHECK(sommers_dual(make_marked(k, o.partition, {}, o.decoration)).partition == bvls_dual(o).partition);
}

TEST_CASE("block decomposition") {
  const auto blocks = block_decompose(make_marked(Kind::B, {5, 3, 1}, {5, 1}));
  REQUIRE(blocks.size() == 1);
  CHECK(is_basic_block(blocks.front()));
  const MarkedPartition w = make_marked(Kind::B, {5, 4, 4, 3, 1}, {5, 1});
  CHECK(sommers_dual(w, Route::Blocks) == sommers_dual(w, Route::General));
  // Marked blocks are basic; the lambdas concatenate back to lambda.
  for (const auto& d : la_data(Kind::B, 11)) {
    std::vector<int> parts;
    for (const auto& blk : block_decompose(d)) {
      if (!blk.nu.empty()) CHECK(is_basic_block(blk));
      parts.insert(parts.end(), blk.lambda.parts().begin(), blk.lambda.parts().end());
    }
    CHECK(Partition(parts) == d.lambda);
  }
}

TEST_CASE("routes agree on every reduced datum") {
  for (auto [k, n] : sizes_in_range(5))
    for (const auto& d : la_data(k, n)) {
      CHECK(sommers_dual(d, Route::General) == sommers_dual(d, Route::Blocks));
      if (classify_marked(d).distinguished) CHECK(sommers_dual(d, Route::General) == sommers_dual(d, Route::Distinguished));
    }
}

TEST_CASE("saturation of LA data and its inverse") {
  const MarkedPartition core = make_marked(Kind::B, {5, 3, 1}, {5, 1});
  const MarkedPartition w = sat_la(LeviShape{{4}, 9, false}, {Partition{4}}, core);
  CHECK(w == make_marked(Kind::B, {5, 4, 4, 3, 1}, {5, 1}));
  CHECK(sat_la(LeviShape{{}, 9, false}, {}, core) == core);
  CHECK(sat_la(LeviShape{{1}, 2, false}, {Partition{1}}, make_marked(Kind::C, {2}, {2})) ==
        make_marked(Kind::C, {2, 1, 1}, {2}));

  const SatInverse s = sat_inverse(w);
  CHECK(s.gl_sizes == std::vector<int>{4});
  CHECK(s.core == core);
  CHECK(sat_inverse(core).gl_sizes.empty());
  const SatInverse t = sat_inverse(make_marked(Kind::B, {3, 3, 1, 1, 1}, {}));
  CHECK(t.gl_sizes == std::vector<int>{3, 1});
  CHECK(t.core.lambda == Partition{1});

  for (auto [k, n] : sizes_in_range(5))
    for (const auto& d : la_data(k, n)) {
      const SatInverse inv = sat_inverse(d);
      CHECK(classify_marked(inv.core).distinguished);
      int total = inv.core.lambda.total();
      std::vector<Partition> gl;
      for (int a : inv.gl_sizes) {
        gl.push_back(Partition{a});
        total += 2 * a;
      }
      const MarkedPartition back = sat_la(LeviShape{inv.gl_sizes, inv.core.lambda.total(), false}, gl, inv.core);
      CHECK(back.lambda == d.lambda);
      CHECK(total == n);
    }
}
