#include <doctest.h>

#include <algorithm>
#include <set>

#include "orbitduality/covers.hpp"
#include "orbitduality/suites.hpp"

using namespace orbitduality;

namespace {

// Rank from the count of distinct parts not congruent to epsilon: all of
// them in type C, one fewer in B and D.
int brute_A_rank(Kind k, const Partition& lam) {
  std::vector<int> vals;
  for (int x : lam.distinct())
    if (x % 2 != epsilon(k)) vals.push_back(x);
  const int r = static_cast<int>(vals.size());
  if (r == 0) return 0;
  return k == Kind::C ? r : r - 1;
}

}  // namespace

TEST_CASE("component group data") {
  const GroupData g = group_data(Kind::C, {4, 2, 2});
  CHECK(g.lambda_eps == Partition{4, 2, 2});
  CHECK(g.A_rank == 2);
  CHECK(g.A_ad_rank == 1);
  CHECK(g.upsilon_tilde == TwoElem::basis(4));
  CHECK(g.S1_nonempty);
  CHECK(group_data(Kind::B, {9}).A_rank == 0);
  const GroupData h = group_data(Kind::C, {6, 4, 2});
  CHECK(h.A_rank == 3);
  CHECK(h.A_ad_rank == 2);
}

TEST_CASE("A rank against a direct count") {
  for (auto [k, n] : sizes_in_range(6))
    for (const auto& lam : partitions_of_type(k, n)) {
      CHECK(group_data(k, lam).A_rank == brute_A_rank(k, lam));
      CHECK(static_cast<int>(A_elements(k, lam).size()) == (1 << group_data(k, lam).A_rank));
    }
}

TEST_CASE("markable parts") {
  CHECK(markable_parts(Kind::B, {5, 3, 1}) == Partition{5, 1});
  CHECK(markable_parts(Kind::C, {6, 4, 2}) == Partition{4});
  CHECK(markable_parts(Kind::C, {4, 2, 2}) == Partition{});
  CHECK(abar_rank(Kind::B, {5, 3, 1}) == 1);
}

TEST_CASE("kernel of A -> Abar") {
  const TwoSubgroup n = kernel_N(Kind::C, {6, 4, 2});
  CHECK(n.rank() == 2);
  CHECK(n.contains(TwoElem({6, 4})));
  CHECK(n.contains(TwoElem::basis(2)));
  const TwoSubgroup b = kernel_N(Kind::B, {5, 3, 1});
  CHECK(b.contains(TwoElem({3, 1})));
  CHECK(group_data(Kind::B, {5, 3, 1}).A_rank - b.rank() == 1);
  for (auto [k, n2] : sizes_in_range(6))
    for (const auto& lam : partitions_of_type(k, n2)) {
      const TwoSubgroup N = kernel_N(k, lam);
      CHECK(group_data(k, lam).A_rank - N.rank() == abar_rank(k, lam));
      for (const auto& e : N.elements()) CHECK(in_A(k, e));
      // Both rules agree where the pairing rule applies.
      const bool eps_only = std::all_of(lam.parts().begin(), lam.parts().end(), [&](int x) { return x % 2 != epsilon(k); });
      bool low_mult = true;
      for (int x : lam.distinct())
        if (multiplicity(lam, x) > 2) low_mult = false;
      if (eps_only && low_mult) CHECK(kernel_N_distinguished(k, lam) == N);
    }
}

TEST_CASE("marked partitions") {
  const MarkedFlags a = classify_marked(make_marked(Kind::B, {5, 3, 1}, {5, 1}));
  CHECK(a.reduced);
  CHECK(a.special);
  CHECK(a.distinguished);
  const MarkedFlags w = classify_marked(make_marked(Kind::B, {5, 4, 4, 3, 1}, {5, 1}));
  CHECK(w.reduced);
  CHECK_FALSE(w.special);
  for (auto [k, n] : sizes_in_range(5))
    for (const auto& lam : partitions_of_type(k, n)) CHECK(classify_marked(make_marked(k, lam, {})).special);
  CHECK_THROWS_AS(make_marked(Kind::B, {5, 3, 1}, {4}), DomainError);
}

TEST_CASE("C0 split") {
  const CZero z = c_zero(make_marked(Kind::B, {5, 3, 1}, {5, 1}));
  CHECK(z.nu0 == Partition{5, 3});
  CHECK(z.eta0 == Partition{1});
  const CZero c = c_zero(make_marked(Kind::C, {2, 2}, {2}));
  CHECK(c.nu0 == Partition{2});
  CHECK(c.eta0 == Partition{2});
  const CZero t = c_zero(make_marked(Kind::B, {7, 3, 1}, {}));
  CHECK(t.nu0 == Partition{});
  CHECK(t.eta0 == Partition{7, 3, 1});
}

TEST_CASE("lifts form the coset of the class") {
  const MarkedPartition m = make_marked(Kind::B, {5, 3, 1}, {5, 1});
  const auto lifts = lifts_of(m);
  std::set<Partition> nus;
  for (const auto& l : lifts) nus.insert(l.nu);
  CHECK(nus.count(Partition{5, 1}));
  CHECK(nus.count(Partition{5, 3}));
  const TwoSubgroup N = kernel_N(Kind::B, m.lambda);
  for (const auto& l : lifts) CHECK(N.contains(l.element() * m.element()));
  for (const auto& l : lifts_of(make_marked(Kind::C, {4, 2}, {})))
    CHECK(kernel_N(Kind::C, Partition{4, 2}).contains(l.element()));
}

TEST_CASE("theta bases have Abar rank elements") {
  for (auto [k, n] : sizes_in_range(5))
    for (const auto& lam : partitions_of_type(k, n)) {
      if (!classify_marked(make_marked(k, lam, {})).distinguished) continue;
      CHECK(static_cast<int>(theta_basis(k, lam).size()) == abar_rank(k, lam));
    }
}

TEST_CASE("LA data enumeration is one reduced marking per class") {
  for (auto [k, n] : sizes_in_range(5)) {
    std::set<std::pair<Partition, std::vector<int>>> seen;
    for (const auto& d : la_data(k, n)) {
      CHECK(classify_marked(d).reduced);
      CHECK(seen.insert({d.lambda, d.element().support()}).second);
    }
    int expected = 0;
    for (const auto& lam : partitions_of_type(k, n)) expected += 1 << abar_rank(k, lam);
    CHECK(static_cast<int>(seen.size()) == expected);
  }
}
