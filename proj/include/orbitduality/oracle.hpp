#pragma once

#include <vector>

#include "orbitduality/covers.hpp"
#include "orbitduality/infchar.hpp"

namespace orbitduality {

// Induced orbit from the zero orbit of the Levi cut out by a weight on one
// classical factor g_kind(size). Coordinates given doubled.
Partition richardson_zero(Kind k, int size, const std::vector<int>& twice);

// Split gamma by coset into the two pseudo-Levi factors of g_k (nu side
// first) and take the Richardson orbit on each. k is the kind of the datum,
// so gamma.kind is normally dual_kind(k).
MSLift richardson_pair(Kind k, const Weight& gamma);

// gamma in S(O, C) for a distinguished datum, tested on |gamma|.
bool in_S(const Weight& gamma, const MarkedPartition& d);

// Dominant (nonincreasing, nonnegative) doubled vectors of length n with sum
// of squares <= bound (doubled units, so bound = 4 * norm^2).
std::vector<std::vector<int>> shell(int n, long long bound);
// Same set from a plain box scan over all sign patterns, for self-tests.
std::vector<std::vector<int>> shell_naive(int n, long long bound);

struct MinCertificate {
  MarkedPartition datum;
  Weight candidate;
  bool member = false;
  std::vector<Weight> smaller_members;
  std::vector<Weight> rival_members;  // equal norm, other W-orbit
  long long shell_size = 0;
  long long members_found = 0;
  bool unique_min_orbit = false;
  bool pass = false;
};
MinCertificate verify_min(const MarkedPartition& d);

}  // namespace orbitduality
