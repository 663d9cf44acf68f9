#pragma once

#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "orbitduality/component_groups.hpp"

namespace orbitduality {

using Rational = boost::rational<long long>;

// Half-integer vector in the standard coordinates e_i, stored doubled.
struct Weight {
  Kind kind = Kind::B;
  std::vector<int> twice;

  int rank() const { return static_cast<int>(twice.size()); }
  Rational norm2() const;
  bool operator==(const Weight&) const = default;
};

// |coords| sorted descending; in type D the sign of the product (+ if some
// coordinate vanishes) is kept by negating the last entry.
Weight canonical(const Weight& w);
bool w_equivalent(const Weight& a, const Weight& b);
// All coordinates in Z, or all in 1/2+Z.
bool single_coset(const Weight& w);

// Positive members of ((q_i-1)/2, ..., (1-q_i)/2), zero-padded to target, descending.
Weight rho_plus(const Partition& q, int target, Kind kind = Kind::B);
Weight rho_plus(const Partition& q, Kind kind = Kind::B);

Partition f0(const Partition& q);
Partition f1(const Partition& q);
Partition f_map(int eps, const Partition& q);

struct XYG {
  Partition x;  // multiplicity-one parts
  Partition y;  // multiplicity-two parts
  Partition g;  // g(y)
};
XYG xy_g(const Partition& q);

Weight gamma_rigid_cover(const Orbit& o);
// Distinguished core part only, rho^+(nu0^ u eta0).
Weight gamma_distinguished(const MarkedPartition& core);
Weight gamma_la(const MarkedPartition& d);

std::string to_string(const Weight& w);
std::string half_string(int twice);

}  // namespace orbitduality
