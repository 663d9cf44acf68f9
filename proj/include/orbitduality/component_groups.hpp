#pragma once

#include <string>
#include <vector>

#include "orbitduality/orbit.hpp"
#include "orbitduality/twogroup.hpp"

namespace orbitduality {

struct GroupData {
  Partition lambda_eps;      // parts not congruent to epsilon mod 2
  int A_rank = 0;
  int A_ad_rank = 0;
  TwoElem upsilon_tilde;     // product over lambda_eps with multiplicity
  bool S1_nonempty = false;  // some lambda_eps value has odd multiplicity
  bool trivial_kind = false; // type A input
};

GroupData group_data(Kind k, const Partition& lam);
inline GroupData group_data(const Orbit& o) { return group_data(o.kind, o.partition); }

// Every element of A(O) = A^eps, sorted.
std::vector<TwoElem> A_elements(Kind k, const Partition& lam);
bool in_A(Kind k, const TwoElem& e);

bool is_markable(Kind k, const Partition& lam, int x);
Partition markable_parts(Kind k, const Partition& lam);
int abar_rank(Kind k, const Partition& lam);
inline int abar_rank(const Orbit& o) { return abar_rank(o.kind, o.partition); }

// ker(A^eps -> Abar) by the interval rule on markable parts.
TwoSubgroup kernel_N(Kind k, const Partition& lam);
// Pairing rule valid for lambda = lambda^eps with multiplicities at most 2.
TwoSubgroup kernel_N_distinguished(Kind k, const Partition& lam);

struct MarkedPartition {
  Kind kind = Kind::B;
  Partition lambda;
  Partition nu;
  Decoration decoration = Decoration::None;

  Partition eta() const { return remove(lambda, nu); }
  TwoElem element() const { return TwoElem(nu.parts()); }
  Orbit orbit() const { return Orbit{kind, lambda, decoration}; }
  bool operator==(const MarkedPartition&) const = default;
};

struct MarkedFlags {
  bool valid = false;
  bool reduced = false;
  bool special = false;
  bool distinguished = false;
};

// Throws DomainError if the marking is not a valid marked partition.
MarkedPartition make_marked(Kind k, Partition lam, Partition nu, Decoration dec = Decoration::None);
std::string marking_problem(Kind k, const Partition& lam, const Partition& nu);
MarkedFlags classify_marked(const MarkedPartition& m);

// theta basis of Abar and its alternative lift theta-tilde (distinguished lambda).
std::vector<TwoElem> theta_basis(Kind k, const Partition& lam);
std::vector<TwoElem> theta_tilde_basis(Kind k, const Partition& lam);

struct CZero {
  Partition nu0;
  Partition eta0;
  TwoElem C0;
};
CZero c_zero(const MarkedPartition& m);

// Every valid marking of lambda (not only reduced ones) in the Abar-class of m.
std::vector<MarkedPartition> lifts_of(const MarkedPartition& m);
// The unique reduced marking in the Abar-class of e.
MarkedPartition reduced_representative(Kind k, const Partition& lam, const TwoElem& e);

// Every reduced marked partition of size n; very even type-D partitions appear once.
std::vector<MarkedPartition> la_data(Kind k, int n);

std::string to_string(const MarkedPartition& m);

}  // namespace orbitduality
