#pragma once

#include <optional>
#include <vector>

#include "orbitduality/sommers.hpp"

namespace orbitduality {

// Cover of base attached to a subgroup H of A(base); degree = |A| / |H|.
struct CoverSpec {
  Orbit base;
  std::optional<TwoSubgroup> subgroup;  // empty when not determined
  int log2_degree = 0;
};

struct RigidityFlags {
  bool no_codim2_leaves = false;
  bool h2_zero = false;
  bool birationally_rigid = false;
};
RigidityFlags rigidity(Kind k, const Partition& lam, const TwoSubgroup& H);
inline RigidityFlags rigidity(const CoverSpec& c) { return rigidity(c.base.kind, c.base.partition, *c.subgroup); }

// The homomorphism A(lam) -> A(lam0), lam0 = lam minus two columns of length m.
struct PhiData {
  Partition lambda0;
  TwoSubgroup kernel;
  TwoElem apply(const TwoElem& e) const;
  int m = 0;
  int x = 0;  // lam_m
};
PhiData phi_data(Kind k, const Partition& lam, int m);

CoverSpec lusztig_cover(const Orbit& o);

struct InductionStep {
  int a = 0;
  Orbit before;
  Orbit after;
  bool birational = true;
};

struct DCover {
  CoverSpec cover;
  std::vector<InductionStep> steps;
};
DCover d_map(const MarkedPartition& d);

struct Factor {
  Kind kind = Kind::B;
  int size = 0;
  Partition partition;
  bool operator==(const Factor&) const = default;
};
struct MSLift {
  Factor first;   // nu0 side
  Factor second;  // eta0 side
};
// nu0 and eta0 of the distinguished core, extended by the gl pairs.
std::pair<Partition, Partition> nu_eta_extended(const MarkedPartition& d);
MSLift ms_lift(const MarkedPartition& d);

int gamma_group_rank(const MarkedPartition& d, bool ascending = false);
int abar_R_rank(const MarkedPartition& d);

struct StepAnalysis {
  int a = 0;
  MarkedPartition before;
  MarkedPartition after;
  bool abar_changes = false;       // condition list for the Abar jump
  bool bind_nonbirational = false; // condition list for non-birational induction
  bool actual_abar_changes = false;
  bool actual_nonbirational = false;
};
StepAnalysis saturation_step_analysis(int a, const MarkedPartition& before);
// Steps along the chain core -> d, gl blocks in nonincreasing order.
std::vector<StepAnalysis> saturation_chain(const MarkedPartition& d);

}  // namespace orbitduality
