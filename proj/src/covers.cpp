#include "orbitduality/covers.hpp"

#include <algorithm>
#include <functional>

namespace orbitduality {

RigidityFlags rigidity(Kind k, const Partition& lam, const TwoSubgroup& H) {
  RigidityFlags f;
  f.no_codim2_leaves = true;
  f.h2_zero = true;
  for (int m = 1; m <= lam.length(); ++m) {
    const int x = lam.row(m), gap = x - lam.row(m + 1);
    const bool in_eps = x % 2 != epsilon(k);
    if (gap > 2 || (gap == 2 && !in_eps)) f.no_codim2_leaves = false;
    if (gap == 2 && in_eps && H.contains(TwoElem(std::vector<int>{x, lam.row(m + 1)})))
      f.no_codim2_leaves = false;
  }
  // H^2 looks at parts of lambda^eps of multiplicity exactly 2.
  for (int x : lam.distinct()) {
    if (x % 2 == epsilon(k) || multiplicity(lam, x) != 2) continue;
    bool seen = false;
    for (const auto& h : H.elements())
      if (h.has(x)) seen = true;
    if (!seen) f.h2_zero = false;
  }
  f.birationally_rigid = f.no_codim2_leaves && f.h2_zero;
  return f;
}

TwoElem PhiData::apply(const TwoElem& e) const {
  std::vector<int> v;
  for (int y : e.support()) v.push_back(y >= x ? y - 2 : y);
  return TwoElem(v);
}

PhiData phi_data(Kind k, const Partition& lam, int m) {
  if (m < 1 || m > lam.length() || lam.row(m) - lam.row(m + 1) < 2)
    throw DomainError("column length " + std::to_string(m) + " is not singular for " + to_string(lam));
  PhiData p;
  p.m = m;
  p.x = lam.row(m);
  std::vector<int> v = lam.parts();
  for (int i = 0; i < m; ++i) v[i] -= 2;
  p.lambda0 = Partition::sorted(v);
  std::vector<TwoElem> ker;
  for (const auto& e : A_elements(k, lam))
    if (p.apply(e).is_identity()) ker.push_back(e);
  p.kernel = TwoSubgroup(ker);
  return p;
}

CoverSpec lusztig_cover(const Orbit& o) {
  CoverSpec c;
  c.base = o;
  c.subgroup = kernel_N(o.kind, o.partition);
  c.log2_degree = group_data(o).A_rank - c.subgroup->rank();
  return c;
}

namespace {

Partition column_pair(int a) { return Partition(std::vector<int>(a, 1)); }

}  // namespace

DCover d_map(const MarkedPartition& d) {
  const SatInverse s = sat_inverse(d);
  DCover out;
  MarkedPartition cur = s.core;
  Orbit pi = sommers_dual(cur);
  out.cover = lusztig_cover(pi);
  for (int a : s.gl_sizes) {
    LeviShape levi{{a}, pi.ambient(), false};
    Induced ind = induce(levi, {column_pair(a)}, pi);
    MarkedPartition next = sat_la(LeviShape{{a}, cur.lambda.total(), false}, {Partition{a}}, cur);
    const Orbit expect = sommers_dual(next);
    if (expect.partition != ind.orbit.partition)
      throw std::logic_error("Sommers duality does not intertwine saturation and induction at " + to_string(next));
    InductionStep step{a, pi, ind.orbit, ind.birational};
    if (ind.birational && ind.joined != ind.orbit.partition) {
      // Type D column-pair exception: phi is not described for this step.
      out.cover.subgroup.reset();
    } else if (ind.birational) {
      if (out.cover.subgroup) {
        const PhiData phi = phi_data(pi.kind, ind.orbit.partition, a);
        if (phi.lambda0 != pi.partition) throw std::logic_error("column removal does not return to the Levi orbit");
        std::vector<TwoElem> pre;
        for (const auto& e : A_elements(pi.kind, ind.orbit.partition))
          if (out.cover.subgroup->contains(phi.apply(e))) pre.push_back(e);
        out.cover.subgroup = TwoSubgroup(pre);
      }
    } else {
      out.cover.subgroup.reset();
      ++out.cover.log2_degree;
    }
    out.steps.push_back(step);
    pi = ind.orbit;
    cur = next;
  }
  out.cover.base = sommers_dual(d);
  return out;
}

std::pair<Partition, Partition> nu_eta_extended(const MarkedPartition& d) {
  const SatInverse s = sat_inverse(d);
  const CZero z = c_zero(s.core);
  std::vector<int> nu = z.nu0.parts(), eta = z.eta0.parts();
  // Pairs of the core's parity go to the eta side: odd for B and D, even for C.
  const int eta_parity = d.kind == Kind::C ? 0 : 1;
  for (int a : s.gl_sizes) {
    auto& side = a % 2 == eta_parity ? eta : nu;
    side.insert(side.end(), {a, a});
  }
  return {Partition::sorted(nu), Partition::sorted(eta)};
}

MSLift ms_lift(const MarkedPartition& d) {
  const auto [nu, eta] = nu_eta_extended(d);
  MSLift r;
  const Kind k1 = d.kind == Kind::C ? Kind::C : Kind::D;
  r.first = Factor{k1, nu.total(), nu};
  r.second = Factor{d.kind, eta.total(), eta};
  return r;
}

int abar_R_rank(const MarkedPartition& d) {
  const MSLift l = ms_lift(d);
  return abar_rank(l.first.kind, l.first.partition) + abar_rank(l.second.kind, l.second.partition);
}

int gamma_group_rank(const MarkedPartition& d, bool ascending) {
  SatInverse s = sat_inverse(d);
  if (ascending) std::reverse(s.gl_sizes.begin(), s.gl_sizes.end());
  MarkedPartition cur = s.core;
  Orbit pi = sommers_dual(cur);
  int rank = group_data(pi).A_ad_rank;
  for (int a : s.gl_sizes) {
    Induced ind = induce(LeviShape{{a}, pi.ambient(), false}, {column_pair(a)}, pi);
    if (!ind.birational) ++rank;
    cur = sat_la(LeviShape{{a}, cur.lambda.total(), false}, {Partition{a}}, cur);
    pi = sommers_dual(cur);
  }
  return rank;
}

StepAnalysis saturation_step_analysis(int a, const MarkedPartition& before) {
  StepAnalysis r;
  r.a = a;
  r.before = before;
  r.after = sat_la(LeviShape{{a}, before.lambda.total(), false}, {Partition{a}}, before);
  const Kind k = before.kind;
  const auto [nu0, eta0] = nu_eta_extended(before);
  const bool fresh = multiplicity(before.lambda, a) == 0;
  // a odd (B, D) or even (C); the eta0 height parity wanted is odd for B, even for C and D.
  const bool core_parity = (a % 2 == 1) == (k != Kind::C);
  const bool eta_height = (height(eta0, a) % 2 == 1) == (k == Kind::B);
  r.abar_changes = fresh && core_parity && eta_height && (k != Kind::D || !eta0.empty());
  const bool lam_ok = k != Kind::D || (!before.lambda.empty() && !is_very_even(before.lambda));
  const bool case_i = core_parity && eta_height && lam_ok;
  const bool case_ii = !core_parity && height(nu0, a) % 2 == 1;
  r.bind_nonbirational = fresh && (case_i || case_ii);

  r.actual_abar_changes = abar_R_rank(r.after) != abar_R_rank(before);
  const Orbit pi = sommers_dual(before);
  r.actual_nonbirational = !induce(LeviShape{{a}, pi.ambient(), false}, {column_pair(a)}, pi).birational;
  return r;
}

std::vector<StepAnalysis> saturation_chain(const MarkedPartition& d) {
  const SatInverse s = sat_inverse(d);
  std::vector<StepAnalysis> out;
  MarkedPartition cur = s.core;
  for (int a : s.gl_sizes) {
    out.push_back(saturation_step_analysis(a, cur));
    cur = out.back().after;
  }
  return out;
}

}  // namespace orbitduality
