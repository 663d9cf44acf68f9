#include "orbitduality/orbit.hpp"

#include <numeric>

namespace orbitduality {

Orbit make_orbit(Kind k, Partition p, Decoration dec) {
  if (!is_type(p, k))
    throw DomainError(to_string(p) + " is not a partition of type " + kind_letter(k));
  if (dec != Decoration::None && !(k == Kind::D && is_very_even(p)))
    throw DomainError("decoration only applies to very even type-D partitions");
  return Orbit{k, std::move(p), dec};
}

int rank_of(Kind k, int n) {
  switch (k) {
    case Kind::A: return n - 1;
    case Kind::B: return (n - 1) / 2;
    case Kind::C:
    case Kind::D: return n / 2;
  }
  return 0;
}

Kind dual_kind(Kind k) {
  switch (k) {
    case Kind::B: return Kind::C;
    case Kind::C: return Kind::B;
    default: return k;
  }
}

int dual_ambient(Kind k, int n) {
  switch (k) {
    case Kind::B: return n - 1;
    case Kind::C: return n + 1;
    default: return n;
  }
}

std::vector<Orbit> enumerate_orbits(Kind k, int n) {
  if (k != Kind::A && (n % 2 == 1) != (k == Kind::B)) throw DomainError("size/kind mismatch");
  std::vector<Orbit> out;
  for (auto& p : partitions_of_type(k, n)) {
    if (k == Kind::D && is_very_even(p)) {
      out.push_back({k, p, Decoration::I});
      out.push_back({k, p, Decoration::II});
    } else {
      out.push_back({k, p, Decoration::None});
    }
  }
  return out;
}

int levi_ambient(const LeviShape& levi) {
  return 2 * std::accumulate(levi.gl_sizes.begin(), levi.gl_sizes.end(), 0) + levi.residual;
}

void check_levi(Kind k, int n, const LeviShape& levi) {
  for (int a : levi.gl_sizes)
    if (a <= 0) throw DomainError("gl block sizes must be positive");
  if (levi_ambient(levi) != n) throw DomainError("Levi does not fit the ambient size");
  if (levi.primed) {
    if (k != Kind::D || levi.residual != 0) throw DomainError("primed Levi needs type D with no residual factor");
    for (int a : levi.gl_sizes)
      if (a % 2) throw DomainError("primed Levi needs even gl blocks");
  }
}

namespace {

void check_gl(const LeviShape& levi, const std::vector<Partition>& gl_orbits, const Orbit& core) {
  if (gl_orbits.size() != levi.gl_sizes.size()) throw DomainError("one gl orbit per gl block expected");
  for (std::size_t j = 0; j < gl_orbits.size(); ++j)
    if (gl_orbits[j].total() != levi.gl_sizes[j]) throw DomainError("gl orbit size mismatch");
  if (core.ambient() != levi.residual) throw DomainError("core orbit does not live on the residual factor");
}

}  // namespace

Orbit saturate(const LeviShape& levi, const std::vector<Partition>& gl_orbits, const Orbit& core) {
  check_gl(levi, gl_orbits, core);
  Partition lam = core.partition;
  for (const auto& g : gl_orbits) lam = unite(lam, unite(g, g));
  Decoration dec = Decoration::None;
  if (core.kind == Kind::D && is_very_even(lam)) dec = core.decoration;
  return make_orbit(core.kind, lam, dec);
}

bool birational_induction(Kind k, const Partition& beta, const Partition& collapsed) {
  if (k == Kind::A || beta == collapsed) return true;
  if (k != Kind::D) return false;
  // Column form: beta is built from equal column pairs (all parts even) and
  // exactly one distinct column length is odd. The row form (one value of odd
  // multiplicity) misses e.g. [2,2] + gl(1) -> [3,3], which is birational.
  int odd_cols = 0;
  for (int x : beta.distinct()) {
    if (x % 2) return false;
    if (height(beta, x) % 2) ++odd_cols;
  }
  return odd_cols == 1;
}

Induced induce(const LeviShape& levi, const std::vector<Partition>& gl_orbits, const Orbit& core) {
  check_gl(levi, gl_orbits, core);
  Partition beta = core.partition;
  for (const auto& g : gl_orbits) beta = join(beta, join(g, g));
  Induced r;
  r.joined = beta;
  Partition lam = collapse(beta, core.kind);
  r.birational = birational_induction(core.kind, beta, lam);
  r.orbit = make_orbit(core.kind, lam);
  r.decoration_unknown = core.kind == Kind::D && is_very_even(lam);
  return r;
}

Partition induce_by_columns(Kind k, const LeviShape& levi, const std::vector<Partition>& gl_orbits,
                            const Partition& core) {
  (void)levi;
  Partition cols = transpose(core);
  for (const auto& g : gl_orbits) cols = unite(cols, unite(transpose(g), transpose(g)));
  return collapse(transpose(cols), k);
}

Orbit bvls_dual(const Orbit& o) {
  const Partition& lam = o.partition;
  switch (o.kind) {
    case Kind::A: return {Kind::A, transpose(lam), Decoration::None};
    case Kind::C: return make_orbit(Kind::B, collapse(transpose(extend(lam)), Kind::B));
    case Kind::B: return make_orbit(Kind::C, collapse(lower(transpose(lam)), Kind::C));
    case Kind::D: {
      Partition d = collapse(transpose(lam), Kind::D);
      Decoration dec = Decoration::None;
      if (is_very_even(d) && o.decoration != Decoration::None) {
        // Same label iff n = N/2 is divisible by 4.
        bool same = (lam.total() / 2) % 4 == 0;
        dec = same ? o.decoration : (o.decoration == Decoration::I ? Decoration::II : Decoration::I);
      }
      return make_orbit(Kind::D, d, dec);
    }
  }
  return o;
}

bool is_special(const Orbit& o) { return bvls_dual(bvls_dual(o)).partition == o.partition; }

OrbitFlags orbit_predicates(const Orbit& o) {
  OrbitFlags f;
  const auto& p = o.partition;
  f.distinguished = true;
  for (int x : p.distinct())
    if (multiplicity(p, x) > 1) f.distinguished = false;
  f.even = true;
  for (int x : p.parts())
    if ((x - p.row(1)) % 2) f.even = false;
  f.special = is_special(o);
  return f;
}

std::string to_string(Decoration d) {
  switch (d) {
    case Decoration::I: return "I";
    case Decoration::II: return "II";
    default: return "";
  }
}

std::string to_string(const Orbit& o) {
  return std::string(1, kind_letter(o.kind)) + ":" + to_string(o.partition) + to_string(o.decoration);
}

std::string to_string(Kind k, const LeviShape& levi) {
  std::string s;
  for (int a : levi.gl_sizes) {
    if (!s.empty()) s += "+";
    s += "gl(" + std::to_string(a) + ")";
  }
  if (levi.primed) return s + "'";
  if (levi.residual > 0 || s.empty()) {
    if (!s.empty()) s += "+";
    const char* name = k == Kind::C ? "sp" : (k == Kind::A ? "sl" : "so");
    s += std::string(name) + "(" + std::to_string(levi.residual) + ")";
  }
  return s;
}

}  // namespace orbitduality
