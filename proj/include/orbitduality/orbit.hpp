#pragma once

#include <string>
#include <vector>

#include "orbitduality/partition.hpp"

namespace orbitduality {

enum class Decoration { None, I, II };

struct Orbit {
  Kind kind = Kind::B;
  Partition partition;
  // Only meaningful for very even type-D partitions. None there means "not determined".
  Decoration decoration = Decoration::None;

  int ambient() const { return partition.total(); }
  bool operator==(const Orbit&) const = default;
};

// Validates the partition type and decoration rule.
Orbit make_orbit(Kind k, Partition p, Decoration dec = Decoration::None);

// Rank of the ambient classical algebra with natural representation of size n.
int rank_of(Kind k, int n);
// The other side of the duality: B <-> C, D <-> D, A <-> A.
Kind dual_kind(Kind k);
// Natural-representation size of the dual algebra.
int dual_ambient(Kind k, int n);

std::vector<Orbit> enumerate_orbits(Kind k, int n);

// gl(a_1) x ... x gl(a_t) x g(residual); primed marks the second class of
// gl-only Levis in type D.
struct LeviShape {
  std::vector<int> gl_sizes;
  int residual = 0;
  bool primed = false;
  bool operator==(const LeviShape&) const = default;
};

void check_levi(Kind k, int n, const LeviShape& levi);
int levi_ambient(const LeviShape& levi);

Orbit saturate(const LeviShape& levi, const std::vector<Partition>& gl_orbits, const Orbit& core);

struct Induced {
  Orbit orbit;
  Partition joined;             // before collapse
  bool birational = true;
  bool decoration_unknown = false;  // very even result, decoration not tracked
};

Induced induce(const LeviShape& levi, const std::vector<Partition>& gl_orbits, const Orbit& core);
// Column form of the same computation, kept as an independent cross-check.
Partition induce_by_columns(Kind k, const LeviShape& levi, const std::vector<Partition>& gl_orbits,
                            const Partition& core);
// Criterion for birational induction given the join beta and its collapse.
bool birational_induction(Kind k, const Partition& beta, const Partition& collapsed);

Orbit bvls_dual(const Orbit& o);

struct OrbitFlags {
  bool distinguished = false;
  bool even = false;
  bool special = false;
};
OrbitFlags orbit_predicates(const Orbit& o);
bool is_special(const Orbit& o);

std::string to_string(Decoration d);
std::string to_string(const Orbit& o);
std::string to_string(Kind k, const LeviShape& levi);

}  // namespace orbitduality
