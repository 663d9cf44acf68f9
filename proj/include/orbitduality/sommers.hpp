#pragma once

#include <string>
#include <utility>
#include <vector>

#include "orbitduality/component_groups.hpp"

namespace orbitduality {

enum class Route { General, Distinguished, Blocks };

struct DualResult {
  Orbit orbit;
  bool decoration_unknown = false;
  // Named intermediate partitions, in computation order.
  std::vector<std::pair<std::string, Partition>> witness;
};

DualResult sommers_dual_detailed(const MarkedPartition& m, Route route = Route::General);
Orbit sommers_dual(const MarkedPartition& m, Route route = Route::General);

// Contiguous blocks of lambda; the first has the input kind, later ones are
// type D (input B or D) or type C (input C). Throws if none exists.
std::vector<MarkedPartition> block_decompose(const MarkedPartition& m);
bool is_basic_block(const MarkedPartition& block);

MarkedPartition sat_la(const LeviShape& levi, const std::vector<Partition>& gl_orbits, const MarkedPartition& core);

struct SatInverse {
  std::vector<int> gl_sizes;  // nonincreasing
  MarkedPartition core;
};
SatInverse sat_inverse(const MarkedPartition& d);

std::string to_string(Route r);
Route route_from_string(const std::string& s);

}  // namespace orbitduality
