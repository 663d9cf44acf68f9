#pragma once

#include <string>

#include <json.hpp>

#include "orbitduality/infchar.hpp"
#include "orbitduality/sommers.hpp"

namespace orbitduality {

// Text parsers. Malformed text throws ParseError; well-formed text that names
// an impossible object (wrong parity, bad marking) throws DomainError.

// "[5,3,1]", "[]", and the shorthand "[5,2^2]".
Partition parse_partition(const std::string& s);
Kind parse_kind(const std::string& s);
// "B:[5,3,1]", "D:[2,2]I", "D:[4,4]II".
Orbit parse_orbit(const std::string& s);
// "B:<[5,1]>[5,3,1]"; the kind prefix may be dropped when k is given.
MarkedPartition parse_marked(const std::string& s);
MarkedPartition parse_marked(Kind k, const std::string& s);
// "gl(4)+gl(1)+so(9)", "gl(2)+gl(2)'", "sp(4)".
LeviShape parse_levi(Kind k, const std::string& s);
// "(5/2,3/2,1/2)"; every entry must be a half-integer.
Weight parse_weight(Kind k, const std::string& s);

nlohmann::json to_json(const Partition& p);
nlohmann::json to_json(const Orbit& o);
nlohmann::json to_json(const MarkedPartition& m);
nlohmann::json to_json(const Weight& w);
nlohmann::json to_json(const TwoElem& e);
nlohmann::json to_json(const TwoSubgroup& h);

Partition partition_from_json(const nlohmann::json& j);
Orbit orbit_from_json(const nlohmann::json& j);
MarkedPartition marked_from_json(const nlohmann::json& j);
Weight weight_from_json(const nlohmann::json& j);

}  // namespace orbitduality
