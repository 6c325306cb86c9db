#pragma once

#include <string>

#include "cyclecover/bridges.hpp"
#include "cyclecover/cycle_family.hpp"
#include "cyclecover/partition_digraph.hpp"

namespace cyclecover {

// Document serialization. Output is deterministic: fixed key order, two-space
// indentation, trailing newline. Loaders check structure only (shapes, value
// types, id ranges, arc chaining) and throw MalformedDocument; semantic
// validation stays with validate_instance and friends.

std::string instance_to_json(const Instance& inst);
Instance instance_from_json(const std::string& text);

std::string family_to_json(const CycleFamily& fam);
CycleFamily family_from_json(const std::string& text);

// Graphviz views. Host edges render solid and bold, bridge edges dashed; the
// family view colors each dicycle separately.
std::string instance_to_dot(const Instance& inst);
std::string family_to_dot(const Instance& inst, const CycleFamily& fam);

std::string aux_to_dot(const AuxDigraph& d);
std::string aux_to_json(const AuxDigraph& d);

}  // namespace cyclecover
