#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cyclecover/bridges.hpp"
#include "cyclecover/cycle_family.hpp"
#include "cyclecover/graph_core.hpp"

namespace cyclecover {

// Outcome of the four feasibility checks, with enough raw data to see why a
// failing family fails. The checker never looks at how the family was built.
struct FeasibilityReport {
  bool structural_ok = true;  // every arc is an edge of the instance
  bool c1_ok = false;         // host edges covered exactly twice, others >= 4
  bool c2_ok = false;         // symmetric difference with the host is one cycle
  bool c3_ok = false;         // 0 or 2 attachments of each bridge per dicycle
  bool c4_ok = false;         // each (attachment, tag) realized exactly once

  std::map<EdgePair, int> edge_counts;
  std::vector<bool> c2_single_cycle;                   // per dicycle
  std::vector<std::vector<int>> c3_attachment_counts;  // [dicycle][bridge]
  std::map<std::pair<VertexId, TypeTag>, int> c4_tag_counts;
  std::vector<std::string> violations;

  bool pass() const {
    return structural_ok && c1_ok && c2_ok && c3_ok && c4_ok;
  }
};

FeasibilityReport verify_feasible(const Instance& inst, const CycleFamily& fam);

// Checks the length bound: per dicycle, edges off the host may not outnumber
// edges on it (valid only when the host is a longest cycle, hence the
// certificate flag; NotCertified when called without one), plus the aggregate
// bound sum-of-bridge-lambdas <= floor(|E(L)|/2). Returns the conjunction.
bool verify_voss(const Instance& inst, const CycleFamily& fam,
                 bool longest_certified);

// Exhaustive longest-cycle length of an arbitrary undirected graph given as
// an edge list. Returns 0 for forests. Throws TooLarge past the vertex cap.
int longest_cycle_len(const std::vector<EdgePair>& graph_edges);

// All undirected edges of the instance: host edges plus bridge edges.
std::vector<EdgePair> instance_edges(const Instance& inst);

// Size caps for the exhaustive oracles, overridable via the environment
// variables CYCLECOVER_LONGEST_CAP and CYCLECOVER_LAMBDA_CAP (read once).
struct OracleCaps {
  int longest_cap = 18;
  int lambda_cap = 20;
};
const OracleCaps& oracle_caps();

}  // namespace cyclecover
