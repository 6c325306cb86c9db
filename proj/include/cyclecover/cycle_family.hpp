#pragma once

#include <optional>
#include <set>
#include <vector>

#include "cyclecover/bridges.hpp"
#include "cyclecover/graph_core.hpp"

namespace cyclecover {

// A multiset of directed cycles. Duplicates are kept: the feasibility
// arithmetic counts every member, and the recursive assembly removes specific
// copies by structural equality.
class CycleFamily {
 public:
  void add(Dicycle c);
  void merge(const CycleFamily& other);

  // Removes one copy structurally equal to `c` (same canonical arc sequence).
  // Returns false when no copy is present.
  bool remove_one(const Dicycle& c);

  int size() const { return static_cast<int>(dicycles_.size()); }
  bool empty() const { return dicycles_.empty(); }
  const std::vector<Dicycle>& dicycles() const { return dicycles_; }

  // Indices of all members passing through `v`.
  std::vector<int> through_vertex(VertexId v) const;

  // Index of the unique member whose arcs at attachment `a` realize `tag`
  // (given a's neighbor set inside its bridge). Returns nullopt when no
  // member does; throws Error when several do, since every family built here
  // is supposed to realize each tag exactly once.
  std::optional<int> find_typed(VertexId a, TypeTag tag, const HostCycle& host,
                                const std::set<VertexId>& bridge_neighbors) const;

 private:
  std::vector<Dicycle> dicycles_;
};

// Which of the three inductive situations the chosen leaf segment is in:
// neither endpoint's outside neighbor attachment is foreign (case 1), exactly
// one is (case 2, possibly in the mirrored orientation), or both are (case 3).
enum class CaseKind { case1, case2, case3 };

struct LeafSegment {
  VertexId u = -1;      // first attachment of the leaf bridge, clockwise
  VertexId v = -1;      // last attachment of the leaf bridge
  int leaf_index = -1;  // which bridge the segment belongs to
};

struct WitnessCase {
  CaseKind kind = CaseKind::case1;
  bool mirrored = false;  // case 2 only: the foreign witness sits on the v side
  // case 1: a and b are the two neighbor-bridge attachments that bound the
  // region handled by the split.
  VertexId a = -1;
  VertexId b = -1;
  // case 2: w is the foreign attachment witnessed at the segment boundary, b
  // the neighbor-bridge attachment found by the boundary scan, x its neighbor
  // inside that bridge. case 3: w and z are the two foreign witnesses and x
  // the hub vertex (or -1 when the neighbor bridge is a chord and must be
  // subdivided first).
  VertexId w = -1;
  VertexId z = -1;
  VertexId x = -1;
};

// Top-level entry: builds a feasible dicycle family for the instance.
// Validates the instance (PreconditionViolated) and dispatches on the number
// of bridges; an empty instance yields an empty family.
CycleFamily construct(const Instance& inst);

// Base construction for a single bridge: two dicycles per consecutive
// attachment pair, one around each side of the host.
CycleFamily base_one(const Instance& inst);

// Base construction for two overlapping bridges, driven by the alternating
// block structure of their attachments. Throws BlockStructureNotFound when
// the attachments do not alternate (the bridges would not overlap).
CycleFamily base_two(const Instance& inst);

// Picks the leaf of the overlap tree whose attachments span the shortest
// host segment, returning that segment. Requires at least three bridges.
LeafSegment choose_leaf_segment(const Instance& inst);

// Classifies the segment [u, v] returned by choose_leaf_segment and derives
// the witness data each case needs.
WitnessCase classify_witness_case(const Instance& inst, VertexId u, VertexId v);

// The three inductive combinations. Each recomputes the leaf segment, checks
// the supplied witness data against its own classification
// (PreconditionViolated on mismatch), and assembles the family.
CycleFamily combine_case1(const Instance& inst, VertexId a, VertexId b);
CycleFamily combine_case2(const Instance& inst, VertexId w, VertexId b, VertexId x);
CycleFamily combine_case3(const Instance& inst, VertexId w, VertexId z, VertexId x);

}  // namespace cyclecover
