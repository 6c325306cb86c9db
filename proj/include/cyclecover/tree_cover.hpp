#pragma once

#include <map>
#include <vector>

#include "cyclecover/bridges.hpp"
#include "cyclecover/graph_core.hpp"
#include "cyclecover/partition_digraph.hpp"

namespace cyclecover {

// Assignment of auxiliary-digraph vertices (0..n-1) to the leaves of a tree.
// Must be a bijection onto the vertex set of the digraph built from the
// partition in play; path_family checks this.
using Labeling = std::map<VertexId, int>;

// A leaf-to-leaf directed path in a tree, as a chain of arcs. Families are
// multisets: parallel arcs of the auxiliary digraph contribute the same
// underlying path twice, and the coverage arithmetic depends on keeping both.
using Dipath = std::vector<Arc>;
using DipathFamily = std::vector<Dipath>;

// The unique tree path from u to v, directed u -> v. Throws VertexAbsent if
// either endpoint is missing from the tree, PreconditionViolated if u == v.
Dipath tree_dipath(const BridgeTree& tree, VertexId u, VertexId v);

// One dipath per arc of the auxiliary digraph of `eta`: arc (x,y) becomes the
// tree path from the leaf labeled x to the leaf labeled y. Throws
// PartitionMismatch when eta does not sum to the leaf count.
DipathFamily path_family(const BridgeTree& tree, const Partition& eta,
                         const Labeling& labeling);

// Per-edge path multiplicities over all edges of the tree (edges no path
// touches are reported with count 0).
std::map<EdgePair, int> coverage(const BridgeTree& tree,
                                 const DipathFamily& family);

}  // namespace cyclecover
