#ifndef CYCLECOVER_BRIDGES_HPP
#define CYCLECOVER_BRIDGES_HPP

#include <set>
#include <vector>

#include "cyclecover/graph_core.hpp"

namespace cyclecover {

// Output of decompose_bridges and input to lambda_oracle.  Not necessarily a
// tree; just a bridge's edges plus its vertices on the host.
struct RawBridge {
    std::vector<EdgePair> edges;
    std::vector<VertexId> attachments;
};

// A bridge constrained to be a tree whose leaves are exactly the attachments.
// Stored as plain data; validate_instance enforces the invariants.
struct BridgeTree {
    std::vector<EdgePair> edges;
    std::vector<VertexId> attachments;

    std::set<VertexId> vertex_set() const;
    std::set<VertexId> attachment_set() const;
    std::set<VertexId> internal_vertices() const;
    std::vector<VertexId> neighbors(VertexId v) const;
    int degree(VertexId v) const;
    // The unique tree neighbor of an attachment (attachments are leaves).
    VertexId attachment_neighbor(VertexId a) const;
    bool is_chord() const { return edges.size() == 1; }
    bool contains_vertex(VertexId v) const;
};

struct Instance {
    HostCycle host;
    std::vector<BridgeTree> bridges;
};

// Throws PreconditionViolated with a machine-readable reason token:
//   bridge-not-tree, attachments-not-leaves, too-few-attachments,
//   attachment-not-on-host, internal-on-host, bridges-not-disjoint,
//   bridge-edge-parallel-to-host, overlap-not-tree.
// The overlap-not-tree check only runs when require_overlap_tree is set and
// there is at least one bridge.
void validate_instance(const Instance& inst, bool require_overlap_tree);

// Attachments of bridge i sorted by host position.  Input order in the
// struct is not trusted anywhere; everything position-sensitive goes
// through this.
std::vector<VertexId> attachments_by_host(const Instance& inst, int bridge_idx);

// True iff the host cannot be split into two edge-disjoint subpaths with each
// bridge's attachments confined to one of them.  Computed as a gap test: the
// bridges do NOT overlap exactly when all of b2's attachments fit strictly
// inside one gap between cyclically consecutive attachments of b1.
// Throws PreconditionViolated("bridges-not-disjoint") on shared vertices.
bool overlaps(const BridgeTree& b1, const BridgeTree& b2, const HostCycle& L);

struct OverlapGraph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;  // i < j

    bool is_tree() const;
    std::vector<int> neighbors(int i) const;
    int degree(int i) const;
    std::vector<int> leaves() const;  // degree-1 nodes
};

OverlapGraph overlap_graph(const Instance& inst);

// Chords plus one bridge per component of G - V(L), each with its edges to L.
// Bridges come back sorted by the host position of their first attachment.
// Throws HostNotACycle if some host edge is missing from the edge list.
std::vector<RawBridge> decompose_bridges(const std::vector<EdgePair>& graph_edges,
                                         const HostCycle& L);

// Maximum number of edges of a subtree of the bridge whose leaf set is
// exactly the attachment set, by exhaustive subset search.  Throws TooLarge
// when the bridge has more than cap edges, NoSpanningTreeWithLeaves when no
// subtree qualifies.
int lambda_oracle(const RawBridge& b, int cap);

// --- tree utilities shared by the construction ---

// Unique path between two vertices of a tree given by its edge list.
std::vector<VertexId> tree_path(const std::vector<EdgePair>& tree_edges, VertexId u,
                                VertexId v);

// Minimal subtree of a tree spanning the given terminals (at least 2).
std::vector<EdgePair> steiner_subtree(const std::vector<EdgePair>& tree_edges,
                                      const std::vector<VertexId>& terminals);

// Degree-1 vertices of an edge list.
std::vector<VertexId> leaf_vertices(const std::vector<EdgePair>& edges);

bool is_tree_edge_list(const std::vector<EdgePair>& edges);

}  // namespace cyclecover

#endif
