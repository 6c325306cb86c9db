#ifndef CYCLECOVER_GRAPH_CORE_HPP
#define CYCLECOVER_GRAPH_CORE_HPP

#include <compare>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "cyclecover/errors.hpp"

namespace cyclecover {

using VertexId = int;

// Undirected edge as a normalized (lo, hi) pair.  Plain simple-graph edges;
// parallel multigraph edges only ever occur inside AuxDigraph, which works on
// arcs directly and never goes through this type.
using EdgePair = std::pair<VertexId, VertexId>;

inline EdgePair make_edge(VertexId a, VertexId b) {
    return a < b ? EdgePair{a, b} : EdgePair{b, a};
}

// Directed arc.  `key` disambiguates parallel arcs (same tail and head); it is
// 0 everywhere except in AuxDigraph, where the construction can emit two arcs
// between the same ordered pair.
struct Arc {
    VertexId tail = 0;
    VertexId head = 0;
    int key = 0;

    friend auto operator<=>(const Arc&, const Arc&) = default;
};

enum class TypeTag { t00, t01, t10, t11 };

const char* to_string(TypeTag t);

// Set of undirected edges with symmetric-difference support.
class EdgeSet {
public:
    void insert(VertexId a, VertexId b) { edges_.insert(make_edge(a, b)); }
    bool contains(VertexId a, VertexId b) const { return edges_.count(make_edge(a, b)) > 0; }
    // Insert if absent, erase if present.
    void toggle(VertexId a, VertexId b) {
        EdgePair e = make_edge(a, b);
        auto it = edges_.find(e);
        if (it == edges_.end())
            edges_.insert(e);
        else
            edges_.erase(it);
    }
    std::size_t size() const { return edges_.size(); }
    bool empty() const { return edges_.empty(); }
    const std::set<EdgePair>& edges() const { return edges_; }

private:
    std::set<EdgePair> edges_;
};

enum class SegmentDir { forward, reverse };

// The distinguished cycle L.  The storage order of `order` is the clockwise
// order; successor/predecessor and all segment arithmetic follow it.
class HostCycle {
public:
    explicit HostCycle(std::vector<VertexId> order);

    int size() const { return static_cast<int>(order_.size()); }
    const std::vector<VertexId>& order() const { return order_; }
    bool contains(VertexId v) const { return pos_.count(v) > 0; }
    int position(VertexId v) const;  // throws VertexNotOnHost
    VertexId at(int pos) const;      // index taken cyclically

    VertexId successor(VertexId v) const;
    VertexId predecessor(VertexId v) const;

    // Vertices of the clockwise segment from u to v, inclusive.  u != v.
    std::vector<VertexId> segment_vertices(VertexId u, VertexId v) const;
    // Arcs of that segment: forward = directed u to v, reverse = directed v
    // back to u along the same underlying path.
    std::vector<Arc> segment(VertexId u, VertexId v, SegmentDir dir) const;
    // Number of edges on the clockwise segment from u to v.
    int segment_length(VertexId u, VertexId v) const;

    EdgeSet edges() const;
    bool has_edge(VertexId x, VertexId y) const;

private:
    std::vector<VertexId> order_;
    std::map<VertexId, int> pos_;
};

// A simple directed cycle as a chained arc sequence.  Length 2 is legal (a
// pair of antiparallel arcs); such dicycles arise inside AuxDigraph.  In a
// simple-graph instance every dicycle the construction emits has length >= 3.
class Dicycle {
public:
    static Dicycle from_arcs(std::vector<Arc> arcs);

    const std::vector<Arc>& arcs() const { return arcs_; }
    int length() const { return static_cast<int>(arcs_.size()); }
    bool contains_vertex(VertexId v) const;
    std::vector<VertexId> vertices() const;  // tails, in cycle order
    std::optional<Arc> in_arc_at(VertexId v) const;
    std::optional<Arc> out_arc_at(VertexId v) const;
    Dicycle reversed() const;
    EdgeSet edge_set() const;

    // Rotation-minimal arc sequence; identical for equal cyclic sequences.
    // Orientation is part of identity, and so are arc keys.
    std::vector<Arc> canonical_form() const;

    friend bool operator==(const Dicycle& lhs, const Dicycle& rhs) {
        return lhs.canonical_form() == rhs.canonical_form();
    }

private:
    Dicycle() = default;
    std::vector<Arc> arcs_;
};

std::string to_string(const Dicycle& c);

// E(L) triangle E(C) together with whether it forms exactly one simple cycle.
std::pair<EdgeSet, bool> symdiff_with_host(const HostCycle& L, const Dicycle& C);

// Symmetric difference of two dicycles whose common subgraph is a single path
// traversed in opposite directions; the result inherits the arc directions.
Dicycle dicycle_symdiff(const Dicycle& c1, const Dicycle& c2);

// Replace u -> mid -> v by u -> v.
Dicycle contract_path2(const Dicycle& c, VertexId mid);

// The type-ij classification of C at host vertex a.  `bridge_neighbors` are
// a's neighbors inside its bridge; for a chord bridge that neighbor lies on L
// itself, which is why the caller passes the set instead of this function
// filtering by host membership.
std::set<TypeTag> type_tags(const Dicycle& c, VertexId a, const HostCycle& L,
                            const std::set<VertexId>& bridge_neighbors);

}  // namespace cyclecover

#endif
