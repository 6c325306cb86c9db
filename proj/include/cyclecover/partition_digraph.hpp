#ifndef CYCLECOVER_PARTITION_DIGRAPH_HPP
#define CYCLECOVER_PARTITION_DIGRAPH_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cyclecover/graph_core.hpp"

namespace cyclecover {

// An ordered composition (p_1, ..., p_k) of n into positive parts.
struct Partition {
    std::vector<int> parts;

    int k() const { return static_cast<int>(parts.size()); }
    int n() const;
    std::string to_string() const;  // comma separated
};

// Parses "4,3,3".  Throws InvalidPartition on junk, empty input, or a
// nonpositive part, and on total n = 1 (the digraph would need a self loop).
Partition parse_partition(const std::string& text);

// Every composition of n, in lexicographic part order.  2^(n-1) of them.
std::vector<Partition> all_partitions(int n);

// The 2-regular multidigraph built from a composition.  Vertices are laid out
// sequentially, part by part, so ids run 0..n-1.
//
// k = 1: a bidirected cycle v_0 -> v_1 -> ... -> v_{n-1} -> v_0 plus all
// reverse arcs (for n = 2 this doubles up into two parallel pairs).
// k >= 2: each part carries a bidirected path on its vertices, and
// consecutive parts (cyclically) are joined by a "first" ring arc between
// their first vertices and a "last" ring arc between their last vertices.
// When two ring arcs coincide as ordered pairs (both parts of size 1) they
// are kept as parallel arcs: the first ring gets key 0, the last key 1.
class AuxDigraph {
public:
    enum class ArcKind { within_fwd, within_bwd, ring_first, ring_last };

    struct ArcInfo {
        ArcKind kind;
        int part;  // the part the arc lives in, or the ring arc's source part
        int idx;   // within arcs: the lower of the two indices; rings: -1
    };

    explicit AuxDigraph(Partition eta);

    const Partition& eta() const { return eta_; }
    int vertex_count() const;
    const std::vector<Arc>& arcs() const { return arcs_; }

    VertexId vid(int part, int idx) const;
    std::pair<int, int> coords(VertexId v) const;  // (part, idx), 0-based
    std::string vertex_label(VertexId v) const;    // "v1_2", 1-based

    int indegree(VertexId v) const;
    int outdegree(VertexId v) const;
    bool has_arc(const Arc& a) const { return info_.count(a) > 0; }
    const ArcInfo& info(const Arc& a) const;

    // Specific named arcs, for building dicycles.
    Arc within_fwd(int part, int idx) const;  // vid(part,idx) -> vid(part,idx+1)
    Arc within_bwd(int part, int idx) const;  // vid(part,idx+1) -> vid(part,idx)
    Arc ring_first(int part) const;
    Arc ring_last(int part) const;

private:
    Partition eta_;
    std::vector<int> offset_;
    std::vector<Arc> arcs_;
    std::map<Arc, ArcInfo> info_;
    std::map<std::pair<ArcKind, std::pair<int, int>>, Arc> named_;

    void add_arc(VertexId tail, VertexId head, ArcKind kind, int part, int idx);
};

inline AuxDigraph build_aux(Partition eta) { return AuxDigraph(std::move(eta)); }

// The two dicycles through the given arc that meet only in that arc: the
// 2-dicycle through the reverse arc plus a long ring dicycle for within arcs,
// and a pair of ring dicycles for ring arcs.  The exact-intersection property
// is asserted before returning.
std::pair<Dicycle, Dicycle> two_dicycles(const AuxDigraph& d, const Arc& a);

// Minimum cut of the underlying undirected multigraph, by exhaustive subset
// enumeration.  Throws TooLarge above 16 vertices.
int min_undirected_cut(const AuxDigraph& d);

}  // namespace cyclecover

#endif
