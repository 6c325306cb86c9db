#include "cyclecover/bridges.hpp"

#include <algorithm>
#include <map>

namespace cyclecover {

namespace {

std::map<VertexId, std::vector<VertexId>> adjacency(const std::vector<EdgePair>& edges) {
    std::map<VertexId, std::vector<VertexId>> adj;
    for (const auto& [a, b] : edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    return adj;
}

std::set<VertexId> reachable_from(const std::map<VertexId, std::vector<VertexId>>& adj,
                                  VertexId start) {
    std::set<VertexId> seen;
    std::vector<VertexId> stack{start};
    while (!stack.empty()) {
        VertexId v = stack.back();
        stack.pop_back();
        if (!seen.insert(v).second) continue;
        auto it = adj.find(v);
        if (it == adj.end()) continue;
        for (VertexId w : it->second) stack.push_back(w);
    }
    return seen;
}

}  // namespace

std::set<VertexId> BridgeTree::vertex_set() const {
    std::set<VertexId> vs;
    for (const auto& [a, b] : edges) {
        vs.insert(a);
        vs.insert(b);
    }
    return vs;
}

std::set<VertexId> BridgeTree::attachment_set() const {
    return {attachments.begin(), attachments.end()};
}

std::set<VertexId> BridgeTree::internal_vertices() const {
    std::set<VertexId> vs = vertex_set();
    for (VertexId a : attachments) vs.erase(a);
    return vs;
}

std::vector<VertexId> BridgeTree::neighbors(VertexId v) const {
    std::vector<VertexId> out;
    for (const auto& [a, b] : edges) {
        if (a == v) out.push_back(b);
        if (b == v) out.push_back(a);
    }
    return out;
}

int BridgeTree::degree(VertexId v) const { return static_cast<int>(neighbors(v).size()); }

VertexId BridgeTree::attachment_neighbor(VertexId a) const {
    std::vector<VertexId> nbrs = neighbors(a);
    if (nbrs.size() != 1)
        throw Error("attachment " + std::to_string(a) + " has " +
                    std::to_string(nbrs.size()) + " tree neighbors, expected 1");
    return nbrs[0];
}

bool BridgeTree::contains_vertex(VertexId v) const {
    for (const auto& [a, b] : edges)
        if (a == v || b == v) return true;
    return false;
}

bool is_tree_edge_list(const std::vector<EdgePair>& edges) {
    if (edges.empty()) return false;
    std::set<EdgePair> uniq;
    for (const auto& [a, b] : edges) {
        if (a == b) return false;
        if (!uniq.insert(make_edge(a, b)).second) return false;
    }
    auto adj = adjacency(edges);
    std::size_t n = adj.size();
    if (edges.size() != n - 1) return false;
    return reachable_from(adj, adj.begin()->first).size() == n;
}

std::vector<VertexId> leaf_vertices(const std::vector<EdgePair>& edges) {
    std::map<VertexId, int> deg;
    for (const auto& [a, b] : edges) {
        deg[a]++;
        deg[b]++;
    }
    std::vector<VertexId> out;
    for (const auto& [v, d] : deg)
        if (d == 1) out.push_back(v);
    return out;
}

void validate_instance(const Instance& inst, bool require_overlap_tree) {
    const HostCycle& L = inst.host;
    std::set<VertexId> claimed;  // vertices used by earlier bridges

    for (std::size_t i = 0; i < inst.bridges.size(); ++i) {
        const BridgeTree& b = inst.bridges[i];
        std::string where = "bridge " + std::to_string(i);

        if (!is_tree_edge_list(b.edges))
            throw PreconditionViolated("bridge-not-tree", where + " is not a tree");

        std::set<VertexId> atts = b.attachment_set();
        if (atts.size() < 2)
            throw PreconditionViolated("too-few-attachments",
                                       where + " has fewer than 2 attachments");

        std::vector<VertexId> lv = leaf_vertices(b.edges);
        std::set<VertexId> leaf_set(lv.begin(), lv.end());
        if (leaf_set != atts)
            throw PreconditionViolated("attachments-not-leaves",
                                       where + ": leaf set differs from attachment set");

        for (VertexId a : atts)
            if (!L.contains(a))
                throw PreconditionViolated("attachment-not-on-host",
                                           where + ": attachment " + std::to_string(a) +
                                               " is not on the host cycle");
        for (VertexId v : b.internal_vertices())
            if (L.contains(v))
                throw PreconditionViolated("internal-on-host",
                                           where + ": internal vertex " + std::to_string(v) +
                                               " lies on the host cycle");

        for (const auto& [x, y] : b.edges)
            if (L.has_edge(x, y))
                throw PreconditionViolated("bridge-edge-parallel-to-host",
                                           where + ": edge duplicates host edge " +
                                               std::to_string(x) + "-" + std::to_string(y));

        for (VertexId v : b.vertex_set()) {
            if (claimed.count(v))
                throw PreconditionViolated("bridges-not-disjoint",
                                           "vertex " + std::to_string(v) +
                                               " appears in two bridges");
        }
        for (VertexId v : b.vertex_set()) claimed.insert(v);
    }

    if (require_overlap_tree && !inst.bridges.empty()) {
        if (!overlap_graph(inst).is_tree())
            throw PreconditionViolated("overlap-not-tree",
                                       "the bridges' overlap graph is not a tree");
    }
}

std::vector<VertexId> attachments_by_host(const Instance& inst, int bridge_idx) {
    std::vector<VertexId> atts = inst.bridges.at(bridge_idx).attachments;
    std::sort(atts.begin(), atts.end(), [&](VertexId a, VertexId b) {
        return inst.host.position(a) < inst.host.position(b);
    });
    return atts;
}

bool overlaps(const BridgeTree& b1, const BridgeTree& b2, const HostCycle& L) {
    std::set<VertexId> s1 = b1.vertex_set(), s2 = b2.vertex_set();
    for (VertexId v : s1)
        if (s2.count(v))
            throw PreconditionViolated("bridges-not-disjoint",
                                       "overlap test on bridges sharing vertex " +
                                           std::to_string(v));

    std::vector<VertexId> a1(b1.attachments), a2(b2.attachments);
    auto by_pos = [&](VertexId x, VertexId y) { return L.position(x) < L.position(y); };
    std::sort(a1.begin(), a1.end(), by_pos);
    std::sort(a2.begin(), a2.end(), by_pos);
    if (a1.size() < 2 || a2.size() < 2) return false;

    // Non-overlap means all of a2 fits strictly inside one gap between
    // cyclically consecutive members of a1.
    for (std::size_t i = 0; i < a1.size(); ++i) {
        VertexId lo = a1[i];
        VertexId hi = a1[(i + 1) % a1.size()];
        int d_hi = L.segment_length(lo, hi);
        bool all_inside = true;
        for (VertexId x : a2) {
            int d_x = L.segment_length(lo, x);
            if (d_x == 0 || d_x >= d_hi) {
                all_inside = false;
                break;
            }
        }
        if (all_inside) return false;
    }
    return true;
}

OverlapGraph overlap_graph(const Instance& inst) {
    OverlapGraph g;
    g.n = static_cast<int>(inst.bridges.size());
    for (int i = 0; i < g.n; ++i)
        for (int j = i + 1; j < g.n; ++j)
            if (overlaps(inst.bridges[i], inst.bridges[j], inst.host))
                g.edges.push_back({i, j});
    return g;
}

bool OverlapGraph::is_tree() const {
    if (n == 0) return false;
    if (static_cast<int>(edges.size()) != n - 1) return false;
    std::map<int, std::vector<int>> adj;
    for (int i = 0; i < n; ++i) adj[i];
    for (const auto& [a, b] : edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    std::set<int> seen;
    std::vector<int> stack{0};
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        if (!seen.insert(v).second) continue;
        for (int w : adj[v]) stack.push_back(w);
    }
    return static_cast<int>(seen.size()) == n;
}

std::vector<int> OverlapGraph::neighbors(int i) const {
    std::vector<int> out;
    for (const auto& [a, b] : edges) {
        if (a == i) out.push_back(b);
        if (b == i) out.push_back(a);
    }
    std::sort(out.begin(), out.end());
    return out;
}

int OverlapGraph::degree(int i) const { return static_cast<int>(neighbors(i).size()); }

std::vector<int> OverlapGraph::leaves() const {
    std::vector<int> out;
    for (int i = 0; i < n; ++i)
        if (degree(i) == 1) out.push_back(i);
    return out;
}

std::vector<RawBridge> decompose_bridges(const std::vector<EdgePair>& graph_edges,
                                         const HostCycle& L) {
    std::set<EdgePair> all;
    for (const auto& [a, b] : graph_edges) all.insert(make_edge(a, b));
    const EdgeSet host_edges = L.edges();
    for (const auto& e : host_edges.edges())
        if (!all.count(e))
            throw HostNotACycle("host edge " + std::to_string(e.first) + "-" +
                                std::to_string(e.second) + " missing from the graph");

    std::vector<RawBridge> out;

    // Chords: non-host edges with both endpoints on the host.
    for (const auto& [a, b] : all) {
        if (L.contains(a) && L.contains(b) && !L.has_edge(a, b)) {
            RawBridge rb;
            rb.edges.push_back(make_edge(a, b));
            rb.attachments = {a, b};
            out.push_back(std::move(rb));
        }
    }

    // Components of the graph minus the host vertex set.
    std::map<VertexId, std::vector<VertexId>> off_adj;
    std::set<VertexId> off;
    for (const auto& [a, b] : all) {
        if (!L.contains(a)) off.insert(a);
        if (!L.contains(b)) off.insert(b);
        if (!L.contains(a) && !L.contains(b)) {
            off_adj[a].push_back(b);
            off_adj[b].push_back(a);
        }
    }
    std::set<VertexId> assigned;
    for (VertexId start : off) {
        if (assigned.count(start)) continue;
        std::set<VertexId> comp = reachable_from(off_adj, start);
        for (VertexId v : comp) assigned.insert(v);

        RawBridge rb;
        std::set<VertexId> att_set;
        for (const auto& [a, b] : all) {
            bool a_in = comp.count(a) > 0, b_in = comp.count(b) > 0;
            if (a_in && b_in) {
                rb.edges.push_back(make_edge(a, b));
            } else if (a_in || b_in) {
                rb.edges.push_back(make_edge(a, b));
                att_set.insert(a_in ? b : a);
            }
        }
        rb.attachments.assign(att_set.begin(), att_set.end());
        out.push_back(std::move(rb));
    }

    // Deterministic order: by host position of the first attachment, breaking
    // ties by the full attachment position sequence.
    auto pos_seq = [&](const RawBridge& rb) {
        std::vector<int> ps;
        for (VertexId a : rb.attachments) ps.push_back(L.position(a));
        std::sort(ps.begin(), ps.end());
        return ps;
    };
    std::stable_sort(out.begin(), out.end(), [&](const RawBridge& x, const RawBridge& y) {
        return pos_seq(x) < pos_seq(y);
    });
    for (RawBridge& rb : out) {
        std::sort(rb.attachments.begin(), rb.attachments.end(),
                  [&](VertexId a, VertexId b) { return L.position(a) < L.position(b); });
        std::sort(rb.edges.begin(), rb.edges.end());
    }
    return out;
}

int lambda_oracle(const RawBridge& b, int cap) {
    int m = static_cast<int>(b.edges.size());
    if (m > cap)
        throw TooLarge("bridge has " + std::to_string(m) + " edges, oracle cap is " +
                       std::to_string(cap));
    std::set<VertexId> want(b.attachments.begin(), b.attachments.end());

    int best = -1;
    for (unsigned mask = 1; mask < (1u << m); ++mask) {
        std::vector<EdgePair> sub;
        for (int i = 0; i < m; ++i)
            if (mask & (1u << i)) sub.push_back(b.edges[i]);
        if (static_cast<int>(sub.size()) <= best) continue;
        if (!is_tree_edge_list(sub)) continue;
        std::vector<VertexId> lv = leaf_vertices(sub);
        if (std::set<VertexId>(lv.begin(), lv.end()) != want) continue;
        best = static_cast<int>(sub.size());
    }
    if (best < 0)
        throw NoSpanningTreeWithLeaves(
            "no subtree of the bridge has the attachment set as its leaf set");
    return best;
}

std::vector<VertexId> tree_path(const std::vector<EdgePair>& tree_edges, VertexId u,
                                VertexId v) {
    auto adj = adjacency(tree_edges);
    if (!adj.count(u))
        throw VertexAbsent("vertex " + std::to_string(u) + " is not in the tree");
    if (!adj.count(v))
        throw VertexAbsent("vertex " + std::to_string(v) + " is not in the tree");
    if (u == v) return {u};

    std::map<VertexId, VertexId> parent;
    std::vector<VertexId> stack{u};
    parent[u] = u;
    while (!stack.empty()) {
        VertexId x = stack.back();
        stack.pop_back();
        if (x == v) break;
        for (VertexId y : adj[x]) {
            if (!parent.count(y)) {
                parent[y] = x;
                stack.push_back(y);
            }
        }
    }
    if (!parent.count(v))
        throw VertexAbsent("vertices " + std::to_string(u) + " and " + std::to_string(v) +
                           " are in different components");
    std::vector<VertexId> path;
    for (VertexId x = v; x != u; x = parent[x]) path.push_back(x);
    path.push_back(u);
    std::reverse(path.begin(), path.end());
    return path;
}

std::vector<EdgePair> steiner_subtree(const std::vector<EdgePair>& tree_edges,
                                      const std::vector<VertexId>& terminals) {
    if (terminals.size() < 2)
        throw Error("steiner_subtree needs at least 2 terminals, got " +
                    std::to_string(terminals.size()));
    std::set<EdgePair> keep;
    for (std::size_t i = 1; i < terminals.size(); ++i) {
        std::vector<VertexId> p = tree_path(tree_edges, terminals[0], terminals[i]);
        for (std::size_t j = 0; j + 1 < p.size(); ++j) keep.insert(make_edge(p[j], p[j + 1]));
    }
    return {keep.begin(), keep.end()};
}

}  // namespace cyclecover
