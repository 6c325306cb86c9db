#include "cyclecover/graph_core.hpp"

#include <algorithm>
#include <sstream>

namespace cyclecover {

const char* to_string(TypeTag t) {
    switch (t) {
        case TypeTag::t00: return "00";
        case TypeTag::t01: return "01";
        case TypeTag::t10: return "10";
        case TypeTag::t11: return "11";
    }
    return "??";
}

HostCycle::HostCycle(std::vector<VertexId> order) : order_(std::move(order)) {
    if (order_.size() < 3)
        throw HostNotACycle("host cycle needs at least 3 vertices, got " +
                            std::to_string(order_.size()));
    for (int i = 0; i < static_cast<int>(order_.size()); ++i) {
        auto [it, fresh] = pos_.emplace(order_[i], i);
        (void)it;
        if (!fresh)
            throw HostNotACycle("host cycle repeats vertex " + std::to_string(order_[i]));
    }
}

int HostCycle::position(VertexId v) const {
    auto it = pos_.find(v);
    if (it == pos_.end())
        throw VertexNotOnHost("vertex " + std::to_string(v) + " is not on the host cycle");
    return it->second;
}

VertexId HostCycle::at(int pos) const {
    int n = size();
    int m = ((pos % n) + n) % n;
    return order_[m];
}

VertexId HostCycle::successor(VertexId v) const { return at(position(v) + 1); }

VertexId HostCycle::predecessor(VertexId v) const { return at(position(v) - 1); }

std::vector<VertexId> HostCycle::segment_vertices(VertexId u, VertexId v) const {
    if (u == v)
        throw DegenerateSegment("segment endpoints coincide at vertex " + std::to_string(u));
    std::vector<VertexId> out;
    int i = position(u), j = position(v);
    for (int p = i; ; p = (p + 1) % size()) {
        out.push_back(order_[p]);
        if (p == j) break;
    }
    return out;
}

std::vector<Arc> HostCycle::segment(VertexId u, VertexId v, SegmentDir dir) const {
    std::vector<VertexId> verts = segment_vertices(u, v);
    std::vector<Arc> arcs;
    arcs.reserve(verts.size() - 1);
    if (dir == SegmentDir::forward) {
        for (std::size_t p = 0; p + 1 < verts.size(); ++p)
            arcs.push_back({verts[p], verts[p + 1], 0});
    } else {
        for (std::size_t p = verts.size() - 1; p > 0; --p)
            arcs.push_back({verts[p], verts[p - 1], 0});
    }
    return arcs;
}

int HostCycle::segment_length(VertexId u, VertexId v) const {
    int i = position(u), j = position(v);
    return ((j - i) % size() + size()) % size();
}

EdgeSet HostCycle::edges() const {
    EdgeSet es;
    for (int i = 0; i < size(); ++i)
        es.insert(order_[i], order_[(i + 1) % size()]);
    return es;
}

bool HostCycle::has_edge(VertexId x, VertexId y) const {
    if (!contains(x) || !contains(y)) return false;
    int d = std::abs(position(x) - position(y));
    return d == 1 || d == size() - 1;
}

Dicycle Dicycle::from_arcs(std::vector<Arc> arcs) {
    if (arcs.size() < 2)
        throw Error("a dicycle needs at least 2 arcs, got " + std::to_string(arcs.size()));
    std::set<VertexId> seen;
    for (std::size_t i = 0; i < arcs.size(); ++i) {
        const Arc& a = arcs[i];
        if (a.tail == a.head)
            throw Error("loop arc at vertex " + std::to_string(a.tail));
        if (!seen.insert(a.tail).second)
            throw Error("dicycle revisits vertex " + std::to_string(a.tail));
        const Arc& next = arcs[(i + 1) % arcs.size()];
        if (a.head != next.tail)
            throw Error("arc chain breaks between (" + std::to_string(a.tail) + "," +
                        std::to_string(a.head) + ") and (" + std::to_string(next.tail) + "," +
                        std::to_string(next.head) + ")");
    }
    Dicycle c;
    c.arcs_ = std::move(arcs);
    return c;
}

bool Dicycle::contains_vertex(VertexId v) const {
    for (const Arc& a : arcs_)
        if (a.tail == v) return true;
    return false;
}

std::vector<VertexId> Dicycle::vertices() const {
    std::vector<VertexId> out;
    out.reserve(arcs_.size());
    for (const Arc& a : arcs_) out.push_back(a.tail);
    return out;
}

std::optional<Arc> Dicycle::in_arc_at(VertexId v) const {
    for (const Arc& a : arcs_)
        if (a.head == v) return a;
    return std::nullopt;
}

std::optional<Arc> Dicycle::out_arc_at(VertexId v) const {
    for (const Arc& a : arcs_)
        if (a.tail == v) return a;
    return std::nullopt;
}

Dicycle Dicycle::reversed() const {
    std::vector<Arc> rev;
    rev.reserve(arcs_.size());
    for (auto it = arcs_.rbegin(); it != arcs_.rend(); ++it)
        rev.push_back({it->head, it->tail, it->key});
    return from_arcs(std::move(rev));
}

EdgeSet Dicycle::edge_set() const {
    EdgeSet es;
    for (const Arc& a : arcs_) es.insert(a.tail, a.head);
    return es;
}

std::vector<Arc> Dicycle::canonical_form() const {
    std::size_t n = arcs_.size();
    std::size_t best = 0;
    for (std::size_t s = 1; s < n; ++s) {
        for (std::size_t i = 0; i < n; ++i) {
            const Arc& a = arcs_[(s + i) % n];
            const Arc& b = arcs_[(best + i) % n];
            if (a < b) { best = s; break; }
            if (b < a) break;
        }
    }
    std::vector<Arc> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(arcs_[(best + i) % n]);
    return out;
}

std::string to_string(const Dicycle& c) {
    std::ostringstream os;
    bool first = true;
    for (const Arc& a : c.arcs()) {
        if (first) { os << a.tail; first = false; }
        os << "->" << a.head;
        if (a.key != 0) os << "#" << a.key;
    }
    return os.str();
}

std::pair<EdgeSet, bool> symdiff_with_host(const HostCycle& L, const Dicycle& C) {
    EdgeSet sym = L.edges();
    for (const Arc& a : C.arcs()) sym.toggle(a.tail, a.head);

    if (sym.empty()) return {sym, false};

    // One simple cycle, checked as: every vertex has degree exactly 2 and the
    // edge set is connected.
    std::map<VertexId, std::vector<VertexId>> adj;
    for (const auto& [x, y] : sym.edges()) {
        adj[x].push_back(y);
        adj[y].push_back(x);
    }
    for (const auto& [v, nbrs] : adj)
        if (nbrs.size() != 2) return {sym, false};

    std::set<VertexId> visited;
    std::vector<VertexId> stack{adj.begin()->first};
    while (!stack.empty()) {
        VertexId v = stack.back();
        stack.pop_back();
        if (!visited.insert(v).second) continue;
        for (VertexId w : adj.at(v)) stack.push_back(w);
    }
    return {sym, visited.size() == adj.size()};
}

Dicycle dicycle_symdiff(const Dicycle& c1, const Dicycle& c2) {
    // Arcs of c2 keyed by undirected pair, to find the shared subgraph.
    std::map<EdgePair, Arc> in2;
    for (const Arc& a : c2.arcs()) in2.emplace(make_edge(a.tail, a.head), a);

    std::set<EdgePair> shared;
    for (const Arc& a : c1.arcs()) {
        auto it = in2.find(make_edge(a.tail, a.head));
        if (it == in2.end()) continue;
        shared.insert(it->first);
        // The shared part must be traversed in opposite directions, so that
        // dropping it leaves a consistently oriented cycle.
        if (it->second.tail == a.tail)
            throw OrientationConflict("shared arc " + std::to_string(a.tail) + "->" +
                                      std::to_string(a.head) +
                                      " runs the same way in both dicycles");
    }
    if (shared.empty())
        throw BadIntersection("dicycles share no edges");

    // The shared edges must form a single simple path.
    std::map<VertexId, int> deg;
    for (const auto& [x, y] : shared) {
        deg[x]++;
        deg[y]++;
    }
    int endpoints = 0;
    for (const auto& [v, d] : deg) {
        if (d == 1)
            endpoints++;
        else if (d != 2)
            throw BadIntersection("shared edges branch at vertex " + std::to_string(v));
    }
    if (endpoints != 2)
        throw BadIntersection("shared edges do not form one open path");
    // Connectivity: walk from one endpoint; a path with the right degree
    // profile but two components would have 4 endpoints, so degree counting
    // already rules that out, except for a path plus a cycle.  Rule that out
    // by walking.
    {
        VertexId start = -1;
        for (const auto& [v, d] : deg)
            if (d == 1) { start = v; break; }
        std::map<VertexId, std::vector<VertexId>> adj;
        for (const auto& [x, y] : shared) {
            adj[x].push_back(y);
            adj[y].push_back(x);
        }
        std::set<VertexId> visited;
        std::vector<VertexId> stack{start};
        while (!stack.empty()) {
            VertexId v = stack.back();
            stack.pop_back();
            if (!visited.insert(v).second) continue;
            for (VertexId w : adj.at(v)) stack.push_back(w);
        }
        if (visited.size() != deg.size())
            throw BadIntersection("shared edges are disconnected");
    }

    // Keep everything not shared, then re-chain.
    std::vector<Arc> keep;
    for (const Arc& a : c1.arcs())
        if (!shared.count(make_edge(a.tail, a.head))) keep.push_back(a);
    for (const Arc& a : c2.arcs())
        if (!shared.count(make_edge(a.tail, a.head))) keep.push_back(a);
    if (keep.empty())
        throw BadIntersection("symmetric difference is empty");

    std::map<VertexId, Arc> by_tail;
    for (const Arc& a : keep) {
        if (!by_tail.emplace(a.tail, a).second)
            throw BadIntersection("symmetric difference branches at vertex " +
                                  std::to_string(a.tail));
    }
    std::vector<Arc> chained;
    chained.reserve(keep.size());
    Arc cur = keep.front();
    for (std::size_t i = 0; i < keep.size(); ++i) {
        chained.push_back(cur);
        auto it = by_tail.find(cur.head);
        if (it == by_tail.end())
            throw BadIntersection("symmetric difference is not a closed walk at vertex " +
                                  std::to_string(cur.head));
        cur = it->second;
    }
    if (cur.tail != chained.front().tail)
        throw BadIntersection("symmetric difference does not close into one cycle");
    return Dicycle::from_arcs(std::move(chained));
}

Dicycle contract_path2(const Dicycle& c, VertexId mid) {
    auto in = c.in_arc_at(mid);
    auto out = c.out_arc_at(mid);
    if (!in || !out)
        throw VertexAbsent("vertex " + std::to_string(mid) + " is not on the dicycle");
    if (in->tail == out->head)
        throw WouldCreateLoop("contracting " + std::to_string(mid) +
                              " would leave a loop at vertex " + std::to_string(in->tail));
    std::vector<Arc> arcs;
    arcs.reserve(c.length() - 1);
    for (const Arc& a : c.arcs()) {
        if (a.head == mid) {
            arcs.push_back({a.tail, out->head, 0});
        } else if (a.tail == mid) {
            continue;
        } else {
            arcs.push_back(a);
        }
    }
    // If mid was the first tail the chain no longer starts where it closes;
    // re-chain from whatever arc is first now.
    std::map<VertexId, Arc> by_tail;
    for (const Arc& a : arcs) by_tail.emplace(a.tail, a);
    std::vector<Arc> chained;
    chained.reserve(arcs.size());
    Arc cur = arcs.front();
    for (std::size_t i = 0; i < arcs.size(); ++i) {
        chained.push_back(cur);
        cur = by_tail.at(cur.head);
    }
    return Dicycle::from_arcs(std::move(chained));
}

std::set<TypeTag> type_tags(const Dicycle& c, VertexId a, const HostCycle& L,
                            const std::set<VertexId>& bridge_neighbors) {
    std::set<TypeTag> tags;
    auto in = c.in_arc_at(a);
    auto out = c.out_arc_at(a);
    if (!in || !out) return tags;

    VertexId succ = L.successor(a);
    VertexId pred = L.predecessor(a);

    // Four patterns around a; b ranges over a's neighbors inside the bridge.
    //   00: b->a and a->succ     01: a->b and succ->a
    //   10: b->a and a->pred     11: a->b and pred->a
    // First index 0 means the successor edge of a is used, 1 the predecessor
    // edge; second index 0 means the bridge edge enters a, 1 means it leaves.
    bool in_from_bridge = bridge_neighbors.count(in->tail) > 0;
    bool out_to_bridge = bridge_neighbors.count(out->head) > 0;

    if (in_from_bridge && out->head == succ) tags.insert(TypeTag::t00);
    if (out_to_bridge && in->tail == succ) tags.insert(TypeTag::t01);
    if (in_from_bridge && out->head == pred) tags.insert(TypeTag::t10);
    if (out_to_bridge && in->tail == pred) tags.insert(TypeTag::t11);
    return tags;
}

}  // namespace cyclecover
