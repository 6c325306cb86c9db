#include "cyclecover/partition_digraph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace cyclecover {

int Partition::n() const { return std::accumulate(parts.begin(), parts.end(), 0); }

std::string Partition::to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) os << ",";
        os << parts[i];
    }
    return os.str();
}

Partition parse_partition(const std::string& text) {
    Partition p;
    std::istringstream is(text);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(tok, &used);
        } catch (const std::exception&) {
            throw InvalidPartition("cannot parse part '" + tok + "'");
        }
        if (used != tok.size())
            throw InvalidPartition("trailing junk in part '" + tok + "'");
        if (v < 1) throw InvalidPartition("parts must be positive, got " + tok);
        p.parts.push_back(v);
    }
    if (p.parts.empty()) throw InvalidPartition("empty partition");
    if (p.n() < 2)
        throw InvalidPartition("total must be at least 2; n = 1 would need a self loop");
    return p;
}

std::vector<Partition> all_partitions(int n) {
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int rest) -> void {
        if (rest == 0) {
            out.push_back(Partition{cur});
            return;
        }
        for (int first = 1; first <= rest; ++first) {
            cur.push_back(first);
            self(self, rest - first);
            cur.pop_back();
        }
    };
    rec(rec, n);
    return out;
}

void AuxDigraph::add_arc(VertexId tail, VertexId head, ArcKind kind, int part, int idx) {
    Arc a{tail, head, 0};
    while (info_.count(a)) a.key++;
    arcs_.push_back(a);
    info_.emplace(a, ArcInfo{kind, part, idx});
    named_.emplace(std::make_pair(kind, std::make_pair(part, idx)), a);
}

AuxDigraph::AuxDigraph(Partition eta) : eta_(std::move(eta)) {
    if (eta_.parts.empty()) throw InvalidPartition("empty partition");
    for (int p : eta_.parts)
        if (p < 1) throw InvalidPartition("parts must be positive");
    int n = eta_.n();
    if (n < 2)
        throw InvalidPartition("total must be at least 2; n = 1 would need a self loop");

    offset_.resize(eta_.k());
    int acc = 0;
    for (int i = 0; i < eta_.k(); ++i) {
        offset_[i] = acc;
        acc += eta_.parts[i];
    }

    if (eta_.k() == 1) {
        // Bidirected cycle; for each position the forward arc then its
        // reverse, so parallel duplicates (n = 2) key up deterministically.
        for (int i = 0; i < n; ++i) {
            int j = (i + 1) % n;
            add_arc(i, j, ArcKind::within_fwd, 0, i);
            add_arc(j, i, ArcKind::within_bwd, 0, i);
        }
        return;
    }

    for (int i = 0; i < eta_.k(); ++i) {
        for (int j = 0; j + 1 < eta_.parts[i]; ++j) {
            add_arc(vid(i, j), vid(i, j + 1), ArcKind::within_fwd, i, j);
            add_arc(vid(i, j + 1), vid(i, j), ArcKind::within_bwd, i, j);
        }
    }
    for (int i = 0; i < eta_.k(); ++i) {
        int next = (i + 1) % eta_.k();
        add_arc(vid(i, 0), vid(next, 0), ArcKind::ring_first, i, -1);
        add_arc(vid(i, eta_.parts[i] - 1), vid(next, eta_.parts[next] - 1),
                ArcKind::ring_last, i, -1);
    }
}

int AuxDigraph::vertex_count() const { return eta_.n(); }

VertexId AuxDigraph::vid(int part, int idx) const {
    if (part < 0 || part >= eta_.k() || idx < 0 || idx >= eta_.parts[part])
        throw Error("no vertex at part " + std::to_string(part) + ", index " +
                    std::to_string(idx));
    return offset_[part] + idx;
}

std::pair<int, int> AuxDigraph::coords(VertexId v) const {
    if (v < 0 || v >= vertex_count())
        throw VertexAbsent("vertex " + std::to_string(v) + " is out of range");
    int part = static_cast<int>(std::upper_bound(offset_.begin(), offset_.end(), v) -
                                offset_.begin()) - 1;
    return {part, v - offset_[part]};
}

std::string AuxDigraph::vertex_label(VertexId v) const {
    auto [p, i] = coords(v);
    return "v" + std::to_string(p + 1) + "_" + std::to_string(i + 1);
}

int AuxDigraph::indegree(VertexId v) const {
    int d = 0;
    for (const Arc& a : arcs_)
        if (a.head == v) d++;
    return d;
}

int AuxDigraph::outdegree(VertexId v) const {
    int d = 0;
    for (const Arc& a : arcs_)
        if (a.tail == v) d++;
    return d;
}

const AuxDigraph::ArcInfo& AuxDigraph::info(const Arc& a) const {
    auto it = info_.find(a);
    if (it == info_.end())
        throw Error("arc " + std::to_string(a.tail) + "->" + std::to_string(a.head) + "#" +
                    std::to_string(a.key) + " is not in the digraph");
    return it->second;
}

Arc AuxDigraph::within_fwd(int part, int idx) const {
    return named_.at({ArcKind::within_fwd, {part, idx}});
}

Arc AuxDigraph::within_bwd(int part, int idx) const {
    return named_.at({ArcKind::within_bwd, {part, idx}});
}

Arc AuxDigraph::ring_first(int part) const {
    return named_.at({ArcKind::ring_first, {part, -1}});
}

Arc AuxDigraph::ring_last(int part) const {
    return named_.at({ArcKind::ring_last, {part, -1}});
}

namespace {

using ArcKind = AuxDigraph::ArcKind;

// Intersection of two dicycles as arc multisets must be exactly {a}.
void assert_meet_only_in(const Dicycle& c1, const Dicycle& c2, const Arc& a) {
    std::set<Arc> s1(c1.arcs().begin(), c1.arcs().end());
    std::set<Arc> s2(c2.arcs().begin(), c2.arcs().end());
    std::vector<Arc> both;
    std::set_intersection(s1.begin(), s1.end(), s2.begin(), s2.end(),
                          std::back_inserter(both));
    if (both.size() != 1 || both[0] != a)
        throw Error("dicycle pair through arc " + std::to_string(a.tail) + "->" +
                    std::to_string(a.head) + "#" + std::to_string(a.key) +
                    " does not meet in exactly that arc");
}

}  // namespace

std::pair<Dicycle, Dicycle> two_dicycles(const AuxDigraph& d, const Arc& a) {
    const auto& fo = d.info(a);
    const int k = d.eta().k();
    const auto& parts = d.eta().parts;
    std::vector<Arc> shortc, longc;

    if (k == 1) {
        const int n = d.eta().n();
        const int i = fo.idx;
        if (fo.kind == ArcKind::within_fwd) {
            shortc = {a, d.within_bwd(0, i)};
            for (int t = 0; t < n; ++t) longc.push_back(d.within_fwd(0, (i + t) % n));
        } else {
            shortc = {d.within_fwd(0, i), a};
            // All-backward ring starting at a: positions i, i-1, ..., i-n+1.
            for (int t = 0; t < n; ++t)
                longc.push_back(d.within_bwd(0, ((i - t) % n + n) % n));
        }
        Dicycle cs = Dicycle::from_arcs(shortc), cl = Dicycle::from_arcs(longc);
        assert_meet_only_in(cs, cl, a);
        return {cs, cl};
    }

    auto ascend = [&](std::vector<Arc>& out, int part, int from, int to) {
        for (int j = from; j < to; ++j) out.push_back(d.within_fwd(part, j));
    };
    auto descend = [&](std::vector<Arc>& out, int part, int from, int to) {
        for (int j = from; j > to; --j) out.push_back(d.within_bwd(part, j - 1));
    };
    auto ring_firsts_from = [&](std::vector<Arc>& out, int start, int count) {
        for (int t = 0; t < count; ++t) out.push_back(d.ring_first((start + t) % k));
    };
    auto ring_lasts_from = [&](std::vector<Arc>& out, int start, int count) {
        for (int t = 0; t < count; ++t) out.push_back(d.ring_last((start + t) % k));
    };

    const int i = fo.part;
    const int next = (i + 1) % k;

    switch (fo.kind) {
        case ArcKind::within_fwd: {
            shortc = {a, d.within_bwd(i, fo.idx)};
            // a, up to the top of part i, over the last ring, down part i+1,
            // around on first rings, and back up to the arc's tail.
            longc.push_back(a);
            ascend(longc, i, fo.idx + 1, parts[i] - 1);
            longc.push_back(d.ring_last(i));
            descend(longc, next, parts[next] - 1, 0);
            ring_firsts_from(longc, next, k - 1);
            ascend(longc, i, 0, fo.idx);
            break;
        }
        case ArcKind::within_bwd: {
            shortc = {d.within_fwd(i, fo.idx), a};
            // Mirror image: down part i, over the first ring, up part i+1,
            // around on last rings, and back down to the arc's tail.
            longc.push_back(a);
            descend(longc, i, fo.idx, 0);
            longc.push_back(d.ring_first(i));
            ascend(longc, next, 0, parts[next] - 1);
            ring_lasts_from(longc, next, k - 1);
            descend(longc, i, parts[i] - 1, fo.idx + 1);
            break;
        }
        case ArcKind::ring_first: {
            ring_firsts_from(shortc, i, k);
            longc.push_back(a);
            ascend(longc, next, 0, parts[next] - 1);
            ring_lasts_from(longc, next, k - 1);
            descend(longc, i, parts[i] - 1, 0);
            break;
        }
        case ArcKind::ring_last: {
            ring_lasts_from(shortc, i, k);
            longc.push_back(a);
            descend(longc, next, parts[next] - 1, 0);
            ring_firsts_from(longc, next, k - 1);
            ascend(longc, i, 0, parts[i] - 1);
            break;
        }
    }

    Dicycle cs = Dicycle::from_arcs(shortc), cl = Dicycle::from_arcs(longc);
    assert_meet_only_in(cs, cl, a);
    return {cs, cl};
}

int min_undirected_cut(const AuxDigraph& d) {
    int n = d.vertex_count();
    if (n < 2) throw Error("cut needs at least 2 vertices");
    if (n > 16)
        throw TooLarge("exhaustive cut enumeration is capped at 16 vertices, got " +
                       std::to_string(n));
    const auto& arcs = d.arcs();
    int best = static_cast<int>(arcs.size()) + 1;
    // Vertex n-1 stays on the far side (its mask bit is always clear),
    // halving the enumeration.
    for (unsigned mask = 1; mask < (1u << (n - 1)); ++mask) {
        int cut = 0;
        for (const Arc& a : arcs) {
            bool t = (mask >> a.tail) & 1u;
            bool h = (mask >> a.head) & 1u;
            if (t != h) cut++;
        }
        best = std::min(best, cut);
    }
    return best;
}

}  // namespace cyclecover
