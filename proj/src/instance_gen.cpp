#include "cyclecover/instance_gen.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <utility>

#include "cyclecover/errors.hpp"

namespace cyclecover {

namespace {

constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ull;

std::uint64_t mix64(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xbf58476d1ce4e5b9ull;
    z ^= z >> 27;
    z *= 0x94d049bb133111ebull;
    z ^= z >> 31;
    return z;
}

}  // namespace

Rng::Rng(std::uint64_t seed) : seed_(seed), state_(seed) {}

std::uint64_t Rng::next() {
    state_ += kGolden;
    return mix64(state_);
}

int Rng::below(int n) {
    if (n <= 0) throw Error("Rng::below needs a positive bound");
    std::uint64_t un = static_cast<std::uint64_t>(n);
    std::uint64_t threshold = (0 - un) % un;
    for (;;) {
        std::uint64_t v = next();
        if (v >= threshold) return static_cast<int>(v % un);
    }
}

Rng Rng::split(std::uint64_t tag) const {
    return Rng(mix64(seed_ + kGolden * (tag + 1)));
}

namespace {

void shuffle_with(std::vector<VertexId>& v, Rng& rng) {
    for (int i = static_cast<int>(v.size()) - 1; i > 0; --i) {
        std::swap(v[static_cast<std::size_t>(i)],
                  v[static_cast<std::size_t>(rng.below(i + 1))]);
    }
}

// Random tree with the given attachment leaves and internal_count fresh
// interior vertices. Every interior vertex ends with degree at least two, so
// the tree's leaf set is exactly `atts`.
BridgeTree build_tree(const std::vector<VertexId>& atts, int internal_count,
                      VertexId& next_internal, Rng& rng) {
    BridgeTree tree;
    tree.attachments = atts;
    int n = static_cast<int>(atts.size());

    if (internal_count == 0) {
        tree.edges = {make_edge(atts[0], atts[1])};
        return tree;
    }
    if (internal_count == 1) {
        VertexId hub = next_internal++;
        for (VertexId a : atts) tree.edges.push_back(make_edge(hub, a));
        return tree;
    }

    std::vector<VertexId> internals(static_cast<std::size_t>(internal_count));
    for (int j = 0; j < internal_count; ++j) internals[static_cast<std::size_t>(j)] = next_internal++;

    // Pick an interior shape whose leaf count the attachments can cover; a
    // path always can, so it is the fallback.
    std::vector<std::pair<int, int>> skeleton;
    std::vector<int> ideg(static_cast<std::size_t>(internal_count), 0);
    for (int attempt = 0; attempt < 16; ++attempt) {
        skeleton.clear();
        std::fill(ideg.begin(), ideg.end(), 0);
        for (int j = 1; j < internal_count; ++j) {
            int parent = attempt < 15 ? rng.below(j) : j - 1;
            skeleton.push_back({parent, j});
            ++ideg[static_cast<std::size_t>(parent)];
            ++ideg[static_cast<std::size_t>(j)];
        }
        int interior_leaves = 0;
        for (int d : ideg) {
            if (d <= 1) ++interior_leaves;
        }
        if (interior_leaves <= n) break;
    }
    for (const auto& [p, j] : skeleton) {
        tree.edges.push_back(make_edge(internals[static_cast<std::size_t>(p)],
                                       internals[static_cast<std::size_t>(j)]));
    }

    std::vector<VertexId> pool = atts;
    shuffle_with(pool, rng);
    std::size_t pi = 0;
    for (int j = 0; j < internal_count; ++j) {
        if (ideg[static_cast<std::size_t>(j)] <= 1) {
            tree.edges.push_back(make_edge(internals[static_cast<std::size_t>(j)], pool[pi++]));
        }
    }
    for (; pi < pool.size(); ++pi) {
        tree.edges.push_back(
            make_edge(internals[static_cast<std::size_t>(rng.below(internal_count))], pool[pi]));
    }
    return tree;
}

}  // namespace

Instance gen_random(const GenParams& p) {
    if (p.host_len < 3 || p.bridge_count < 1 || p.max_leaves_per_bridge < 2 ||
        p.max_internal_per_bridge < 0) {
        throw GenerationFailed("generation parameters out of range");
    }
    if (p.host_len < 2 * p.bridge_count * p.max_leaves_per_bridge) {
        throw GenerationFailed(
            "host cycle too short for the requested attachment budget");
    }

    Rng root(p.seed);
    std::vector<VertexId> order(static_cast<std::size_t>(p.host_len));
    std::iota(order.begin(), order.end(), 0);
    Instance inst{HostCycle(order), {}};

    VertexId next_internal = p.host_len;
    std::set<std::pair<int, int>> intended;
    const int b = p.bridge_count;

    // Per-bridge shape draws come from independent substreams, so changes to
    // the layout plan below never disturb a bridge's own tree shape.
    std::vector<Rng> streams;
    std::vector<int> leaf_count(static_cast<std::size_t>(b));
    std::vector<int> interior_count(static_cast<std::size_t>(b));
    for (int t = 0; t < b; ++t) {
        streams.push_back(root.split(static_cast<std::uint64_t>(t)));
        int n = 2 + streams.back().below(p.max_leaves_per_bridge - 1);
        int m = streams.back().below(p.max_internal_per_bridge + 1);
        if (m == 0 && n > 2) m = 1;  // only two-attachment bridges may be chords
        leaf_count[static_cast<std::size_t>(t)] = n;
        interior_count[static_cast<std::size_t>(t)] = m;
    }

    // The overlap graph depends only on the cyclic order of the labeled
    // attachments, never on their spacing. So plan that order first: each
    // bridge nests its attachments concentrically around one pivot
    // attachment of its tree parent. The nest straddles the pivot and stays
    // inside a single gap of every other bridge, so the realized overlap
    // graph is exactly the planned tree and generation cannot dead-end.
    Rng plan = root.split(0x706c616eull);
    std::vector<int> take_left(static_cast<std::size_t>(b), 0);
    std::vector<std::vector<std::vector<int>>> pivot_kids(
        static_cast<std::size_t>(b));
    for (int i = 0; i < b; ++i) {
        pivot_kids[static_cast<std::size_t>(i)].assign(
            static_cast<std::size_t>(leaf_count[static_cast<std::size_t>(i)]), {});
    }
    for (int i = 1; i < b; ++i) {
        int par = plan.below(i);
        int piv = plan.below(leaf_count[static_cast<std::size_t>(par)]);
        take_left[static_cast<std::size_t>(i)] =
            1 + plan.below(leaf_count[static_cast<std::size_t>(i)] - 1);
        pivot_kids[static_cast<std::size_t>(par)][static_cast<std::size_t>(piv)]
            .push_back(i);
        intended.insert({par, i});
    }

    std::vector<int> seq;  // owner bridge of each attachment slot, in cyclic order
    auto emit_block = [&](auto&& self, int i, int j) -> void {
        const std::vector<int>& kids =
            pivot_kids[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        for (auto it = kids.rbegin(); it != kids.rend(); ++it) {
            for (int j2 = 0; j2 < take_left[static_cast<std::size_t>(*it)]; ++j2) {
                self(self, *it, j2);
            }
        }
        seq.push_back(i);
        for (int d : kids) {
            for (int j2 = take_left[static_cast<std::size_t>(d)];
                 j2 < leaf_count[static_cast<std::size_t>(d)]; ++j2) {
                self(self, d, j2);
            }
        }
    };
    for (int j = 0; j < leaf_count[0]; ++j) emit_block(emit_block, 0, j);

    // Spread the slots over the host with every cyclic gap at least two; the
    // parameter floor guarantees the room. No two attachments anywhere end
    // up host-adjacent, so a chord can never sit parallel to a host edge.
    const int slots = static_cast<int>(seq.size());
    int slack = p.host_len - 2 * slots;
    std::vector<int> gap(static_cast<std::size_t>(slots), 2);
    for (int r = 0; r < slack; ++r) {
        gap[static_cast<std::size_t>(plan.below(slots))]++;
    }
    int pos = plan.below(p.host_len);
    std::vector<std::vector<VertexId>> atts_of(static_cast<std::size_t>(b));
    for (int s = 0; s < slots; ++s) {
        atts_of[static_cast<std::size_t>(seq[static_cast<std::size_t>(s)])]
            .push_back(pos);
        pos = (pos + gap[static_cast<std::size_t>(s)]) % p.host_len;
    }

    for (int t = 0; t < b; ++t) {
        std::vector<VertexId>& atts = atts_of[static_cast<std::size_t>(t)];
        std::sort(atts.begin(), atts.end());
        inst.bridges.push_back(build_tree(atts,
                                          interior_count[static_cast<std::size_t>(t)],
                                          next_internal,
                                          streams[static_cast<std::size_t>(t)]));
    }

    try {
        validate_instance(inst, true);
    } catch (const PreconditionViolated& e) {
        throw GenerationFailed(std::string("constructed instance was rejected: ") +
                               e.what());
    }
    OverlapGraph og = overlap_graph(inst);
    std::set<std::pair<int, int>> got(og.edges.begin(), og.edges.end());
    if (got != intended) {
        throw GenerationFailed("placement produced unintended overlaps");
    }
    return inst;
}

Instance gen_extremal(int k) {
    if (k < 2) throw GenerationFailed("chord count must be at least 2");
    std::vector<VertexId> order(static_cast<std::size_t>(2 * k));
    std::iota(order.begin(), order.end(), 0);
    Instance inst{HostCycle(order), {}};
    inst.bridges.push_back(
        BridgeTree{{make_edge(0, k)}, {0, k}});
    for (int i = 2; i <= k; ++i) {
        VertexId a = i - 1;
        VertexId b = 2 * k + 1 - i;
        inst.bridges.push_back(BridgeTree{{make_edge(a, b)}, {a, b}});
    }
    validate_instance(inst, true);
    return inst;
}

Instance gen_k23() {
    Instance inst{HostCycle({0, 1, 2, 3}), {}};
    inst.bridges.push_back(BridgeTree{{make_edge(1, 4), make_edge(4, 3)}, {1, 3}});
    validate_instance(inst, true);
    return inst;
}

std::vector<NegativeCase> gen_negatives() {
    std::vector<NegativeCase> out;

    // Two path bridges whose attachments sit in each other's gaps: both are
    // valid trees but they do not overlap, so the overlap graph has two
    // components. Its lambda total 4 exceeds half the host length 3.
    Instance apart{HostCycle({0, 1, 2, 3, 4, 5}), {}};
    apart.bridges.push_back(BridgeTree{{make_edge(2, 6), make_edge(6, 4)}, {2, 4}});
    apart.bridges.push_back(BridgeTree{{make_edge(1, 7), make_edge(7, 5)}, {1, 5}});
    out.push_back(NegativeCase{"disconnected-overlap", apart, "overlap-not-tree",
                               "two bridges with mutually nested attachments; "
                               "lambda total 4 on a 6-cycle"});

    // A 9-cycle of the Petersen graph with three of its bridges: the claw to
    // the missed vertex and two chords. All three pairwise overlap, giving a
    // triangle. Lambda total 5 exceeds floor(9/2) even though the host is a
    // longest cycle.
    Instance pet{HostCycle({0, 1, 2, 3, 4, 5, 6, 7, 8}), {}};
    pet.bridges.push_back(BridgeTree{
        {make_edge(9, 0), make_edge(9, 3), make_edge(9, 6)}, {0, 3, 6}});
    pet.bridges.push_back(BridgeTree{{make_edge(1, 5)}, {1, 5}});
    pet.bridges.push_back(BridgeTree{{make_edge(2, 7)}, {2, 7}});
    out.push_back(NegativeCase{"petersen", pet, "overlap-not-tree",
                               "claw plus two chords of the Petersen graph "
                               "around a longest cycle; overlap triangle"});

    return out;
}

}  // namespace cyclecover
