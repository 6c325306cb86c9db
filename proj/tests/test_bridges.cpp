#include <doctest.h>

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "cyclecover/bridges.hpp"

using namespace cyclecover;

namespace {

BridgeTree chord(VertexId a, VertexId b) {
    return BridgeTree{{make_edge(a, b)}, {a, b}};
}

BridgeTree path3(VertexId a, VertexId mid, VertexId b) {
    return BridgeTree{{make_edge(a, mid), make_edge(mid, b)}, {a, b}};
}

BridgeTree star(VertexId hub, std::vector<VertexId> atts) {
    BridgeTree b;
    for (VertexId a : atts) b.edges.push_back(make_edge(hub, a));
    b.attachments = std::move(atts);
    return b;
}

std::string reason_of(const Instance& inst) {
    try {
        validate_instance(inst, true);
    } catch (const PreconditionViolated& e) {
        return e.reason;
    }
    return "";
}

// The definition the gap test is standing in for: the bridges do not overlap
// exactly when the host splits into two arcs, one holding each attachment set.
bool overlaps_by_definition(const BridgeTree& b1, const BridgeTree& b2,
                            const HostCycle& L) {
    auto contains_all = [&](VertexId from, VertexId to,
                            const std::vector<VertexId>& atts) {
        std::vector<VertexId> seg = L.segment_vertices(from, to);
        for (VertexId a : atts) {
            if (std::find(seg.begin(), seg.end(), a) == seg.end()) return false;
        }
        return true;
    };
    int n = L.size();
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            VertexId p = L.at(i), q = L.at(j);
            if (contains_all(p, q, b1.attachments) &&
                contains_all(q, p, b2.attachments)) {
                return false;
            }
        }
    }
    return true;
}

}  // namespace

TEST_CASE("bridge tree accessors") {
    BridgeTree b = path3(1, 4, 3);
    CHECK(b.vertex_set() == std::set<VertexId>{1, 3, 4});
    CHECK(b.attachment_set() == std::set<VertexId>{1, 3});
    CHECK(b.internal_vertices() == std::set<VertexId>{4});
    CHECK(b.degree(4) == 2);
    CHECK(b.attachment_neighbor(1) == 4);
    CHECK(!b.is_chord());
    CHECK(chord(0, 2).is_chord());
    CHECK(b.contains_vertex(4));
    CHECK(!b.contains_vertex(2));
}

TEST_CASE("instance validation reason tokens") {
    HostCycle L6({0, 1, 2, 3, 4, 5});

    Instance good{L6, {path3(0, 10, 2)}};
    CHECK_NOTHROW(validate_instance(good, true));

    // Cycle inside the bridge.
    BridgeTree cyclic;
    cyclic.edges = {make_edge(0, 10), make_edge(10, 2), make_edge(2, 11),
                    make_edge(11, 0)};
    cyclic.attachments = {0, 2};
    CHECK(reason_of({L6, {cyclic}}) == "bridge-not-tree");

    BridgeTree lonely = chord(0, 2);
    lonely.attachments = {0};
    CHECK(reason_of({L6, {lonely}}) == "too-few-attachments");

    // Declared attachments differ from the leaf set.
    BridgeTree wrong = path3(0, 10, 2);
    wrong.attachments = {0, 10};
    CHECK(reason_of({L6, {wrong}}) == "attachments-not-leaves");

    CHECK(reason_of({L6, {path3(0, 10, 9)}}) == "attachment-not-on-host");
    CHECK(reason_of({L6, {path3(0, 4, 2)}}) == "internal-on-host");
    CHECK(reason_of({L6, {chord(0, 1)}}) == "bridge-edge-parallel-to-host");
    CHECK(reason_of({L6, {chord(0, 2), chord(2, 4)}}) == "bridges-not-disjoint");
    // Two bridges that cannot see each other: overlap graph disconnected.
    CHECK(reason_of({L6, {chord(0, 2), chord(3, 5)}}) == "overlap-not-tree");
    // The same instance is fine when the overlap shape is not required.
    CHECK_NOTHROW(
        validate_instance({L6, {chord(0, 2), chord(3, 5)}}, false));
}

TEST_CASE("attachments come back in host order") {
    HostCycle L({7, 3, 9, 1, 5});
    BridgeTree b = star(20, {1, 7, 9});
    Instance inst{L, {b}};
    CHECK(attachments_by_host(inst, 0) == std::vector<VertexId>{7, 9, 1});
}

TEST_CASE("overlap test matches the split definition exhaustively") {
    // Every pair of vertex-disjoint chords of a 7-cycle.
    HostCycle L({0, 1, 2, 3, 4, 5, 6});
    int checked = 0;
    for (VertexId a = 0; a < 7; ++a) {
        for (VertexId b = a + 1; b < 7; ++b) {
            if (L.has_edge(a, b)) continue;
            for (VertexId c = 0; c < 7; ++c) {
                for (VertexId d = c + 1; d < 7; ++d) {
                    if (L.has_edge(c, d)) continue;
                    if (c == a || c == b || d == a || d == b) continue;
                    BridgeTree b1 = chord(a, b), b2 = chord(c, d);
                    CHECK(overlaps(b1, b2, L) ==
                          overlaps_by_definition(b1, b2, L));
                    ++checked;
                }
            }
        }
    }
    CHECK(checked > 50);
}

TEST_CASE("overlap spot checks with tree bridges") {
    HostCycle L12({0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11});
    BridgeTree claw = star(20, {0, 4, 8});
    CHECK(overlaps(claw, chord(2, 6), L12));
    CHECK(overlaps_by_definition(claw, chord(2, 6), L12));
    // A chord tucked inside one gap of the claw.
    CHECK(!overlaps(claw, chord(1, 3), L12));
    CHECK(!overlaps_by_definition(claw, chord(1, 3), L12));
    // Spanning a full gap interior still counts as inside.
    CHECK(!overlaps(claw, chord(9, 11), L12));
    CHECK(!overlaps_by_definition(claw, chord(9, 11), L12));

    CHECK_THROWS_AS(overlaps(claw, star(20, {1, 5, 9}), L12),
                    PreconditionViolated);
}

TEST_CASE("overlap graph shapes") {
    HostCycle L9({0, 1, 2, 3, 4, 5, 6, 7, 8});
    Instance triangle{L9, {star(9, {0, 3, 6}), chord(1, 5), chord(2, 7)}};
    OverlapGraph og = overlap_graph(triangle);
    CHECK(og.n == 3);
    CHECK(og.edges.size() == 3);
    CHECK(!og.is_tree());

    HostCycle L6({0, 1, 2, 3, 4, 5});
    Instance starish{L6,
                     {chord(0, 3), chord(1, 5), chord(2, 4)}};
    OverlapGraph og2 = overlap_graph(starish);
    CHECK(og2.is_tree());
    CHECK(og2.degree(0) == 2);
    CHECK(og2.leaves() == std::vector<int>{1, 2});

    Instance single{L6, {chord(0, 2)}};
    CHECK(overlap_graph(single).is_tree());
}

TEST_CASE("bridge decomposition recovers chords and components") {
    // 4-cycle host with the path 1-4-3 hanging off it.
    HostCycle L({0, 1, 2, 3});
    std::vector<EdgePair> edges = {make_edge(0, 1), make_edge(1, 2),
                                   make_edge(2, 3), make_edge(3, 0),
                                   make_edge(1, 4), make_edge(4, 3)};
    std::vector<RawBridge> bs = decompose_bridges(edges, L);
    REQUIRE(bs.size() == 1);
    CHECK(bs[0].edges.size() == 2);
    std::set<VertexId> atts(bs[0].attachments.begin(), bs[0].attachments.end());
    CHECK(atts == std::set<VertexId>{1, 3});

    // 9-cycle with a hub vertex joined to three spots plus three chords.
    HostCycle L9({0, 1, 2, 3, 4, 5, 6, 7, 8});
    std::vector<EdgePair> pet;
    for (int i = 0; i < 9; ++i) pet.push_back(make_edge(i, (i + 1) % 9));
    pet.push_back(make_edge(9, 0));
    pet.push_back(make_edge(9, 3));
    pet.push_back(make_edge(9, 6));
    pet.push_back(make_edge(1, 5));
    pet.push_back(make_edge(2, 7));
    pet.push_back(make_edge(4, 8));
    std::vector<RawBridge> pbs = decompose_bridges(pet, L9);
    REQUIRE(pbs.size() == 4);
    // Sorted by first attachment position: hub bridge first.
    CHECK(pbs[0].edges.size() == 3);
    CHECK(pbs[1].edges.size() == 1);

    CHECK_THROWS_AS(decompose_bridges({make_edge(0, 1)}, L), HostNotACycle);
}

TEST_CASE("bridge length oracle") {
    CHECK(lambda_oracle(RawBridge{{make_edge(0, 2)}, {0, 2}}, 20) == 1);
    CHECK(lambda_oracle(RawBridge{{make_edge(1, 4), make_edge(4, 3)}, {1, 3}},
                        20) == 2);
    RawBridge claw{{make_edge(9, 0), make_edge(9, 3), make_edge(9, 6)},
                   {0, 3, 6}};
    CHECK(lambda_oracle(claw, 20) == 3);

    // Non-tree bridge: a triangle with two legs. The best subtree takes the
    // long way around the triangle.
    RawBridge tri{{make_edge(0, 10), make_edge(10, 11), make_edge(11, 12),
                   make_edge(10, 12), make_edge(11, 2)},
                  {0, 2}};
    CHECK(lambda_oracle(tri, 20) == 4);

    // A spider whose middle leg ends at a non-attachment is trimmed away.
    RawBridge spider{{make_edge(0, 10), make_edge(10, 2), make_edge(10, 11)},
                     {0, 2}};
    CHECK(lambda_oracle(spider, 20) == 2);

    RawBridge bad{{make_edge(0, 10), make_edge(10, 2)}, {0, 10, 2}};
    CHECK_THROWS_AS(lambda_oracle(bad, 20), NoSpanningTreeWithLeaves);
    CHECK_THROWS_AS(lambda_oracle(claw, 2), TooLarge);
}

TEST_CASE("tree utility helpers") {
    BridgeTree b = star(9, {0, 3, 6});
    CHECK(tree_path(b.edges, 0, 6) == std::vector<VertexId>{0, 9, 6});

    std::vector<EdgePair> sub = steiner_subtree(b.edges, {0, 6});
    CHECK(std::set<EdgePair>(sub.begin(), sub.end()) ==
          std::set<EdgePair>{make_edge(0, 9), make_edge(6, 9)});
    CHECK(steiner_subtree(b.edges, {0, 3, 6}).size() == 3);

    // A longer spine: terminals in the middle prune the outer branches.
    std::vector<EdgePair> spine = {make_edge(0, 1), make_edge(1, 2),
                                   make_edge(2, 3), make_edge(2, 4)};
    std::vector<EdgePair> mid = steiner_subtree(spine, {1, 3});
    CHECK(std::set<EdgePair>(mid.begin(), mid.end()) ==
          std::set<EdgePair>{make_edge(1, 2), make_edge(2, 3)});

    CHECK(leaf_vertices(b.edges).size() == 3);
    CHECK(is_tree_edge_list(b.edges));
    std::vector<EdgePair> loop = {make_edge(0, 1), make_edge(1, 2),
                                  make_edge(2, 0)};
    CHECK(!is_tree_edge_list(loop));
}
