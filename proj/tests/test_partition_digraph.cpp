#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "cyclecover/partition_digraph.hpp"

using namespace cyclecover;

TEST_CASE("partition parsing") {
    Partition p = parse_partition("4,3,3");
    CHECK(p.parts == std::vector<int>{4, 3, 3});
    CHECK(p.k() == 3);
    CHECK(p.n() == 10);
    CHECK(p.to_string() == "4,3,3");

    CHECK_THROWS_AS(parse_partition(""), InvalidPartition);
    CHECK_THROWS_AS(parse_partition("junk"), InvalidPartition);
    CHECK_THROWS_AS(parse_partition("2,x"), InvalidPartition);
    CHECK_THROWS_AS(parse_partition("0,2"), InvalidPartition);
    CHECK_THROWS_AS(parse_partition("-1,3"), InvalidPartition);
    CHECK_THROWS_AS(parse_partition("1"), InvalidPartition);  // needs n >= 2
}

TEST_CASE("composition enumeration") {
    CHECK(all_partitions(2).size() == 2);
    CHECK(all_partitions(5).size() == 16);
    for (const Partition& p : all_partitions(6)) {
        CHECK(p.n() == 6);
        for (int part : p.parts) CHECK(part >= 1);
    }
    // No duplicates.
    std::set<std::string> seen;
    for (const Partition& p : all_partitions(6)) seen.insert(p.to_string());
    CHECK(seen.size() == 32);
}

TEST_CASE("vertex layout and labels") {
    AuxDigraph d = build_aux(parse_partition("4,3,3"));
    CHECK(d.vertex_count() == 10);
    CHECK(d.vid(0, 0) == 0);
    CHECK(d.vid(1, 0) == 4);
    CHECK(d.vid(2, 2) == 9);
    CHECK(d.coords(5) == std::pair<int, int>{1, 1});
    CHECK(d.vertex_label(0) == "v1_1");
    CHECK(d.vertex_label(9) == "v3_3");
}

TEST_CASE("every composition yields a 2-in 2-out multidigraph") {
    for (int n = 2; n <= 6; ++n) {
        for (const Partition& p : all_partitions(n)) {
            AuxDigraph d = build_aux(p);
            CHECK(static_cast<int>(d.arcs().size()) == 2 * n);
            for (VertexId v = 0; v < d.vertex_count(); ++v) {
                CHECK(d.indegree(v) == 2);
                CHECK(d.outdegree(v) == 2);
            }
        }
    }
}

TEST_CASE("single part builds a bidirected cycle") {
    AuxDigraph d = build_aux(parse_partition("4"));
    CHECK(d.vertex_count() == 4);
    CHECK(d.arcs().size() == 8);
    for (int i = 0; i < 4; ++i) {
        CHECK(d.has_arc(Arc{i, (i + 1) % 4, 0}));
        CHECK(d.has_arc(Arc{(i + 1) % 4, i, 0}));
    }

    // n = 2 collapses the two directions into parallel pairs, kept apart by
    // arc keys.
    AuxDigraph d2 = build_aux(parse_partition("2"));
    CHECK(d2.arcs().size() == 4);
    std::set<Arc> arcs(d2.arcs().begin(), d2.arcs().end());
    CHECK(arcs.size() == 4);  // distinct as keyed arcs
    CHECK(d2.indegree(0) == 2);
    CHECK(d2.outdegree(0) == 2);
}

TEST_CASE("parallel ring arcs between singleton parts carry distinct keys") {
    AuxDigraph d = build_aux(parse_partition("1,1,2"));
    Arc first = d.ring_first(0);
    Arc last = d.ring_last(0);
    // Both run from the singleton part 0 to the singleton part 1.
    CHECK(first.tail == last.tail);
    CHECK(first.head == last.head);
    CHECK(first.key != last.key);
    CHECK(d.info(first).kind == AuxDigraph::ArcKind::ring_first);
    CHECK(d.info(last).kind == AuxDigraph::ArcKind::ring_last);
}

TEST_CASE("named arcs agree with the arc table") {
    AuxDigraph d = build_aux(parse_partition("3,2"));
    Arc wf = d.within_fwd(0, 1);
    CHECK(wf.tail == d.vid(0, 1));
    CHECK(wf.head == d.vid(0, 2));
    CHECK(d.has_arc(wf));
    Arc wb = d.within_bwd(0, 1);
    CHECK(wb.tail == d.vid(0, 2));
    CHECK(wb.head == d.vid(0, 1));
    Arc rf = d.ring_first(1);
    CHECK(rf.tail == d.vid(1, 0));
    CHECK(rf.head == d.vid(0, 0));  // parts wrap around cyclically
    Arc rl = d.ring_last(0);
    CHECK(rl.tail == d.vid(0, 2));
    CHECK(rl.head == d.vid(1, 1));
}

TEST_CASE("the dicycle pair through an arc meets exactly there") {
    // Same property the acceptance run checks at larger sizes; kept small
    // here so a regression points at the right module quickly.
    for (int n = 2; n <= 5; ++n) {
        for (const Partition& p : all_partitions(n)) {
            AuxDigraph d = build_aux(p);
            for (const Arc& a : d.arcs()) {
                auto [c1, c2] = two_dicycles(d, a);
                std::set<Arc> s1(c1.arcs().begin(), c1.arcs().end());
                std::set<Arc> s2(c2.arcs().begin(), c2.arcs().end());
                std::set<Arc> both;
                std::set_intersection(s1.begin(), s1.end(), s2.begin(), s2.end(),
                                      std::inserter(both, both.begin()));
                CHECK(both == std::set<Arc>{a});
                // And both are genuine dicycles of the digraph.
                for (const Arc& e : c1.arcs()) CHECK(d.has_arc(e));
                for (const Arc& e : c2.arcs()) CHECK(d.has_arc(e));
            }
        }
    }
}

TEST_CASE("undirected cut bounds") {
    CHECK(min_undirected_cut(build_aux(parse_partition("2,2"))) == 4);
    CHECK(min_undirected_cut(build_aux(parse_partition("10"))) == 4);
    for (int n = 2; n <= 6; ++n) {
        for (const Partition& p : all_partitions(n)) {
            CHECK(min_undirected_cut(build_aux(p)) >= 4);
        }
    }
    Partition big;
    big.parts = {17};
    CHECK_THROWS_AS(min_undirected_cut(build_aux(big)), TooLarge);
}

TEST_CASE("every cut is even") {
    // Handshake parity: each part of the digraph has even undirected degree.
    for (const Partition& p : all_partitions(5)) {
        AuxDigraph d = build_aux(p);
        int n = d.vertex_count();
        for (int mask = 1; mask < (1 << n) - 1; ++mask) {
            int cut = 0;
            for (const Arc& a : d.arcs()) {
                bool t = (mask >> a.tail) & 1;
                bool h = (mask >> a.head) & 1;
                if (t != h) ++cut;
            }
            CHECK(cut % 2 == 0);
        }
    }
}
