#include <doctest.h>

#include <set>
#include <vector>

#include "cyclecover/bridges.hpp"
#include "cyclecover/instance_gen.hpp"
#include "cyclecover/json_io.hpp"
#include "cyclecover/verifier.hpp"

using namespace cyclecover;

TEST_CASE("rng streams are stable and split independently") {
    Rng a(42), b(42);
    CHECK(a.next() == b.next());
    CHECK(a.next() == b.next());

    // A substream does not depend on how much of the parent was consumed.
    Rng c(7), d(7);
    c.next();
    c.next();
    CHECK(c.split(3).next() == d.split(3).next());
    CHECK(c.split(3).next() != c.split(4).next());

    Rng e(123);
    for (int i = 0; i < 500; ++i) {
        int v = e.below(7);
        CHECK(v >= 0);
        CHECK(v < 7);
    }
}

TEST_CASE("random instances are valid and deterministic") {
    GenParams p;
    p.seed = 99;
    Instance inst = gen_random(p);
    CHECK_NOTHROW(validate_instance(inst, true));
    CHECK(static_cast<int>(inst.bridges.size()) == p.bridge_count);
    CHECK(inst.host.size() == p.host_len);
    for (const BridgeTree& b : inst.bridges) {
        CHECK(static_cast<int>(b.attachments.size()) >= 2);
        CHECK(static_cast<int>(b.attachments.size()) <= p.max_leaves_per_bridge);
    }
    CHECK(overlap_graph(inst).is_tree());

    CHECK(instance_to_json(inst) == instance_to_json(gen_random(p)));

    GenParams q = p;
    q.seed = 100;
    CHECK(instance_to_json(inst) != instance_to_json(gen_random(q)));
}

TEST_CASE("generation covers a spread of parameters") {
    for (int bridges = 1; bridges <= 6; ++bridges) {
        GenParams p;
        p.seed = 7 * static_cast<std::uint64_t>(bridges);
        p.bridge_count = bridges;
        p.host_len = 8 * bridges;
        p.max_leaves_per_bridge = 4;
        Instance inst = gen_random(p);
        CHECK_NOTHROW(validate_instance(inst, true));
        CHECK(static_cast<int>(inst.bridges.size()) == bridges);
    }
}

TEST_CASE("impossible parameters are generation failures") {
    GenParams tiny;
    tiny.host_len = 5;  // cannot hold 3 bridges x up to 3 attachments
    CHECK_THROWS_AS(gen_random(tiny), GenerationFailed);

    GenParams none;
    none.bridge_count = 0;
    CHECK_THROWS_AS(gen_random(none), GenerationFailed);

    GenParams skinny;
    skinny.max_leaves_per_bridge = 1;
    CHECK_THROWS_AS(gen_random(skinny), GenerationFailed);
}

TEST_CASE("extremal fans meet the length bound with equality") {
    Instance two = gen_extremal(2);
    CHECK(two.host.size() == 4);
    REQUIRE(two.bridges.size() == 2);
    CHECK(two.bridges[0].edges == std::vector<EdgePair>{make_edge(0, 2)});
    CHECK(two.bridges[1].edges == std::vector<EdgePair>{make_edge(1, 3)});

    Instance three = gen_extremal(3);
    CHECK(three.host.size() == 6);
    CHECK(three.bridges[0].edges == std::vector<EdgePair>{make_edge(0, 3)});
    CHECK(three.bridges[1].edges == std::vector<EdgePair>{make_edge(1, 5)});
    CHECK(three.bridges[2].edges == std::vector<EdgePair>{make_edge(2, 4)});

    for (int k = 2; k <= 6; ++k) {
        Instance inst = gen_extremal(k);
        CHECK_NOTHROW(validate_instance(inst, true));
        int sum = 0;
        for (const BridgeTree& b : inst.bridges) {
            sum += lambda_oracle(RawBridge{b.edges, b.attachments}, 20);
        }
        CHECK(sum == k);
        CHECK(sum == inst.host.size() / 2);  // tight against the bound
    }

    CHECK_THROWS_AS(gen_extremal(1), GenerationFailed);
    CHECK_THROWS_AS(gen_extremal(0), GenerationFailed);
    CHECK_THROWS_AS(gen_extremal(-3), GenerationFailed);
}

TEST_CASE("the bipartite example") {
    Instance inst = gen_k23();
    CHECK(inst.host.order() == std::vector<VertexId>{0, 1, 2, 3});
    REQUIRE(inst.bridges.size() == 1);
    CHECK(inst.bridges[0].attachment_set() == std::set<VertexId>{1, 3});
    CHECK(lambda_oracle(RawBridge{inst.bridges[0].edges,
                                  inst.bridges[0].attachments},
                        20) == 2);
    CHECK(inst.host.size() / 2 == 2);  // the bound the family meets exactly
    CHECK_NOTHROW(validate_instance(inst, true));
}

TEST_CASE("negative cases are well-formed apart from their overlap shape") {
    std::vector<NegativeCase> negs = gen_negatives();
    REQUIRE(negs.size() == 2);
    std::set<std::string> names;
    for (const NegativeCase& nc : negs) {
        names.insert(nc.name);
        CHECK(nc.expected_rejection == "overlap-not-tree");
        CHECK(!nc.note.empty());
        CHECK_NOTHROW(validate_instance(nc.instance, false));
        CHECK_THROWS_AS(validate_instance(nc.instance, true),
                        PreconditionViolated);
        CHECK(!overlap_graph(nc.instance).is_tree());
    }
    CHECK(names == std::set<std::string>{"disconnected-overlap", "petersen"});
}

TEST_CASE("the two-component negative exceeds the bound") {
    for (const NegativeCase& nc : gen_negatives()) {
        if (nc.name != "disconnected-overlap") continue;
        const Instance& inst = nc.instance;
        CHECK(inst.host.size() == 6);
        int sum = 0;
        for (const BridgeTree& b : inst.bridges) {
            sum += lambda_oracle(RawBridge{b.edges, b.attachments}, 20);
        }
        CHECK(sum == 4);
        CHECK(sum > inst.host.size() / 2);
        // Two bridges, no overlap between them.
        OverlapGraph og = overlap_graph(inst);
        CHECK(og.n == 2);
        CHECK(og.edges.empty());
    }
}

TEST_CASE("the hypohamiltonian negative has a triangle overlap") {
    for (const NegativeCase& nc : gen_negatives()) {
        if (nc.name != "petersen") continue;
        const Instance& inst = nc.instance;
        REQUIRE(inst.bridges.size() == 3);
        int sum = 0;
        for (const BridgeTree& b : inst.bridges) {
            sum += lambda_oracle(RawBridge{b.edges, b.attachments}, 20);
        }
        CHECK(sum == 5);
        OverlapGraph og = overlap_graph(inst);
        CHECK(og.edges.size() == 3);  // three bridges, all pairs overlap
    }
}
