#include <doctest.h>

#include <string>
#include <vector>

#include "cyclecover/cycle_family.hpp"
#include "cyclecover/instance_gen.hpp"
#include "cyclecover/json_io.hpp"
#include "cyclecover/partition_digraph.hpp"

using namespace cyclecover;

namespace {

int count_of(const std::string& hay, const std::string& needle) {
    int n = 0;
    for (std::size_t at = hay.find(needle); at != std::string::npos;
         at = hay.find(needle, at + needle.size())) {
        ++n;
    }
    return n;
}

}  // namespace

TEST_CASE("instance documents round-trip byte for byte") {
    for (const Instance& inst :
         {gen_k23(), gen_extremal(4), gen_random(GenParams{})}) {
        std::string text = instance_to_json(inst);
        CHECK(text.back() == '\n');
        Instance back = instance_from_json(text);
        CHECK(instance_to_json(back) == text);
    }
}

TEST_CASE("family documents round-trip byte for byte") {
    Instance inst = gen_k23();
    CycleFamily fam = construct(inst);
    std::string text = family_to_json(fam);
    CycleFamily back = family_from_json(text);
    CHECK(family_to_json(back) == text);
    CHECK(back.size() == fam.size());

    // Arc keys survive, so keyed parallel pairs stay distinguishable.
    CycleFamily keyed;
    keyed.add(Dicycle::from_arcs({{0, 1, 0}, {1, 0, 1}}));
    std::string ktext = family_to_json(keyed);
    CHECK(family_to_json(family_from_json(ktext)) == ktext);
}

TEST_CASE("construction output serializes identically across runs") {
    Instance inst = gen_extremal(3);
    CHECK(family_to_json(construct(inst)) == family_to_json(construct(inst)));
}

TEST_CASE("malformed instance documents are rejected") {
    CHECK_THROWS_AS(instance_from_json("not json"), MalformedDocument);
    CHECK_THROWS_AS(instance_from_json("{}"), MalformedDocument);
    CHECK_THROWS_AS(instance_from_json(R"({"version": 2, "host": [0,1,2], "bridges": []})"),
                    MalformedDocument);
    CHECK_THROWS_AS(instance_from_json(R"({"version": 1, "host": 5, "bridges": []})"),
                    MalformedDocument);
    CHECK_THROWS_AS(instance_from_json(R"({"version": 1, "host": [0,1,2]})"),
                    MalformedDocument);
    CHECK_THROWS_AS(
        instance_from_json(R"({"version": 1, "host": [0,-1,2], "bridges": []})"),
        MalformedDocument);
    CHECK_THROWS_AS(
        instance_from_json(R"({"version": 1, "host": [0,1,0], "bridges": []})"),
        MalformedDocument);  // not a cycle
    CHECK_THROWS_AS(
        instance_from_json(
            R"({"version": 1, "host": [0,1,2,3], "bridges": [{"edges": [[1]], "attachments": [1,3]}]})"),
        MalformedDocument);
    // Structurally fine but semantically broken instances parse; the deeper
    // validation belongs to construction and verification.
    CHECK_NOTHROW(instance_from_json(
        R"({"version": 1, "host": [0,1,2,3], "bridges": [{"edges": [[0,2]], "attachments": [0]}]})"));
}

TEST_CASE("malformed family documents are rejected") {
    CHECK_THROWS_AS(family_from_json("["), MalformedDocument);
    CHECK_THROWS_AS(family_from_json("{}"), MalformedDocument);
    CHECK_THROWS_AS(family_from_json(R"({"version": 1, "dicycles": [[]]})"),
                    MalformedDocument);
    CHECK_THROWS_AS(
        family_from_json(R"({"version": 1, "dicycles": [[[0,1],[1,0]]]})"),
        MalformedDocument);  // arcs must carry keys
    CHECK_THROWS_AS(
        family_from_json(
            R"({"version": 1, "dicycles": [[[0,1,0],[2,0,0]]]})"),
        MalformedDocument);  // chain break
    CHECK(family_from_json(R"({"version": 1, "dicycles": []})").empty());
}

TEST_CASE("instance DOT separates host and bridge edges") {
    std::string dot = instance_to_dot(gen_k23());
    CHECK(dot.rfind("graph", 0) == 0);
    CHECK(count_of(dot, "style=bold") == 4);
    CHECK(count_of(dot, "style=dashed") == 2);
    CHECK(count_of(dot, "shape=square") == 1);  // the internal bridge vertex
}

TEST_CASE("family DOT colors each dicycle and marks host arcs") {
    Instance inst = gen_k23();
    CycleFamily fam = construct(inst);
    REQUIRE(fam.size() == 4);
    std::string dot = family_to_dot(inst, fam);
    CHECK(dot.rfind("digraph", 0) == 0);
    CHECK(count_of(dot, " -> ") == 16);        // 4 dicycles x 4 arcs
    CHECK(count_of(dot, "style=bold") == 8);   // host arcs: each edge twice
    CHECK(count_of(dot, "style=dashed") == 8); // bridge arcs
    CHECK(count_of(dot, "#e41a1c") == 4);      // first palette slot, 4 arcs

    CycleFamily empty;
    std::string edot = family_to_dot(inst, empty);
    CHECK(edot.rfind("digraph", 0) == 0);
    CHECK(count_of(edot, " -> ") == 0);
}

TEST_CASE("auxiliary digraph exports") {
    AuxDigraph d = build_aux(parse_partition("4,3,3"));
    std::string dot = aux_to_dot(d);
    CHECK(count_of(dot, " -> ") == 20);
    CHECK(count_of(dot, "label=") == 10);
    CHECK(dot.find("v1_1") != std::string::npos);
    CHECK(dot.find("v3_3") != std::string::npos);

    std::string js = aux_to_json(build_aux(parse_partition("2,2")));
    CHECK(count_of(js, "\"kind\"") == 8);
    CHECK(count_of(js, "within_fwd") == 2);
    CHECK(count_of(js, "within_bwd") == 2);
    CHECK(count_of(js, "ring_first") == 2);
    CHECK(count_of(js, "ring_last") == 2);
    CHECK(js.find("\"parts\"") != std::string::npos);
}
