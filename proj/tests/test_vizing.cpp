#include <doctest.h>

#include <stdexcept>

#include <map>

#include "vizlab/coloring.hpp"
#include "vizlab/graph.hpp"
#include "vizlab/vizing.hpp"

#include "deep_instances.hpp"

using namespace vizlab;
using testsupport::DeepInstance;
using testsupport::DeepVariant;
using testsupport::make_deep_instance;

namespace {

// Proper partial coloring filled greedily on a pseudorandom subset of edges.
PartialColoring random_partial(const Graph& g, uint64_t seed, int percent) {
    PartialColoring c(g);
    SplitMix64 rng(seed);
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        if (rng.below(100) >= static_cast<uint64_t>(percent)) continue;
        auto [u, v] = g.edge(e);
        for (Color col = 1; col <= c.palette_size(); ++col) {
            if (c.is_missing(u, col) && c.is_missing(v, col)) {
                c.set(e, col);
                break;
            }
        }
    }
    return c;
}

}  // namespace

TEST_CASE("alternating path on a 2-colored 4-path") {
    Graph g = fixtures::path4();
    PartialColoring c(g);
    c.set(0, 1);
    c.set(1, 2);
    c.set(2, 1);
    // anchor must miss the second color
    CHECK_THROWS_AS(alternating_path(c, 1, 1, 2), std::invalid_argument);
    CHECK_THROWS_AS(alternating_path(c, 0, 2, 2), std::invalid_argument);

    AltPath p = alternating_path(c, 0, 1, 2);
    CHECK(p.chain.edges == std::vector<EdgeId>{0, 1, 2});
    CHECK(p.last_vertex == 3);
    CHECK(p.verts == std::vector<VertexId>{0, 1, 2, 3});

    // degenerate case: the first color is missing at the anchor
    AltPath q = alternating_path(c, 0, 3, 2);
    CHECK(q.empty());
    CHECK(q.last_vertex == 0);

    // the same maximal path read from its other end is the reverse
    AltPath r = alternating_path(c, 3, 1, 2);
    CHECK(r.chain.edges == std::vector<EdgeId>{2, 1, 0});
    CHECK(r.last_vertex == 0);
}

TEST_CASE("fans around a star center") {
    Graph g = fixtures::star3();
    PartialColoring all(g);
    Fan f0 = fan(all, 0, 0);
    CHECK(f0.chain.edges == std::vector<EdgeId>{0});
    CHECK(f0.stop == FanStop::NoExtension);

    PartialColoring c(g);
    c.set(1, 1);
    c.set(2, 2);
    Fan f = fan(c, 0, 0);
    CHECK(f.chain.edges == std::vector<EdgeId>{0, 1, 2});
    CHECK(f.leaves == std::vector<VertexId>{1, 2, 3});

    CHECK_THROWS_AS(fan(c, 0, 1), std::invalid_argument);  // colored start edge
    CHECK_THROWS_AS(fan(c, 2, 0), std::invalid_argument);  // center off the edge

    Graph k = fixtures::k2();
    PartialColoring ck(k);
    CHECK(fan(ck, 0, 0).length() == 1);  // degree-1 center
}

TEST_CASE("conditional fan stops at a degree-2 pivot") {
    Graph g = fixtures::path4();
    PartialColoring c(g);
    c.set(0, 1);
    c.set(1, 2);
    c.set(2, 1);
    Fan f = conditional_fan(c, 1, 2, 1, 2);
    CHECK(f.chain.edges == std::vector<EdgeId>{1});
    CHECK_THROWS_AS(conditional_fan(c, 1, 3, 1, 2), std::invalid_argument);
    CHECK_THROWS_AS(conditional_fan(c, 1, 2, 3, 4), std::invalid_argument);
}

TEST_CASE("first iteration: augmenting fan on the star") {
    Graph g = fixtures::star3();
    PartialColoring c(g);
    c.set(1, 1);
    c.set(2, 2);
    VizingChainRecord rec = first_iteration(c, 0, 0);
    CHECK(rec.type == RecordType::FanOnly);
    CHECK(rec.complete);
    CHECK(rec.augmenting);
    CHECK(rec.blocks[0].edges == std::vector<EdgeId>{0, 1, 2});
    CHECK(!validate_record(c, rec).has_value());
    PartialColoring a = augment_with_chain(c, rec.full());
    CHECK(properness_audit(a).empty());
    CHECK(a.num_uncolored() == 0);
}

TEST_CASE("first iteration on an isolated edge") {
    Graph g = fixtures::k2();
    PartialColoring c(g);
    VizingChainRecord rec = first_iteration(c, 0, 0);
    CHECK(rec.type == RecordType::FanOnly);
    CHECK(rec.full().length() == 1);
    CHECK(!validate_record(c, rec).has_value());
}

TEST_CASE("every constructed record validates and augments") {
    for (uint64_t seed : {1u, 2u, 3u, 4u, 5u, 6u, 7u, 8u}) {
        Graph g = rand_graph(40, 4, seed);
        if (g.num_edges() == 0) continue;
        PartialColoring c = random_partial(g, seed * 13 + 1, 85);
        LineGraphView lg(g);
        for (EdgeId e : c.uncolored_set()) {
            auto recs = enumerate_three_step_chains(c, e, 200, lg);
            CHECK(!recs.empty());  // the Vizing chain always exists
            for (const auto& rec : recs) {
                INFO("seed ", seed, " edge ", e, " type ", record_type_name(rec.type));
                auto err = validate_record(c, rec);
                CHECK_MESSAGE(!err.has_value(), err.value_or(""));
                CHECK(rec.augmenting);
                PartialColoring a = augment_with_chain(c, rec.full());
                CHECK(properness_audit(a).empty());
                CHECK(a.num_uncolored() == c.num_uncolored() - 1);
            }
        }
    }
}

TEST_CASE("suitability clause errors") {
    // a record with a nonempty first path is required
    Graph g = fixtures::star3();
    PartialColoring c(g);
    c.set(1, 1);
    c.set(2, 2);
    LineGraphView lg(g);
    VizingChainRecord rec = first_iteration(c, 0, 0);
    CHECK(check_suitable(c, rec, 1, lg).has_value());
    CHECK_THROWS_AS(second_iteration(c, rec, 1, lg), std::invalid_argument);
}

TEST_CASE("suitable edges are rejected near the fan and at the path end") {
    for (uint64_t seed = 1; seed < 30; ++seed) {
        Graph g = rand_graph(40, 4, seed);
        if (g.num_edges() == 0) continue;
        PartialColoring c = random_partial(g, seed * 7 + 5, 85);
        LineGraphView lg(g);
        for (EdgeId e : c.uncolored_set()) {
            VizingChainRecord rec = first_iteration(c, e, g.edge(e).first);
            if (rec.type != RecordType::Step1 || rec.complete) continue;
            const Chain& path = rec.path1.chain;
            // the last path edge is never suitable
            CHECK(check_suitable(c, rec, path.edges.back(), lg).has_value());
            // the first path edge touches the fan, so the distance clause fires
            CHECK(check_suitable(c, rec, path.edges.front(), lg).has_value());
            for (EdgeId f1 : path.edges) {
                if (!check_suitable(c, rec, f1, lg)) {
                    CHECK(c.color(f1) == rec.alpha[0]);
                    for (EdgeId h : rec.blocks[0].edges) {
                        CHECK(!lg.distance_within(f1, h, 2).has_value());
                    }
                }
            }
        }
    }
}

TEST_CASE("definitional search lower-bounds the construction") {
    for (uint64_t seed = 1; seed < 12; ++seed) {
        Graph g = rand_graph(14, 3, seed);
        if (g.num_edges() == 0) continue;
        PartialColoring c = random_partial(g, seed + 100, 70);
        LineGraphView lg(g);
        for (EdgeId e : c.uncolored_set()) {
            auto recs = enumerate_three_step_chains(c, e, 50, lg);
            int best_rec = 1 << 20;
            for (const auto& r : recs) best_rec = std::min(best_rec, r.full().length());
            auto shortest = shortest_three_step_chain(c, e, best_rec + 1);
            REQUIRE(shortest.has_value());
            CHECK(*shortest <= best_rec);
        }
    }
}

TEST_CASE("K-bad trivia") {
    Graph g = fixtures::k2();
    PartialColoring c(g);
    // fan-only chain of length 1 < 2K + 2
    CHECK(!is_k_bad(c, 0, 1));
    CHECK(!is_k_bad(c, 0, 0));  // length 1 < 2
    PartialColoring total(g);
    total.set(0, 1);
    CHECK_THROWS_AS(is_k_bad(total, 0, 1), std::invalid_argument);
}

TEST_CASE("an augmenting fan rules out K-badness for every K") {
    Graph g = fixtures::star3();
    PartialColoring c(g);
    c.set(1, 1);
    c.set(2, 2);
    for (int K = 0; K <= 3; ++K) CHECK(!is_k_bad(c, 0, K));
}

TEST_CASE("pair family requires a K-bad edge") {
    Graph g = fixtures::k2();
    PartialColoring c(g);
    LineGraphView lg(g);
    CHECK_THROWS_AS(pair_family(c, 0, 1, lg), std::invalid_argument);
}

TEST_CASE("record serialization is line oriented and terminated") {
    Graph g = fixtures::star3();
    PartialColoring c(g);
    c.set(1, 1);
    c.set(2, 2);
    std::string s = serialize_record(first_iteration(c, 0, 0));
    CHECK(s.find("record e=0 type=fan-only") == 0);
    CHECK(s.find("F1: 0 1 2\n") != std::string::npos);
    CHECK(s.rfind("end\n") == s.size() - 4);
}

namespace {

// Runs the first two steps, asserting the shape shared by every variant.
VizingChainRecord deep_step2(const DeepInstance& in) {
    REQUIRE(properness_audit(in.c).empty());
    VizingChainRecord r1 = first_iteration(in.c, in.e, 0);
    REQUIRE(r1.type == RecordType::Step1);
    CHECK(r1.alpha[0] == 1);
    CHECK(r1.beta[0] == 2);
    CHECK(r1.z[0] == 1);  // the non-center endpoint of the start edge
    CHECK(r1.path1.length() == 7);
    CHECK(!r1.complete);
    CHECK(r1.augmenting);
    REQUIRE(!check_suitable(in.c, r1, in.g5, in.lg));
    REQUIRE(superb_surrogate(in.c, r1, in.g5, in.lg));
    VizingChainRecord r2 = second_iteration(in.c, r1, in.g5, in.lg);
    CHECK(r2.type == RecordType::Step2);
    CHECK(r2.y[1] == 9);  // far endpoint of the chosen interior edge
    CHECK(validate_record(in.c, r2) == std::nullopt);
    return r2;
}

}  // namespace

TEST_CASE("second step completes when the conditional fan augments") {
    auto in_owner = make_deep_instance(DeepVariant::Complete);
    DeepInstance& in = *in_owner;
    VizingChainRecord r2 = deep_step2(in);
    CHECK(r2.complete);
    CHECK(r2.augmenting);
    CHECK(r2.blocks[1].length() == 4);            // path prefix before the pivot edge
    CHECK(r2.blocks[2].edges.front() == in.g5);   // fan starts at the pivot edge
    CHECK(r2.blocks[2].length() == 2);
    CHECK(r2.blocks[3].empty());

    // the completed record recolors cleanly
    PartialColoring c2 = augment_with_chain(in.c, r2.full());
    CHECK(properness_audit(c2).empty());
    CHECK(c2.color(in.e) != 0);
}

TEST_CASE("avoided color in the second fan yields a second path and a third step") {
    auto in_owner = make_deep_instance(DeepVariant::Avoided);
    DeepInstance& in = *in_owner;
    VizingChainRecord r2 = deep_step2(in);
    CHECK(!r2.complete);
    CHECK(r2.augmenting);
    CHECK(r2.z[1] == 15);     // the second fan stops at its avoided leaf
    CHECK(r2.alpha[1] == 1);  // color pair carries over, oriented by the leaf
    CHECK(r2.beta[1] == 2);
    CHECK(r2.path2.length() == 7);

    REQUIRE(!check_two_suitable(in.c, r2, in.k5, in.lg));
    CHECK(amazing_sufficient(in.c, r2, in.k5, in.lg));
    VizingChainRecord r3 = third_iteration(in.c, r2, in.k5, in.lg);
    CHECK(r3.type == RecordType::TypeB);
    CHECK(r3.complete);
    CHECK(r3.amazing);
    CHECK(r3.augmenting);
    CHECK(r3.z[2] == 25);  // third fan stops at its avoided leaf
    CHECK(r3.alpha[2] == 1);
    CHECK(r3.beta[2] == 2);
    CHECK(r3.blocks[4].length() == 2);
    CHECK(r3.blocks[5].length() == 3);
    CHECK(validate_record(in.c, r3) == std::nullopt);

    PartialColoring c2 = augment_with_chain(in.c, r3.full());
    CHECK(properness_audit(c2).empty());
    CHECK(c2.color(in.e) != 0);
}

TEST_CASE("repeated color in the third fan checks both candidate paths") {
    auto in_owner = make_deep_instance(DeepVariant::Repeated);
    DeepInstance& in = *in_owner;
    VizingChainRecord r2 = deep_step2(in);
    REQUIRE(!check_two_suitable(in.c, r2, in.k5, in.lg));
    VizingChainRecord r3 = third_iteration(in.c, r2, in.k5, in.lg);
    CHECK(r3.type == RecordType::TypeC);
    CHECK(r3.complete);
    CHECK(r3.amazing);  // both candidate paths survive the prefix shift
    CHECK(r3.augmenting);
    CHECK(r3.alpha[2] == 5);  // fresh pair: least missing at the pivot + repeat color
    CHECK(r3.beta[2] == 3);
    CHECK(r3.z[2] == 19);     // repeat leaf preferred on ties
    CHECK(r3.blocks[4].length() == 1);
    CHECK(r3.blocks[5].empty());
    CHECK(validate_record(in.c, r3) == std::nullopt);

    PartialColoring c2 = augment_with_chain(in.c, r3.full());
    CHECK(properness_audit(c2).empty());
}

TEST_CASE("a candidate path that changes under the shift defeats the third step") {
    auto in_owner = make_deep_instance(DeepVariant::RepeatedShifty);
    DeepInstance& in = *in_owner;
    VizingChainRecord r2 = deep_step2(in);
    VizingChainRecord r3 = third_iteration(in.c, r2, in.k5, in.lg);
    CHECK(r3.type == RecordType::TypeC);
    CHECK(!r3.amazing);
    CHECK(r3.witness.find("changes under the shift") != std::string::npos);
}
