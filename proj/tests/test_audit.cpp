#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "vizlab/audit.hpp"
#include "vizlab/coloring.hpp"
#include "vizlab/graph.hpp"
#include "vizlab/measure.hpp"
#include "vizlab/vizing.hpp"

using namespace vizlab;

namespace {

PartialColoring greedy_partial(const Graph& g) {
    PartialColoring c(g);
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        auto [x, y] = g.edge(e);
        for (Color col = 1; col <= c.palette_size(); ++col) {
            if (c.is_missing(x, col) && c.is_missing(y, col)) {
                c.set(e, col);
                break;
            }
        }
    }
    return c;
}

std::vector<VizingChainRecord> all_records(const PartialColoring& c, const LineGraphView& lg,
                                           int budget) {
    std::vector<VizingChainRecord> out;
    for (EdgeId e : c.uncolored_set()) {
        auto recs = enumerate_three_step_chains(c, e, budget, lg);
        out.insert(out.end(), recs.begin(), recs.end());
    }
    return out;
}

}  // namespace

TEST_CASE("auxiliary multigraph: empty cases") {
    Graph g = fixtures::path4();
    PartialColoring c = greedy_partial(g);
    REQUIRE(c.num_uncolored() == 0);
    AuxMultigraph h = build_aux_multigraph(c, {});
    CHECK(h.total == 0);
    CHECK(h.multiplicity.empty());
    CHECK(h.degree_bound == doctest::Approx(32.0 * std::pow(2.0, 14)));  // 32*(2!)^14

    // fan-only records have an empty final path and contribute nothing
    Graph s = fixtures::star3();
    PartialColoring cs(s);
    cs.set(1, 1);
    cs.set(2, 2);
    VizingChainRecord rec = first_iteration(cs, 0, 0);
    REQUIRE(rec.blocks[5].empty());
    CHECK(build_aux_multigraph(cs, {rec}).total == 0);
}

TEST_CASE("auxiliary multigraph counts final-path edges with multiplicity") {
    // two synthetic records sharing a final-path edge
    Graph g = fixtures::c5();
    PartialColoring c(g);
    VizingChainRecord a;
    a.start_edge = 0;
    a.blocks[5] = Chain{{2, 3, 4}};
    VizingChainRecord b;
    b.start_edge = 1;
    b.blocks[5] = Chain{{3}};
    AuxMultigraph h = build_aux_multigraph(c, {a, b, b});
    CHECK(h.total == 5);
    CHECK(h.multiplicity.at({0, 3}) == 1);
    CHECK(h.multiplicity.at({1, 3}) == 2);
    CHECK(h.right_degree.at(3) == 3);
    CHECK(h.max_right_degree == 3);

    // an independent recount from the raw blocks
    long long recount = 0;
    for (const auto& r : {a, b, b}) recount += r.blocks[5].length();
    CHECK(recount == h.total);
}

TEST_CASE("double counting: uniform measure reduces to the multiplicity total") {
    Graph g = fixtures::c5();
    LineGraphView lg(g);
    PartialColoring c(g);
    VizingChainRecord a;
    a.start_edge = 0;
    a.blocks[5] = Chain{{2, 3}};
    AuxMultigraph h = build_aux_multigraph(c, {a});
    WeightedMeasure nu = WeightedMeasure::uniform(g.num_edges());
    Cocycle rho(lg.as_graph(), nu);
    auto [lhs, rhs] = double_count_check(h, nu, rho);
    CHECK(lhs == doctest::Approx(2.0 / 5));  // total multiplicity / |E|
    CHECK(rhs == doctest::Approx(lhs).epsilon(1e-12));

    AuxMultigraph empty = build_aux_multigraph(c, {});
    auto [l0, r0] = double_count_check(empty, nu, rho);
    CHECK(l0 == 0.0);
    CHECK(r0 == 0.0);
}

TEST_CASE("double counting holds on enumerated records of random instances") {
    for (uint64_t seed : {3u, 9u}) {
        Graph g = rand_graph(80, 4, seed);
        LineGraphView lg(g);
        PartialColoring c(g);
        SplitMix64 rng(seed * 7 + 1);
        for (EdgeId e = 0; e < g.num_edges(); ++e) {
            if (rng.below(100) >= 85) continue;
            auto [x, y] = g.edge(e);
            for (Color col = 1; col <= c.palette_size(); ++col) {
                if (c.is_missing(x, col) && c.is_missing(y, col)) {
                    c.set(e, col);
                    break;
                }
            }
        }
        AuxMultigraph h = build_aux_multigraph(c, all_records(c, lg, 50));
        CHECK(h.max_right_degree <= h.degree_bound);

        WeightedMeasure nu;
        SplitMix64 wrng(seed + 1000);
        for (EdgeId e = 0; e < g.num_edges(); ++e)
            nu.weights.push_back(std::pow(10.0, 2 * wrng.unit()));
        nu = nu.normalized();
        Cocycle rho(lg.as_graph(), nu);
        auto [lhs, rhs] = double_count_check(h, nu, rho);
        if (h.total > 0) CHECK(lhs == doctest::Approx(rhs).epsilon(1e-9));
    }
}

TEST_CASE("degree bound violation is a hard failure") {
    Graph g = fixtures::k2();  // Delta = 1: bound is 32
    PartialColoring c(g);
    std::vector<VizingChainRecord> recs;
    VizingChainRecord r;
    r.start_edge = 0;
    r.blocks[5] = Chain{{0}};
    for (int i = 0; i < 33; ++i) recs.push_back(r);
    CHECK_THROWS_AS(build_aux_multigraph(c, recs), std::logic_error);
}

TEST_CASE("badness threshold report on a total coloring is vacuously clean") {
    Graph g = fixtures::path4();
    LineGraphView lg(g);
    PartialColoring c = greedy_partial(g);
    WeightedMeasure nu = WeightedMeasure::uniform(g.num_edges());
    KBadThresholdReport rep = k_bad_threshold_check(c, nu, 1e3, lg);
    CHECK(rep.uncolored_checked == 0);
    CHECK(rep.k_bad_count == 0);
    CHECK(rep.final_path_weight_failures == 0);
    CHECK(!rep.hypothesis_met);  // desk-scale weights never reach the threshold
    CHECK(rep.text().find("check=k_bad_threshold") == 0);
    CHECK(rep.text().find("hypothesis_met=no, informational") != std::string::npos);
}

TEST_CASE("badness threshold observations on a partial instance") {
    Graph g = rand_graph(60, 4, 2);
    LineGraphView lg(g);
    PartialColoring c(g);
    SplitMix64 rng(5);
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        if (rng.below(100) >= 80) continue;
        auto [x, y] = g.edge(e);
        for (Color col = 1; col <= c.palette_size(); ++col) {
            if (c.is_missing(x, col) && c.is_missing(y, col)) {
                c.set(e, col);
                break;
            }
        }
    }
    WeightedMeasure nu = WeightedMeasure::uniform(g.num_edges());
    KBadThresholdReport rep = k_bad_threshold_check(c, nu, 100.0, lg);
    CHECK(rep.uncolored_checked == c.num_uncolored());
    CHECK(rep.k == 0);  // log_32(100) / 4 rounds down to zero
    CHECK(rep.k_bad_count <= rep.uncolored_checked);
}

TEST_CASE("uncolored mass bound: observed vs closed form") {
    Graph g = fixtures::path4();
    PartialColoring total = greedy_partial(g);
    WeightedMeasure nu = WeightedMeasure::uniform(g.num_edges());
    MassBoundReport clean = uncolored_mass_bound(total, nu, 1e6, 2);
    CHECK(clean.observed == 0.0);
    CHECK(clean.holds);
    // Delta=2, L=10^6: direct evaluation of the closed form
    double log_l = std::log(1e6) / std::log(16.0);
    double expect = 64.0 * std::pow(8.0, 7) * std::pow(2.0, 14) / (log_l * log_l * 1e6);
    CHECK(clean.bound == doctest::Approx(expect));
    CHECK(!clean.hypothesis_met);
    CHECK(clean.text().find("check=uncolored_mass_bound") == 0);

    PartialColoring open(g);  // everything uncolored
    MassBoundReport rep = uncolored_mass_bound(open, nu, 1e6, 2);
    CHECK(rep.observed == doctest::Approx(1.0));
    CHECK(rep.holds);  // the desk-scale bound is enormous

    // the bound decays in L: large L eventually beats a unit observation
    MassBoundReport far = uncolored_mass_bound(open, nu, 1e60, 2);
    CHECK(far.bound < rep.bound);
}
