#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "vizlab/coloring.hpp"
#include "vizlab/graph.hpp"
#include "vizlab/measure.hpp"

namespace vizlab {

/// Per-run accounting for improve_to_weight.
struct ImprovementReport {
    int rounds = 0;
    double initial_uncolored_mass = 0;
    double final_uncolored_mass = 0;
    /// Mass of edges whose entry changed between input and output, counting
    /// newly colored edges. Bounded by L times the initial uncolored mass.
    double recolored_mass = 0;
    std::vector<int> selected_per_round;
    /// One machine-parseable line per round:
    /// `round=<n> uncolored=<u> selected=<s> recolored_mass=<m>`.
    std::vector<std::string> trace;
};

/// Improvement weight of a chain at e: sum over f in W of rho(e, f), where
/// rho is the edge-measure cocycle on the line graph. Empty chains weigh 0;
/// e itself contributes 1 when it appears. Throws on cross-component pairs.
double chain_weight(const Cocycle& rho, EdgeId e, const Chain& w);

/// Repeatedly augments weight-<= L chains at uncolored edges until none
/// remains. Each round discovers, for every uncolored edge, the first
/// enumerated chain of weight <= L, buckets the hits by chain length k,
/// greedily keeps a family pairwise >= 2k+2 apart in the line-graph metric,
/// and augments the kept chains (re-checked against the evolving coloring).
/// The domain never shrinks and every round colors at least one edge.
std::pair<PartialColoring, ImprovementReport> improve_to_weight(
    const PartialColoring& c, const WeightedMeasure& nu, double L,
    const LineGraphView& lg);

struct FullColoringOptions {
    /// Weight schedule L_n = first_weight * growth^n.
    double first_weight = 8.0;
    double growth = 2.0;
    /// Also report the schedule the quantitative analysis uses,
    /// L_n = A * (8 Delta)^n with log_{8 Delta}(A) >= (8 Delta)^20; the
    /// values overflow doubles and are reported, never run.
    bool report_reference_schedule = false;
    /// Skip the greedy first-fit warm start (slower; for tests).
    bool greedy_start = true;
};

struct FullColoringStage {
    double weight_limit = 0;
    ImprovementReport report;
};

struct FullColoringReport {
    std::vector<FullColoringStage> stages;
    std::string schedule_note;
};

/// Lifts mu to an edge measure, transforms it to a bounded-cocycle
/// equivalent measure on the line graph, then runs improve_to_weight under
/// the increasing weight schedule until every edge is colored. The result is
/// proper with at most Delta + 1 colors.
PartialColoring full_coloring(const Graph& g, const WeightedMeasure& mu,
                              const FullColoringOptions& opts = {},
                              FullColoringReport* out_report = nullptr);

}  // namespace vizlab
