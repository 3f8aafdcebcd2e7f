#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "vizlab/coloring.hpp"
#include "vizlab/graph.hpp"
#include "vizlab/measure.hpp"
#include "vizlab/vizing.hpp"

namespace vizlab {

/// Directed bipartite multigraph from uncolored edges e to colored edges f,
/// with multiplicity = number of supplied records at e whose final
/// alternating path contains f.
struct AuxMultigraph {
    std::map<std::pair<EdgeId, EdgeId>, long long> multiplicity;
    long long total = 0;
    /// degree of a right node f: sum of multiplicities into f
    std::map<EdgeId, long long> right_degree;
    long long max_right_degree = 0;
    double degree_bound = 0;  // 32 * (Delta!)^14
};

/// Aggregates the records' final path blocks; throws std::logic_error if a
/// right-node degree exceeds 32 * (Delta!)^14 (the bound is a theorem).
AuxMultigraph build_aux_multigraph(const PartialColoring& c,
                                   const std::vector<VizingChainRecord>& records);

/// Both sides of the double-counting identity:
///   lhs = sum_e nu(e) sum_f F(e,f) rho(e,f),  rhs = sum_f nu(f) sum_e F(e,f);
/// equality is the mass-transport principle applied to F.
std::pair<double, double> double_count_check(const AuxMultigraph& h, const WeightedMeasure& nu,
                                             const Cocycle& rho);

/// Badness threshold and final-path weight observations for a coloring that
/// admits no weight-L improvement.
struct KBadThresholdReport {
    double weight_limit = 0;
    int k = 0;                     // floor(log_{8 Delta}(L) / 4)
    bool hypothesis_met = false;   // log_{8 Delta}(L) >= (8 Delta)^20
    int uncolored_checked = 0;
    int k_bad_count = 0;
    int records_with_final_path = 0;
    int final_path_weight_failures = 0;  // sum over P3 of rho(e,.) < L/2
    std::string text() const;
};

KBadThresholdReport k_bad_threshold_check(const PartialColoring& c, const WeightedMeasure& nu,
                                          double L, const LineGraphView& lg,
                                          int budget_per_edge = 64);

/// Observed uncolored mass against the closed-form decay bound
/// 64 (4 Delta)^7 (Delta!)^14 / (log^2_{8 Delta}(L) * L). The comparison is
/// asserted only when the bound's hypothesis holds (it never does at desk
/// scale); otherwise both numbers are reported.
struct MassBoundReport {
    double observed = 0;
    double bound = 0;
    bool hypothesis_met = false;
    bool holds = false;
    std::string text() const;
};

MassBoundReport uncolored_mass_bound(const PartialColoring& c, const WeightedMeasure& nu,
                                     double L, int delta);

}  // namespace vizlab
