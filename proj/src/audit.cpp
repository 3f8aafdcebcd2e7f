#include "vizlab/audit.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace vizlab {

namespace {

double factorial(int n) {
    double f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

double degree_bound_for(int delta) { return 32.0 * std::pow(factorial(delta), 14); }

}  // namespace

AuxMultigraph build_aux_multigraph(const PartialColoring& c,
                                   const std::vector<VizingChainRecord>& records) {
    AuxMultigraph h;
    h.degree_bound = degree_bound_for(c.graph().max_degree());
    for (const VizingChainRecord& rec : records) {
        for (EdgeId f : rec.blocks[5].edges) {
            ++h.multiplicity[{rec.start_edge, f}];
            ++h.right_degree[f];
            ++h.total;
        }
    }
    for (auto& [f, deg] : h.right_degree) {
        h.max_right_degree = std::max(h.max_right_degree, deg);
        if (static_cast<double>(deg) > h.degree_bound)
            throw std::logic_error("auxiliary multigraph degree " + std::to_string(deg) +
                                   " at edge " + std::to_string(f) +
                                   " exceeds the guaranteed bound");
    }
    return h;
}

std::pair<double, double> double_count_check(const AuxMultigraph& h, const WeightedMeasure& nu,
                                             const Cocycle& rho) {
    double lhs = 0, rhs = 0;
    for (const auto& [arc, mult] : h.multiplicity) {
        auto [e, f] = arc;
        lhs += nu[e] * static_cast<double>(mult) * rho(e, f);
        rhs += nu[f] * static_cast<double>(mult);
    }
    return {lhs, rhs};
}

std::string KBadThresholdReport::text() const {
    std::ostringstream out;
    out << "check=k_bad_threshold\n"
        << "weight_limit=" << weight_limit << "\n"
        << "k=" << k << "\n"
        << "hypothesis_met=" << (hypothesis_met ? "yes" : "no, informational") << "\n"
        << "uncolored_checked=" << uncolored_checked << "\n"
        << "k_bad_count=" << k_bad_count << "\n"
        << "records_with_final_path=" << records_with_final_path << "\n"
        << "final_path_weight_failures=" << final_path_weight_failures << "\n";
    return out.str();
}

KBadThresholdReport k_bad_threshold_check(const PartialColoring& c, const WeightedMeasure& nu,
                                          double L, const LineGraphView& lg,
                                          int budget_per_edge) {
    const int delta = c.graph().max_degree();
    const double base = 8.0 * std::max(delta, 1);
    const double log_l = std::log(L) / std::log(base);
    KBadThresholdReport rep;
    rep.weight_limit = L;
    rep.k = std::max(0, static_cast<int>(std::floor(log_l / 4.0)));
    rep.hypothesis_met = log_l >= std::pow(base, 20);
    Cocycle rho(lg.as_graph(), nu);

    for (EdgeId e : c.uncolored_set()) {
        ++rep.uncolored_checked;
        if (is_k_bad(c, e, rep.k)) ++rep.k_bad_count;
        for (const VizingChainRecord& rec :
             enumerate_three_step_chains(c, e, budget_per_edge, lg)) {
            if (!rec.f2 || rec.blocks[5].empty()) continue;
            ++rep.records_with_final_path;
            double w = 0;
            for (EdgeId f : rec.blocks[5].edges) w += rho(e, f);
            if (w < L / 2.0) ++rep.final_path_weight_failures;
        }
    }
    return rep;
}

std::string MassBoundReport::text() const {
    std::ostringstream out;
    out << "check=uncolored_mass_bound\n"
        << "observed=" << observed << "\n"
        << "bound=" << bound << "\n"
        << "hypothesis_met=" << (hypothesis_met ? "yes" : "no, informational") << "\n"
        << "holds=" << (holds ? "yes" : "no") << "\n";
    return out.str();
}

MassBoundReport uncolored_mass_bound(const PartialColoring& c, const WeightedMeasure& nu,
                                     double L, int delta) {
    MassBoundReport rep;
    for (EdgeId e : c.uncolored_set()) rep.observed += nu[e];
    const double base = 8.0 * std::max(delta, 1);
    const double log_l = std::log(L) / std::log(base);
    rep.bound = 64.0 * std::pow(4.0 * delta, 7) * std::pow(factorial(delta), 14) /
                (log_l * log_l * L);
    rep.hypothesis_met = log_l >= std::pow(base, 20);
    rep.holds = rep.observed <= rep.bound;
    if (rep.hypothesis_met && !rep.holds)
        throw std::logic_error("uncolored mass exceeds the theorem bound under its hypothesis");
    return rep;
}

}  // namespace vizlab
