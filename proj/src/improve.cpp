#include "vizlab/improve.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "vizlab/vizing.hpp"

namespace vizlab {

double chain_weight(const Cocycle& rho, EdgeId e, const Chain& w) {
    double total = 0;
    for (EdgeId f : w.edges) total += rho(e, f);
    return total;
}

namespace {

struct Candidate {
    EdgeId start;
    Chain chain;
};

/// First enumerated chain at e of weight <= L, if any.
std::optional<Chain> discover(const PartialColoring& c, EdgeId e, const Cocycle& rho,
                              double L, const LineGraphView& lg) {
    std::optional<Chain> hit;
    for_each_three_step_chain(c, e, lg, [&](const VizingChainRecord& rec) {
        Chain w = rec.full();
        if (chain_weight(rho, e, w) <= L) {
            hit = std::move(w);
            return false;
        }
        return true;
    });
    return hit;
}

std::vector<Candidate> discover_all(const PartialColoring& c, const Cocycle& rho,
                                    double L, const LineGraphView& lg) {
    std::vector<EdgeId> uncolored = c.uncolored_set();
    std::vector<std::optional<Chain>> found(uncolored.size());
    int threads = std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<int>(threads, static_cast<int>(uncolored.size()));
    std::atomic<size_t> cursor{0};
    std::vector<std::thread> pool;
    for (int t = 0; t < std::max(threads, 1); ++t) {
        pool.emplace_back([&] {
            for (size_t i; (i = cursor.fetch_add(1)) < uncolored.size();)
                found[i] = discover(c, uncolored[i], rho, L, lg);
        });
    }
    for (auto& th : pool) th.join();
    std::vector<Candidate> out;
    for (size_t i = 0; i < uncolored.size(); ++i) {
        if (found[i]) out.push_back({uncolored[i], std::move(*found[i])});
    }
    return out;
}

}  // namespace

std::pair<PartialColoring, ImprovementReport> improve_to_weight(
    const PartialColoring& c, const WeightedMeasure& nu, double L,
    const LineGraphView& lg) {
    if (L < 1.0) throw std::invalid_argument("weight limit must be at least 1");
    if (nu.size() != c.graph().num_edges())
        throw std::invalid_argument("edge measure size does not match the edge count");
    nu.check_positive();
    Cocycle rho(lg.as_graph(), nu);

    ImprovementReport rep;
    for (EdgeId e : c.uncolored_set()) rep.initial_uncolored_mass += nu[e];

    PartialColoring cur = c;
    const int initial_uncolored = cur.num_uncolored();
    while (true) {
        std::vector<Candidate> hits = discover_all(cur, rho, L, lg);
        if (hits.empty()) break;

        // bucket by chain length; the required separation scales with it
        std::map<int, std::vector<const Candidate*>> buckets;
        for (const Candidate& cand : hits) buckets[cand.chain.length()].push_back(&cand);

        int applied = 0;
        double round_mass = 0;
        std::vector<char> blocked(cur.graph().num_edges(), 0);
        for (auto& [k, bucket] : buckets) {
            std::fill(blocked.begin(), blocked.end(), 0);
            for (const Candidate* cand : bucket) {
                bool clash = false;
                for (EdgeId f : cand->chain.edges) clash = clash || blocked[f];
                if (clash) continue;
                // chains from other buckets may have recolored nearby edges;
                // re-check before applying
                auto cls = classify_chain(cur, cand->chain);
                if (cls.augmenting) {
                    PartialColoring next = augment_with_chain(cur, cand->chain);
                    for (EdgeId f : cand->chain.edges) {
                        if (next.color(f) != cur.color(f)) round_mass += nu[f];
                    }
                    cur = std::move(next);
                    ++applied;
                }
                // keep the separation guarantee for the rest of the bucket
                // whether or not this candidate survived the re-check
                for (EdgeId f : lg.ball(cand->chain.edges, 2 * k + 1)) blocked[f] = 1;
            }
        }
        if (applied == 0)
            throw std::logic_error("improvement round selected chains but applied none");

        ++rep.rounds;
        rep.selected_per_round.push_back(applied);
        std::ostringstream line;
        line << "round=" << rep.rounds << " uncolored=" << cur.num_uncolored()
             << " selected=" << applied << " recolored_mass=" << round_mass;
        rep.trace.push_back(line.str());
        if (rep.rounds > initial_uncolored)
            throw std::logic_error("improvement loop exceeded its round budget");
    }

    for (EdgeId e = 0; e < cur.graph().num_edges(); ++e) {
        if (cur.color(e) != c.color(e)) rep.recolored_mass += nu[e];
        if (c.is_colored(e) && !cur.is_colored(e))
            throw std::logic_error("improvement shrank the colored domain");
        if (!cur.is_colored(e)) rep.final_uncolored_mass += nu[e];
    }
    return {std::move(cur), std::move(rep)};
}

PartialColoring full_coloring(const Graph& g, const WeightedMeasure& mu,
                              const FullColoringOptions& opts,
                              FullColoringReport* out_report) {
    mu.check_positive();
    PartialColoring c(g);
    if (g.num_edges() == 0) return c;

    WeightedMeasure edge_mu = lift_to_edge_measure(mu, g);
    LineGraphView lg(g);
    BoundedMeasure bounded = bounded_equivalent_measure(edge_mu, lg.as_graph());
    const WeightedMeasure& nu = bounded.nu;

    if (opts.greedy_start) {
        for (EdgeId e = 0; e < g.num_edges(); ++e) {
            auto [x, y] = g.edge(e);
            for (Color col = 1; col <= c.palette_size(); ++col) {
                if (c.is_missing(x, col) && c.is_missing(y, col)) {
                    c.set(e, col);
                    break;
                }
            }
        }
    }

    if (out_report) {
        std::ostringstream note;
        note << "schedule L_n = " << opts.first_weight << " * " << opts.growth << "^n";
        if (opts.report_reference_schedule) {
            note << "; reference schedule L_n = A*(8*Delta)^n with log_(8*Delta)(A) >= (8*Delta)^20"
                 << " (Delta=" << g.max_degree()
                 << "): values exceed double range, reported only";
        }
        out_report->schedule_note = note.str();
    }

    double L = opts.first_weight;
    while (c.num_uncolored() > 0) {
        auto [next, rep] = improve_to_weight(c, nu, L, lg);
        c = std::move(next);
        if (out_report) out_report->stages.push_back({L, std::move(rep)});
        L *= opts.growth;
        if (!std::isfinite(L))
            throw std::logic_error("weight schedule overflowed before completion");
    }
    return c;
}

}  // namespace vizlab
