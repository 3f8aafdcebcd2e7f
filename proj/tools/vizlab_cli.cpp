// Batch driver: loads a graph and a vertex weighting, runs the coloring or
// the audit pipeline, and writes its artifacts (coloring file, traces,
// report, JSON metadata) into an output directory. All randomness flows
// from --seed; the same config on the same inputs produces byte-identical
// outputs.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "vizlab/audit.hpp"
#include "vizlab/coloring.hpp"
#include "vizlab/graph.hpp"
#include "vizlab/improve.hpp"
#include "vizlab/measure.hpp"
#include "vizlab/vizing.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace vizlab;

namespace {

struct RunConfig {
    std::string graph_path;
    std::string weights_path;    // empty = uniform
    std::string coloring_path;   // audit only; empty = derive by improvement
    std::string out_dir = "out";
    std::string schedule = "desk";  // desk | paper-faithful
    uint64_t seed = 0;
    double weight_limit = 1000.0;  // audit improvement target L
    int budget = 64;               // records enumerated per uncolored edge
    double tolerance = 1e-9;
};

json config_json(const RunConfig& cfg, const std::string& command) {
    json j;
    j["command"] = command;
    j["graph"] = cfg.graph_path;
    j["weights"] = cfg.weights_path.empty() ? json(nullptr) : json(cfg.weights_path);
    if (command == "audit")
        j["coloring"] = cfg.coloring_path.empty() ? json(nullptr) : json(cfg.coloring_path);
    j["out"] = cfg.out_dir;
    j["schedule"] = cfg.schedule;
    j["seed"] = cfg.seed;
    j["L"] = cfg.weight_limit;
    j["budget"] = cfg.budget;
    j["tolerance"] = cfg.tolerance;
    return j;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const fs::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << text;
}

// Fixed-notation double printing, shared by every text artifact so the
// determinism contract does not depend on locale or default precision.
std::string num(double v) {
    std::ostringstream ss;
    ss.precision(17);
    ss << v;
    return ss.str();
}

struct LoadedInputs {
    Graph g;
    std::vector<std::string> names;
    WeightedMeasure mu;
};

LoadedInputs load_inputs(const RunConfig& cfg) {
    auto [g, names] = parse_edge_list(read_file(cfg.graph_path));
    WeightedMeasure mu = cfg.weights_path.empty()
                             ? WeightedMeasure::uniform(g.num_vertices())
                             : parse_weights(read_file(cfg.weights_path), names);
    mu.check_positive();
    return {std::move(g), std::move(names), std::move(mu).normalized()};
}

// ---------------------------------------------------------------- color ---

int cmd_color(const RunConfig& cfg) {
    LoadedInputs in = load_inputs(cfg);
    const int delta = in.g.max_degree();

    FullColoringOptions opts;
    opts.report_reference_schedule = (cfg.schedule == "paper-faithful");
    FullColoringReport rep;
    PartialColoring c = full_coloring(in.g, in.mu, opts, &rep);

    auto violations = properness_audit(c);
    int colors_used = 0;
    for (EdgeId e = 0; e < in.g.num_edges(); ++e)
        colors_used = std::max(colors_used, c.color(e));
    const bool ok = (c.num_uncolored() == 0) && violations.empty() && colors_used <= delta + 1;

    fs::create_directories(cfg.out_dir);
    write_file(fs::path(cfg.out_dir) / "coloring.txt", serialize_coloring(c));

    std::ostringstream trace;
    for (const auto& stage : rep.stages) {
        trace << "stage L=" << num(stage.weight_limit) << "\n";
        for (const auto& line : stage.report.trace) trace << "  " << line << "\n";
    }
    trace << rep.schedule_note << "\n";
    write_file(fs::path(cfg.out_dir) / "trace.txt", trace.str());

    std::ostringstream report;
    report << "total=" << ((c.num_uncolored() == 0) ? "yes" : "no") << "\n"
           << "proper=" << (violations.empty() ? "yes" : "no") << "\n"
           << "colors_used=" << colors_used << " palette=" << delta + 1 << "\n";
    for (const auto& v : violations)
        report << "violation vertex=" << v.vertex << " edges=" << v.first << ","
               << v.second << "\n";
    report << "result=" << (ok ? "pass" : "fail") << "\n";
    write_file(fs::path(cfg.out_dir) / "report.txt", report.str());

    json meta;
    meta["config"] = config_json(cfg, "color");
    meta["vertices"] = in.g.num_vertices();
    meta["edges"] = in.g.num_edges();
    meta["max_degree"] = delta;
    meta["colors_used"] = colors_used;
    meta["total"] = (c.num_uncolored() == 0);
    meta["proper"] = violations.empty();
    meta["stages"] = rep.stages.size();
    meta["schedule_note"] = rep.schedule_note;
    meta["pass"] = ok;
    write_file(fs::path(cfg.out_dir) / "meta.json", meta.dump(2) + "\n");

    std::cout << (ok ? "color: pass" : "color: fail") << " (" << colors_used
              << " colors, palette " << delta + 1 << ")\n";
    return ok ? 0 : 1;
}

// ---------------------------------------------------------------- audit ---

struct CheckLine {
    std::string name;
    bool asserted = true;
    bool ok = true;
    std::string detail;
};

int cmd_audit(const RunConfig& cfg) {
    LoadedInputs in = load_inputs(cfg);
    const int delta = in.g.max_degree();
    LineGraphView lg(in.g);
    SplitMix64 rng(cfg.seed);

    std::vector<CheckLine> checks;
    auto push = [&](std::string name, bool asserted, bool ok, std::string detail) {
        checks.push_back({std::move(name), asserted, ok, std::move(detail)});
    };

    // The state under audit: a supplied coloring, or the greedy start
    // improved to weight L (the pipeline's own intermediate state).
    PartialColoring c(in.g);
    WeightedMeasure nu_edges{{}};
    std::string improvement_trace;
    {
        WeightedMeasure edge_mu = lift_to_edge_measure(in.mu, in.g);
        BoundedMeasure bm = bounded_equivalent_measure(edge_mu, lg.as_graph());
        nu_edges = bm.nu;
        push("edge_cocycle_bound", true, true,
             "all line-graph cocycle ratios inside [1/(4D), 4D], D=" +
                 std::to_string(delta));

        if (!cfg.coloring_path.empty()) {
            c = parse_coloring(in.g, read_file(cfg.coloring_path));
        } else {
            auto [improved, rep] = improve_to_weight(c, nu_edges, cfg.weight_limit, lg);
            c = improved;
            std::ostringstream tr;
            for (const auto& line : rep.trace) tr << line << "\n";
            improvement_trace = tr.str();
        }
    }

    auto violations = properness_audit(c);
    push("properness", true, violations.empty(),
         violations.empty() ? "no clashing pairs"
                            : std::to_string(violations.size()) + " clashing pairs");

    // Cocycle identities on sampled same-component triples of vertices.
    {
        Cocycle rho = vertex_cocycle(in.g, in.mu);
        int tested = 0;
        double worst = 0;
        for (int t = 0; t < 1000 && in.g.num_vertices() > 0; ++t) {
            VertexId x = (VertexId)rng.below((uint64_t)in.g.num_vertices());
            VertexId y = (VertexId)rng.below((uint64_t)in.g.num_vertices());
            VertexId z = (VertexId)rng.below((uint64_t)in.g.num_vertices());
            if (!rho.same_component(x, y) || !rho.same_component(y, z)) continue;
            ++tested;
            worst = std::max(worst, std::fabs(rho(x, y) * rho(y, z) - rho(x, z)));
            worst = std::max(worst, std::fabs(rho(x, y) * rho(y, x) - 1.0));
        }
        push("cocycle_identity", true, worst <= cfg.tolerance,
             std::to_string(tested) + " sampled triples, worst residual " + num(worst));
    }

    // Mass transport on random finitely supported test functions.
    {
        Cocycle rho = vertex_cocycle(in.g, in.mu);
        double worst = 0;
        int tested = 0;
        for (int t = 0; t < 100 && in.g.num_vertices() > 1; ++t) {
            std::vector<std::tuple<VertexId, VertexId, double>> support;
            for (int s = 0; s < 20; ++s) {
                VertexId x = (VertexId)rng.below((uint64_t)in.g.num_vertices());
                VertexId y = (VertexId)rng.below((uint64_t)in.g.num_vertices());
                if (!rho.same_component(x, y)) continue;
                support.emplace_back(x, y, rng.unit());
            }
            auto [lhs, rhs] = mass_transport_check(in.g, in.mu, rho, support);
            double scale = std::max({1.0, std::fabs(lhs), std::fabs(rhs)});
            worst = std::max(worst, std::fabs(lhs - rhs) / scale);
            ++tested;
        }
        push("mass_transport", true, worst <= cfg.tolerance,
             std::to_string(tested) + " test functions, worst relative residual " +
                 num(worst));
    }

    // Chain records at every uncolored edge: structural validity, the
    // auxiliary multigraph with its right-degree bound, and double counting.
    std::ostringstream chains;
    {
        Cocycle rho_edges(lg.as_graph(), nu_edges);
        std::vector<VizingChainRecord> records;
        int invalid = 0;
        for (EdgeId e : c.uncolored_set()) {
            for (const auto& rec : enumerate_three_step_chains(c, e, cfg.budget, lg)) {
                if (validate_record(c, rec)) ++invalid;
                chains << serialize_record(rec);
                records.push_back(rec);
            }
        }
        push("record_validity", true, invalid == 0,
             std::to_string(records.size()) + " records, " + std::to_string(invalid) +
                 " invalid");

        bool degree_ok = true;
        std::string degree_detail;
        double dc_gap = 0;
        try {
            AuxMultigraph h = build_aux_multigraph(c, records);
            auto [lhs, rhs] = double_count_check(h, nu_edges, rho_edges);
            double scale = std::max({1.0, std::fabs(lhs), std::fabs(rhs)});
            dc_gap = std::fabs(lhs - rhs) / scale;
            degree_detail = "max right degree " + std::to_string(h.max_right_degree) +
                            " vs bound " + num(h.degree_bound);
        } catch (const std::logic_error& ex) {
            degree_ok = false;
            degree_detail = ex.what();
        }
        push("aux_degree_bound", true, degree_ok, degree_detail);
        push("double_counting", true, degree_ok && dc_gap <= cfg.tolerance,
             "relative gap " + num(dc_gap));
    }

    // Informational sections: the badness threshold and the closed-form
    // uncolored-mass bound, asserted only when their hypothesis holds.
    KBadThresholdReport kbad =
        k_bad_threshold_check(c, nu_edges, cfg.weight_limit, lg, cfg.budget);
    MassBoundReport mass = uncolored_mass_bound(c, nu_edges, cfg.weight_limit, delta);
    push("k_bad_threshold", kbad.hypothesis_met,
         !kbad.hypothesis_met || kbad.final_path_weight_failures == 0, kbad.text());
    push("uncolored_mass_bound", mass.hypothesis_met,
         !mass.hypothesis_met || mass.holds, mass.text());

    bool all_ok = true;
    for (const auto& ck : checks)
        if (ck.asserted && !ck.ok) all_ok = false;

    fs::create_directories(cfg.out_dir);
    std::ostringstream report;
    for (const auto& ck : checks)
        report << ck.name << ": " << (ck.ok ? "pass" : "FAIL")
               << (ck.asserted ? "" : " [informational]") << " -- " << ck.detail << "\n";
    report << "result=" << (all_ok ? "pass" : "fail") << "\n";
    write_file(fs::path(cfg.out_dir) / "report.txt", report.str());
    write_file(fs::path(cfg.out_dir) / "chains.txt", chains.str());
    write_file(fs::path(cfg.out_dir) / "coloring.txt", serialize_coloring(c));
    if (!improvement_trace.empty())
        write_file(fs::path(cfg.out_dir) / "trace.txt", improvement_trace);

    json meta;
    meta["config"] = config_json(cfg, "audit");
    meta["vertices"] = in.g.num_vertices();
    meta["edges"] = in.g.num_edges();
    meta["max_degree"] = delta;
    meta["uncolored"] = c.num_uncolored();
    json jchecks = json::array();
    for (const auto& ck : checks)
        jchecks.push_back({{"name", ck.name},
                           {"asserted", ck.asserted},
                           {"ok", ck.ok},
                           {"detail", ck.detail}});
    meta["checks"] = jchecks;
    meta["pass"] = all_ok;
    write_file(fs::path(cfg.out_dir) / "meta.json", meta.dump(2) + "\n");

    std::cout << (all_ok ? "audit: pass" : "audit: fail") << "\n";
    return all_ok ? 0 : 1;
}

// ------------------------------------------------------------------ gen ---

// Utility: dump a deterministic random instance as an edge list (plus an
// optional log-uniform weight file), so pipeline runs are reproducible from
// plain-text inputs alone.
int cmd_gen(int n, int max_deg, uint64_t seed, double weight_decades,
            const std::string& out_dir) {
    Graph g = rand_graph(n, max_deg, seed);
    fs::create_directories(out_dir);
    std::ostringstream edges;
    edges << "# rand n=" << n << " max_deg=" << max_deg << " seed=" << seed << "\n";
    for (EdgeId e = 0; e < g.num_edges(); ++e)
        edges << "v" << g.edge(e).first << " v" << g.edge(e).second << "\n";
    write_file(fs::path(out_dir) / "graph.txt", edges.str());
    if (weight_decades > 0) {
        SplitMix64 rng(seed ^ 0x77ull);
        std::ostringstream w;
        w << "# log-uniform weights over " << weight_decades << " decades\n";
        w.precision(17);
        // Isolated vertices never appear in the edge list, so the reloaded
        // graph does not know them; weight only the vertices it will have.
        for (VertexId v = 0; v < g.num_vertices(); ++v)
            if (g.degree(v) > 0)
                w << "v" << v << " " << std::pow(10.0, -weight_decades * rng.unit()) << "\n";
        write_file(fs::path(out_dir) / "weights.txt", w.str());
    }
    std::cout << "gen: " << g.num_vertices() << " vertices, " << g.num_edges()
              << " edges -> " << out_dir << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Edge-coloring laboratory driver"};
    app.require_subcommand(1);

    RunConfig cfg;
    int gen_n = 100, gen_deg = 4;
    double gen_decades = 0;

    auto add_common = [&](CLI::App* sub, bool need_graph) {
        auto* g = sub->add_option("--graph", cfg.graph_path, "edge-list input file");
        if (need_graph) g->required();
        sub->add_option("--weights", cfg.weights_path,
                        "vertex-weight file (default: uniform)");
        sub->add_option("--seed", cfg.seed, "seed for all sampled checks");
        sub->add_option("--out", cfg.out_dir, "output directory");
        sub->add_option("--L", cfg.weight_limit, "improvement weight target");
        sub->add_option("--budget", cfg.budget, "chain records per uncolored edge");
        sub->add_option("--tolerance", cfg.tolerance, "numeric check tolerance");
    };

    auto* color = app.add_subcommand("color", "run the full coloring pipeline");
    add_common(color, true);
    color->add_option("--schedule", cfg.schedule, "weight schedule")
        ->check(CLI::IsMember({"desk", "paper-faithful"}));

    auto* audit = app.add_subcommand("audit", "run the measure and chain audits");
    add_common(audit, true);
    audit->add_option("--coloring", cfg.coloring_path,
                      "audit this coloring file instead of the improved state");

    auto* gen = app.add_subcommand("gen", "dump a deterministic random instance");
    gen->add_option("--n", gen_n, "vertex count")->required();
    gen->add_option("--max-deg", gen_deg, "degree cap")->required();
    gen->add_option("--seed", cfg.seed, "generator seed");
    gen->add_option("--decades", gen_decades,
                    "also emit log-uniform weights spanning this many decades");
    gen->add_option("--out", cfg.out_dir, "output directory");

    CLI11_PARSE(app, argc, argv);

    try {
        if (color->parsed()) return cmd_color(cfg);
        if (audit->parsed()) return cmd_audit(cfg);
        return cmd_gen(gen_n, gen_deg, cfg.seed, gen_decades, cfg.out_dir);
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    }
}
