#include "vizlab/measure.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <tuple>

namespace vizlab {

double WeightedMeasure::total() const {
    return std::accumulate(weights.begin(), weights.end(), 0.0);
}

bool WeightedMeasure::is_normalized(double tol) const {
    return std::abs(total() - 1.0) <= tol;
}

WeightedMeasure WeightedMeasure::normalized() const {
    check_positive();
    double t = total();
    WeightedMeasure out = *this;
    for (double& w : out.weights) w /= t;
    return out;
}

WeightedMeasure WeightedMeasure::uniform(int n) {
    if (n <= 0) throw std::invalid_argument("uniform measure needs a nonempty ground set");
    return WeightedMeasure{std::vector<double>(n, 1.0 / n)};
}

void WeightedMeasure::check_positive() const {
    for (int i = 0; i < size(); ++i) {
        if (!(weights[i] > 0.0) || !std::isfinite(weights[i]))
            throw std::invalid_argument("weight at index " + std::to_string(i) +
                                        " is not strictly positive and finite");
    }
}

Cocycle::Cocycle(const Graph& g, WeightedMeasure w)
    : w_(std::move(w)), comp_(g.component_labels()) {
    if (w_.size() != g.num_vertices())
        throw std::invalid_argument("measure size does not match the vertex count");
    w_.check_positive();
}

double Cocycle::operator()(int x, int y) const {
    if (comp_[x] != comp_[y])
        throw std::invalid_argument("cocycle evaluated across components: " +
                                    std::to_string(x) + " vs " + std::to_string(y));
    return w_.weights[y] / w_.weights[x];
}

Cocycle vertex_cocycle(const Graph& g, const WeightedMeasure& mu) {
    return Cocycle(g, mu);
}

WeightedMeasure lift_to_edge_measure(const WeightedMeasure& mu, const Graph& g) {
    if (g.num_edges() == 0)
        throw std::invalid_argument("cannot lift a measure onto an edgeless graph");
    if (mu.size() != g.num_vertices())
        throw std::invalid_argument("measure size does not match the vertex count");
    mu.check_positive();
    WeightedMeasure out;
    out.weights.resize(g.num_edges());
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        auto [x, y] = g.edge(e);
        out.weights[e] = (mu[x] + mu[y]) / 2.0;
    }
    return out.normalized();
}

PowerDecomposition power_decomposition(const Graph& g) {
    PowerDecomposition dec;
    dec.delta = g.max_degree();
    const int diam = g.diameter();
    for (int k = 1; k <= diam; ++k) {
        Graph pk = power_graph(g, k);
        // the distance-k graph has max degree at most Delta^k, so first-fit
        // stays below the retained class count 2 * Delta^k
        double retained = 2.0 * std::pow(static_cast<double>(dec.delta), k);
        int palette = 2 * pk.max_degree() - 1;
        std::vector<int> cls = palette > 0 ? greedy_proper_edge_coloring(pk, palette)
                                           : std::vector<int>{};
        int used = 0;
        for (int c : cls) used = std::max(used, c);
        std::vector<std::vector<std::pair<VertexId, VertexId>>> level(used);
        for (EdgeId e = 0; e < pk.num_edges(); ++e) {
            auto [u, v] = pk.edge(e);
            if (u > v) std::swap(u, v);
            level[cls[e] - 1].emplace_back(u, v);
        }
        if (static_cast<double>(used) > retained)
            throw std::logic_error("distance-k matching classes exceed the retained count");
        dec.classes.push_back(std::move(level));
        dec.num_classes.push_back(retained);
    }
    return dec;
}

std::optional<std::tuple<int, int, int>> decomposition_triple(const PowerDecomposition& dec,
                                                              VertexId x, VertexId y) {
    std::optional<std::tuple<int, int, int>> found;
    for (int k = 1; k <= static_cast<int>(dec.classes.size()); ++k) {
        const auto& level = dec.classes[k - 1];
        for (int i = 0; i < static_cast<int>(level.size()); ++i) {
            for (auto [u, v] : level[i]) {
                int j = -1;
                if (u == x && v == y) j = 0;  // lower endpoint in half 0
                if (v == x && u == y) j = 1;
                if (j < 0) continue;
                if (found) throw std::logic_error("ordered pair covered by two triples");
                found = std::make_tuple(k, i + 1, j);
            }
        }
    }
    return found;
}

OmegaDensity omega(const Graph& g, const WeightedMeasure& mu, const PowerDecomposition& dec) {
    mu.check_positive();
    if (mu.size() != g.num_vertices())
        throw std::invalid_argument("measure size does not match the vertex count");
    OmegaDensity out;
    out.omega.assign(g.num_vertices(), 1.0);
    for (int k = 1; k <= static_cast<int>(dec.classes.size()); ++k) {
        double scale = std::pow(0.5, k) / dec.num_classes[k - 1];
        for (const auto& cls : dec.classes[k - 1]) {
            for (auto [u, v] : cls) {
                out.omega[u] += scale * (mu[v] / mu[u]);
                out.omega[v] += scale * (mu[u] / mu[v]);
            }
        }
    }
    return out;
}

OmegaDensity omega_direct(const Graph& g, const WeightedMeasure& mu) {
    mu.check_positive();
    if (mu.size() != g.num_vertices())
        throw std::invalid_argument("measure size does not match the vertex count");
    const int n = g.num_vertices();
    const double delta = g.max_degree();
    OmegaDensity out;
    out.omega.assign(n, 1.0);

    auto source_sum = [&](VertexId s) {
        // BFS from s; each vertex at distance k contributes rho(s,.) once
        // with the level's density weight
        std::vector<int> dist(n, -1);
        std::vector<VertexId> frontier{s};
        dist[s] = 0;
        double acc = 0.0;
        int k = 1;
        while (!frontier.empty()) {
            std::vector<VertexId> next;
            double scale = std::pow(0.5, k) / (2.0 * std::pow(delta, k));
            for (VertexId u : frontier) {
                for (auto [w, e] : g.incident(u)) {
                    (void)e;
                    if (dist[w] >= 0) continue;
                    dist[w] = k;
                    acc += scale * (mu[w] / mu[s]);
                    next.push_back(w);
                }
            }
            frontier = std::move(next);
            ++k;
        }
        return acc;
    };

    int threads = std::max(1u, std::thread::hardware_concurrency());
    threads = std::min(threads, n);
    std::vector<std::thread> pool;
    std::atomic<int> cursor{0};
    for (int t = 0; t < threads; ++t) {
        pool.emplace_back([&] {
            for (int s; (s = cursor.fetch_add(1)) < n;) out.omega[s] += source_sum(s);
        });
    }
    for (auto& th : pool) th.join();
    return out;
}

BoundedMeasure bounded_equivalent_measure(const WeightedMeasure& mu, const Graph& g) {
    OmegaDensity dens = omega_direct(g, mu);
    WeightedMeasure scaled;
    scaled.weights.resize(g.num_vertices());
    for (int x = 0; x < g.num_vertices(); ++x) scaled.weights[x] = dens[x] * mu[x];
    double norm = scaled.total();
    BoundedMeasure out{scaled.normalized(), Cocycle(g, scaled.normalized()), std::move(dens),
                       norm};
    const double bound = 4.0 * g.max_degree();
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        auto [x, y] = g.edge(e);
        double r = out.rho(x, y);
        if (r > bound * (1 + 1e-9) || r < 1.0 / bound * (1 - 1e-9))
            throw std::logic_error("edge cocycle " + std::to_string(r) +
                                   " escapes the guaranteed bound " + std::to_string(bound));
    }
    return out;
}

std::pair<double, double> mass_transport_check(
    const Graph& g, const WeightedMeasure& mu, const Cocycle& rho,
    const std::vector<std::tuple<VertexId, VertexId, double>>& support) {
    (void)g;
    double lhs = 0.0, rhs = 0.0;
    for (auto [x, y, f] : support) {
        if (f < 0) throw std::invalid_argument("test function must be nonnegative");
        lhs += mu[y] * f;
        rhs += mu[x] * f * rho(x, y);
    }
    return {lhs, rhs};
}

WeightedMeasure parse_weights(const std::string& text, const std::vector<std::string>& names) {
    std::map<std::string, int> index;
    for (int i = 0; i < static_cast<int>(names.size()); ++i) index[names[i]] = i;
    std::vector<double> w(names.size(), -1.0);
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string name;
        if (!(ls >> name)) continue;
        double value;
        std::string tail;
        if (!(ls >> value) || (ls >> tail))
            throw std::invalid_argument("weights line " + std::to_string(lineno) +
                                        ": expected `vertex weight`");
        auto it = index.find(name);
        if (it == index.end())
            throw std::invalid_argument("weights line " + std::to_string(lineno) +
                                        ": unknown vertex " + name);
        if (w[it->second] >= 0)
            throw std::invalid_argument("weights line " + std::to_string(lineno) +
                                        ": duplicate weight for " + name);
        w[it->second] = value;
    }
    for (int i = 0; i < static_cast<int>(w.size()); ++i) {
        if (w[i] < 0)
            throw std::invalid_argument("no weight given for vertex " + names[i]);
    }
    WeightedMeasure out{std::move(w)};
    out.check_positive();
    return out.normalized();
}

}  // namespace vizlab
