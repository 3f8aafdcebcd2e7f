#pragma once

#include <functional>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "vizlab/graph.hpp"

namespace vizlab {

/// Strictly positive weights on vertices (or edges), with explicit
/// normalization. Total mass need not be 1; normalized() divides it out.
struct WeightedMeasure {
    std::vector<double> weights;

    int size() const { return static_cast<int>(weights.size()); }
    double operator[](int i) const { return weights[i]; }
    double total() const;
    bool is_normalized(double tol = 1e-12) const;
    WeightedMeasure normalized() const;

    static WeightedMeasure uniform(int n);

    /// Throws std::invalid_argument unless every weight is strictly positive.
    void check_positive() const;
};

/// Ratio cocycle rho(x,y) = w(y)/w(x) restricted to same-component pairs.
class Cocycle {
public:
    Cocycle(const Graph& g, WeightedMeasure w);

    /// Throws std::invalid_argument on cross-component evaluation.
    double operator()(int x, int y) const;
    bool same_component(int x, int y) const { return comp_[x] == comp_[y]; }

private:
    WeightedMeasure w_;
    std::vector<int> comp_;
};

/// rho_mu(x,y) = mu(y)/mu(x) inside components of g.
Cocycle vertex_cocycle(const Graph& g, const WeightedMeasure& mu);

/// Edge measure proportional to the endpoint sums, normalized:
/// mu_hat({x,y}) = (mu(x) + mu(y)) / (2 * mu(V)). Throws on edgeless graphs.
WeightedMeasure lift_to_edge_measure(const WeightedMeasure& mu, const Graph& g);

/// For every distance k up to the diameter, the distance-k graph is properly
/// edge colored into matchings; each matched pair is split by the vertex
/// order (lower endpoint into half 0) carrying mutually inverse partner
/// bijections. Every same-component ordered pair (x,y) lands in exactly one
/// (k, class, half) triple.
struct PowerDecomposition {
    int delta = 0;
    /// classes[k-1][i] lists matched pairs (u, v) with u < v; the retained
    /// class count per level is 2 * Delta^k even when trailing classes are
    /// empty, so the density denominators match the construction.
    std::vector<std::vector<std::vector<std::pair<VertexId, VertexId>>>> classes;
    /// Retained class count 2 * Delta^k per level (as a double; the value is
    /// only used as a denominator).
    std::vector<double> num_classes;
};

PowerDecomposition power_decomposition(const Graph& g);

/// Looks up the unique (k, class, half) triple with partner(x) == y, as
/// (k, i, j); used by the uniqueness audits.
std::optional<std::tuple<int, int, int>> decomposition_triple(const PowerDecomposition& dec,
                                                              VertexId x, VertexId y);

/// Density of the averaged push-forward measure against mu:
/// Omega(x) = 1 + sum_k 2^-k (2 Delta^k)^-1 sum over partners y of x at
/// distance k of rho_mu(x,y). Always >= 1; equals 1 on isolated vertices.
struct OmegaDensity {
    std::vector<double> omega;
    double operator[](int i) const { return omega[i]; }
};

OmegaDensity omega(const Graph& g, const WeightedMeasure& mu, const PowerDecomposition& dec);

/// Same density evaluated without the decomposition, by per-source BFS
/// (every distance-k neighbor contributes exactly once); parallel over
/// sources. Agrees with omega() to rounding.
OmegaDensity omega_direct(const Graph& g, const WeightedMeasure& mu);

/// The bounded-cocycle equivalent measure nu(x) = Omega(x) mu(x) normalized,
/// its cocycle, and the normalization constant that was divided out.
struct BoundedMeasure {
    WeightedMeasure nu;
    Cocycle rho;
    OmegaDensity density;
    double normalization = 0;  // sum of Omega * mu before normalizing
};

/// Throws std::logic_error if any edge cocycle leaves [1/(4 Delta), 4 Delta]
/// (the construction guarantees the bound; a violation is a bug).
BoundedMeasure bounded_equivalent_measure(const WeightedMeasure& mu, const Graph& g);

/// Both sides of the mass-transport identity for a finitely supported test
/// function on same-component ordered pairs:
///   lhs = sum_y mu(y) sum_x F(x,y),  rhs = sum_x mu(x) sum_y F(x,y) rho(x,y).
std::pair<double, double> mass_transport_check(
    const Graph& g, const WeightedMeasure& mu, const Cocycle& rho,
    const std::vector<std::tuple<VertexId, VertexId, double>>& support);

/// Parses `vertex weight` lines ('#' comments); vertex names resolve through
/// the token table, weights are decimal or scientific. Every vertex must
/// receive a weight exactly once.
WeightedMeasure parse_weights(const std::string& text, const std::vector<std::string>& names);

}  // namespace vizlab
