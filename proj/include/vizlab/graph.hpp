#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace vizlab {

using VertexId = int;
using EdgeId = int;

constexpr int kUnreachable = -1;  // sentinel distance for disconnected pairs

/// Finite simple graph with dense vertex/edge ids. Immutable after
/// construction; Delta() is the true maximum degree.
class Graph {
public:
    Graph() = default;

    /// Builds from an explicit edge list. Vertex count is max id + 1 unless
    /// a larger count is forced via num_vertices (for isolated vertices).
    /// Throws std::invalid_argument on loops or duplicate edges.
    static Graph from_edges(const std::vector<std::pair<VertexId, VertexId>>& edge_list,
                            int num_vertices = 0);

    int num_vertices() const { return static_cast<int>(adj_.size()); }
    int num_edges() const { return static_cast<int>(edges_.size()); }
    int max_degree() const { return max_degree_; }

    std::pair<VertexId, VertexId> edge(EdgeId e) const { return edges_[e]; }
    bool edge_contains(EdgeId e, VertexId v) const {
        return edges_[e].first == v || edges_[e].second == v;
    }
    VertexId other_end(EdgeId e, VertexId v) const {
        return edges_[e].first == v ? edges_[e].second : edges_[e].first;
    }
    int degree(VertexId v) const { return static_cast<int>(adj_[v].size()); }

    /// Incident (neighbor, edge) pairs in edge-insertion order.
    const std::vector<std::pair<VertexId, EdgeId>>& incident(VertexId v) const {
        return adj_[v];
    }

    /// Edge id of {u,v} if present.
    std::optional<EdgeId> find_edge(VertexId u, VertexId v) const;

    /// BFS distance; kUnreachable if u and v are in different components.
    int distance(VertexId u, VertexId v) const;

    /// Vertices of the connected component of x, sorted.
    std::vector<VertexId> component_of(VertexId x) const;

    /// Component label per vertex (labels are minimal member ids).
    std::vector<int> component_labels() const;

    /// Largest finite eccentricity over the graph (max over components).
    int diameter() const;

private:
    std::vector<std::pair<VertexId, VertexId>> edges_;
    std::vector<std::vector<std::pair<VertexId, EdgeId>>> adj_;
    int max_degree_ = 0;
};

/// Line graph of g: nodes are EdgeIds, adjacent iff the edges share exactly
/// one vertex. Max degree is at most 2*Delta(g) - 2.
class LineGraphView {
public:
    explicit LineGraphView(const Graph& g);

    int num_nodes() const { return static_cast<int>(adj_.size()); }
    const std::vector<EdgeId>& neighbors(EdgeId e) const { return adj_[e]; }
    int max_degree() const { return max_degree_; }

    /// Exact distance between edges e and f, or nullopt if it exceeds maxd.
    std::optional<int> distance_within(EdgeId e, EdgeId f, int maxd) const;

    /// All nodes within distance maxd of any seed (the seeds included).
    std::vector<EdgeId> ball(const std::vector<EdgeId>& seeds, int maxd) const;

    /// Materializes the line graph as a Graph on EdgeIds.
    Graph as_graph() const;

private:
    std::vector<std::vector<EdgeId>> adj_;
    int max_degree_ = 0;
};

/// splitmix64; the sole PRNG used for reproducible instance generation.
struct SplitMix64 {
    uint64_t state;
    explicit SplitMix64(uint64_t seed) : state(seed) {}
    uint64_t next() {
        uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    /// Uniform in [0, n).
    uint64_t below(uint64_t n) { return next() % n; }
    /// Uniform in [0, 1).
    double unit() { return (next() >> 11) * 0x1.0p-53; }
};

/// Deterministic random graph: repeated uniform pair sampling rejecting
/// loops, duplicates and degree overflow past max_deg. Targets
/// floor(n*max_deg/3) edges with a capped attempt budget.
Graph rand_graph(int n, int max_deg, uint64_t seed);

// Named fixtures used across the test corpus.
namespace fixtures {
Graph path4();  // a-b-c-d, edges e1={0,1}, e2={1,2}, e3={2,3}
Graph star3();  // center 0, leaves 1..3, edges s0,s1,s2
Graph c5();     // 5-cycle 0-1-2-3-4-0
Graph k2();     // single edge {0,1}; pairs with weights (1/11, 10/11)
}  // namespace fixtures

/// Parses the `u v` per line edge-list format; '#' starts a comment; vertex
/// names are arbitrary tokens mapped to dense ids in first-appearance order.
/// Returns the graph and the token table (index = VertexId).
std::pair<Graph, std::vector<std::string>> parse_edge_list(const std::string& text);

/// Proper edge coloring by first-fit over EdgeId order; uses at most
/// 2*Delta - 1 colors. Throws if palette_size < 2*Delta - 1.
std::vector<int> greedy_proper_edge_coloring(const Graph& g, int palette_size);

/// Graph on the same vertex set whose edges join pairs at distance exactly k.
Graph power_graph(const Graph& g, int k);

}  // namespace vizlab
