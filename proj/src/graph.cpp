#include "vizlab/graph.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace vizlab {

Graph Graph::from_edges(const std::vector<std::pair<VertexId, VertexId>>& edge_list,
                        int num_vertices) {
    Graph g;
    int n = num_vertices;
    for (auto [u, v] : edge_list) {
        if (u < 0 || v < 0) throw std::invalid_argument("negative vertex id");
        n = std::max(n, std::max(u, v) + 1);
    }
    g.adj_.resize(n);
    std::set<std::pair<VertexId, VertexId>> seen;
    for (size_t idx = 0; idx < edge_list.size(); ++idx) {
        auto [u, v] = edge_list[idx];
        if (u == v) {
            throw std::invalid_argument("loop at vertex " + std::to_string(u) +
                                        " (edge entry " + std::to_string(idx) + ")");
        }
        auto key = std::minmax(u, v);
        if (!seen.insert(key).second) {
            throw std::invalid_argument("duplicate edge {" + std::to_string(u) + "," +
                                        std::to_string(v) + "} (edge entry " +
                                        std::to_string(idx) + ")");
        }
        EdgeId e = static_cast<EdgeId>(g.edges_.size());
        g.edges_.emplace_back(u, v);
        g.adj_[u].emplace_back(v, e);
        g.adj_[v].emplace_back(u, e);
    }
    for (const auto& nb : g.adj_) {
        g.max_degree_ = std::max(g.max_degree_, static_cast<int>(nb.size()));
    }
    return g;
}

std::optional<EdgeId> Graph::find_edge(VertexId u, VertexId v) const {
    for (auto [w, e] : adj_[u]) {
        if (w == v) return e;
    }
    return std::nullopt;
}

int Graph::distance(VertexId u, VertexId v) const {
    if (u == v) return 0;
    std::vector<int> dist(num_vertices(), kUnreachable);
    std::deque<VertexId> queue{u};
    dist[u] = 0;
    while (!queue.empty()) {
        VertexId x = queue.front();
        queue.pop_front();
        for (auto [y, e] : adj_[x]) {
            (void)e;
            if (dist[y] == kUnreachable) {
                dist[y] = dist[x] + 1;
                if (y == v) return dist[y];
                queue.push_back(y);
            }
        }
    }
    return kUnreachable;
}

std::vector<VertexId> Graph::component_of(VertexId x) const {
    std::vector<char> visited(num_vertices(), 0);
    std::vector<VertexId> out{x};
    visited[x] = 1;
    for (size_t i = 0; i < out.size(); ++i) {
        for (auto [y, e] : adj_[out[i]]) {
            (void)e;
            if (!visited[y]) {
                visited[y] = 1;
                out.push_back(y);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> Graph::component_labels() const {
    std::vector<int> label(num_vertices(), -1);
    for (VertexId s = 0; s < num_vertices(); ++s) {
        if (label[s] != -1) continue;
        label[s] = s;
        std::vector<VertexId> stack{s};
        while (!stack.empty()) {
            VertexId x = stack.back();
            stack.pop_back();
            for (auto [y, e] : adj_[x]) {
                (void)e;
                if (label[y] == -1) {
                    label[y] = s;
                    stack.push_back(y);
                }
            }
        }
    }
    return label;
}

int Graph::diameter() const {
    int best = 0;
    std::vector<int> dist(num_vertices());
    for (VertexId s = 0; s < num_vertices(); ++s) {
        std::fill(dist.begin(), dist.end(), kUnreachable);
        std::deque<VertexId> queue{s};
        dist[s] = 0;
        while (!queue.empty()) {
            VertexId x = queue.front();
            queue.pop_front();
            best = std::max(best, dist[x]);
            for (auto [y, e] : adj_[x]) {
                (void)e;
                if (dist[y] == kUnreachable) {
                    dist[y] = dist[x] + 1;
                    queue.push_back(y);
                }
            }
        }
    }
    return best;
}

LineGraphView::LineGraphView(const Graph& g) {
    adj_.resize(g.num_edges());
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
        const auto& inc = g.incident(v);
        for (size_t i = 0; i < inc.size(); ++i) {
            for (size_t j = i + 1; j < inc.size(); ++j) {
                EdgeId e = inc[i].second, f = inc[j].second;
                // edges meeting at v share exactly this one vertex (simple graph)
                adj_[e].push_back(f);
                adj_[f].push_back(e);
            }
        }
    }
    for (auto& nb : adj_) {
        std::sort(nb.begin(), nb.end());
        max_degree_ = std::max(max_degree_, static_cast<int>(nb.size()));
    }
}

std::optional<int> LineGraphView::distance_within(EdgeId e, EdgeId f, int maxd) const {
    if (e == f) return 0;
    if (maxd <= 0) return std::nullopt;
    std::vector<int> dist(num_nodes(), kUnreachable);
    std::deque<EdgeId> queue{e};
    dist[e] = 0;
    while (!queue.empty()) {
        EdgeId x = queue.front();
        queue.pop_front();
        if (dist[x] == maxd) break;
        for (EdgeId y : adj_[x]) {
            if (dist[y] == kUnreachable) {
                dist[y] = dist[x] + 1;
                if (y == f) return dist[y];
                queue.push_back(y);
            }
        }
    }
    return std::nullopt;
}

std::vector<EdgeId> LineGraphView::ball(const std::vector<EdgeId>& seeds, int maxd) const {
    std::vector<int> dist(num_nodes(), kUnreachable);
    std::deque<EdgeId> queue;
    std::vector<EdgeId> out;
    for (EdgeId s : seeds) {
        if (dist[s] == kUnreachable) {
            dist[s] = 0;
            queue.push_back(s);
            out.push_back(s);
        }
    }
    while (!queue.empty()) {
        EdgeId x = queue.front();
        queue.pop_front();
        if (dist[x] == maxd) continue;
        for (EdgeId y : adj_[x]) {
            if (dist[y] == kUnreachable) {
                dist[y] = dist[x] + 1;
                queue.push_back(y);
                out.push_back(y);
            }
        }
    }
    return out;
}

Graph LineGraphView::as_graph() const {
    std::vector<std::pair<VertexId, VertexId>> edge_list;
    for (int e = 0; e < num_nodes(); ++e) {
        for (EdgeId f : adj_[e]) {
            if (e < f) edge_list.emplace_back(e, f);
        }
    }
    return Graph::from_edges(edge_list, num_nodes());
}

Graph rand_graph(int n, int max_deg, uint64_t seed) {
    SplitMix64 rng(seed);
    const long long target = static_cast<long long>(n) * max_deg / 3;
    const long long max_attempts = 20 * std::max<long long>(target, 1);
    std::vector<int> degree(n, 0);
    std::set<std::pair<VertexId, VertexId>> seen;
    std::vector<std::pair<VertexId, VertexId>> edge_list;
    for (long long attempt = 0;
         attempt < max_attempts && static_cast<long long>(edge_list.size()) < target;
         ++attempt) {
        VertexId u = static_cast<VertexId>(rng.below(n));
        VertexId v = static_cast<VertexId>(rng.below(n));
        if (u == v) continue;
        if (degree[u] >= max_deg || degree[v] >= max_deg) continue;
        auto key = std::minmax(u, v);
        if (seen.count(key)) continue;
        seen.insert(key);
        edge_list.emplace_back(u, v);
        ++degree[u];
        ++degree[v];
    }
    return Graph::from_edges(edge_list, n);
}

namespace fixtures {
Graph path4() { return Graph::from_edges({{0, 1}, {1, 2}, {2, 3}}); }
Graph star3() { return Graph::from_edges({{0, 1}, {0, 2}, {0, 3}}); }
Graph c5() { return Graph::from_edges({{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}}); }
Graph k2() { return Graph::from_edges({{0, 1}}); }
}  // namespace fixtures

std::pair<Graph, std::vector<std::string>> parse_edge_list(const std::string& text) {
    std::map<std::string, VertexId> ids;
    std::vector<std::string> names;
    std::vector<std::pair<VertexId, VertexId>> edge_list;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    auto intern = [&](const std::string& tok) {
        auto it = ids.find(tok);
        if (it != ids.end()) return it->second;
        VertexId id = static_cast<VertexId>(names.size());
        ids.emplace(tok, id);
        names.push_back(tok);
        return id;
    };
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string a, b, extra;
        if (!(ls >> a)) continue;  // blank
        if (!(ls >> b) || (ls >> extra)) {
            throw std::invalid_argument("edge list parse error at line " +
                                        std::to_string(lineno) + ": expected 'u v'");
        }
        VertexId ua = intern(a);
        VertexId ub = intern(b);
        edge_list.emplace_back(ua, ub);
    }
    Graph g = Graph::from_edges(edge_list);
    return {std::move(g), std::move(names)};
}

std::vector<int> greedy_proper_edge_coloring(const Graph& g, int palette_size) {
    const int need = std::max(2 * g.max_degree() - 1, 1);
    if (palette_size < need) {
        throw std::invalid_argument("palette of size " + std::to_string(palette_size) +
                                    " below greedy requirement " + std::to_string(need));
    }
    std::vector<int> color(g.num_edges(), 0);
    std::vector<char> used(palette_size + 1, 0);
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        std::fill(used.begin(), used.end(), 0);
        for (VertexId v : {g.edge(e).first, g.edge(e).second}) {
            for (auto [w, f] : g.incident(v)) {
                (void)w;
                if (color[f] > 0) used[color[f]] = 1;
            }
        }
        int c = 1;
        while (used[c]) ++c;
        color[e] = c;
    }
    return color;
}

Graph power_graph(const Graph& g, int k) {
    if (k < 1) throw std::invalid_argument("power_graph requires k >= 1");
    std::vector<std::pair<VertexId, VertexId>> edge_list;
    std::vector<int> dist(g.num_vertices());
    for (VertexId s = 0; s < g.num_vertices(); ++s) {
        std::fill(dist.begin(), dist.end(), kUnreachable);
        std::deque<VertexId> queue{s};
        dist[s] = 0;
        while (!queue.empty()) {
            VertexId x = queue.front();
            queue.pop_front();
            if (dist[x] == k) {
                if (s < x) edge_list.emplace_back(s, x);
                continue;
            }
            for (auto [y, e] : g.incident(x)) {
                (void)e;
                if (dist[y] == kUnreachable) {
                    dist[y] = dist[x] + 1;
                    queue.push_back(y);
                }
            }
        }
    }
    return Graph::from_edges(edge_list, g.num_vertices());
}

}  // namespace vizlab
