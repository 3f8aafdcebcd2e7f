#include "vizlab/coloring.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <sstream>
#include <stdexcept>

namespace vizlab {

PartialColoring::PartialColoring(const Graph& g)
    : g_(&g),
      palette_(g.max_degree() + 1),
      color_(g.num_edges(), 0),
      used_(g.num_vertices(), 0) {
    if (palette_ > 62) {
        throw std::invalid_argument("max degree above 61 is not supported");
    }
}

void PartialColoring::set(EdgeId e, Color c) {
    if (c < 0 || c > palette_) {
        throw std::invalid_argument("color " + std::to_string(c) + " outside palette [" +
                                    std::to_string(palette_) + "]");
    }
    Color old = color_[e];
    if (old == c) return;
    auto [u, v] = g_->edge(e);
    color_[e] = c;
    if (old > 0) --num_colored_;
    if (c > 0) ++num_colored_;
    // rebuild the two endpoint masks; degrees are bounded by Delta
    for (VertexId x : {u, v}) {
        uint64_t m = 0;
        for (auto [w, f] : g_->incident(x)) {
            (void)w;
            if (color_[f] > 0) m |= 1ull << color_[f];
        }
        used_[x] = m;
    }
}

std::vector<Color> PartialColoring::missing_colors(VertexId x) const {
    std::vector<Color> out;
    for (Color c = 1; c <= palette_; ++c) {
        if (is_missing(x, c)) out.push_back(c);
    }
    return out;
}

Color PartialColoring::min_missing(VertexId x) const {
    for (Color c = 1; c <= palette_; ++c) {
        if (is_missing(x, c)) return c;
    }
    throw std::logic_error("saturated vertex: palette exceeds degree, unreachable");
}

std::vector<EdgeId> PartialColoring::uncolored_set() const {
    std::vector<EdgeId> out;
    for (EdgeId e = 0; e < g_->num_edges(); ++e) {
        if (color_[e] == 0) out.push_back(e);
    }
    return out;
}

std::vector<EdgeId> PartialColoring::colored_set() const {
    std::vector<EdgeId> out;
    for (EdgeId e = 0; e < g_->num_edges(); ++e) {
        if (color_[e] > 0) out.push_back(e);
    }
    return out;
}

std::optional<EdgeId> PartialColoring::edge_with_color(VertexId x, Color c) const {
    std::optional<EdgeId> best;
    for (auto [w, f] : g_->incident(x)) {
        (void)w;
        if (color_[f] == c && (!best || f < *best)) best = f;
    }
    return best;
}

std::vector<PropernessViolation> properness_audit(const PartialColoring& c) {
    const Graph& g = c.graph();
    std::vector<PropernessViolation> out;
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
        const auto& inc = g.incident(v);
        bool bad = false;
        for (size_t i = 0; i < inc.size() && !bad; ++i) {
            for (size_t j = i + 1; j < inc.size() && !bad; ++j) {
                EdgeId e = inc[i].second, f = inc[j].second;
                if (c.color(e) > 0 && c.color(e) == c.color(f)) {
                    out.push_back({v, std::min(e, f), std::max(e, f)});
                    bad = true;
                }
            }
        }
    }
    return out;
}

std::optional<int> Chain::index_of(EdgeId f) const {
    int found = -1, count = 0;
    for (int i = 0; i < length(); ++i) {
        if (edges[i] == f) {
            found = i;
            ++count;
        }
    }
    if (count != 1) return std::nullopt;
    return found + 1;
}

Chain Chain::concat(const Chain& q) const {
    Chain out = *this;
    out.edges.insert(out.edges.end(), q.edges.begin(), q.edges.end());
    return out;
}

bool is_chain(const Graph& g, const Chain& p) {
    for (int i = 0; i + 1 < p.length(); ++i) {
        auto [a, b] = g.edge(p.edges[i]);
        if (!g.edge_contains(p.edges[i + 1], a) && !g.edge_contains(p.edges[i + 1], b)) {
            return false;
        }
    }
    return true;
}

namespace {

// Raw shift with no precondition checks; callers guarantee shiftability.
PartialColoring apply_shift(const PartialColoring& c, const Chain& p) {
    PartialColoring out = c;
    const int l = p.length();
    for (int i = 0; i + 1 < l; ++i) {
        out.set(p.edges[i], c.color(p.edges[i + 1]));
    }
    if (l >= 1) out.set(p.edges[l - 1], 0);
    return out;
}

}  // namespace

ChainClassification classify_chain(const PartialColoring& c, const Chain& p) {
    assert(is_chain(c.graph(), p));
    ChainClassification r;
    // edge injectivity
    {
        std::set<EdgeId> seen;
        for (EdgeId e : p.edges) {
            if (!seen.insert(e).second) {
                r.witness = "edge " + std::to_string(e) + " repeats";
                return r;
            }
        }
        r.edge_injective = true;
    }
    // shiftable: nonempty, e_0 uncolored, the rest colored
    if (p.empty()) {
        r.witness = "empty chain is not shiftable";
        return r;
    }
    if (c.is_colored(p.edges.front())) {
        r.witness = "first edge " + std::to_string(p.edges.front()) + " is colored";
        return r;
    }
    for (int j = 1; j < p.length(); ++j) {
        if (!c.is_colored(p.edges[j])) {
            r.witness = "edge " + std::to_string(p.edges[j]) + " at position " +
                        std::to_string(j) + " is uncolored";
            return r;
        }
    }
    r.shiftable = true;
    PartialColoring shifted = apply_shift(c, p);
    auto violations = properness_audit(shifted);
    if (!violations.empty()) {
        r.witness = "shift improper at vertex " + std::to_string(violations[0].vertex) +
                    " (edges " + std::to_string(violations[0].first) + "," +
                    std::to_string(violations[0].second) + ")";
        return r;
    }
    r.proper_shiftable = true;
    auto [x, y] = c.graph().edge(p.edges.back());
    uint64_t common = ~shifted.used_mask(x) & ~shifted.used_mask(y) &
                      ((2ull << c.palette_size()) - 2);
    if (common == 0) {
        r.witness = "no common missing color at last edge {" + std::to_string(x) + "," +
                    std::to_string(y) + "}";
        return r;
    }
    r.augmenting = true;
    r.common_missing = static_cast<Color>(__builtin_ctzll(common));
    return r;
}

PartialColoring shift_along(const PartialColoring& c, const Chain& p) {
    ChainClassification r = classify_chain(c, p);
    if (!r.shiftable) {
        throw std::invalid_argument("chain not shiftable: " + r.witness);
    }
    return apply_shift(c, p);
}

PartialColoring augment_with_chain(const PartialColoring& c, const Chain& p) {
    ChainClassification r = classify_chain(c, p);
    if (!r.augmenting) {
        throw std::invalid_argument("chain not augmenting: " + r.witness);
    }
    PartialColoring out = apply_shift(c, p);
    out.set(p.edges.back(), *r.common_missing);
    return out;
}

std::string serialize_coloring(const PartialColoring& c) {
    std::ostringstream out;
    for (EdgeId e = 0; e < c.graph().num_edges(); ++e) {
        if (c.is_colored(e)) out << e << ' ' << c.color(e) << '\n';
    }
    return out.str();
}

PartialColoring parse_coloring(const Graph& g, const std::string& text) {
    PartialColoring c(g);
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        long long e, col;
        std::string extra;
        if (!(ls >> e)) continue;
        if (!(ls >> col) || (ls >> extra)) {
            throw std::invalid_argument("coloring parse error at line " +
                                        std::to_string(lineno));
        }
        if (e < 0 || e >= g.num_edges()) {
            throw std::invalid_argument("coloring line " + std::to_string(lineno) +
                                        " refers to unknown edge " + std::to_string(e));
        }
        c.set(static_cast<EdgeId>(e), static_cast<Color>(col));
    }
    return c;
}

}  // namespace vizlab
