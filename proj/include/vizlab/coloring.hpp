#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "vizlab/graph.hpp"

namespace vizlab {

using Color = int;  // colors are 1..Delta+1; 0 marks "uncolored" internally

/// Partial proper edge coloring over a fixed graph with palette [Delta+1].
/// Cheap to copy; the graph is referenced, not owned.
class PartialColoring {
public:
    explicit PartialColoring(const Graph& g);

    const Graph& graph() const { return *g_; }
    int palette_size() const { return palette_; }

    bool is_colored(EdgeId e) const { return color_[e] > 0; }
    Color color(EdgeId e) const { return color_[e]; }  // 0 if uncolored
    int num_colored() const { return num_colored_; }
    int num_uncolored() const { return g_->num_edges() - num_colored_; }

    /// Assigns or clears (color 0) an edge. Does not enforce properness;
    /// properness_audit is the check.
    void set(EdgeId e, Color c);

    /// Bitmask of colors present on colored edges at x (bit c set iff some
    /// edge at x has color c).
    uint64_t used_mask(VertexId x) const { return used_[x]; }

    /// Missing colors m_c(x) = [Delta+1] minus colors at x, ascending.
    std::vector<Color> missing_colors(VertexId x) const;
    bool is_missing(VertexId x, Color c) const { return !(used_[x] >> c & 1); }
    /// Smallest missing color (always exists: palette exceeds max degree).
    Color min_missing(VertexId x) const;

    std::vector<EdgeId> uncolored_set() const;
    std::vector<EdgeId> colored_set() const;

    /// Smallest-id colored edge at x with the given color, if any.
    std::optional<EdgeId> edge_with_color(VertexId x, Color c) const;

private:
    const Graph* g_;
    int palette_;
    int num_colored_ = 0;
    std::vector<Color> color_;
    std::vector<uint64_t> used_;
};

/// Vertices where c is improper, each with one clashing edge pair.
struct PropernessViolation {
    VertexId vertex;
    EdgeId first;
    EdgeId second;
};
std::vector<PropernessViolation> properness_audit(const PartialColoring& c);

/// An ordered edge sequence with consecutive intersection.
struct Chain {
    std::vector<EdgeId> edges;

    int length() const { return static_cast<int>(edges.size()); }
    bool empty() const { return edges.empty(); }
    /// 1-based index of an edge occurring exactly once, or nullopt.
    std::optional<int> index_of(EdgeId f) const;
    Chain prefix(int i) const {
        return Chain{{edges.begin(), edges.begin() + i}};
    }
    Chain concat(const Chain& q) const;
    bool operator==(const Chain& o) const { return edges == o.edges; }
};

/// Flags of the chain hierarchy with a failure witness per level.
struct ChainClassification {
    bool edge_injective = false;
    bool shiftable = false;
    bool proper_shiftable = false;
    bool augmenting = false;
    std::string witness;  // empty when augmenting

    // set when proper_shiftable and the chain is nonempty
    std::optional<Color> common_missing;  // min of m_{c_P}(x) ∩ m_{c_P}(y) at the last edge
};

/// Consecutive edges intersect in at least one vertex (the defining chain
/// property; classify/shift assume it and assert in debug).
bool is_chain(const Graph& g, const Chain& p);

ChainClassification classify_chain(const PartialColoring& c, const Chain& p);

/// The shift c_P: dom(c_P) = dom(c) ∪ {e_0} \ {e_last}; c_P(e_i) = c(e_{i+1}).
/// Throws if P is not c-shiftable, naming the violated clause. The result is
/// not required to be proper.
PartialColoring shift_along(const PartialColoring& c, const Chain& p);

/// Shift plus coloring the last edge with the minimum common missing color.
/// Throws unless P is c-augmenting (the witness is in the message).
PartialColoring augment_with_chain(const PartialColoring& c, const Chain& p);

/// `edgeid color` lines for colored edges, ascending EdgeId; round-trips
/// bit-exactly via parse_coloring.
std::string serialize_coloring(const PartialColoring& c);
PartialColoring parse_coloring(const Graph& g, const std::string& text);

}  // namespace vizlab
