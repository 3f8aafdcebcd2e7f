#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "vizlab/coloring.hpp"
#include "vizlab/graph.hpp"

namespace vizlab {

/// Maximal alternating alpha/beta chain starting at the anchor: edge colors
/// go alpha, beta, alpha, ... and the walk never revisits a vertex. Empty
/// exactly when alpha is missing at the anchor, in which case last_vertex is
/// the anchor itself.
struct AltPath {
    Chain chain;
    VertexId anchor = -1;
    Color alpha = 0, beta = 0;
    VertexId last_vertex = -1;
    /// Visited vertices: verts[0] = anchor, verts[i] = far endpoint of the
    /// length-i prefix; size is length+1 (single entry when empty).
    std::vector<VertexId> verts;

    bool empty() const { return chain.empty(); }
    int length() const { return chain.length(); }
};

/// Requires beta missing at x and alpha != beta.
AltPath alternating_path(const PartialColoring& c, VertexId x, Color alpha, Color beta);

/// Why a (conditional) fan stopped growing.
enum class FanStop {
    NoExtension,  // the minimal color missing at the last leaf is missing at
                  // the center too: no candidate edge exists
    Repeat,       // the candidate edge is already in the fan
    HitAvoided,   // conditional fans only: the last leaf has alpha or beta missing
};

struct Fan {
    Chain chain;
    VertexId center = -1;
    std::vector<VertexId> leaves;  // v_0..v_k, one per edge
    FanStop stop = FanStop::NoExtension;
    Color repeat_color = 0;  // FanStop::Repeat: the color that collided
    int repeat_index = -1;   // j with c(chain[j+1]) == repeat_color
    Color hit_color = 0;     // FanStop::HitAvoided: which avoided color is missing

    int length() const { return chain.length(); }
    VertexId last_leaf() const { return leaves.back(); }
};

/// Maximal fan around x starting at the uncolored edge e; the next edge's
/// color is always the minimal color missing at the previous leaf.
Fan fan(const PartialColoring& c, VertexId x, EdgeId e);

/// Maximal alpha/beta-conditional fan starting at edge f, pivoting at y.
/// Growth stops as soon as a leaf has alpha or beta missing.
Fan conditional_fan(const PartialColoring& c, EdgeId f, VertexId y, Color alpha,
                    Color beta);

enum class RecordType { FanOnly, Step1, Step2, TypeA, TypeB, TypeC };

const char* record_type_name(RecordType t);

/// One (possibly partial) 3-step Vizing chain: the six-block decomposition
/// F1 P1 F2 P2 F3 P3 with anchors, color pairs and critical indices, plus
/// the untruncated alternating paths needed to continue the construction.
struct VizingChainRecord {
    EdgeId start_edge = -1;
    RecordType type = RecordType::FanOnly;
    bool complete = false;    // no further iteration applies
    bool augmenting = false;  // classify_chain(full()) verdict
    bool amazing = false;     // meaningful for TypeA/TypeB/TypeC
    std::string witness;      // failure detail when not augmenting/amazing

    std::array<Chain, 6> blocks;  // F1, P1, F2, P2, F3, P3
    std::array<VertexId, 3> y{-1, -1, -1};
    std::array<VertexId, 3> z{-1, -1, -1};
    std::array<Color, 3> alpha{0, 0, 0};
    std::array<Color, 3> beta{0, 0, 0};
    std::array<int, 3> critical{-1, -1, -1};
    std::optional<EdgeId> f1, f2;

    AltPath path1, path2;  // full iteration-I / iteration-II paths

    Chain full() const;
};

/// Iteration I: the classical Vizing chain at (x, e). Returns either a
/// fan-only record, a complete truncated-fan record (empty path case), or a
/// Step1 record whose P1 is the full alternating path; augmenting holds in
/// all cases (Vizing's lemma).
VizingChainRecord first_iteration(const PartialColoring& c, EdgeId e, VertexId x);

/// Empty when f1 is suitable for continuing from rec; otherwise the violated
/// clause. Suitable: on P1's path, at line-graph distance >= 3 from F1, not
/// the last path edge, colored alpha_1.
std::optional<std::string> check_suitable(const PartialColoring& c,
                                          const VizingChainRecord& rec, EdgeId f1,
                                          const LineGraphView& lg);

/// Sufficiency stand-in for the "superb" property: no alternating path
/// anchored at graph distance 1 from y_2 comes within line-graph distance 3
/// of F1 concatenated with the P1 prefix before f1.
bool superb_surrogate(const PartialColoring& c, const VizingChainRecord& rec, EdgeId f1,
                      const LineGraphView& lg);

/// Iteration II. Throws std::invalid_argument if f1 fails a suitability
/// clause or the superb surrogate.
VizingChainRecord second_iteration(const PartialColoring& c,
                                   const VizingChainRecord& rec, EdgeId f1,
                                   const LineGraphView& lg);

/// Empty when f2 is 2-suitable: on P2's path, at line-graph distance >= 3
/// from F1 P1 F2, not the last path edge, colored alpha_2.
std::optional<std::string> check_two_suitable(const PartialColoring& c,
                                              const VizingChainRecord& rec, EdgeId f2,
                                              const LineGraphView& lg);

/// Iteration III: classifies f2 as type (a)/(b)/(c) and completes the
/// record. Throws on a 2-suitability violation; a 2-suitable but non-amazing
/// f2 yields a record with amazing == false and a witness.
VizingChainRecord third_iteration(const PartialColoring& c,
                                  const VizingChainRecord& rec, EdgeId f2,
                                  const LineGraphView& lg);

/// Sufficient condition for f2 to be amazing: no alternating path anchored
/// at graph distance 1 from y_3 comes within line-graph distance 3 of
/// F1 P1 F2. Amazing edges may exist with this false.
bool amazing_sufficient(const PartialColoring& c, const VizingChainRecord& rec,
                        EdgeId f2, const LineGraphView& lg);

/// Structural check of the defining clauses (prefix relations, junction
/// consistency, empty-suffix cascade) plus the augmenting flag; empty on
/// success, else a description of the violated clause.
std::optional<std::string> validate_record(const PartialColoring& c,
                                           const VizingChainRecord& rec);

/// Streams the records of the deterministic construction at e (both
/// endpoints, suitable+surrogate f1 in path order, 2-suitable f2 in path
/// order); every emitted record is c-augmenting. Return false from the
/// callback to stop.
void for_each_three_step_chain(const PartialColoring& c, EdgeId e,
                               const LineGraphView& lg,
                               const std::function<bool(const VizingChainRecord&)>& fn);

std::vector<VizingChainRecord> enumerate_three_step_chains(const PartialColoring& c,
                                                           EdgeId e, int budget,
                                                           const LineGraphView& lg);

/// Exhaustive definition-level search: length of the shortest c-augmenting
/// chain at e satisfying the six-block clauses with length < length_cap, or
/// nullopt if none exists below the cap. Complete within the component.
std::optional<int> shortest_three_step_chain(const PartialColoring& c, EdgeId e,
                                             int length_cap);

/// e is K-bad iff every 3-step Vizing chain at e has length >= 2K + 2*Delta.
bool is_k_bad(const PartialColoring& c, EdgeId e, int K);

/// The pair family V_c(e) with the rejected set S_c(e) and candidate set
/// T_c(e) for the shared color pair (gamma, delta).
struct PairFamily {
    std::vector<std::pair<EdgeId, EdgeId>> pairs;  // V_c(e)
    std::vector<EdgeId> rejected;                  // S_c(e)
    std::vector<EdgeId> candidates;                // T_c(e)
    Color gamma = 0, delta = 0;
    bool inclusion_holds = false;  // T \ S subset of proj2(V)
    double lower_bound = 0;        // K^2/(8D)^4 - (16D)^5 K
    bool bound_met = false;
    double cited_superb_count_bound = 0;  // informational
};

/// Requires e to be K-bad (throws otherwise).
PairFamily pair_family(const PartialColoring& c, EdgeId e, int K,
                       const LineGraphView& lg);

/// Line-oriented chain-trace record: blocks, anchors, colors, critical
/// indices on one line each, terminated by "end".
std::string serialize_record(const VizingChainRecord& rec);

}  // namespace vizlab
