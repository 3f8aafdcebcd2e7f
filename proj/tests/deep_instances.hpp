#pragma once

// Hand-built instances whose start edge drives the chain construction
// through every deep branch: a repeat-ending fan, a long first alternating
// path with a usable interior edge, and (per variant) a second fan that
// completes, hits an avoided color, or repeats a color. Shared between the
// unit suite (which asserts the exact shapes) and the acceptance harness
// (which harvests the resulting records).

#include <memory>
#include <tuple>
#include <utility>
#include <vector>

#include "vizlab/coloring.hpp"
#include "vizlab/graph.hpp"

namespace testsupport {

using namespace vizlab;

struct DeepInstance {
    Graph g;
    PartialColoring c;
    LineGraphView lg;
    EdgeId e, g5, k5;

    DeepInstance(Graph graph, const std::vector<Color>& colors, EdgeId e_, EdgeId g5_,
                 EdgeId k5_)
        : g(std::move(graph)), c(g), lg(g), e(e_), g5(g5_), k5(k5_) {
        for (EdgeId h = 0; h < g.num_edges(); ++h) {
            if (colors[h] != 0) c.set(h, colors[h]);
        }
    }
    // c and lg point into the member g; relocating the struct would leave
    // them dangling
    DeepInstance(const DeepInstance&) = delete;
    DeepInstance& operator=(const DeepInstance&) = delete;
};

enum class DeepVariant { Complete, Avoided, Repeated, RepeatedShifty };

/// Edge list, colors (0 = uncolored) and landmark edge ids of a variant.
struct DeepSpec {
    std::vector<std::pair<VertexId, VertexId>> edges;
    std::vector<Color> colors;
    EdgeId e, g5, k5;
};

inline DeepSpec deep_spec(DeepVariant variant) {
    // vertices of the common skeleton
    const VertexId x = 0, v0 = 1, v1 = 2, v2 = 3, q = 4;
    const VertexId p1 = 5, p2 = 6, p3 = 7, p4 = 8, p5 = 9, p6 = 10, p7 = 11;
    const VertexId a1 = 12, a2 = 13, a3 = 14, u1 = 15;

    std::vector<std::tuple<VertexId, VertexId, Color>> spec = {
        {x, v0, 0},   // e: the uncolored start edge
        {x, v1, 2},  {x, v2, 3},  {x, q, 4},
        {v1, a1, 1}, {v2, a2, 1}, {v2, a3, 5},
        // the 1/2-alternating first path
        {v0, p1, 1}, {p1, p2, 2}, {p2, p3, 1}, {p3, p4, 2},
        {p4, p5, 1},  // g5: the interior edge the second step starts from
        {p5, p6, 2}, {p6, p7, 1},
        {p5, u1, 3},  // h1: the lone second-fan extension
    };
    const EdgeId e = 0, g5 = 11;
    EdgeId k5 = 0;

    if (variant != DeepVariant::Complete) {
        const VertexId q1 = 16, q2 = 17, q3 = 18, q4 = 19, q5 = 20, q6 = 21, q7 = 22;
        const VertexId w1 = 23, w2 = 24, u2 = 25;
        // u1 now anchors a long 1/2 path; its spare colors keep the second
        // fan from completing.
        spec.push_back({u1, q1, 1});
        k5 = static_cast<EdgeId>(spec.size()) + 3;  // {q4,q5} below
        spec.push_back({q1, q2, 2});
        spec.push_back({q2, q3, 1});
        spec.push_back({q3, q4, 2});
        spec.push_back({q4, q5, 1});
        spec.push_back({q5, q6, 2});
        spec.push_back({q6, q7, 1});
        spec.push_back({u1, w1, 4});
        spec.push_back({u1, w2, 5});
        spec.push_back({q5, u2, 3});  // h2: first extension of the third fan
        if (variant == DeepVariant::Avoided) {
            const VertexId r1 = 26, r2 = 27, r3 = 28, w3 = 29, w4 = 30;
            spec.push_back({u2, r1, 1});
            spec.push_back({r1, r2, 2});
            spec.push_back({r2, r3, 1});
            spec.push_back({u2, w3, 4});
            spec.push_back({u2, w4, 5});
        } else {
            const VertexId r1 = 26, w5 = 27, u3 = 28, w6 = 29, w7 = 30, w8 = 31;
            spec.push_back({u2, r1, 1});
            spec.push_back({u2, w5, 2});
            spec.push_back({q5, u3, 4});  // h3: second extension, then repeat
            spec.push_back({u3, w6, 1});
            spec.push_back({u3, w7, 2});
            spec.push_back({u3, w8, 5});
            if (variant == DeepVariant::RepeatedShifty) {
                const VertexId t = 32, t2 = 33;
                // a 5/3 path from the repeat leaf that rides through the
                // recolored region, so it changes under the prefix shift
                spec.push_back({q4, t, 5});
                spec.push_back({t, t2, 3});
                spec.push_back({t2, p5, 5});
            }
        }
    }

    DeepSpec out;
    out.e = e;
    out.g5 = g5;
    out.k5 = k5;
    for (auto [u, v, col] : spec) {
        out.edges.emplace_back(u, v);
        out.colors.push_back(col);
    }
    return out;
}

inline std::unique_ptr<DeepInstance> make_deep_instance(DeepVariant variant) {
    DeepSpec s = deep_spec(variant);
    return std::make_unique<DeepInstance>(Graph::from_edges(s.edges), s.colors, s.e,
                                          s.g5, s.k5);
}

}  // namespace testsupport
