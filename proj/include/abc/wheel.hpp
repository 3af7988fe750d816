#pragma once

#include <vector>

#include "abc/matrices.hpp"

namespace abc {

enum class WheelKind {
    Wheel,     // n >= 3: cyclic tire plus hub
    Triangle,  // n = 2 Tilde: C3 with one tire edge of weight a, spokes b
    Digon,     // n = 2 Doubled: multigraph with two parallel (1, 2) tire edges
    Star       // a = 0: zero-weight tire edges removed
};

struct WeightedEdge {
    int u;
    int v;
    double weight;
};

/// Regularly weighted wheel graph W_{n+1}: hub labeled 0 with weight -n c,
/// tire vertices 1..n with weight c, spokes (0, j) of weight b, tire edges of
/// weight a. Parallel edges (the digon) are stored explicitly and collapse to
/// a summed weight only in the adjacency matrix.
struct WeightedWheel {
    int n = 2;
    std::vector<double> vertex_weights;  // index 0 is the hub
    double tire_edge_weight = 0;         // a
    double spoke_weight = 0;             // b
    WheelKind kind = WheelKind::Wheel;
    std::vector<WeightedEdge> edges;

    int vertex_count() const noexcept { return n + 1; }
};

/// Throws UnsupportedOrderError for n < 2.
WeightedWheel build_wheel(const AbcParams& p);

/// Weighted adjacency matrix: diagonal carries vertex weights, each edge adds
/// its weight onto the (u, v) pair. Equals materialize_abc of the originating
/// parameters entrywise.
DenseSymmetricMatrix wheel_adjacency(const WeightedWheel& w);

}  // namespace abc
