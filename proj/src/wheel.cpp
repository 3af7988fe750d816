#include "abc/wheel.hpp"

#include "abc/errors.hpp"

namespace abc {

WeightedWheel build_wheel(const AbcParams& p) {
    if (p.n < 2) throw UnsupportedOrderError("wheel correspondence needs n >= 2");

    WeightedWheel w;
    w.n = p.n;
    w.tire_edge_weight = p.a;
    w.spoke_weight = p.b;
    w.vertex_weights.assign(p.n + 1, p.c);
    w.vertex_weights[0] = -(static_cast<double>(p.n) * p.c);

    for (int j = 1; j <= p.n; ++j) w.edges.push_back({0, j, p.b});

    if (p.a == 0.0) {
        w.kind = WheelKind::Star;
    } else if (p.n >= 3) {
        w.kind = WheelKind::Wheel;
        for (int j = 1; j <= p.n; ++j) w.edges.push_back({j, j % p.n + 1, p.a});
    } else if (p.n2_variant == N2Variant::Doubled) {
        w.kind = WheelKind::Digon;
        w.edges.push_back({1, 2, p.a});
        w.edges.push_back({1, 2, p.a});
    } else {
        w.kind = WheelKind::Triangle;
        w.edges.push_back({1, 2, p.a});
    }
    return w;
}

DenseSymmetricMatrix wheel_adjacency(const WeightedWheel& w) {
    DenseSymmetricMatrix m(static_cast<std::size_t>(w.n) + 1);
    for (int j = 0; j <= w.n; ++j) m.set(j, j, w.vertex_weights[j]);
    for (const auto& e : w.edges) m.add(e.u, e.v, e.weight);
    return m;
}

}  // namespace abc
