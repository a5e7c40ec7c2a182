#ifndef RODLIM_QUADRATURE_HPP
#define RODLIM_QUADRATURE_HPP

#include <array>
#include <stdexcept>

namespace rodlim {

// Quadrature point on the reference triangle, in barycentric coordinates.
// Weights sum to one; multiply by the physical triangle area.
struct TriQuadPoint {
    double l0, l1, l2;
    double weight;
};

// Degree-exact symmetric rules on straight triangles.
//   order 2: 3-point midside rule (exact for quadratics)
//   order 4: 6-point rule (exact for quartics) -- the project default
inline const std::array<TriQuadPoint, 3>& tri_rule_order2() {
    static const std::array<TriQuadPoint, 3> rule = {{
        {0.5, 0.5, 0.0, 1.0 / 3.0},
        {0.0, 0.5, 0.5, 1.0 / 3.0},
        {0.5, 0.0, 0.5, 1.0 / 3.0},
    }};
    return rule;
}

inline const std::array<TriQuadPoint, 6>& tri_rule_order4() {
    constexpr double w1 = 0.223381589678011;
    constexpr double a1 = 0.445948490915965;
    constexpr double w2 = 0.109951743655322;
    constexpr double a2 = 0.091576213509771;
    static const std::array<TriQuadPoint, 6> rule = {{
        {1.0 - 2.0 * a1, a1, a1, w1},
        {a1, 1.0 - 2.0 * a1, a1, w1},
        {a1, a1, 1.0 - 2.0 * a1, w1},
        {1.0 - 2.0 * a2, a2, a2, w2},
        {a2, 1.0 - 2.0 * a2, a2, w2},
        {a2, a2, 1.0 - 2.0 * a2, w2},
    }};
    return rule;
}

// 3-point Gauss rule on [0,1] (exact for degree 5); weights sum to one.
struct EdgeQuadPoint {
    double s;
    double weight;
};

inline const std::array<EdgeQuadPoint, 3>& edge_rule_gauss3() {
    const double c = 0.5 * 0.774596669241483;  // sqrt(3/5)/2
    static const std::array<EdgeQuadPoint, 3> rule = {{
        {0.5 - c, 5.0 / 18.0},
        {0.5, 8.0 / 18.0},
        {0.5 + c, 5.0 / 18.0},
    }};
    return rule;
}

}  // namespace rodlim

#endif
