#ifndef RODLIM_FEM_SPACE_HPP
#define RODLIM_FEM_SPACE_HPP

#include <Eigen/Dense>
#include <array>
#include <vector>

#include "rodlim/cross_section.hpp"

namespace rodlim {

// Continuous Lagrange spaces on the cross-section triangulation:
// degree-2 (vertices + edge midpoints) and degree-1 (vertices).
class FemSpace {
  public:
    explicit FemSpace(const CrossSection& cs);

    const CrossSection& cross_section() const { return *cs_; }
    int num_p1() const { return n_p1_; }
    int num_p2() const { return n_p2_; }
    const Eigen::Vector2d& p2_coord(int node) const { return p2_coords_[node]; }

    // Indices of the 6 local degree-2 nodes of triangle t:
    // vertices v0 v1 v2, then midpoints of edges (v0,v1), (v1,v2), (v2,v0).
    const std::array<int, 6>& tri_p2(int t) const { return tri_p2_[t]; }
    double area(int t) const { return area_[t]; }
    // Constant physical gradients of the barycentric coordinates on t.
    const std::array<Eigen::Vector2d, 3>& bary_grad(int t) const { return bary_grad_[t]; }

    // Degree-2 shape values and physical gradients at a barycentric point of
    // triangle t (local node order as in tri_p2).
    void eval_p2(int t, double l0, double l1, double l2,
                 std::array<double, 6>& N,
                 std::array<Eigen::Vector2d, 6>& grad) const;

    // Midside node of a boundary edge (parallel to cs.boundary_edges).
    int boundary_midnode(int boundary_edge_index) const {
        return boundary_mid_[boundary_edge_index];
    }

    // Interpolates a smooth function on the degree-2 nodes (exact for
    // quadratics).
    Eigen::VectorXd interpolate_p2(
        const std::function<double(const Eigen::Vector2d&)>& f) const;

  private:
    const CrossSection* cs_;
    int n_p1_ = 0, n_p2_ = 0;
    std::vector<Eigen::Vector2d> p2_coords_;
    std::vector<std::array<int, 6>> tri_p2_;
    std::vector<double> area_;
    std::vector<std::array<Eigen::Vector2d, 3>> bary_grad_;
    std::vector<int> boundary_mid_;
};

}  // namespace rodlim

#endif
