#include "rodlim/fem_space.hpp"

#include <map>

#include "rodlim/errors.hpp"

namespace rodlim {

FemSpace::FemSpace(const CrossSection& cs) : cs_(&cs) {
    n_p1_ = cs.num_vertices();
    p2_coords_.assign(cs.vertices.begin(), cs.vertices.end());

    std::map<std::pair<int, int>, int> edge_node;
    auto midnode = [&](int i, int j) {
        auto key = std::minmax(i, j);
        auto it = edge_node.find(key);
        if (it != edge_node.end()) return it->second;
        int node = static_cast<int>(p2_coords_.size());
        p2_coords_.push_back(0.5 * (cs.vertices[i] + cs.vertices[j]));
        edge_node.emplace(key, node);
        return node;
    };

    tri_p2_.resize(cs.num_triangles());
    area_.resize(cs.num_triangles());
    bary_grad_.resize(cs.num_triangles());
    for (int t = 0; t < cs.num_triangles(); ++t) {
        const auto& tri = cs.triangles[t];
        tri_p2_[t] = {tri[0], tri[1], tri[2], midnode(tri[0], tri[1]),
                      midnode(tri[1], tri[2]), midnode(tri[2], tri[0])};
        const Eigen::Vector2d &a = cs.vertices[tri[0]], &b = cs.vertices[tri[1]],
                              &c = cs.vertices[tri[2]];
        Eigen::Matrix2d J;
        J.col(0) = b - a;
        J.col(1) = c - a;
        double det = J.determinant();
        if (det <= 0.0) throw DegenerateMesh("non-positive triangle Jacobian");
        area_[t] = 0.5 * det;
        Eigen::Matrix2d JinvT = J.inverse().transpose();
        bary_grad_[t][1] = JinvT.col(0);
        bary_grad_[t][2] = JinvT.col(1);
        bary_grad_[t][0] = -bary_grad_[t][1] - bary_grad_[t][2];
    }
    n_p2_ = static_cast<int>(p2_coords_.size());

    boundary_mid_.reserve(cs.boundary_edges.size());
    for (const auto& be : cs.boundary_edges)
        boundary_mid_.push_back(midnode(be.a, be.b));
}

void FemSpace::eval_p2(int t, double l0, double l1, double l2,
                       std::array<double, 6>& N,
                       std::array<Eigen::Vector2d, 6>& grad) const {
    const auto& g = bary_grad_[t];
    N[0] = l0 * (2.0 * l0 - 1.0);
    N[1] = l1 * (2.0 * l1 - 1.0);
    N[2] = l2 * (2.0 * l2 - 1.0);
    N[3] = 4.0 * l0 * l1;
    N[4] = 4.0 * l1 * l2;
    N[5] = 4.0 * l2 * l0;
    grad[0] = (4.0 * l0 - 1.0) * g[0];
    grad[1] = (4.0 * l1 - 1.0) * g[1];
    grad[2] = (4.0 * l2 - 1.0) * g[2];
    grad[3] = 4.0 * (l0 * g[1] + l1 * g[0]);
    grad[4] = 4.0 * (l1 * g[2] + l2 * g[1]);
    grad[5] = 4.0 * (l2 * g[0] + l0 * g[2]);
}

Eigen::VectorXd FemSpace::interpolate_p2(
    const std::function<double(const Eigen::Vector2d&)>& f) const {
    Eigen::VectorXd v(n_p2_);
    for (int i = 0; i < n_p2_; ++i) v[i] = f(p2_coords_[i]);
    return v;
}

}  // namespace rodlim
