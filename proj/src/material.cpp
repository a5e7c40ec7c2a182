#include "rodlim/material.hpp"

#include <cmath>

#include "rodlim/errors.hpp"

namespace rodlim {

namespace {
constexpr double kSqrt2 = 1.4142135623730951;
}

ElasticTensor ElasticTensor::isotropic(double lambda, double mu,
                                       bool allow_noncoercive) {
    if (!allow_noncoercive && (mu <= 0.0 || 3.0 * lambda + 2.0 * mu <= 0.0))
        throw NotCoercive("isotropic tensor requires mu > 0 and 3*lambda + 2*mu > 0");
    ElasticTensor L;
    L.matrix_ = 2.0 * mu * Eigen::Matrix<double, 6, 6>::Identity();
    Eigen::Matrix<double, 6, 1> tr;
    tr << 1, 1, 1, 0, 0, 0;  // vec6 of the identity
    L.matrix_ += lambda * tr * tr.transpose();
    L.provenance_ = Provenance::Isotropic;
    L.lambda_ = lambda;
    L.mu_ = mu;
    return L;
}

ElasticTensor ElasticTensor::general(const Eigen::Matrix<double, 6, 6>& sym_matrix,
                                     bool allow_noncoercive) {
    ElasticTensor L;
    L.matrix_ = 0.5 * (sym_matrix + sym_matrix.transpose());
    L.provenance_ = Provenance::General;
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix<double, 6, 6>> eig(L.matrix_);
    if (!allow_noncoercive && eig.eigenvalues().minCoeff() <= 0.0)
        throw NotCoercive("6x6 representation is not positive definite");
    return L;
}

Eigen::Matrix<double, 6, 1> ElasticTensor::sym_coords(const Eigen::Matrix3d& F) {
    Eigen::Matrix3d S = 0.5 * (F + F.transpose());
    Eigen::Matrix<double, 6, 1> v;
    v << S(0, 0), S(1, 1), S(2, 2), kSqrt2 * S(0, 1), kSqrt2 * S(0, 2), kSqrt2 * S(1, 2);
    return v;
}

Eigen::Matrix3d ElasticTensor::from_sym_coords(const Eigen::Matrix<double, 6, 1>& v) {
    Eigen::Matrix3d S;
    S << v[0], v[3] / kSqrt2, v[4] / kSqrt2,
         v[3] / kSqrt2, v[1], v[5] / kSqrt2,
         v[4] / kSqrt2, v[5] / kSqrt2, v[2];
    return S;
}

Eigen::Matrix3d ElasticTensor::apply(const Eigen::Matrix3d& F) const {
    return from_sym_coords(matrix_ * sym_coords(F));
}

double ElasticTensor::quadratic_form(const Eigen::Matrix3d& F) const {
    Eigen::Matrix<double, 6, 1> v = sym_coords(F);
    return v.dot(matrix_ * v);
}

double ElasticTensor::bilinear(const Eigen::Matrix3d& F, const Eigen::Matrix3d& G) const {
    return sym_coords(F).dot(matrix_ * sym_coords(G));
}

MaterialDiagnostics validate(const ElasticTensor& L) {
    MaterialDiagnostics d;
    const auto& C = L.sym_matrix();
    d.symmetry_defect = (C - C.transpose()).cwiseAbs().maxCoeff();
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix<double, 6, 6>> eig(
        0.5 * (C + C.transpose()));
    d.smallest_eigenvalue = eig.eigenvalues().minCoeff();
    d.coercive = d.smallest_eigenvalue > 0.0;

    // skew inputs must be annihilated by construction
    const Eigen::Vector3d axes[3] = {Eigen::Vector3d::UnitX(), Eigen::Vector3d::UnitY(),
                                     Eigen::Vector3d::UnitZ()};
    for (const auto& a : axes) {
        Eigen::Matrix3d S;
        S << 0, -a.z(), a.y(), a.z(), 0, -a.x(), -a.y(), a.x(), 0;
        d.skew_annihilation = std::max(d.skew_annihilation,
                                       std::abs(L.quadratic_form(S)));
    }
    return d;
}

}  // namespace rodlim
