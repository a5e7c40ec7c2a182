#ifndef RODLIM_QSTAR_HPP
#define RODLIM_QSTAR_HPP

#include <Eigen/Dense>
#include <optional>

namespace rodlim {

// Reduced cross-section energy density as a symmetric 4x4 quadratic form on
// the coordinates (F12, F13, F23, t).
struct QStarForm {
    enum class Source { FemConstrained, FemPenalized, IsotropicClosedForm };

    Eigen::Matrix4d matrix = Eigen::Matrix4d::Zero();
    double alpha = 0.0;  // coefficient of t^2 in the additive splitting
    Source source = Source::FemConstrained;
    std::optional<double> penalty_k;

    double evaluate(double F12, double F13, double F23, double t) const {
        Eigen::Vector4d y(F12, F13, F23, t);
        return y.dot(matrix * y);
    }
    double evaluate(const Eigen::Vector3d& f, double t) const {
        return evaluate(f[0], f[1], f[2], t);
    }

    // Top-left block acting on the bending/torsion coordinates (t = 0).
    Eigen::Matrix3d bending_block() const { return matrix.topLeftCorner<3, 3>(); }

    // Exact closed form for the unit-measure circular cross-section:
    // diag(3 mu/4pi, 3 mu/4pi, mu/2pi, 3 mu).
    static QStarForm isotropic_disk(double mu);
};

}  // namespace rodlim

#endif
