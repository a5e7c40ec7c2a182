#ifndef RODLIM_MATERIAL_HPP
#define RODLIM_MATERIAL_HPP

#include <Eigen/Dense>
#include <optional>

namespace rodlim {

// Symmetric fourth-order tensor of linearized elasticity, stored as a 6x6
// matrix on the orthonormal basis of symmetric 3x3 matrices
//   E1=e1@e1, E2=e2@e2, E3=e3@e3,
//   E4=(e1@e2+e2@e1)/sqrt2, E5=(e1@e3+e3@e1)/sqrt2, E6=(e2@e3+e3@e2)/sqrt2.
// The quadratic form Q(F) = LF:F acts through the symmetric part only; skew
// parts are projected out before the 6x6 matrix is applied.
class ElasticTensor {
  public:
    enum class Provenance { Isotropic, General };

    // Q(F) = 2 mu |F^sym|^2 + lambda (tr F)^2. Throws NotCoercive when
    // mu <= 0 or 3 lambda + 2 mu <= 0 unless allow_noncoercive is set.
    static ElasticTensor isotropic(double lambda, double mu,
                                   bool allow_noncoercive = false);

    // General coercive tensor from its 6x6 representation (symmetrized on
    // input). Throws NotCoercive unless allow_noncoercive is set.
    static ElasticTensor general(const Eigen::Matrix<double, 6, 6>& sym_matrix,
                                 bool allow_noncoercive = false);

    const Eigen::Matrix<double, 6, 6>& sym_matrix() const { return matrix_; }
    Provenance provenance() const { return provenance_; }
    std::optional<double> lame_lambda() const { return lambda_; }
    std::optional<double> lame_mu() const { return mu_; }

    // vec6 coordinates of F^sym on the orthonormal basis above.
    static Eigen::Matrix<double, 6, 1> sym_coords(const Eigen::Matrix3d& F);
    static Eigen::Matrix3d from_sym_coords(const Eigen::Matrix<double, 6, 1>& v);

    // L F (a symmetric matrix) and Q(F) = LF : F.
    Eigen::Matrix3d apply(const Eigen::Matrix3d& F) const;
    double quadratic_form(const Eigen::Matrix3d& F) const;
    // Polarized form LF : G = LG : F.
    double bilinear(const Eigen::Matrix3d& F, const Eigen::Matrix3d& G) const;

  private:
    ElasticTensor() = default;
    Eigen::Matrix<double, 6, 6> matrix_ = Eigen::Matrix<double, 6, 6>::Zero();
    Provenance provenance_ = Provenance::General;
    std::optional<double> lambda_, mu_;
};

inline double evaluate_Q(const ElasticTensor& L, const Eigen::Matrix3d& F) {
    return L.quadratic_form(F);
}

struct MaterialDiagnostics {
    double smallest_eigenvalue = 0.0;  // on the symmetric subspace (the C_Q scale)
    double symmetry_defect = 0.0;      // |C - C^T|_inf of the 6x6 representation
    double skew_annihilation = 0.0;    // max |Q(S)| over skew test matrices
    bool coercive = false;
};

MaterialDiagnostics validate(const ElasticTensor& L);

}  // namespace rodlim

#endif
