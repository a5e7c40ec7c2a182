#ifndef RODLIM_CELL_PROBLEM_HPP
#define RODLIM_CELL_PROBLEM_HPP

#include <Eigen/Dense>
#include <functional>
#include <map>
#include <memory>
#include <optional>

#include "rodlim/cross_section.hpp"
#include "rodlim/fem_space.hpp"
#include "rodlim/material.hpp"
#include "rodlim/qstar.hpp"

namespace rodlim {

// Affine strain profile xi(x) = F (x2 e2 + x3 e3) + t e1 with skew F.
struct AffineStrainProfile {
    double F12 = 0.0, F13 = 0.0, F23 = 0.0;
    double t = 0.0;

    Eigen::Matrix3d skewF() const {
        Eigen::Matrix3d F;
        F << 0, F12, F13, -F12, 0, F23, -F13, -F23, 0;
        return F;
    }
    Eigen::Vector3d xi(const Eigen::Vector2d& x) const {
        return {t + F12 * x.x() + F13 * x.y(), F23 * x.y(), -F23 * x.x()};
    }
    double xi1(const Eigen::Vector2d& x) const {
        return t + F12 * x.x() + F13 * x.y();
    }
    // xi(0) = t e1 selects the kernel-fixing constraints; the dichotomy is
    // exact (no epsilon band).
    bool linear() const { return t == 0.0; }

    // int |xi|^2 over a normalized cross-section (closed form).
    double l2_norm_sq(const CrossSection& cs) const {
        return t * t + F12 * F12 * cs.m2 + F13 * F13 * cs.m3 +
               F23 * F23 * (cs.m2 + cs.m3);
    }
    AffineStrainProfile operator+(const AffineStrainProfile& o) const {
        return {F12 + o.F12, F13 + o.F13, F23 + o.F23, t + o.t};
    }
};

enum class GaugeKind { MeanGradient, RotationMoment };

// Discrete minimizer of one cell problem: degree-2 corrector, degree-1
// multiplier, energy value and constraint diagnostics.
struct CellSolution {
    Eigen::MatrixX3d beta;   // num_p2 x 3 nodal values
    Eigen::VectorXd lambda;  // num_p1 nodal values
    double energy = 0.0;
    double div_residual = 0.0;  // L2 norm of (d2 beta2 + d3 beta3 + xi1)
    GaugeKind gauge = GaugeKind::MeanGradient;
    std::optional<double> k;  // penalty weight; absent for the constrained solve
};

struct FemOptions {
    double algebraic_tol = 1e-10;
    // ConstraintViolation threshold, relative to ||xi||_L2 (the weak
    // divergence constraint leaves an O(h^2) pointwise residual).
    double div_tol_rel = 5e-2;
    // When set, solve by LU-preconditioned refinement from a random start
    // instead of the plain direct solve.
    std::optional<unsigned> iterative_init_seed;
};

// Shared assembly + factorization cache for repeated solves on one
// cross-section/material pair. Each solve is a pure function of its inputs;
// the cache is an implementation detail guarded for const use.
class CellSolver {
  public:
    CellSolver(const CrossSection& cs, const ElasticTensor& L, FemOptions opts = {});
    ~CellSolver();

    CellSolution solve_constrained(const AffineStrainProfile& xi) const;
    CellSolution solve_penalized(const AffineStrainProfile& xi, double k) const;

    const FemSpace& space() const;
    const ElasticTensor& material() const;
    const CrossSection& cross_section() const;

  private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

CellSolution solve_constrained(const CrossSection& cs, const ElasticTensor& L,
                               const AffineStrainProfile& xi, FemOptions opts = {});
// k = 0 degenerates to the plain gauge-constrained quadratic minimization.
CellSolution solve_penalized(const CrossSection& cs, const ElasticTensor& L,
                             const AffineStrainProfile& xi, double k,
                             FemOptions opts = {});

// Weak-form residuals of the stationarity system and constraint set,
// evaluated against every discrete test function.
struct CellResidualReport {
    double euler_lagrange_max = 0.0;  // momentum equation with the multiplier term
    double trace_weak_max = 0.0;      // weak divergence constraint
    double mean_value_max = 0.0;      // zero-mean rows
    double gauge_extra_max = 0.0;     // mean-gradient rows / rotation moment
    double div_l2 = 0.0;              // pointwise L2 residual of the trace condition
};
CellResidualReport el_residual_cell(const CrossSection& cs, const ElasticTensor& L,
                                    const AffineStrainProfile& xi,
                                    const CellSolution& sol);

// Reduces the cell energy to its 4x4 matrix by solving the 4 basis profiles
// and the 6 pairwise sums; off-diagonal entries come from polarization of
// the computed values (exact for quadratic forms). penalty_k selects the
// penalized approximant.
QStarForm reduce_qstar(const CrossSection& cs, const ElasticTensor& L,
                       std::optional<double> penalty_k = std::nullopt,
                       FemOptions opts = {});

// Splitting constant: min Q(e1|a|b) subject to a2 + b3 = -1, solved exactly
// through its KKT system (8x8 after fixing the in-plane rotation nullspace).
double splitting_alpha(const ElasticTensor& L);
// Penalized analogue: min Q(e1|a|b) + k (1 + a2 + b3)^2, unconstrained.
double splitting_alpha_penalized(const ElasticTensor& L, double k);

// First-order moments of the stress M = L(xi | grad beta):
//   Mhat = int x2 M,  Mcheck = int x3 M.
std::pair<Eigen::Matrix3d, Eigen::Matrix3d> stress_first_moments(
    const CrossSection& cs, const ElasticTensor& L, const AffineStrainProfile& xi,
    const CellSolution& sol);

// First moments (int x2 lambda, int x3 lambda) of the multiplier field.
std::pair<double, double> multiplier_first_moments(const CrossSection& cs,
                                                   const CellSolution& sol);

// L2 distance between the discrete corrector and a reference field.
double beta_l2_error(const FemSpace& space, const Eigen::MatrixX3d& beta,
                     const std::function<Eigen::Vector3d(const Eigen::Vector2d&)>& ref);
// H1 norm of the corrector (L2 of values and gradients).
double beta_h1_norm(const FemSpace& space, const Eigen::MatrixX3d& beta);

}  // namespace rodlim

#endif
