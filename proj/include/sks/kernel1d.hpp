#pragma once

#include <Eigen/Dense>

namespace sks {

/// One-dimensional squared-exponential kernel k(x, x') = exp(-(x-x')^2 / (2 l^2)).
///
/// Derivatives are taken with respect to the first argument and are available
/// in closed form up to second order, which covers every operator channel the
/// shipped benchmark PDEs need.
struct SeKernel {
    double lengthscale;

    explicit SeKernel(double ell);

    double operator()(double x, double x_prime) const {
        const double r = (x - x_prime) / lengthscale;
        return std::exp(-0.5 * r * r);
    }

    /// d^order/dx^order k(x, x') for order in {0, 1, 2}.
    double deriv(double x, double x_prime, int order) const;
};

/// Closed-form derivative of the SE kernel, free-function form.
///
/// order 0: k, order 1: -((x-x')/l^2) k, order 2: ((x-x')^2/l^4 - 1/l^2) k.
double se_deriv(double x, double x_prime, double lengthscale, int order);

/// Nugget-regularized Cholesky factor of a per-axis kernel Gram matrix.
///
/// Holds L with L L^T = K_j + nugget * I, where K_j is the SE Gram over the
/// axis locations. All structured solves against the (regularized) Gram go
/// through this factor.
struct AxisGram {
    Eigen::VectorXd locations;
    double lengthscale = 1.0;
    double nugget = 0.0;
    Eigen::MatrixXd chol;  // lower triangular

    int size() const { return static_cast<int>(locations.size()); }

    /// Reassembles K_j + nugget * I (for oracles and debugging).
    Eigen::MatrixXd dense() const;

    /// Applies (K_j + nugget I)^{-1} to each column of a dense block, in place.
    void solve_in_place(Eigen::Ref<Eigen::MatrixXd> block) const;
};

/// Factors the SE Gram over strictly increasing axis locations.
///
/// Throws std::invalid_argument on unsorted or duplicate locations and
/// std::runtime_error (naming the axis, suggesting a larger nugget) if the
/// regularized matrix is not numerically positive definite. `axis` is only
/// used for error reporting.
AxisGram gram_cholesky(const Eigen::VectorXd& locations, double lengthscale,
                       double nugget, int axis = -1);

}  // namespace sks
