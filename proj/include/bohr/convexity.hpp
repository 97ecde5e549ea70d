#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bohr/fourier.hpp"

namespace bohr {

/// max over theta of the operator (spectral) norm of x + e^{i theta} y,
/// computed on a uniform grid (>= 64 points) and sharpened by one
/// golden-section pass around the grid argmax.
double max_theta_norm(const Matrix& x, const Matrix& y, int grid = 256);

/**
 * @brief Empirical estimate of the complex convexity constant lambda:
 * the infimum over pairs of (max_theta^p - ||x||^p) / ||y||^p, clamped at 0.
 *
 * Every run includes the canonical pairs: for d >= 2 the diagonal pair
 * (diag(1,0,..), diag(0,1,0,..)) that forces lambda = 0 for the operator
 * norm, and for d = 1 a sequence of shrinking-|x| pairs down to x = 0 that
 * approaches the scalar infimum 1 at p = 2.
 */
struct ConvexityEstimate {
    double p = 2.0;
    double lambda_hat = 0.0;
    Matrix worst_x, worst_y;
    int theta_resolution = 256;
    long trials = 0;
};

ConvexityEstimate estimate_lambda(double p, int d, long trials, std::uint64_t seed,
                                  int grid = 256);

/**
 * @brief Operator-valued trigonometric polynomial on an abelian group whose
 * adjoint function has vanishing Fourier coefficients wherever the function
 * itself carries data (the finite-group analogue of analyticity).
 */
struct OperatorFunction {
    GroupFunction f;             // matrix-valued, any d >= 1
    std::vector<int> support;    // dual indices carrying data
    double membership_residual = 0.0;
};

/// Dual indices n in Lambda whose contragredient has a strictly larger
/// index; a canonical conjugate-free half of the dual (self-conjugate
/// nontrivial characters are excluded, they cannot carry data).
std::vector<int> analytic_indices(const DualList& d);

/// Builds f(x) = sum_{n in support} A_n pi_n(x) with random matrix
/// coefficients, rescaled so max_x ||f(x)|| = 1.  Requires an abelian group
/// and a support with support and conj(support) meeting only in {0}; the
/// membership residual max_n min(||fhat(pi_n)||, ||fhat*(pi_n)||) over
/// Lambda is re-verified to 1e-10 after construction.
OperatorFunction gen_Finfty(const GroupTable& g, const DualList& d, int dim,
                            const std::vector<int>& support, std::uint64_t seed);

struct Thm3Report {
    long trials = 0;
    long failures = 0;
    double worst_margin = 0.0;
    double max_membership_residual = 0.0;
    double max_extraction_error = 0.0;  // forward direction only
    std::string note;
    bool pass = true;
};

/// Forward direction: for random (A, B) builds f = A + pi_1 B, checks the
/// Fourier extraction recovers A and B to 1e-10, and asserts
/// (||A||^p + r0 ||B||^p)^{1/p} <= max_x ||A + pi_1(x) B|| <= max_theta norm.
/// The middle inequality is asserted only when certified_r0 > 0 (scalar
/// case: lambda = 1 at p = 2 gives r0 = lambda/(2+lambda) = 1/3).
Thm3Report thm3_forward_check(const GroupTable& g, const DualList& d, int dim, double p,
                              double certified_r0, long trials, std::uint64_t seed);

/// Converse direction, scalar case (d = 1, p = 2, lambda = 1): for random
/// members of the analytic class with ||f||_inf <= 1 asserts
/// (|fhat(pi_0)|^2 + sum_n r^n |fhat(pi_n)|^2)^{1/2} <= 1 + 1e-9 at r = 1/3,
/// plus the per-coefficient bound |fhat(pi_n)|^2 <= 2 (1 - |fhat(pi_0)|^2).
/// The weight r^n uses the dual enumeration index.
Thm3Report thm3_converse_check(const GroupTable& g, const DualList& d, long trials,
                               std::uint64_t seed, double r = 1.0 / 3.0);

}  // namespace bohr
