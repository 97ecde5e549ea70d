#pragma once

#include <functional>
#include <string>
#include <vector>

#include "bohr/bohr_verify.hpp"

namespace bohr {

/**
 * @brief Truncated coefficient sequence a_0..a_N of an analytic function on
 * the unit circle.
 */
struct AnalyticCoefficients {
    std::vector<Complex> coeffs;

    int truncation() const { return static_cast<int>(coeffs.size()) - 1; }
};

/// Coefficients of the disk automorphism z -> (a - z)/(1 - a z):
/// a_0 = a, a_n = -(1 - a^2) a^{n-1} for n >= 1.  Requires 0 <= a < 1.
AnalyticCoefficients moebius_coeffs(double a, int truncation = 200);

/// Coefficients of z (a - z)/(1 - a z); same family shifted so a_0 = 0.
AnalyticCoefficients shifted_moebius_coeffs(double a, int truncation = 200);

/// sum_n |a_n| r^n over the stored coefficients (the n = 0 term included).
double bohr_sum(const AnalyticCoefficients& c, double r);

/// Closed form of the Moebius Bohr sum: a + (1 - a^2) r / (1 - a r).
double moebius_bohr_closed_form(double a, double r);

/**
 * @brief A sampled family of admissible coefficient sequences.
 *
 * Each member keeps its truncated coefficients together with a closed-form
 * evaluator of the underlying function; construction certifies boundedness
 * (max |f| <= 1 + 1e-6) on a 4096-point grid over a spread of members.  The
 * truncated partial sums themselves may overshoot near the boundary (the
 * usual partial-sum ringing), so the certificate evaluates the function, not
 * the polynomial.
 */
struct CoefficientFamily {
    struct Member {
        AnalyticCoefficients coeffs;
        std::function<Complex(Complex)> eval;  // underlying function on |z| = 1
        double param = 0.0;
    };

    std::string name;
    std::vector<Member> members;

    static CoefficientFamily moebius(int truncation = 200);
    static CoefficientFamily moebius_a0_zero(int truncation = 200);
    static CoefficientFamily constant_zero();

    double sup_bohr_sum(double r) const;
};

struct RadiusResult {
    double radius = 0.0;
    bool saturated_cap = false;  // the family never exceeded 1 up to the r-cap
    double cap = 0.95;
};

/// Bisection for the largest r with sup over the family of bohr_sum <= 1;
/// r is capped at 0.95 (geometric tails below 1e-9 at truncation 200).
RadiusResult bohr_radius(const CoefficientFamily& family, double tol);

/**
 * @brief The circle instantiation of the first Bohr inequality.
 *
 * Dual bookkeeping: pi_{2k-1}(x) = x^k and pi_{2k}(x) = x^{-k} (so the
 * contragredient of an odd-index representation is the next even one),
 * R_{2k-1} = z^k with |z| = r, R_{2k} = 0, all norms the absolute value, and
 * the dot product the product of complex numbers.  The lhs is assembled
 * through the same per-term machinery as the group-side verifier, so the
 * classical radius drops out as a corollary: the constraint sum_k r^k <= 1/2
 * is exactly r <= 1/3.
 */
VerificationReport thm1_circle_reduction(double a, double r, double theta = 0.0,
                                         int truncation = 200);

/// (1/(4 n~^2)) sin(mu)/(1 - cos(mu)) = (1/(4 n~^2)) cot(mu/2); evaluated in
/// the cotangent form, which is stable as mu -> 0.
double remark3_lhs(double mu, long n_tilde);

/**
 * @brief The counterexample function
 *   f_mu(e^{i theta}) = cos(mu) + i sin(mu) sum_{n != 0} e^{i n theta}/(4 n^2)
 * truncated at |n| <= truncation.
 */
struct MuFunction {
    double mu = 0.5;
    int truncation = 200;
};

struct MuCheckReport {
    double max_abs = 0.0;         // max |f_mu| over the theta grid
    double a0 = 0.0;              // cos(mu)
    double coeff_residual = 0.0;  // DFT-extracted a_n vs i sin(mu)/(4 n^2)
    double tail_bound = 0.0;      // sum_{|n| > M} 1/(4 n^2)
    bool truncation_flagged = false;  // tail_bound > 1e-6
    bool pass = false;            // |f| < 1, a0 > 0, residual <= 1e-6
};

/// Samples the truncated f_mu on a theta grid, checks |f_mu| < 1 and
/// a_0 = cos(mu) > 0, and recovers the coefficients by a discrete Fourier
/// analysis of the samples (grid must exceed twice the truncation).
MuCheckReport mu_function_check(const MuFunction& mf, int grid = 4096);

}  // namespace bohr
