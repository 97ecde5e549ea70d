#include "bohr/circle.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace bohr {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kRadiusCap = 0.95;

Complex moebius_eval(double a, Complex z) { return (a - z) / (1.0 - a * z); }

double grid_max_abs(const std::function<Complex(Complex)>& eval, int grid) {
    double max_abs = 0.0;
    for (int j = 0; j < grid; ++j) {
        const double t = 2.0 * kPi * j / grid;
        max_abs = std::max(max_abs, std::abs(eval(Complex(std::cos(t), std::sin(t)))));
    }
    return max_abs;
}

void certify_bounded(const CoefficientFamily& family) {
    const size_t stride = std::max<size_t>(1, family.members.size() / 32);
    for (size_t i = 0; i < family.members.size(); i += stride) {
        const double m = grid_max_abs(family.members[i].eval, 4096);
        if (m > 1.0 + 1e-6)
            throw std::runtime_error("family '" + family.name + "' member " + std::to_string(i) +
                                     " is not bounded by 1 on the circle (grid max " +
                                     std::to_string(m) + ")");
    }
}

// Uniform coverage of [0, 1) plus geometric refinement toward 1, where the
// Moebius Bohr sum approaches its extremal value.
std::vector<double> moebius_parameter_grid() {
    std::vector<double> grid;
    for (int i = 0; i < 1000; ++i) grid.push_back(i / 1000.0);
    for (int j = 0; j <= 160; ++j) grid.push_back(1.0 - std::pow(2.0, -j / 8.0));
    return grid;
}

}  // namespace

AnalyticCoefficients moebius_coeffs(double a, int truncation) {
    if (a < 0.0 || a >= 1.0) throw std::invalid_argument("moebius parameter must be in [0, 1)");
    if (truncation < 0) throw std::invalid_argument("truncation must be >= 0");
    AnalyticCoefficients c;
    c.coeffs.resize(truncation + 1);
    c.coeffs[0] = a;
    double power = 1.0;  // a^{n-1}
    for (int n = 1; n <= truncation; ++n) {
        c.coeffs[n] = -(1.0 - a * a) * power;
        power *= a;
    }
    return c;
}

AnalyticCoefficients shifted_moebius_coeffs(double a, int truncation) {
    if (truncation < 1) throw std::invalid_argument("truncation must be >= 1");
    const AnalyticCoefficients base = moebius_coeffs(a, truncation - 1);
    AnalyticCoefficients c;
    c.coeffs.assign(truncation + 1, Complex(0, 0));
    for (int n = 0; n < truncation; ++n) c.coeffs[n + 1] = base.coeffs[n];
    return c;
}

double bohr_sum(const AnalyticCoefficients& c, double r) {
    double acc = 0.0;
    double power = 1.0;
    for (const auto& a : c.coeffs) {
        acc += std::abs(a) * power;
        power *= r;
    }
    return acc;
}

double moebius_bohr_closed_form(double a, double r) {
    return a + (1.0 - a * a) * r / (1.0 - a * r);
}

CoefficientFamily CoefficientFamily::moebius(int truncation) {
    CoefficientFamily f;
    f.name = "moebius";
    for (double a : moebius_parameter_grid()) {
        Member m;
        m.param = a;
        m.coeffs = moebius_coeffs(a, truncation);
        m.eval = [a](Complex z) { return moebius_eval(a, z); };
        f.members.push_back(std::move(m));
    }
    certify_bounded(f);
    return f;
}

CoefficientFamily CoefficientFamily::moebius_a0_zero(int truncation) {
    CoefficientFamily f;
    f.name = "moebius-a0zero";
    for (double a : moebius_parameter_grid()) {
        Member m;
        m.param = a;
        m.coeffs = shifted_moebius_coeffs(a, truncation);
        m.eval = [a](Complex z) { return z * moebius_eval(a, z); };
        f.members.push_back(std::move(m));
    }
    certify_bounded(f);
    return f;
}

CoefficientFamily CoefficientFamily::constant_zero() {
    CoefficientFamily f;
    f.name = "constant-zero";
    Member m;
    m.param = 0.0;
    m.coeffs.coeffs = {Complex(0, 0)};
    m.eval = [](Complex) { return Complex(0, 0); };
    f.members.push_back(std::move(m));
    certify_bounded(f);
    return f;
}

double CoefficientFamily::sup_bohr_sum(double r) const {
    double sup = 0.0;
    for (const auto& m : members) sup = std::max(sup, bohr_sum(m.coeffs, r));
    return sup;
}

RadiusResult bohr_radius(const CoefficientFamily& family, double tol) {
    if (tol <= 0.0) throw std::invalid_argument("tolerance must be positive");
    RadiusResult out;
    out.cap = kRadiusCap;
    auto admissible = [&](double r) { return family.sup_bohr_sum(r) <= 1.0 + 1e-9; };
    if (admissible(kRadiusCap)) {
        out.radius = kRadiusCap;
        out.saturated_cap = true;
        return out;
    }
    double lo = 0.0, hi = kRadiusCap;
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        (admissible(mid) ? lo : hi) = mid;
    }
    out.radius = lo;
    return out;
}

VerificationReport thm1_circle_reduction(double a, double r, double theta, int truncation) {
    if (a < 0.0 || a >= 1.0) throw std::invalid_argument("moebius parameter must be in [0, 1)");
    if (r < 0.0 || r >= 1.0) throw std::invalid_argument("radius must be in [0, 1)");

    const AnalyticCoefficients c = moebius_coeffs(a, truncation);
    const Complex x(std::cos(theta), std::sin(theta));

    VerificationReport rep;
    rep.variant = "thm1-i";
    rep.dot_mode = "mat/mat/right";
    rep.x = 0;
    rep.constraint_bound = 0.5;
    rep.lhs = std::abs(c.coeffs[0]);  // fhat(pi_0) = a_0 = a >= 0

    const DotMode mode;  // scalar blocks: ordinary complex multiplication
    const NormSpec norm = NormSpec::spectral();
    const GaugeSpec gauge_spec = GaugeSpec::lp(2.0);
    const GmfSpec gmf_spec = GmfSpec::for_dimension(1);

    Matrix coeff(1, 1), pix(1, 1), rn(1, 1);
    Complex x_pow = x, z_pow = r;  // pi_{2k-1}(x) = x^k, R_{2k-1} = z^k with z = r
    for (int k = 1; k <= truncation; ++k) {
        // odd index 2k-1: analytic coefficient a_k, contragredient term zero
        coeff(0, 0) = c.coeffs[k];
        pix(0, 0) = x_pow;
        rn(0, 0) = z_pow;
        const double odd_term =
            bohr_lhs_term(coeff, pix, rn, mode, Variant::I, norm, gauge_spec, gmf_spec, 1);
        // even index 2k: R_{2k} = 0 annihilates conj(a_k) x^{-k} . 0
        coeff(0, 0) = std::conj(c.coeffs[k]);
        pix(0, 0) = std::conj(x_pow);
        rn(0, 0) = 0.0;
        const double even_term =
            bohr_lhs_term(coeff, pix, rn, mode, Variant::I, norm, gauge_spec, gmf_spec, 1);

        rep.lhs += odd_term + even_term;
        rep.constraint_value += std::abs(z_pow);  // |R_{2k-1}| + |R_{2k}| = r^k
        if (k <= 8) rep.per_irrep.emplace_back(2 * k - 1, odd_term);
        x_pow *= x;
        z_pow *= r;
    }

    rep.constraint_satisfied = rep.constraint_value <= rep.constraint_bound + 1e-9;
    rep.margin = rep.rhs_bound - rep.lhs;
    rep.pass = !rep.constraint_satisfied || rep.lhs <= rep.rhs_bound + 1e-9;
    return rep;
}

double remark3_lhs(double mu, long n_tilde) {
    if (!(mu > 0.0 && mu < kPi / 2.0))
        throw std::invalid_argument("mu must lie in (0, pi/2)");
    if (n_tilde == 0) throw std::invalid_argument("n~ must be nonzero");
    const double nn = static_cast<double>(n_tilde) * static_cast<double>(n_tilde);
    return std::cos(mu / 2.0) / std::sin(mu / 2.0) / (4.0 * nn);
}

MuCheckReport mu_function_check(const MuFunction& mf, int grid) {
    if (!(mf.mu > 0.0 && mf.mu < kPi / 2.0))
        throw std::invalid_argument("mu must lie in (0, pi/2)");
    if (mf.truncation < 1) throw std::invalid_argument("truncation must be >= 1");
    if (grid < 2 * mf.truncation + 2)
        throw std::invalid_argument("grid must exceed twice the truncation (aliasing)");

    const int m = mf.truncation;
    const double cmu = std::cos(mf.mu), smu = std::sin(mf.mu);

    // f_mu on the grid; the sum over +-n collapses to cos(n theta)/(2 n^2).
    std::vector<Complex> samples(grid);
    MuCheckReport r;
    r.a0 = cmu;
    for (int j = 0; j < grid; ++j) {
        const double theta = 2.0 * kPi * j / grid;
        double s = 0.0;
        for (int n = 1; n <= m; ++n) s += std::cos(n * theta) / (2.0 * n * n);
        samples[j] = Complex(cmu, smu * s);
        r.max_abs = std::max(r.max_abs, std::abs(samples[j]));
    }

    // discrete Fourier analysis of the samples against the closed form
    for (int n = -m; n <= m; ++n) {
        Complex acc = 0;
        for (int j = 0; j < grid; ++j) {
            const double t = -2.0 * kPi * n * j / grid;
            acc += samples[j] * Complex(std::cos(t), std::sin(t));
        }
        acc /= static_cast<double>(grid);
        const Complex expected =
            (n == 0) ? Complex(cmu, 0) : Complex(0, smu / (4.0 * n * n));
        r.coeff_residual = std::max(r.coeff_residual, std::abs(acc - expected));
    }

    r.tail_bound = 0.5 / m;  // sum_{|n| > M} 1/(4 n^2) <= 1/(2M)
    r.truncation_flagged = r.tail_bound > 1e-6;
    r.pass = r.max_abs < 1.0 && r.a0 > 0.0 && r.coeff_residual <= 1e-6;
    return r;
}

}  // namespace bohr
