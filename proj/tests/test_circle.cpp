#include "doctest.h"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "bohr/circle.hpp"

using namespace bohr;

namespace {

// Independent series oracle: coefficients of (a - z)/(1 - a z) by multiplying
// the candidate series against the denominator and matching powers of z:
// (c_0 + c_1 z + ...)(1 - a z) = a - z  =>  c_0 = a, c_1 = a c_0 - 1,
// c_{n+1} = a c_n for n >= 1.
std::vector<double> moebius_series_by_division(double a, int order) {
    std::vector<double> c(order + 1);
    c[0] = a;
    if (order >= 1) c[1] = a * c[0] - 1.0;
    for (int n = 2; n <= order; ++n) c[n] = a * c[n - 1];
    return c;
}

}  // namespace

TEST_CASE("moebius coefficients") {
    SUBCASE("a = 0 gives -z") {
        const AnalyticCoefficients c = moebius_coeffs(0.0, 5);
        CHECK(std::abs(c.coeffs[0]) == 0.0);
        CHECK(c.coeffs[1] == Complex(-1, 0));
        for (int n = 2; n <= 5; ++n) CHECK(std::abs(c.coeffs[n]) == 0.0);
    }
    SUBCASE("a = 0.5: a_1 = -0.75, checked against the division oracle") {
        const AnalyticCoefficients c = moebius_coeffs(0.5, 10);
        CHECK(c.coeffs[1].real() == doctest::Approx(-0.75).epsilon(1e-15));
        const auto oracle = moebius_series_by_division(0.5, 10);
        for (int n = 0; n <= 10; ++n)
            CHECK(c.coeffs[n].real() == doctest::Approx(oracle[n]).epsilon(1e-12));
    }
    SUBCASE("division oracle matches for random parameters") {
        for (double a : {0.1, 0.37, 0.62, 0.9, 0.99}) {
            const AnalyticCoefficients c = moebius_coeffs(a, 30);
            const auto oracle = moebius_series_by_division(a, 30);
            for (int n = 0; n <= 30; ++n)
                CHECK(std::abs(c.coeffs[n].real() - oracle[n]) <= 1e-12);
        }
    }
    SUBCASE("boundedness on a 4096-point grid") {
        for (double a : {0.0, 0.3, 0.7, 0.95, 0.999}) {
            double max_abs = 0.0;
            for (int j = 0; j < 4096; ++j) {
                const double t = 2.0 * std::numbers::pi * j / 4096;
                const Complex z(std::cos(t), std::sin(t));
                max_abs = std::max(max_abs, std::abs((a - z) / (1.0 - a * z)));
            }
            CHECK(max_abs <= 1.0 + 1e-6);
        }
    }
    SUBCASE("parameter range is enforced") {
        CHECK_THROWS_AS(moebius_coeffs(1.0, 5), std::invalid_argument);
        CHECK_THROWS_AS(moebius_coeffs(-0.1, 5), std::invalid_argument);
    }
}

TEST_CASE("bohr_sum") {
    SUBCASE("a lone constant coefficient sums to itself for any r") {
        AnalyticCoefficients c;
        c.coeffs = {Complex(1, 0)};
        for (double r : {0.0, 0.3, 0.9}) CHECK(bohr_sum(c, r) == doctest::Approx(1.0));
    }
    SUBCASE("moebius(0.5) at r = 1/3 stays within 1") {
        CHECK(bohr_sum(moebius_coeffs(0.5), 1.0 / 3.0) <= 1.0 + 1e-9);
    }
    SUBCASE("some moebius member exceeds 1 at r = 0.4, per the closed form") {
        // a + (1 - a^2) r/(1 - a r) at a = 0.9, r = 0.4 is 1.01875
        const double closed = moebius_bohr_closed_form(0.9, 0.4);
        CHECK(closed > 1.0);
        CHECK(bohr_sum(moebius_coeffs(0.9), 0.4) == doctest::Approx(closed).epsilon(1e-12));
    }
    SUBCASE("truncated sum matches the closed form to 1e-9 (N = 200, r <= 0.9)") {
        Rng rng(3);
        for (int t = 0; t < 500; ++t) {
            const double a = rng.uniform(0.0, 0.9999);
            const double r = rng.uniform(0.0, 0.9);
            const double closed = moebius_bohr_closed_form(a, r);
            CHECK(std::abs(bohr_sum(moebius_coeffs(a, 200), r) - closed) <= 1e-9);
        }
    }
}

TEST_CASE("bohr radius searches") {
    SUBCASE("moebius family recovers 1/3") {
        const RadiusResult r = bohr_radius(CoefficientFamily::moebius(), 1e-4);
        CHECK_FALSE(r.saturated_cap);
        CHECK(std::abs(r.radius - 1.0 / 3.0) <= 1e-3);
    }
    SUBCASE("a0 = 0 family recovers 1/sqrt(2)") {
        const RadiusResult r = bohr_radius(CoefficientFamily::moebius_a0_zero(), 1e-4);
        CHECK_FALSE(r.saturated_cap);
        CHECK(std::abs(r.radius - 1.0 / std::sqrt(2.0)) <= 1e-3);
    }
    SUBCASE("the zero family saturates at the cap, reported not thrown") {
        const RadiusResult r = bohr_radius(CoefficientFamily::constant_zero(), 1e-4);
        CHECK(r.saturated_cap);
        CHECK(r.radius == doctest::Approx(0.95));
    }
    SUBCASE("beyond 1/3 some member exceeds 1") {
        const CoefficientFamily family = CoefficientFamily::moebius();
        for (double r : {0.335, 0.34, 0.4, 0.6, 0.9})
            CHECK(family.sup_bohr_sum(r) > 1.0 + 1e-9);
    }
    SUBCASE("the a0 = 0 oracle: r (a + (1-a^2) r/(1-a r)) = 1 at a = r = 1/sqrt 2") {
        const double v = 1.0 / std::sqrt(2.0);
        CHECK(std::abs(v * moebius_bohr_closed_form(v, v) - 1.0) <= 1e-9);
    }
}

TEST_CASE("circle reduction of the first Bohr inequality") {
    SUBCASE("r = 1/3: constraint value is exactly 1/2") {
        const VerificationReport rep = thm1_circle_reduction(0.5, 1.0 / 3.0);
        CHECK(std::abs(rep.constraint_value - 0.5) <= 1e-12);
        CHECK(rep.constraint_satisfied);
        CHECK(rep.pass);
    }
    SUBCASE("r = 0.25: constraint 1/3 < 1/2 and the inequality holds") {
        const VerificationReport rep = thm1_circle_reduction(0.5, 0.25);
        CHECK(rep.constraint_value == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
        CHECK(rep.constraint_satisfied);
        CHECK(rep.lhs <= 1.0 + 1e-9);
        CHECK(rep.pass);
    }
    SUBCASE("r = 0.5: constraint 1 > 1/2, inequality not claimed") {
        const VerificationReport rep = thm1_circle_reduction(0.9, 0.5);
        CHECK(rep.constraint_value == doctest::Approx(1.0).epsilon(1e-10));
        CHECK_FALSE(rep.constraint_satisfied);
        CHECK(rep.pass);  // vacuous
    }
    SUBCASE("the assembled lhs equals bohr_sum") {
        for (double a : {0.0, 0.2, 0.5, 0.8, 0.99})
            for (double r : {0.1, 1.0 / 3.0}) {
                const VerificationReport rep = thm1_circle_reduction(a, r);
                CHECK(rep.lhs == doctest::Approx(bohr_sum(moebius_coeffs(a), r)).epsilon(1e-12));
            }
    }
    SUBCASE("lhs does not depend on the circle point") {
        const double base = thm1_circle_reduction(0.4, 0.3, 0.0).lhs;
        for (double theta : {0.5, 1.0, 2.7})
            CHECK(thm1_circle_reduction(0.4, 0.3, theta).lhs ==
                  doctest::Approx(base).epsilon(1e-12));
    }
    SUBCASE("1000 moebius samples stay within 1 at r = 1/3") {
        for (int i = 0; i < 1000; ++i) {
            const double a = i / 1000.0;
            const VerificationReport rep = thm1_circle_reduction(a, 1.0 / 3.0);
            CHECK(rep.lhs <= 1.0 + 1e-9);
            CHECK(rep.pass);
        }
    }
    SUBCASE("the lhs climbs to 1 as the parameter approaches the extremal point") {
        // consistency with the sharpness of the 1/3 radius: the slack of the
        // inequality vanishes along the moebius family
        double prev = 0.0;
        for (double a : {0.9, 0.99, 0.999, 0.9999}) {
            const double lhs = thm1_circle_reduction(a, 1.0 / 3.0).lhs;
            CHECK(lhs > prev);
            prev = lhs;
        }
        CHECK(prev > 1.0 - 1e-6);
        CHECK(prev <= 1.0 + 1e-9);
    }
}

TEST_CASE("remark3 lhs") {
    SUBCASE("mu = pi/2, n~ = 1 gives 1/4") {
        CHECK(remark3_lhs(std::numbers::pi / 2 - 1e-15, 1) == doctest::Approx(0.25).epsilon(1e-9));
    }
    SUBCASE("1/n~^2 scaling") {
        const double mu = 0.7;
        CHECK(remark3_lhs(mu, 2) == doctest::Approx(remark3_lhs(mu, 1) / 4.0).epsilon(1e-14));
        CHECK(remark3_lhs(mu, -3) == doctest::Approx(remark3_lhs(mu, 1) / 9.0).epsilon(1e-14));
    }
    SUBCASE("strictly decreasing in mu") {
        double prev = std::numeric_limits<double>::infinity();
        for (int i = 0; i < 50; ++i) {
            const double mu = 1e-8 * std::pow(1.5e8, i / 49.0);
            const double v = remark3_lhs(mu, 1);
            CHECK(v < prev);
            prev = v;
        }
    }
    SUBCASE("agrees with the naive sin/(1-cos) form where it is stable") {
        for (double mu : {0.1, 0.5, 1.0, 1.5})
            CHECK(remark3_lhs(mu, 1) ==
                  doctest::Approx(std::sin(mu) / (1.0 - std::cos(mu)) / 4.0).epsilon(1e-12));
    }
    SUBCASE("blows up like 1/(2 mu) as mu -> 0") {
        for (double mu : {1e-4, 1e-6, 1e-8})
            CHECK(remark3_lhs(mu, 1) == doctest::Approx(1.0 / (2.0 * mu)).epsilon(1e-6));
    }
    SUBCASE("domain errors") {
        CHECK_THROWS_AS(remark3_lhs(0.0, 1), std::invalid_argument);
        CHECK_THROWS_AS(remark3_lhs(2.0, 1), std::invalid_argument);
        CHECK_THROWS_AS(remark3_lhs(0.5, 0), std::invalid_argument);
    }
}

TEST_CASE("mu function check") {
    SUBCASE("mu = pi/4 with M = 200 on a 4096 grid") {
        const MuCheckReport r = mu_function_check({std::numbers::pi / 4, 200}, 4096);
        CHECK(r.max_abs < 1.0);
        CHECK(r.a0 == doctest::Approx(std::cos(std::numbers::pi / 4)).epsilon(1e-15));
        CHECK(r.coeff_residual <= 1e-6);
        CHECK(r.pass);
        // the l1 truncation tail 1/(2M) = 2.5e-3 exceeds 1e-6, so it is flagged
        CHECK(r.truncation_flagged);
    }
    SUBCASE("mu = pi/3 has a0 = 1/2 exactly") {
        const MuCheckReport r = mu_function_check({std::numbers::pi / 3, 64}, 512);
        CHECK(r.a0 == doctest::Approx(0.5).epsilon(1e-15));
        CHECK(r.pass);
    }
    SUBCASE("a0 -> 0+ as mu -> pi/2") {
        const MuCheckReport r = mu_function_check({std::numbers::pi / 2 - 1e-3, 64}, 512);
        CHECK(r.a0 > 0.0);
        CHECK(r.a0 < 2e-3);
        CHECK(r.pass);
    }
    SUBCASE("20 values spanning (0.01, pi/2 - 0.01)") {
        for (int i = 0; i < 20; ++i) {
            const double mu = 0.01 + (std::numbers::pi / 2 - 0.02) * i / 19.0;
            CHECK(mu_function_check({mu, 150}, 2048).pass);
        }
    }
    SUBCASE("aliasing guard") {
        CHECK_THROWS_AS(mu_function_check({0.5, 300}, 512), std::invalid_argument);
    }
}
