#include "doctest.h"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "bohr/convexity.hpp"
#include "bohr/matfun.hpp"

using namespace bohr;

TEST_CASE("max_theta_norm") {
    SUBCASE("y = 0 reduces to the operator norm of x") {
        Rng rng(1);
        const Matrix x = random_matrix(rng, 3);
        CHECK(max_theta_norm(x, Matrix::Zero(3, 3)) ==
              doctest::Approx(spectral_norm(x)).epsilon(1e-12));
    }
    SUBCASE("the diagonal pair gives 1 at every angle") {
        Matrix x = Matrix::Zero(2, 2), y = Matrix::Zero(2, 2);
        x(0, 0) = 1.0;
        y(1, 1) = 1.0;
        CHECK(max_theta_norm(x, y) == doctest::Approx(1.0).epsilon(1e-12));
    }
    SUBCASE("scalars 1 and 1 give 2 at theta = 0") {
        const Matrix one = Matrix::Identity(1, 1);
        CHECK(max_theta_norm(one, one) == doctest::Approx(2.0).epsilon(1e-12));
    }
    SUBCASE("scalar case agrees with the closed form |x| + |y|") {
        Rng rng(2);
        for (int t = 0; t < 200; ++t) {
            Matrix x(1, 1), y(1, 1);
            x(0, 0) = rng.complex_gaussian();
            y(0, 0) = rng.complex_gaussian();
            const double expected = std::abs(x(0, 0)) + std::abs(y(0, 0));
            CHECK(max_theta_norm(x, y) == doctest::Approx(expected).epsilon(1e-9));
        }
    }
    SUBCASE("invariant under a phase change of y") {
        Rng rng(3);
        const Matrix x = random_matrix(rng, 2);
        const Matrix y = random_matrix(rng, 2);
        const double base = max_theta_norm(x, y);
        for (double phi : {0.4, 1.9, 3.3}) {
            const Complex rot(std::cos(phi), std::sin(phi));
            CHECK(max_theta_norm(x, rot * y) == doctest::Approx(base).epsilon(1e-9));
        }
    }
    SUBCASE("dominates both endpoints") {
        Rng rng(4);
        for (int t = 0; t < 50; ++t) {
            const Matrix x = random_matrix(rng, 2);
            const Matrix y = random_matrix(rng, 2);
            const double m = max_theta_norm(x, y);
            CHECK(m >= spectral_norm(x) - 1e-9);
            CHECK(m >= spectral_norm(y) - 1e-9);
        }
    }
    SUBCASE("grid floor is enforced") {
        CHECK_THROWS_AS(max_theta_norm(Matrix::Identity(2, 2), Matrix::Identity(2, 2), 8),
                        std::invalid_argument);
    }
}

TEST_CASE("estimate_lambda") {
    SUBCASE("scalar case approaches 1 at p = 2") {
        const ConvexityEstimate e = estimate_lambda(2.0, 1, 5000, 5);
        CHECK(e.lambda_hat >= 0.9);
        CHECK(e.lambda_hat <= 1.0 + 1e-9);
    }
    SUBCASE("operator norm in dimension 2 fails convexity for every p") {
        for (double p : {2.0, 3.0, 4.0}) {
            const ConvexityEstimate e = estimate_lambda(p, 2, 300, 7);
            CHECK(e.lambda_hat <= 1e-9);
        }
    }
    SUBCASE("canonical pairs alone suffice (trials = 1)") {
        const ConvexityEstimate e = estimate_lambda(2.0, 2, 1, 9);
        CHECK(e.lambda_hat <= 1e-9);
        CHECK((e.worst_x - e11_matrix(2)).cwiseAbs().maxCoeff() == 0.0);
    }
    SUBCASE("p below 2 is rejected") {
        CHECK_THROWS_AS(estimate_lambda(1.5, 1, 10, 1), std::invalid_argument);
    }
}

TEST_CASE("analytic index polarization") {
    const DualList d8 = dual(build_group("cyclic:8"));
    CHECK(analytic_indices(d8) == std::vector<int>{1, 2, 3});  // 4 is self-conjugate
    const DualList d16 = dual(build_group("cyclic:16"));
    CHECK(analytic_indices(d16) == std::vector<int>{1, 2, 3, 4, 5, 6, 7});
}

TEST_CASE("gen_Finfty") {
    const GroupTable g = build_group("cyclic:8");
    const DualList d = dual(g);

    SUBCASE("support {0} gives a constant function") {
        const OperatorFunction f = gen_Finfty(g, d, 2, {0}, 11);
        for (int x = 1; x < g.order; ++x)
            CHECK((f.f.values[x] - f.f.values[0]).cwiseAbs().maxCoeff() <= 1e-12);
        CHECK(f.membership_residual <= 1e-10);
    }
    SUBCASE("support {0, 1, 2} passes the membership re-check") {
        const OperatorFunction f = gen_Finfty(g, d, 2, {0, 1, 2}, 13);
        CHECK(f.membership_residual <= 1e-10);
        double sup = 0.0;
        for (const auto& v : f.f.values) sup = std::max(sup, spectral_norm(v));
        CHECK(sup == doctest::Approx(1.0).epsilon(1e-12));  // rescaled to the sup
    }
    SUBCASE("a conjugate pair in the support is rejected") {
        CHECK_THROWS_AS(gen_Finfty(g, d, 1, {1, 7}, 15), std::invalid_argument);
    }
    SUBCASE("a self-conjugate character is rejected") {
        CHECK_THROWS_AS(gen_Finfty(g, d, 1, {0, 4}, 17), std::invalid_argument);
    }
    SUBCASE("nonabelian groups are rejected") {
        const GroupTable s3 = build_group("symmetric:3");
        CHECK_THROWS_AS(gen_Finfty(s3, dual(s3), 1, {0}, 19), std::invalid_argument);
    }
}

TEST_CASE("thm3 forward direction") {
    const GroupTable g = build_group("cyclic:16");
    const DualList d = dual(g);
    SUBCASE("scalar certified radius 1/3") {
        const Thm3Report r = thm3_forward_check(g, d, 1, 2.0, 1.0 / 3.0, 500, 21);
        CHECK(r.pass);
        CHECK(r.max_extraction_error <= 1e-10);
        CHECK(r.worst_margin >= -1e-9);
    }
    SUBCASE("matrix case: extraction and range checks only") {
        const Thm3Report r = thm3_forward_check(g, d, 2, 2.0, 0.0, 100, 23);
        CHECK(r.pass);
        CHECK(r.max_extraction_error <= 1e-10);
    }
}

TEST_CASE("thm3 converse direction (scalar, r = 1/3)") {
    const GroupTable g = build_group("cyclic:16");
    const DualList d = dual(g);
    const Thm3Report r = thm3_converse_check(g, d, 1000, 25);
    CHECK(r.pass);
    CHECK(r.failures == 0);
    CHECK(r.max_membership_residual <= 1e-10);
    CHECK(r.worst_margin >= -1e-9);
}

TEST_CASE("converse inequality edge cases by hand") {
    const GroupTable g = build_group("cyclic:8");
    const DualList d = dual(g);
    SUBCASE("constant |c| <= 1: the weighted sum collapses to |c|") {
        const OperatorFunction f = gen_Finfty(g, d, 1, {0}, 31);
        const FourierCoefficients c = fourier_transform(f.f, d);
        const double f0 = std::abs(c.at(0)(0, 0));
        double sum = f0 * f0;
        for (int n = 1; n < d.size(); ++n)
            sum += std::pow(1.0 / 3.0, n) * std::norm(c.at(n)(0, 0));
        CHECK(std::sqrt(sum) == doctest::Approx(f0).epsilon(1e-12));
        CHECK(std::sqrt(sum) <= 1.0 + 1e-9);
    }
    SUBCASE("a single character function contributes one weighted term") {
        const OperatorFunction f = gen_Finfty(g, d, 1, {2}, 33);
        const FourierCoefficients c = fourier_transform(f.f, d);
        CHECK(std::abs(c.at(0)(0, 0)) <= 1e-12);
        const double c2 = std::abs(c.at(2)(0, 0));
        CHECK(c2 == doctest::Approx(1.0).epsilon(1e-12));  // sup-normalized character
        double sum = 0.0;
        for (int n = 1; n < d.size(); ++n)
            sum += std::pow(1.0 / 3.0, n) * std::norm(c.at(n)(0, 0));
        // only the n = 2 term survives: sqrt(r^2 |c_2|^2) with r = 1/3
        CHECK(std::sqrt(sum) == doctest::Approx(std::sqrt(1.0 / 9.0) * c2).epsilon(1e-9));
        CHECK(std::sqrt(sum) <= 1.0 + 1e-9);
    }
}

TEST_CASE("edge cases of the forward inequality") {
    // A = 0: both sides reduce to r0^{1/p} ||B|| vs ||B||; holds since r0 <= 1
    const GroupTable g = build_group("cyclic:8");
    const DualList d = dual(g);
    const Irrep& pi1 = d.at(1);
    Rng rng(27);
    const Matrix b = random_matrix(rng, 1);
    GroupFunction f;
    f.group_order = g.order;
    for (int x = 0; x < g.order; ++x) f.values.push_back(pi1.at(x)(0, 0) * b);
    double sup = 0.0;
    for (int x = 0; x < g.order; ++x) sup = std::max(sup, spectral_norm(f.values[x]));
    const double lhs = std::pow((1.0 / 3.0) * std::pow(spectral_norm(b), 2.0), 0.5);
    CHECK(lhs <= sup + 1e-12);
    // B = 0: equality ||A|| = ||A||
    const Matrix a = random_matrix(rng, 1);
    CHECK(std::pow(std::pow(spectral_norm(a), 2.0), 0.5) ==
          doctest::Approx(spectral_norm(a)).epsilon(1e-12));
}
