#include "bohr/selftest.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "bohr/bohr_verify.hpp"
#include "bohr/circle.hpp"
#include "bohr/convexity.hpp"
#include "bohr/fourier.hpp"
#include "bohr/matfun.hpp"

namespace bohr {

namespace {

struct Collector {
    std::vector<SelfTestResult>& results;
    std::string module;
    bool enabled;

    void add(const std::string& invariant, bool pass, const std::string& detail = "") {
        if (!enabled) return;
        results.push_back({module, invariant, pass, detail});
    }
};

std::string fmt(double v) {
    std::ostringstream o;
    o.precision(3);
    o << std::scientific << v;
    return o.str();
}

void selftest_group_rep(Collector c, const SelfTestOptions& opt) {
    if (!c.enabled) return;
    for (const char* name : {"cyclic:4", "cyclic:8", "dihedral:3", "dihedral:4", "symmetric:3",
                             "symmetric:4", "quaternion:8"}) {
        const GroupTable g = build_group(name);
        const auto axioms = check_group_axioms(g);
        c.add(std::string(name) + " axioms", axioms.pass());

        DualList d = dual(g);
        if (opt.inject_fault_group_rep) d.irreps.back().matrices[0](0, 0) += 1e-3;
        const DualReport rep = verify_dual(d, g, opt.seed);
        c.add(std::string(name) + " dual", rep.pass,
              "unitarity " + fmt(rep.max_unitarity_defect) + ", homomorphism " +
                  fmt(rep.max_homomorphism_defect));

        double sigma_defect = 0.0;
        for (const auto& irr : d.irreps)
            for (const auto& m : irr.matrices)
                for (double s : singular_values(m))
                    sigma_defect = std::max(sigma_defect, std::abs(s - 1.0));
        c.add(std::string(name) + " unit singular values", sigma_defect <= 1e-10,
              fmt(sigma_defect));
    }

    const GroupTable g = build_group("quaternion:8");
    const DualList d = dual(g);
    for (int n = 0; n < d.size(); ++n) {
        const Irrep twice = contragredient(contragredient(d.at(n)));
        double defect = 0.0;
        for (int x = 0; x < g.order; ++x)
            defect = std::max(defect, (twice.at(x) - d.at(n).at(x)).cwiseAbs().maxCoeff());
        if (defect != 0.0) {
            c.add("contragredient involution", false, fmt(defect));
            return;
        }
    }
    c.add("contragredient involution", true);
}

void selftest_fourier(Collector c, const SelfTestOptions& opt) {
    if (!c.enabled) return;
    for (const char* name : {"cyclic:8", "symmetric:3", "quaternion:8"}) {
        const GroupTable g = build_group(name);
        const DualList d = dual(g);
        double round_trip = 0.0, parseval_resid = 0.0;
        for (int t = 0; t < 50; ++t) {
            Rng rng(split_seed(opt.seed, t));
            std::vector<Complex> vals(g.order);
            for (auto& v : vals) v = rng.complex_gaussian();
            const GroupFunction f = GroupFunction::scalar(vals);
            const FourierCoefficients coeffs = fourier_transform(f, d);
            for (int x = 0; x < g.order; ++x)
                round_trip = std::max(
                    round_trip, std::abs(inverse_transform(coeffs, d, x)(0, 0) - vals[x]));
            const ParsevalPair p = parseval(f, d);
            parseval_resid = std::max(parseval_resid, std::abs(p.lhs - p.rhs));
        }
        c.add(std::string(name) + " round trip", round_trip <= 1e-10, fmt(round_trip));
        c.add(std::string(name) + " parseval", parseval_resid <= 1e-10, fmt(parseval_resid));
    }

    // mean of a nontrivial representation vanishes
    const GroupTable g = build_group("symmetric:3");
    const DualList d = dual(g);
    double mean_defect = 0.0;
    for (int n = 1; n < d.size(); ++n) {
        Matrix acc = Matrix::Zero(d.at(n).dim, d.at(n).dim);
        for (int x = 0; x < g.order; ++x) acc += d.at(n).at(x).adjoint();
        mean_defect = std::max(mean_defect, (acc / g.order).cwiseAbs().maxCoeff());
    }
    c.add("nontrivial irrep mean", mean_defect <= 1e-10, fmt(mean_defect));
}

void selftest_matfun(Collector c, const SelfTestOptions& opt) {
    if (!c.enabled) return;
    Rng rng(opt.seed);
    double trace_defect = 0.0, invariance_defect = 0.0;
    for (int t = 0; t < 100; ++t) {
        const int dim = 2 + rng.index(2);
        const Matrix a = random_matrix(rng, dim);
        const auto s = singular_values(a);
        double sum_sq = 0.0;
        for (double v : s) sum_sq += v * v;
        const double tr = (a.adjoint() * a).trace().real();
        trace_defect = std::max(trace_defect, std::abs(sum_sq - tr) / std::max(1.0, tr));

        const Matrix u = random_unitary(rng, dim);
        const Matrix v = random_unitary(rng, dim);
        const auto s2 = singular_values(u * a * v);
        for (size_t i = 0; i < s.size(); ++i)
            invariance_defect = std::max(invariance_defect, std::abs(s[i] - s2[i]));
    }
    c.add("singular value trace identity", trace_defect <= 1e-9, fmt(trace_defect));
    c.add("unitary invariance", invariance_defect <= 1e-9, fmt(invariance_defect));

    const auto lemma = run_lemma1_sweep(3, 400, 4, opt.seed);
    c.add("lemma oracle sweep", lemma.failures == 0, "margin " + fmt(lemma.worst_margin));
    const auto tb = run_thmB_sweep(3, 200, opt.seed);
    c.add("norm equivalence sweep", tb.failures == 0);
    const auto tc = run_thmC_sweep(3, 200, opt.seed);
    c.add("norm product bound sweep", tc.failures == 0, "margin " + fmt(tc.worst_margin));
    const auto td = run_thmD_sweep(6, 200, opt.seed);
    c.add("gauge dominance sweep", td.failures == 0, "margin " + fmt(td.worst_margin));
    const auto te = run_thmE_sweep(200, opt.seed);
    c.add("gmf bound sweep", te.failures == 0, "margin " + fmt(te.worst_margin));
}

void selftest_bohr(Collector c, const SelfTestOptions& opt) {
    if (!c.enabled) return;
    for (const char* name : {"cyclic:12", "symmetric:3", "quaternion:8"}) {
        const GroupTable g = build_group(name);
        const DualList d = dual(g);
        const auto cb = run_coeff_bound_sweep(g, d, 200, opt.seed);
        c.add(std::string(name) + " coefficient bound", cb.failures == 0,
              "margin " + fmt(cb.worst_margin));
        for (Variant v : {Variant::I, Variant::II, Variant::III}) {
            const auto s1 = run_bohr_sweep(Theorem::One, g, d, v, 150, opt.seed);
            const auto s2 = run_bohr_sweep(Theorem::Two, g, d, v, 150, opt.seed);
            c.add(std::string(name) + " " + variant_tag(Theorem::One, v),
                  s1.failures == 0, "margin " + fmt(s1.worst_margin));
            c.add(std::string(name) + " " + variant_tag(Theorem::Two, v),
                  s2.failures == 0, "margin " + fmt(s2.worst_margin));
        }
    }
    const GroupTable g = build_group("symmetric:3");
    const DualList d = dual(g);
    const auto negative = run_coeff_bound_sweep(g, d, 100, opt.seed, /*negative_control=*/true);
    c.add("negative control detects violations", negative.failures > 0,
          std::to_string(negative.failures) + " of 100");
}

void selftest_circle(Collector c, const SelfTestOptions& opt) {
    if (!c.enabled) return;
    Rng rng(opt.seed);
    double closed_form_defect = 0.0;
    for (int t = 0; t < 200; ++t) {
        const double a = rng.uniform(0.0, 0.999);
        const double r = rng.uniform(0.0, 0.9);
        closed_form_defect =
            std::max(closed_form_defect, std::abs(bohr_sum(moebius_coeffs(a), r) -
                                                  moebius_bohr_closed_form(a, r)));
    }
    c.add("moebius closed form", closed_form_defect <= 1e-9, fmt(closed_form_defect));

    const auto reduction = thm1_circle_reduction(0.5, 1.0 / 3.0);
    c.add("circle reduction at r = 1/3",
          std::abs(reduction.constraint_value - 0.5) <= 1e-12 && reduction.pass);

    double prev = std::numeric_limits<double>::infinity();
    bool monotone = true;
    for (int i = 0; i < 20; ++i) {
        const double mu = 0.01 * std::pow(140.0, i / 19.0);  // log grid in (0.01, 1.4)
        const double v = remark3_lhs(mu, 1);
        if (v >= prev) monotone = false;
        prev = v;
    }
    c.add("remark3 lhs monotone", monotone);

    const MuCheckReport mu = mu_function_check({0.7, 120}, 1024);
    c.add("mu function check", mu.pass,
          "|f| " + fmt(mu.max_abs) + ", residual " + fmt(mu.coeff_residual));
}

void selftest_convexity(Collector c, const SelfTestOptions& opt) {
    if (!c.enabled) return;
    const auto scalar = estimate_lambda(2.0, 1, 2000, opt.seed, 128);
    c.add("scalar lambda near 1", scalar.lambda_hat >= 0.9 && scalar.lambda_hat <= 1.0 + 1e-9,
          fmt(scalar.lambda_hat));
    const auto operator2 = estimate_lambda(2.0, 2, 200, opt.seed, 128);
    c.add("operator-norm lambda vanishes", operator2.lambda_hat <= 1e-9,
          fmt(operator2.lambda_hat));

    const GroupTable g = build_group("cyclic:16");
    const DualList d = dual(g);
    const auto forward = thm3_forward_check(g, d, 1, 2.0, 1.0 / 3.0, 100, opt.seed);
    c.add("forward direction (scalar)", forward.pass,
          "extraction " + fmt(forward.max_extraction_error));
    const auto converse = thm3_converse_check(g, d, 200, opt.seed);
    c.add("converse direction (scalar)", converse.pass,
          "residual " + fmt(converse.max_membership_residual));
}

}  // namespace

std::vector<SelfTestResult> run_selftest(const SelfTestOptions& options) {
    std::vector<SelfTestResult> results;
    auto enabled = [&](const std::string& module) {
        return options.only.empty() || options.only == module;
    };
    selftest_group_rep({results, "group_rep", enabled("group_rep")}, options);
    selftest_fourier({results, "fourier", enabled("fourier")}, options);
    selftest_matfun({results, "matfun", enabled("matfun")}, options);
    selftest_bohr({results, "bohr_verify", enabled("bohr_verify")}, options);
    selftest_circle({results, "circle", enabled("circle")}, options);
    selftest_convexity({results, "convexity", enabled("convexity")}, options);
    return results;
}

}  // namespace bohr
