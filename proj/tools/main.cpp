#include <chrono>
#include <cstdint>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "bohr/report.hpp"
#include "bohr/selftest.hpp"

namespace {

using namespace bohr;

struct GlobalOptions {
    std::uint64_t seed = 1;
    long trials = 1000;
    std::string out;
    std::string format = "json";
};

class Timer {
public:
    double seconds() const {
        return std::chrono::duration<double>(Clock::now() - start_).count();
    }

private:
    using Clock = std::chrono::steady_clock;
    Clock::time_point start_ = Clock::now();
};

std::string join_args(int argc, char** argv) {
    std::ostringstream out;
    for (int i = 0; i < argc; ++i) {
        if (i) out << ' ';
        out << argv[i];
    }
    return out.str();
}

void emit(const GlobalOptions& g, const std::string& command, double wall,
          const nlohmann::json& payload) {
    if (g.out.empty() || g.format != "json") return;
    write_text_atomic(g.out, summary_envelope(command, g.seed, wall, payload).dump(2) + "\n");
}

int finish(const GlobalOptions& g, const std::string& command, double wall,
           const nlohmann::json& payload, long failures) {
    emit(g, command, wall, payload);
    return failures == 0 ? 0 : 1;
}

int cmd_verify_bohr(const GlobalOptions& g, const std::string& command_line,
                    const std::string& which, const std::string& group_text,
                    const std::string& variant_text, const std::string& norm_text,
                    const std::string& gauge_text) {
    const GroupTable group = build_group(group_text);
    const DualList d = dual(group);
    const Variant v = parse_variant(variant_text);
    const Theorem t = which == "thm1" ? Theorem::One : Theorem::Two;

    std::optional<BohrTermSpecs> specs;
    if (!norm_text.empty())
        specs = BohrTermSpecs::uniform_norm(d, v, NormSpec::parse(norm_text));
    else if (!gauge_text.empty())
        specs = BohrTermSpecs::uniform_gauge(d, GaugeSpec::parse(gauge_text));

    Timer timer;
    const SweepSummary s = run_bohr_sweep(t, group, d, v, g.trials, g.seed, specs);
    std::cout << which << " " << variant_text << " on " << group.label << ": " << s.trials
              << " trials, " << s.failures << " failures, worst margin " << s.worst_margin
              << "\n";
    return finish(g, command_line, timer.seconds(), to_json(s), s.failures);
}

int cmd_radius(const GlobalOptions& g, const std::string& command_line,
               const std::string& family_name, double tol) {
    Timer timer;
    CoefficientFamily family;
    if (family_name == "moebius")
        family = CoefficientFamily::moebius();
    else if (family_name == "moebius-a0zero")
        family = CoefficientFamily::moebius_a0_zero();
    else
        throw std::invalid_argument("unknown family '" + family_name + "'");
    const RadiusResult r = bohr_radius(family, tol);
    std::cout << "bohr radius (" << family.name << "): " << r.radius
              << (r.saturated_cap ? " (saturated at the r-cap)" : "") << "\n";
    return finish(g, command_line, timer.seconds(), to_json(r), 0);
}

int cmd_remark3(const GlobalOptions& g, const std::string& command_line, double mu_min,
                int steps, long n_tilde, double r0) {
    Timer timer;
    const double mu_max = 1.5607;  // just below pi/2
    std::ostringstream csv;
    csv << "mu,lhs,bound\n";
    nlohmann::json rows = nlohmann::json::array();
    double prev = std::numeric_limits<double>::infinity();
    bool monotone = true;
    for (int i = 0; i < steps; ++i) {
        const double t = steps == 1 ? 0.0 : static_cast<double>(i) / (steps - 1);
        const double mu = mu_min * std::pow(mu_max / mu_min, t);
        const double lhs = remark3_lhs(mu, n_tilde);
        if (lhs >= prev) monotone = false;
        prev = lhs;
        csv << csv_row({mu, lhs, 1.0 / r0});
        rows.push_back({{"mu", mu}, {"lhs", lhs}, {"bound", 1.0 / r0}});
    }
    std::cout << "remark3: lhs decays from " << remark3_lhs(mu_min, n_tilde) << " to " << prev
              << " against the constant bound " << 1.0 / r0
              << (monotone ? " (strictly decreasing in mu)" : " (NOT monotone)") << "\n";
    if (!g.out.empty() && g.format == "csv") {
        write_text_atomic(g.out, csv.str());
        return monotone ? 0 : 1;
    }
    return finish(g, command_line, timer.seconds(), {{"rows", rows}, {"monotone", monotone}},
                  monotone ? 0 : 1);
}

int cmd_selftest(const std::string& only, bool inject_fault, std::uint64_t seed) {
    const auto results = run_selftest({only, inject_fault, seed});
    long failures = 0;
    for (const auto& r : results) {
        std::cout << (r.pass ? "[ ok ] " : "[FAIL] ") << r.module << ": " << r.invariant;
        if (!r.detail.empty()) std::cout << " (" << r.detail << ")";
        std::cout << "\n";
        if (!r.pass) ++failures;
    }
    std::cout << results.size() << " invariants, " << failures << " failures\n";
    return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Fourier analysis on finite groups with numerically certified "
                 "Bohr-type inequality sweeps"};
    app.require_subcommand(1);

    GlobalOptions g;
    app.add_option("--seed", g.seed, "master seed; fully determines every random stream");
    app.add_option("--trials", g.trials, "sweep size");
    app.add_option("--out", g.out, "report file (written atomically)");
    app.add_option("--format", g.format, "json|csv")->check(CLI::IsMember({"json", "csv"}));

    const std::string command_line = join_args(argc, argv);

    auto* verify = app.add_subcommand("verify", "run an inequality sweep");
    verify->require_subcommand(1);
    std::string group_text = "symmetric:3", variant_text = "i";
    std::string norm_text, gauge_text;
    int dim = 3, m_max = 4, length = 6;
    bool negative_control = false;

    for (const char* name : {"thm1", "thm2"}) {
        auto* sub = verify->add_subcommand(name, std::string("Bohr inequality sweep (") +
                                                     name + ")");
        sub->add_option("--group", group_text,
                        "cyclic:N | dihedral:N | symmetric:N | quaternion:8");
        sub->add_option("--variant", variant_text, "i | ii | iii");
        sub->add_option("--norm", norm_text, "fix one unitarily invariant norm (else rotate)");
        sub->add_option("--gauge", gauge_text, "fix one symmetric gauge (variant ii)");
    }
    auto* coeff = verify->add_subcommand("coeff-bound", "coefficient bound sweep");
    coeff->add_option("--group", group_text);
    coeff->add_flag("--negative-control", negative_control,
                    "generate Re f > 1 and count detected violations");
    auto* lemma = verify->add_subcommand("lemma1", "singular value product lemma sweep");
    lemma->add_option("--dim", dim);
    lemma->add_option("--m-max", m_max);
    auto* thmb = verify->add_subcommand("thmB", "norm/Ky Fan equivalence sweep");
    thmb->add_option("--dim", dim);
    auto* thmc = verify->add_subcommand("thmC", "norm product bound sweep");
    thmc->add_option("--dim", dim);
    auto* thmd = verify->add_subcommand("thmD", "gauge tail dominance sweep");
    thmd->add_option("--length", length);
    verify->add_subcommand("thmE", "generalized matrix function bound sweep");

    auto* radius = app.add_subcommand("radius", "bisect for the largest admissible radius");
    std::string family_name = "moebius";
    double tol = 1e-4;
    radius->add_option("--family", family_name, "moebius | moebius-a0zero");
    radius->add_option("--tol", tol, "bisection tolerance");

    auto* counter = app.add_subcommand("counterexample", "reproduce a counterexample");
    counter->require_subcommand(1);
    auto* remark3 = counter->add_subcommand("remark3", "blow-up of the conjugate-free variant");
    double mu_min = 1e-4, r0 = 0.5;
    int steps = 50;
    long n_tilde = 1;
    remark3->add_option("--mu-min", mu_min);
    remark3->add_option("--steps", steps);
    remark3->add_option("--ntilde", n_tilde);
    remark3->add_option("--r0", r0, "reference budget; the printed bound is 1/r0");
    auto* cvx2 = counter->add_subcommand("convexity2x2",
                                         "diagonal pair defeating operator-norm convexity");
    double p = 2.0;
    cvx2->add_option("--p", p);

    auto* convexity = app.add_subcommand("convexity", "complex convexity estimates");
    convexity->require_subcommand(1);
    auto* lambda = convexity->add_subcommand("lambda", "estimate the convexity constant");
    int cdim = 2, grid = 256;
    lambda->add_option("--p", p);
    lambda->add_option("--dim", cdim);
    lambda->add_option("--grid", grid);
    auto* thm3 = convexity->add_subcommand("thm3", "operator Bohr radius checks (abelian)");
    std::string dir = "both", thm3_group = "cyclic:16";
    double thm3_r0 = 1.0 / 3.0;
    thm3->add_option("--group", thm3_group);
    thm3->add_option("--dir", dir)->check(CLI::IsMember({"forward", "converse", "both"}));
    thm3->add_option("--p", p);
    thm3->add_option("--r0", thm3_r0, "certified radius for the forward assertion");
    thm3->add_option("--dim", cdim, "value dimension for the forward direction");

    auto* selftest = app.add_subcommand("selftest", "reduced invariant suite of every module");
    std::string only;
    bool inject_fault = false;
    selftest->add_option("--only", only, "restrict to one module");
    selftest->add_flag("--inject-fault", inject_fault, "test hook: corrupt an irrep table entry");

    // global flags (--seed, --trials, --out, --format) are accepted after any
    // subcommand as well
    for (auto* sub : app.get_subcommands({})) {
        sub->fallthrough();
        for (auto* nested : sub->get_subcommands({})) nested->fallthrough();
    }

    try {
        app.parse(argc, argv);

        if (verify->parsed()) {
            auto* sub = verify->get_subcommands().front();
            const std::string name = sub->get_name();
            if (name == "thm1" || name == "thm2")
                return cmd_verify_bohr(g, command_line, name, group_text, variant_text,
                                       norm_text, gauge_text);
            Timer timer;
            if (name == "coeff-bound") {
                const GroupTable group = build_group(group_text);
                const DualList d = dual(group);
                const SweepSummary s =
                    run_coeff_bound_sweep(group, d, g.trials, g.seed, negative_control);
                std::cout << "coeff-bound on " << group.label << ": " << s.failures << " of "
                          << s.trials << " trials violated the bound"
                          << (negative_control ? " (negative control: violations expected)" : "")
                          << "\n";
                return finish(g, command_line, timer.seconds(), to_json(s), s.failures);
            }
            OracleSweepSummary s;
            if (name == "lemma1") s = run_lemma1_sweep(dim, g.trials, m_max, g.seed);
            if (name == "thmB") s = run_thmB_sweep(dim, g.trials, g.seed);
            if (name == "thmC") s = run_thmC_sweep(dim, g.trials, g.seed);
            if (name == "thmD") s = run_thmD_sweep(length, g.trials, g.seed);
            if (name == "thmE") s = run_thmE_sweep(g.trials, g.seed);
            std::cout << name << ": " << s.trials << " trials, " << s.failures << " failures ("
                      << s.note << ")\n";
            return finish(g, command_line, timer.seconds(), to_json(s), s.failures);
        }
        if (radius->parsed()) return cmd_radius(g, command_line, family_name, tol);
        if (counter->parsed()) {
            if (remark3->parsed())
                return cmd_remark3(g, command_line, mu_min, steps, n_tilde, r0);
            Timer timer;
            const ConvexityEstimate e =
                estimate_lambda(p, 2, std::min(g.trials, 2000L), g.seed);
            std::cout << "operator-norm convexity estimate (d = 2, p = " << p
                      << "): lambda_hat = " << e.lambda_hat << "\n";
            return finish(g, command_line, timer.seconds(), to_json(e),
                          e.lambda_hat <= 1e-9 ? 0 : 1);
        }
        if (convexity->parsed()) {
            Timer timer;
            if (lambda->parsed()) {
                const ConvexityEstimate e = estimate_lambda(p, cdim, g.trials, g.seed, grid);
                std::cout << "lambda_hat(d = " << cdim << ", p = " << p << ") = " << e.lambda_hat
                          << " over " << e.trials << " pairs\n";
                return finish(g, command_line, timer.seconds(), to_json(e), 0);
            }
            const GroupTable group = build_group(thm3_group);
            const DualList d = dual(group);
            nlohmann::json payload;
            long failures = 0;
            if (dir != "converse") {
                const Thm3Report fwd = thm3_forward_check(group, d, cdim, p,
                                                          cdim == 1 ? thm3_r0 : 0.0, g.trials,
                                                          g.seed);
                payload["forward"] = to_json(fwd);
                failures += fwd.failures;
                std::cout << "thm3 forward: " << fwd.failures << " of " << fwd.trials
                          << " failures\n";
            }
            if (dir != "forward") {
                const Thm3Report conv = thm3_converse_check(group, d, g.trials, g.seed);
                payload["converse"] = to_json(conv);
                failures += conv.failures;
                std::cout << "thm3 converse: " << conv.failures << " of " << conv.trials
                          << " failures\n";
            }
            return finish(g, command_line, timer.seconds(), payload, failures);
        }
        if (selftest->parsed()) return cmd_selftest(only, inject_fault, g.seed);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
