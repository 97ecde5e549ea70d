#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bohr/fourier.hpp"
#include "bohr/matfun.hpp"

namespace bohr {

enum class Theorem { One, Two };
enum class Variant { I, II, III };

std::string variant_tag(Theorem t, Variant v);
Variant parse_variant(const std::string& text);  // "i" | "ii" | "iii"

/**
 * @brief One coefficient matrix R_n per nontrivial irrep (Lambda position).
 */
struct RSequence {
    std::vector<Matrix> entries;  // entries[i] pairs with irrep i+1

    const Matrix& for_irrep(int n) const { return entries[n - 1]; }
    Matrix& for_irrep(int n) { return entries[n - 1]; }
};

RSequence zero_r_sequence(const DualList& d);
RSequence random_r_sequence(const DualList& d, Rng& rng);
/// R_n = E_11 of the matching dimension for every n.
RSequence e11_r_sequence(const DualList& d);

/**
 * @brief Per-irrep norm/gauge/gmf selections for the three inequality
 * variants.  Variant I uses norms, II gauges; III scores terms with the
 * generalized matrix function and budgets the constraint with the norms.
 */
struct BohrTermSpecs {
    Variant variant = Variant::I;
    std::vector<NormSpec> norms;
    std::vector<GaugeSpec> gauges;
    std::vector<GmfSpec> gmfs;

    static BohrTermSpecs defaults(const DualList& d, Variant v);
    static BohrTermSpecs uniform_norm(const DualList& d, Variant v, const NormSpec& n);
    static BohrTermSpecs uniform_gauge(const DualList& d, const GaugeSpec& g);
    /// Random member of the built-in norm/gauge families per run.
    static BohrTermSpecs randomized(const DualList& d, Variant v, Rng& rng);
};

/**
 * @brief Outcome of one inequality trial.
 *
 * pass is the implication "constraint satisfied => lhs <= rhs_bound + 1e-9";
 * a report with the constraint violated passes vacuously and says so.
 */
struct VerificationReport {
    double lhs = 0.0;
    double rhs_bound = 1.0;
    double constraint_value = 0.0;
    double constraint_bound = 0.5;
    double margin = 0.0;  // rhs_bound - lhs
    bool constraint_satisfied = true;
    bool pass = true;
    std::vector<std::pair<int, double>> per_irrep;
    std::string variant;
    std::string dot_mode;
    int x = 0;
};

/// One lhs summand: the variant score of coeff . pi_x . r.  Shared by the
/// group-side verifiers and the circle reduction (1x1 blocks there).
double bohr_lhs_term(const Matrix& coeff, const Matrix& pi_x, const Matrix& r,
                     const DotMode& mode, Variant v, const NormSpec& norm,
                     const GaugeSpec& gauge_spec, const GmfSpec& gmf_spec, int dim);

// ---------------------------------------------------------------------------
// Admissible-function generators.
// ---------------------------------------------------------------------------

/// Scalar f with Re f <= 1 everywhere and 0 <= fhat(pi_0) < 1.  The draw is
/// recentred so the mean is real (subtracting i Im mean) and rescaled so the
/// real part touches 1 and the mean lands on a random target in [0, 1).
/// spec: "random" | "constant:c" | "extremal" (f == 1, the equality case).
GroupFunction gen_re_bounded(const GroupTable& g, const DualList& d, std::uint64_t seed,
                             const std::string& spec = "random");

/// Scalar f with (1/|G|) sum |f|^2 <= 1 and 0 <= fhat(pi_0) < 1.
GroupFunction gen_l2_bounded(const GroupTable& g, const DualList& d, std::uint64_t seed);

/// Negative control: same pipeline but the real part is scaled to exceed 1
/// (max Re f in (1.05, 1.5)); the coefficient bound is expected to break.
GroupFunction gen_re_violating(const GroupTable& g, std::uint64_t seed);

// ---------------------------------------------------------------------------
// Verifiers.
// ---------------------------------------------------------------------------

struct CoeffBoundReport {
    bool hypothesis_ok = true;
    double f0 = 0.0;
    double bound = 0.0;       // 2 (1 - fhat(pi_0))
    double max_sigma = 0.0;   // over n in Lambda and i
    double max_excess = 0.0;  // max sigma - bound
    bool pass = true;
    std::vector<std::pair<int, double>> per_irrep;
};

/// sigma_i(fhat(pi_n) + conj(fhat(conj pi_n))) <= 2 (1 - fhat(pi_0)) + 1e-9
/// for every n in Lambda and every i.
CoeffBoundReport coeff_bound(const GroupFunction& f, const DualList& d);

VerificationReport thm1_verify(const GroupFunction& f, const DualList& d, const RSequence& r,
                               int x, const DotMode& mode, const BohrTermSpecs& specs);

VerificationReport thm2_verify(const GroupFunction& f, const DualList& d, const RSequence& r,
                               int x, const DotMode& mode, const BohrTermSpecs& specs);

/// Rescales R so the variant constraint holds with equality; the budget is
/// split across irreps by a random positive weight vector.
void scale_to_thm1_constraint(RSequence& r, const DualList& d, const BohrTermSpecs& specs,
                              Rng& rng);

/// Global rescale so (1 + f0)(1 + S) = 2 for the variant's quadratic budget S.
void scale_to_thm2_constraint(RSequence& r, const DualList& d, const BohrTermSpecs& specs,
                              double f0);

struct SweepSummary {
    long trials = 0;
    long failures = 0;
    double worst_margin = 0.0;  // min over trials of (1 - lhs); set to +inf when trials = 0
    long constraint_rejections = 0;
    std::vector<VerificationReport> failure_samples;  // bounded
    long overflow = 0;                                // failures beyond the sample cap
};

/// Randomized sweep: per trial draws admissible f, a constraint-tight R, a
/// group element and a dot mode (and, unless fixed_specs is given, a random
/// member of the built-in norm/gauge family), then verifies the inequality.
SweepSummary run_bohr_sweep(Theorem t, const GroupTable& g, const DualList& d, Variant v,
                            long trials, std::uint64_t seed,
                            const std::optional<BohrTermSpecs>& fixed_specs = std::nullopt);

/// Coefficient-bound sweep; with negative_control the generator violates the
/// Re f <= 1 hypothesis and the summary counts detected bound violations.
SweepSummary run_coeff_bound_sweep(const GroupTable& g, const DualList& d, long trials,
                                   std::uint64_t seed, bool negative_control = false);

struct SharpnessReport {
    long trials = 0;
    double max_lhs = 0.0;
    /// Smallest tested constraint inflation factor at which some trial
    /// first exceeds 1 + 1e-9; +inf when none did within the tested grid.
    double inflation_at_first_violation = 0.0;
    std::string note;
};

/// Measures the slack of the constraints: maximizes the lhs over random
/// constraint-tight inputs, then analytically inflates the budget until the
/// first violation appears.  Records evidence; asserts nothing.
SharpnessReport sharpness_probe(Theorem t, Variant v, const GroupTable& g, const DualList& d,
                                long trials, std::uint64_t seed);

}  // namespace bohr
