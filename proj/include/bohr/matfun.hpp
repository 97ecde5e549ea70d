#pragma once

#include <complex>
#include <string>
#include <vector>

#include "bohr/representation.hpp"
#include "bohr/rng.hpp"

namespace bohr {

/// Singular values in decreasing order (nonnegative square roots of the
/// eigenvalues of A^*A).  Square input only.
std::vector<double> singular_values(const Matrix& a);

/// Largest singular value.
double spectral_norm(const Matrix& a);

/**
 * @brief Selector for a unitarily invariant norm.
 *
 * All built-in kinds are functions of the singular values alone:
 *   schatten(p) = (sum sigma_i^p)^{1/p}   (p = inf gives the spectral norm)
 *   ky_fan(k)   = sum of the k largest sigma_i
 *   spectral    = sigma_1,  trace = sum sigma_i,  frobenius = schatten(2)
 */
struct NormSpec {
    enum class Kind { Schatten, KyFan, Spectral, Trace, Frobenius };
    Kind kind = Kind::Spectral;
    double p = 2.0;  // schatten exponent
    int k = 1;       // ky fan order

    static NormSpec schatten(double p);
    static NormSpec ky_fan(int k);
    static NormSpec spectral() { return {Kind::Spectral, 2.0, 1}; }
    static NormSpec trace() { return {Kind::Trace, 1.0, 1}; }
    static NormSpec frobenius() { return {Kind::Frobenius, 2.0, 1}; }
    static NormSpec parse(const std::string& text);  // "schatten:2", "kyfan:3", ...
    std::string text() const;
};

double uinorm(const Matrix& a, const NormSpec& spec);

/// uinorm of the d-dimensional unit matrix E_11 (entry (1,1) one, rest zero).
double e11_norm(int dim, const NormSpec& spec);

/// The fixed finite family of norms the theorem sweeps quantify over; chosen
/// to contain the extreme points (spectral = ky_fan(1), trace = ky_fan(n),
/// schatten p in {1, 1.5, 2, 3, inf}) plus every Ky Fan norm up to dim.
std::vector<NormSpec> builtin_norm_family(int dim);

/**
 * @brief Symmetric gauge function on C^{n^2} applied to the row-major
 * flattened matrix entries.  Absolute and permutation invariant by
 * construction.
 */
struct GaugeSpec {
    enum class Kind { Lp, TopKSum };
    Kind kind = Kind::Lp;
    double p = 2.0;
    int k = 1;

    static GaugeSpec lp(double p);
    static GaugeSpec top_k_sum(int k);
    static GaugeSpec parse(const std::string& text);  // "gauge:lp:2", "gauge:topk:3"
    std::string text() const;
};

double gauge(const Matrix& a, const GaugeSpec& spec);
double gauge_moduli(std::vector<double> moduli, const GaugeSpec& spec);

/// gauge(1, 0, ..., 0) with count entries; the normalization constant in the
/// gauge-variant constraints.
double gauge_unit(int count, const GaugeSpec& spec);

/**
 * @brief A generalized matrix function M_chi:
 *   M_chi(A) = sum_{sigma in H} chi(sigma) prod_i A_{i,sigma(i)}
 * over a permutation subgroup H of S_n with a degree-1 character chi.
 * (S_n, sgn) gives the determinant; the trivial character gives the
 * permanent-style sum and is flagged in reports.
 */
struct GmfSpec {
    int n = 1;
    std::vector<std::vector<int>> subgroup;  // permutations of {0..n-1}
    std::vector<Complex> character;          // chi per subgroup element
    bool trivial_character = false;
    std::string name;

    static GmfSpec symmetric_sign(int n);   // (S_n, sgn), n <= 4
    static GmfSpec symmetric_trivial(int n);
    static GmfSpec alternating3_omega();    // (A_3, chi(3-cycle) = e^{2 pi i/3})
    static GmfSpec for_dimension(int d);    // canonical spec per matrix dim
    static GmfSpec parse(const std::string& text);  // "gmf:s3:sign", "gmf:a3:omega"
    std::string text() const { return name; }

    /// Checks subgroup closure under composition/inverse and that chi is a
    /// unit-modulus multiplicative character.  Throws on violation.
    void validate() const;
};

Complex gmf(const Matrix& a, const GmfSpec& spec);

/**
 * @brief One of the six ternary dot products built from matrix and Hadamard
 * multiplication: A.B.C with each dot either product and one association.
 */
struct DotMode {
    enum class Prod { MatMul, Hadamard };
    enum class Assoc { Left, Right };
    Prod first = Prod::MatMul;
    Prod second = Prod::MatMul;
    Assoc assoc = Assoc::Right;

    std::string text() const;
};

/// Exactly the six distinct products (both associations coincide when the
/// two dots agree).
std::vector<DotMode> all_dot_modes();

Matrix hadamard(const Matrix& a, const Matrix& b);
Matrix dot3(const Matrix& a, const Matrix& b, const Matrix& c, const DotMode& mode);

// ---------------------------------------------------------------------------
// Inequality oracles.  Each check returns a report rather than throwing; a
// reported violation indicates an implementation bug, not bad input.
// ---------------------------------------------------------------------------

struct Lemma1Report {
    bool pass = true;
    double min_margin = 0.0;   // min over k of rhs - lhs (after power m)
    int worst_k = 0;
    int violations = 0;
};

/// Partial-sum dominance sum_{i<=k} sigma_i^m(A.B.C) <=
/// sum_{i<=k} sigma_i^m(A) sigma_i^m(B) sigma_i^m(C) for all k, tolerance
/// 1e-9 relative.
Lemma1Report check_lemma1(const Matrix& a, const Matrix& b, const Matrix& c,
                          const DotMode& mode, int m);

struct ThmBReport {
    bool ky_fan_dominance = true;   // (sum^k s(A))^2 <= (sum^k s(B))(sum^k s(C)) for all k
    bool pass = true;               // the equivalence held on the built-in family
    int first_bad_k = -1;
    double margin = 0.0;            // min over checked items of rhs - lhs
    std::vector<std::string> violating_norms;  // norms violating the forward implication
    bool witness_found = false;     // dominance failed and some family norm certifies it
};

/// Both directions of the norm/Ky Fan equivalence on the built-in family:
/// dominance at all k must force ||A||^2 <= ||B|| ||C|| for every norm, and a
/// dominance failure at k must be certified by the Ky Fan k-norm itself.
ThmBReport check_thmB(const Matrix& a, const Matrix& b, const Matrix& c);

struct ThmCReport {
    bool pass_a = true;  // ||A B^*|| <= sigma_1(A) ||B||
    bool pass_b = true;  // ||A|| >= sigma_1(A) ||E_11||
    double margin_a = 0.0;
    double margin_b = 0.0;
    bool pass() const { return pass_a && pass_b; }
};

ThmCReport check_thmC(const Matrix& a, const Matrix& b, const NormSpec& spec);

struct ThmDReport {
    bool tail_dominated = false;  // sum_{i>=t} |x_i| <= sum_{i>=t} |y_i| for all t (sorted)
    bool pass = true;             // dominance implied gauge(x) <= gauge(y)
    double margin = 0.0;
};

ThmDReport check_thmD(const std::vector<Complex>& x, const std::vector<Complex>& y,
                      const GaugeSpec& spec);

struct ThmEReport {
    bool pass = true;
    double lhs = 0.0;  // |M_chi(A)|^2
    double rhs = 0.0;  // (1/n) sum sigma_i^{2n}
    bool trivial_character = false;
};

ThmEReport check_thmE(const Matrix& a, const GmfSpec& spec);

// ---------------------------------------------------------------------------
// Random inputs for the property sweeps.
// ---------------------------------------------------------------------------

Matrix random_matrix(Rng& rng, int n, double sigma = 1.0);

/// Haar-distributed unitary via QR of a complex Gaussian matrix with the
/// usual phase fix on the R diagonal.
Matrix random_unitary(Rng& rng, int n);

/// The d-dimensional matrix with (1,1) entry one and zeros elsewhere.
Matrix e11_matrix(int dim);

// ---------------------------------------------------------------------------
// Randomized sweeps over the oracles (the CLI `verify lemma1|thmB|...`).
// ---------------------------------------------------------------------------

struct OracleSweepSummary {
    long trials = 0;
    long failures = 0;
    double worst_margin = 0.0;
    std::string note;
};

/// Random triples, all six dot modes, powers m = 1..m_max, every partial sum.
/// Singular values are decomposed once per (triple, mode) and powered, so the
/// full 1e5-triple acceptance sweep stays in seconds.
OracleSweepSummary run_lemma1_sweep(int dim, long trials, int m_max, std::uint64_t seed);

/// Mix of unconstrained random triples and B = C pairs with shared singular
/// vectors and pointwise-dominated singular values.
OracleSweepSummary run_thmB_sweep(int dim, long trials, std::uint64_t seed);

/// Random pairs against the whole built-in norm family.
OracleSweepSummary run_thmC_sweep(int dim, long trials, std::uint64_t seed);

/// Tail-sum-dominated random pairs (constructed by pointwise shrinking)
/// against the gauge family.
OracleSweepSummary run_thmD_sweep(int length, long trials, std::uint64_t seed);

/// Random 2x2 and 3x3 matrices against (S2, sgn), (S3, sgn), (A3, omega),
/// plus the flagged trivial characters.
OracleSweepSummary run_thmE_sweep(long trials, std::uint64_t seed);

}  // namespace bohr
