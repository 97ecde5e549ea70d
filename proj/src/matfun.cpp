#include "bohr/matfun.hpp"

#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace bohr {

std::vector<double> singular_values(const Matrix& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("singular_values expects a square matrix");
    if (a.rows() == 1) return {std::abs(a(0, 0))};
    Eigen::JacobiSVD<Matrix> svd(a);
    std::vector<double> out(a.rows());
    for (Eigen::Index i = 0; i < a.rows(); ++i) out[i] = std::max(0.0, svd.singularValues()(i));
    return out;  // Eigen returns them in decreasing order
}

double spectral_norm(const Matrix& a) {
    if (a.size() == 0) return 0.0;
    if (a.rows() == 1 && a.cols() == 1) return std::abs(a(0, 0));
    Eigen::JacobiSVD<Matrix> svd(a);
    return svd.singularValues()(0);
}

NormSpec NormSpec::schatten(double p) {
    if (p < 1.0) throw std::invalid_argument("schatten exponent must be >= 1");
    return {Kind::Schatten, p, 1};
}

NormSpec NormSpec::ky_fan(int k) {
    if (k < 1) throw std::invalid_argument("ky fan order must be >= 1");
    return {Kind::KyFan, 1.0, k};
}

NormSpec NormSpec::parse(const std::string& text) {
    auto colon = text.find(':');
    const std::string head = text.substr(0, colon);
    if (head == "spectral") return spectral();
    if (head == "trace") return trace();
    if (head == "frobenius") return frobenius();
    if (colon == std::string::npos)
        throw std::invalid_argument("unknown norm spec '" + text + "'");
    const std::string arg = text.substr(colon + 1);
    try {
        if (head == "schatten") {
            if (arg == "inf") return spectral();
            return schatten(std::stod(arg));
        }
        if (head == "kyfan") return ky_fan(std::stoi(arg));
    } catch (const std::invalid_argument&) {
        throw;
    } catch (const std::exception&) {
        throw std::invalid_argument("bad norm parameter in '" + text + "'");
    }
    throw std::invalid_argument("unknown norm spec '" + text + "'");
}

std::string NormSpec::text() const {
    switch (kind) {
        case Kind::Schatten: return "schatten:" + std::to_string(p);
        case Kind::KyFan: return "kyfan:" + std::to_string(k);
        case Kind::Spectral: return "spectral";
        case Kind::Trace: return "trace";
        case Kind::Frobenius: return "frobenius";
    }
    return "?";
}

namespace {

double norm_of_singulars(const std::vector<double>& s, const NormSpec& spec) {
    switch (spec.kind) {
        case NormSpec::Kind::Schatten: {
            if (std::isinf(spec.p)) return s.empty() ? 0.0 : s.front();
            double acc = 0.0;
            for (double v : s) acc += std::pow(v, spec.p);
            return std::pow(acc, 1.0 / spec.p);
        }
        case NormSpec::Kind::KyFan: {
            double acc = 0.0;
            const int limit = std::min<int>(spec.k, static_cast<int>(s.size()));
            for (int i = 0; i < limit; ++i) acc += s[i];
            return acc;
        }
        case NormSpec::Kind::Spectral:
            return s.empty() ? 0.0 : s.front();
        case NormSpec::Kind::Trace: {
            double acc = 0.0;
            for (double v : s) acc += v;
            return acc;
        }
        case NormSpec::Kind::Frobenius: {
            double acc = 0.0;
            for (double v : s) acc += v * v;
            return std::sqrt(acc);
        }
    }
    return 0.0;
}

}  // namespace

double uinorm(const Matrix& a, const NormSpec& spec) {
    return norm_of_singulars(singular_values(a), spec);
}

Matrix e11_matrix(int dim) {
    Matrix m = Matrix::Zero(dim, dim);
    m(0, 0) = 1.0;
    return m;
}

double e11_norm(int dim, const NormSpec& spec) {
    std::vector<double> s(dim, 0.0);
    s[0] = 1.0;
    return norm_of_singulars(s, spec);
}

std::vector<NormSpec> builtin_norm_family(int dim) {
    std::vector<NormSpec> family = {NormSpec::spectral(), NormSpec::trace(), NormSpec::frobenius(),
                                    NormSpec::schatten(1.0), NormSpec::schatten(1.5),
                                    NormSpec::schatten(3.0)};
    for (int k = 1; k <= dim; ++k) family.push_back(NormSpec::ky_fan(k));
    return family;
}

GaugeSpec GaugeSpec::lp(double p) {
    if (p < 1.0) throw std::invalid_argument("lp gauge exponent must be >= 1");
    return {Kind::Lp, p, 1};
}

GaugeSpec GaugeSpec::top_k_sum(int k) {
    if (k < 1) throw std::invalid_argument("top-k gauge order must be >= 1");
    return {Kind::TopKSum, 1.0, k};
}

GaugeSpec GaugeSpec::parse(const std::string& text) {
    // accepted: "gauge:lp:P", "gauge:topk:K", and the bare "lp:P" / "topk:K"
    std::string body = text;
    if (body.rfind("gauge:", 0) == 0) body = body.substr(6);
    auto colon = body.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("unknown gauge spec '" + text + "'");
    const std::string head = body.substr(0, colon);
    const std::string arg = body.substr(colon + 1);
    try {
        if (head == "lp") return lp(std::stod(arg));
        if (head == "topk") return top_k_sum(std::stoi(arg));
    } catch (const std::invalid_argument&) {
        throw;
    } catch (const std::exception&) {
        throw std::invalid_argument("bad gauge parameter in '" + text + "'");
    }
    throw std::invalid_argument("unknown gauge spec '" + text + "'");
}

std::string GaugeSpec::text() const {
    if (kind == Kind::Lp) return "gauge:lp:" + std::to_string(p);
    return "gauge:topk:" + std::to_string(k);
}

double gauge_moduli(std::vector<double> moduli, const GaugeSpec& spec) {
    // canonical order first, so permuting the input cannot move the result
    // even in the last floating-point bit
    std::sort(moduli.begin(), moduli.end(), std::greater<>());
    if (spec.kind == GaugeSpec::Kind::Lp) {
        double acc = 0.0;
        for (double v : moduli) acc += std::pow(v, spec.p);
        return std::pow(acc, 1.0 / spec.p);
    }
    double acc = 0.0;
    const int limit = std::min<int>(spec.k, static_cast<int>(moduli.size()));
    for (int i = 0; i < limit; ++i) acc += moduli[i];
    return acc;
}

double gauge(const Matrix& a, const GaugeSpec& spec) {
    std::vector<double> moduli;
    moduli.reserve(a.size());
    for (Eigen::Index i = 0; i < a.rows(); ++i)       // row-major flattening
        for (Eigen::Index j = 0; j < a.cols(); ++j) moduli.push_back(std::abs(a(i, j)));
    return gauge_moduli(std::move(moduli), spec);
}

double gauge_unit(int count, const GaugeSpec& spec) {
    std::vector<double> moduli(count, 0.0);
    moduli[0] = 1.0;
    return gauge_moduli(std::move(moduli), spec);
}

namespace {

std::vector<int> compose_perm(const std::vector<int>& p, const std::vector<int>& q) {
    std::vector<int> out(p.size());
    for (size_t i = 0; i < p.size(); ++i) out[i] = p[q[i]];
    return out;
}

int sign_of(const std::vector<int>& p) {
    int sign = 1;
    for (size_t i = 0; i < p.size(); ++i)
        for (size_t j = i + 1; j < p.size(); ++j)
            if (p[i] > p[j]) sign = -sign;
    return sign;
}

}  // namespace

GmfSpec GmfSpec::symmetric_sign(int n) {
    if (n < 1 || n > 4) throw std::invalid_argument("(S_n, sgn) supported for n <= 4");
    GmfSpec spec;
    spec.n = n;
    spec.subgroup = all_permutations(n);
    for (const auto& p : spec.subgroup) spec.character.emplace_back(sign_of(p), 0.0);
    spec.trivial_character = (n == 1);
    spec.name = "gmf:s" + std::to_string(n) + ":sign";
    return spec;
}

GmfSpec GmfSpec::symmetric_trivial(int n) {
    if (n < 1 || n > 4) throw std::invalid_argument("(S_n, trivial) supported for n <= 4");
    GmfSpec spec;
    spec.n = n;
    spec.subgroup = all_permutations(n);
    spec.character.assign(spec.subgroup.size(), Complex(1.0, 0.0));
    spec.trivial_character = true;
    spec.name = "gmf:s" + std::to_string(n) + ":trivial";
    return spec;
}

GmfSpec GmfSpec::alternating3_omega() {
    GmfSpec spec;
    spec.n = 3;
    spec.subgroup = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};
    const double t = 2.0 * std::numbers::pi / 3.0;
    const Complex omega(std::cos(t), std::sin(t));
    spec.character = {Complex(1, 0), omega, omega * omega};
    spec.name = "gmf:a3:omega";
    return spec;
}

GmfSpec GmfSpec::for_dimension(int d) {
    if (d == 1) return symmetric_trivial(1);
    return symmetric_sign(d);
}

GmfSpec GmfSpec::parse(const std::string& text) {
    if (text == "gmf:s1:sign" || text == "gmf:s1:trivial") return symmetric_trivial(1);
    if (text == "gmf:s2:sign") return symmetric_sign(2);
    if (text == "gmf:s3:sign") return symmetric_sign(3);
    if (text == "gmf:s4:sign") return symmetric_sign(4);
    if (text == "gmf:s2:trivial") return symmetric_trivial(2);
    if (text == "gmf:s3:trivial") return symmetric_trivial(3);
    if (text == "gmf:s4:trivial") return symmetric_trivial(4);
    if (text == "gmf:a3:omega") return alternating3_omega();
    throw std::invalid_argument("unknown gmf spec '" + text + "'");
}

void GmfSpec::validate() const {
    if (subgroup.empty() || subgroup.size() != character.size())
        throw std::invalid_argument("gmf spec: subgroup/character size mismatch");
    auto find = [&](const std::vector<int>& p) {
        for (size_t i = 0; i < subgroup.size(); ++i)
            if (subgroup[i] == p) return static_cast<int>(i);
        return -1;
    };
    for (size_t i = 0; i < subgroup.size(); ++i) {
        if (std::abs(std::abs(character[i]) - 1.0) > 1e-12)
            throw std::invalid_argument("gmf spec: character value off the unit circle");
        for (size_t j = 0; j < subgroup.size(); ++j) {
            const int k = find(compose_perm(subgroup[i], subgroup[j]));
            if (k < 0) throw std::invalid_argument("gmf spec: subgroup not closed");
            if (std::abs(character[i] * character[j] - character[k]) > 1e-12)
                throw std::invalid_argument("gmf spec: character not multiplicative");
        }
    }
}

Complex gmf(const Matrix& a, const GmfSpec& spec) {
    if (a.rows() != spec.n || a.cols() != spec.n)
        throw std::invalid_argument("gmf: matrix dimension does not match the spec");
    Complex acc = 0;
    for (size_t s = 0; s < spec.subgroup.size(); ++s) {
        Complex prod = spec.character[s];
        for (int i = 0; i < spec.n; ++i) prod *= a(i, spec.subgroup[s][i]);
        acc += prod;
    }
    return acc;
}

std::string DotMode::text() const {
    auto p = [](Prod x) { return x == Prod::MatMul ? "mat" : "had"; };
    return std::string(p(first)) + "/" + p(second) + "/" +
           (assoc == Assoc::Left ? "left" : "right");
}

std::vector<DotMode> all_dot_modes() {
    using P = DotMode::Prod;
    using A = DotMode::Assoc;
    return {
        {P::MatMul, P::MatMul, A::Right},    // ABC
        {P::Hadamard, P::Hadamard, A::Right},  // A o B o C
        {P::MatMul, P::Hadamard, A::Right},  // A (B o C)
        {P::Hadamard, P::MatMul, A::Right},  // A o (BC)
        {P::Hadamard, P::MatMul, A::Left},   // (A o B) C
        {P::MatMul, P::Hadamard, A::Left},   // (AB) o C
    };
}

Matrix hadamard(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("hadamard product needs equal shapes");
    return a.cwiseProduct(b);
}

Matrix dot3(const Matrix& a, const Matrix& b, const Matrix& c, const DotMode& mode) {
    auto apply = [](const Matrix& x, const Matrix& y, DotMode::Prod p) {
        return p == DotMode::Prod::MatMul ? Matrix(x * y) : hadamard(x, y);
    };
    if (mode.assoc == DotMode::Assoc::Right)
        return apply(a, apply(b, c, mode.second), mode.first);
    return apply(apply(a, b, mode.first), c, mode.second);
}

Lemma1Report check_lemma1(const Matrix& a, const Matrix& b, const Matrix& c,
                          const DotMode& mode, int m) {
    if (m < 1) throw std::invalid_argument("lemma power m must be a positive integer");
    const auto sa = singular_values(a);
    const auto sb = singular_values(b);
    const auto sc = singular_values(c);
    const auto sp = singular_values(dot3(a, b, c, mode));
    const int n = static_cast<int>(sp.size());

    Lemma1Report r;
    r.min_margin = std::numeric_limits<double>::infinity();
    double lhs = 0.0, rhs = 0.0;
    for (int k = 0; k < n; ++k) {
        lhs += std::pow(sp[k], m);
        rhs += std::pow(sa[k] * sb[k] * sc[k], m);
        const double margin = rhs - lhs;
        if (margin < r.min_margin) {
            r.min_margin = margin;
            r.worst_k = k + 1;
        }
        if (lhs > rhs + 1e-9 * std::max(1.0, rhs)) {
            r.pass = false;
            ++r.violations;
        }
    }
    return r;
}

ThmBReport check_thmB(const Matrix& a, const Matrix& b, const Matrix& c) {
    const auto sa = singular_values(a);
    const auto sb = singular_values(b);
    const auto sc = singular_values(c);
    const int n = static_cast<int>(sa.size());

    ThmBReport r;
    r.margin = std::numeric_limits<double>::infinity();
    double pa = 0.0, pb = 0.0, pc = 0.0;
    for (int k = 0; k < n; ++k) {
        pa += sa[k];
        pb += sb[k];
        pc += sc[k];
        if (pa * pa > pb * pc + 1e-9 * std::max(1.0, pb * pc)) {
            r.ky_fan_dominance = false;
            if (r.first_bad_k < 0) r.first_bad_k = k + 1;
        }
    }

    if (r.ky_fan_dominance) {
        for (const auto& spec : builtin_norm_family(n)) {
            const double na = norm_of_singulars(sa, spec);
            const double nb = norm_of_singulars(sb, spec);
            const double nc = norm_of_singulars(sc, spec);
            r.margin = std::min(r.margin, nb * nc - na * na);
            if (na * na > nb * nc + 1e-9 * std::max(1.0, nb * nc)) {
                r.pass = false;
                r.violating_norms.push_back(spec.text());
            }
        }
    } else {
        // the failing Ky Fan norm itself must certify the converse direction
        const NormSpec witness = NormSpec::ky_fan(r.first_bad_k);
        const double na = norm_of_singulars(sa, witness);
        const double nb = norm_of_singulars(sb, witness);
        const double nc = norm_of_singulars(sc, witness);
        r.witness_found = na * na > nb * nc - 1e-9 * std::max(1.0, nb * nc);
        r.pass = r.witness_found;
    }
    return r;
}

ThmCReport check_thmC(const Matrix& a, const Matrix& b, const NormSpec& spec) {
    ThmCReport r;
    const double s1 = spectral_norm(a);
    const double lhs_a = uinorm(a * b.adjoint(), spec);
    const double rhs_a = s1 * uinorm(b, spec);
    r.margin_a = rhs_a - lhs_a;
    r.pass_a = lhs_a <= rhs_a + 1e-9 * std::max(1.0, rhs_a);

    const double lhs_b = s1 * e11_norm(static_cast<int>(a.rows()), spec);
    const double rhs_b = uinorm(a, spec);
    r.margin_b = rhs_b - lhs_b;
    r.pass_b = lhs_b <= rhs_b + 1e-9 * std::max(1.0, rhs_b);
    return r;
}

ThmDReport check_thmD(const std::vector<Complex>& x, const std::vector<Complex>& y,
                      const GaugeSpec& spec) {
    if (x.size() != y.size()) throw std::invalid_argument("thmD expects equal lengths");
    std::vector<double> mx, my;
    for (auto v : x) mx.push_back(std::abs(v));
    for (auto v : y) my.push_back(std::abs(v));
    std::sort(mx.begin(), mx.end());
    std::sort(my.begin(), my.end());

    ThmDReport r;
    r.tail_dominated = true;
    double tx = 0.0, ty = 0.0;
    for (int t = static_cast<int>(mx.size()) - 1; t >= 0; --t) {
        tx += mx[t];
        ty += my[t];
        if (tx > ty + 1e-12 * std::max(1.0, ty)) {
            r.tail_dominated = false;
            break;
        }
    }
    const double gx = gauge_moduli(mx, spec);
    const double gy = gauge_moduli(my, spec);
    r.margin = gy - gx;
    r.pass = !r.tail_dominated || gx <= gy + 1e-9 * std::max(1.0, gy);
    return r;
}

ThmEReport check_thmE(const Matrix& a, const GmfSpec& spec) {
    ThmEReport r;
    r.trivial_character = spec.trivial_character;
    r.lhs = std::norm(gmf(a, spec));
    const auto s = singular_values(a);
    for (double v : s) r.rhs += std::pow(v, 2.0 * spec.n);
    r.rhs /= static_cast<double>(spec.n);
    r.pass = r.lhs <= r.rhs + 1e-9 * std::max(1.0, r.rhs);
    return r;
}

Matrix random_matrix(Rng& rng, int n, double sigma) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = rng.complex_gaussian(sigma);
    return m;
}

Matrix random_unitary(Rng& rng, int n) {
    const Matrix g = random_matrix(rng, n);
    Eigen::HouseholderQR<Matrix> qr(g);
    Matrix q = qr.householderQ();
    const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int j = 0; j < n; ++j) {
        const Complex d = r(j, j);
        if (std::abs(d) > 0) q.col(j) *= d / std::abs(d);
    }
    return q;
}

OracleSweepSummary run_lemma1_sweep(int dim, long trials, int m_max, std::uint64_t seed) {
    OracleSweepSummary s;
    s.worst_margin = std::numeric_limits<double>::infinity();
    const auto modes = all_dot_modes();
    for (long trial = 0; trial < trials; ++trial) {
        Rng rng(split_seed(seed, static_cast<std::uint64_t>(trial)));
        const Matrix a = random_matrix(rng, dim);
        const Matrix b = random_matrix(rng, dim);
        const Matrix c = random_matrix(rng, dim);
        const auto sa = singular_values(a);
        const auto sb = singular_values(b);
        const auto sc = singular_values(c);
        for (const auto& mode : modes) {
            const auto sp = singular_values(dot3(a, b, c, mode));
            for (int m = 1; m <= m_max; ++m) {
                double lhs = 0.0, rhs = 0.0;
                for (int k = 0; k < dim; ++k) {
                    lhs += std::pow(sp[k], m);
                    rhs += std::pow(sa[k] * sb[k] * sc[k], m);
                    s.worst_margin = std::min(s.worst_margin, rhs - lhs);
                    if (lhs > rhs + 1e-9 * std::max(1.0, rhs)) ++s.failures;
                }
            }
        }
        ++s.trials;
    }
    s.note = "dim " + std::to_string(dim) + ", m <= " + std::to_string(m_max) + ", 6 modes";
    return s;
}

OracleSweepSummary run_thmB_sweep(int dim, long trials, std::uint64_t seed) {
    OracleSweepSummary s;
    s.worst_margin = std::numeric_limits<double>::infinity();
    for (long trial = 0; trial < trials; ++trial) {
        Rng rng(split_seed(seed, static_cast<std::uint64_t>(trial)));
        ThmBReport rep;
        if (trial % 2 == 0) {
            rep = check_thmB(random_matrix(rng, dim), random_matrix(rng, dim),
                             random_matrix(rng, dim));
            s.worst_margin = std::min(s.worst_margin, rep.margin);
        } else {
            // B = C with shared singular vectors, sigma(A) pointwise below
            const Matrix u = random_unitary(rng, dim);
            const Matrix v = random_unitary(rng, dim);
            Eigen::VectorXd sb(dim), sa(dim);
            for (int i = 0; i < dim; ++i) sb(i) = std::abs(rng.gaussian()) + 0.05;
            std::sort(sb.data(), sb.data() + dim, std::greater<>());
            for (int i = 0; i < dim; ++i) sa(i) = sb(i) * rng.uniform(0.0, 1.0);
            const Matrix b = u * sb.cast<Complex>().asDiagonal() * v.adjoint();
            const Matrix a = u * sa.cast<Complex>().asDiagonal() * v.adjoint();
            rep = check_thmB(a, b, b);
            if (!rep.ky_fan_dominance) ++s.failures;  // dominance is by construction
            s.worst_margin = std::min(s.worst_margin, rep.margin);
        }
        if (!rep.pass) ++s.failures;
        ++s.trials;
    }
    s.note = "dim " + std::to_string(dim) + ", built-in norm family";
    return s;
}

OracleSweepSummary run_thmC_sweep(int dim, long trials, std::uint64_t seed) {
    OracleSweepSummary s;
    s.worst_margin = std::numeric_limits<double>::infinity();
    const auto family = builtin_norm_family(dim);
    for (long trial = 0; trial < trials; ++trial) {
        Rng rng(split_seed(seed, static_cast<std::uint64_t>(trial)));
        const Matrix a = random_matrix(rng, dim);
        const Matrix b = random_matrix(rng, dim);
        for (const auto& spec : family) {
            const ThmCReport rep = check_thmC(a, b, spec);
            s.worst_margin = std::min({s.worst_margin, rep.margin_a, rep.margin_b});
            if (!rep.pass()) ++s.failures;
        }
        ++s.trials;
    }
    s.note = "dim " + std::to_string(dim) + ", parts (a) and (b), built-in norm family";
    return s;
}

OracleSweepSummary run_thmD_sweep(int length, long trials, std::uint64_t seed) {
    OracleSweepSummary s;
    s.worst_margin = std::numeric_limits<double>::infinity();
    const std::vector<GaugeSpec> gauges = {GaugeSpec::lp(1.0), GaugeSpec::lp(1.5),
                                           GaugeSpec::lp(2.0), GaugeSpec::lp(3.0),
                                           GaugeSpec::top_k_sum(1),
                                           GaugeSpec::top_k_sum(std::max(1, length / 2)),
                                           GaugeSpec::top_k_sum(length)};
    for (long trial = 0; trial < trials; ++trial) {
        Rng rng(split_seed(seed, static_cast<std::uint64_t>(trial)));
        std::vector<Complex> y(length), x(length);
        for (auto& v : y) v = rng.complex_gaussian();
        if (trial % 8 == 0) {
            // the extremal configuration: x = (0, ..., 0, max |y|)
            double biggest = 0.0;
            for (auto v : y) biggest = std::max(biggest, std::abs(v));
            x.assign(length, Complex(0, 0));
            x.back() = biggest;
        } else {
            for (int i = 0; i < length; ++i) x[i] = y[i] * rng.uniform(0.0, 1.0);
        }
        for (const auto& g : gauges) {
            const ThmDReport rep = check_thmD(x, y, g);
            if (!rep.tail_dominated) ++s.failures;  // dominated by construction
            s.worst_margin = std::min(s.worst_margin, rep.margin);
            if (!rep.pass) ++s.failures;
        }
        ++s.trials;
    }
    s.note = "length " + std::to_string(length) + ", dominated pairs, gauge family";
    return s;
}

OracleSweepSummary run_thmE_sweep(long trials, std::uint64_t seed) {
    OracleSweepSummary s;
    s.worst_margin = std::numeric_limits<double>::infinity();
    const std::vector<GmfSpec> two = {GmfSpec::symmetric_sign(2), GmfSpec::symmetric_trivial(2)};
    const std::vector<GmfSpec> three = {GmfSpec::symmetric_sign(3), GmfSpec::alternating3_omega(),
                                        GmfSpec::symmetric_trivial(3)};
    for (long trial = 0; trial < trials; ++trial) {
        Rng rng(split_seed(seed, static_cast<std::uint64_t>(trial)));
        const Matrix a2 = random_matrix(rng, 2);
        const Matrix a3 = random_matrix(rng, 3);
        for (const auto& spec : two) {
            const ThmEReport rep = check_thmE(a2, spec);
            s.worst_margin = std::min(s.worst_margin, rep.rhs - rep.lhs);
            if (!rep.pass) ++s.failures;
        }
        for (const auto& spec : three) {
            const ThmEReport rep = check_thmE(a3, spec);
            s.worst_margin = std::min(s.worst_margin, rep.rhs - rep.lhs);
            if (!rep.pass) ++s.failures;
        }
        ++s.trials;
    }
    s.note = "(S2, sgn), (S3, sgn), (A3, omega) plus flagged trivial characters";
    return s;
}

}  // namespace bohr
