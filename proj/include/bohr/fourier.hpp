#pragma once

#include <vector>

#include "bohr/representation.hpp"

namespace bohr {

/**
 * @brief A scalar- or matrix-valued function on a finite group.
 *
 * Values are stored as complex matrices indexed by element; scalar functions
 * use 1x1 blocks (value_dim() == 1).
 */
struct GroupFunction {
    int group_order = 0;
    std::vector<Matrix> values;

    static GroupFunction scalar(const std::vector<Complex>& vals);
    static GroupFunction constant(int group_order, Complex c);

    int value_dim() const { return values.empty() ? 0 : static_cast<int>(values[0].rows()); }
    bool is_scalar() const { return value_dim() == 1; }
    Complex scalar_at(int x) const { return values[x](0, 0); }

    GroupFunction conjugate() const;
};

/**
 * @brief Fourier coefficients: one complex block per irrep.
 *
 * For scalar f the block at pi_n is the d_n x d_n matrix
 * (1/|G|) sum_x f(x) pi_n(x)^*; for matrix-valued f (value dimension v) it is
 * the Kronecker block (1/|G|) sum_x f(x) (x) pi_n(x)^* of size (v d_n)^2.  On
 * abelian groups (d_n = 1) the matrix-valued block reduces to the plain
 * average (1/|G|) sum_x f(x) conj(pi_n(x)).
 */
struct FourierCoefficients {
    int value_dim = 1;
    std::vector<Matrix> coeffs;

    const Matrix& at(int n) const { return coeffs[n]; }
};

FourierCoefficients fourier_transform(const GroupFunction& f, const DualList& d);

/// Transform of f at a single representation (scalar f only).
Matrix transform_at(const GroupFunction& f, const Irrep& rep);

/// Exact inversion on a finite group:
///   scalar:        f(x) = sum_n d_n tr(fhat(pi_n) pi_n(x))
///   matrix-valued: f(x) = sum_n d_n (id (x) tr)(fhat(pi_n) (I (x) pi_n(x)))
/// Returns a value_dim x value_dim matrix (1x1 for scalar input).
Matrix inverse_transform(const FourierCoefficients& c, const DualList& d, int x);

struct ParsevalPair {
    double lhs = 0.0;  // (1/|G|) sum_x |f(x)|^2
    double rhs = 0.0;  // sum_n d_n tr(fhat^* fhat)
};

/// Parseval identity for scalar f; throws on matrix-valued input.
ParsevalPair parseval(const GroupFunction& f, const DualList& d);

/// conj(fhat(conj(pi_n))) computed two independent ways -- (a) transform at
/// the contragredient then conjugate, (b) transform of conj(f) at pi_n -- and
/// cross-checked to 1e-10 before returning route (a).  This identity is the
/// hinge of the first Bohr inequality, so it self-verifies on every call.
Matrix conj_transform(const GroupFunction& f, const Irrep& rep);

/// Kronecker product helper used by the matrix-valued transform.
Matrix kron(const Matrix& a, const Matrix& b);

}  // namespace bohr
