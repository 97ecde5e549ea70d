#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "bohr/group.hpp"
#include "bohr/rng.hpp"

namespace bohr {

using Matrix = Eigen::MatrixXcd;
using Complex = std::complex<double>;

/**
 * @brief An irreducible unitary representation tabulated per group element.
 *
 * Matrices are stored explicitly; every built-in group has order <= 64 and
 * dimension <= 3, so the exhaustive axiom checks stay cheap.
 */
struct Irrep {
    int dim = 1;
    std::vector<Matrix> matrices;  // one unitary dim x dim matrix per element
    std::string name;

    const Matrix& at(int x) const { return matrices[x]; }
};

/**
 * @brief The complete dual of a finite group.
 *
 * Enumeration convention: the trivial representation sits at position 0,
 * the rest follow in ascending dimension with a fixed per-family order for
 * ties.  The index set Lambda of the nontrivial classes is positions
 * 1..size-1; several inequality verifiers weight terms by this position, so
 * the order is part of the contract.
 */
struct DualList {
    int group_order = 0;
    std::vector<Irrep> irreps;

    int size() const { return static_cast<int>(irreps.size()); }
    const Irrep& at(int n) const { return irreps[n]; }

    /// Index m such that irreps[m] equals the entrywise conjugate of
    /// irreps[n] (exact for the built-in tables up to 1e-8).
    int contragredient_index(int n) const;
};

/// Builds the complete list of irreducible unitary representations.
/// Peter-Weyl at finite scale: sum of squared dimensions equals |G|.
DualList dual(const GroupTable& group);

/// Entrywise complex conjugate; again an irrep (on the dual space).
Irrep contragredient(const Irrep& rep);

struct DualReport {
    double max_unitarity_defect = 0.0;
    double max_homomorphism_defect = 0.0;
    double sum_dim_sq_minus_order = 0.0;
    double max_orthogonality_defect = 0.0;
    double max_irreducibility_defect = 0.0;
    bool pass = false;
};

/// Re-derives every representation axiom from the tables: unitarity and the
/// homomorphism property per element pair, completeness (sum d^2 = |G|),
/// Schur orthogonality of matrix coefficients, and an averaged-operator
/// irreducibility probe with random matrices.  Passes iff all defects <= 1e-9.
DualReport verify_dual(const DualList& d, const GroupTable& g, std::uint64_t seed = 7);

}  // namespace bohr
