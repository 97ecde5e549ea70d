#pragma once

#include <string>
#include <vector>

namespace bohr {

/**
 * @brief A finite group as an explicit multiplication table.
 *
 * Elements are indices 0..order-1 with identity at index 0.  The normalized
 * Haar measure on a finite group is the uniform weight 1/|G|, so integration
 * over the group is averaging over the table.
 */
struct GroupTable {
    int order = 0;
    std::vector<std::vector<int>> mult;  // mult[x][y] = index of x*y
    std::vector<int> inverse;            // inverse[x] = index of x^{-1}
    int identity = 0;
    std::string label;

    int apply(int x, int y) const { return mult[x][y]; }

    bool is_abelian() const {
        for (int x = 0; x < order; ++x)
            for (int y = x + 1; y < order; ++y)
                if (mult[x][y] != mult[y][x]) return false;
        return true;
    }
};

enum class GroupFamily { Cyclic, Dihedral, Symmetric, Quaternion };

struct GroupSpec {
    GroupFamily family;
    int n;
};

/// Parses the CLI group syntax: "cyclic:N", "dihedral:N", "symmetric:N",
/// "quaternion:8".  Throws std::invalid_argument for anything else.
GroupSpec parse_group_spec(const std::string& text);

/// Builds the multiplication table for a supported group.  Supported:
/// cyclic(n>=1), dihedral(n>=3), symmetric(n<=4), quaternion(8).
GroupTable build_group(const GroupSpec& spec);

GroupTable build_group(const std::string& descriptor);

/**
 * @brief Result of exhaustively checking the group axioms on a table.
 *
 * Feasible for every built-in order (|G| <= 64 means at most 64^3 triples).
 */
struct GroupAxiomReport {
    bool associative = false;
    bool identity_ok = false;
    bool inverses_ok = false;
    bool closed = false;
    bool pass() const { return associative && identity_ok && inverses_ok && closed; }
};

GroupAxiomReport check_group_axioms(const GroupTable& g);

/// Permutations of {0..n-1} in lexicographic order (identity first).
std::vector<std::vector<int>> all_permutations(int n);

}  // namespace bohr
