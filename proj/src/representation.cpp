#include "bohr/representation.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace bohr {

namespace {

constexpr double kPi = std::numbers::pi;

Matrix one_by_one(Complex v) {
    Matrix m(1, 1);
    m(0, 0) = v;
    return m;
}

Irrep trivial_rep(int order) {
    Irrep rep;
    rep.dim = 1;
    rep.name = "trivial";
    rep.matrices.assign(order, Matrix::Identity(1, 1));
    return rep;
}

Irrep character_rep(const std::string& name, const std::vector<Complex>& values) {
    Irrep rep;
    rep.dim = 1;
    rep.name = name;
    rep.matrices.reserve(values.size());
    for (auto v : values) rep.matrices.push_back(one_by_one(v));
    return rep;
}

std::vector<Irrep> dual_cyclic(int n) {
    std::vector<Irrep> irreps;
    for (int k = 0; k < n; ++k) {
        std::vector<Complex> vals(n);
        for (int x = 0; x < n; ++x) {
            double t = 2.0 * kPi * k * x / n;
            vals[x] = Complex(std::cos(t), std::sin(t));
        }
        irreps.push_back(character_rep(k == 0 ? "trivial" : "chi" + std::to_string(k), vals));
    }
    return irreps;
}

Matrix rotation2(double t) {
    Matrix m(2, 2);
    m << std::cos(t), -std::sin(t), std::sin(t), std::cos(t);
    return m;
}

std::vector<Irrep> dual_dihedral(int n) {
    const int order = 2 * n;
    auto elem = [n](int x) { return std::pair<int, int>{x / n, x % n}; };  // (e, a): s^e r^a

    std::vector<Irrep> irreps;
    irreps.push_back(trivial_rep(order));

    auto sign_char = [&](const std::string& name, int r_sign, int s_sign) {
        std::vector<Complex> vals(order);
        for (int x = 0; x < order; ++x) {
            auto [e, a] = elem(x);
            double v = (e == 1 ? s_sign : 1) * ((a % 2 == 1) ? r_sign : 1);
            vals[x] = Complex(v, 0);
        }
        return character_rep(name, vals);
    };

    irreps.push_back(sign_char("sgn_s", 1, -1));
    if (n % 2 == 0) {
        irreps.push_back(sign_char("sgn_r", -1, 1));
        irreps.push_back(sign_char("sgn_rs", -1, -1));
    }

    const Matrix flip = (Matrix(2, 2) << 1, 0, 0, -1).finished();
    const int h_max = (n % 2 == 0) ? n / 2 - 1 : (n - 1) / 2;
    for (int h = 1; h <= h_max; ++h) {
        Irrep rep;
        rep.dim = 2;
        rep.name = "rot" + std::to_string(h);
        rep.matrices.resize(order);
        for (int x = 0; x < order; ++x) {
            auto [e, a] = elem(x);
            Matrix m = rotation2(2.0 * kPi * h * a / n);
            if (e == 1) m = flip * m;
            rep.matrices[x] = m;
        }
        irreps.push_back(rep);
    }
    return irreps;
}

// Orthonormal basis of the hyperplane sum(v) = 0 in R^n (Helmert vectors);
// conjugating the permutation action by this basis gives the standard
// (n-1)-dimensional irrep of S_n as real orthogonal matrices.
Eigen::MatrixXd hyperplane_basis(int n) {
    Eigen::MatrixXd basis(n, n - 1);
    basis.setZero();
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) basis(i, j - 1) = 1.0;
        basis(j, j - 1) = -static_cast<double>(j);
        basis.col(j - 1) /= std::sqrt(static_cast<double>(j) * (j + 1));
    }
    return basis;
}

Matrix standard_rep_matrix(const std::vector<int>& perm, const Eigen::MatrixXd& basis) {
    const int n = static_cast<int>(perm.size());
    Eigen::MatrixXd p = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i) p(perm[i], i) = 1.0;  // P e_i = e_{perm(i)}
    Eigen::MatrixXd m = basis.transpose() * p * basis;
    return m.cast<Complex>();
}

int permutation_sign(const std::vector<int>& perm) {
    int sign = 1;
    const int n = static_cast<int>(perm.size());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (perm[i] > perm[j]) sign = -sign;
    return sign;
}

std::vector<Irrep> dual_symmetric(int n) {
    const auto perms = all_permutations(n);
    const int order = static_cast<int>(perms.size());

    std::vector<Irrep> irreps;
    irreps.push_back(trivial_rep(order));
    if (n == 1) return irreps;

    {
        std::vector<Complex> vals(order);
        for (int x = 0; x < order; ++x) vals[x] = Complex(permutation_sign(perms[x]), 0);
        irreps.push_back(character_rep("sgn", vals));
    }
    if (n == 2) return irreps;

    if (n == 4) {
        // Two-dimensional irrep pulled back through S4 -> S3 (the action on
        // the three pairings {01|23, 02|13, 03|12}; pairing t couples 0 with t+1).
        auto pairing_perm = [](const std::vector<int>& p) {
            std::vector<int> q(3);
            for (int t = 0; t < 3; ++t) {
                int mate[4];
                mate[0] = t + 1;
                mate[t + 1] = 0;
                std::vector<int> rest;
                for (int v = 1; v <= 3; ++v)
                    if (v != t + 1) rest.push_back(v);
                mate[rest[0]] = rest[1];
                mate[rest[1]] = rest[0];
                int s = 0;
                while (p[s] != 0) ++s;
                q[t] = p[mate[s]] - 1;  // 0's partner in the image pairing
            }
            return q;
        };
        const auto basis3 = hyperplane_basis(3);
        Irrep rep;
        rep.dim = 2;
        rep.name = "std3-pullback";
        rep.matrices.resize(order);
        for (int x = 0; x < order; ++x)
            rep.matrices[x] = standard_rep_matrix(pairing_perm(perms[x]), basis3);
        irreps.push_back(rep);
    }

    const auto basis = hyperplane_basis(n);
    Irrep standard;
    standard.dim = n - 1;
    standard.name = "std";
    standard.matrices.resize(order);
    for (int x = 0; x < order; ++x) standard.matrices[x] = standard_rep_matrix(perms[x], basis);
    irreps.push_back(standard);

    if (n == 4) {
        Irrep twisted = standard;
        twisted.name = "std*sgn";
        for (int x = 0; x < order; ++x)
            twisted.matrices[x] *= static_cast<double>(permutation_sign(perms[x]));
        irreps.push_back(twisted);
    }
    return irreps;
}

std::vector<Irrep> dual_quaternion8() {
    // Elements encoded as 2*b + s, b in {1,i,j,k}, s the sign bit.
    std::vector<Irrep> irreps;
    irreps.push_back(trivial_rep(8));

    auto quotient_char = [&](const std::string& name, int plus_basis) {
        std::vector<Complex> vals(8);
        for (int x = 0; x < 8; ++x) {
            int b = x / 2;
            vals[x] = Complex((b == 0 || b == plus_basis) ? 1.0 : -1.0, 0);
        }
        return character_rep(name, vals);
    };
    irreps.push_back(quotient_char("chi_i", 1));
    irreps.push_back(quotient_char("chi_j", 2));
    irreps.push_back(quotient_char("chi_k", 3));

    const Complex I(0, 1);
    std::vector<Matrix> basis_mats(4, Matrix(2, 2));
    basis_mats[0] << 1, 0, 0, 1;
    basis_mats[1] << I, 0, 0, -I;
    basis_mats[2] << 0, 1, -1, 0;
    basis_mats[3] << 0, I, I, 0;

    Irrep two;
    two.dim = 2;
    two.name = "spin";
    two.matrices.resize(8);
    for (int x = 0; x < 8; ++x) {
        int b = x / 2, s = x % 2;
        two.matrices[x] = (s == 1 ? -1.0 : 1.0) * basis_mats[b];
    }
    irreps.push_back(two);
    return irreps;
}

}  // namespace

DualList dual(const GroupTable& group) {
    DualList d;
    d.group_order = group.order;
    const std::string& label = group.label;
    auto dash = label.find('-');
    const std::string family = label.substr(0, dash);
    const int n = std::stoi(label.substr(dash + 1));
    if (family == "cyclic")
        d.irreps = dual_cyclic(n);
    else if (family == "dihedral")
        d.irreps = dual_dihedral(n);
    else if (family == "symmetric")
        d.irreps = dual_symmetric(n);
    else if (family == "quaternion")
        d.irreps = dual_quaternion8();
    else
        throw std::invalid_argument("no dual table for group '" + label + "'");
    return d;
}

Irrep contragredient(const Irrep& rep) {
    Irrep out;
    out.dim = rep.dim;
    out.name = rep.name + "~";
    out.matrices.reserve(rep.matrices.size());
    for (const auto& m : rep.matrices) out.matrices.push_back(m.conjugate());
    return out;
}

int DualList::contragredient_index(int n) const {
    const Irrep conj = contragredient(irreps[n]);
    for (int m = 0; m < size(); ++m) {
        if (irreps[m].dim != conj.dim) continue;
        double defect = 0.0;
        for (size_t x = 0; x < conj.matrices.size(); ++x)
            defect = std::max(defect,
                              (irreps[m].matrices[x] - conj.matrices[x]).cwiseAbs().maxCoeff());
        if (defect <= 1e-8) return m;
    }
    throw std::runtime_error("contragredient of irrep " + std::to_string(n) +
                             " not found in the dual (entrywise match expected)");
}

DualReport verify_dual(const DualList& d, const GroupTable& g, std::uint64_t seed) {
    DualReport r;
    const int order = g.order;

    double dim_sq = 0.0;
    for (const auto& rep : d.irreps) {
        dim_sq += static_cast<double>(rep.dim) * rep.dim;
        const Matrix id = Matrix::Identity(rep.dim, rep.dim);
        for (int x = 0; x < order; ++x) {
            const Matrix& m = rep.at(x);
            r.max_unitarity_defect =
                std::max(r.max_unitarity_defect, (m.adjoint() * m - id).cwiseAbs().maxCoeff());
            for (int y = 0; y < order; ++y) {
                r.max_homomorphism_defect =
                    std::max(r.max_homomorphism_defect,
                             (rep.at(g.mult[x][y]) - m * rep.at(y)).cwiseAbs().maxCoeff());
            }
        }
    }
    r.sum_dim_sq_minus_order = dim_sq - order;

    // Schur orthogonality of matrix coefficients:
    // (1/|G|) sum_x pi_m(x)_{ij} conj(pi_n(x)_{kl}) = delta_{mn} delta_{ik} delta_{jl} / d_n.
    for (int m = 0; m < d.size(); ++m) {
        for (int n = m; n < d.size(); ++n) {
            const Irrep& a = d.at(m);
            const Irrep& b = d.at(n);
            for (int i = 0; i < a.dim; ++i)
                for (int j = 0; j < a.dim; ++j)
                    for (int k = 0; k < b.dim; ++k)
                        for (int l = 0; l < b.dim; ++l) {
                            Complex acc = 0;
                            for (int x = 0; x < order; ++x)
                                acc += a.at(x)(i, j) * std::conj(b.at(x)(k, l));
                            acc /= static_cast<double>(order);
                            Complex expected = 0;
                            if (m == n && i == k && j == l) expected = 1.0 / a.dim;
                            r.max_orthogonality_defect =
                                std::max(r.max_orthogonality_defect, std::abs(acc - expected));
                        }
        }
    }

    // Schur irreducibility probe: the group average of pi(x) A pi(x)* must be
    // (tr A / d) I for any A; three random A per irrep.
    Rng rng(seed);
    for (const auto& rep : d.irreps) {
        for (int trial = 0; trial < 3; ++trial) {
            Matrix a(rep.dim, rep.dim);
            for (int i = 0; i < rep.dim; ++i)
                for (int j = 0; j < rep.dim; ++j) a(i, j) = rng.complex_gaussian();
            Matrix avg = Matrix::Zero(rep.dim, rep.dim);
            for (int x = 0; x < order; ++x) avg += rep.at(x) * a * rep.at(x).adjoint();
            avg /= static_cast<double>(order);
            const Matrix expected =
                (a.trace() / static_cast<double>(rep.dim)) * Matrix::Identity(rep.dim, rep.dim);
            r.max_irreducibility_defect =
                std::max(r.max_irreducibility_defect, (avg - expected).cwiseAbs().maxCoeff());
        }
    }

    r.pass = r.max_unitarity_defect <= 1e-9 && r.max_homomorphism_defect <= 1e-9 &&
             std::abs(r.sum_dim_sq_minus_order) <= 1e-9 && r.max_orthogonality_defect <= 1e-9 &&
             r.max_irreducibility_defect <= 1e-9;
    return r;
}

}  // namespace bohr
