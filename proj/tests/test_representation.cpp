#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>

#include "bohr/representation.hpp"

using namespace bohr;

namespace {

std::vector<int> sorted_dims(const DualList& d) {
    std::vector<int> dims;
    for (const auto& irr : d.irreps) dims.push_back(irr.dim);
    std::sort(dims.begin(), dims.end());
    return dims;
}

}  // namespace

TEST_CASE("cyclic(4): four characters i^{kx}") {
    const GroupTable g = build_group("cyclic:4");
    const DualList d = dual(g);
    REQUIRE(d.size() == 4);
    const Complex i(0, 1);
    for (int k = 0; k < 4; ++k) {
        CHECK(d.at(k).dim == 1);
        for (int x = 0; x < 4; ++x) {
            const Complex expected = std::pow(i, k * x);  // character table of Z4
            CHECK(std::abs(d.at(k).at(x)(0, 0) - expected) <= 1e-12);
        }
    }
}

TEST_CASE("dual dimensions per group") {
    CHECK(sorted_dims(dual(build_group("symmetric:3"))) == std::vector<int>{1, 1, 2});
    CHECK(sorted_dims(dual(build_group("quaternion:8"))) == std::vector<int>{1, 1, 1, 1, 2});
    CHECK(sorted_dims(dual(build_group("symmetric:4"))) == std::vector<int>{1, 1, 2, 3, 3});
    CHECK(sorted_dims(dual(build_group("dihedral:3"))) == std::vector<int>{1, 1, 2});
    CHECK(sorted_dims(dual(build_group("dihedral:4"))) == std::vector<int>{1, 1, 1, 1, 2});
}

TEST_CASE("Peter-Weyl completeness and enumeration order") {
    for (const char* name : {"cyclic:1", "cyclic:8", "cyclic:12", "cyclic:16", "dihedral:3",
                             "dihedral:4", "dihedral:6", "symmetric:2", "symmetric:3",
                             "symmetric:4", "quaternion:8"}) {
        CAPTURE(name);
        const GroupTable g = build_group(name);
        const DualList d = dual(g);
        int dim_sq = 0;
        for (const auto& irr : d.irreps) dim_sq += irr.dim * irr.dim;
        CHECK(dim_sq == g.order);  // sum d^2 = |G| exactly
        // trivial representation first, then nondecreasing dimension
        for (int x = 0; x < g.order; ++x)
            CHECK(std::abs(d.at(0).at(x)(0, 0) - Complex(1, 0)) == 0.0);
        for (int n = 1; n < d.size(); ++n) CHECK(d.at(n).dim >= d.at(n - 1).dim);
        if (g.is_abelian())
            for (const auto& irr : d.irreps) CHECK(irr.dim == 1);
    }
}

TEST_CASE("verify_dual passes on every built-in dual") {
    for (const char* name : {"cyclic:4", "cyclic:16", "dihedral:5", "dihedral:6", "symmetric:4",
                             "quaternion:8"}) {
        CAPTURE(name);
        const GroupTable g = build_group(name);
        const DualReport r = verify_dual(dual(g), g);
        CHECK(r.max_unitarity_defect <= 1e-10);
        CHECK(r.max_homomorphism_defect <= 1e-10);
        CHECK(r.sum_dim_sq_minus_order == 0.0);
        CHECK(r.max_orthogonality_defect <= 1e-10);
        CHECK(r.max_irreducibility_defect <= 1e-9);
        CHECK(r.pass);
    }
}

TEST_CASE("verify_dual detects an injected perturbation of size 1e-3") {
    const GroupTable g = build_group("symmetric:3");
    DualList d = dual(g);
    d.irreps[2].matrices[1](0, 0) += 1e-3;
    const DualReport r = verify_dual(d, g);
    CHECK_FALSE(r.pass);
    CHECK(r.max_homomorphism_defect >= 1e-4);
    CHECK(r.max_homomorphism_defect <= 1e-2);
}

TEST_CASE("contragredient: conjugate of the Z4 character k=1 is k=3") {
    const GroupTable g = build_group("cyclic:4");
    const DualList d = dual(g);
    const Irrep conj1 = contragredient(d.at(1));
    for (int x = 0; x < 4; ++x)
        CHECK(std::abs(conj1.at(x)(0, 0) - d.at(3).at(x)(0, 0)) <= 1e-15);
    CHECK(d.contragredient_index(1) == 3);
    CHECK(d.contragredient_index(0) == 0);
}

TEST_CASE("contragredient: real representations are self-conjugate") {
    const GroupTable g = build_group("symmetric:3");
    const DualList d = dual(g);
    CHECK(d.contragredient_index(2) == 2);  // the 2-dim irrep is real orthogonal
    const Irrep c = contragredient(d.at(0));
    for (int x = 0; x < g.order; ++x) CHECK(c.at(x)(0, 0) == Complex(1, 0));
}

TEST_CASE("contragredient is an exact involution") {
    for (const char* name : {"cyclic:8", "quaternion:8", "symmetric:4"}) {
        const GroupTable g = build_group(name);
        for (const auto& irr : dual(g).irreps) {
            const Irrep twice = contragredient(contragredient(irr));
            for (int x = 0; x < g.order; ++x)
                CHECK((twice.at(x) - irr.at(x)).cwiseAbs().maxCoeff() == 0.0);
        }
    }
}

TEST_CASE("all singular values of representation matrices equal 1") {
    for (const char* name : {"dihedral:6", "symmetric:4", "quaternion:8"}) {
        const GroupTable g = build_group(name);
        for (const auto& irr : dual(g).irreps)
            for (const auto& m : irr.matrices) {
                Eigen::JacobiSVD<Matrix> svd(m);
                for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i)
                    CHECK(std::abs(svd.singularValues()(i) - 1.0) <= 1e-10);
            }
    }
}
