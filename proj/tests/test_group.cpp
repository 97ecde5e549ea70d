#include "doctest.h"

#include <stdexcept>

#include "bohr/group.hpp"

using namespace bohr;

TEST_CASE("cyclic(1) is the trivial group") {
    const GroupTable g = build_group("cyclic:1");
    CHECK(g.order == 1);
    CHECK(g.mult[0][0] == 0);
    CHECK(g.inverse[0] == 0);
    CHECK(check_group_axioms(g).pass());
}

TEST_CASE("every built-in group satisfies the axioms exhaustively") {
    for (const char* name : {"cyclic:1", "cyclic:4", "cyclic:12", "cyclic:16", "dihedral:3",
                             "dihedral:4", "dihedral:6", "symmetric:1", "symmetric:2",
                             "symmetric:3", "symmetric:4", "quaternion:8"}) {
        CAPTURE(name);
        const GroupTable g = build_group(name);
        const GroupAxiomReport r = check_group_axioms(g);
        CHECK(r.closed);
        CHECK(r.associative);
        CHECK(r.identity_ok);
        CHECK(r.inverses_ok);
    }
}

TEST_CASE("symmetric(3) has order 6 and is nonabelian") {
    const GroupTable g = build_group("symmetric:3");
    CHECK(g.order == 6);
    bool noncommuting_pair = false;
    for (int x = 0; x < g.order && !noncommuting_pair; ++x)
        for (int y = 0; y < g.order; ++y)
            if (g.mult[x][y] != g.mult[y][x]) {
                noncommuting_pair = true;
                break;
            }
    CHECK(noncommuting_pair);
    CHECK_FALSE(g.is_abelian());
}

TEST_CASE("quaternion(8): every element squared lies in the center") {
    const GroupTable g = build_group("quaternion:8");
    CHECK(g.order == 8);
    // center = elements commuting with everything, found exhaustively
    std::vector<int> center;
    for (int z = 0; z < g.order; ++z) {
        bool central = true;
        for (int x = 0; x < g.order; ++x)
            if (g.mult[z][x] != g.mult[x][z]) central = false;
        if (central) center.push_back(z);
    }
    CHECK(center.size() == 2);  // {1, -1}
    for (int x = 0; x < g.order; ++x) {
        const int sq = g.mult[x][x];
        CHECK(std::find(center.begin(), center.end(), sq) != center.end());
    }
    CHECK_FALSE(g.is_abelian());
}

TEST_CASE("dihedral multiplication matches the relation s r^a s = r^-a") {
    const int n = 5;
    const GroupTable g = build_group("dihedral:5");
    const int s = n;  // index of s r^0
    for (int a = 0; a < n; ++a) {
        const int ra = a;
        CHECK(g.mult[g.mult[s][ra]][s] == (n - a) % n);
    }
}

TEST_CASE("cyclic groups are abelian, dihedral ones are not") {
    CHECK(build_group("cyclic:12").is_abelian());
    CHECK_FALSE(build_group("dihedral:4").is_abelian());
}

TEST_CASE("descriptor parsing") {
    CHECK(parse_group_spec("cyclic:7").n == 7);
    CHECK(parse_group_spec("quaternion:8").family == GroupFamily::Quaternion);
    CHECK_THROWS_AS(parse_group_spec("cyclic"), std::invalid_argument);
    CHECK_THROWS_AS(parse_group_spec("cyclic:0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_group_spec("dihedral:2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_group_spec("symmetric:5"), std::invalid_argument);
    CHECK_THROWS_AS(parse_group_spec("quaternion:16"), std::invalid_argument);
    CHECK_THROWS_AS(parse_group_spec("nosuch:5"), std::invalid_argument);
    CHECK_THROWS_AS(parse_group_spec("cyclic:x"), std::invalid_argument);
}
