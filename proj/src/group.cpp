#include "bohr/group.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace bohr {

GroupSpec parse_group_spec(const std::string& text) {
    auto colon = text.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("group descriptor must look like 'family:N', got '" + text + "'");
    const std::string family = text.substr(0, colon);
    int n = 0;
    try {
        size_t used = 0;
        n = std::stoi(text.substr(colon + 1), &used);
        if (used != text.size() - colon - 1) throw std::invalid_argument("");
    } catch (const std::exception&) {
        throw std::invalid_argument("bad group order in descriptor '" + text + "'");
    }
    if (family == "cyclic") {
        if (n < 1) throw std::invalid_argument("cyclic:N needs N >= 1");
        return {GroupFamily::Cyclic, n};
    }
    if (family == "dihedral") {
        if (n < 3) throw std::invalid_argument("dihedral:N needs N >= 3");
        return {GroupFamily::Dihedral, n};
    }
    if (family == "symmetric") {
        if (n < 1 || n > 4) throw std::invalid_argument("symmetric:N supported for 1 <= N <= 4");
        return {GroupFamily::Symmetric, n};
    }
    if (family == "quaternion") {
        if (n != 8) throw std::invalid_argument("only quaternion:8 is supported");
        return {GroupFamily::Quaternion, 8};
    }
    throw std::invalid_argument("unknown group family '" + family + "'");
}

std::vector<std::vector<int>> all_permutations(int n) {
    std::vector<int> p(n);
    for (int i = 0; i < n; ++i) p[i] = i;
    std::vector<std::vector<int>> out;
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

namespace {

GroupTable make_cyclic(int n) {
    GroupTable g;
    g.order = n;
    g.label = "cyclic-" + std::to_string(n);
    g.mult.assign(n, std::vector<int>(n));
    g.inverse.assign(n, 0);
    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) g.mult[x][y] = (x + y) % n;
        g.inverse[x] = (n - x) % n;
    }
    return g;
}

// Element s^e r^a encoded as e*n + a.  Relations: r^n = s^2 = identity,
// s r^a s = r^{-a}, hence (s^e1 r^a1)(s^e2 r^a2) = s^{e1+e2} r^{(-1)^{e2} a1 + a2}.
GroupTable make_dihedral(int n) {
    GroupTable g;
    g.order = 2 * n;
    g.label = "dihedral-" + std::to_string(n);
    g.mult.assign(2 * n, std::vector<int>(2 * n));
    g.inverse.assign(2 * n, 0);
    auto idx = [n](int e, int a) { return e * n + ((a % n + n) % n); };
    for (int e1 = 0; e1 < 2; ++e1)
        for (int a1 = 0; a1 < n; ++a1)
            for (int e2 = 0; e2 < 2; ++e2)
                for (int a2 = 0; a2 < n; ++a2) {
                    int a = (e2 == 1 ? -a1 : a1) + a2;
                    g.mult[idx(e1, a1)][idx(e2, a2)] = idx((e1 + e2) % 2, a);
                }
    for (int e = 0; e < 2; ++e)
        for (int a = 0; a < n; ++a) g.inverse[idx(e, a)] = (e == 1) ? idx(1, a) : idx(0, -a);
    return g;
}

GroupTable make_symmetric(int n) {
    GroupTable g;
    auto perms = all_permutations(n);
    const int order = static_cast<int>(perms.size());
    g.order = order;
    g.label = "symmetric-" + std::to_string(n);
    std::map<std::vector<int>, int> index_of;
    for (int i = 0; i < order; ++i) index_of[perms[i]] = i;

    g.mult.assign(order, std::vector<int>(order));
    g.inverse.assign(order, 0);
    for (int i = 0; i < order; ++i) {
        for (int j = 0; j < order; ++j) {
            std::vector<int> comp(n);  // (p_i after p_j): comp(k) = p_i[p_j[k]]
            for (int k = 0; k < n; ++k) comp[k] = perms[i][perms[j][k]];
            g.mult[i][j] = index_of[comp];
        }
        std::vector<int> inv(n);
        for (int k = 0; k < n; ++k) inv[perms[i][k]] = k;
        g.inverse[i] = index_of[inv];
    }
    return g;
}

// Elements of Q8 encoded as 2*b + s with basis b in {1,i,j,k} and sign s.
GroupTable make_quaternion8() {
    // basis_mul[b1][b2] = {sign, basis} of the product of basis units
    static const int basis_mul[4][4][2] = {
        {{0, 0}, {0, 1}, {0, 2}, {0, 3}},
        {{0, 1}, {1, 0}, {0, 3}, {1, 2}},
        {{0, 2}, {1, 3}, {1, 0}, {0, 1}},
        {{0, 3}, {0, 2}, {1, 1}, {1, 0}},
    };
    GroupTable g;
    g.order = 8;
    g.label = "quaternion-8";
    g.mult.assign(8, std::vector<int>(8));
    g.inverse.assign(8, 0);
    for (int x = 0; x < 8; ++x) {
        int b1 = x / 2, s1 = x % 2;
        for (int y = 0; y < 8; ++y) {
            int b2 = y / 2, s2 = y % 2;
            int s = (s1 + s2 + basis_mul[b1][b2][0]) % 2;
            g.mult[x][y] = 2 * basis_mul[b1][b2][1] + s;
        }
    }
    for (int x = 0; x < 8; ++x)
        for (int y = 0; y < 8; ++y)
            if (g.mult[x][y] == 0) g.inverse[x] = y;
    return g;
}

}  // namespace

GroupTable build_group(const GroupSpec& spec) {
    switch (spec.family) {
        case GroupFamily::Cyclic: return make_cyclic(spec.n);
        case GroupFamily::Dihedral: return make_dihedral(spec.n);
        case GroupFamily::Symmetric: return make_symmetric(spec.n);
        case GroupFamily::Quaternion: return make_quaternion8();
    }
    throw std::invalid_argument("unreachable group family");
}

GroupTable build_group(const std::string& descriptor) {
    return build_group(parse_group_spec(descriptor));
}

GroupAxiomReport check_group_axioms(const GroupTable& g) {
    GroupAxiomReport r;
    const int n = g.order;
    r.closed = true;
    for (int x = 0; x < n && r.closed; ++x)
        for (int y = 0; y < n; ++y)
            if (g.mult[x][y] < 0 || g.mult[x][y] >= n) {
                r.closed = false;
                break;
            }
    r.associative = true;
    for (int x = 0; x < n && r.associative; ++x)
        for (int y = 0; y < n && r.associative; ++y)
            for (int z = 0; z < n; ++z)
                if (g.mult[g.mult[x][y]][z] != g.mult[x][g.mult[y][z]]) {
                    r.associative = false;
                    break;
                }
    r.identity_ok = true;
    for (int x = 0; x < n; ++x)
        if (g.mult[g.identity][x] != x || g.mult[x][g.identity] != x) r.identity_ok = false;
    r.inverses_ok = true;
    for (int x = 0; x < n; ++x)
        if (g.mult[x][g.inverse[x]] != g.identity || g.mult[g.inverse[x]][x] != g.identity)
            r.inverses_ok = false;
    return r;
}

}  // namespace bohr
