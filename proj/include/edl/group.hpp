/**
 * group.hpp -- finite groups as explicit multiplication tables.
 *
 * Groups enter either through the built-in constructors (Z/n, S3, D4, Q8)
 * or as JSON multiplication tables; everything downstream only sees the
 * table.  Desk scale: |G| <= 48.
 */
#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace edl {

struct NotAGroup : std::runtime_error {
    explicit NotAGroup(const std::string& w) : std::runtime_error("not a group: " + w) {}
};

class Group {
public:
    int n = 0;
    std::vector<std::vector<int>> mul;  // mul[a][b] = a*b
    std::vector<int> inv;
    int e = -1;
    std::vector<std::string> labels;
    std::string name;

    Group() = default;
    Group(std::vector<std::vector<int>> table, std::vector<std::string> labels_, std::string name_)
        : n(static_cast<int>(table.size())), mul(std::move(table)), labels(std::move(labels_)),
          name(std::move(name_)) {
        validate();
    }

    int op(int a, int b) const { return mul[a][b]; }
    int conj(int h, int g) const { return mul[mul[h][g]][inv[h]]; }  // h g h^{-1}
    int order_of(int g) const {
        int k = 1, x = g;
        while (x != e) {
            x = mul[x][g];
            ++k;
        }
        return k;
    }

    std::vector<std::vector<int>> conjugacy_classes() const {
        std::vector<std::vector<int>> classes;
        std::vector<bool> seen(n, false);
        for (int g = 0; g < n; ++g) {
            if (seen[g]) continue;
            std::set<int> cls;
            for (int h = 0; h < n; ++h) cls.insert(conj(h, g));
            std::vector<int> v(cls.begin(), cls.end());
            for (int x : v) seen[x] = true;
            classes.push_back(std::move(v));
        }
        return classes;
    }

    std::vector<int> centralizer(int g) const {
        std::vector<int> z;
        for (int h = 0; h < n; ++h)
            if (mul[h][g] == mul[g][h]) z.push_back(h);
        return z;
    }

    std::vector<int> centralizer_pair(int g1, int g2) const {
        std::vector<int> z;
        for (int h = 0; h < n; ++h)
            if (mul[h][g1] == mul[g1][h] && mul[h][g2] == mul[g2][h]) z.push_back(h);
        return z;
    }

    /// Orbits of G acting on G x G by simultaneous conjugation.
    std::vector<std::vector<std::pair<int, int>>> diag_conj_orbits() const {
        std::vector<std::vector<std::pair<int, int>>> orbits;
        std::set<std::pair<int, int>> seen;
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                if (seen.count({a, b})) continue;
                std::set<std::pair<int, int>> orb;
                for (int h = 0; h < n; ++h) orb.insert({conj(h, a), conj(h, b)});
                for (auto& p : orb) seen.insert(p);
                orbits.emplace_back(orb.begin(), orb.end());
            }
        return orbits;
    }

    /// Burnside count of diagonal-conjugation orbits on G x G:
    /// (1/|G|) sum_h |Fix(h)|^2 with |Fix(h)| = |Z(h)|.
    long burnside_pair_orbit_count() const {
        long total = 0;
        for (int h = 0; h < n; ++h) {
            long fix = 0;
            for (int a = 0; a < n; ++a)
                if (mul[h][a] == mul[a][h]) ++fix;
            total += fix * fix;
        }
        if (total % n != 0) throw std::logic_error("burnside count not integral");
        return total / n;
    }

    /// Subgroup on a closed subset; returns the subgroup with its embedding
    /// into this group.
    std::pair<Group, std::vector<int>> subgroup(std::vector<int> elems) const {
        std::sort(elems.begin(), elems.end());
        std::map<int, int> idx;
        for (size_t i = 0; i < elems.size(); ++i) idx[elems[i]] = static_cast<int>(i);
        int m = static_cast<int>(elems.size());
        std::vector<std::vector<int>> t(m, std::vector<int>(m));
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) {
                auto it = idx.find(mul[elems[i]][elems[j]]);
                if (it == idx.end()) throw NotAGroup("subset is not closed");
                t[i][j] = it->second;
            }
        std::vector<std::string> ls(m);
        for (int i = 0; i < m; ++i) ls[i] = labels[elems[i]];
        Group g(std::move(t), std::move(ls), name + "-sub");
        return {std::move(g), std::move(elems)};
    }

private:
    void validate() {
        if (n <= 0) throw NotAGroup("empty table");
        if (static_cast<int>(labels.size()) != n) labels = default_labels(n);
        for (auto& row : mul) {
            if (static_cast<int>(row.size()) != n) throw NotAGroup("table is not square");
            for (int x : row)
                if (x < 0 || x >= n) throw NotAGroup("entry out of range");
        }
        // identity
        for (int cand = 0; cand < n; ++cand) {
            bool ok = true;
            for (int g = 0; g < n && ok; ++g) ok = (mul[cand][g] == g && mul[g][cand] == g);
            if (ok) {
                e = cand;
                break;
            }
        }
        if (e < 0) throw NotAGroup("no identity element");
        // inverses
        inv.assign(n, -1);
        for (int g = 0; g < n; ++g) {
            for (int h = 0; h < n; ++h)
                if (mul[g][h] == e && mul[h][g] == e) {
                    inv[g] = h;
                    break;
                }
            if (inv[g] < 0) throw NotAGroup("element without inverse: " + labels[g]);
        }
        // associativity
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c)
                    if (mul[mul[a][b]][c] != mul[a][mul[b][c]])
                        throw NotAGroup("associativity fails at (" + labels[a] + "," + labels[b] +
                                        "," + labels[c] + ")");
    }

    static std::vector<std::string> default_labels(int n) {
        std::vector<std::string> ls(n);
        for (int i = 0; i < n; ++i) ls[i] = "g" + std::to_string(i);
        return ls;
    }
};

inline Group cyclic_group(int m) {
    std::vector<std::vector<int>> t(m, std::vector<int>(m));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) t[i][j] = (i + j) % m;
    std::vector<std::string> ls(m);
    for (int i = 0; i < m; ++i) ls[i] = i == 0 ? "e" : (i == 1 ? "g" : "g^" + std::to_string(i));
    return Group(std::move(t), std::move(ls), "Z" + std::to_string(m));
}

inline Group symmetric3() {
    // permutations of {0,1,2} in one-line notation
    std::vector<std::array<int, 3>> perms = {{0, 1, 2}, {1, 0, 2}, {0, 2, 1},
                                             {2, 1, 0}, {1, 2, 0}, {2, 0, 1}};
    auto find = [&](const std::array<int, 3>& p) {
        for (size_t i = 0; i < perms.size(); ++i)
            if (perms[i] == p) return static_cast<int>(i);
        return -1;
    };
    int m = 6;
    std::vector<std::vector<int>> t(m, std::vector<int>(m));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            std::array<int, 3> comp;  // (perm_i o perm_j)(x) = perm_i[perm_j[x]]
            for (int x = 0; x < 3; ++x) comp[x] = perms[i][perms[j][x]];
            t[i][j] = find(comp);
        }
    std::vector<std::string> ls = {"e", "(01)", "(12)", "(02)", "(012)", "(021)"};
    return Group(std::move(t), std::move(ls), "S3");
}

inline Group dihedral4() {
    // r^a s^b, a mod 4, b mod 2, with s r s = r^{-1}
    auto idx = [](int a, int b) { return a + 4 * b; };
    std::vector<std::vector<int>> t(8, std::vector<int>(8));
    for (int a1 = 0; a1 < 4; ++a1)
        for (int b1 = 0; b1 < 2; ++b1)
            for (int a2 = 0; a2 < 4; ++a2)
                for (int b2 = 0; b2 < 2; ++b2) {
                    // (r^{a1} s^{b1})(r^{a2} s^{b2}) = r^{a1 + (-1)^{b1} a2} s^{b1+b2}
                    int a = ((a1 + (b1 ? -a2 : a2)) % 4 + 4) % 4;
                    int b = (b1 + b2) % 2;
                    t[idx(a1, b1)][idx(a2, b2)] = idx(a, b);
                }
    std::vector<std::string> ls(8);
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 2; ++b) {
            std::string s = a == 0 && b == 0 ? "e" : "";
            if (a > 0) s += (a == 1 ? "r" : "r^" + std::to_string(a));
            if (b) s += "s";
            ls[idx(a, b)] = s;
        }
    return Group(std::move(t), std::move(ls), "D4");
}

inline Group quaternion8() {
    // elements 1,-1,i,-i,j,-j,k,-k at indices 0..7 (sign bit = index & 1)
    // encode x = (unit u in {1,i,j,k}, sign s); multiplication by the quaternion table
    auto enc = [](int u, int s) { return 2 * u + s; };
    // unit products: table[u][v] = (unit, sign)
    const int U1 = 0, UI = 1, UJ = 2, UK = 3;
    int prod_u[4][4] = {{U1, UI, UJ, UK}, {UI, U1, UK, UJ}, {UJ, UK, U1, UI}, {UK, UJ, UI, U1}};
    int prod_s[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
    // i*j=k, j*k=i, k*i=j, i*i=j*j=k*k=-1; fill signs accordingly
    prod_s[UI][UJ] = 0; prod_u[UI][UJ] = UK;
    prod_s[UJ][UI] = 1; prod_u[UJ][UI] = UK;
    prod_s[UJ][UK] = 0; prod_u[UJ][UK] = UI;
    prod_s[UK][UJ] = 1; prod_u[UK][UJ] = UI;
    prod_s[UK][UI] = 0; prod_u[UK][UI] = UJ;
    prod_s[UI][UK] = 1; prod_u[UI][UK] = UJ;
    std::vector<std::vector<int>> t(8, std::vector<int>(8));
    for (int u1 = 0; u1 < 4; ++u1)
        for (int s1 = 0; s1 < 2; ++s1)
            for (int u2 = 0; u2 < 4; ++u2)
                for (int s2 = 0; s2 < 2; ++s2)
                    t[enc(u1, s1)][enc(u2, s2)] =
                        enc(prod_u[u1][u2], (s1 + s2 + prod_s[u1][u2]) % 2);
    std::vector<std::string> ls = {"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
    return Group(std::move(t), std::move(ls), "Q8");
}

inline Group trivial_group() {
    return Group({{0}}, {"e"}, "1");
}

/// Built-in lookup by name used by the CLI and the suites.
inline Group group_by_name(const std::string& name) {
    if (name == "1" || name == "trivial") return trivial_group();
    if (name == "Z2") return cyclic_group(2);
    if (name == "Z3") return cyclic_group(3);
    if (name == "Z4") return cyclic_group(4);
    if (name == "Z5") return cyclic_group(5);
    if (name == "Z6") return cyclic_group(6);
    if (name == "S3") return symmetric3();
    if (name == "D4") return dihedral4();
    if (name == "Q8") return quaternion8();
    throw std::invalid_argument("unknown group: " + name);
}

}  // namespace edl
