#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "edl/cyclotomic.hpp"

using namespace edl;

namespace {

// Independent oracle: brute-force multiplication in Z[zeta_4] as integer
// vectors mod (z^4 - 1), followed by the relation z^2 = -1.
std::vector<long> z4_mul(const std::vector<long>& a, const std::vector<long>& b) {
    std::vector<long> raw(4, 0);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) raw[(i + j) % 4] += a[i] * b[j];
    // reduce by z^2 = -1
    std::vector<long> out{raw[0] - raw[2], raw[1] - raw[3]};
    return out;
}

Cyc random_cyc(std::mt19937_64& rng, int N) {
    std::uniform_int_distribution<int> num(-6, 6);
    std::uniform_int_distribution<int> den(1, 4);
    std::vector<Rat> raw(N);
    for (int i = 0; i < N; ++i) raw[i] = ratio(num(rng), den(rng));
    return Cyc::normalize(raw, N);
}

}  // namespace

TEST_CASE("normalization canonical forms") {
    // zero vector
    REQUIRE(Cyc::normalize(std::vector<Rat>(4, Rat(0)), 4).is_zero());
    // 1 at N = 1 is the multiplicative identity
    Cyc one = Cyc::normalize({Rat(1)}, 1);
    REQUIRE(one.is_one());
    REQUIRE((one * Cyc::rational(7, 3)) == Cyc::rational(7, 3));

    // zeta_4^2 + 1 must canonicalize to 0 (Phi_4 = x^2 + 1)
    Cyc z = Cyc::zeta(4);
    Cyc x = z * z + Cyc::rational(1);
    REQUIRE(x.is_zero());

    // Oracle cross-check: (z^2 + 1) * y = 0 for several y in Z[zeta_4]
    std::vector<long> lhs{1, 0, 1, 0};
    for (std::vector<long> y : {std::vector<long>{1, 2, 3, 4}, {0, 1, 0, 0}, {5, 0, 0, 1}}) {
        std::vector<long> prod = z4_mul(lhs, y);
        REQUIRE(prod[0] == 0);
        REQUIRE(prod[1] == 0);
    }

    // Equality of field elements iff equality of canonical forms:
    // zeta_4^3 and -zeta_4 agree.
    REQUIRE(Cyc::zeta(4, 3) == -Cyc::zeta(4, 1));
}

TEST_CASE("inversion") {
    REQUIRE(Cyc::rational(2).inverse() == Cyc::rational(1, 2));
    // zeta_3^{-1} = zeta_3^2
    REQUIRE(Cyc::zeta(3).inverse() == Cyc::zeta(3, 2));
    REQUIRE_THROWS_AS(Cyc().inverse(), ZeroInverse);

    // 1 + zeta_3 + zeta_3^2: canonical form must send it to zero...
    Cyc s = Cyc::rational(1) + Cyc::zeta(3) + Cyc::zeta(3, 2);
    REQUIRE(s.is_zero());
    REQUIRE_THROWS_AS(s.inverse(), ZeroInverse);

    // ...while in the raw ring Q[z]/(z^3-1) it is a nonzero zero divisor:
    // it annihilates (1 - zeta_3).
    std::vector<Rat> raw{Rat(1), Rat(1), Rat(1)};
    REQUIRE_THROWS_AS(ring_invert_raw(raw, 3), NotInvertible);
    // oracle: (1+z+z^2)(1-z) = 1+z+z^2 - z-z^2-z^3 = 1 - z^3 = 0 mod z^3-1
    std::vector<long> conv(3, 0);
    std::vector<long> a{1, 1, 1}, b{1, -1, 0};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) conv[(i + j) % 3] += a[i] * b[j];
    REQUIRE(conv == std::vector<long>{0, 0, 0});
}

TEST_CASE("field axioms on randomized triples") {
    std::mt19937_64 rng(20240901);
    for (int N : {3, 4, 12}) {
        for (int trial = 0; trial < 60; ++trial) {
            Cyc a = random_cyc(rng, N), b = random_cyc(rng, N), c = random_cyc(rng, N);
            REQUIRE((a + b) + c == a + (b + c));
            REQUIRE((a * b) * c == a * (b * c));
            REQUIRE(a * (b + c) == a * b + a * c);
            REQUIRE(a * b == b * a);
            REQUIRE(a + b == b + a);
            if (!a.is_zero()) REQUIRE(a * a.inverse() == Cyc::rational(1));
        }
    }
}

TEST_CASE("roots of unity behave") {
    for (int N : {2, 3, 4, 6, 12}) {
        Cyc z = Cyc::zeta(N);
        Cyc p = Cyc::rational(1);
        for (int k = 0; k < N; ++k) {
            REQUIRE(p == Cyc::zeta(N, k));
            p *= z;
        }
        REQUIRE(p.is_one());
        // sum over all N-th roots of unity vanishes for N > 1
        if (N > 1) {
            Cyc s;
            for (int k = 0; k < N; ++k) s += Cyc::zeta(N, k);
            REQUIRE(s.is_zero());
        }
    }
    // zeta_12^4 is a primitive cube root: 1 + z^4 + z^8 = 0
    Cyc s = Cyc::rational(1) + Cyc::zeta(12, 4) + Cyc::zeta(12, 8);
    REQUIRE(s.is_zero());
}

TEST_CASE("galois conjugation") {
    Cyc z = Cyc::zeta(12);
    Cyc x = Cyc::rational(2) + Cyc::rational(3) * z;
    Cyc conj = x.galois(11);  // complex conjugation
    REQUIRE((x * conj).galois(11) == x * conj);  // norm-ish element is real
    REQUIRE(x.galois(5).galois(5) == x);         // 5*5 = 25 = 1 mod 12
}
