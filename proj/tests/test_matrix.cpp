#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "edl/matrix.hpp"

using namespace edl;

namespace {
Mat from_longs(int r, int c, std::initializer_list<long> xs) {
    Mat m(r, c);
    auto it = xs.begin();
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) m(i, j) = Cyc::rational(*it++);
    return m;
}
}  // namespace

TEST_CASE("mat_solve basics") {
    SECTION("identity") {
        Mat I = Mat::identity(3);
        SolveResult s = mat_solve(I, I);
        REQUIRE(s.consistent);
        REQUIRE(s.particular == I);
        REQUIRE(s.nullspace.cols() == 0);
    }
    SECTION("zero map") {
        Mat A = Mat::zero(2, 2), B = Mat::zero(2, 1);
        SolveResult s = mat_solve(A, B);
        REQUIRE(s.consistent);
        REQUIRE(s.nullspace.cols() == 4 - 4 + 2);  // dim ker of the 2x2 zero map on columns
        REQUIRE(s.nullspace.cols() == 2);
    }
    SECTION("hand elimination oracle") {
        // A = [[1,1],[0,0]], B = 0: nullspace spanned by (1,-1)
        Mat A = from_longs(2, 2, {1, 1, 0, 0});
        Mat B = Mat::zero(2, 1);
        SolveResult s = mat_solve(A, B);
        REQUIRE(s.consistent);
        REQUIRE(s.nullspace.cols() == 1);
        Cyc x = s.nullspace(0, 0), y = s.nullspace(1, 0);
        REQUIRE((x + y).is_zero());
        REQUIRE(!x.is_zero());
    }
    SECTION("inconsistent") {
        Mat A = from_longs(2, 1, {1, 1});
        Mat B = from_longs(2, 1, {1, 2});
        REQUIRE(!mat_solve(A, B).consistent);
    }
    SECTION("every returned solution satisfies A X = B exactly") {
        std::mt19937_64 rng(7);
        std::uniform_int_distribution<int> d(-4, 4);
        for (int trial = 0; trial < 25; ++trial) {
            Mat A(4, 3), X(3, 2);
            for (int i = 0; i < 4; ++i)
                for (int j = 0; j < 3; ++j) A(i, j) = Cyc::rational(d(rng));
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 2; ++j) X(i, j) = Cyc::rational(d(rng));
            Mat B = A * X;
            SolveResult s = mat_solve(A, B);
            REQUIRE(s.consistent);
            REQUIRE(A * s.particular == B);
            if (s.nullspace.cols() > 0) REQUIRE((A * s.nullspace).is_zero());
        }
    }
}

TEST_CASE("mat_image_split") {
    SECTION("identity and zero") {
        auto [i1, p1] = mat_image_split(Mat::identity(3));
        REQUIRE(i1 == Mat::identity(3));
        REQUIRE(p1 == Mat::identity(3));
        auto [i0, p0] = mat_image_split(Mat::zero(2, 2));
        REQUIRE(i0.cols() == 0);
        REQUIRE(p0.rows() == 0);
    }
    SECTION("rank-one projector") {
        Mat P = from_longs(2, 2, {1, 0, 0, 0});
        auto [incl, proj] = mat_image_split(P);
        REQUIRE(incl.cols() == 1);
        REQUIRE(incl * proj == P);
        REQUIRE(proj * incl == Mat::identity(1));
    }
    SECTION("non-idempotent rejected") {
        Mat M = from_longs(2, 2, {1, 1, 0, 1});
        REQUIRE_THROWS_AS(mat_image_split(M), NotIdempotent);
    }
    SECTION("random idempotents split exactly") {
        std::mt19937_64 rng(99);
        std::uniform_int_distribution<int> d(-3, 3);
        for (int trial = 0; trial < 20; ++trial) {
            // Build P = B (C B)^{-1} C for random B (5x2), C (2x5) when invertible.
            Mat B(5, 2), C(2, 5);
            for (int i = 0; i < 5; ++i)
                for (int j = 0; j < 2; ++j) B(i, j) = Cyc::rational(d(rng));
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 5; ++j) C(i, j) = Cyc::rational(d(rng));
            auto inv = mat_inverse(C * B);
            if (!inv) continue;
            Mat P = B * (*inv) * C;
            REQUIRE(P * P == P);
            auto [incl, proj] = mat_image_split(P);
            REQUIRE(incl * proj == P);
            REQUIRE(proj * incl == Mat::identity(incl.cols()));
        }
    }
}

TEST_CASE("kron and trace") {
    Mat A = from_longs(2, 2, {1, 2, 3, 4});
    Mat B = from_longs(2, 2, {0, 1, 1, 0});
    Mat K = kron(A, B);
    REQUIRE(K.rows() == 4);
    REQUIRE(K(0, 1) == Cyc::rational(1));
    REQUIRE(K(0, 3) == Cyc::rational(2));
    REQUIRE(kron(A, B).trace() == A.trace() * B.trace());
}
