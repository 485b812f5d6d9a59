#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "linroots/linalg.hpp"

using namespace linroots;

namespace {

FFMatrix random_matrix(const FieldCtx& F, size_t r, size_t c, std::mt19937& rng) {
    std::uniform_int_distribution<uint64_t> dist(0, F.size() - 1);
    FFMatrix M(F, r, c);
    for (auto& x : M.a) x = F.from_index(dist(rng));
    return M;
}

}  // namespace

TEST_CASE("identity and multiplication") {
    FieldCtx F(5, 2);
    std::mt19937 rng(11);
    FFMatrix A = random_matrix(F, 4, 4, rng);
    FFMatrix I = identity_matrix(F, 4);
    CHECK(mat_mul(A, I) == A);
    CHECK(mat_mul(I, A) == A);
    FFMatrix B = random_matrix(F, 4, 4, rng);
    FFMatrix C = random_matrix(F, 4, 4, rng);
    CHECK(mat_mul(mat_mul(A, B), C) == mat_mul(A, mat_mul(B, C)));
    CHECK(mat_mul(A, mat_add(B, C)) == mat_add(mat_mul(A, B), mat_mul(A, C)));
    CHECK(transpose(transpose(A)) == A);
}

TEST_CASE("determinant of the worked 4x4 matrix is 91") {
    static const int vals[4][4] = {{-1, 3, -3, 0},
                                   {0, -1, 3, -3},
                                   {-3, 0, -1, 3},
                                   {3, -3, 0, -1}};
    for (uint64_t p : {5, 7, 13, 37, 41}) {
        FieldCtx F(p, 1);
        FFMatrix M(F, 4, 4);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) M.at(i, j) = F.from_int(vals[i][j]);
        CHECK(det(M) == F.from_int(91));
        // leading 3x3 minor obtained by dropping row 3 and column 0
        FFMatrix M1(F, 3, 3);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) M1.at(i, j) = M.at(i, j + 1);
        CHECK(det(M1) == F.from_int(9));
        CHECK(rank(M) == (p == 7 || p == 13 ? 3 : 4));
    }
}

TEST_CASE("determinant is multiplicative, rank bounds hold") {
    FieldCtx F(3, 2);
    std::mt19937 rng(12);
    for (int i = 0; i < 30; ++i) {
        FFMatrix A = random_matrix(F, 3, 3, rng);
        FFMatrix B = random_matrix(F, 3, 3, rng);
        CHECK(det(mat_mul(A, B)) == F.mul(det(A), det(B)));
        CHECK(rank(A) <= 3);
        CHECK((rank(A) == 3) == !F.is_zero(det(A)));
    }
    CHECK_THROWS_AS(det(random_matrix(F, 2, 3, rng)), FieldError);
}

TEST_CASE("twist applies entrywise frobenius and respects products") {
    FieldCtx F(2, 4);
    std::mt19937 rng(13);
    FFMatrix A = random_matrix(F, 3, 3, rng);
    FFMatrix B = random_matrix(F, 3, 3, rng);
    FFMatrix tA = twist(A, 1);
    for (size_t i = 0; i < 3; ++i)
        for (size_t j = 0; j < 3; ++j)
            CHECK(tA.at(i, j) == F.frobenius(A.at(i, j), 1));
    // frobenius is a ring homomorphism, so it commutes with matrix products
    CHECK(twist(mat_mul(A, B), 1) == mat_mul(twist(A, 1), twist(B, 1)));
    CHECK(twist(twist(A, 1), 2) == twist(A, 3));
}

TEST_CASE("twisted_product unrolls to the explicit product") {
    FieldCtx F(3, 4);
    std::mt19937 rng(14);
    FFMatrix A = random_matrix(F, 2, 2, rng);
    CHECK(twisted_product(A, 1, 1) == A);
    FFMatrix expect = mat_mul(twist(A, 2), mat_mul(twist(A, 1), A));
    CHECK(twisted_product(A, 1, 3) == expect);
}

TEST_CASE("shift matrix powers") {
    FieldCtx F(7, 1);
    FFMatrix J = shift_matrix(F, 4, 1);
    CHECK(shift_matrix(F, 4, 0) == identity_matrix(F, 4));
    CHECK(mat_mul(J, J) == shift_matrix(F, 4, 2));
    CHECK(mat_mul(mat_mul(J, J), mat_mul(J, J)) == identity_matrix(F, 4));
    CHECK(shift_matrix(F, 4, 5) == J);   // power reduces mod size
}
