#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "l2v/linalg.hpp"

using namespace l2v;

namespace {

Mat m22(long a, long b, long c, long d) {
    return Mat{{Rat(a), Rat(b)}, {Rat(c), Rat(d)}};
}

} // namespace

TEST_CASE("vector helpers") {
    Vec a{Rat(1), Rat(-2), Rat(0)};
    Vec b{Rat(3), Rat(2), Rat(-1)};
    CHECK(vec_eq(vec_add(a, b), Vec{Rat(4), Rat(0), Rat(-1)}));
    CHECK(vec_eq(vec_sub(a, b), Vec{Rat(-2), Rat(-4), Rat(1)}));
    CHECK(vec_eq(vec_scale(Rat(-1, 2), b), Vec{Rat(-3, 2), Rat(-1), Rat(1, 2)}));
    CHECK(vec_is_zero(vec_zero(4)));
    CHECK_FALSE(vec_is_zero(a));
    CHECK(vec_is_zero(vec_zero(0)));
}

TEST_CASE("matrix product and transpose") {
    Mat a = m22(1, 2, 3, 4);
    Mat b = m22(0, 1, -1, 2);
    CHECK(mat_eq(mat_mul(a, b), m22(-2, 5, -4, 11)));
    CHECK(mat_eq(mat_mul(a, mat_identity(2)), a));
    CHECK(mat_eq(mat_transpose(a), m22(1, 3, 2, 4)));
    CHECK(vec_eq(mat_apply(a, Vec{Rat(1), Rat(-1)}), Vec{Rat(-1), Rat(-1)}));
}

TEST_CASE("rref computes rank and ascending pivots") {
    Mat m{{Rat(0), Rat(2), Rat(4)}, {Rat(1), Rat(1), Rat(1)}, {Rat(1), Rat(3), Rat(5)}};
    std::vector<size_t> pivots;
    size_t r = rref(m, pivots);
    CHECK(r == 2);
    REQUIRE(pivots.size() == 2);
    CHECK(pivots[0] == 0);
    CHECK(pivots[1] == 1);
    // Reduced form: pivot columns are unit vectors.
    CHECK(m[0][0] == 1);
    CHECK(m[0][1] == 0);
    CHECK(m[1][0] == 0);
    CHECK(m[1][1] == 1);
    CHECK(vec_is_zero(m[2]));
    CHECK(rank(mat_identity(3)) == 3);
    CHECK(rank(mat_zero(2, 5)) == 0);
}

TEST_CASE("kernel basis follows the free-column convention") {
    // x1 + 2 x2 = 0: one free column (2nd), basis vector (-2, 1).
    auto k = kernel_basis(Mat{{Rat(1), Rat(2)}});
    REQUIRE(k.size() == 1);
    CHECK(vec_eq(k[0], Vec{Rat(-2), Rat(1)}));

    // Zero map: every column is free, basis = standard basis in order.
    auto k2 = kernel_basis(mat_zero(1, 3));
    REQUIRE(k2.size() == 3);
    CHECK(vec_eq(k2[0], Vec{Rat(1), Rat(0), Rat(0)}));
    CHECK(vec_eq(k2[1], Vec{Rat(0), Rat(1), Rat(0)}));
    CHECK(vec_eq(k2[2], Vec{Rat(0), Rat(0), Rat(1)}));

    // Full-rank map: trivial kernel.
    CHECK(kernel_basis(mat_identity(3)).empty());

    // Every kernel vector actually maps to zero.
    Mat m{{Rat(1), Rat(2), Rat(3), Rat(4)}, {Rat(2), Rat(4), Rat(1), Rat(3)}};
    auto k3 = kernel_basis(m);
    REQUIRE(k3.size() == 2);
    for (const Vec& v : k3) CHECK(vec_is_zero(mat_apply(m, v)));
}

TEST_CASE("solve finds exact solutions and detects inconsistency") {
    Mat m = m22(2, 1, 1, -1);
    auto x = solve(m, Vec{Rat(1), Rat(5)});
    REQUIRE(x.has_value());
    CHECK(vec_eq(mat_apply(m, *x), Vec{Rat(1), Rat(5)}));
    CHECK(vec_eq(*x, Vec{Rat(2), Rat(-3)}));

    // Inconsistent: second row is twice the first with a different rhs.
    Mat bad{{Rat(1), Rat(2)}, {Rat(2), Rat(4)}};
    CHECK_FALSE(solve(bad, Vec{Rat(1), Rat(3)}).has_value());
    // Consistent underdetermined system still yields some exact solution.
    auto y = solve(bad, Vec{Rat(1), Rat(2)});
    REQUIRE(y.has_value());
    CHECK(vec_eq(mat_apply(bad, *y), Vec{Rat(1), Rat(2)}));
}

TEST_CASE("solve_mat solves column by column") {
    Mat m = m22(1, 1, 0, 1);
    Mat b = m22(3, 5, 1, 2);
    auto x = solve_mat(m, b);
    REQUIRE(x.has_value());
    CHECK(mat_eq(mat_mul(m, *x), b));
}

TEST_CASE("inverse is exact and reports singularity") {
    Mat m = m22(2, 1, 7, 4);
    auto inv = inverse(m);
    REQUIRE(inv.has_value());
    CHECK(mat_eq(mat_mul(m, *inv), mat_identity(2)));
    CHECK(mat_eq(mat_mul(*inv, m), mat_identity(2)));
    CHECK(mat_eq(*inv, m22(4, -1, -7, 2)));

    CHECK_FALSE(inverse(m22(1, 2, 2, 4)).has_value());
    CHECK_FALSE(inverse(mat_zero(2, 2)).has_value());

    // Fraction-heavy inverse stays exact.
    Mat f{{Rat(1, 2), Rat(1, 3), Rat(1, 4)},
          {Rat(1, 3), Rat(1, 4), Rat(1, 5)},
          {Rat(1, 4), Rat(1, 5), Rat(1, 6)}};
    auto finv = inverse(f);
    REQUIRE(finv.has_value());
    CHECK(mat_eq(mat_mul(f, *finv), mat_identity(3)));
}
