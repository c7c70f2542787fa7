#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "l2v/errors.hpp"
#include "l2v/spaces.hpp"

using namespace l2v;

TEST_CASE("basis vectors and rendering") {
    FinSpace s{3, "e"};
    CHECK(vec_eq(basis_vec(3, 1), Vec{Rat(0), Rat(1), Rat(0)}));
    CHECK_THROWS_AS(basis_vec(3, 3), ShapeError);
    CHECK(render_vec(vec_zero(3), s) == "0");
    CHECK(render_vec(basis_vec(3, 0), s) == "e1");
    Vec v{Rat(2), Rat(0), Rat(-1)};
    CHECK(render_vec(v, s) == "2 e1 - e3");
    Vec w{Rat(-1), Rat(3, 2), Rat(0)};
    CHECK(render_vec(w, s) == "-e1 + 3/2 e2");
    CHECK_THROWS_AS(render_vec(vec_zero(2), s), ShapeError);
}

TEST_CASE("linear maps apply and compose") {
    FinSpace a{2, "a"}, b{3, "b"};
    LinearMap f{a, b, Mat{{Rat(1), Rat(0)}, {Rat(0), Rat(1)}, {Rat(1), Rat(1)}}};
    Vec u{Rat(2), Rat(-1)};
    CHECK(vec_eq(f.apply(u), Vec{Rat(2), Rat(-1), Rat(1)}));
    CHECK_THROWS_AS(f.apply(vec_zero(3)), ShapeError);

    LinearMap g{b, a, Mat{{Rat(1), Rat(1), Rat(0)}, {Rat(0), Rat(0), Rat(2)}}};
    LinearMap gf = compose_linear(g, f);
    CHECK(gf.src == a);
    CHECK(gf.dst == a);
    // (g o f)(u) computed directly vs via the composite matrix.
    CHECK(vec_eq(gf.apply(u), g.apply(f.apply(u))));
    CHECK_THROWS_AS(compose_linear(f, f), ShapeError);

    LinearMap id = LinearMap::identity(b);
    CHECK(mat_eq(compose_linear(id, f).m, f.m));
    LinearMap z = LinearMap::zero(a, b);
    CHECK(vec_is_zero(z.apply(u)));
}

TEST_CASE("zero-dimensional spaces are tolerated") {
    FinSpace none{0, "n"}, two{2, "e"};
    LinearMap f = LinearMap::zero(none, two);
    CHECK(vec_eq(f.apply(Vec{}), vec_zero(2)));
    LinearMap g = LinearMap::zero(two, none);
    CHECK(g.apply(basis_vec(2, 0)).empty());
    CHECK(render_vec(Vec{}, none) == "0");
}

TEST_CASE("structure tensors store and apply multilinear data") {
    FinSpace v{2, "e"};
    StructureTensor t = StructureTensor::zero({v, v}, v);
    CHECK(t.arity() == 2);
    CHECK(t.is_zero());
    // [e1,e1] = e2 as the only nonzero bracket.
    t.at_mut({0, 0}) = basis_vec(2, 1);
    CHECK_FALSE(t.is_zero());
    CHECK(vec_eq(t.at({0, 0}), basis_vec(2, 1)));
    CHECK(vec_is_zero(t.at({0, 1})));

    // Bilinearity: [(a e1 + b e2), (c e1 + d e2)] = a c e2.
    Vec x{Rat(3), Rat(5)}, y{Rat(2), Rat(-7)};
    CHECK(vec_eq(t.apply({x, y}), Vec{Rat(0), Rat(6)}));
    CHECK(vec_eq(apply_multi(t, {x, y}), t.apply({x, y})));

    CHECK_THROWS_AS(t.apply({x}), ShapeError);
    CHECK_THROWS_AS(t.apply({x, vec_zero(3)}), ShapeError);
    CHECK_THROWS_AS(t.at({2, 0}), ShapeError);
    CHECK_THROWS_AS(t.at({0, 0, 0}), ShapeError);
}

TEST_CASE("flat indexing is row-major") {
    FinSpace a{2, "a"}, b{3, "b"};
    StructureTensor t = StructureTensor::zero({a, b}, a);
    CHECK(t.entries.size() == 6);
    CHECK(t.flat({0, 0}) == 0);
    CHECK(t.flat({0, 2}) == 2);
    CHECK(t.flat({1, 0}) == 3);
    CHECK(t.flat({1, 2}) == 5);

    StructureTensor t3 = StructureTensor::zero({a, a, a}, b);
    CHECK(t3.flat({1, 0, 1}) == 5);
}

TEST_CASE("spaces compare by dimension") {
    CHECK(FinSpace{2, "e"} == FinSpace{2, "m"});
    CHECK_FALSE(FinSpace{2, "e"} == FinSpace{3, "e"});
}
