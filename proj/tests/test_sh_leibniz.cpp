#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "l2v/builtin.hpp"
#include "l2v/crossed_module.hpp"
#include "l2v/errors.hpp"
#include "l2v/sh_leibniz.hpp"

using namespace l2v;
namespace bi = l2v::builtin;

TEST_CASE("zero and abelian structures satisfy every condition") {
    CHECK(check_sh_leibniz(bi::sh_zero(2, 3)).ok());

    ShLeibniz2 ab = bi::sh_from_algebra(bi::abelian_leibniz(2));
    VerifyReport r = check_sh_leibniz(ab);
    CHECK(r.ok());
    ShClass cl = classify(ab);
    CHECK(cl.dg);
    CHECK(cl.skeletal);
    CHECK(cl.l_infinity);
    CHECK(cl.str() == "dg|skeletal|l-infinity");
}

TEST_CASE("a plain Leibniz algebra in degree zero verifies; classification sees "
          "the missing antisymmetry") {
    ShLeibniz2 a = bi::sh_from_algebra(bi::nilpotent_pair());
    CHECK(check_sh_leibniz(a).ok());
    ShClass cl = classify(a);
    CHECK(cl.dg);
    CHECK(cl.skeletal);
    CHECK_FALSE(cl.l_infinity); // [e1,e1] = e2 is not antisymmetric

    ShLeibniz2 lie = bi::sh_from_algebra(bi::nonabelian_lie2());
    CHECK(check_sh_leibniz(lie).ok());
    CHECK(classify(lie).l_infinity);
}

TEST_CASE("differential graded fixture with nonzero d") {
    ShLeibniz2 a = bi::dg_nilpotent();
    CHECK_FALSE(a.c.d.is_zero());
    VerifyReport r = check_sh_leibniz(a);
    CHECK(r.ok());
    ShClass cl = classify(a);
    CHECK(cl.dg);
    CHECK_FALSE(cl.skeletal);
}

TEST_CASE("skeletal fixture with nonzero l3") {
    ShLeibniz2 a = bi::skeletal_l3();
    CHECK_FALSE(a.l3.is_zero());
    CHECK(check_sh_leibniz(a).ok());
    ShClass cl = classify(a);
    CHECK(cl.skeletal);
    CHECK_FALSE(cl.dg);
}

TEST_CASE("the broken pair fails condition (d) at the documented tuple") {
    ShLeibniz2 a = bi::sh_from_algebra(bi::broken_pair());
    VerifyReport r = check_sh_leibniz(a);
    CHECK_FALSE(r.ok());
    const CheckResult* d = r.find("(d)");
    REQUIRE(d != nullptr);
    CHECK_FALSE(d->pass);
    REQUIRE_FALSE(d->witnesses.empty());
    CHECK(d->witnesses[0].at == "(e1,e1,e1)");
    CHECK(d->witnesses[0].residual == "-e1");
    // Every other condition still holds.
    for (const char* lbl : {"(a)", "(b)", "(c)", "(e1)", "(e2)", "(e3)", "(f)"}) {
        const CheckResult* c = r.find(lbl);
        REQUIRE(c != nullptr);
        CHECK(c->pass);
    }
}

TEST_CASE("single-entry mutations are caught") {
    ShLeibniz2 a = bi::dg_nilpotent();
    SUBCASE("corrupting l3 breaks (d)") {
        a.l3.at_mut({0, 0, 0}) = basis_vec(a.c.v1.dim, 0);
        VerifyReport r = check_sh_leibniz(a);
        CHECK_FALSE(r.ok());
        const CheckResult* d = r.find("(d)");
        REQUIRE(d != nullptr);
        CHECK_FALSE(d->pass);
    }
    SUBCASE("corrupting the mixed bracket breaks (a)") {
        a.l2_01.at_mut({0, 0}) = vec_add(a.l2_01.at({0, 0}), basis_vec(a.c.v1.dim, 1));
        VerifyReport r = check_sh_leibniz(a);
        CHECK_FALSE(r.ok());
        const CheckResult* c = r.find("(a)");
        REQUIRE(c != nullptr);
        CHECK_FALSE(c->pass);
    }
    SUBCASE("corrupting d breaks the chain-compatibility conditions") {
        a.c.d.m[0][1] += 1;
        CHECK_FALSE(check_sh_leibniz(a).ok());
    }
}

TEST_CASE("shape validation rejects inconsistent tensors") {
    ShLeibniz2 a = bi::dg_nilpotent();
    FinSpace wrong{a.c.v0.dim + 1, "e"};
    a.l2_00 = StructureTensor::zero({wrong, wrong}, wrong);
    CHECK_THROWS_AS(check_sh_leibniz(a), ShapeError);
}

TEST_CASE("identity morphism verifies and composes to itself") {
    ShLeibniz2 a = bi::dg_nilpotent();
    ShMorphism id = ShMorphism::identity(a);
    CHECK(check_morphism(id, a, a).ok());
    ShMorphism idid = compose_morphisms(id, id);
    CHECK(mat_eq(idid.f0.m, id.f0.m));
    CHECK(mat_eq(idid.f1.m, id.f1.m));
    CHECK(idid.f2.is_zero());
}

TEST_CASE("scaling by 2 is a morphism only for abelian brackets") {
    ShLeibniz2 ab = bi::sh_from_algebra(bi::abelian_leibniz(2));
    ShMorphism s2{LinearMap{ab.c.v0, ab.c.v0, mat_scale(Rat(2), mat_identity(2))},
                  LinearMap::identity(ab.c.v1),
                  StructureTensor::zero({ab.c.v0, ab.c.v0}, ab.c.v1)};
    CHECK(check_morphism(s2, ab, ab).ok());

    ShLeibniz2 lie = bi::sh_from_algebra(bi::nonabelian_lie2());
    ShMorphism t2{LinearMap{lie.c.v0, lie.c.v0, mat_scale(Rat(2), mat_identity(2))},
                  LinearMap::identity(lie.c.v1),
                  StructureTensor::zero({lie.c.v0, lie.c.v0}, lie.c.v1)};
    VerifyReport r = check_morphism(t2, lie, lie);
    CHECK_FALSE(r.ok());
    const CheckResult* c = r.find("(c1-00)");
    REQUIRE(c != nullptr);
    CHECK_FALSE(c->pass);
}

TEST_CASE("basis transport gives a strict isomorphism between the transported "
          "structures") {
    CrossedModule base = bi::adjoint_crossed(bi::heisenberg3());
    bi::Rng rng(99);
    Mat p = bi::random_invertible(rng, 3);
    CrossedModule moved = bi::transport(base, p, p);

    ShLeibniz2 src = crossed_to_dg(base);
    ShLeibniz2 dst = crossed_to_dg(moved);
    REQUIRE(check_sh_leibniz(src).ok());
    REQUIRE(check_sh_leibniz(dst).ok());

    ShMorphism f{LinearMap{src.c.v0, dst.c.v0, p}, LinearMap{src.c.v1, dst.c.v1, p},
                 StructureTensor::zero({src.c.v0, src.c.v0}, dst.c.v1)};
    CHECK(check_morphism(f, src, dst).ok());

    // The inverse transport is a morphism the other way.
    Mat pinv = *inverse(p);
    ShMorphism g{LinearMap{dst.c.v0, src.c.v0, pinv}, LinearMap{dst.c.v1, src.c.v1, pinv},
                 StructureTensor::zero({dst.c.v0, dst.c.v0}, src.c.v1)};
    CHECK(check_morphism(g, dst, src).ok());

    // g o f is the identity morphism of src.
    ShMorphism gf = compose_morphisms(g, f);
    CHECK(mat_eq(gf.f0.m, mat_identity(3)));
    CHECK(mat_eq(gf.f1.m, mat_identity(3)));
    CHECK(gf.f2.is_zero());
}

TEST_CASE("morphism checker notices a broken f2") {
    ShLeibniz2 a = bi::dg_nilpotent();
    ShMorphism f = ShMorphism::identity(a);
    f.f2.at_mut({0, 0}) = basis_vec(a.c.v1.dim, 0);
    VerifyReport r = check_morphism(f, a, a);
    CHECK_FALSE(r.ok());
}

TEST_CASE("arrows in the associated 2-vector space bracket functorially") {
    ShLeibniz2 a = bi::dg_nilpotent();
    bi::Rng rng(7);
    for (int trial = 0; trial < 10; ++trial) {
        TwoVectorElement p{bi::random_vec(rng, a.c.v0.dim), bi::random_vec(rng, a.c.v1.dim)};
        TwoVectorElement q{bi::random_vec(rng, a.c.v0.dim), bi::random_vec(rng, a.c.v1.dim)};
        TwoVectorElement pq = functor_bracket(a, p, q);
        CHECK(vec_eq(tv_source(pq), a.b00(tv_source(p), tv_source(q))));
        CHECK(vec_eq(tv_target(a, pq), a.b00(tv_target(a, p), tv_target(a, q))));
    }
}

TEST_CASE("the jacobiator arrow closes exactly when condition (d) holds") {
    ShLeibniz2 good = bi::dg_nilpotent();
    bi::Rng rng(11);
    for (int trial = 0; trial < 10; ++trial) {
        Vec x = bi::random_vec(rng, good.c.v0.dim);
        Vec y = bi::random_vec(rng, good.c.v0.dim);
        Vec z = bi::random_vec(rng, good.c.v0.dim);
        CHECK(vec_is_zero(jacobiator_defect(good, x, y, z)));
        TwoVectorElement j = jacobiator(good, x, y, z);
        CHECK(vec_eq(tv_source(j), good.b00(good.b00(x, y), z)));
        CHECK(vec_eq(tv_target(good, j),
                     vec_sub(good.b00(x, good.b00(y, z)), good.b00(y, good.b00(x, z)))));
    }

    ShLeibniz2 bad = bi::sh_from_algebra(bi::broken_pair());
    Vec e1 = basis_vec(bad.c.v0.dim, 0);
    CHECK_FALSE(vec_is_zero(jacobiator_defect(bad, e1, e1, e1)));
}
