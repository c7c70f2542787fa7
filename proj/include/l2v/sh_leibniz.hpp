#pragma once

#include "l2v/report.hpp"
#include "l2v/spaces.hpp"

namespace l2v {

/// Two-term chain complex  V1 --d--> V0  of exact rational spaces.
struct TwoTermComplex {
    FinSpace v1, v0;
    LinearMap d; // src = v1, dst = v0

    static TwoTermComplex make(size_t dim_v1, size_t dim_v0, Mat d_matrix);
    static TwoTermComplex zero_d(size_t dim_v1, size_t dim_v0);

    bool operator==(const TwoTermComplex& o) const { return v1 == o.v1 && v0 == o.v0 && d == o.d; }
};

/// Two-term sh Leibniz algebra: complex plus graded bracket components
///   l2_00 : V0 x V0 -> V0,  l2_01 : V0 x V1 -> V1,  l2_10 : V1 x V0 -> V1
/// (the V1 x V1 component vanishes by degree) and a trilinear
///   l3 : V0 x V0 x V0 -> V1.
struct ShLeibniz2 {
    TwoTermComplex c;
    StructureTensor l2_00, l2_01, l2_10, l3;

    static ShLeibniz2 zero(size_t dim_v1, size_t dim_v0, Mat d_matrix);

    Vec d_of(const Vec& m) const { return c.d.apply(m); }
    Vec b00(const Vec& x, const Vec& y) const { return l2_00.apply({x, y}); }
    Vec b01(const Vec& x, const Vec& m) const { return l2_01.apply({x, m}); }
    Vec b10(const Vec& m, const Vec& x) const { return l2_10.apply({m, x}); }
    Vec t3(const Vec& x, const Vec& y, const Vec& z) const { return l3.apply({x, y, z}); }

    bool operator==(const ShLeibniz2& o) const {
        return c == o.c && l2_00 == o.l2_00 && l2_01 == o.l2_01 && l2_10 == o.l2_10 && l3 == o.l3;
    }
};

/// Throw ShapeError unless all spaces/maps/tensors of `a` are consistent.
void validate_shapes(const ShLeibniz2& a);

/// Exhaustively check the defining conditions (a)-(f) on basis tuples
/// (sufficient by multilinearity). Residuals are RHS - LHS of each condition
/// as written in the doc comments of check_sh_leibniz's implementation.
VerifyReport check_sh_leibniz(const ShLeibniz2& a);

/// Non-exclusive classification flags.
struct ShClass {
    bool dg = false;         // l3 == 0
    bool skeletal = false;   // d == 0
    bool l_infinity = false; // antisymmetric brackets + totally antisymmetric l3
    std::string str() const;
};

ShClass classify(const ShLeibniz2& a);

/// Morphism (f0, f1, f2) between two-term sh Leibniz algebras;
/// f2 : V0 x V0 -> V1' measures the failure of f to preserve brackets.
struct ShMorphism {
    LinearMap f0; // V0 -> V0'
    LinearMap f1; // V1 -> V1'
    StructureTensor f2; // V0 x V0 -> V1'

    static ShMorphism identity(const ShLeibniz2& a);
};

/// Check the chain-map condition, the three bracket-compatibility equations
/// and the coherence equation for f : src -> dst on basis tuples.
VerifyReport check_morphism(const ShMorphism& f, const ShLeibniz2& src, const ShLeibniz2& dst);

/// Composite g∘f: (g0 f0, g1 f1, (x,y) -> g1(f2(x,y)) + g2(f0 x, f0 y)).
ShMorphism compose_morphisms(const ShMorphism& g, const ShMorphism& f);

/// Element of the 2-vector space V0 ⊕ V1 attached to the complex: an arrow
/// with source `obj` and target `obj + d(mor)`.
struct TwoVectorElement {
    Vec obj; // in V0
    Vec mor; // in V1
};

Vec tv_source(const TwoVectorElement& e);
Vec tv_target(const ShLeibniz2& a, const TwoVectorElement& e);

/// Bracket of two arrows in the 2-vector space:
/// object part l2(x,y), morphism part l2(x,n) + l2(m,y) + l2(m, d n)
/// for p = x + m, q = y + n.
TwoVectorElement functor_bracket(const ShLeibniz2& a, const TwoVectorElement& p,
                                 const TwoVectorElement& q);

/// The arrow J_{x,y,z} with source l2(l2(x,y),z) and morphism part l3(x,y,z);
/// its target is l2(x,l2(y,z)) - l2(y,l2(x,z)) exactly when condition (d)
/// holds at (x,y,z).
TwoVectorElement jacobiator(const ShLeibniz2& a, const Vec& x, const Vec& y, const Vec& z);

/// Target of jacobiator(x,y,z) minus (l2(x,l2(y,z)) - l2(y,l2(x,z)));
/// zero iff condition (d) holds at the tuple.
Vec jacobiator_defect(const ShLeibniz2& a, const Vec& x, const Vec& y, const Vec& z);

} // namespace l2v
