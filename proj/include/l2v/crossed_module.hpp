#pragma once

#include "l2v/report.hpp"
#include "l2v/sh_leibniz.hpp"
#include "l2v/spaces.hpp"

namespace l2v {

/// Finite-dimensional Leibniz algebra: bilinear bracket satisfying
/// [x,[y,z]] = [[x,y],z] + [y,[x,z]].
struct LeibnizAlgebra {
    FinSpace space;
    StructureTensor bracket; // space x space -> space

    static LeibnizAlgebra zero(size_t dim);
    Vec br(const Vec& x, const Vec& y) const { return bracket.apply({x, y}); }
    bool operator==(const LeibnizAlgebra& o) const {
        return space == o.space && bracket == o.bracket;
    }
};

VerifyReport check_leibniz(const LeibnizAlgebra& g);

/// Representation of a Leibniz algebra on a module: left action
/// l : g x V -> V and right action r : V x g -> V subject to
///   l_{[x,y]} = [l_x, l_y],   r_{[x,y]} = [l_x, r_y],   r_y l_x = -r_y r_x.
struct LeibnizRep {
    LeibnizAlgebra algebra;
    FinSpace module;
    StructureTensor left;  // g x V -> V
    StructureTensor right; // V x g -> V

    static LeibnizRep trivial(const LeibnizAlgebra& g, size_t module_dim);
    static LeibnizRep adjoint(const LeibnizAlgebra& g);

    Vec lact(const Vec& x, const Vec& u) const { return left.apply({x, u}); }
    Vec ract(const Vec& u, const Vec& x) const { return right.apply({u, x}); }
};

VerifyReport check_representation(const LeibnizRep& rep);

/// Crossed module of Leibniz algebras: morphism mu : g -> h together with an
/// action of h on g satisfying the five compatibility conditions checked by
/// check_crossed_module.
struct CrossedModule {
    LeibnizAlgebra g, h;
    LinearMap mu;          // g -> h
    StructureTensor left;  // h x g -> g
    StructureTensor right; // g x h -> g

    Vec lact(const Vec& x, const Vec& u) const { return left.apply({x, u}); }
    Vec ract(const Vec& u, const Vec& x) const { return right.apply({u, x}); }
    bool operator==(const CrossedModule& o) const {
        return g == o.g && h == o.h && mu == o.mu && left == o.left && right == o.right;
    }
};

VerifyReport check_crossed_module(const CrossedModule& cm);

/// Differential graded (l3 = 0) algebra -> crossed module:
/// g = V1 with [m,n] = l2(m,dn), h = V0 with l2_00, mu = d, actions (l2_01, l2_10).
/// Pre: classify(a).dg; throws PreconditionError otherwise.
CrossedModule dg_to_crossed(const ShLeibniz2& a);

/// Crossed module -> differential graded algebra (exact inverse on valid input).
ShLeibniz2 crossed_to_dg(const CrossedModule& cm);

/// Skeletal (d = 0) algebra presented as (g, V, rep, phi) with phi a trilinear
/// cocycle for the Leibniz coboundary.
struct SkeletalQuadruple {
    LeibnizAlgebra g;
    FinSpace v;
    StructureTensor left;  // g x V -> V
    StructureTensor right; // V x g -> V
    StructureTensor phi;   // g x g x g -> V

    LeibnizRep rep() const { return LeibnizRep{g, v, left, right}; }
    bool operator==(const SkeletalQuadruple& o) const {
        return g == o.g && v == o.v && left == o.left && right == o.right && phi == o.phi;
    }
};

/// Pre: classify(a).skeletal; throws PreconditionError otherwise.
SkeletalQuadruple skeletal_to_quadruple(const ShLeibniz2& a);

ShLeibniz2 quadruple_to_skeletal(const SkeletalQuadruple& q);

} // namespace l2v
