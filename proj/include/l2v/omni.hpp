#pragma once

#include "l2v/report.hpp"
#include "l2v/sh_leibniz.hpp"
#include "l2v/spaces.hpp"

#include <optional>
#include <utility>

namespace l2v {

/// Differential graded Lie algebra of endomorphisms of a two-term complex:
///   degree 0: pairs (A0, A1) with A0 d = d A1, bracket = commutator pair;
///   degree 1: Hom(V0, V1), delta(phi) = (d∘phi, phi∘d), [A,phi] = A1 phi - phi A0.
/// Degree-0 basis: exact kernel basis of the chain-map constraint in
/// reduced-echelon pivot order over (vec A0, vec A1) row-major coordinates.
/// Degree-1 basis: matrix units of Hom(V0,V1) in row-major order.
struct EndDgla {
    TwoTermComplex base;
    FinSpace deg0, deg1;
    std::vector<std::pair<Mat, Mat>> deg0_basis; // (A0, A1) per basis vector
    LinearMap delta;                             // deg1 -> deg0
    StructureTensor b00;                         // deg0 x deg0 -> deg0
    StructureTensor b01;                         // deg0 x deg1 -> deg1
    StructureTensor b10;                         // deg1 x deg0 -> deg1

    /// Coordinates -> concrete matrices.
    std::pair<Mat, Mat> deg0_mats(const Vec& coords) const;
    Mat deg1_mat(const Vec& coords) const;

    /// Concrete matrices -> coordinates; throws PreconditionError when the
    /// pair is not a chain endomorphism (not in the degree-0 subspace).
    Vec deg0_coords(const Mat& a0, const Mat& a1) const;
    Vec deg1_coords(const Mat& phi) const;

    /// View as a two-term sh Leibniz algebra (differential graded, l3 = 0):
    /// V1-role = degree 1, V0-role = degree 0, differential = delta.
    ShLeibniz2 as_sh_leibniz() const;
};

EndDgla build_end(const TwoTermComplex& c);

/// Candidate automorphism of the dg Leibniz algebra underlying EndDgla:
/// linear f0 on degree 0, f1 on degree 1, bilinear f2 : deg0 x deg0 -> deg1.
struct DglaAutomorphism {
    LinearMap f0, f1;
    StructureTensor f2;

    static DglaAutomorphism identity(const EndDgla& e);
};

/// Morphism conditions relative to the dg Leibniz structure of e (chain-map,
/// bracket compatibility, coherence), plus exact invertibility of f0 and f1.
VerifyReport check_dgla_automorphism(const DglaAutomorphism& f, const EndDgla& e);

/// Two-term sh Leibniz algebra on  End1 ⊕ V1 --(delta ⊕ d)--> End0 ⊕ V0  with
///   l2(A+u, B+v)   = [A,B] + f0(A)(v)
///   l2(A+u, phi+m) = [A,phi] + f0(A)(m)
///   l2(phi+m, A+u) = [phi,A] + f1(phi)(u)
///   l3(A+u, B+v, C+w) = f2(A,B)(w).
ShLeibniz2 build_omni(const DglaAutomorphism& f, const EndDgla& e);

/// Exact affine solve for all f2 satisfying the morphism conditions given
/// (f0, f1). `particular` is one solution (when solvable); `homogeneous` is a
/// basis of the solution space of the associated homogeneous system, so the
/// full solution set is particular + span(homogeneous).
struct F2Solutions {
    bool solvable = false;
    StructureTensor particular;
    std::vector<StructureTensor> homogeneous;
};

F2Solutions solve_f2(const EndDgla& e, const LinearMap& f0, const LinearMap& f1);

} // namespace l2v
