#pragma once

// Twisted Poisson structures (a polynomial bivector together with a 3-form
// background) and the structures they induce: the bracket on 1-forms, the
// graph inside the generalized tangent bundle, the quasi Lie algebroid on the
// cotangent side, and its two-term bracket refinement with a three-argument
// map valued in the kernel of the bivector. All checks are exact and sweep
// finite generating families.

#include "l2v/courant.hpp"
#include "l2v/exterior.hpp"
#include "l2v/report.hpp"

namespace l2v {

struct TwistedPoisson {
    size_t n = 0;
    PolyMultivector pi; // bivector
    PolyForm h;         // background 3-form

    static TwistedPoisson make(size_t n, PolyMultivector pi, PolyForm h);
};

// [pi,pi] - (1/2) wedge3(pi#) h, the obstruction to the defining condition.
PolyMultivector tp_defect(const TwistedPoisson& tp);

// Single exact evaluation of the defining condition
//   [pi,pi] = (1/2) wedge3(pi#) h.
VerifyReport check_twisted_poisson(const TwistedPoisson& tp);

// Bracket on 1-forms:
//   [xi,eta] = L_{pi# xi} eta - L_{pi# eta} xi + d(pi(eta,xi))
//              + i_{pi# eta} i_{pi# xi} h.
PolyForm pi_bracket(const TwistedPoisson& tp, const PolyForm& xi, const PolyForm& eta);

// Three-argument map i_{pi# c} i_{pi# b} i_{pi# a} dh; for a twisted Poisson
// structure it lands in the kernel of pi#.
PolyForm l3_twisted(const TwistedPoisson& tp, const PolyForm& a, const PolyForm& b,
                    const PolyForm& c);

// pi# [xi,eta] = [pi# xi, pi# eta] over family pairs.
VerifyReport check_anchor_morphism(const TwistedPoisson& tp, const FormFamily& fam);

// Two-term bracket structure on 1-forms with the three-argument map above:
// bracket antisymmetry, both pointwise scaling rules, the degree-0 defect
// against the three-argument map, kernel-valuedness and total antisymmetry of
// that map, and the ten-term coherence on `fam4` 4-tuples.
VerifyReport check_lie2(const TwistedPoisson& tp, const FormFamily& fam,
                        const ScalarFamily& scalars, const FormFamily& fam4);

// Quasi Lie algebroid shape of the same data: cyclic jacobi sum against the
// three-argument map, the anchored scaling rule, and the four-argument
// coherence written as a Chevalley-Eilenberg style double sum.
VerifyReport check_h_twisted_lie_algebroid(const TwistedPoisson& tp, const FormFamily& fam,
                                           const ScalarFamily& scalars,
                                           const FormFamily& fam4);

// The graph section pi#(xi) + xi.
GeneralizedSection graph_section(const TwistedPoisson& tp, const PolyForm& xi);

// Graph of the bivector inside the generalized tangent bundle with twist h:
// isotropy under the pairing, the form part of the graph bracket against the
// bracket on 1-forms, and closure of the graph under the twisted bracket.
VerifyReport check_graph_dirac(const TwistedPoisson& tp, const FormFamily& fam);

// Exact linear solve for a background 3-form making a given bivector twisted
// Poisson, over 3-forms with polynomial coefficients of total degree at most
// `max_degree`. `homogeneous` spans the solutions of the associated
// homogeneous problem (backgrounds contracted to zero by the bivector).
struct HSolutions {
    bool solvable = false;
    PolyForm particular;
    std::vector<PolyForm> homogeneous;

    HSolutions() : particular(0, 3) {}
};

HSolutions solve_h_for_pi(const PolyMultivector& pi, size_t max_degree);

} // namespace l2v
