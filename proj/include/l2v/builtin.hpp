#pragma once

// Deterministic catalogue of worked structures used by the test suite and by
// the command-line `construct` subcommand, plus seeded generators for
// randomized-but-reproducible instance sweeps. Every generator here produces
// data the corresponding checker accepts (or, for the *_bad builders, data
// frozen to fail in a documented way).

#include <random>
#include <vector>

#include "l2v/cohomology.hpp"
#include "l2v/courant.hpp"
#include "l2v/crossed_module.hpp"
#include "l2v/dirac.hpp"
#include "l2v/omni.hpp"

namespace l2v::builtin {

// --- finite-dimensional algebras -----------------------------------------

LeibnizAlgebra abelian_leibniz(size_t dim);
// dim 2, [e1,e1] = e2, all other products zero (non-Lie Leibniz).
LeibnizAlgebra nilpotent_pair();
// dim 2, [e1,e2] = e2 = -[e2,e1] (solvable Lie algebra).
LeibnizAlgebra nonabelian_lie2();
// dim 3, [e1,e2] = e3 = -[e2,e1] (Heisenberg Lie algebra).
LeibnizAlgebra heisenberg3();
// dim 2, [e1,e1] = e1: fails the Leibniz identity at (e1,e1,e1).
LeibnizAlgebra broken_pair();

// --- two-term structures --------------------------------------------------

ShLeibniz2 sh_zero(size_t dim_v1, size_t dim_v0);
// V1 = 0 with the algebra as degree 0 (both dg and skeletal).
ShLeibniz2 sh_from_algebra(const LeibnizAlgebra& g);
// Differential graded structure with nonzero d, from the self-action of the
// nilpotent pair (see adjoint_crossed).
ShLeibniz2 dg_nilpotent();
// Skeletal structure with zero brackets and l3(e1,e2,e3) = m1 on dims (1,3).
ShLeibniz2 skeletal_l3();

// Self-action crossed module: g = h, mu = id, actions = bracket.
CrossedModule adjoint_crossed(const LeibnizAlgebra& g);
// Nilpotent pair acting by zero on itself: fails the Peiffer-type condition
// at (e1,e1).
CrossedModule crossed_zero_actions();
// g --inclusion--> g (+) Q^pad with the padded factor abelian and inert.
CrossedModule product_extension(const LeibnizAlgebra& g, size_t pad);
// mu = 0 with abelian g carrying a verified action of rep.algebra.
CrossedModule abelian_mu0(const LeibnizRep& rep);
CrossedModule direct_sum(const CrossedModule& a, const CrossedModule& b);

// --- seeded randomization -------------------------------------------------

struct Rng {
    std::mt19937_64 gen;
    explicit Rng(unsigned long seed) : gen(seed) {}
    long pick(long lo, long hi); // uniform integer in [lo, hi]
    Rat rat(long lo = -2, long hi = 2) { return Rat(pick(lo, hi)); }
};

Vec random_vec(Rng& rng, size_t dim, long lo = -2, long hi = 2);
Mat random_mat(Rng& rng, size_t rows, size_t cols, long lo = -2, long hi = 2);
Mat random_invertible(Rng& rng, size_t dim, long lo = -2, long hi = 2);

// Conjugate every piece of the crossed module by the invertible basis
// changes pg (on g) and ph (on h); axioms are preserved exactly.
CrossedModule transport(const CrossedModule& cm, const Mat& pg, const Mat& ph);

// `count` distinct valid crossed modules with component dimensions <= 3:
// catalogue bases diversified by seeded basis transport and direct sums.
std::vector<CrossedModule> crossed_catalogue(size_t count, unsigned long seed);

// Verified representations for cochain sweeps: trivial, self-actions, and
// the one-sided action of the nilpotent pair.
std::vector<LeibnizRep> rep_catalogue();

Cochain random_cochain(Rng& rng, const LeibnizRep& rep, size_t degree);

// --- section-geometry fixtures -------------------------------------------

// Twist x3 dx1^dx2^dx3 on R^3 (closed).
ExactTca tca_r3();
// Twist x1 dx2^dx3^dx4 on R^4 (not closed).
ExactTca tca_r4();
// Gauge 2-form x3 dx1^dx2 on R^3.
PolyForm b_field_r3();
// Gauge 2-form x4 dx1^dx2 on R^4.
PolyForm b_field_r4();

// pi = d1^d2 + x1 d2^d3 with background dx1^dx2^dx3 (holds by degeneracy).
TwistedPoisson tp_r3();
// pi = d1^d2 on R^4 with non-closed background x1 dx2^dx3^dx4.
TwistedPoisson tp_r4();
// pi = d1^d2 + x5 d3^d4 with background x4 dx1^dx2^dx5 on R^5:
// dh != 0 and the three-argument map is nonzero (l3(dx1,dx2,dx3) = x5 dx5).
TwistedPoisson tp_r5();
// pi = d1^d2 + x2 d2^d3 with background dx1^dx2^dx3: defining condition
// fails with defect -2 d1^d2^d3.
TwistedPoisson tp_bad();

} // namespace l2v::builtin
