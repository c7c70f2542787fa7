#pragma once

// Exact twisted Courant structures on the generalized tangent bundle of a
// rational coordinate space: sections are pairs (vector field, 1-form) with
// polynomial coefficients, the pairing is the canonical symmetric one, and the
// bracket is the Dorfman bracket twisted by a 3-form that need not be closed.
// Checkers evaluate every identity exactly on finite generating families of
// sections; all residuals are polynomial objects compared to zero.

#include <functional>
#include <string>
#include <vector>

#include "l2v/exterior.hpp"
#include "l2v/report.hpp"

namespace l2v {

// A section X + xi of TM (+) T*M: degree-1 multivector plus a 1-form,
// both over the same coordinate count.
struct GeneralizedSection {
    PolyMultivector x;
    PolyForm xi;

    GeneralizedSection(PolyMultivector x_, PolyForm xi_);

    static GeneralizedSection zero(size_t n);
    static GeneralizedSection from_field(PolyMultivector v);
    static GeneralizedSection from_form(PolyForm f);

    size_t n() const { return x.n; }

    GeneralizedSection operator+(const GeneralizedSection& o) const;
    GeneralizedSection operator-(const GeneralizedSection& o) const;
    GeneralizedSection operator-() const;
    GeneralizedSection scaled(const Rat& c) const;
    // Pointwise module scaling f.(X + xi) = fX + f xi.
    GeneralizedSection scaled(const Poly& f) const;

    bool is_zero() const;
    bool operator==(const GeneralizedSection& o) const;
    bool operator!=(const GeneralizedSection& o) const { return !(*this == o); }

    std::string str() const;
};

// <X+xi, Y+eta> = xi(Y) + eta(X).
Poly pairing(const GeneralizedSection& a, const GeneralizedSection& b);

// The anchor: projection onto the vector-field part.
PolyMultivector anchor(const GeneralizedSection& e);

// The lifted differential D f = 0 + df, landing in the form part.
GeneralizedSection d_section(const Poly& f);

// An exact twisted Courant structure: ambient coordinate count and the
// twisting 3-form. Closedness of h is not assumed anywhere.
struct ExactTca {
    size_t n = 0;
    PolyForm h;

    static ExactTca make(size_t n, PolyForm h);
};

// Twisted Dorfman bracket
//   [[X+xi, Y+eta]] = [X,Y] + L_X eta - i_Y d xi + i_Y i_X h.
GeneralizedSection dorfman(const ExactTca& t, const GeneralizedSection& a,
                           const GeneralizedSection& b);

// Finite generating families the checkers sweep over.
struct SectionFamily {
    std::vector<GeneralizedSection> elems;
    std::vector<std::string> names;
    size_t size() const { return elems.size(); }
};

struct FormFamily {
    std::vector<PolyForm> elems;
    std::vector<std::string> names;
    size_t size() const { return elems.size(); }
};

struct ScalarFamily {
    std::vector<Poly> elems;
    std::vector<std::string> names;
    size_t size() const { return elems.size(); }
};

// Constant-coefficient generators: d/dx_i and dx_i (2n sections).
SectionFamily coordinate_sections(size_t n);
// Degree <= 1 coefficients: d/dx_i, dx_i, x_j d/dx_i, x_j dx_i (2n + 2n^2).
SectionFamily monomial_sections(size_t n);
// dx_i (n forms).
FormFamily coordinate_forms(size_t n);
// dx_i and x_j dx_i (n + n^2).
FormFamily monomial_forms(size_t n);
// x_i and x_i x_j for i <= j.
ScalarFamily quadratic_scalars(size_t n);

// Bracket-pairing compatibility, anchor invariance of the pairing, and the
// bracket jacobiator against the twist differential:
//   [[a,b]] + [[b,a]] = D<a,b>
//   rho(a)<b,c> = <[[a,b]],c> + <b,[[a,c]]>
//   [[a,[[b,c]]]] - [[[[a,b]],c]] - [[b,[[a,c]]]] = iota(i_{Xc} i_{Xb} i_{Xa} dh)
VerifyReport check_tca_axioms(const ExactTca& t, const SectionFamily& fam);

// Same checks against an arbitrary candidate bracket; lets callers probe
// mutated brackets (e.g. a dropped or sign-flipped term) and watch the
// specific axiom they break.
using SectionBracket =
    std::function<GeneralizedSection(const GeneralizedSection&, const GeneralizedSection&)>;
VerifyReport check_tca_axioms_fn(const ExactTca& t, const SectionFamily& fam,
                                 const SectionBracket& br);

// The two-term bracket structure the Dorfman bracket induces on
// 1-forms -> sections (differential = inclusion):
//   l2(a, b)  = [[a, b]]                    (section, section)
//   l2(a, xi) = L_{rho a} xi                (section, form)
//   l2(xi, a) = -i_{rho a} d xi             (form, section)
//   l3(a,b,c) = i_{Xc} i_{Xb} i_{Xa} dh     (1-form valued)
GeneralizedSection derived_l2(const ExactTca& t, const GeneralizedSection& a,
                              const GeneralizedSection& b);
PolyForm derived_l2_sf(const ExactTca& t, const GeneralizedSection& a, const PolyForm& xi);
PolyForm derived_l2_fs(const ExactTca& t, const PolyForm& xi, const GeneralizedSection& a);
PolyForm derived_l3(const ExactTca& t, const GeneralizedSection& a,
                    const GeneralizedSection& b, const GeneralizedSection& c);

// All two-term bracket conditions for the induced structure, evaluated on
// concrete family elements: compatibility of the inclusion with each mixed
// bracket, the degree-0 defect against l3, the three mixed three-argument
// conditions, and the ten-term four-argument coherence. `fam` drives the
// checks with at most three section slots, `fam4` drives the four-slot one.
VerifyReport check_section_leibniz2(const ExactTca& t, const SectionFamily& fam,
                                    const FormFamily& forms, const SectionFamily& fam4);

// Pointwise-scaling behaviour of the bracket and jacobiator:
//   [[a, f b]] = f [[a,b]] + (rho(a) f) b
//   [[f a, b]] = f [[a,b]] - (rho(b) f) a + <a,b> D f
//   rho [[a,b]] = [rho a, rho b]
//   jacobiator defect is pointwise-linear in each slot
VerifyReport check_scaling_anomalies(const ExactTca& t, const SectionFamily& fam,
                                     const ScalarFamily& scalars);

// Gauge transform by a 2-form: X + xi |-> X + xi + i_X B.
GeneralizedSection b_transform(const PolyForm& b2, const GeneralizedSection& e);

// [[e^B a, e^B b]]_h = e^B [[a, b]]_{h + dB} over family pairs.
VerifyReport check_b_intertwine(const ExactTca& t, const PolyForm& b2,
                                const SectionFamily& fam);

// The triple (e^B, id, (a,b) |-> i_{Xb} i_{Xa} dB) as a map of the induced
// two-term structure to itself (same twist): chain compatibility, the three
// bracket-comparison conditions, and the eight-term jacobiator-comparison
// condition, all on family elements.
VerifyReport check_b_morphism(const ExactTca& t, const PolyForm& b2,
                              const SectionFamily& fam, const FormFamily& forms);

} // namespace l2v
