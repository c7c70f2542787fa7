#include "l2v/courant.hpp"

#include "l2v/errors.hpp"

namespace l2v {

GeneralizedSection::GeneralizedSection(PolyMultivector x_, PolyForm xi_)
    : x(std::move(x_)), xi(std::move(xi_)) {
    if (x.n != xi.n) throw ShapeError("generalized section: mixed ambient dimensions");
    if (x.deg != 1 || xi.deg != 1)
        throw ShapeError("generalized section: parts must have degree 1");
}

GeneralizedSection GeneralizedSection::zero(size_t n) {
    return {PolyMultivector(n, 1), PolyForm(n, 1)};
}

GeneralizedSection GeneralizedSection::from_field(PolyMultivector v) {
    size_t n = v.n;
    return {std::move(v), PolyForm(n, 1)};
}

GeneralizedSection GeneralizedSection::from_form(PolyForm f) {
    size_t n = f.n;
    return {PolyMultivector(n, 1), std::move(f)};
}

GeneralizedSection GeneralizedSection::operator+(const GeneralizedSection& o) const {
    return {x + o.x, xi + o.xi};
}

GeneralizedSection GeneralizedSection::operator-(const GeneralizedSection& o) const {
    return {x - o.x, xi - o.xi};
}

GeneralizedSection GeneralizedSection::operator-() const { return {-x, -xi}; }

GeneralizedSection GeneralizedSection::scaled(const Rat& c) const {
    return {x.scaled(c), xi.scaled(c)};
}

GeneralizedSection GeneralizedSection::scaled(const Poly& f) const {
    return {x.scaled(f), xi.scaled(f)};
}

bool GeneralizedSection::is_zero() const { return x.is_zero() && xi.is_zero(); }

bool GeneralizedSection::operator==(const GeneralizedSection& o) const {
    return x == o.x && xi == o.xi;
}

std::string GeneralizedSection::str() const {
    if (is_zero()) return "0";
    std::string out;
    if (!x.is_zero()) out = x.str();
    if (!xi.is_zero()) {
        std::string f = xi.str();
        if (out.empty()) {
            out = f;
        } else if (!f.empty() && f[0] == '-') {
            out += " - " + f.substr(1);
        } else {
            out += " + " + f;
        }
    }
    return out;
}

Poly pairing(const GeneralizedSection& a, const GeneralizedSection& b) {
    return form_apply(a.xi, b.x) + form_apply(b.xi, a.x);
}

PolyMultivector anchor(const GeneralizedSection& e) { return e.x; }

GeneralizedSection d_section(const Poly& f) {
    return GeneralizedSection::from_form(scalar_d(f));
}

ExactTca ExactTca::make(size_t n, PolyForm h) {
    if (h.n != n) throw ShapeError("exact tca: twist over wrong ambient dimension");
    if (h.deg != 3) throw ShapeError("exact tca: twist must be a 3-form");
    return ExactTca{n, std::move(h)};
}

GeneralizedSection dorfman(const ExactTca& t, const GeneralizedSection& a,
                           const GeneralizedSection& b) {
    if (a.n() != t.n || b.n() != t.n)
        throw ShapeError("dorfman: section over wrong ambient dimension");
    PolyMultivector field = vf_bracket(a.x, b.x);
    PolyForm form = lie_derivative(a.x, b.xi) - interior(b.x, d(a.xi)) +
                    interior(b.x, interior(a.x, t.h));
    return {std::move(field), std::move(form)};
}

SectionFamily coordinate_sections(size_t n) {
    SectionFamily f;
    for (size_t i = 0; i < n; ++i)
        f.elems.push_back(GeneralizedSection::from_field(coord_field(n, i)));
    for (size_t i = 0; i < n; ++i)
        f.elems.push_back(GeneralizedSection::from_form(coord_form(n, i)));
    for (const auto& e : f.elems) f.names.push_back(e.str());
    return f;
}

SectionFamily monomial_sections(size_t n) {
    SectionFamily f = coordinate_sections(n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            f.elems.push_back(
                GeneralizedSection::from_field(mv_monomial(n, {i}, Poly::var(n, j))));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            f.elems.push_back(
                GeneralizedSection::from_form(form_monomial(n, {i}, Poly::var(n, j))));
    f.names.clear();
    for (const auto& e : f.elems) f.names.push_back(e.str());
    return f;
}

FormFamily coordinate_forms(size_t n) {
    FormFamily f;
    for (size_t i = 0; i < n; ++i) f.elems.push_back(coord_form(n, i));
    for (const auto& e : f.elems) f.names.push_back(e.str());
    return f;
}

FormFamily monomial_forms(size_t n) {
    FormFamily f = coordinate_forms(n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            f.elems.push_back(form_monomial(n, {i}, Poly::var(n, j)));
    f.names.clear();
    for (const auto& e : f.elems) f.names.push_back(e.str());
    return f;
}

ScalarFamily quadratic_scalars(size_t n) {
    ScalarFamily f;
    for (size_t i = 0; i < n; ++i) {
        f.elems.push_back(Poly::var(n, i));
        f.names.push_back(f.elems.back().str());
    }
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i; j < n; ++j) {
            f.elems.push_back(Poly::var(n, i) * Poly::var(n, j));
            f.names.push_back(f.elems.back().str());
        }
    return f;
}

namespace {

std::string at1(const std::string& a) { return "(" + a + ")"; }
std::string at2(const std::string& a, const std::string& b) {
    return "(" + a + ", " + b + ")";
}
std::string at3(const std::string& a, const std::string& b, const std::string& c) {
    return "(" + a + ", " + b + ", " + c + ")";
}
std::string at4(const std::string& a, const std::string& b, const std::string& c,
                const std::string& d) {
    return "(" + a + ", " + b + ", " + c + ", " + d + ")";
}

GeneralizedSection jac_defect(const ExactTca& t, const GeneralizedSection& a,
                              const GeneralizedSection& b, const GeneralizedSection& c) {
    return dorfman(t, a, dorfman(t, b, c)) - dorfman(t, dorfman(t, a, b), c) -
           dorfman(t, b, dorfman(t, a, c));
}

// f2 of the gauge map: (a, b) |-> i_{rho b} i_{rho a} dB.
PolyForm gauge_f2(const PolyForm& db, const GeneralizedSection& a,
                  const GeneralizedSection& b) {
    return interior(b.x, interior(a.x, db));
}

} // namespace

VerifyReport check_tca_axioms_fn(const ExactTca& t, const SectionFamily& fam,
                                 const SectionBracket& br) {
    VerifyReport rep;
    rep.subject = "twisted Courant axioms";
    const size_t m = fam.size();
    PolyForm dh = d(t.h);

    auto defect = [&](const GeneralizedSection& a, const GeneralizedSection& b,
                      const GeneralizedSection& c) {
        return br(a, br(b, c)) - br(br(a, b), c) - br(b, br(a, c));
    };

    CheckResult& sym = rep.add("[[a,b]] + [[b,a]] = D<a,b>", "nonskew");
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j) {
            const auto& a = fam.elems[i];
            const auto& b = fam.elems[j];
            GeneralizedSection res = d_section(pairing(a, b)) - br(a, b) - br(b, a);
            sym.count(res.is_zero(), at2(fam.names[i], fam.names[j]), res.str());
        }

    CheckResult& inv = rep.add("rho(a)<b,c> = <[[a,b]],c> + <b,[[a,c]]>", "invariance");
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j)
            for (size_t k = 0; k < m; ++k) {
                const auto& a = fam.elems[i];
                const auto& b = fam.elems[j];
                const auto& c = fam.elems[k];
                Poly res = pairing(br(a, b), c) + pairing(b, br(a, c)) -
                           vf_apply(a.x, pairing(b, c));
                inv.count(res.is_zero(), at3(fam.names[i], fam.names[j], fam.names[k]),
                          res.str());
            }

    CheckResult& jac =
        rep.add("bracket jacobiator defect = iota(i_c i_b i_a dh)", "jacobiator-vs-h");
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j)
            for (size_t k = 0; k < m; ++k) {
                const auto& a = fam.elems[i];
                const auto& b = fam.elems[j];
                const auto& c = fam.elems[k];
                GeneralizedSection res =
                    GeneralizedSection::from_form(
                        interior_multi({a.x, b.x, c.x}, dh)) -
                    defect(a, b, c);
                jac.count(res.is_zero(), at3(fam.names[i], fam.names[j], fam.names[k]),
                          res.str());
            }

    return rep;
}

VerifyReport check_tca_axioms(const ExactTca& t, const SectionFamily& fam) {
    return check_tca_axioms_fn(
        t, fam, [&t](const GeneralizedSection& a, const GeneralizedSection& b) {
            return dorfman(t, a, b);
        });
}

GeneralizedSection derived_l2(const ExactTca& t, const GeneralizedSection& a,
                              const GeneralizedSection& b) {
    return dorfman(t, a, b);
}

PolyForm derived_l2_sf(const ExactTca& t, const GeneralizedSection& a, const PolyForm& xi) {
    if (a.n() != t.n || xi.n != t.n)
        throw ShapeError("derived bracket: wrong ambient dimension");
    return lie_derivative(a.x, xi);
}

PolyForm derived_l2_fs(const ExactTca& t, const PolyForm& xi, const GeneralizedSection& a) {
    if (a.n() != t.n || xi.n != t.n)
        throw ShapeError("derived bracket: wrong ambient dimension");
    return -interior(a.x, d(xi));
}

PolyForm derived_l3(const ExactTca& t, const GeneralizedSection& a,
                    const GeneralizedSection& b, const GeneralizedSection& c) {
    return interior_multi({a.x, b.x, c.x}, d(t.h));
}

VerifyReport check_section_leibniz2(const ExactTca& t, const SectionFamily& fam,
                                    const FormFamily& forms, const SectionFamily& fam4) {
    VerifyReport rep;
    rep.subject = "induced two-term bracket structure on sections";
    const size_t m = fam.size();
    const size_t q = forms.size();
    auto iota = [](const PolyForm& f) { return GeneralizedSection::from_form(f); };

    CheckResult& ca = rep.add("iota l2(a, xi) = l2(a, iota xi)", "(a)");
    for (size_t i = 0; i < m; ++i)
        for (size_t s = 0; s < q; ++s) {
            const auto& a = fam.elems[i];
            const auto& xi = forms.elems[s];
            GeneralizedSection res =
                derived_l2(t, a, iota(xi)) - iota(derived_l2_sf(t, a, xi));
            ca.count(res.is_zero(), at2(fam.names[i], forms.names[s]), res.str());
        }

    CheckResult& cb = rep.add("iota l2(xi, a) = l2(iota xi, a)", "(b)");
    for (size_t s = 0; s < q; ++s)
        for (size_t i = 0; i < m; ++i) {
            const auto& a = fam.elems[i];
            const auto& xi = forms.elems[s];
            GeneralizedSection res =
                derived_l2(t, iota(xi), a) - iota(derived_l2_fs(t, xi, a));
            cb.count(res.is_zero(), at2(forms.names[s], fam.names[i]), res.str());
        }

    CheckResult& cc = rep.add("l2(iota xi, eta) = l2(xi, iota eta)", "(c)");
    for (size_t s = 0; s < q; ++s)
        for (size_t r = 0; r < q; ++r) {
            const auto& xi = forms.elems[s];
            const auto& eta = forms.elems[r];
            PolyForm res = derived_l2_fs(t, xi, iota(eta)) - derived_l2_sf(t, iota(xi), eta);
            cc.count(res.is_zero(), at2(forms.names[s], forms.names[r]), res.str());
        }

    CheckResult& cd = rep.add("iota l3 = degree-0 bracket defect", "(d)");
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j)
            for (size_t k = 0; k < m; ++k) {
                const auto& a = fam.elems[i];
                const auto& b = fam.elems[j];
                const auto& c = fam.elems[k];
                GeneralizedSection res =
                    jac_defect(t, a, b, c) - iota(derived_l3(t, a, b, c));
                cd.count(res.is_zero(), at3(fam.names[i], fam.names[j], fam.names[k]),
                         res.str());
            }

    CheckResult& ce1 = rep.add("l3(a, b, iota xi) = mixed defect", "(e1)");
    CheckResult& ce2 = rep.add("l3(a, iota xi, b) = mixed defect", "(e2)");
    CheckResult& ce3 = rep.add("l3(iota xi, a, b) = mixed defect", "(e3)");
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j)
            for (size_t s = 0; s < q; ++s) {
                const auto& a = fam.elems[i];
                const auto& b = fam.elems[j];
                const auto& xi = forms.elems[s];

                PolyForm r1 = derived_l2_sf(t, a, derived_l2_sf(t, b, xi)) -
                              derived_l2_sf(t, derived_l2(t, a, b), xi) -
                              derived_l2_sf(t, b, derived_l2_sf(t, a, xi)) -
                              derived_l3(t, a, b, iota(xi));
                ce1.count(r1.is_zero(), at3(fam.names[i], fam.names[j], forms.names[s]),
                          r1.str());

                PolyForm r2 = derived_l2_sf(t, a, derived_l2_fs(t, xi, b)) -
                              derived_l2_fs(t, derived_l2_sf(t, a, xi), b) -
                              derived_l2_fs(t, xi, derived_l2(t, a, b)) -
                              derived_l3(t, a, iota(xi), b);
                ce2.count(r2.is_zero(), at3(fam.names[i], forms.names[s], fam.names[j]),
                          r2.str());

                PolyForm r3 = derived_l2_fs(t, xi, derived_l2(t, a, b)) -
                              derived_l2_fs(t, derived_l2_fs(t, xi, a), b) -
                              derived_l2_sf(t, a, derived_l2_fs(t, xi, b)) -
                              derived_l3(t, iota(xi), a, b);
                ce3.count(r3.is_zero(), at3(forms.names[s], fam.names[i], fam.names[j]),
                          r3.str());
            }

    CheckResult& cf = rep.add("l2/l3 coherence on 4-tuples", "(f)");
    const size_t m4 = fam4.size();
    for (size_t i = 0; i < m4; ++i)
        for (size_t j = 0; j < m4; ++j)
            for (size_t k = 0; k < m4; ++k)
                for (size_t l = 0; l < m4; ++l) {
                    const auto& w = fam4.elems[i];
                    const auto& x = fam4.elems[j];
                    const auto& y = fam4.elems[k];
                    const auto& z = fam4.elems[l];
                    PolyForm res =
                        derived_l2_sf(t, w, derived_l3(t, x, y, z)) -
                        derived_l2_sf(t, x, derived_l3(t, w, y, z)) +
                        derived_l2_sf(t, y, derived_l3(t, w, x, z)) +
                        derived_l2_fs(t, derived_l3(t, w, x, y), z) -
                        derived_l3(t, derived_l2(t, w, x), y, z) -
                        derived_l3(t, x, derived_l2(t, w, y), z) -
                        derived_l3(t, x, y, derived_l2(t, w, z)) +
                        derived_l3(t, w, derived_l2(t, x, y), z) +
                        derived_l3(t, w, y, derived_l2(t, x, z)) -
                        derived_l3(t, w, x, derived_l2(t, y, z));
                    cf.count(res.is_zero(),
                             at4(fam4.names[i], fam4.names[j], fam4.names[k],
                                 fam4.names[l]),
                             res.str());
                }

    return rep;
}

VerifyReport check_scaling_anomalies(const ExactTca& t, const SectionFamily& fam,
                                     const ScalarFamily& scalars) {
    VerifyReport rep;
    rep.subject = "pointwise scaling behaviour of the twisted bracket";
    const size_t m = fam.size();
    const size_t s = scalars.size();

    CheckResult& right = rep.add("[[a, f b]] = f [[a,b]] + (rho(a) f) b", "scale-right");
    CheckResult& left =
        rep.add("[[f a, b]] = f [[a,b]] - (rho(b) f) a + <a,b> D f", "scale-left");
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j)
            for (size_t u = 0; u < s; ++u) {
                const auto& a = fam.elems[i];
                const auto& b = fam.elems[j];
                const auto& f = scalars.elems[u];
                GeneralizedSection base = dorfman(t, a, b);

                GeneralizedSection r1 = base.scaled(f) + b.scaled(vf_apply(a.x, f)) -
                                        dorfman(t, a, b.scaled(f));
                right.count(r1.is_zero(),
                            at3(fam.names[i], scalars.names[u], fam.names[j]), r1.str());

                GeneralizedSection r2 = base.scaled(f) - a.scaled(vf_apply(b.x, f)) +
                                        d_section(f).scaled(pairing(a, b)) -
                                        dorfman(t, a.scaled(f), b);
                left.count(r2.is_zero(),
                           at3(scalars.names[u], fam.names[i], fam.names[j]), r2.str());
            }

    CheckResult& anchored = rep.add("rho [[a,b]] = [rho a, rho b]", "anchor-morphism");
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j) {
            const auto& a = fam.elems[i];
            const auto& b = fam.elems[j];
            PolyMultivector res = vf_bracket(a.x, b.x) - anchor(dorfman(t, a, b));
            anchored.count(res.is_zero(), at2(fam.names[i], fam.names[j]), res.str());
        }

    CheckResult& t1 = rep.add("defect(f a, b, c) = f defect(a, b, c)", "tensorial-1");
    CheckResult& t2 = rep.add("defect(a, f b, c) = f defect(a, b, c)", "tensorial-2");
    CheckResult& t3 = rep.add("defect(a, b, f c) = f defect(a, b, c)", "tensorial-3");
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j)
            for (size_t k = 0; k < m; ++k)
                for (size_t u = 0; u < s; ++u) {
                    const auto& a = fam.elems[i];
                    const auto& b = fam.elems[j];
                    const auto& c = fam.elems[k];
                    const auto& f = scalars.elems[u];
                    GeneralizedSection base = jac_defect(t, a, b, c).scaled(f);

                    GeneralizedSection r1 = base - jac_defect(t, a.scaled(f), b, c);
                    t1.count(r1.is_zero(),
                             at4(scalars.names[u], fam.names[i], fam.names[j],
                                 fam.names[k]),
                             r1.str());
                    GeneralizedSection r2 = base - jac_defect(t, a, b.scaled(f), c);
                    t2.count(r2.is_zero(),
                             at4(fam.names[i], scalars.names[u], fam.names[j],
                                 fam.names[k]),
                             r2.str());
                    GeneralizedSection r3 = base - jac_defect(t, a, b, c.scaled(f));
                    t3.count(r3.is_zero(),
                             at4(fam.names[i], fam.names[j], scalars.names[u],
                                 fam.names[k]),
                             r3.str());
                }

    return rep;
}

GeneralizedSection b_transform(const PolyForm& b2, const GeneralizedSection& e) {
    if (b2.deg != 2) throw ShapeError("gauge transform: need a 2-form");
    if (b2.n != e.n()) throw ShapeError("gauge transform: mixed ambient dimensions");
    return {e.x, e.xi + interior(e.x, b2)};
}

VerifyReport check_b_intertwine(const ExactTca& t, const PolyForm& b2,
                                const SectionFamily& fam) {
    VerifyReport rep;
    rep.subject = "gauge transform against shifted twist";
    ExactTca shifted = ExactTca::make(t.n, t.h + d(b2));
    const size_t m = fam.size();

    CheckResult& c = rep.add("[[e^B a, e^B b]]_h = e^B [[a, b]]_{h+dB}", "intertwine");
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j) {
            const auto& a = fam.elems[i];
            const auto& b = fam.elems[j];
            GeneralizedSection res =
                b_transform(b2, dorfman(shifted, a, b)) -
                dorfman(t, b_transform(b2, a), b_transform(b2, b));
            c.count(res.is_zero(), at2(fam.names[i], fam.names[j]), res.str());
        }
    return rep;
}

VerifyReport check_b_morphism(const ExactTca& t, const PolyForm& b2,
                              const SectionFamily& fam, const FormFamily& forms) {
    VerifyReport rep;
    rep.subject = "gauge transform as a map of the induced two-term structure";
    if (b2.deg != 2) throw ShapeError("gauge morphism: need a 2-form");
    PolyForm db = d(b2);
    const size_t m = fam.size();
    const size_t q = forms.size();
    auto iota = [](const PolyForm& f) { return GeneralizedSection::from_form(f); };
    auto f0 = [&](const GeneralizedSection& e) { return b_transform(b2, e); };

    CheckResult& chain = rep.add("f0 iota = iota", "chain");
    for (size_t s = 0; s < q; ++s) {
        GeneralizedSection res = iota(forms.elems[s]) - f0(iota(forms.elems[s]));
        chain.count(res.is_zero(), at1(forms.names[s]), res.str());
    }

    CheckResult& c00 =
        rep.add("l2(f0 a, f0 b) - f0 l2(a, b) = iota f2(a, b)", "(c1-00)");
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j) {
            const auto& a = fam.elems[i];
            const auto& b = fam.elems[j];
            GeneralizedSection res =
                iota(gauge_f2(db, a, b)) -
                (dorfman(t, f0(a), f0(b)) - f0(dorfman(t, a, b)));
            c00.count(res.is_zero(), at2(fam.names[i], fam.names[j]), res.str());
        }

    CheckResult& c01 = rep.add("l2(f0 a, xi) - l2(a, xi) = f2(a, iota xi)", "(c1-01)");
    CheckResult& c10 = rep.add("l2(xi, f0 a) - l2(xi, a) = f2(iota xi, a)", "(c1-10)");
    for (size_t i = 0; i < m; ++i)
        for (size_t s = 0; s < q; ++s) {
            const auto& a = fam.elems[i];
            const auto& xi = forms.elems[s];

            PolyForm r1 = gauge_f2(db, a, iota(xi)) -
                          (derived_l2_sf(t, f0(a), xi) - derived_l2_sf(t, a, xi));
            c01.count(r1.is_zero(), at2(fam.names[i], forms.names[s]), r1.str());

            PolyForm r2 = gauge_f2(db, iota(xi), a) -
                          (derived_l2_fs(t, xi, f0(a)) - derived_l2_fs(t, xi, a));
            c10.count(r2.is_zero(), at2(forms.names[s], fam.names[i]), r2.str());
        }

    CheckResult& c2 = rep.add("jacobiator comparison across f2", "(c2)");
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j)
            for (size_t k = 0; k < m; ++k) {
                const auto& a = fam.elems[i];
                const auto& b = fam.elems[j];
                const auto& c = fam.elems[k];
                PolyForm res = derived_l3(t, a, b, c) +
                               derived_l2_sf(t, f0(a), gauge_f2(db, b, c)) -
                               derived_l2_sf(t, f0(b), gauge_f2(db, a, c)) -
                               derived_l2_fs(t, gauge_f2(db, a, b), f0(c)) -
                               gauge_f2(db, dorfman(t, a, b), c) +
                               gauge_f2(db, a, dorfman(t, b, c)) -
                               gauge_f2(db, b, dorfman(t, a, c)) -
                               derived_l3(t, f0(a), f0(b), f0(c));
                c2.count(res.is_zero(), at3(fam.names[i], fam.names[j], fam.names[k]),
                         res.str());
            }

    return rep;
}

} // namespace l2v
