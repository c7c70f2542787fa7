#include "l2v/exterior.hpp"

namespace l2v {

PolyForm d(const PolyForm& w) {
    PolyForm r(w.n, w.deg + 1);
    for (const auto& [idx, p] : w.comp) {
        for (size_t v = 0; v < w.n; ++v) {
            Poly dp = p.derivative(v);
            if (dp.is_zero()) continue;
            IdxTuple vi;
            vi.reserve(idx.size() + 1);
            vi.push_back(v);
            vi.insert(vi.end(), idx.begin(), idx.end());
            r.add_term(std::move(vi), std::move(dp));
        }
    }
    return r;
}

PolyForm scalar_d(const Poly& f) {
    PolyForm w0(f.nvars(), 0);
    if (!f.is_zero()) w0.add_term({}, f);
    return d(w0);
}

PolyForm interior(const PolyMultivector& x, const PolyForm& w) {
    if (x.deg != 1) throw ShapeError("interior: contracting field must have degree 1");
    if (x.n != w.n) throw ShapeError("interior: mixed ambient dimensions");
    if (w.deg < 1) throw ShapeError("interior: form must have degree >= 1");
    PolyForm r(w.n, w.deg - 1);
    for (const auto& [idx, p] : w.comp) {
        for (size_t j = 0; j < idx.size(); ++j) {
            Poly xc = x.coeff({idx[j]});
            if (xc.is_zero()) continue;
            IdxTuple rest;
            rest.reserve(idx.size() - 1);
            for (size_t k = 0; k < idx.size(); ++k)
                if (k != j) rest.push_back(idx[k]);
            Poly term = xc * p;
            if (j % 2 == 1) term = -term; // (-1)^{j-1} with 1-based slot j
            r.add_term(std::move(rest), std::move(term));
        }
    }
    return r;
}

PolyForm interior_multi(const std::vector<PolyMultivector>& xs, const PolyForm& w) {
    PolyForm cur = w;
    for (const auto& x : xs) cur = interior(x, cur);
    return cur;
}

PolyForm lie_derivative(const PolyMultivector& x, const PolyForm& w) {
    PolyForm first = interior(x, d(w));
    if (w.deg == 0) return first;
    return first + d(interior(x, w));
}

PolyMultivector vf_bracket(const PolyMultivector& x, const PolyMultivector& y) {
    if (x.deg != 1 || y.deg != 1) throw ShapeError("vf_bracket: fields must have degree 1");
    if (x.n != y.n) throw ShapeError("vf_bracket: mixed ambient dimensions");
    PolyMultivector r(x.n, 1);
    for (size_t j = 0; j < x.n; ++j) {
        Poly comp = Poly::zero(x.n);
        Poly yj = y.coeff({j}), xj = x.coeff({j});
        for (size_t i = 0; i < x.n; ++i) {
            Poly xi = x.coeff({i}), yi = y.coeff({i});
            if (!xi.is_zero()) comp = comp + xi * yj.derivative(i);
            if (!yi.is_zero()) comp = comp - yi * xj.derivative(i);
        }
        if (!comp.is_zero()) r.add_term({j}, comp);
    }
    return r;
}

PolyMultivector schouten_sq(const PolyMultivector& pi) {
    if (pi.deg != 2) throw ShapeError("schouten_sq: argument must be a bivector");
    const size_t n = pi.n;
    PolyMultivector r(n, 3);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            for (size_t k = j + 1; k < n; ++k) {
                Poly acc = Poly::zero(n);
                for (size_t l = 0; l < n; ++l) {
                    Poly pli = pi.coeff({l, i});
                    Poly plj = pi.coeff({l, j});
                    Poly plk = pi.coeff({l, k});
                    if (!pli.is_zero()) acc = acc + pli * pi.coeff({j, k}).derivative(l);
                    if (!plj.is_zero()) acc = acc + plj * pi.coeff({k, i}).derivative(l);
                    if (!plk.is_zero()) acc = acc + plk * pi.coeff({i, j}).derivative(l);
                }
                acc = acc.scaled(Rat(2));
                if (!acc.is_zero()) r.add_term({i, j, k}, acc);
            }
    return r;
}

PolyMultivector sharp(const PolyMultivector& pi, const PolyForm& xi) {
    if (pi.deg != 2) throw ShapeError("sharp: first argument must be a bivector");
    if (xi.deg != 1) throw ShapeError("sharp: second argument must be a 1-form");
    if (pi.n != xi.n) throw ShapeError("sharp: mixed ambient dimensions");
    PolyMultivector r(pi.n, 1);
    for (size_t j = 0; j < pi.n; ++j) {
        Poly acc = Poly::zero(pi.n);
        for (size_t i = 0; i < pi.n; ++i) {
            Poly xic = xi.coeff({i});
            if (xic.is_zero()) continue;
            acc = acc + xic * pi.coeff({i, j});
        }
        if (!acc.is_zero()) r.add_term({j}, acc);
    }
    return r;
}

PolyMultivector triple_sharp(const PolyMultivector& pi, const PolyForm& h) {
    if (pi.deg != 2 || h.deg != 3) throw ShapeError("triple_sharp: need bivector and 3-form");
    if (pi.n != h.n) throw ShapeError("triple_sharp: mixed ambient dimensions");
    const size_t n = pi.n;
    PolyMultivector r(n, 3);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            for (size_t k = j + 1; k < n; ++k) {
                Poly acc = Poly::zero(n);
                for (const auto& [lmn, hc] : h.comp) {
                    // Sum the full antisymmetrization of h over this component.
                    const size_t l = lmn[0], m = lmn[1], nn = lmn[2];
                    const size_t perm[6][3] = {{l, m, nn}, {m, nn, l}, {nn, l, m},
                                               {m, l, nn}, {l, nn, m}, {nn, m, l}};
                    const int sgn[6] = {1, 1, 1, -1, -1, -1};
                    for (int t = 0; t < 6; ++t) {
                        Poly a = pi.coeff({perm[t][0], i});
                        if (a.is_zero()) continue;
                        Poly b = pi.coeff({perm[t][1], j});
                        if (b.is_zero()) continue;
                        Poly c = pi.coeff({perm[t][2], k});
                        if (c.is_zero()) continue;
                        Poly term = hc * a * b * c;
                        acc = sgn[t] > 0 ? acc + term : acc - term;
                    }
                }
                if (!acc.is_zero()) r.add_term({i, j, k}, acc);
            }
    return r;
}

Poly form_apply(const PolyForm& xi, const PolyMultivector& x) {
    if (xi.deg != 1 || x.deg != 1) throw ShapeError("form_apply: need a 1-form and a field");
    if (xi.n != x.n) throw ShapeError("form_apply: mixed ambient dimensions");
    Poly acc = Poly::zero(xi.n);
    for (const auto& [i, p] : xi.comp) acc = acc + p * x.coeff({i[0]});
    return acc;
}

Poly vf_apply(const PolyMultivector& x, const Poly& f) {
    if (x.deg != 1) throw ShapeError("vf_apply: field must have degree 1");
    if (x.n != f.nvars()) throw ShapeError("vf_apply: mixed ambient dimensions");
    Poly acc = Poly::zero(x.n);
    for (const auto& [i, p] : x.comp) acc = acc + p * f.derivative(i[0]);
    return acc;
}

Poly bivector_eval(const PolyMultivector& pi, const PolyForm& alpha, const PolyForm& beta) {
    return form_apply(beta, sharp(pi, alpha));
}

PolyMultivector coord_field(size_t n, size_t i) {
    PolyMultivector r(n, 1);
    r.add_term({i}, Poly::constant(n, Rat(1)));
    return r;
}

PolyForm coord_form(size_t n, size_t i) {
    PolyForm r(n, 1);
    r.add_term({i}, Poly::constant(n, Rat(1)));
    return r;
}

PolyForm form_monomial(size_t n, IdxTuple idx, Poly coeff) {
    PolyForm r(n, idx.size());
    r.add_term(std::move(idx), std::move(coeff));
    return r;
}

PolyMultivector mv_monomial(size_t n, IdxTuple idx, Poly coeff) {
    PolyMultivector r(n, idx.size());
    r.add_term(std::move(idx), std::move(coeff));
    return r;
}

} // namespace l2v
