#include "l2v/dirac.hpp"

#include <map>
#include <utility>

#include "l2v/errors.hpp"
#include "l2v/linalg.hpp"

namespace l2v {

TwistedPoisson TwistedPoisson::make(size_t n, PolyMultivector pi, PolyForm h) {
    if (pi.n != n || h.n != n)
        throw ShapeError("twisted poisson: data over wrong ambient dimension");
    if (pi.deg != 2) throw ShapeError("twisted poisson: pi must be a bivector");
    if (h.deg != 3) throw ShapeError("twisted poisson: h must be a 3-form");
    return TwistedPoisson{n, std::move(pi), std::move(h)};
}

PolyMultivector tp_defect(const TwistedPoisson& tp) {
    return schouten_sq(tp.pi) - triple_sharp(tp.pi, tp.h).scaled(Rat(1, 2));
}

VerifyReport check_twisted_poisson(const TwistedPoisson& tp) {
    VerifyReport rep;
    rep.subject = "twisted Poisson condition";
    CheckResult& c = rep.add("[pi,pi] - (1/2) wedge3 pi# h = 0", "twisted-poisson");
    PolyMultivector res = tp_defect(tp);
    c.count(res.is_zero(), "(pi, h)", res.str());
    return rep;
}

PolyForm pi_bracket(const TwistedPoisson& tp, const PolyForm& xi, const PolyForm& eta) {
    if (xi.n != tp.n || eta.n != tp.n)
        throw ShapeError("pi bracket: form over wrong ambient dimension");
    if (xi.deg != 1 || eta.deg != 1) throw ShapeError("pi bracket: need 1-forms");
    PolyMultivector px = sharp(tp.pi, xi);
    PolyMultivector py = sharp(tp.pi, eta);
    return lie_derivative(px, eta) - lie_derivative(py, xi) +
           scalar_d(bivector_eval(tp.pi, eta, xi)) +
           interior(py, interior(px, tp.h));
}

PolyForm l3_twisted(const TwistedPoisson& tp, const PolyForm& a, const PolyForm& b,
                    const PolyForm& c) {
    return interior_multi({sharp(tp.pi, a), sharp(tp.pi, b), sharp(tp.pi, c)}, d(tp.h));
}

namespace {

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

PolyForm bracket_defect(const TwistedPoisson& tp, const PolyForm& x, const PolyForm& y,
                        const PolyForm& z) {
    return pi_bracket(tp, x, pi_bracket(tp, y, z)) -
           pi_bracket(tp, pi_bracket(tp, x, y), z) -
           pi_bracket(tp, y, pi_bracket(tp, x, z));
}

} // namespace

VerifyReport check_anchor_morphism(const TwistedPoisson& tp, const FormFamily& fam) {
    VerifyReport rep;
    rep.subject = "anchor of the bracket on 1-forms";
    const size_t m = fam.size();
    CheckResult& c = rep.add("pi# [xi, eta] = [pi# xi, pi# eta]", "anchor");
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j) {
            const auto& xi = fam.elems[i];
            const auto& eta = fam.elems[j];
            PolyMultivector res = vf_bracket(sharp(tp.pi, xi), sharp(tp.pi, eta)) -
                                  sharp(tp.pi, pi_bracket(tp, xi, eta));
            c.count(res.is_zero(), at2(fam.names[i], fam.names[j]), res.str());
        }
    return rep;
}

VerifyReport check_lie2(const TwistedPoisson& tp, const FormFamily& fam,
                        const ScalarFamily& scalars, const FormFamily& fam4) {
    VerifyReport rep;
    rep.subject = "two-term bracket structure on 1-forms";
    const size_t m = fam.size();
    const size_t s = scalars.size();

    CheckResult& anti = rep.add("[xi, eta] + [eta, xi] = 0", "antisym");
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j) {
            const auto& xi = fam.elems[i];
            const auto& eta = fam.elems[j];
            PolyForm res = pi_bracket(tp, xi, eta) + pi_bracket(tp, eta, xi);
            anti.count(res.is_zero(), at2(fam.names[i], fam.names[j]), res.str());
        }

    CheckResult& sr = rep.add("[xi, f eta] = f [xi, eta] + ((pi# xi) f) eta", "scale-right");
    CheckResult& sl = rep.add("[f xi, eta] = f [xi, eta] - ((pi# eta) f) xi", "scale-left");
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j)
            for (size_t u = 0; u < s; ++u) {
                const auto& xi = fam.elems[i];
                const auto& eta = fam.elems[j];
                const auto& f = scalars.elems[u];
                PolyForm base = pi_bracket(tp, xi, eta);

                PolyForm r1 = base.scaled(f) + eta.scaled(vf_apply(sharp(tp.pi, xi), f)) -
                              pi_bracket(tp, xi, eta.scaled(f));
                sr.count(r1.is_zero(), at3(fam.names[i], scalars.names[u], fam.names[j]),
                         r1.str());

                PolyForm r2 = base.scaled(f) - xi.scaled(vf_apply(sharp(tp.pi, eta), f)) -
                              pi_bracket(tp, xi.scaled(f), eta);
                sl.count(r2.is_zero(), at3(scalars.names[u], fam.names[i], fam.names[j]),
                         r2.str());
            }

    CheckResult& cd =
        rep.add("[x,[y,z]] - [[x,y],z] - [y,[x,z]] = l3(x,y,z)", "(d)");
    CheckResult& ker = rep.add("pi# l3(x,y,z) = 0", "kernel-valued");
    CheckResult& l3a = rep.add("l3 alternates under adjacent swaps", "l3-antisym");
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j)
            for (size_t k = 0; k < m; ++k) {
                const auto& x = fam.elems[i];
                const auto& y = fam.elems[j];
                const auto& z = fam.elems[k];
                PolyForm l3v = l3_twisted(tp, x, y, z);

                PolyForm r1 = l3v - bracket_defect(tp, x, y, z);
                cd.count(r1.is_zero(), at3(fam.names[i], fam.names[j], fam.names[k]),
                         r1.str());

                PolyMultivector r2 = sharp(tp.pi, l3v);
                ker.count(r2.is_zero(), at3(fam.names[i], fam.names[j], fam.names[k]),
                          r2.str());

                PolyForm r3 = l3v + l3_twisted(tp, y, x, z);
                l3a.count(r3.is_zero(),
                          at3(fam.names[i], fam.names[j], fam.names[k]) + " swap 1,2",
                          r3.str());
                PolyForm r4 = l3v + l3_twisted(tp, x, z, y);
                l3a.count(r4.is_zero(),
                          at3(fam.names[i], fam.names[j], fam.names[k]) + " swap 2,3",
                          r4.str());
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
                        pi_bracket(tp, w, l3_twisted(tp, x, y, z)) -
                        pi_bracket(tp, x, l3_twisted(tp, w, y, z)) +
                        pi_bracket(tp, y, l3_twisted(tp, w, x, z)) +
                        pi_bracket(tp, l3_twisted(tp, w, x, y), z) -
                        l3_twisted(tp, pi_bracket(tp, w, x), y, z) -
                        l3_twisted(tp, x, pi_bracket(tp, w, y), z) -
                        l3_twisted(tp, x, y, pi_bracket(tp, w, z)) +
                        l3_twisted(tp, w, pi_bracket(tp, x, y), z) +
                        l3_twisted(tp, w, y, pi_bracket(tp, x, z)) -
                        l3_twisted(tp, w, x, pi_bracket(tp, y, z));
                    cf.count(res.is_zero(),
                             at4(fam4.names[i], fam4.names[j], fam4.names[k],
                                 fam4.names[l]),
                             res.str());
                }

    return rep;
}

VerifyReport check_h_twisted_lie_algebroid(const TwistedPoisson& tp, const FormFamily& fam,
                                           const ScalarFamily& scalars,
                                           const FormFamily& fam4) {
    VerifyReport rep;
    rep.subject = "quasi Lie algebroid on 1-forms";
    const size_t m = fam.size();
    const size_t s = scalars.size();

    CheckResult& cyc = rep.add("[x,[y,z]] + [y,[z,x]] + [z,[x,y]] = l3(x,y,z)", "cyclic-vs-h");
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j)
            for (size_t k = 0; k < m; ++k) {
                const auto& x = fam.elems[i];
                const auto& y = fam.elems[j];
                const auto& z = fam.elems[k];
                PolyForm res = l3_twisted(tp, x, y, z) -
                               pi_bracket(tp, x, pi_bracket(tp, y, z)) -
                               pi_bracket(tp, y, pi_bracket(tp, z, x)) -
                               pi_bracket(tp, z, pi_bracket(tp, x, y));
                cyc.count(res.is_zero(), at3(fam.names[i], fam.names[j], fam.names[k]),
                          res.str());
            }

    CheckResult& lr = rep.add("[xi, f eta] = f [xi, eta] + (a(xi) f) eta", "leibniz-rule");
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j)
            for (size_t u = 0; u < s; ++u) {
                const auto& xi = fam.elems[i];
                const auto& eta = fam.elems[j];
                const auto& f = scalars.elems[u];
                PolyForm res = pi_bracket(tp, xi, eta).scaled(f) +
                               eta.scaled(vf_apply(sharp(tp.pi, xi), f)) -
                               pi_bracket(tp, xi, eta.scaled(f));
                lr.count(res.is_zero(), at3(fam.names[i], scalars.names[u], fam.names[j]),
                         res.str());
            }

    CheckResult& dh = rep.add("alternating coherence of l3 on 4-tuples", "dh-coherence");
    const size_t m4 = fam4.size();
    for (size_t i = 0; i < m4; ++i)
        for (size_t j = 0; j < m4; ++j)
            for (size_t k = 0; k < m4; ++k)
                for (size_t l = 0; l < m4; ++l) {
                    const PolyForm* e[4] = {&fam4.elems[i], &fam4.elems[j],
                                            &fam4.elems[k], &fam4.elems[l]};
                    PolyForm res(tp.n, 1);
                    for (size_t a = 0; a < 4; ++a) {
                        const PolyForm* rest[3];
                        size_t t = 0;
                        for (size_t b = 0; b < 4; ++b)
                            if (b != a) rest[t++] = e[b];
                        PolyForm term = pi_bracket(
                            tp, *e[a], l3_twisted(tp, *rest[0], *rest[1], *rest[2]));
                        res = (a % 2 == 0) ? res + term : res - term;
                    }
                    for (size_t a = 0; a < 4; ++a)
                        for (size_t b = a + 1; b < 4; ++b) {
                            const PolyForm* rest[2];
                            size_t t = 0;
                            for (size_t c = 0; c < 4; ++c)
                                if (c != a && c != b) rest[t++] = e[c];
                            PolyForm term = l3_twisted(tp, pi_bracket(tp, *e[a], *e[b]),
                                                       *rest[0], *rest[1]);
                            res = ((a + b) % 2 == 0) ? res + term : res - term;
                        }
                    dh.count(res.is_zero(),
                             at4(fam4.names[i], fam4.names[j], fam4.names[k],
                                 fam4.names[l]),
                             res.str());
                }

    return rep;
}

GeneralizedSection graph_section(const TwistedPoisson& tp, const PolyForm& xi) {
    return {sharp(tp.pi, xi), xi};
}

VerifyReport check_graph_dirac(const TwistedPoisson& tp, const FormFamily& fam) {
    VerifyReport rep;
    rep.subject = "graph of the bivector inside the generalized tangent bundle";
    ExactTca t = ExactTca::make(tp.n, tp.h);
    const size_t m = fam.size();

    CheckResult& iso = rep.add("<graph xi, graph eta> = 0", "isotropic");
    CheckResult& twine =
        rep.add("form part of [[graph xi, graph eta]] = [xi, eta]", "intertwine");
    CheckResult& close =
        rep.add("[[graph xi, graph eta]] = graph of its form part", "closure");
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j) {
            const auto& xi = fam.elems[i];
            const auto& eta = fam.elems[j];
            GeneralizedSection gx = graph_section(tp, xi);
            GeneralizedSection gy = graph_section(tp, eta);

            Poly p = pairing(gx, gy);
            iso.count(p.is_zero(), at2(fam.names[i], fam.names[j]), p.str());

            GeneralizedSection br = dorfman(t, gx, gy);
            PolyForm fres = pi_bracket(tp, xi, eta) - br.xi;
            twine.count(fres.is_zero(), at2(fam.names[i], fam.names[j]), fres.str());

            PolyMultivector vres = br.x - sharp(tp.pi, br.xi);
            close.count(vres.is_zero(), at2(fam.names[i], fam.names[j]), vres.str());
        }
    return rep;
}

namespace {

void enumerate_exps(size_t n, size_t budget, std::vector<size_t>& cur,
                    std::vector<std::vector<size_t>>& out) {
    if (cur.size() == n) {
        out.push_back(cur);
        return;
    }
    for (size_t e = 0; e <= budget; ++e) {
        cur.push_back(e);
        enumerate_exps(n, budget - e, cur, out);
        cur.pop_back();
    }
}

} // namespace

HSolutions solve_h_for_pi(const PolyMultivector& pi, size_t max_degree) {
    if (pi.deg != 2) throw ShapeError("background solve: need a bivector");
    const size_t n = pi.n;

    std::vector<std::vector<size_t>> mons;
    std::vector<size_t> cur;
    enumerate_exps(n, max_degree, cur, mons);

    std::vector<PolyForm> basis;
    for (size_t a = 0; a < n; ++a)
        for (size_t b = a + 1; b < n; ++b)
            for (size_t c = b + 1; c < n; ++c)
                for (const auto& e : mons)
                    basis.push_back(
                        form_monomial(n, {a, b, c}, Poly::monomial(n, e, Rat(1))));

    PolyMultivector target = schouten_sq(pi);
    std::vector<PolyMultivector> cols;
    cols.reserve(basis.size());
    for (const auto& hb : basis) cols.push_back(triple_sharp(pi, hb).scaled(Rat(1, 2)));

    // Shared coordinates: one row per (component tuple, monomial) pair that
    // occurs anywhere in the target or in any column.
    std::map<std::pair<IdxTuple, std::vector<size_t>>, size_t> rows;
    auto touch = [&](const PolyMultivector& mv) {
        for (const auto& [idx, p] : mv.comp)
            for (const auto& [e, c] : p.terms())
                rows.try_emplace({idx, e}, rows.size());
    };
    touch(target);
    for (const auto& col : cols) touch(col);

    HSolutions blank;
    if (rows.empty()) {
        // No coordinate is constrained: the defect is already zero and the
        // bivector contracts every candidate background to zero, so anything
        // solves the problem.
        blank.solvable = true;
        blank.particular = PolyForm(n, 3);
        blank.homogeneous = basis;
        return blank;
    }

    Mat a = mat_zero(rows.size(), basis.size());
    Vec rhs = vec_zero(rows.size());
    for (const auto& [idx, p] : target.comp)
        for (const auto& [e, c] : p.terms()) rhs[rows.at({idx, e})] = c;
    for (size_t k = 0; k < cols.size(); ++k)
        for (const auto& [idx, p] : cols[k].comp)
            for (const auto& [e, c] : p.terms()) a[rows.at({idx, e})][k] = c;

    HSolutions out;
    out.particular = PolyForm(n, 3);
    auto x = solve(a, rhs);
    if (x) {
        out.solvable = true;
        for (size_t k = 0; k < basis.size(); ++k)
            if ((*x)[k] != 0) out.particular = out.particular + basis[k].scaled((*x)[k]);
    }
    for (const auto& kv : kernel_basis(a)) {
        PolyForm hform(n, 3);
        for (size_t k = 0; k < basis.size(); ++k)
            if (kv[k] != 0) hform = hform + basis[k].scaled(kv[k]);
        out.homogeneous.push_back(hform);
    }
    return out;
}

} // namespace l2v
