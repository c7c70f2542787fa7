#include "l2v/crossed_module.hpp"

#include "l2v/errors.hpp"

namespace l2v {

namespace {

std::string pair_str(const FinSpace& a, size_t i, const FinSpace& b, size_t j) {
    return "(" + a.prefix + std::to_string(i + 1) + "," + b.prefix + std::to_string(j + 1) + ")";
}

std::string triple_str(const FinSpace& a, size_t i, const FinSpace& b, size_t j,
                       const FinSpace& c, size_t k) {
    return "(" + a.prefix + std::to_string(i + 1) + "," + b.prefix + std::to_string(j + 1) + "," +
           c.prefix + std::to_string(k + 1) + ")";
}

} // namespace

LeibnizAlgebra LeibnizAlgebra::zero(size_t dim) {
    FinSpace s{dim, "e"};
    return LeibnizAlgebra{s, StructureTensor::zero({s, s}, s)};
}

VerifyReport check_leibniz(const LeibnizAlgebra& g) {
    const size_t n = g.space.dim;
    if (g.bracket.sources.size() != 2 || g.bracket.sources[0].dim != n ||
        g.bracket.sources[1].dim != n || g.bracket.target.dim != n)
        throw ShapeError("check_leibniz: bracket shape mismatch");
    VerifyReport rep;
    rep.subject = "Leibniz algebra";
    CheckResult& c = rep.add("[x,[y,z]] = [[x,y],z] + [y,[x,z]]", "leibniz");
    auto E = [&](size_t i) { return basis_vec(n, i); };
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            for (size_t k = 0; k < n; ++k) {
                Vec lhs = g.br(E(i), g.bracket.at({j, k}));
                Vec rhs = vec_add(g.br(g.bracket.at({i, j}), E(k)),
                                  g.br(E(j), g.bracket.at({i, k})));
                Vec res = vec_sub(rhs, lhs);
                c.count(vec_is_zero(res), triple_str(g.space, i, g.space, j, g.space, k),
                        render_vec(res, g.space));
            }
    return rep;
}

LeibnizRep LeibnizRep::trivial(const LeibnizAlgebra& g, size_t module_dim) {
    FinSpace v{module_dim, "m"};
    return LeibnizRep{g, v, StructureTensor::zero({g.space, v}, v),
                      StructureTensor::zero({v, g.space}, v)};
}

LeibnizRep LeibnizRep::adjoint(const LeibnizAlgebra& g) {
    FinSpace v{g.space.dim, "m"};
    StructureTensor left = StructureTensor::zero({g.space, v}, v);
    StructureTensor right = StructureTensor::zero({v, g.space}, v);
    for (size_t i = 0; i < g.space.dim; ++i)
        for (size_t j = 0; j < g.space.dim; ++j) {
            left.at_mut({i, j}) = g.bracket.at({i, j});
            right.at_mut({i, j}) = g.bracket.at({i, j});
        }
    return LeibnizRep{g, v, left, right};
}

VerifyReport check_representation(const LeibnizRep& rep) {
    const size_t n = rep.algebra.space.dim;
    const size_t m = rep.module.dim;
    if (rep.left.sources.size() != 2 || rep.left.sources[0].dim != n ||
        rep.left.sources[1].dim != m || rep.left.target.dim != m)
        throw ShapeError("check_representation: left action shape mismatch");
    if (rep.right.sources.size() != 2 || rep.right.sources[0].dim != m ||
        rep.right.sources[1].dim != n || rep.right.target.dim != m)
        throw ShapeError("check_representation: right action shape mismatch");

    VerifyReport out;
    out.subject = "Leibniz representation";
    const LeibnizAlgebra& g = rep.algebra;
    auto E = [&](size_t i) { return basis_vec(n, i); };
    auto U = [&](size_t i) { return basis_vec(m, i); };

    {
        CheckResult& c = out.add("l_[x,y] = l_x l_y - l_y l_x", "rep-left");
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j)
                for (size_t u = 0; u < m; ++u) {
                    Vec lhs = rep.lact(g.bracket.at({i, j}), U(u));
                    Vec rhs = vec_sub(rep.lact(E(i), rep.left.at({j, u})),
                                      rep.lact(E(j), rep.left.at({i, u})));
                    Vec res = vec_sub(rhs, lhs);
                    c.count(vec_is_zero(res), triple_str(g.space, i, g.space, j, rep.module, u),
                            render_vec(res, rep.module));
                }
    }
    {
        CheckResult& c = out.add("r_[x,y] = l_x r_y - r_y l_x", "rep-right");
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j)
                for (size_t u = 0; u < m; ++u) {
                    Vec lhs = rep.ract(U(u), g.bracket.at({i, j}));
                    Vec rhs = vec_sub(rep.lact(E(i), rep.right.at({u, j})),
                                      rep.ract(rep.left.at({i, u}), E(j)));
                    Vec res = vec_sub(rhs, lhs);
                    c.count(vec_is_zero(res), triple_str(g.space, i, g.space, j, rep.module, u),
                            render_vec(res, rep.module));
                }
    }
    {
        CheckResult& c = out.add("r_y l_x = -r_y r_x", "rep-mixed");
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j)
                for (size_t u = 0; u < m; ++u) {
                    Vec lhs = rep.ract(rep.left.at({i, u}), E(j));
                    Vec rhs = vec_scale(Rat(-1), rep.ract(rep.right.at({u, i}), E(j)));
                    Vec res = vec_sub(rhs, lhs);
                    c.count(vec_is_zero(res), triple_str(g.space, i, g.space, j, rep.module, u),
                            render_vec(res, rep.module));
                }
    }
    return out;
}

VerifyReport check_crossed_module(const CrossedModule& cm) {
    const size_t ng = cm.g.space.dim;
    const size_t nh = cm.h.space.dim;
    if (mat_rows(cm.mu.m) != nh || (ng > 0 && mat_cols(cm.mu.m) != ng))
        throw ShapeError("check_crossed_module: mu shape mismatch");
    if (cm.left.sources.size() != 2 || cm.left.sources[0].dim != nh ||
        cm.left.sources[1].dim != ng || cm.left.target.dim != ng)
        throw ShapeError("check_crossed_module: left action shape mismatch");
    if (cm.right.sources.size() != 2 || cm.right.sources[0].dim != ng ||
        cm.right.sources[1].dim != nh || cm.right.target.dim != ng)
        throw ShapeError("check_crossed_module: right action shape mismatch");

    VerifyReport out;
    out.subject = "crossed module of Leibniz algebras";
    out.append(check_leibniz(cm.g));
    out.checks.back().name = "g bracket Leibniz identity";
    out.checks.back().label = "g-leibniz";
    out.append(check_leibniz(cm.h));
    out.checks.back().name = "h bracket Leibniz identity";
    out.checks.back().label = "h-leibniz";
    {
        LeibnizRep rep{cm.h, cm.g.space, cm.left, cm.right};
        VerifyReport r = check_representation(rep);
        out.append(r);
    }

    auto G = [&](size_t i) { return basis_vec(ng, i); };
    auto H = [&](size_t i) { return basis_vec(nh, i); };
    FinSpace gsp = cm.g.space;
    FinSpace hsp{nh, "h"};

    {
        CheckResult& c = out.add("mu[g,g'] = [mu g, mu g']", "mu-morphism");
        for (size_t i = 0; i < ng; ++i)
            for (size_t j = 0; j < ng; ++j) {
                Vec lhs = cm.mu.apply(cm.g.bracket.at({i, j}));
                Vec rhs = cm.h.br(cm.mu.apply(G(i)), cm.mu.apply(G(j)));
                Vec res = vec_sub(rhs, lhs);
                c.count(vec_is_zero(res), pair_str(gsp, i, gsp, j), render_vec(res, cm.h.space));
            }
    }
    {
        CheckResult& c = out.add("mu equivariance: mu(l_h g)=[h,mu g], mu(r_h g)=[mu g,h]",
                                 "condition1");
        for (size_t a = 0; a < nh; ++a)
            for (size_t i = 0; i < ng; ++i) {
                Vec res1 = vec_sub(cm.h.br(H(a), cm.mu.apply(G(i))),
                                   cm.mu.apply(cm.left.at({a, i})));
                Vec res2 = vec_sub(cm.h.br(cm.mu.apply(G(i)), H(a)),
                                   cm.mu.apply(cm.right.at({i, a})));
                bool ok = vec_is_zero(res1) && vec_is_zero(res2);
                Vec res = vec_is_zero(res1) ? res2 : res1;
                c.count(ok, pair_str(hsp, a, gsp, i), render_vec(res, cm.h.space));
            }
    }
    {
        CheckResult& c = out.add("Peiffer: l_{mu g} g' = [g,g'] = r_{mu g'} g", "condition2");
        for (size_t i = 0; i < ng; ++i)
            for (size_t j = 0; j < ng; ++j) {
                Vec br = cm.g.bracket.at({i, j});
                Vec res1 = vec_sub(br, cm.lact(cm.mu.apply(G(i)), G(j)));
                Vec res2 = vec_sub(br, cm.ract(G(i), cm.mu.apply(G(j))));
                bool ok = vec_is_zero(res1) && vec_is_zero(res2);
                Vec res = vec_is_zero(res1) ? res2 : res1;
                c.count(ok, pair_str(gsp, i, gsp, j), render_vec(res, cm.g.space));
            }
    }
    {
        CheckResult& c = out.add("l_h [g,g'] = [l_h g, g'] + [g, l_h g']", "condition3");
        for (size_t a = 0; a < nh; ++a)
            for (size_t i = 0; i < ng; ++i)
                for (size_t j = 0; j < ng; ++j) {
                    Vec lhs = cm.lact(H(a), cm.g.bracket.at({i, j}));
                    Vec rhs = vec_add(cm.g.br(cm.left.at({a, i}), G(j)),
                                      cm.g.br(G(i), cm.left.at({a, j})));
                    Vec res = vec_sub(rhs, lhs);
                    c.count(vec_is_zero(res), triple_str(hsp, a, gsp, i, gsp, j),
                            render_vec(res, cm.g.space));
                }
    }
    {
        CheckResult& c = out.add("r_h [g,g'] = [g, r_h g'] - [g', r_h g]", "condition4");
        for (size_t a = 0; a < nh; ++a)
            for (size_t i = 0; i < ng; ++i)
                for (size_t j = 0; j < ng; ++j) {
                    Vec lhs = cm.ract(cm.g.bracket.at({i, j}), H(a));
                    Vec rhs = vec_sub(cm.g.br(G(i), cm.right.at({j, a})),
                                      cm.g.br(G(j), cm.right.at({i, a})));
                    Vec res = vec_sub(rhs, lhs);
                    c.count(vec_is_zero(res), triple_str(hsp, a, gsp, i, gsp, j),
                            render_vec(res, cm.g.space));
                }
    }
    {
        CheckResult& c = out.add("[l_h g + r_h g, g'] = 0", "condition5");
        for (size_t a = 0; a < nh; ++a)
            for (size_t i = 0; i < ng; ++i)
                for (size_t j = 0; j < ng; ++j) {
                    Vec res = cm.g.br(vec_add(cm.left.at({a, i}), cm.right.at({i, a})), G(j));
                    c.count(vec_is_zero(res), triple_str(hsp, a, gsp, i, gsp, j),
                            render_vec(res, cm.g.space));
                }
    }
    return out;
}

CrossedModule dg_to_crossed(const ShLeibniz2& a) {
    validate_shapes(a);
    if (!classify(a).dg)
        throw PreconditionError("dg_to_crossed: l3 must vanish");
    const size_t n1 = a.c.v1.dim, n0 = a.c.v0.dim;
    CrossedModule cm;
    cm.g.space = FinSpace{n1, "e"};
    cm.g.bracket = StructureTensor::zero({cm.g.space, cm.g.space}, cm.g.space);
    for (size_t i = 0; i < n1; ++i)
        for (size_t j = 0; j < n1; ++j)
            cm.g.bracket.at_mut({i, j}) = a.b10(basis_vec(n1, i), a.d_of(basis_vec(n1, j)));
    cm.h.space = FinSpace{n0, "e"};
    cm.h.bracket = a.l2_00;
    cm.h.bracket.sources = {cm.h.space, cm.h.space};
    cm.h.bracket.target = cm.h.space;
    cm.mu = LinearMap{cm.g.space, cm.h.space, a.c.d.m};
    cm.left = a.l2_01;
    cm.left.sources = {cm.h.space, cm.g.space};
    cm.left.target = cm.g.space;
    cm.right = a.l2_10;
    cm.right.sources = {cm.g.space, cm.h.space};
    cm.right.target = cm.g.space;
    return cm;
}

ShLeibniz2 crossed_to_dg(const CrossedModule& cm) {
    const size_t n1 = cm.g.space.dim, n0 = cm.h.space.dim;
    ShLeibniz2 a = ShLeibniz2::zero(n1, n0, cm.mu.m);
    a.l2_00.entries = cm.h.bracket.entries;
    a.l2_01.entries = cm.left.entries;
    a.l2_10.entries = cm.right.entries;
    return a;
}

SkeletalQuadruple skeletal_to_quadruple(const ShLeibniz2& a) {
    validate_shapes(a);
    if (!classify(a).skeletal)
        throw PreconditionError("skeletal_to_quadruple: d must vanish");
    SkeletalQuadruple q;
    q.g.space = FinSpace{a.c.v0.dim, "e"};
    q.g.bracket = a.l2_00;
    q.v = FinSpace{a.c.v1.dim, "m"};
    q.left = a.l2_01;
    q.right = a.l2_10;
    q.phi = a.l3;
    return q;
}

ShLeibniz2 quadruple_to_skeletal(const SkeletalQuadruple& q) {
    const size_t n1 = q.v.dim, n0 = q.g.space.dim;
    ShLeibniz2 a = ShLeibniz2::zero(n1, n0, mat_zero(n0, n1));
    a.l2_00.entries = q.g.bracket.entries;
    a.l2_01.entries = q.left.entries;
    a.l2_10.entries = q.right.entries;
    a.l3.entries = q.phi.entries;
    return a;
}

} // namespace l2v
