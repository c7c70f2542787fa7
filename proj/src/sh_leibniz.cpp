#include "l2v/sh_leibniz.hpp"

#include "l2v/errors.hpp"

namespace l2v {

namespace {

std::string tuple_str(const std::vector<std::pair<const FinSpace*, size_t>>& slots) {
    std::string s = "(";
    for (size_t k = 0; k < slots.size(); ++k) {
        if (k) s += ",";
        s += slots[k].first->prefix + std::to_string(slots[k].second + 1);
    }
    return s + ")";
}

} // namespace

TwoTermComplex TwoTermComplex::make(size_t dim_v1, size_t dim_v0, Mat d_matrix) {
    TwoTermComplex c;
    c.v1 = FinSpace{dim_v1, "m"};
    c.v0 = FinSpace{dim_v0, "e"};
    if (mat_rows(d_matrix) != dim_v0 || (dim_v1 > 0 && mat_cols(d_matrix) != dim_v1))
        throw ShapeError("TwoTermComplex: d must be a dim(V0) x dim(V1) matrix");
    c.d = LinearMap{c.v1, c.v0, std::move(d_matrix)};
    return c;
}

TwoTermComplex TwoTermComplex::zero_d(size_t dim_v1, size_t dim_v0) {
    return make(dim_v1, dim_v0, mat_zero(dim_v0, dim_v1));
}

ShLeibniz2 ShLeibniz2::zero(size_t dim_v1, size_t dim_v0, Mat d_matrix) {
    ShLeibniz2 a;
    a.c = TwoTermComplex::make(dim_v1, dim_v0, std::move(d_matrix));
    a.l2_00 = StructureTensor::zero({a.c.v0, a.c.v0}, a.c.v0);
    a.l2_01 = StructureTensor::zero({a.c.v0, a.c.v1}, a.c.v1);
    a.l2_10 = StructureTensor::zero({a.c.v1, a.c.v0}, a.c.v1);
    a.l3 = StructureTensor::zero({a.c.v0, a.c.v0, a.c.v0}, a.c.v1);
    return a;
}

void validate_shapes(const ShLeibniz2& a) {
    const FinSpace& v0 = a.c.v0;
    const FinSpace& v1 = a.c.v1;
    auto check = [](const StructureTensor& t, std::vector<size_t> src, size_t dst,
                    const char* name) {
        if (t.sources.size() != src.size() || t.target.dim != dst)
            throw ShapeError(std::string(name) + ": wrong shape");
        for (size_t k = 0; k < src.size(); ++k)
            if (t.sources[k].dim != src[k])
                throw ShapeError(std::string(name) + ": wrong source dimension");
        size_t total = 1;
        for (size_t d : src) total *= d;
        if (t.entries.size() != total) throw ShapeError(std::string(name) + ": wrong entry count");
        for (const Vec& v : t.entries)
            if (v.size() != dst) throw ShapeError(std::string(name) + ": wrong entry size");
    };
    if (mat_rows(a.c.d.m) != v0.dim || (v1.dim > 0 && mat_cols(a.c.d.m) != v1.dim))
        throw ShapeError("d: wrong matrix shape");
    check(a.l2_00, {v0.dim, v0.dim}, v0.dim, "l2_00");
    check(a.l2_01, {v0.dim, v1.dim}, v1.dim, "l2_01");
    check(a.l2_10, {v1.dim, v0.dim}, v1.dim, "l2_10");
    check(a.l3, {v0.dim, v0.dim, v0.dim}, v1.dim, "l3");
}

VerifyReport check_sh_leibniz(const ShLeibniz2& a) {
    validate_shapes(a);
    const FinSpace& v0 = a.c.v0;
    const FinSpace& v1 = a.c.v1;
    const size_t n0 = v0.dim, n1 = v1.dim;

    VerifyReport rep;
    rep.subject = "two-term sh Leibniz algebra";

    auto E = [&](size_t i) { return basis_vec(n0, i); };
    auto M = [&](size_t j) { return basis_vec(n1, j); };

    // (a)  d l2(x,m) = l2(x, d m)
    {
        CheckResult& c = rep.add("d l2(x,m) = l2(x,dm)", "(a)");
        for (size_t i = 0; i < n0; ++i)
            for (size_t j = 0; j < n1; ++j) {
                Vec lhs = a.d_of(a.l2_01.at({i, j}));
                Vec rhs = a.b00(E(i), a.d_of(M(j)));
                Vec res = vec_sub(rhs, lhs);
                c.count(vec_is_zero(res), tuple_str({{&v0, i}, {&v1, j}}), render_vec(res, v0));
            }
    }
    // (b)  d l2(m,x) = l2(d m, x)
    {
        CheckResult& c = rep.add("d l2(m,x) = l2(dm,x)", "(b)");
        for (size_t j = 0; j < n1; ++j)
            for (size_t i = 0; i < n0; ++i) {
                Vec lhs = a.d_of(a.l2_10.at({j, i}));
                Vec rhs = a.b00(a.d_of(M(j)), E(i));
                Vec res = vec_sub(rhs, lhs);
                c.count(vec_is_zero(res), tuple_str({{&v1, j}, {&v0, i}}), render_vec(res, v0));
            }
    }
    // (c)  l2(d m, n) = l2(m, d n)
    {
        CheckResult& c = rep.add("l2(dm,n) = l2(m,dn)", "(c)");
        for (size_t j = 0; j < n1; ++j)
            for (size_t k = 0; k < n1; ++k) {
                Vec lhs = a.b01(a.d_of(M(j)), M(k));
                Vec rhs = a.b10(M(j), a.d_of(M(k)));
                Vec res = vec_sub(rhs, lhs);
                c.count(vec_is_zero(res), tuple_str({{&v1, j}, {&v1, k}}), render_vec(res, v1));
            }
    }
    // (d)  d l3(x,y,z) = l2(x,l2(y,z)) - l2(l2(x,y),z) - l2(y,l2(x,z))
    {
        CheckResult& c = rep.add("d l3 = degree-0 bracket defect", "(d)");
        for (size_t i = 0; i < n0; ++i)
            for (size_t j = 0; j < n0; ++j)
                for (size_t k = 0; k < n0; ++k) {
                    Vec lhs = a.d_of(a.l3.at({i, j, k}));
                    Vec rhs =
                        vec_sub(vec_sub(a.b00(E(i), a.l2_00.at({j, k})),
                                        a.b00(a.l2_00.at({i, j}), E(k))),
                                a.b00(E(j), a.l2_00.at({i, k})));
                    Vec res = vec_sub(rhs, lhs);
                    c.count(vec_is_zero(res), tuple_str({{&v0, i}, {&v0, j}, {&v0, k}}),
                            render_vec(res, v0));
                }
    }
    // (e1)  l3(x,y,dm) = l2(x,l2(y,m)) - l2(l2(x,y),m) - l2(y,l2(x,m))
    {
        CheckResult& c = rep.add("l3(x,y,dm) = mixed defect", "(e1)");
        for (size_t i = 0; i < n0; ++i)
            for (size_t j = 0; j < n0; ++j)
                for (size_t k = 0; k < n1; ++k) {
                    Vec lhs = a.t3(E(i), E(j), a.d_of(M(k)));
                    Vec rhs = vec_sub(vec_sub(a.b01(E(i), a.l2_01.at({j, k})),
                                              a.b01(a.l2_00.at({i, j}), M(k))),
                                      a.b01(E(j), a.l2_01.at({i, k})));
                    Vec res = vec_sub(rhs, lhs);
                    c.count(vec_is_zero(res), tuple_str({{&v0, i}, {&v0, j}, {&v1, k}}),
                            render_vec(res, v1));
                }
    }
    // (e2)  l3(x,dm,y) = l2(x,l2(m,y)) - l2(l2(x,m),y) - l2(m,l2(x,y))
    {
        CheckResult& c = rep.add("l3(x,dm,y) = mixed defect", "(e2)");
        for (size_t i = 0; i < n0; ++i)
            for (size_t k = 0; k < n1; ++k)
                for (size_t j = 0; j < n0; ++j) {
                    Vec lhs = a.t3(E(i), a.d_of(M(k)), E(j));
                    Vec rhs = vec_sub(vec_sub(a.b01(E(i), a.l2_10.at({k, j})),
                                              a.b10(a.l2_01.at({i, k}), E(j))),
                                      a.b10(M(k), a.l2_00.at({i, j})));
                    Vec res = vec_sub(rhs, lhs);
                    c.count(vec_is_zero(res), tuple_str({{&v0, i}, {&v1, k}, {&v0, j}}),
                            render_vec(res, v1));
                }
    }
    // (e3)  l3(dm,x,y) = l2(m,l2(x,y)) - l2(l2(m,x),y) - l2(x,l2(m,y))
    {
        CheckResult& c = rep.add("l3(dm,x,y) = mixed defect", "(e3)");
        for (size_t k = 0; k < n1; ++k)
            for (size_t i = 0; i < n0; ++i)
                for (size_t j = 0; j < n0; ++j) {
                    Vec lhs = a.t3(a.d_of(M(k)), E(i), E(j));
                    Vec rhs = vec_sub(vec_sub(a.b10(M(k), a.l2_00.at({i, j})),
                                              a.b10(a.l2_10.at({k, i}), E(j))),
                                      a.b01(E(i), a.l2_10.at({k, j})));
                    Vec res = vec_sub(rhs, lhs);
                    c.count(vec_is_zero(res), tuple_str({{&v1, k}, {&v0, i}, {&v0, j}}),
                            render_vec(res, v1));
                }
    }
    // (f)  ten-term coherence between l2 and l3 on degree-0 4-tuples
    {
        CheckResult& c = rep.add("l2/l3 coherence on 4-tuples", "(f)");
        for (size_t w = 0; w < n0; ++w)
            for (size_t x = 0; x < n0; ++x)
                for (size_t y = 0; y < n0; ++y)
                    for (size_t z = 0; z < n0; ++z) {
                        Vec acc = a.b01(E(w), a.l3.at({x, y, z}));
                        acc = vec_sub(acc, a.b01(E(x), a.l3.at({w, y, z})));
                        acc = vec_add(acc, a.b01(E(y), a.l3.at({w, x, z})));
                        acc = vec_add(acc, a.b10(a.l3.at({w, x, y}), E(z)));
                        acc = vec_sub(acc, a.t3(a.l2_00.at({w, x}), E(y), E(z)));
                        acc = vec_sub(acc, a.t3(E(x), a.l2_00.at({w, y}), E(z)));
                        acc = vec_sub(acc, a.t3(E(x), E(y), a.l2_00.at({w, z})));
                        acc = vec_add(acc, a.t3(E(w), a.l2_00.at({x, y}), E(z)));
                        acc = vec_add(acc, a.t3(E(w), E(y), a.l2_00.at({x, z})));
                        acc = vec_sub(acc, a.t3(E(w), E(x), a.l2_00.at({y, z})));
                        c.count(vec_is_zero(acc),
                                tuple_str({{&v0, w}, {&v0, x}, {&v0, y}, {&v0, z}}),
                                render_vec(acc, v1));
                    }
    }
    return rep;
}

std::string ShClass::str() const {
    std::string s;
    if (dg) s += s.empty() ? "dg" : "|dg";
    if (skeletal) s += s.empty() ? "skeletal" : "|skeletal";
    if (l_infinity) s += s.empty() ? "l-infinity" : "|l-infinity";
    return s.empty() ? "none" : s;
}

ShClass classify(const ShLeibniz2& a) {
    validate_shapes(a);
    ShClass cl;
    cl.dg = a.l3.is_zero();
    cl.skeletal = a.c.d.is_zero();
    const size_t n0 = a.c.v0.dim, n1 = a.c.v1.dim;
    bool anti = true;
    for (size_t i = 0; i < n0 && anti; ++i)
        for (size_t j = 0; j < n0 && anti; ++j)
            anti = vec_is_zero(vec_add(a.l2_00.at({i, j}), a.l2_00.at({j, i})));
    for (size_t i = 0; i < n0 && anti; ++i)
        for (size_t j = 0; j < n1 && anti; ++j)
            anti = vec_is_zero(vec_add(a.l2_01.at({i, j}), a.l2_10.at({j, i})));
    // l3 totally antisymmetric: adjacent swaps generate all permutations.
    for (size_t i = 0; i < n0 && anti; ++i)
        for (size_t j = 0; j < n0 && anti; ++j)
            for (size_t k = 0; k < n0 && anti; ++k)
                anti = vec_is_zero(vec_add(a.l3.at({i, j, k}), a.l3.at({j, i, k}))) &&
                       vec_is_zero(vec_add(a.l3.at({i, j, k}), a.l3.at({i, k, j})));
    cl.l_infinity = anti;
    return cl;
}

ShMorphism ShMorphism::identity(const ShLeibniz2& a) {
    return ShMorphism{LinearMap::identity(a.c.v0), LinearMap::identity(a.c.v1),
                      StructureTensor::zero({a.c.v0, a.c.v0}, a.c.v1)};
}

VerifyReport check_morphism(const ShMorphism& f, const ShLeibniz2& src, const ShLeibniz2& dst) {
    validate_shapes(src);
    validate_shapes(dst);
    if (f.f0.src.dim != src.c.v0.dim || f.f0.dst.dim != dst.c.v0.dim)
        throw ShapeError("check_morphism: f0 has wrong shape");
    if (f.f1.src.dim != src.c.v1.dim || f.f1.dst.dim != dst.c.v1.dim)
        throw ShapeError("check_morphism: f1 has wrong shape");
    if (f.f2.sources.size() != 2 || f.f2.sources[0].dim != src.c.v0.dim ||
        f.f2.sources[1].dim != src.c.v0.dim || f.f2.target.dim != dst.c.v1.dim)
        throw ShapeError("check_morphism: f2 has wrong shape");

    const FinSpace& v0 = src.c.v0;
    const FinSpace& v1 = src.c.v1;
    const size_t n0 = v0.dim, n1 = v1.dim;
    auto E = [&](size_t i) { return basis_vec(n0, i); };
    auto M = [&](size_t j) { return basis_vec(n1, j); };

    VerifyReport rep;
    rep.subject = "sh Leibniz morphism";

    {
        CheckResult& c = rep.add("f0 d = d' f1", "chain");
        for (size_t j = 0; j < n1; ++j) {
            Vec lhs = f.f0.apply(src.d_of(M(j)));
            Vec rhs = dst.d_of(f.f1.apply(M(j)));
            Vec res = vec_sub(rhs, lhs);
            c.count(vec_is_zero(res), tuple_str({{&v1, j}}), render_vec(res, dst.c.v0));
        }
    }
    {
        CheckResult& c = rep.add("l2'(f0 x,f0 y) - f0 l2(x,y) = d' f2(x,y)", "(c1-00)");
        for (size_t i = 0; i < n0; ++i)
            for (size_t j = 0; j < n0; ++j) {
                Vec lhs = vec_sub(dst.b00(f.f0.apply(E(i)), f.f0.apply(E(j))),
                                  f.f0.apply(src.l2_00.at({i, j})));
                Vec rhs = dst.d_of(f.f2.at({i, j}));
                Vec res = vec_sub(rhs, lhs);
                c.count(vec_is_zero(res), tuple_str({{&v0, i}, {&v0, j}}),
                        render_vec(res, dst.c.v0));
            }
    }
    {
        CheckResult& c = rep.add("l2'(f0 x,f1 m) - f1 l2(x,m) = f2(x,dm)", "(c1-01)");
        for (size_t i = 0; i < n0; ++i)
            for (size_t j = 0; j < n1; ++j) {
                Vec lhs = vec_sub(dst.b01(f.f0.apply(E(i)), f.f1.apply(M(j))),
                                  f.f1.apply(src.l2_01.at({i, j})));
                Vec rhs = f.f2.apply({E(i), src.d_of(M(j))});
                Vec res = vec_sub(rhs, lhs);
                c.count(vec_is_zero(res), tuple_str({{&v0, i}, {&v1, j}}),
                        render_vec(res, dst.c.v1));
            }
    }
    {
        CheckResult& c = rep.add("l2'(f1 m,f0 x) - f1 l2(m,x) = f2(dm,x)", "(c1-10)");
        for (size_t j = 0; j < n1; ++j)
            for (size_t i = 0; i < n0; ++i) {
                Vec lhs = vec_sub(dst.b10(f.f1.apply(M(j)), f.f0.apply(E(i))),
                                  f.f1.apply(src.l2_10.at({j, i})));
                Vec rhs = f.f2.apply({src.d_of(M(j)), E(i)});
                Vec res = vec_sub(rhs, lhs);
                c.count(vec_is_zero(res), tuple_str({{&v1, j}, {&v0, i}}),
                        render_vec(res, dst.c.v1));
            }
    }
    {
        CheckResult& c = rep.add("f2/l3 coherence on triples", "(c2)");
        for (size_t i = 0; i < n0; ++i)
            for (size_t j = 0; j < n0; ++j)
                for (size_t k = 0; k < n0; ++k) {
                    Vec acc = f.f1.apply(src.l3.at({i, j, k}));
                    acc = vec_add(acc, dst.b01(f.f0.apply(E(i)), f.f2.at({j, k})));
                    acc = vec_sub(acc, dst.b01(f.f0.apply(E(j)), f.f2.at({i, k})));
                    acc = vec_sub(acc, dst.b10(f.f2.at({i, j}), f.f0.apply(E(k))));
                    acc = vec_sub(acc, f.f2.apply({src.l2_00.at({i, j}), E(k)}));
                    acc = vec_add(acc, f.f2.apply({E(i), src.l2_00.at({j, k})}));
                    acc = vec_sub(acc, f.f2.apply({E(j), src.l2_00.at({i, k})}));
                    acc = vec_sub(acc,
                                  dst.t3(f.f0.apply(E(i)), f.f0.apply(E(j)), f.f0.apply(E(k))));
                    c.count(vec_is_zero(acc), tuple_str({{&v0, i}, {&v0, j}, {&v0, k}}),
                            render_vec(acc, dst.c.v1));
                }
    }
    return rep;
}

ShMorphism compose_morphisms(const ShMorphism& g, const ShMorphism& f) {
    if (f.f0.dst.dim != g.f0.src.dim || f.f1.dst.dim != g.f1.src.dim)
        throw ShapeError("compose_morphisms: middle spaces differ");
    ShMorphism h;
    h.f0 = compose_linear(g.f0, f.f0);
    h.f1 = compose_linear(g.f1, f.f1);
    h.f2 = StructureTensor::zero({f.f0.src, f.f0.src}, g.f1.dst);
    const size_t n0 = f.f0.src.dim;
    for (size_t i = 0; i < n0; ++i)
        for (size_t j = 0; j < n0; ++j) {
            Vec xi = f.f0.apply(basis_vec(n0, i));
            Vec xj = f.f0.apply(basis_vec(n0, j));
            h.f2.at_mut({i, j}) = vec_add(g.f1.apply(f.f2.at({i, j})), g.f2.apply({xi, xj}));
        }
    return h;
}

Vec tv_source(const TwoVectorElement& e) { return e.obj; }

Vec tv_target(const ShLeibniz2& a, const TwoVectorElement& e) {
    return vec_add(e.obj, a.d_of(e.mor));
}

TwoVectorElement functor_bracket(const ShLeibniz2& a, const TwoVectorElement& p,
                                 const TwoVectorElement& q) {
    if (p.obj.size() != a.c.v0.dim || q.obj.size() != a.c.v0.dim ||
        p.mor.size() != a.c.v1.dim || q.mor.size() != a.c.v1.dim)
        throw ShapeError("functor_bracket: element not in V0 ⊕ V1");
    TwoVectorElement r;
    r.obj = a.b00(p.obj, q.obj);
    r.mor = vec_add(vec_add(a.b01(p.obj, q.mor), a.b10(p.mor, q.obj)),
                    a.b10(p.mor, a.d_of(q.mor)));
    return r;
}

TwoVectorElement jacobiator(const ShLeibniz2& a, const Vec& x, const Vec& y, const Vec& z) {
    TwoVectorElement j;
    j.obj = a.b00(a.b00(x, y), z);
    j.mor = a.t3(x, y, z);
    return j;
}

Vec jacobiator_defect(const ShLeibniz2& a, const Vec& x, const Vec& y, const Vec& z) {
    Vec target = tv_target(a, jacobiator(a, x, y, z));
    Vec expected = vec_sub(a.b00(x, a.b00(y, z)), a.b00(y, a.b00(x, z)));
    return vec_sub(target, expected);
}

} // namespace l2v
