#include "l2v/builtin.hpp"

#include "l2v/errors.hpp"

namespace l2v::builtin {

LeibnizAlgebra abelian_leibniz(size_t dim) { return LeibnizAlgebra::zero(dim); }

LeibnizAlgebra nilpotent_pair() {
    LeibnizAlgebra g = LeibnizAlgebra::zero(2);
    g.bracket.at_mut({0, 0}) = basis_vec(2, 1);
    return g;
}

LeibnizAlgebra nonabelian_lie2() {
    LeibnizAlgebra g = LeibnizAlgebra::zero(2);
    g.bracket.at_mut({0, 1}) = basis_vec(2, 1);
    g.bracket.at_mut({1, 0}) = vec_scale(Rat(-1), basis_vec(2, 1));
    return g;
}

LeibnizAlgebra heisenberg3() {
    LeibnizAlgebra g = LeibnizAlgebra::zero(3);
    g.bracket.at_mut({0, 1}) = basis_vec(3, 2);
    g.bracket.at_mut({1, 0}) = vec_scale(Rat(-1), basis_vec(3, 2));
    return g;
}

LeibnizAlgebra broken_pair() {
    LeibnizAlgebra g = LeibnizAlgebra::zero(2);
    g.bracket.at_mut({0, 0}) = basis_vec(2, 0);
    return g;
}

ShLeibniz2 sh_zero(size_t dim_v1, size_t dim_v0) {
    return ShLeibniz2::zero(dim_v1, dim_v0, mat_zero(dim_v0, dim_v1));
}

ShLeibniz2 sh_from_algebra(const LeibnizAlgebra& g) {
    ShLeibniz2 a = sh_zero(0, g.space.dim);
    a.l2_00 = g.bracket;
    return a;
}

CrossedModule adjoint_crossed(const LeibnizAlgebra& g) {
    CrossedModule cm;
    cm.g = g;
    cm.h = g;
    cm.mu = LinearMap::identity(g.space);
    cm.left = g.bracket;
    cm.right = g.bracket;
    return cm;
}

ShLeibniz2 dg_nilpotent() { return crossed_to_dg(adjoint_crossed(nilpotent_pair())); }

ShLeibniz2 skeletal_l3() {
    ShLeibniz2 a = sh_zero(1, 3);
    a.l3.at_mut({0, 1, 2}) = basis_vec(1, 0);
    return a;
}

CrossedModule crossed_zero_actions() {
    LeibnizAlgebra g = nilpotent_pair();
    CrossedModule cm;
    cm.g = g;
    cm.h = g;
    cm.mu = LinearMap::identity(g.space);
    cm.left = StructureTensor::zero({g.space, g.space}, g.space);
    cm.right = StructureTensor::zero({g.space, g.space}, g.space);
    return cm;
}

CrossedModule product_extension(const LeibnizAlgebra& g, size_t pad) {
    const size_t dg = g.space.dim;
    const size_t dh = dg + pad;
    LeibnizAlgebra h = LeibnizAlgebra::zero(dh);
    for (size_t i = 0; i < dg; ++i)
        for (size_t j = 0; j < dg; ++j) {
            const Vec& v = g.bracket.at({i, j});
            Vec& target = h.bracket.at_mut({i, j});
            for (size_t t = 0; t < dg; ++t) target[t] = v[t];
        }

    CrossedModule cm;
    cm.g = g;
    cm.h = h;
    cm.mu = LinearMap::zero(g.space, h.space);
    for (size_t i = 0; i < dg; ++i) cm.mu.m[i][i] = 1;
    cm.left = StructureTensor::zero({h.space, g.space}, g.space);
    cm.right = StructureTensor::zero({g.space, h.space}, g.space);
    for (size_t a = 0; a < dg; ++a)
        for (size_t u = 0; u < dg; ++u) {
            cm.left.at_mut({a, u}) = g.bracket.at({a, u});
            cm.right.at_mut({u, a}) = g.bracket.at({u, a});
        }
    return cm;
}

CrossedModule abelian_mu0(const LeibnizRep& rep) {
    CrossedModule cm;
    cm.g = LeibnizAlgebra::zero(rep.module.dim);
    cm.h = rep.algebra;
    cm.mu = LinearMap::zero(cm.g.space, cm.h.space);
    cm.left = rep.left;
    cm.right = rep.right;
    return cm;
}

CrossedModule direct_sum(const CrossedModule& a, const CrossedModule& b) {
    const size_t ga = a.g.space.dim, gb = b.g.space.dim;
    const size_t ha = a.h.space.dim, hb = b.h.space.dim;

    auto embed = [](const Vec& v, size_t offset, size_t total) {
        Vec r = vec_zero(total);
        for (size_t i = 0; i < v.size(); ++i) r[offset + i] = v[i];
        return r;
    };

    CrossedModule cm;
    cm.g = LeibnizAlgebra::zero(ga + gb);
    cm.h = LeibnizAlgebra::zero(ha + hb);
    for (size_t i = 0; i < ga; ++i)
        for (size_t j = 0; j < ga; ++j)
            cm.g.bracket.at_mut({i, j}) = embed(a.g.bracket.at({i, j}), 0, ga + gb);
    for (size_t i = 0; i < gb; ++i)
        for (size_t j = 0; j < gb; ++j)
            cm.g.bracket.at_mut({ga + i, ga + j}) =
                embed(b.g.bracket.at({i, j}), ga, ga + gb);
    for (size_t i = 0; i < ha; ++i)
        for (size_t j = 0; j < ha; ++j)
            cm.h.bracket.at_mut({i, j}) = embed(a.h.bracket.at({i, j}), 0, ha + hb);
    for (size_t i = 0; i < hb; ++i)
        for (size_t j = 0; j < hb; ++j)
            cm.h.bracket.at_mut({ha + i, ha + j}) =
                embed(b.h.bracket.at({i, j}), ha, ha + hb);

    cm.mu = LinearMap::zero(cm.g.space, cm.h.space);
    for (size_t j = 0; j < ga; ++j)
        for (size_t i = 0; i < ha; ++i) cm.mu.m[i][j] = a.mu.m[i][j];
    for (size_t j = 0; j < gb; ++j)
        for (size_t i = 0; i < hb; ++i) cm.mu.m[ha + i][ga + j] = b.mu.m[i][j];

    cm.left = StructureTensor::zero({cm.h.space, cm.g.space}, cm.g.space);
    cm.right = StructureTensor::zero({cm.g.space, cm.h.space}, cm.g.space);
    for (size_t x = 0; x < ha; ++x)
        for (size_t u = 0; u < ga; ++u)
            cm.left.at_mut({x, u}) = embed(a.left.at({x, u}), 0, ga + gb);
    for (size_t x = 0; x < hb; ++x)
        for (size_t u = 0; u < gb; ++u)
            cm.left.at_mut({ha + x, ga + u}) = embed(b.left.at({x, u}), ga, ga + gb);
    for (size_t u = 0; u < ga; ++u)
        for (size_t x = 0; x < ha; ++x)
            cm.right.at_mut({u, x}) = embed(a.right.at({u, x}), 0, ga + gb);
    for (size_t u = 0; u < gb; ++u)
        for (size_t x = 0; x < hb; ++x)
            cm.right.at_mut({ga + u, ha + x}) = embed(b.right.at({u, x}), ga, ga + gb);
    return cm;
}

long Rng::pick(long lo, long hi) {
    std::uniform_int_distribution<long> dist(lo, hi);
    return dist(gen);
}

Vec random_vec(Rng& rng, size_t dim, long lo, long hi) {
    Vec v = vec_zero(dim);
    for (auto& c : v) c = rng.rat(lo, hi);
    return v;
}

Mat random_mat(Rng& rng, size_t rows, size_t cols, long lo, long hi) {
    Mat m = mat_zero(rows, cols);
    for (auto& row : m)
        for (auto& c : row) c = rng.rat(lo, hi);
    return m;
}

Mat random_invertible(Rng& rng, size_t dim, long lo, long hi) {
    if (dim == 0) return mat_zero(0, 0);
    for (;;) {
        Mat m = random_mat(rng, dim, dim, lo, hi);
        if (inverse(m)) return m;
    }
}

namespace {

// Columns of p^{-1}, i.e. the old-basis coordinates of each new basis vector.
std::vector<Vec> inverse_columns(const Mat& p) {
    auto inv = inverse(p);
    if (!inv) throw PreconditionError("basis transport: matrix is singular");
    const size_t n = mat_rows(*inv);
    std::vector<Vec> cols(n, vec_zero(n));
    for (size_t j = 0; j < n; ++j)
        for (size_t i = 0; i < n; ++i) cols[j][i] = (*inv)[i][j];
    return cols;
}

} // namespace

CrossedModule transport(const CrossedModule& cm, const Mat& pg, const Mat& ph) {
    const size_t dg = cm.g.space.dim, dh = cm.h.space.dim;
    auto pgc = inverse_columns(pg);
    auto phc = inverse_columns(ph);

    CrossedModule out;
    out.g = LeibnizAlgebra::zero(dg);
    out.h = LeibnizAlgebra::zero(dh);
    for (size_t i = 0; i < dg; ++i)
        for (size_t j = 0; j < dg; ++j)
            out.g.bracket.at_mut({i, j}) = mat_apply(pg, cm.g.br(pgc[i], pgc[j]));
    for (size_t i = 0; i < dh; ++i)
        for (size_t j = 0; j < dh; ++j)
            out.h.bracket.at_mut({i, j}) = mat_apply(ph, cm.h.br(phc[i], phc[j]));

    out.mu = LinearMap::zero(out.g.space, out.h.space);
    for (size_t j = 0; j < dg; ++j) {
        Vec col = mat_apply(ph, cm.mu.apply(pgc[j]));
        for (size_t i = 0; i < dh; ++i) out.mu.m[i][j] = col[i];
    }

    out.left = StructureTensor::zero({out.h.space, out.g.space}, out.g.space);
    out.right = StructureTensor::zero({out.g.space, out.h.space}, out.g.space);
    for (size_t x = 0; x < dh; ++x)
        for (size_t u = 0; u < dg; ++u)
            out.left.at_mut({x, u}) = mat_apply(pg, cm.lact(phc[x], pgc[u]));
    for (size_t u = 0; u < dg; ++u)
        for (size_t x = 0; x < dh; ++x)
            out.right.at_mut({u, x}) = mat_apply(pg, cm.ract(pgc[u], phc[x]));
    return out;
}

std::vector<CrossedModule> crossed_catalogue(size_t count, unsigned long seed) {
    std::vector<CrossedModule> bases;
    bases.push_back(adjoint_crossed(nilpotent_pair()));
    bases.push_back(adjoint_crossed(nonabelian_lie2()));
    bases.push_back(adjoint_crossed(heisenberg3()));
    bases.push_back(adjoint_crossed(abelian_leibniz(1)));
    bases.push_back(product_extension(nilpotent_pair(), 1));
    bases.push_back(product_extension(nonabelian_lie2(), 1));
    bases.push_back(product_extension(abelian_leibniz(1), 2));
    {
        LeibnizAlgebra g = nilpotent_pair();
        LeibnizRep r{g, g.space, g.bracket,
                     StructureTensor::zero({g.space, g.space}, g.space)};
        bases.push_back(abelian_mu0(r));
    }
    bases.push_back(abelian_mu0(LeibnizRep::trivial(nonabelian_lie2(), 2)));
    bases.push_back(direct_sum(adjoint_crossed(nilpotent_pair()),
                               adjoint_crossed(abelian_leibniz(1))));

    Rng rng(seed);
    std::vector<CrossedModule> out;
    size_t b = 0;
    while (out.size() < count) {
        const CrossedModule& base = bases[b % bases.size()];
        if (out.size() < bases.size()) {
            out.push_back(base);
        } else {
            Mat pg = random_invertible(rng, base.g.space.dim);
            Mat ph = random_invertible(rng, base.h.space.dim);
            out.push_back(transport(base, pg, ph));
        }
        ++b;
    }
    return out;
}

std::vector<LeibnizRep> rep_catalogue() {
    std::vector<LeibnizRep> reps;
    reps.push_back(LeibnizRep::trivial(nilpotent_pair(), 2));
    reps.push_back(LeibnizRep::adjoint(nilpotent_pair()));
    reps.push_back(LeibnizRep::adjoint(nonabelian_lie2()));
    reps.push_back(LeibnizRep::adjoint(heisenberg3()));
    {
        // One-sided action of the nilpotent pair on itself: left = bracket,
        // right = 0 (valid because squares act by zero on the left).
        LeibnizAlgebra g = nilpotent_pair();
        reps.push_back(LeibnizRep{g, g.space, g.bracket,
                                  StructureTensor::zero({g.space, g.space}, g.space)});
    }
    reps.push_back(LeibnizRep::trivial(heisenberg3(), 1));
    return reps;
}

Cochain random_cochain(Rng& rng, const LeibnizRep& rep, size_t degree) {
    if (degree == 0) return Cochain::from_vector(rep, random_vec(rng, rep.module.dim));
    Cochain c = Cochain::zero(rep, degree);
    for (auto& entry : c.tensor.entries) entry = random_vec(rng, rep.module.dim);
    return c;
}

ExactTca tca_r3() {
    return ExactTca::make(3, form_monomial(3, {0, 1, 2}, Poly::var(3, 2)));
}

ExactTca tca_r4() {
    return ExactTca::make(4, form_monomial(4, {1, 2, 3}, Poly::var(4, 0)));
}

PolyForm b_field_r3() { return form_monomial(3, {0, 1}, Poly::var(3, 2)); }

PolyForm b_field_r4() { return form_monomial(4, {0, 1}, Poly::var(4, 3)); }

TwistedPoisson tp_r3() {
    PolyMultivector pi = mv_monomial(3, {0, 1}, Poly::constant(3, Rat(1))) +
                         mv_monomial(3, {1, 2}, Poly::var(3, 0));
    PolyForm h = form_monomial(3, {0, 1, 2}, Poly::constant(3, Rat(1)));
    return TwistedPoisson::make(3, pi, h);
}

TwistedPoisson tp_r4() {
    PolyMultivector pi = mv_monomial(4, {0, 1}, Poly::constant(4, Rat(1)));
    PolyForm h = form_monomial(4, {1, 2, 3}, Poly::var(4, 0));
    return TwistedPoisson::make(4, pi, h);
}

TwistedPoisson tp_r5() {
    PolyMultivector pi = mv_monomial(5, {0, 1}, Poly::constant(5, Rat(1))) +
                         mv_monomial(5, {2, 3}, Poly::var(5, 4));
    PolyForm h = form_monomial(5, {0, 1, 4}, Poly::var(5, 3));
    return TwistedPoisson::make(5, pi, h);
}

TwistedPoisson tp_bad() {
    PolyMultivector pi = mv_monomial(3, {0, 1}, Poly::constant(3, Rat(1))) +
                         mv_monomial(3, {1, 2}, Poly::var(3, 1));
    PolyForm h = form_monomial(3, {0, 1, 2}, Poly::constant(3, Rat(1)));
    return TwistedPoisson::make(3, pi, h);
}

} // namespace l2v::builtin
