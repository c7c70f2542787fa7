#include "l2v/omni.hpp"

#include "l2v/errors.hpp"

namespace l2v {

namespace {

/// Row-major flattening of the pair (A0, A1) into one coordinate vector.
Vec stack_pair(const Mat& a0, const Mat& a1) {
    Vec v;
    for (const auto& row : a0)
        for (const Rat& x : row) v.push_back(x);
    for (const auto& row : a1)
        for (const Rat& x : row) v.push_back(x);
    return v;
}

} // namespace

EndDgla build_end(const TwoTermComplex& c) {
    const size_t n0 = c.v0.dim, n1 = c.v1.dim;
    const Mat& d = c.d.m;

    // Chain-endomorphism constraint A0 d = d A1 over (vec A0, vec A1).
    Mat sys = mat_zero(n0 * n1, n0 * n0 + n1 * n1);
    for (size_t r = 0; r < n0; ++r)
        for (size_t col = 0; col < n1; ++col) {
            Vec& row = sys[r * n1 + col];
            for (size_t k = 0; k < n0; ++k) row[r * n0 + k] += d[k][col];
            for (size_t k = 0; k < n1; ++k) row[n0 * n0 + k * n1 + col] -= d[r][k];
        }

    EndDgla e;
    e.base = c;
    std::vector<Vec> kern = kernel_basis(sys);
    e.deg0 = FinSpace{kern.size(), "e"};
    e.deg1 = FinSpace{n1 * n0, "m"};
    for (const Vec& v : kern) {
        Mat a0 = mat_zero(n0, n0), a1 = mat_zero(n1, n1);
        for (size_t i = 0; i < n0; ++i)
            for (size_t j = 0; j < n0; ++j) a0[i][j] = v[i * n0 + j];
        for (size_t i = 0; i < n1; ++i)
            for (size_t j = 0; j < n1; ++j) a1[i][j] = v[n0 * n0 + i * n1 + j];
        if (!mat_eq(mat_mul(a0, d), mat_mul(d, a1)))
            throw std::logic_error("build_end: kernel vector violates the chain constraint");
        e.deg0_basis.emplace_back(std::move(a0), std::move(a1));
    }

    // delta(phi) = (d∘phi, phi∘d) expressed in the degree-0 basis.
    e.delta = LinearMap::zero(e.deg1, e.deg0);
    for (size_t p = 0; p < e.deg1.dim; ++p) {
        Mat phi = e.deg1_mat(basis_vec(e.deg1.dim, p));
        Mat a0 = (n0 && n1) ? mat_mul(d, phi) : mat_zero(n0, n0);
        Mat a1 = (n0 && n1) ? mat_mul(phi, d) : mat_zero(n1, n1);
        Vec coords = e.deg0_coords(a0, a1);
        for (size_t r = 0; r < e.deg0.dim; ++r) e.delta.m[r][p] = coords[r];
    }

    // Brackets in the fixed bases.
    e.b00 = StructureTensor::zero({e.deg0, e.deg0}, e.deg0);
    for (size_t i = 0; i < e.deg0.dim; ++i)
        for (size_t j = 0; j < e.deg0.dim; ++j) {
            const auto& [x0, x1] = e.deg0_basis[i];
            const auto& [y0, y1] = e.deg0_basis[j];
            Mat c0 = mat_sub(mat_mul(x0, y0), mat_mul(y0, x0));
            Mat c1 = mat_sub(mat_mul(x1, y1), mat_mul(y1, x1));
            e.b00.at_mut({i, j}) = e.deg0_coords(c0, c1);
        }
    e.b01 = StructureTensor::zero({e.deg0, e.deg1}, e.deg1);
    e.b10 = StructureTensor::zero({e.deg1, e.deg0}, e.deg1);
    for (size_t i = 0; i < e.deg0.dim; ++i)
        for (size_t p = 0; p < e.deg1.dim; ++p) {
            const auto& [a0, a1] = e.deg0_basis[i];
            Mat phi = e.deg1_mat(basis_vec(e.deg1.dim, p));
            Mat br = mat_sub(mat_mul(a1, phi), mat_mul(phi, a0)); // [A,phi]
            e.b01.at_mut({i, p}) = e.deg1_coords(br);
            e.b10.at_mut({p, i}) = e.deg1_coords(mat_scale(Rat(-1), br)); // [phi,A]
        }
    return e;
}

std::pair<Mat, Mat> EndDgla::deg0_mats(const Vec& coords) const {
    const size_t n0 = base.v0.dim, n1 = base.v1.dim;
    if (coords.size() != deg0.dim) throw ShapeError("deg0_mats: wrong coordinate count");
    Mat a0 = mat_zero(n0, n0), a1 = mat_zero(n1, n1);
    for (size_t b = 0; b < deg0.dim; ++b) {
        if (coords[b] == 0) continue;
        a0 = mat_add(a0, mat_scale(coords[b], deg0_basis[b].first));
        a1 = mat_add(a1, mat_scale(coords[b], deg0_basis[b].second));
    }
    return {a0, a1};
}

Mat EndDgla::deg1_mat(const Vec& coords) const {
    const size_t n0 = base.v0.dim, n1 = base.v1.dim;
    if (coords.size() != deg1.dim) throw ShapeError("deg1_mat: wrong coordinate count");
    Mat phi = mat_zero(n1, n0);
    for (size_t a = 0; a < n1; ++a)
        for (size_t b = 0; b < n0; ++b) phi[a][b] = coords[a * n0 + b];
    return phi;
}

Vec EndDgla::deg0_coords(const Mat& a0, const Mat& a1) const {
    // Solve basis-matrix * x = stacked target exactly.
    Vec target = stack_pair(a0, a1);
    Mat basis_cols = mat_zero(target.size(), deg0.dim);
    for (size_t b = 0; b < deg0.dim; ++b) {
        Vec col = stack_pair(deg0_basis[b].first, deg0_basis[b].second);
        for (size_t r = 0; r < col.size(); ++r) basis_cols[r][b] = col[r];
    }
    auto sol = solve(basis_cols, target);
    if (!sol)
        throw PreconditionError("deg0_coords: pair is not a chain endomorphism");
    return *sol;
}

Vec EndDgla::deg1_coords(const Mat& phi) const {
    const size_t n0 = base.v0.dim, n1 = base.v1.dim;
    if (mat_rows(phi) != n1 || (n1 > 0 && mat_cols(phi) != n0))
        throw ShapeError("deg1_coords: wrong matrix shape");
    Vec coords = vec_zero(deg1.dim);
    for (size_t a = 0; a < n1; ++a)
        for (size_t b = 0; b < n0; ++b) coords[a * n0 + b] = phi[a][b];
    return coords;
}

ShLeibniz2 EndDgla::as_sh_leibniz() const {
    ShLeibniz2 a;
    a.c.v1 = deg1;
    a.c.v0 = deg0;
    a.c.d = delta;
    a.l2_00 = b00;
    a.l2_01 = b01;
    a.l2_10 = b10;
    a.l3 = StructureTensor::zero({deg0, deg0, deg0}, deg1);
    return a;
}

DglaAutomorphism DglaAutomorphism::identity(const EndDgla& e) {
    return DglaAutomorphism{LinearMap::identity(e.deg0), LinearMap::identity(e.deg1),
                            StructureTensor::zero({e.deg0, e.deg0}, e.deg1)};
}

VerifyReport check_dgla_automorphism(const DglaAutomorphism& f, const EndDgla& e) {
    VerifyReport rep;
    rep.subject = "endomorphism-dgla automorphism";
    {
        CheckResult& c = rep.add("f0 and f1 invertible", "invertible");
        bool ok0 = f.f0.src.dim == e.deg0.dim && f.f0.dst.dim == e.deg0.dim &&
                   inverse(f.f0.m).has_value();
        c.count(ok0, "(f0)", ok0 ? "0" : "singular or misshapen");
        bool ok1 = f.f1.src.dim == e.deg1.dim && f.f1.dst.dim == e.deg1.dim &&
                   inverse(f.f1.m).has_value();
        c.count(ok1, "(f1)", ok1 ? "0" : "singular or misshapen");
    }
    ShLeibniz2 shl = e.as_sh_leibniz();
    rep.append(check_morphism(ShMorphism{f.f0, f.f1, f.f2}, shl, shl));
    return rep;
}

ShLeibniz2 build_omni(const DglaAutomorphism& f, const EndDgla& e) {
    const size_t d0 = e.deg0.dim, d1 = e.deg1.dim;
    const size_t n0 = e.base.v0.dim, n1 = e.base.v1.dim;
    const size_t N1 = d1 + n1, N0 = d0 + n0;

    Mat dmat = mat_zero(N0, N1);
    for (size_t r = 0; r < d0; ++r)
        for (size_t c = 0; c < d1; ++c) dmat[r][c] = e.delta.m[r][c];
    for (size_t r = 0; r < n0; ++r)
        for (size_t c = 0; c < n1; ++c) dmat[d0 + r][d1 + c] = e.base.d.m[r][c];

    ShLeibniz2 a = ShLeibniz2::zero(N1, N0, dmat);

    auto into_v0 = [&](const Vec& deg0_part, const Vec& v0_part) {
        Vec r = vec_zero(N0);
        for (size_t i = 0; i < d0; ++i) r[i] = deg0_part[i];
        for (size_t i = 0; i < n0; ++i) r[d0 + i] = v0_part[i];
        return r;
    };
    auto into_v1 = [&](const Vec& deg1_part, const Vec& v1_part) {
        Vec r = vec_zero(N1);
        for (size_t i = 0; i < d1; ++i) r[i] = deg1_part[i];
        for (size_t i = 0; i < n1; ++i) r[d1 + i] = v1_part[i];
        return r;
    };

    // Concrete matrices for f0(e_i) and f1(phi_p), reused below.
    std::vector<std::pair<Mat, Mat>> f0_mats;
    for (size_t i = 0; i < d0; ++i) {
        Vec coords = f.f0.apply(basis_vec(d0, i));
        f0_mats.push_back(e.deg0_mats(coords));
    }
    std::vector<Mat> f1_mats;
    for (size_t p = 0; p < d1; ++p) {
        Vec coords = f.f1.apply(basis_vec(d1, p));
        f1_mats.push_back(e.deg1_mat(coords));
    }

    // l2 on (deg0 ⊕ V0) x (deg0 ⊕ V0).
    for (size_t i = 0; i < d0; ++i) {
        for (size_t j = 0; j < d0; ++j)
            a.l2_00.at_mut({i, j}) = into_v0(e.b00.at({i, j}), vec_zero(n0));
        for (size_t j = 0; j < n0; ++j) {
            Vec img(n0);
            for (size_t r = 0; r < n0; ++r) img[r] = f0_mats[i].first[r][j];
            a.l2_00.at_mut({i, d0 + j}) = into_v0(vec_zero(d0), img);
        }
    }
    // l2 on (deg0 ⊕ V0) x (deg1 ⊕ V1).
    for (size_t i = 0; i < d0; ++i) {
        for (size_t p = 0; p < d1; ++p)
            a.l2_01.at_mut({i, p}) = into_v1(e.b01.at({i, p}), vec_zero(n1));
        for (size_t j = 0; j < n1; ++j) {
            Vec img(n1);
            for (size_t r = 0; r < n1; ++r) img[r] = f0_mats[i].second[r][j];
            a.l2_01.at_mut({i, d1 + j}) = into_v1(vec_zero(d1), img);
        }
    }
    // l2 on (deg1 ⊕ V1) x (deg0 ⊕ V0).
    for (size_t p = 0; p < d1; ++p) {
        for (size_t i = 0; i < d0; ++i)
            a.l2_10.at_mut({p, i}) = into_v1(e.b10.at({p, i}), vec_zero(n1));
        for (size_t j = 0; j < n0; ++j) {
            Vec img(n1);
            for (size_t r = 0; r < n1; ++r) img[r] = f1_mats[p][r][j];
            a.l2_10.at_mut({p, d0 + j}) = into_v1(vec_zero(d1), img);
        }
    }
    // l3((A,u),(B,v),(C,w)) = f2(A,B)(w).
    for (size_t i = 0; i < d0; ++i)
        for (size_t j = 0; j < d0; ++j) {
            Mat f2m = e.deg1_mat(f.f2.at({i, j}));
            for (size_t k = 0; k < n0; ++k) {
                Vec img(n1);
                for (size_t r = 0; r < n1; ++r) img[r] = f2m[r][k];
                a.l3.at_mut({i, j, d0 + k}) = into_v1(vec_zero(d1), img);
            }
        }
    return a;
}

F2Solutions solve_f2(const EndDgla& e, const LinearMap& f0, const LinearMap& f1) {
    const size_t d0 = e.deg0.dim, d1 = e.deg1.dim;
    const size_t nvar = d0 * d0 * d1;
    auto var = [&](size_t i, size_t j, size_t t) { return (i * d0 + j) * d1 + t; };

    std::vector<Vec> rows;
    Vec rhs;
    auto add_row = [&](Vec row, const Rat& b) {
        rows.push_back(std::move(row));
        rhs.push_back(b);
    };

    auto f0v = [&](size_t i) { return f0.apply(basis_vec(d0, i)); };
    auto f1v = [&](size_t p) { return f1.apply(basis_vec(d1, p)); };

    // [A, phi] with A in deg0 coordinates applied to an unknown deg1 element:
    // matrix M[t'][t] = sum_a A_a * b01(e_a, m_t)[t'].
    auto left_mult = [&](const Vec& acoords) {
        Mat m = mat_zero(d1, d1);
        for (size_t a = 0; a < d0; ++a) {
            if (acoords[a] == 0) continue;
            for (size_t t = 0; t < d1; ++t) {
                const Vec& img = e.b01.at({a, t});
                for (size_t tp = 0; tp < d1; ++tp) m[tp][t] += acoords[a] * img[tp];
            }
        }
        return m;
    };
    // [phi, A]: matrix M[t'][t] = sum_a A_a * b10(m_t, e_a)[t'].
    auto right_mult = [&](const Vec& acoords) {
        Mat m = mat_zero(d1, d1);
        for (size_t a = 0; a < d0; ++a) {
            if (acoords[a] == 0) continue;
            for (size_t t = 0; t < d1; ++t) {
                const Vec& img = e.b10.at({t, a});
                for (size_t tp = 0; tp < d1; ++tp) m[tp][t] += acoords[a] * img[tp];
            }
        }
        return m;
    };

    // (1) delta f2(e_i,e_j) = [f0 e_i, f0 e_j] - f0([e_i,e_j]).
    for (size_t i = 0; i < d0; ++i)
        for (size_t j = 0; j < d0; ++j) {
            Vec target = vec_sub(e.b00.apply({f0v(i), f0v(j)}), f0.apply(e.b00.at({i, j})));
            for (size_t r = 0; r < d0; ++r) {
                Vec row = vec_zero(nvar);
                for (size_t t = 0; t < d1; ++t) row[var(i, j, t)] = e.delta.m[r][t];
                add_row(std::move(row), target[r]);
            }
        }
    // (2) f2(e_i, delta m_p) = [f0 e_i, f1 m_p] - f1([e_i, m_p]).
    for (size_t i = 0; i < d0; ++i)
        for (size_t p = 0; p < d1; ++p) {
            Vec dp = e.delta.apply(basis_vec(d1, p));
            Vec target = vec_sub(e.b01.apply({f0v(i), f1v(p)}), f1.apply(e.b01.at({i, p})));
            for (size_t tp = 0; tp < d1; ++tp) {
                Vec row = vec_zero(nvar);
                for (size_t j = 0; j < d0; ++j)
                    if (dp[j] != 0) row[var(i, j, tp)] += dp[j];
                add_row(std::move(row), target[tp]);
            }
        }
    // (3) f2(delta m_p, e_i) = [f1 m_p, f0 e_i] - f1([m_p, e_i]).
    for (size_t p = 0; p < d1; ++p)
        for (size_t i = 0; i < d0; ++i) {
            Vec dp = e.delta.apply(basis_vec(d1, p));
            Vec target = vec_sub(e.b10.apply({f1v(p), f0v(i)}), f1.apply(e.b10.at({p, i})));
            for (size_t tp = 0; tp < d1; ++tp) {
                Vec row = vec_zero(nvar);
                for (size_t j = 0; j < d0; ++j)
                    if (dp[j] != 0) row[var(j, i, tp)] += dp[j];
                add_row(std::move(row), target[tp]);
            }
        }
    // (4) coherence with vanishing l3 on both sides:
    // [f0 e_i, f2(e_j,e_k)] - [f0 e_j, f2(e_i,e_k)] - [f2(e_i,e_j), f0 e_k]
    //   - f2([e_i,e_j], e_k) + f2(e_i, [e_j,e_k]) - f2(e_j, [e_i,e_k]) = 0.
    for (size_t i = 0; i < d0; ++i) {
        Mat li = left_mult(f0v(i));
        for (size_t j = 0; j < d0; ++j) {
            Mat lj = left_mult(f0v(j));
            for (size_t k = 0; k < d0; ++k) {
                Mat rk = right_mult(f0v(k));
                Vec bij = e.b00.at({i, j});
                Vec bjk = e.b00.at({j, k});
                Vec bik = e.b00.at({i, k});
                for (size_t tp = 0; tp < d1; ++tp) {
                    Vec row = vec_zero(nvar);
                    for (size_t t = 0; t < d1; ++t) {
                        if (li[tp][t] != 0) row[var(j, k, t)] += li[tp][t];
                        if (lj[tp][t] != 0) row[var(i, k, t)] -= lj[tp][t];
                        if (rk[tp][t] != 0) row[var(i, j, t)] -= rk[tp][t];
                    }
                    for (size_t a = 0; a < d0; ++a) {
                        if (bij[a] != 0) row[var(a, k, tp)] -= bij[a];
                        if (bjk[a] != 0) row[var(i, a, tp)] += bjk[a];
                        if (bik[a] != 0) row[var(j, a, tp)] -= bik[a];
                    }
                    add_row(std::move(row), Rat(0));
                }
            }
        }
    }

    F2Solutions out;
    Mat sys(rows.begin(), rows.end());
    auto sol = solve(sys, rhs);
    out.particular = StructureTensor::zero({e.deg0, e.deg0}, e.deg1);
    if (sol) {
        out.solvable = true;
        for (size_t i = 0; i < d0; ++i)
            for (size_t j = 0; j < d0; ++j) {
                Vec v(d1);
                for (size_t t = 0; t < d1; ++t) v[t] = (*sol)[var(i, j, t)];
                out.particular.at_mut({i, j}) = std::move(v);
            }
        for (const Vec& k : kernel_basis(sys)) {
            StructureTensor h = StructureTensor::zero({e.deg0, e.deg0}, e.deg1);
            for (size_t i = 0; i < d0; ++i)
                for (size_t j = 0; j < d0; ++j) {
                    Vec v(d1);
                    for (size_t t = 0; t < d1; ++t) v[t] = k[var(i, j, t)];
                    h.at_mut({i, j}) = std::move(v);
                }
            out.homogeneous.push_back(std::move(h));
        }
    }
    return out;
}

} // namespace l2v
