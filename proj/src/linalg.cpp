#include "l2v/linalg.hpp"

#include "l2v/errors.hpp"

#include <string>

namespace l2v {

Vec vec_zero(size_t n) { return Vec(n, Rat(0)); }

bool vec_is_zero(const Vec& v) {
    for (const Rat& x : v)
        if (x != 0) return false;
    return true;
}

static void require_same_size(const Vec& a, const Vec& b, const char* op) {
    if (a.size() != b.size())
        throw ShapeError(std::string(op) + ": vector sizes " + std::to_string(a.size()) +
                         " vs " + std::to_string(b.size()));
}

Vec vec_add(const Vec& a, const Vec& b) {
    require_same_size(a, b, "vec_add");
    Vec r(a);
    for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

Vec vec_sub(const Vec& a, const Vec& b) {
    require_same_size(a, b, "vec_sub");
    Vec r(a);
    for (size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

Vec vec_scale(const Rat& c, const Vec& v) {
    Vec r(v);
    for (Rat& x : r) x *= c;
    return r;
}

bool vec_eq(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return false;
    return true;
}

Mat mat_zero(size_t rows, size_t cols) { return Mat(rows, vec_zero(cols)); }

Mat mat_identity(size_t n) {
    Mat m = mat_zero(n, n);
    for (size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

size_t mat_rows(const Mat& m) { return m.size(); }
size_t mat_cols(const Mat& m) { return m.empty() ? 0 : m[0].size(); }

Mat mat_mul(const Mat& a, const Mat& b) {
    if (mat_cols(a) != mat_rows(b))
        throw ShapeError("mat_mul: " + std::to_string(mat_rows(a)) + "x" +
                         std::to_string(mat_cols(a)) + " * " + std::to_string(mat_rows(b)) +
                         "x" + std::to_string(mat_cols(b)));
    Mat r = mat_zero(mat_rows(a), mat_cols(b));
    for (size_t i = 0; i < mat_rows(a); ++i)
        for (size_t k = 0; k < mat_cols(a); ++k) {
            if (a[i][k] == 0) continue;
            for (size_t j = 0; j < mat_cols(b); ++j) {
                if (b[k][j] == 0) continue;
                r[i][j] += a[i][k] * b[k][j];
            }
        }
    return r;
}

Mat mat_add(const Mat& a, const Mat& b) {
    if (mat_rows(a) != mat_rows(b) || mat_cols(a) != mat_cols(b))
        throw ShapeError("mat_add: shape mismatch");
    Mat r(a);
    for (size_t i = 0; i < r.size(); ++i)
        for (size_t j = 0; j < r[i].size(); ++j) r[i][j] += b[i][j];
    return r;
}

Mat mat_sub(const Mat& a, const Mat& b) {
    if (mat_rows(a) != mat_rows(b) || mat_cols(a) != mat_cols(b))
        throw ShapeError("mat_sub: shape mismatch");
    Mat r(a);
    for (size_t i = 0; i < r.size(); ++i)
        for (size_t j = 0; j < r[i].size(); ++j) r[i][j] -= b[i][j];
    return r;
}

Mat mat_scale(const Rat& c, const Mat& m) {
    Mat r(m);
    for (auto& row : r)
        for (Rat& x : row) x *= c;
    return r;
}

Mat mat_transpose(const Mat& m) {
    Mat r = mat_zero(mat_cols(m), mat_rows(m));
    for (size_t i = 0; i < mat_rows(m); ++i)
        for (size_t j = 0; j < mat_cols(m); ++j) r[j][i] = m[i][j];
    return r;
}

bool mat_eq(const Mat& a, const Mat& b) {
    if (mat_rows(a) != mat_rows(b) || mat_cols(a) != mat_cols(b)) return false;
    for (size_t i = 0; i < a.size(); ++i)
        if (!vec_eq(a[i], b[i])) return false;
    return true;
}

bool mat_is_zero(const Mat& m) {
    for (const auto& row : m)
        if (!vec_is_zero(row)) return false;
    return true;
}

Vec mat_apply(const Mat& m, const Vec& v) {
    if (mat_cols(m) != v.size())
        throw ShapeError("mat_apply: " + std::to_string(mat_rows(m)) + "x" +
                         std::to_string(mat_cols(m)) + " applied to vector of size " +
                         std::to_string(v.size()));
    Vec r = vec_zero(mat_rows(m));
    for (size_t i = 0; i < mat_rows(m); ++i)
        for (size_t j = 0; j < v.size(); ++j) {
            if (m[i][j] == 0 || v[j] == 0) continue;
            r[i] += m[i][j] * v[j];
        }
    return r;
}

size_t rref(Mat& m, std::vector<size_t>& pivots) {
    pivots.clear();
    size_t rows = mat_rows(m), cols = mat_cols(m);
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t p = r;
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        Rat inv = Rat(1) / m[r][c];
        for (size_t j = c; j < cols; ++j) m[r][j] *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rat f = m[i][c];
            for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return r;
}

size_t rank(Mat m) {
    std::vector<size_t> pivots;
    return rref(m, pivots);
}

std::vector<Vec> kernel_basis(const Mat& m) {
    size_t cols = mat_cols(m);
    Mat red(m);
    std::vector<size_t> pivots;
    size_t rk = rref(red, pivots);
    std::vector<bool> is_pivot(cols, false);
    for (size_t c : pivots) is_pivot[c] = true;
    std::vector<Vec> basis;
    for (size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        Vec v = vec_zero(cols);
        v[free] = 1;
        for (size_t i = 0; i < rk; ++i) v[pivots[i]] = -red[i][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<Vec> solve(const Mat& m, const Vec& b) {
    size_t rows = mat_rows(m), cols = mat_cols(m);
    if (b.size() != rows) throw ShapeError("solve: rhs size mismatch");
    Mat aug(m);
    for (size_t i = 0; i < rows; ++i) aug[i].push_back(b[i]);
    std::vector<size_t> pivots;
    size_t rk = rref(aug, pivots);
    for (size_t i = 0; i < rk; ++i)
        if (pivots[i] == cols) return std::nullopt; // pivot in the rhs column
    Vec x = vec_zero(cols);
    for (size_t i = 0; i < rk; ++i) x[pivots[i]] = aug[i][cols];
    return x;
}

std::optional<Mat> solve_mat(const Mat& m, const Mat& b) {
    if (mat_rows(b) != mat_rows(m)) throw ShapeError("solve_mat: rhs shape mismatch");
    Mat x = mat_zero(mat_cols(m), mat_cols(b));
    for (size_t j = 0; j < mat_cols(b); ++j) {
        Vec col(mat_rows(b));
        for (size_t i = 0; i < mat_rows(b); ++i) col[i] = b[i][j];
        auto sol = solve(m, col);
        if (!sol) return std::nullopt;
        for (size_t i = 0; i < sol->size(); ++i) x[i][j] = (*sol)[i];
    }
    return x;
}

std::optional<Mat> inverse(const Mat& m) {
    size_t n = mat_rows(m);
    if (n != mat_cols(m)) throw ShapeError("inverse: matrix not square");
    Mat aug(m);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) aug[i].push_back(i == j ? Rat(1) : Rat(0));
    }
    std::vector<size_t> pivots;
    size_t rk = rref(aug, pivots);
    if (rk != n) return std::nullopt;
    // The identity block keeps the augmented matrix at full row rank even when
    // m is singular; m is invertible only if every pivot stays in the left block.
    for (size_t c : pivots)
        if (c >= n) return std::nullopt;
    Mat inv = mat_zero(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
    return inv;
}

} // namespace l2v
