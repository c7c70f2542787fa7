#pragma once

#include "l2v/rational.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace l2v {

using Vec = std::vector<Rat>;
using Mat = std::vector<Vec>; // row-major, Mat[row][col]; rows share one length

Vec vec_zero(size_t n);
bool vec_is_zero(const Vec& v);
Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scale(const Rat& c, const Vec& v);
bool vec_eq(const Vec& a, const Vec& b);

Mat mat_zero(size_t rows, size_t cols);
Mat mat_identity(size_t n);
size_t mat_rows(const Mat& m);
size_t mat_cols(const Mat& m);
Mat mat_mul(const Mat& a, const Mat& b);
Mat mat_add(const Mat& a, const Mat& b);
Mat mat_sub(const Mat& a, const Mat& b);
Mat mat_scale(const Rat& c, const Mat& m);
Mat mat_transpose(const Mat& m);
bool mat_eq(const Mat& a, const Mat& b);
bool mat_is_zero(const Mat& m);
Vec mat_apply(const Mat& m, const Vec& v);

/// In-place reduction to reduced row echelon form. Returns the rank and, via
/// `pivots`, the pivot column of each nonzero row (ascending).
size_t rref(Mat& m, std::vector<size_t>& pivots);

size_t rank(Mat m);

/// Basis of the null space {x : m x = 0}, one vector per free column, ordered
/// by ascending free-column index, with the free variable set to 1
/// (reduced-echelon pivot-order convention).
std::vector<Vec> kernel_basis(const Mat& m);

/// One exact solution of m x = b, or nullopt when inconsistent.
std::optional<Vec> solve(const Mat& m, const Vec& b);

/// Solve m X = B column by column; nullopt when any column is inconsistent.
std::optional<Mat> solve_mat(const Mat& m, const Mat& b);

/// Exact inverse of a square matrix, or nullopt when singular.
std::optional<Mat> inverse(const Mat& m);

} // namespace l2v
