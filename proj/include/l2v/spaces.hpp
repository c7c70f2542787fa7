#pragma once

#include "l2v/linalg.hpp"

#include <string>
#include <vector>

namespace l2v {

/// Finite-dimensional rational vector space with a fixed ordered basis.
/// `prefix` is only used when rendering basis elements in reports
/// ("e" for degree-0/algebra slots, "m" for degree-1/module slots).
struct FinSpace {
    size_t dim = 0;
    std::string prefix = "e";

    bool operator==(const FinSpace& o) const { return dim == o.dim; }
};

/// Render a coordinate vector as a combination of basis elements,
/// e.g. "-e1 + 2 e3"; the zero vector renders as "0".
std::string render_vec(const Vec& v, const FinSpace& space);

/// Exact linear map between two FinSpaces, stored as a dst.dim x src.dim matrix.
struct LinearMap {
    FinSpace src, dst;
    Mat m;

    static LinearMap zero(const FinSpace& src, const FinSpace& dst);
    static LinearMap identity(const FinSpace& s);

    Vec apply(const Vec& v) const;
    bool is_zero() const { return mat_is_zero(m); }
    bool operator==(const LinearMap& o) const {
        return src == o.src && dst == o.dst && mat_eq(m, o.m);
    }
};

/// Validate shapes and apply.
Vec apply_linear(const LinearMap& f, const Vec& v);

/// Composite g∘f with shape validation.
LinearMap compose_linear(const LinearMap& g, const LinearMap& f);

/// Dense multilinear map  sources[0] x ... x sources[k-1] -> target,
/// stored as one target-coordinate vector per source basis multi-index
/// (row-major flattening of the multi-index).
struct StructureTensor {
    std::vector<FinSpace> sources;
    FinSpace target;
    std::vector<Vec> entries;

    static StructureTensor zero(std::vector<FinSpace> sources, FinSpace target);

    size_t arity() const { return sources.size(); }
    size_t flat(const std::vector<size_t>& idx) const;

    /// Value on a tuple of source basis elements.
    const Vec& at(const std::vector<size_t>& idx) const;
    Vec& at_mut(const std::vector<size_t>& idx);

    /// Full multilinear evaluation on coordinate vectors.
    Vec apply(const std::vector<Vec>& args) const;

    bool is_zero() const;
    bool operator==(const StructureTensor& o) const;
};

/// Multilinear evaluation with shape validation (same as t.apply).
Vec apply_multi(const StructureTensor& t, const std::vector<Vec>& args);

/// Basis vector i of an n-dimensional space.
Vec basis_vec(size_t n, size_t i);

} // namespace l2v
