#include "l2v/spaces.hpp"

#include "l2v/errors.hpp"

namespace l2v {

std::string render_vec(const Vec& v, const FinSpace& space) {
    if (v.size() != space.dim) throw ShapeError("render_vec: size mismatch");
    std::string out;
    for (size_t i = 0; i < v.size(); ++i) {
        const Rat& c = v[i];
        if (c == 0) continue;
        std::string name = space.prefix + std::to_string(i + 1);
        if (out.empty()) {
            if (c == 1)
                out = name;
            else if (c == -1)
                out = "-" + name;
            else
                out = rat_str(c) + " " + name;
        } else {
            Rat a = c > 0 ? c : Rat(-c);
            out += c > 0 ? " + " : " - ";
            out += (a == 1) ? name : rat_str(a) + " " + name;
        }
    }
    return out.empty() ? "0" : out;
}

LinearMap LinearMap::zero(const FinSpace& src, const FinSpace& dst) {
    return LinearMap{src, dst, mat_zero(dst.dim, src.dim)};
}

LinearMap LinearMap::identity(const FinSpace& s) {
    return LinearMap{s, s, mat_identity(s.dim)};
}

Vec LinearMap::apply(const Vec& v) const { return apply_linear(*this, v); }

Vec apply_linear(const LinearMap& f, const Vec& v) {
    if (v.size() != f.src.dim) throw ShapeError("apply_linear: argument not in source space");
    // A matrix with no rows carries no column count, so only check columns
    // when both dimensions are positive.
    if (mat_rows(f.m) != f.dst.dim ||
        (f.src.dim > 0 && f.dst.dim > 0 && mat_cols(f.m) != f.src.dim))
        throw ShapeError("apply_linear: matrix shape inconsistent with spaces");
    if (f.src.dim == 0 || f.dst.dim == 0) return vec_zero(f.dst.dim);
    return mat_apply(f.m, v);
}

LinearMap compose_linear(const LinearMap& g, const LinearMap& f) {
    if (!(f.dst == g.src)) throw ShapeError("compose_linear: inner spaces differ");
    if (f.src.dim == 0 || g.dst.dim == 0)
        return LinearMap{f.src, g.dst, mat_zero(g.dst.dim, f.src.dim)};
    return LinearMap{f.src, g.dst, mat_mul(g.m, f.m)};
}

StructureTensor StructureTensor::zero(std::vector<FinSpace> sources, FinSpace target) {
    StructureTensor t;
    t.sources = std::move(sources);
    t.target = target;
    size_t total = 1;
    for (const auto& s : t.sources) total *= s.dim;
    t.entries.assign(total, vec_zero(t.target.dim));
    return t;
}

size_t StructureTensor::flat(const std::vector<size_t>& idx) const {
    if (idx.size() != sources.size()) throw ShapeError("StructureTensor: index arity mismatch");
    size_t f = 0;
    for (size_t k = 0; k < idx.size(); ++k) {
        if (idx[k] >= sources[k].dim) throw ShapeError("StructureTensor: index out of range");
        f = f * sources[k].dim + idx[k];
    }
    return f;
}

const Vec& StructureTensor::at(const std::vector<size_t>& idx) const { return entries[flat(idx)]; }

Vec& StructureTensor::at_mut(const std::vector<size_t>& idx) { return entries[flat(idx)]; }

Vec StructureTensor::apply(const std::vector<Vec>& args) const {
    if (args.size() != sources.size())
        throw ShapeError("apply_multi: argument count mismatch");
    for (size_t k = 0; k < args.size(); ++k)
        if (args[k].size() != sources[k].dim)
            throw ShapeError("apply_multi: argument " + std::to_string(k) +
                             " not in source space");
    Vec out = vec_zero(target.dim);
    if (entries.empty()) return out;
    std::vector<size_t> idx(sources.size(), 0);
    for (size_t f = 0; f < entries.size(); ++f) {
        // Multiply the coordinates selected by the current multi-index.
        Rat c(1);
        bool zero = false;
        for (size_t k = 0; k < idx.size(); ++k) {
            const Rat& a = args[k][idx[k]];
            if (a == 0) {
                zero = true;
                break;
            }
            c *= a;
        }
        if (!zero && !vec_is_zero(entries[f])) {
            for (size_t t = 0; t < out.size(); ++t) out[t] += c * entries[f][t];
        }
        // Advance the row-major multi-index.
        for (size_t k = idx.size(); k-- > 0;) {
            if (++idx[k] < sources[k].dim) break;
            idx[k] = 0;
        }
    }
    return out;
}

bool StructureTensor::is_zero() const {
    for (const Vec& v : entries)
        if (!vec_is_zero(v)) return false;
    return true;
}

bool StructureTensor::operator==(const StructureTensor& o) const {
    if (sources.size() != o.sources.size() || !(target == o.target)) return false;
    for (size_t k = 0; k < sources.size(); ++k)
        if (!(sources[k] == o.sources[k])) return false;
    if (entries.size() != o.entries.size()) return false;
    for (size_t f = 0; f < entries.size(); ++f)
        if (!vec_eq(entries[f], o.entries[f])) return false;
    return true;
}

Vec apply_multi(const StructureTensor& t, const std::vector<Vec>& args) { return t.apply(args); }

Vec basis_vec(size_t n, size_t i) {
    Vec v = vec_zero(n);
    if (i >= n) throw ShapeError("basis_vec: index out of range");
    v[i] = 1;
    return v;
}

} // namespace l2v
