#include "l2v/cohomology.hpp"

#include "l2v/errors.hpp"

namespace l2v {

Cochain Cochain::zero(const LeibnizRep& rep, size_t degree) {
    Cochain c;
    c.degree = degree;
    c.rep = rep;
    if (degree == 0) {
        c.v0 = vec_zero(rep.module.dim);
    } else {
        std::vector<FinSpace> src(degree, rep.algebra.space);
        c.tensor = StructureTensor::zero(src, rep.module);
    }
    return c;
}

Cochain Cochain::from_vector(const LeibnizRep& rep, Vec v) {
    if (v.size() != rep.module.dim) throw ShapeError("Cochain: vector not in module");
    Cochain c = zero(rep, 0);
    c.v0 = std::move(v);
    return c;
}

Cochain Cochain::from_tensor(const LeibnizRep& rep, StructureTensor t) {
    if (t.sources.empty()) throw ShapeError("Cochain: tensor arity must be >= 1");
    for (const auto& s : t.sources)
        if (s.dim != rep.algebra.space.dim)
            throw ShapeError("Cochain: tensor sources must equal the algebra");
    if (t.target.dim != rep.module.dim)
        throw ShapeError("Cochain: tensor target must equal the module");
    Cochain c;
    c.degree = t.sources.size();
    c.rep = rep;
    c.tensor = std::move(t);
    return c;
}

Vec Cochain::eval(const std::vector<Vec>& args) const {
    if (args.size() != degree) throw ShapeError("Cochain::eval: wrong argument count");
    if (degree == 0) return v0;
    return tensor.apply(args);
}

bool Cochain::is_zero() const { return degree == 0 ? vec_is_zero(v0) : tensor.is_zero(); }

bool Cochain::operator==(const Cochain& o) const {
    if (degree != o.degree || rep.module.dim != o.rep.module.dim ||
        rep.algebra.space.dim != o.rep.algebra.space.dim)
        return false;
    return degree == 0 ? vec_eq(v0, o.v0) : tensor == o.tensor;
}

Cochain coboundary(const Cochain& c) {
    const size_t k = c.degree;
    const size_t n = c.rep.algebra.space.dim;
    Cochain out = Cochain::zero(c.rep, k + 1);

    // Iterate over all (k+1)-tuples of basis indices.
    std::vector<size_t> idx(k + 1, 0);
    const size_t total = [&] {
        size_t t = 1;
        for (size_t i = 0; i <= k; ++i) t *= n;
        return t;
    }();
    if (n == 0) return out;

    for (size_t flat = 0; flat < total; ++flat) {
        Vec val = vec_zero(c.rep.module.dim);

        // First sum: (-1)^{i+1} l_{g_i} c(args with slot i removed), i = 1..k.
        for (size_t i = 1; i <= k; ++i) {
            std::vector<size_t> rest;
            rest.reserve(k);
            for (size_t s = 0; s <= k; ++s)
                if (s != i - 1) rest.push_back(idx[s]);
            Vec term = c.rep.lact(basis_vec(n, idx[i - 1]), c.tensor.at(rest));
            if ((i + 1) % 2 == 0)
                val = vec_add(val, term);
            else
                val = vec_sub(val, term);
        }

        // Second term: (-1)^{k+1} r_{g_{k+1}} c(g_1..g_k).
        {
            Vec inner;
            if (k == 0) {
                inner = c.v0;
            } else {
                std::vector<size_t> first_k(idx.begin(), idx.end() - 1);
                inner = c.tensor.at(first_k);
            }
            Vec term = c.rep.ract(inner, basis_vec(n, idx[k]));
            if ((k + 1) % 2 == 0)
                val = vec_add(val, term);
            else
                val = vec_sub(val, term);
        }

        // Double sum: (-1)^i c(..., ĝ_i, ..., [g_i,g_j] in slot j-1, ...).
        if (k >= 1) {
            for (size_t i = 1; i <= k; ++i) {
                for (size_t j = i + 1; j <= k + 1; ++j) {
                    // Build the k-argument list: remove slot i, replace g_j by [g_i,g_j].
                    std::vector<Vec> args;
                    args.reserve(k);
                    for (size_t s = 1; s <= k + 1; ++s) {
                        if (s == i) continue;
                        if (s == j)
                            args.push_back(c.rep.algebra.bracket.at({idx[i - 1], idx[j - 1]}));
                        else
                            args.push_back(basis_vec(n, idx[s - 1]));
                    }
                    Vec term = c.tensor.apply(args);
                    if (i % 2 == 0)
                        val = vec_add(val, term);
                    else
                        val = vec_sub(val, term);
                }
            }
        }

        out.tensor.entries[flat] = std::move(val);

        for (size_t s = idx.size(); s-- > 0;) {
            if (++idx[s] < n) break;
            idx[s] = 0;
        }
    }
    return out;
}

bool is_cocycle(const Cochain& c) { return coboundary(c).is_zero(); }

} // namespace l2v
