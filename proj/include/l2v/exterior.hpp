#pragma once

#include "l2v/errors.hpp"
#include "l2v/poly.hpp"

#include <map>
#include <string>
#include <vector>

namespace l2v {

using IdxTuple = std::vector<size_t>; // strictly increasing 0-based indices

/// Alternating tensor with polynomial coefficients on R^n; components are
/// keyed by strictly increasing index tuples and zero components are never
/// stored. Tag distinguishes differential forms from multivector fields.
template <typename Tag>
struct AltTensor {
    size_t n = 0;
    size_t deg = 0;
    std::map<IdxTuple, Poly> comp;

    // deg may exceed n: such tensors are identically zero (every tuple of
    // length deg then repeats an index), which keeps top-degree derivatives
    // like d(3-form on R^3) well-typed.
    AltTensor() = default;
    AltTensor(size_t n_, size_t deg_) : n(n_), deg(deg_) {}

    static AltTensor zero(size_t n, size_t deg) { return AltTensor(n, deg); }

    bool is_zero() const { return comp.empty(); }

    /// Accumulate p on the (possibly unsorted) tuple idx, applying the sign of
    /// the sorting permutation; tuples with repeats contribute nothing.
    void add_term(IdxTuple idx, Poly p) {
        if (idx.size() != deg) throw ShapeError("AltTensor: tuple has wrong length");
        if (p.nvars() != n) throw ShapeError("AltTensor: coefficient has wrong variable count");
        if (p.is_zero()) return;
        int sign = 1;
        for (size_t i = 0; i + 1 < idx.size(); ++i)
            for (size_t j = 0; j + 1 < idx.size() - i; ++j)
                if (idx[j] > idx[j + 1]) {
                    std::swap(idx[j], idx[j + 1]);
                    sign = -sign;
                }
        for (size_t i = 0; i + 1 < idx.size(); ++i)
            if (idx[i] == idx[i + 1]) return;
        for (size_t i : idx)
            if (i >= n) throw ShapeError("AltTensor: index out of range");
        if (sign < 0) p = -p;
        auto it = comp.find(idx);
        if (it == comp.end()) {
            comp.emplace(std::move(idx), std::move(p));
        } else {
            it->second = it->second + p;
            if (it->second.is_zero()) comp.erase(it);
        }
    }

    /// Signed coefficient on an arbitrary tuple (0 on repeats).
    Poly coeff(IdxTuple idx) const {
        if (idx.size() != deg) throw ShapeError("AltTensor: tuple has wrong length");
        int sign = 1;
        for (size_t i = 0; i + 1 < idx.size(); ++i)
            for (size_t j = 0; j + 1 < idx.size() - i; ++j)
                if (idx[j] > idx[j + 1]) {
                    std::swap(idx[j], idx[j + 1]);
                    sign = -sign;
                }
        for (size_t i = 0; i + 1 < idx.size(); ++i)
            if (idx[i] == idx[i + 1]) return Poly::zero(n);
        auto it = comp.find(idx);
        if (it == comp.end()) return Poly::zero(n);
        return sign > 0 ? it->second : -it->second;
    }

    AltTensor operator+(const AltTensor& o) const {
        require_same(o);
        AltTensor r(*this);
        for (const auto& [i, p] : o.comp) r.add_term(i, p);
        return r;
    }
    AltTensor operator-(const AltTensor& o) const {
        require_same(o);
        AltTensor r(*this);
        for (const auto& [i, p] : o.comp) r.add_term(i, -p);
        return r;
    }
    AltTensor operator-() const {
        AltTensor r(n, deg);
        for (const auto& [i, p] : comp) r.comp.emplace(i, -p);
        return r;
    }
    AltTensor scaled(const Poly& f) const {
        AltTensor r(n, deg);
        for (const auto& [i, p] : comp) r.add_term(i, p * f);
        return r;
    }
    AltTensor scaled(const Rat& c) const {
        AltTensor r(n, deg);
        if (c == 0) return r;
        for (const auto& [i, p] : comp) r.comp.emplace(i, p.scaled(c));
        return r;
    }

    bool operator==(const AltTensor& o) const {
        return n == o.n && deg == o.deg && comp == o.comp;
    }

    /// Relabel coordinates: new index perm[i] <- old index i (coefficients
    /// are relabelled consistently).
    AltTensor permuted(const std::vector<size_t>& perm) const {
        AltTensor r(n, deg);
        for (const auto& [i, p] : comp) {
            IdxTuple pi(i.size());
            for (size_t k = 0; k < i.size(); ++k) pi[k] = perm[i[k]];
            r.add_term(pi, p.permuted(perm));
        }
        return r;
    }

    std::string str() const {
        if (comp.empty()) return "0";
        std::string out;
        for (const auto& [i, p] : comp) {
            std::string basis;
            for (size_t k = 0; k < i.size(); ++k) {
                if (k) basis += "∧";
                basis += Tag::symbol(i[k]);
            }
            std::string chunk;
            bool negative = false;
            if (deg == 0) {
                chunk = p.str();
            } else if (p.is_constant()) {
                const Rat& c = p.terms().begin()->second;
                Rat a = c > 0 ? c : Rat(-c);
                negative = c < 0;
                chunk = (a == 1) ? basis : rat_str(a) + " " + basis;
            } else {
                chunk = "(" + p.str() + ") " + basis;
            }
            if (out.empty())
                out = negative ? "-" + chunk : chunk;
            else
                out += (negative ? " - " : " + ") + chunk;
        }
        return out;
    }

private:
    void require_same(const AltTensor& o) const {
        if (n != o.n || deg != o.deg) throw ShapeError("AltTensor: mixed shapes");
    }
};

struct FormTag {
    static std::string symbol(size_t i) { return "dx" + std::to_string(i + 1); }
};
struct MvTag {
    static std::string symbol(size_t i) { return "∂" + std::to_string(i + 1); }
};

using PolyForm = AltTensor<FormTag>;
using PolyMultivector = AltTensor<MvTag>;

template <typename Tag>
AltTensor<Tag> wedge(const AltTensor<Tag>& a, const AltTensor<Tag>& b) {
    if (a.n != b.n) throw ShapeError("wedge: mixed ambient dimensions");
    AltTensor<Tag> r(a.n, a.deg + b.deg);
    for (const auto& [i, p] : a.comp)
        for (const auto& [j, q] : b.comp) {
            IdxTuple ij(i);
            ij.insert(ij.end(), j.begin(), j.end());
            r.add_term(ij, p * q);
        }
    return r;
}

/// Exterior derivative: d(p dx_I) = sum_v (∂p/∂x_v) dx_v ∧ dx_I.
PolyForm d(const PolyForm& w);

/// Differential of a scalar, as a 1-form: (scalar_d f)_i = ∂f/∂x_i.
PolyForm scalar_d(const Poly& f);

/// Interior product of a degree-1 multivector into a form (contraction into
/// the first slot): i_X(dx_{i1}∧…∧dx_{ik}) = Σ_j (-1)^{j-1} X^{i_j} · (slot j removed).
/// Pre: deg(w) >= 1.
PolyForm interior(const PolyMultivector& x, const PolyForm& w);

/// Iterated interior product i_{X1∧…∧Xk} = i_{Xk} ∘ … ∘ i_{X1}.
PolyForm interior_multi(const std::vector<PolyMultivector>& xs, const PolyForm& w);

/// Lie derivative via the homotopy formula L_X = i_X∘d + d∘i_X
/// (degree 0: L_X f = i_X df).
PolyForm lie_derivative(const PolyMultivector& x, const PolyForm& w);

/// Commutator of vector fields: [X,Y]^j = Σ_i (X^i ∂_i Y^j - Y^i ∂_i X^j).
PolyMultivector vf_bracket(const PolyMultivector& x, const PolyMultivector& y);

/// Schouten square of a bivector:
/// [π,π]^{ijk} = 2 Σ_l (π^{li} ∂_l π^{jk} + π^{lj} ∂_l π^{ki} + π^{lk} ∂_l π^{ij}).
PolyMultivector schouten_sq(const PolyMultivector& pi);

/// π♯ξ = i_ξ π, i.e. (π♯ξ)^j = Σ_i ξ_i π^{ij}.
PolyMultivector sharp(const PolyMultivector& pi, const PolyForm& xi);

/// (∧³π♯ h)^{ijk} = Σ_{l,m,n} h_{lmn} π^{li} π^{mj} π^{nk}.
PolyMultivector triple_sharp(const PolyMultivector& pi, const PolyForm& h);

/// Evaluation of a 1-form on a vector field: ξ(X) = Σ_i ξ_i X^i.
Poly form_apply(const PolyForm& xi, const PolyMultivector& x);

/// Directional derivative X(f) = Σ_i X^i ∂_i f.
Poly vf_apply(const PolyMultivector& x, const Poly& f);

/// Bivector on two 1-forms: π(α,β) = i_β i_α π = β(π♯α).
Poly bivector_eval(const PolyMultivector& pi, const PolyForm& alpha, const PolyForm& beta);

/// Convenience builders.
PolyMultivector coord_field(size_t n, size_t i);            // ∂_{i+1}
PolyForm coord_form(size_t n, size_t i);                    // dx_{i+1}
PolyForm form_monomial(size_t n, IdxTuple idx, Poly coeff); // coeff dx_I
PolyMultivector mv_monomial(size_t n, IdxTuple idx, Poly coeff);

} // namespace l2v
