#pragma once

#include "l2v/crossed_module.hpp"
#include "l2v/spaces.hpp"

namespace l2v {

/// Module-valued Leibniz cochain of degree k >= 0. Degree 0 is a single
/// module vector `v0`; degree k >= 1 is a k-linear map g^k -> V stored
/// densely in `tensor`.
struct Cochain {
    size_t degree = 0;
    LeibnizRep rep;
    StructureTensor tensor; // used when degree >= 1
    Vec v0;                 // used when degree == 0

    static Cochain zero(const LeibnizRep& rep, size_t degree);
    static Cochain from_vector(const LeibnizRep& rep, Vec v);
    static Cochain from_tensor(const LeibnizRep& rep, StructureTensor t);

    /// Multilinear evaluation on coordinate vectors (degree-many arguments).
    Vec eval(const std::vector<Vec>& args) const;

    bool is_zero() const;
    bool operator==(const Cochain& o) const;
};

/// Coboundary of c, one degree higher:
///   (∂c)(g_1,...,g_{k+1}) =
///       Σ_{i=1..k}   (-1)^{i+1} l_{g_i} c(...ĝ_i...)
///     + (-1)^{k+1}   r_{g_{k+1}} c(g_1,...,g_k)
///     + Σ_{i<j}      (-1)^i c(g_1,...,ĝ_i,...,g_{j-1},[g_i,g_j],g_{j+1},...)
/// with [g_i,g_j] standing in slot j-1 after slot i is removed.
/// Degree 0: (∂v)(g) = -r_g v.
Cochain coboundary(const Cochain& c);

bool is_cocycle(const Cochain& c);

} // namespace l2v
