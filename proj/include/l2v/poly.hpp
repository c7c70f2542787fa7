#pragma once

#include "l2v/rational.hpp"

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace l2v {

/// Monomial order: total degree first, then lexicographic, both descending,
/// so map iteration yields the canonical leading-term-first rendering order.
struct GradedLexDesc {
    bool operator()(const std::vector<size_t>& a, const std::vector<size_t>& b) const;
};

/// Sparse multivariate polynomial over exact rationals in variables x1..xn.
/// Invariant: no zero coefficients are stored; exponent vectors have size n.
class Poly {
public:
    Poly() = default;
    explicit Poly(size_t nvars) : n_(nvars) {}

    static Poly zero(size_t n) { return Poly(n); }
    static Poly constant(size_t n, const Rat& c);
    static Poly var(size_t n, size_t i); // x_{i+1}
    static Poly monomial(size_t n, const std::vector<size_t>& exps, const Rat& c);

    size_t nvars() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    long total_degree() const; // -1 for the zero polynomial

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator-() const;
    Poly operator*(const Poly& o) const;
    Poly scaled(const Rat& c) const;
    Poly derivative(size_t var) const;
    bool operator==(const Poly& o) const { return n_ == o.n_ && terms_ == o.terms_; }

    const std::map<std::vector<size_t>, Rat, GradedLexDesc>& terms() const { return terms_; }

    /// Textual syntax: terms like "3/2 x1^2 x3" joined by " + " / " - ";
    /// the zero polynomial renders as "0".
    std::string str() const;

    /// Parse the textual syntax (n fixed by the caller). Throws ParseError.
    static Poly parse(size_t n, const std::string& text);

    /// Relabel variables: new variable perm[i] <- old variable i.
    Poly permuted(const std::vector<size_t>& perm) const;

    void add_term(const std::vector<size_t>& exps, const Rat& c);

private:
    size_t n_ = 0;
    std::map<std::vector<size_t>, Rat, GradedLexDesc> terms_;
};

} // namespace l2v
