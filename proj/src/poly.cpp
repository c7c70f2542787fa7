#include "l2v/poly.hpp"

#include "l2v/errors.hpp"

#include <sstream>

namespace l2v {

bool GradedLexDesc::operator()(const std::vector<size_t>& a, const std::vector<size_t>& b) const {
    size_t da = 0, db = 0;
    for (size_t e : a) da += e;
    for (size_t e : b) db += e;
    if (da != db) return da > db;
    return a > b; // lexicographically larger exponent vector first
}

Poly Poly::constant(size_t n, const Rat& c) {
    Poly p(n);
    p.add_term(std::vector<size_t>(n, 0), c);
    return p;
}

Poly Poly::var(size_t n, size_t i) {
    if (i >= n) throw ShapeError("Poly::var: index out of range");
    std::vector<size_t> e(n, 0);
    e[i] = 1;
    Poly p(n);
    p.add_term(e, Rat(1));
    return p;
}

Poly Poly::monomial(size_t n, const std::vector<size_t>& exps, const Rat& c) {
    if (exps.size() != n) throw ShapeError("Poly::monomial: exponent count mismatch");
    Poly p(n);
    p.add_term(exps, c);
    return p;
}

bool Poly::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    for (size_t e : terms_.begin()->first)
        if (e != 0) return false;
    return true;
}

long Poly::total_degree() const {
    if (terms_.empty()) return -1;
    // Leading term under graded-lex-descending has maximal total degree.
    long d = 0;
    for (size_t e : terms_.begin()->first) d += static_cast<long>(e);
    return d;
}

void Poly::add_term(const std::vector<size_t>& exps, const Rat& c) {
    if (exps.size() != n_) throw ShapeError("Poly::add_term: exponent count mismatch");
    if (c == 0) return;
    auto it = terms_.find(exps);
    if (it == terms_.end()) {
        terms_.emplace(exps, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Poly Poly::operator+(const Poly& o) const {
    if (n_ != o.n_) throw ShapeError("Poly: mixed variable counts");
    Poly r(*this);
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

Poly Poly::operator-(const Poly& o) const {
    if (n_ != o.n_) throw ShapeError("Poly: mixed variable counts");
    Poly r(*this);
    for (const auto& [e, c] : o.terms_) r.add_term(e, Rat(-c));
    return r;
}

Poly Poly::operator-() const {
    Poly r(n_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, Rat(-c));
    return r;
}

Poly Poly::operator*(const Poly& o) const {
    if (n_ != o.n_) throw ShapeError("Poly: mixed variable counts");
    Poly r(n_);
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_) {
            std::vector<size_t> e(n_);
            for (size_t i = 0; i < n_; ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    return r;
}

Poly Poly::scaled(const Rat& c) const {
    Poly r(n_);
    if (c == 0) return r;
    for (const auto& [e, k] : terms_) r.terms_.emplace(e, k * c);
    return r;
}

Poly Poly::derivative(size_t v) const {
    if (v >= n_) throw ShapeError("Poly::derivative: variable out of range");
    Poly r(n_);
    for (const auto& [e, c] : terms_) {
        if (e[v] == 0) continue;
        std::vector<size_t> de(e);
        --de[v];
        r.add_term(de, c * Rat(static_cast<long>(e[v])));
    }
    return r;
}

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Rat a = c > 0 ? c : Rat(-c);
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c > 0 ? " + " : " - ");
        }
        bool has_vars = false;
        for (size_t v : e)
            if (v > 0) has_vars = true;
        if (!has_vars || a != 1) {
            out << rat_str(a);
            if (has_vars) out << " ";
        }
        bool first_var = true;
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!first_var) out << " ";
            first_var = false;
            out << "x" << (i + 1);
            if (e[i] > 1) out << "^" << e[i];
        }
    }
    return out.str();
}

Poly Poly::parse(size_t n, const std::string& text) {
    // Tokenize on whitespace; "+"/"-" tokens separate terms; a "-" glued to
    // the front of a token negates it.
    std::istringstream in(text);
    std::vector<std::string> tokens;
    std::string tok;
    while (in >> tok) tokens.push_back(tok);
    if (tokens.empty()) throw ParseError("empty polynomial", text);

    Poly result(n);
    bool term_open = false;
    int sign = 1;
    Rat coeff(1);
    std::vector<size_t> exps(n, 0);
    bool saw_coeff = false, saw_var = false;

    auto flush = [&]() {
        if (!term_open) throw ParseError("dangling sign in polynomial", text);
        result.add_term(exps, coeff * sign);
        term_open = false;
        sign = 1;
        coeff = 1;
        exps.assign(n, 0);
        saw_coeff = saw_var = false;
    };

    for (std::string t : tokens) {
        if (t == "+" || t == "-") {
            flush();
            sign = (t == "-") ? -1 : 1;
            continue;
        }
        while (!t.empty() && t[0] == '-') {
            sign = -sign;
            t = t.substr(1);
        }
        if (t.empty()) throw ParseError("stray '-' in polynomial", text);
        if (t[0] == 'x') {
            size_t caret = t.find('^');
            std::string var_part = caret == std::string::npos ? t.substr(1) : t.substr(1, caret - 1);
            size_t vi = 0;
            try {
                vi = std::stoul(var_part);
            } catch (...) {
                throw ParseError("bad variable '" + t + "'", text);
            }
            if (vi < 1 || vi > n)
                throw ParseError("variable x" + std::to_string(vi) + " out of range (n=" +
                                     std::to_string(n) + ")",
                                 text);
            size_t pow = 1;
            if (caret != std::string::npos) {
                try {
                    pow = std::stoul(t.substr(caret + 1));
                } catch (...) {
                    throw ParseError("bad exponent in '" + t + "'", text);
                }
            }
            exps[vi - 1] += pow;
            term_open = true;
            saw_var = true;
        } else {
            if (saw_coeff || saw_var)
                throw ParseError("unexpected coefficient '" + t + "'", text);
            try {
                coeff = rat_parse(t);
            } catch (const std::exception& ex) {
                throw ParseError(ex.what(), text);
            }
            term_open = true;
            saw_coeff = true;
        }
    }
    flush();
    return result;
}

Poly Poly::permuted(const std::vector<size_t>& perm) const {
    if (perm.size() != n_) throw ShapeError("Poly::permuted: wrong permutation size");
    Poly r(n_);
    for (const auto& [e, c] : terms_) {
        std::vector<size_t> pe(n_, 0);
        for (size_t i = 0; i < n_; ++i) pe[perm[i]] = e[i];
        r.add_term(pe, c);
    }
    return r;
}

} // namespace l2v
