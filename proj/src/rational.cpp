#include "l2v/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace l2v {

namespace {

bool all_digits(const std::string& s, size_t from, size_t to) {
    if (from >= to) return false;
    for (size_t i = from; i < to; ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

} // namespace

Rat rat_parse(const std::string& s) {
    // Accept exactly: [-]digits or [-]digits/digits (decimal, no whitespace).
    size_t slash = s.find('/');
    std::string num = slash == std::string::npos ? s : s.substr(0, slash);
    size_t num_start = (!num.empty() && (num[0] == '-' || num[0] == '+')) ? 1 : 0;
    if (!all_digits(num, num_start, num.size()))
        throw std::invalid_argument("malformed rational '" + s + "'");
    if (slash != std::string::npos) {
        if (!all_digits(s, slash + 1, s.size()))
            throw std::invalid_argument("malformed rational '" + s + "'");
    }
    Rat r(s, 10); // explicit base; the default auto-detects octal/hex prefixes
    if (r.get_den() == 0)
        throw std::invalid_argument("zero denominator in rational '" + s + "'");
    r.canonicalize();
    return r;
}

std::string rat_str(const Rat& r) {
    // mpq_class does not canonicalize two-argument constructions like
    // Rat(4, 6) on its own; normalize a copy so rendering is canonical.
    Rat c(r);
    c.canonicalize();
    if (c.get_den() == 1) return c.get_num().get_str();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

} // namespace l2v
