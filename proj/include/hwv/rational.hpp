#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace hwv {

/// Exact rational scalar. Every computation in this library is carried out
/// over the rationals; nothing is ever rounded.
using Rational = mpq_class;

inline Rational rational(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

/// "p/q", or just "p" when the denominator is 1.
inline std::string to_string(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

/// Parses "p" or "p/q" with optional leading '-'. Throws std::invalid_argument
/// on anything else (including q = 0).
inline Rational rational_from_string(const std::string& text) {
    auto is_integer = [](const std::string& s) {
        if (s.empty()) return false;
        std::size_t start = (s[0] == '-') ? 1 : 0;
        if (start == s.size()) return false;
        for (std::size_t i = start; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9') return false;
        return true;
    };
    std::string num = text, den = "1";
    if (auto slash = text.find('/'); slash != std::string::npos) {
        num = text.substr(0, slash);
        den = text.substr(slash + 1);
    }
    if (!is_integer(num) || !is_integer(den))
        throw std::invalid_argument("not a rational: '" + text + "'");
    Rational r{mpz_class(num), mpz_class(den)};
    if (r.get_den() == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
    r.canonicalize();
    return r;
}

}  // namespace hwv
