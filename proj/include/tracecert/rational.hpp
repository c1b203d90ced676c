#pragma once

// Exact rationals (GMP) and conversions between rationals and doubles.

#include <cmath>
#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "tracecert/error.hpp"

namespace tracecert {

using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(long num, long den = 1) {
    if (den == 0) throw DomainError("zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

/// Parses "p", "-p" or "p/q".
inline Rational parse_rational(std::string_view text) {
    std::string s(text);
    auto bad = [&] { return ParseError("malformed rational '" + s + "'", 0); };
    if (s.empty()) throw bad();
    std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    std::size_t slash = s.find('/');
    auto digits = [&](std::size_t a, std::size_t b) {
        if (a >= b) return false;
        for (std::size_t i = a; i < b; ++i)
            if (s[i] < '0' || s[i] > '9') return false;
        return true;
    };
    if (slash == std::string::npos) {
        if (!digits(start, s.size())) throw bad();
    } else if (!digits(start, slash) || !digits(slash + 1, s.size())) {
        throw bad();
    }
    Rational q;
    if (q.set_str(s[0] == '+' ? s.substr(1) : s, 10) != 0) throw bad();
    if (q.get_den() == 0) throw ParseError("zero denominator in '" + s + "'", 0);
    q.canonicalize();
    return q;
}

/// "p" for integers, "p/q" otherwise.
inline std::string to_string(const Rational& q) { return q.get_str(); }

inline double to_double(const Rational& q) { return q.get_d(); }

/// Exact value of a finite double.
inline Rational exact_rational(double x) {
    if (!std::isfinite(x)) throw DomainError("non-finite value cannot be rationalized");
    return Rational(x);
}

/// Best rational approximation p/q of x with q <= max_den (continued fractions).
inline Rational rationalize(double x, const Integer& max_den) {
    Rational exact = exact_rational(x);
    if (exact.get_den() <= max_den) return exact;

    // Convergents h/k of the continued fraction of `exact`.
    Integer h_prev = 0, h = 1, k_prev = 1, k = 0;
    Integer num = exact.get_num(), den = exact.get_den();
    Integer best_h = 0, best_k = 1;
    while (den != 0) {
        Integer a;
        mpz_fdiv_q(a.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        Integer h_next = a * h + h_prev;
        Integer k_next = a * k + k_prev;
        if (k_next > max_den) {
            // Semiconvergent check: the largest admissible step may beat the last convergent.
            Integer t = (max_den - k_prev) / k;
            Integer h_semi = t * h + h_prev, k_semi = t * k + k_prev;
            Rational last(h, k), semi(h_semi, k_semi);
            last.canonicalize();
            semi.canonicalize();
            if (k_semi > 0 && abs(semi - exact) < abs(last - exact)) return semi;
            return last;
        }
        h_prev = h;
        h = h_next;
        k_prev = k;
        k = k_next;
        best_h = h;
        best_k = k;
        Integer rem = num - a * den;
        num = den;
        den = rem;
    }
    Rational r(best_h, best_k);
    r.canonicalize();
    return r;
}

}  // namespace tracecert
