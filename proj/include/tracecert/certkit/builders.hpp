#pragma once

// Explicit certificates: telescoping powers, the 1 - a + a^m/m identity, the
// (1 - X^2)(1 - Y^2) family, the Motzkin-type polynomial and word bounds.

#include "tracecert/certkit/certificate.hpp"

namespace tracecert::certkit {

namespace detail {

inline NcPoly x_pow(int n, int i, int k) { return NcPoly::monomial(n, Word::power(i, static_cast<std::size_t>(k))); }

inline void check_variable(int n, int i) {
    if (i < 1 || i > n) throw DomainError("variable index " + std::to_string(i) + " out of range");
}

}  // namespace detail

/// 1 - X_i^(2m) = sum_{k<m} X_i^k (1 - X_i^2) X_i^k.
inline Certificate telescope_power(int n, int i, int m) {
    detail::check_variable(n, i);
    if (m < 1) throw DomainError("telescope_power needs m >= 1");
    Certificate c{n, NcPoly::constant(n, 1) - detail::x_pow(n, i, 2 * m), 0, {}, {}};
    for (int k = 0; k < m; ++k) c.terms.push_back({i, 1, detail::x_pow(n, i, k)});
    return c;
}

/// 1 - a + a^m/m - 1/m = (1/m) sum_{k<=m-2} (m-1-k) ((1-a) X^k)^2 with a = X_i^2.
inline Certificate remark37(int n, int i, int m) {
    detail::check_variable(n, i);
    if (m < 2) throw DomainError("remark37 needs m >= 2");
    NcPoly one = NcPoly::constant(n, 1), a = detail::x_pow(n, i, 2);
    Rational inv = make_rational(1, m);
    Certificate c{n, one - a + inv * detail::x_pow(n, i, 2 * m) - inv * one, 0, {}, {}};
    for (int k = 0; k <= m - 2; ++k) c.terms.push_back({0, make_rational(m - 1 - k, m), detail::x_pow(n, i, k) * (one - a)});
    return c;
}

/// (1 - X^2)(1 - Y^2) + 1/m in M_{R, m+1}.
inline Certificate example42(int m) {
    if (m < 2) throw DomainError("example42 needs m >= 2");
    const int n = 2;
    NcPoly one = NcPoly::constant(n, 1);
    NcPoly x2 = detail::x_pow(n, 1, 2), y = detail::x_pow(n, 2, 1);
    Rational inv = make_rational(1, m);
    Certificate c{n, (one - x2) * (one - detail::x_pow(n, 2, 2)), inv, {}, {}};

    // (1/m) X^m Y^2 X^m
    c.terms.push_back({0, inv, y * detail::x_pow(n, 1, m)});
    // (1/m)(1 - X^(2m)), telescoped
    for (const auto& t : telescope_power(n, 1, m).terms) c.terms.push_back({t.gen, inv * t.lambda, t.g});
    // (1 - X^2 + X^(2m)/m)(1 - Y^2) = (1/m)(1 - Y^2) + sum (m-1-k)/m h_k (1 - Y^2) h_k
    c.terms.push_back({2, inv, one});
    for (const auto& t : remark37(n, 1, m).terms) c.terms.push_back({2, t.lambda, t.g});

    c.close_with_commutators();
    return c;
}

/// Motzkin-type f = Y X^4 Y + X Y^4 X - 3 X Y^2 X + 1, plus epsilon > 0.
inline Certificate motzkin_decomposition(const Rational& epsilon) {
    if (epsilon <= 0) throw DomainError("motzkin_decomposition needs epsilon > 0");
    const int n = 2;
    NcPoly one = NcPoly::constant(n, 1);
    NcPoly x = detail::x_pow(n, 1, 1), y = detail::x_pow(n, 2, 1);
    NcPoly f = ncpoly::parse("Y*X^4*Y + X*Y^4*X - 3*X*Y^2*X + 1", n);

    // Smallest m with 1/m <= epsilon.
    Integer m_int = epsilon.get_den() / epsilon.get_num();
    if (m_int < 2) m_int = 2;
    if (Rational(1) / Rational(m_int) > epsilon) m_int += 1;
    if (!m_int.fits_sint_p()) throw DomainError("epsilon too small");
    const int m = static_cast<int>(m_int.get_si());

    Certificate c{n, f, epsilon, {}, {}};
    c.terms.push_back({0, 1, (one - x * x) * y});
    c.terms.push_back({0, 1, (one - y * y) * x});
    for (const auto& t : example42(m).terms) c.terms.push_back(t);
    Rational rest = epsilon - make_rational(1, m);
    if (rest > 0) c.terms.push_back({0, rest, one});
    c.close_with_commutators();
    return c;
}

/// 2 - sign (w + w*) = (1 - sign w)*(1 - sign w) + sum_j t_j* (1 - X_{i_j}^2) t_j with
/// t_j the suffix of w after position j.
inline Certificate word_bound_certificate(int n, const Word& w, int sign) {
    if (sign != 1 && sign != -1) throw DomainError("sign must be +1 or -1");
    if (w.max_letter() > n) throw DomainError("word uses a variable beyond n");
    NcPoly one = NcPoly::constant(n, 1);
    NcPoly wp = NcPoly::monomial(n, w);
    Certificate c{n, NcPoly::constant(n, 2) - Rational(sign) * (wp + adj(wp)), 0, {}, {}};
    c.terms.push_back({0, 1, one - Rational(sign) * wp});
    for (std::size_t j = 0; j < w.size(); ++j) c.terms.push_back({w[j], 1, NcPoly::monomial(n, w.suffix_from(j + 1))});
    return c;
}

}  // namespace tracecert::certkit
