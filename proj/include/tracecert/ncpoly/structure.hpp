#pragma once

// Multihomogeneous decomposition and the polarization recursion used to
// reduce polynomials of degree k in a variable to degree k - 1.

#include <compare>
#include <map>
#include <vector>

#include "tracecert/ncpoly/ncpoly.hpp"

namespace tracecert::ncpoly {

/// Per-variable degrees (k_1, ..., k_n).
struct MultiDegree {
    std::vector<int> degrees;

    int total() const {
        int s = 0;
        for (int d : degrees) s += d;
        return s;
    }

    friend bool operator==(const MultiDegree&, const MultiDegree&) = default;
    friend auto operator<=>(const MultiDegree&, const MultiDegree&) = default;
};

inline MultiDegree multidegree(const Word& w, int n) {
    MultiDegree d{std::vector<int>(static_cast<std::size_t>(n), 0)};
    for (Letter x : w) ++d.degrees[static_cast<std::size_t>(x - 1)];
    return d;
}

inline std::map<MultiDegree, NcPoly> multihomogeneous_parts(const NcPoly& f) {
    std::map<MultiDegree, NcPoly> parts;
    for (const auto& [w, c] : f) {
        auto [it, _] = parts.try_emplace(multidegree(w, f.nvars()), NcPoly(f.nvars()));
        it->second.add_term(w, c);
    }
    return parts;
}

/// Degree of every monomial in X_i if they all agree, otherwise -1.
inline int uniform_degree_in(const NcPoly& f, Letter i) {
    int d = -2;
    for (const auto& [w, c] : f) {
        int k = static_cast<int>(w.count(i));
        if (d == -2)
            d = k;
        else if (d != k)
            return -1;
    }
    return d == -2 ? 0 : d;
}

/// One polarization step in X_i. A new variable X_{n+1} plays the role of X_i':
///   f(.., X_i + X_i', ..) - f(.., X_i, ..) - f(.., X_i', ..),
/// i.e. every monomial is replaced by the 2^k - 2 monomials obtained by
/// renaming at least one but not all occurrences of X_i.
inline NcPoly polarize_step(const NcPoly& f, Letter i, int k) {
    const int n = f.nvars();
    if (i < 1 || i > n) throw DomainError("polarization variable out of range");
    if (k < 2) throw DomainError("polarization needs degree k >= 2 (division by 2^k - 2)");
    if (uniform_degree_in(f, i) != k && !f.is_zero())
        throw DomainError("every monomial must have degree exactly " + std::to_string(k) + " in X" +
                          std::to_string(i));
    const Letter primed = n + 1;
    NcPoly out(n + 1);
    for (const auto& [w, c] : f) {
        std::vector<std::size_t> slots;
        for (std::size_t p = 0; p < w.size(); ++p)
            if (w[p] == i) slots.push_back(p);
        const unsigned long full = (1UL << slots.size()) - 1;
        for (unsigned long mask = 1; mask < full; ++mask) {
            std::vector<Letter> letters = w.letters();
            for (std::size_t b = 0; b < slots.size(); ++b)
                if (mask & (1UL << b)) letters[slots[b]] = primed;
            out.add_term(Word(std::move(letters)), c);
        }
    }
    return out;
}

/// Inverse of polarize_step: X_{n+1} -> X_i, divide by 2^k - 2, drop X_{n+1}.
inline NcPoly resubstitute(const NcPoly& polarized, Letter i, int k) {
    const int n = polarized.nvars() - 1;
    if (n < 1 || i < 1 || i > n) throw DomainError("resubstitution variable out of range");
    if (k < 2) throw DomainError("resubstitution needs k >= 2");
    NcPoly out(n);
    const Rational scale = make_rational(1, (1L << k) - 2);
    for (const auto& [w, c] : polarized) {
        std::vector<Letter> letters = w.letters();
        for (Letter& x : letters)
            if (x == n + 1) x = i;
        out.add_term(Word(std::move(letters)), c * scale);
    }
    return out;
}

}  // namespace tracecert::ncpoly
