#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "tracecert/ncpoly/cyclic.hpp"
#include "tracecert/ncpoly/ncpoly.hpp"
#include "tracecert/ncpoly/parse.hpp"

namespace tracecert::certkit {

using ncpoly::Commutator;
using ncpoly::NcPoly;
using ncpoly::Word;

/// Generator 0 is 1, generator i >= 1 is 1 - X_i^2.
inline NcPoly generator(int n, int gen) {
    if (gen < 0 || gen > n) throw DomainError("generator index " + std::to_string(gen) + " out of range");
    NcPoly p = NcPoly::constant(n, 1);
    if (gen > 0) p.add_term(Word::power(gen, 2), -1);
    return p;
}

/// lambda * g* p_gen g with lambda > 0.
struct Term {
    int gen = 0;
    Rational lambda = 1;
    NcPoly g;

    NcPoly expand(int n) const { return lambda * (adj(g) * generator(n, gen) * g); }
};

/// target + epsilon = sum of terms + sum of commutators, as an exact identity.
struct Certificate {
    int n = 0;
    NcPoly target;
    Rational epsilon = 0;
    std::vector<Term> terms;
    std::vector<Commutator> commutators;

    NcPoly expansion() const {
        NcPoly sum(n);
        for (const auto& t : terms) sum += t.expand(n);
        for (const auto& c : commutators) sum += c.expand();
        return sum;
    }

    NcPoly lhs() const { return target + NcPoly::constant(n, epsilon); }

    /// Smallest k with every term in M_{R,k}.
    int level() const {
        int k = 0;
        for (const auto& t : terms) k = std::max(k, std::max(t.g.degree(), 0) + (t.gen > 0 ? 1 : 0));
        return k;
    }

    /// Emits commutators for lhs - terms, which must be cyclically equivalent to 0.
    void close_with_commutators() {
        NcPoly gap = lhs() - expansion();
        auto split = ncpoly::commutator_decomposition(gap);
        if (!split.ok())
            throw InvariantError("certificate terms are not cyclically equivalent to the target; residue " +
                                 ncpoly::format(split.residue));
        for (auto& c : split.pairs) commutators.push_back(std::move(c));
    }
};

struct Mismatch {
    Word word;
    Rational expected;  // coefficient in target + epsilon
    Rational actual;    // coefficient in the expansion
};

struct VerifyReport {
    std::vector<Mismatch> mismatches;
    /// Structural problems: non-positive multipliers, bad generator indices, negative epsilon.
    std::vector<std::string> problems;

    bool ok() const { return mismatches.empty() && problems.empty(); }
    explicit operator bool() const { return ok(); }
};

inline VerifyReport verify(const Certificate& c) {
    VerifyReport r;
    if (c.epsilon < 0) r.problems.push_back("epsilon is negative");
    if (c.target.nvars() > c.n) r.problems.push_back("target uses more than n variables");
    for (std::size_t i = 0; i < c.terms.size(); ++i) {
        const auto& t = c.terms[i];
        if (t.gen < 0 || t.gen > c.n) r.problems.push_back("term " + std::to_string(i) + ": generator out of range");
        if (t.lambda <= 0) r.problems.push_back("term " + std::to_string(i) + ": multiplier is not positive");
    }
    if (!r.problems.empty()) return r;
    NcPoly lhs = c.lhs(), rhs = c.expansion();
    NcPoly diff = lhs - rhs;
    for (const auto& [w, d] : diff) r.mismatches.push_back({w, lhs.coeff(w), rhs.coeff(w)});
    return r;
}

inline std::string describe(const VerifyReport& r) {
    if (r.ok()) return "ok";
    std::string out;
    for (const auto& p : r.problems) out += p + "\n";
    for (const auto& m : r.mismatches)
        out += ncpoly::format_word(m.word) + ": expected " + to_string(m.expected) + ", got " + to_string(m.actual) +
               " (delta " + to_string(m.actual - m.expected) + ")\n";
    return out;
}

}  // namespace tracecert::certkit
