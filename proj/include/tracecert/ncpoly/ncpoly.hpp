#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "tracecert/error.hpp"
#include "tracecert/ncpoly/word.hpp"
#include "tracecert/rational.hpp"

namespace tracecert::ncpoly {

/// Polynomial in noncommuting self-adjoint variables X1..Xn with rational
/// coefficients. Zero coefficients are never stored, so equality is structural.
///
/// Binary operations accept operands with different variable counts; the
/// result lives in the larger ring.
class NcPoly {
public:
    using Terms = std::map<Word, Rational>;

    NcPoly() = default;
    explicit NcPoly(int n) : n_(n) {
        if (n < 0) throw DomainError("negative variable count");
    }

    static NcPoly constant(int n, const Rational& c) {
        NcPoly p(n);
        p.add_term(Word{}, c);
        return p;
    }
    static NcPoly monomial(int n, const Word& w, const Rational& c = 1) {
        NcPoly p(n);
        p.add_term(w, c);
        return p;
    }
    static NcPoly variable(int n, Letter i) { return monomial(n, Word{i}); }

    int nvars() const noexcept { return n_; }
    const Terms& terms() const noexcept { return terms_; }
    auto begin() const noexcept { return terms_.begin(); }
    auto end() const noexcept { return terms_.end(); }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }

    /// Maximum word length over the support; -1 for the zero polynomial.
    int degree() const {
        int d = -1;
        for (const auto& [w, c] : terms_) d = std::max(d, static_cast<int>(w.size()));
        return d;
    }

    Rational coeff(const Word& w) const {
        auto it = terms_.find(w);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    void add_term(const Word& w, const Rational& c) {
        if (c == 0) return;
        if (w.max_letter() > n_)
            throw DomainError("variable X" + std::to_string(w.max_letter()) + " out of range for n = " +
                              std::to_string(n_));
        auto [it, inserted] = terms_.try_emplace(w, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    /// Same coefficients viewed in a ring with at least `n` variables.
    NcPoly widened(int n) const {
        NcPoly out = *this;
        out.n_ = std::max(n_, n);
        return out;
    }

    NcPoly& operator+=(const NcPoly& o) {
        n_ = std::max(n_, o.n_);
        for (const auto& [w, c] : o.terms_) add_term(w, c);
        return *this;
    }
    NcPoly& operator-=(const NcPoly& o) {
        n_ = std::max(n_, o.n_);
        for (const auto& [w, c] : o.terms_) add_term(w, -c);
        return *this;
    }
    NcPoly& operator*=(const Rational& s) {
        if (s == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [w, c] : terms_) c *= s;
        return *this;
    }

    friend NcPoly operator+(NcPoly a, const NcPoly& b) { return a += b; }
    friend NcPoly operator-(NcPoly a, const NcPoly& b) { return a -= b; }
    friend NcPoly operator-(NcPoly a) { return a *= Rational(-1); }
    friend NcPoly operator*(NcPoly a, const Rational& s) { return a *= s; }
    friend NcPoly operator*(const Rational& s, NcPoly a) { return a *= s; }

    friend NcPoly operator*(const NcPoly& a, const NcPoly& b) {
        NcPoly out(std::max(a.n_, b.n_));
        for (const auto& [u, x] : a.terms_)
            for (const auto& [v, y] : b.terms_) out.add_term(u * v, x * y);
        return out;
    }

    NcPoly pow(unsigned k) const {
        NcPoly out = constant(n_, 1);
        for (unsigned i = 0; i < k; ++i) out = out * *this;
        return out;
    }

    friend bool operator==(const NcPoly& a, const NcPoly& b) { return a.terms_ == b.terms_; }

private:
    int n_ = 0;
    Terms terms_;
};

/// The involution: reverse every word (coefficients are real, so unchanged).
inline NcPoly adj(const NcPoly& f) {
    NcPoly out(f.nvars());
    for (const auto& [w, c] : f) out.add_term(w.adj(), c);
    return out;
}

inline bool is_symmetric(const NcPoly& f) { return adj(f) == f; }

/// Ring homomorphism X_j -> images[j-1]. Every variable of f needs an image.
inline NcPoly substitute(const NcPoly& f, const std::vector<NcPoly>& images) {
    int n_out = 0;
    for (const auto& g : images) n_out = std::max(n_out, g.nvars());
    NcPoly out(n_out);
    for (const auto& [w, c] : f) {
        NcPoly term = NcPoly::constant(n_out, c);
        for (Letter x : w) {
            if (x < 1 || static_cast<std::size_t>(x) > images.size())
                throw DomainError("no image for variable X" + std::to_string(x));
            term = term * images[static_cast<std::size_t>(x - 1)];
        }
        out += term;
    }
    return out;
}

/// Sum of absolute coefficient values.
inline Rational l1_norm(const NcPoly& f) {
    Rational s = 0;
    for (const auto& [w, c] : f) s += abs(c);
    return s;
}

}  // namespace tracecert::ncpoly
