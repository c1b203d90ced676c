#pragma once

// Commutative polynomials, the projection that lets variables commute, and its
// section onto sorted words X1^a1 ... Xn^an.

#include <algorithm>
#include <compare>
#include <map>
#include <string>
#include <vector>

#include "tracecert/ncpoly/cyclic.hpp"
#include "tracecert/ncpoly/ncpoly.hpp"
#include "tracecert/ncpoly/parse.hpp"

namespace tracecert::ncpoly {

/// Exponent vector, ordered graded-lexicographically.
struct Exponents {
    std::vector<int> e;

    int total() const {
        int s = 0;
        for (int x : e) s += x;
        return s;
    }

    friend bool operator==(const Exponents&, const Exponents&) = default;
    friend std::strong_ordering operator<=>(const Exponents& a, const Exponents& b) {
        if (a.total() != b.total()) return a.total() <=> b.total();
        // Larger power of the first variable sorts first, matching sorted words.
        return b.e <=> a.e;
    }
};

class CommPoly {
public:
    using Terms = std::map<Exponents, Rational>;

    CommPoly() = default;
    explicit CommPoly(int n) : n_(n) {}

    static CommPoly constant(int n, const Rational& c) {
        CommPoly p(n);
        p.add_term(Exponents{std::vector<int>(static_cast<std::size_t>(n), 0)}, c);
        return p;
    }
    static CommPoly monomial(int n, std::vector<int> e, const Rational& c = 1) {
        if (static_cast<int>(e.size()) != n) throw DomainError("exponent vector length mismatch");
        CommPoly p(n);
        p.add_term(Exponents{std::move(e)}, c);
        return p;
    }

    int nvars() const noexcept { return n_; }
    const Terms& terms() const noexcept { return terms_; }
    auto begin() const noexcept { return terms_.begin(); }
    auto end() const noexcept { return terms_.end(); }
    bool is_zero() const noexcept { return terms_.empty(); }

    int degree() const {
        int d = -1;
        for (const auto& [e, c] : terms_) d = std::max(d, e.total());
        return d;
    }

    Rational coeff(const Exponents& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    void add_term(const Exponents& e, const Rational& c) {
        if (c == 0) return;
        if (static_cast<int>(e.e.size()) != n_) throw DomainError("exponent vector length mismatch");
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    CommPoly& operator+=(const CommPoly& o) {
        check(o);
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    CommPoly& operator-=(const CommPoly& o) {
        check(o);
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    CommPoly& operator*=(const Rational& s) {
        if (s == 0) terms_.clear();
        for (auto& [e, c] : terms_) c *= s;
        return *this;
    }
    friend CommPoly operator+(CommPoly a, const CommPoly& b) { return a += b; }
    friend CommPoly operator-(CommPoly a, const CommPoly& b) { return a -= b; }
    friend CommPoly operator*(CommPoly a, const Rational& s) { return a *= s; }
    friend CommPoly operator*(const Rational& s, CommPoly a) { return a *= s; }
    friend CommPoly operator*(const CommPoly& a, const CommPoly& b) {
        a.check(b);
        CommPoly out(a.n_);
        for (const auto& [u, x] : a.terms_)
            for (const auto& [v, y] : b.terms_) {
                Exponents e = u;
                for (std::size_t i = 0; i < e.e.size(); ++i) e.e[i] += v.e[i];
                out.add_term(e, x * y);
            }
        return out;
    }
    friend bool operator==(const CommPoly& a, const CommPoly& b) {
        return a.n_ == b.n_ && a.terms_ == b.terms_;
    }

    double evaluate(const std::vector<double>& point) const {
        if (static_cast<int>(point.size()) != n_) throw DomainError("point dimension mismatch");
        double s = 0;
        for (const auto& [e, c] : terms_) {
            double m = to_double(c);
            for (std::size_t i = 0; i < e.e.size(); ++i)
                for (int k = 0; k < e.e[i]; ++k) m *= point[i];
            s += m;
        }
        return s;
    }

private:
    int n_ = 0;
    Terms terms_;

    void check(const CommPoly& o) const {
        if (o.n_ != n_) throw DomainError("commutative polynomials in different rings");
    }
};

/// The ring epimorphism letting the variables commute.
inline CommPoly commutative_project(const NcPoly& f) {
    const int n = f.nvars();
    CommPoly out(n);
    for (const auto& [w, c] : f) {
        std::vector<int> e(static_cast<std::size_t>(n), 0);
        for (Letter x : w) ++e[static_cast<std::size_t>(x - 1)];
        out.add_term(Exponents{std::move(e)}, c);
    }
    return out;
}

inline Word sorted_word(const Exponents& e) {
    std::vector<Letter> letters;
    for (std::size_t i = 0; i < e.e.size(); ++i)
        letters.insert(letters.end(), static_cast<std::size_t>(e.e[i]), static_cast<Letter>(i + 1));
    return Word(std::move(letters));
}

/// The unique combination of sorted words X1^a1...Xn^an projecting onto g.
inline NcPoly cyclic_sort_section(const CommPoly& g) {
    NcPoly out(g.nvars());
    for (const auto& [e, c] : g) out.add_term(sorted_word(e), c);
    return out;
}

/// True iff the word is a rotation of its sorted rearrangement.
inline bool is_cyclically_sorted(const Word& w, int n) {
    std::vector<int> e(static_cast<std::size_t>(n), 0);
    for (Letter x : w) ++e[static_cast<std::size_t>(x - 1)];
    // A sorted word is its own least rotation.
    return cyclic_canonical(w).representative == sorted_word(Exponents{std::move(e)});
}

/// Every supporting word is a rotation of some X^i Y^j (for two variables;
/// the obvious generalization otherwise).
inline bool is_cyclically_sorted(const NcPoly& f) {
    for (const auto& [w, c] : f)
        if (!is_cyclically_sorted(w, f.nvars())) return false;
    return true;
}

/// Text form through the sorted-word section, e.g. "1 - X1^2 + X1^2*X2^2".
inline std::string format(const CommPoly& g) { return format(cyclic_sort_section(g)); }

/// Parses noncommutative text and lets the variables commute.
inline CommPoly parse_commutative(std::string_view text, int n = 0) {
    return commutative_project(parse(text, n));
}

}  // namespace tracecert::ncpoly
