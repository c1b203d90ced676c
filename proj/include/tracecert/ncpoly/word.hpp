#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "tracecert/error.hpp"

namespace tracecert::ncpoly {

/// Variable index, 1-based (X1 is letter 1).
using Letter = int;

/// An element of the free monoid on X1..Xn. The empty word is the unit 1.
///
/// Words are ordered graded-lexicographically: shorter words first, then
/// lexicographically by letter index.
class Word {
public:
    Word() = default;
    Word(std::initializer_list<Letter> letters) : letters_(letters) {}
    explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}

    static Word power(Letter x, std::size_t k) { return Word(std::vector<Letter>(k, x)); }

    std::size_t size() const noexcept { return letters_.size(); }
    bool empty() const noexcept { return letters_.empty(); }
    Letter operator[](std::size_t i) const { return letters_[i]; }
    const std::vector<Letter>& letters() const noexcept { return letters_; }
    auto begin() const noexcept { return letters_.begin(); }
    auto end() const noexcept { return letters_.end(); }

    Letter max_letter() const noexcept {
        return letters_.empty() ? 0 : *std::max_element(letters_.begin(), letters_.end());
    }

    /// Number of occurrences of `x`.
    std::size_t count(Letter x) const {
        return static_cast<std::size_t>(std::count(letters_.begin(), letters_.end(), x));
    }

    /// The involution: reversed letter order.
    Word adj() const { return Word(std::vector<Letter>(letters_.rbegin(), letters_.rend())); }

    /// Left rotation by `r` letters: v1 v2 -> v2 v1 with |v1| = r.
    Word rotated(std::size_t r) const {
        if (letters_.empty()) return *this;
        std::vector<Letter> out(letters_.size());
        std::rotate_copy(letters_.begin(), letters_.begin() + static_cast<long>(r % letters_.size()),
                         letters_.end(), out.begin());
        return Word(std::move(out));
    }

    Word prefix(std::size_t len) const {
        return Word(std::vector<Letter>(letters_.begin(), letters_.begin() + static_cast<long>(len)));
    }
    Word suffix_from(std::size_t pos) const {
        return Word(std::vector<Letter>(letters_.begin() + static_cast<long>(pos), letters_.end()));
    }

    friend Word operator*(const Word& a, const Word& b) {
        std::vector<Letter> out;
        out.reserve(a.size() + b.size());
        out.insert(out.end(), a.letters_.begin(), a.letters_.end());
        out.insert(out.end(), b.letters_.begin(), b.letters_.end());
        return Word(std::move(out));
    }

    friend bool operator==(const Word&, const Word&) = default;
    friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
        if (a.size() != b.size()) return a.size() <=> b.size();
        return a.letters_ <=> b.letters_;
    }

private:
    std::vector<Letter> letters_;
};

/// Offset of the lexicographically least rotation (two-pointer scan, linear time).
inline std::size_t least_rotation_offset(const Word& w) {
    const std::size_t n = w.size();
    if (n < 2) return 0;
    std::size_t i = 0, j = 1, k = 0;
    while (i < n && j < n && k < n) {
        Letter a = w[(i + k) % n], b = w[(j + k) % n];
        if (a == b) {
            ++k;
            continue;
        }
        if (a > b)
            i += k + 1;
        else
            j += k + 1;
        if (i == j) ++j;
        k = 0;
    }
    return std::min(i, j);
}

/// Rotation class of a word, identified by its least rotation.
struct CyclicClass {
    Word representative;

    friend bool operator==(const CyclicClass&, const CyclicClass&) = default;
    friend auto operator<=>(const CyclicClass&, const CyclicClass&) = default;
};

inline CyclicClass cyclic_canonical(const Word& w) { return {w.rotated(least_rotation_offset(w))}; }

/// Key shared by the rotation class of w and the rotation class of w*. Symmetric
/// data (f = f*, tracial functionals with L(w) = L(w*)) is constant on these keys.
inline Word involution_cyclic_key(const Word& w) {
    Word a = cyclic_canonical(w).representative;
    Word b = cyclic_canonical(w.adj()).representative;
    return std::min(a, b);
}

/// All words over X1..Xn of length <= max_len, graded-lex order.
inline std::vector<Word> words_up_to(int n, int max_len) {
    if (n < 0) throw DomainError("negative variable count");
    std::vector<Word> out{Word{}};
    std::size_t level_begin = 0;
    for (int len = 1; len <= max_len; ++len) {
        std::size_t level_end = out.size();
        for (std::size_t i = level_begin; i < level_end; ++i)
            for (Letter x = 1; x <= n; ++x) out.push_back(out[i] * Word{x});
        level_begin = level_end;
    }
    return out;
}

/// "1" for the unit, otherwise factors like X1^2*X2.
inline std::string format_word(const Word& w) {
    if (w.empty()) return "1";
    std::string out;
    std::size_t i = 0;
    while (i < w.size()) {
        std::size_t j = i;
        while (j < w.size() && w[j] == w[i]) ++j;
        if (!out.empty()) out += '*';
        out += 'X' + std::to_string(w[i]);
        if (j - i > 1) out += '^' + std::to_string(j - i);
        i = j;
    }
    return out;
}

}  // namespace tracecert::ncpoly
