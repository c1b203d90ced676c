#pragma once

// Text form of polynomials:
//
//   poly   := ['+'|'-'] term (('+'|'-') term)*
//   term   := coeff | [coeff '*'?] factor ('*'? factor)*
//   factor := primary ('^' uint)*
//   primary:= var | '(' poly ')' | 'adj(' poly ')'
//   var    := 'X' uint | 'X' | 'Y' | 'Z'        (X, Y, Z alias X1, X2, X3)
//   coeff  := uint ['/' uint]
//
// Whitespace between tokens is ignored.

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>

#include "tracecert/error.hpp"
#include "tracecert/ncpoly/ncpoly.hpp"

namespace tracecert::ncpoly {

namespace detail {

class PolyParser {
public:
    PolyParser(std::string_view text, int n) : text_(text), n_(n) {}

    NcPoly parse() {
        NcPoly out = poly();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        if (n_ > 0) return out.widened(n_);
        return out;
    }

    int max_index() const noexcept { return max_index_; }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
    int n_;  // 0 = infer
    int max_index_ = 0;

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }
    bool accept(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }

    bool starts_factor() {
        char c = peek();
        return c == 'X' || c == 'Y' || c == 'Z' || c == '(' || text_.substr(pos_, 4) == "adj(";
    }

    std::string digits() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("expected digits");
        return std::string(text_.substr(start, pos_ - start));
    }

    int small_uint() {
        std::size_t at = pos_;
        std::string d = digits();
        if (d.size() > 6) {
            pos_ = at;
            fail("integer too large");
        }
        return std::stoi(d);
    }

    NcPoly poly() {
        NcPoly out(n_);
        bool negate = false;
        if (accept('-'))
            negate = true;
        else
            accept('+');
        for (;;) {
            NcPoly t = term();
            if (negate)
                out -= t;
            else
                out += t;
            if (accept('+'))
                negate = false;
            else if (accept('-'))
                negate = true;
            else
                break;
        }
        return out;
    }

    NcPoly term() {
        NcPoly out = NcPoly::constant(n_, 1);
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            Integer num(digits());
            Integer den = 1;
            if (accept('/')) {
                std::size_t at = pos_;
                den = Integer(digits());
                if (den == 0) {
                    pos_ = at;
                    fail("zero denominator");
                }
            }
            Rational c(num, den);
            c.canonicalize();
            out *= c;
            bool star = accept('*');
            if (!starts_factor()) {
                if (star) fail("expected factor after '*'");
                return out;
            }
        } else if (!starts_factor()) {
            fail("expected term");
        }
        out = out * factor();
        for (;;) {
            if (accept('*')) {
                if (!starts_factor()) fail("expected factor after '*'");
                out = out * factor();
            } else if (starts_factor()) {
                out = out * factor();
            } else {
                break;
            }
        }
        return out;
    }

    NcPoly factor() {
        NcPoly base = primary();
        while (accept('^')) base = base.pow(static_cast<unsigned>(small_uint()));
        return base;
    }

    NcPoly primary() {
        skip_ws();
        if (text_.substr(pos_, 4) == "adj(") {
            pos_ += 4;
            NcPoly inner = poly();
            expect(')');
            return adj(inner);
        }
        if (accept('(')) {
            NcPoly inner = poly();
            expect(')');
            return inner;
        }
        std::size_t at = pos_;
        char c = text_[pos_++];
        int index = 0;
        if (c == 'X') {
            if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                index = small_uint();
            else
                index = 1;
        } else if (c == 'Y') {
            index = 2;
        } else if (c == 'Z') {
            index = 3;
        } else {
            pos_ = at;
            fail("expected variable");
        }
        if (index < 1 || (n_ > 0 && index > n_)) {
            pos_ = at;
            fail("variable index " + std::to_string(index) + " out of range");
        }
        max_index_ = std::max(max_index_, index);
        int width = std::max(n_, index);
        return NcPoly::variable(width, index);
    }
};

}  // namespace detail

/// Parses `text` as a polynomial in `n` variables. With n = 0 the variable
/// count is inferred as the largest index used.
inline NcPoly parse(std::string_view text, int n = 0) {
    if (n < 0) throw DomainError("negative variable count");
    detail::PolyParser p(text, n);
    NcPoly f = p.parse();
    return n > 0 ? f : f.widened(p.max_index());
}

/// Inverse of parse: graded-lex term order, coefficients as p/q.
inline std::string format(const NcPoly& f) {
    if (f.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [w, c] : f) {
        Rational mag = abs(c);
        if (first) {
            if (c < 0) out += '-';
        } else {
            out += c < 0 ? " - " : " + ";
        }
        first = false;
        if (w.empty()) {
            out += to_string(mag);
        } else {
            if (mag != 1) out += to_string(mag) + "*";
            out += format_word(w);
        }
    }
    return out;
}

}  // namespace tracecert::ncpoly
