#pragma once

// Commutative Putinar certificates on [-1, 1]^2 and their lift to
// noncommutative certificates through the sorted-word section.

#include <vector>

#include "tracecert/certkit/certificate.hpp"
#include "tracecert/ncpoly/commutative.hpp"

namespace tracecert::certkit {

using ncpoly::CommPoly;

/// lambda * poly^2 with lambda > 0.
struct ScaledSquare {
    Rational lambda = 1;
    CommPoly poly;
};

/// target + epsilon = sum p^2 + sum q^2 (1 - x^2) + sum r^2 (1 - y^2).
struct CommutativeCertificate {
    CommPoly target;
    Rational epsilon = 0;
    std::vector<ScaledSquare> p, q, r;

    int nvars() const { return target.nvars(); }

    CommPoly expansion() const {
        const int n = nvars();
        CommPoly one = CommPoly::constant(n, 1);
        CommPoly gx = one - CommPoly::monomial(n, {2, 0});
        CommPoly gy = one - CommPoly::monomial(n, {0, 2});
        CommPoly sum(n);
        for (const auto& s : p) sum += s.lambda * (s.poly * s.poly);
        for (const auto& s : q) sum += s.lambda * (s.poly * s.poly * gx);
        for (const auto& s : r) sum += s.lambda * (s.poly * s.poly * gy);
        return sum;
    }

    /// Highest degree in the module, as for Certificate::level.
    int level() const {
        int k = 0;
        for (const auto& s : p) k = std::max(k, std::max(s.poly.degree(), 0));
        for (const auto* list : {&q, &r})
            for (const auto& s : *list) k = std::max(k, std::max(s.poly.degree(), 0) + 1);
        return k;
    }
};

inline bool verify(const CommutativeCertificate& c) {
    if (c.nvars() != 2 || c.epsilon < 0) return false;
    for (const auto* list : {&c.p, &c.q, &c.r})
        for (const auto& s : *list)
            if (s.lambda <= 0 || s.poly.nvars() != 2) return false;
    return c.expansion() == c.target + CommPoly::constant(2, c.epsilon);
}

/// Lifts each square through rho; the r block enters as rho(r) (1 - Y^2) rho(r)*.
inline Certificate putinar_lift(const CommutativeCertificate& cc, const NcPoly& target) {
    if (cc.nvars() != 2) throw DomainError("Putinar lift is defined for two variables");
    NcPoly f = target.widened(2);
    if (f.nvars() != 2) throw DomainError("target must be a polynomial in two variables");
    if (!ncpoly::is_cyclically_sorted(f)) throw DomainError("target is not cyclically sorted");
    if (ncpoly::commutative_project(f) != cc.target)
        throw DomainError("commutative certificate is for a different polynomial");
    if (!verify(cc)) throw DomainError("commutative certificate does not verify");

    Certificate c{2, f, cc.epsilon, {}, {}};
    for (const auto& s : cc.p) c.terms.push_back({0, s.lambda, ncpoly::cyclic_sort_section(s.poly)});
    for (const auto& s : cc.q) c.terms.push_back({1, s.lambda, ncpoly::cyclic_sort_section(s.poly)});
    for (const auto& s : cc.r) c.terms.push_back({2, s.lambda, adj(ncpoly::cyclic_sort_section(s.poly))});
    c.close_with_commutators();
    return c;
}

}  // namespace tracecert::certkit
