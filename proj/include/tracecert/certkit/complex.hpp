#pragma once

// Certificates over Q(i) stored as real/imaginary pairs, and their reduction to
// real certificates via
//   (p + iq)* h (p + iq) + (p - iq)* h (p - iq) = 2 (p* h p + q* h q).

#include <vector>

#include "tracecert/certkit/certificate.hpp"

namespace tracecert::certkit {

/// lambda * g* p_gen g with g = p + i q.
struct ComplexTerm {
    int gen = 0;
    Rational lambda = 1;
    NcPoly p, q;
};

/// [g1, g2] with g1 = p1 + i q1, g2 = p2 + i q2.
struct ComplexCommutator {
    NcPoly p1, q1, p2, q2;
};

struct ComplexCertificate {
    int n = 0;
    NcPoly target_re, target_im;
    Rational epsilon = 0;
    std::vector<ComplexTerm> terms;
    std::vector<ComplexCommutator> commutators;

    /// Real and imaginary parts of the right-hand side.
    std::pair<NcPoly, NcPoly> expansion() const {
        NcPoly re(n), im(n);
        for (const auto& t : terms) {
            NcPoly h = generator(n, t.gen);
            re += t.lambda * (adj(t.p) * h * t.p + adj(t.q) * h * t.q);
            im += t.lambda * (adj(t.p) * h * t.q - adj(t.q) * h * t.p);
        }
        for (const auto& c : commutators) {
            auto br = [](const NcPoly& a, const NcPoly& b) { return a * b - b * a; };
            re += br(c.p1, c.p2) - br(c.q1, c.q2);
            im += br(c.p1, c.q2) + br(c.q1, c.p2);
        }
        return {re, im};
    }
};

inline bool verify(const ComplexCertificate& c) {
    for (const auto& t : c.terms)
        if (t.lambda <= 0 || t.gen < 0 || t.gen > c.n) return false;
    auto [re, im] = c.expansion();
    return re == c.target_re + NcPoly::constant(c.n, c.epsilon) && im == c.target_im;
}

/// Real part of the complex identity. Requires a real target.
inline Certificate complex_to_real(const ComplexCertificate& cc) {
    if (!cc.target_im.is_zero()) throw DomainError("complex certificate has a non-real target");
    Certificate c{cc.n, cc.target_re, cc.epsilon, {}, {}};
    for (const auto& t : cc.terms) {
        if (!t.p.is_zero()) c.terms.push_back({t.gen, t.lambda, t.p});
        if (!t.q.is_zero()) c.terms.push_back({t.gen, t.lambda, t.q});
    }
    for (const auto& k : cc.commutators) {
        c.commutators.push_back({k.p1, k.p2});
        c.commutators.push_back({-k.q1, k.q2});
    }
    return c;
}

}  // namespace tracecert::certkit
