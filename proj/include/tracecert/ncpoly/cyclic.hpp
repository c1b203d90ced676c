#pragma once

#include <utility>
#include <vector>

#include "tracecert/ncpoly/ncpoly.hpp"

namespace tracecert::ncpoly {

/// Sums coefficients over rotation classes; the result is supported on the
/// canonical representatives. f and g are cyclically equivalent iff their
/// reductions coincide.
inline NcPoly cyclic_reduce(const NcPoly& f) {
    NcPoly out(f.nvars());
    for (const auto& [w, c] : f) out.add_term(cyclic_canonical(w).representative, c);
    return out;
}

inline bool cyc_equiv(const NcPoly& f, const NcPoly& g) { return cyclic_reduce(f - g).is_zero(); }

struct Commutator {
    NcPoly p;
    NcPoly q;

    /// pq - qp
    NcPoly expand() const { return p * q - q * p; }
};

/// f = sum of pairs' commutators + residue, with the residue supported on
/// canonical cyclic representatives. ok() iff f is cyclically equivalent to 0.
struct CommutatorSplit {
    std::vector<Commutator> pairs;
    NcPoly residue;

    bool ok() const { return residue.is_zero(); }
};

/// Each word w = v1 v2 whose canonical rotation is v2 v1 contributes
/// c*w = c*[v1, v2] + c*(v2 v1). The pair is oriented so its scalar is positive.
inline CommutatorSplit commutator_decomposition(const NcPoly& f) {
    const int n = f.nvars();
    CommutatorSplit out{{}, NcPoly(n)};
    for (const auto& [w, c] : f) {
        std::size_t r = least_rotation_offset(w);
        out.residue.add_term(w.rotated(r), c);
        if (r == 0) continue;
        NcPoly v1 = NcPoly::monomial(n, w.prefix(r));
        NcPoly v2 = NcPoly::monomial(n, w.suffix_from(r));
        // c [v1, v2] == (-c) [v2, v1]
        if (c > 0)
            out.pairs.push_back({v1 * c, v2});
        else
            out.pairs.push_back({v2 * Rational(-c), v1});
    }
    return out;
}

/// (f + f*)/2
inline NcPoly hermitian_cyclic_part(const NcPoly& f) { return (f + adj(f)) * Rational(1, 2); }

}  // namespace tracecert::ncpoly
