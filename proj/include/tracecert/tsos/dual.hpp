#pragma once

// Separating tracial functionals: extraction from row values of the dual SDP,
// normalization, and an independent check of the level-k conditions.

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <nlohmann/json.hpp>

#include "tracecert/certkit/certificate.hpp"
#include "tracecert/functional.hpp"
#include "tracecert/ncpoly/parse.hpp"
#include "tracecert/tsos/gram.hpp"

namespace tracecert::tsos {

/// Evaluation at the zero tuple: L(1) = 1, every other word 0.
inline TracialFunctional zero_tuple_functional(int n, int k) {
    TracialFunctional L{n, k, {}};
    L.set(Word{}, 1.0);
    return L;
}

/// Builds L from one value per row key. Noncommutative rows fill the rotation
/// classes of w and w*; commutative rows fill every word of length <= 2k
/// through its sorted rearrangement.
inline TracialFunctional functional_from_rows(const GramProblem& p, const std::vector<double>& row_values) {
    if (static_cast<int>(row_values.size()) != p.num_rows()) throw DomainError("row value count mismatch");
    TracialFunctional L{p.n, p.k, {}};
    if (p.kind == GramKind::noncommutative) {
        for (int r = 0; r < p.num_rows(); ++r) {
            const Word& w = p.rows[static_cast<std::size_t>(r)];
            L.set(w, row_values[static_cast<std::size_t>(r)]);
            L.set(w.adj(), row_values[static_cast<std::size_t>(r)]);
        }
        return L;
    }
    for (const Word& w : ncpoly::words_up_to(p.n, 2 * p.k)) {
        const auto cls = ncpoly::cyclic_canonical(w).representative;
        if (L.values.count(cls)) continue;
        auto it = p.row_index.find(p.key(w));
        L.values[cls] = it == p.row_index.end() ? 0.0 : row_values[static_cast<std::size_t>(it->second)];
    }
    return L;
}

/// Normalizes a raw separating functional to L(1) = 1. When the raw functional
/// kills constants, a small multiple of the zero-tuple evaluation is added
/// first, small enough to keep L(f + eps) negative.
inline TracialFunctional extract_dual(const GramProblem& p, const std::vector<double>& raw_rows, double unit_tol = 1e-9) {
    TracialFunctional raw = functional_from_rows(p, raw_rows);
    const NcPoly lhs = p.target + NcPoly::constant(p.target.nvars(), p.epsilon);
    const double at_one = raw(Word{});
    if (at_one > unit_tol) {
        for (auto& [w, v] : raw.values) v /= at_one;
        return raw;
    }
    if (at_one < -unit_tol) throw DomainError("dual functional is negative on 1");
    const double value = raw(lhs);
    if (!(value < 0)) throw DomainError("dual functional does not separate");
    const double zero_value = to_double(lhs.coeff(Word{}));
    double lambda = 1;
    if (zero_value > 0) lambda = std::min(1.0, -value / (2 * zero_value));
    raw.values[Word{}] = lambda + at_one;
    for (auto& [w, v] : raw.values) v /= raw.values.at(Word{});
    return raw;
}

struct DualConditions {
    /// Least eigenvalue over all localizing matrices [L(u* p_i v)].
    double min_eigenvalue = 0;
    double max_abs_value = 0;
    double unit_error = 0;
    double symmetry_error = 0;
    /// L(target + epsilon).
    double value = 0;

    bool ok(double tol) const {
        return min_eigenvalue >= -tol && max_abs_value <= 2 + tol && unit_error <= tol && symmetry_error <= tol &&
               value < 0;
    }
};

/// Localizing matrix [L(u* p_gen v)] over words of length <= len.
inline Eigen::MatrixXd localizing_matrix(const TracialFunctional& L, int gen, int len) {
    const auto basis = ncpoly::words_up_to(L.n, len);
    const NcPoly p = certkit::generator(L.n, gen);
    const auto m = static_cast<Eigen::Index>(basis.size());
    Eigen::MatrixXd M(m, m);
    for (Eigen::Index a = 0; a < m; ++a)
        for (Eigen::Index b = a; b < m; ++b) {
            NcPoly q = NcPoly::monomial(L.n, basis[static_cast<std::size_t>(a)].adj()) * p *
                       NcPoly::monomial(L.n, basis[static_cast<std::size_t>(b)]);
            M(a, b) = M(b, a) = L(q);
        }
    return M;
}

/// Rechecks the conditions from the functional alone (not from the SDP).
inline DualConditions check_conditions(const TracialFunctional& L, const NcPoly& lhs) {
    DualConditions c;
    c.min_eigenvalue = std::numeric_limits<double>::infinity();
    for (int gen = 0; gen <= L.n; ++gen) {
        const int len = gen == 0 ? L.level : L.level - 1;
        if (len < 0) continue;
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(localizing_matrix(L, gen, len), Eigen::EigenvaluesOnly);
        c.min_eigenvalue = std::min(c.min_eigenvalue, es.eigenvalues()(0));
    }
    for (const auto& [w, v] : L.values) {
        c.max_abs_value = std::max(c.max_abs_value, std::abs(v));
        c.symmetry_error = std::max(c.symmetry_error, std::abs(v - L(w.adj())));
    }
    c.unit_error = std::abs(L(Word{}) - 1);
    c.value = L(lhs);
    return c;
}

inline nlohmann::json to_json(const TracialFunctional& L) {
    nlohmann::json values = nlohmann::json::object();
    for (const auto& [w, v] : L.values) values[ncpoly::format_word(w)] = v;
    return {{"level", L.level}, {"values", std::move(values)}};
}

/// n is taken from the largest variable index unless given.
inline TracialFunctional functional_from_json(const nlohmann::json& j, int n = 0) {
    try {
        TracialFunctional L;
        L.level = j.at("level").get<int>();
        std::vector<std::pair<NcPoly, double>> parsed;
        for (const auto& [key, v] : j.at("values").items()) {
            NcPoly w = ncpoly::parse(key);
            if (w.size() != 1 || w.begin()->second != 1) throw ParseError("functional key is not a word: " + key, 0);
            n = std::max(n, w.nvars());
            parsed.emplace_back(std::move(w), v.get<double>());
        }
        L.n = n;
        for (const auto& [w, v] : parsed) L.set(w.begin()->first, v);
        return L;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("functional: ") + e.what(), 0);
    }
}

}  // namespace tracecert::tsos
