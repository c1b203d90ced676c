#pragma once

// From a floating Gram solution to an exact certificate: rationalize, repair the
// linear constraints exactly, add a multiple of the unit Gram blocks, then factor
// each block exactly. Nothing numeric survives past this file.

#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "tracecert/certkit/certificate.hpp"
#include "tracecert/certkit/commutative.hpp"
#include "tracecert/tsos/gram.hpp"

namespace tracecert::tsos {

/// Dense symmetric rational matrix, row-major.
struct RationalMatrix {
    int size = 0;
    std::vector<Rational> a;

    explicit RationalMatrix(int n = 0) : size(n), a(static_cast<std::size_t>(n) * static_cast<std::size_t>(n)) {}
    Rational& operator()(int i, int j) { return a[static_cast<std::size_t>(i * size + j)]; }
    const Rational& operator()(int i, int j) const { return a[static_cast<std::size_t>(i * size + j)]; }
};

/// One rank-one piece d * l l^T of an exact factorization.
struct ScaledVector {
    Rational d;
    std::vector<Rational> l;
};

/// G = sum d_j l_j l_j^T with every d_j > 0, or nullopt if G is not PSD.
/// Symmetric pivoting on the largest remaining diagonal entry.
inline std::optional<std::vector<ScaledVector>> exact_psd_factor(RationalMatrix G) {
    const int n = G.size;
    std::vector<int> left(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) left[static_cast<std::size_t>(i)] = i;
    std::vector<ScaledVector> out;
    while (!left.empty()) {
        std::size_t best = 0;
        for (std::size_t t = 1; t < left.size(); ++t)
            if (G(left[t], left[t]) > G(left[best], left[best])) best = t;
        const int p = left[best];
        const Rational d = G(p, p);
        if (d < 0) return std::nullopt;
        if (d == 0) {
            for (int i : left)
                for (int j : left)
                    if (G(i, j) != 0) return std::nullopt;
            break;
        }
        left.erase(left.begin() + static_cast<std::ptrdiff_t>(best));
        ScaledVector sv{d, std::vector<Rational>(static_cast<std::size_t>(n), Rational(0))};
        sv.l[static_cast<std::size_t>(p)] = 1;
        for (int i : left) sv.l[static_cast<std::size_t>(i)] = G(i, p) / d;
        for (int i : left) {
            if (sv.l[static_cast<std::size_t>(i)] == 0) continue;
            for (int j : left) G(i, j) -= sv.l[static_cast<std::size_t>(i)] * G(j, p);
        }
        out.push_back(std::move(sv));
    }
    return out;
}

inline bool is_psd_exact(const RationalMatrix& G) { return exact_psd_factor(G).has_value(); }

/// Exact row sums sum_blocks sum_{u,v} G[u,v] coef(u* p v).
inline std::vector<Rational> apply_rows(const GramProblem& p, const std::vector<RationalMatrix>& G) {
    std::vector<Rational> acc(static_cast<std::size_t>(p.num_rows()), Rational(0));
    for (std::size_t bi = 0; bi < p.blocks.size(); ++bi)
        for (const auto& e : p.blocks[bi].entries) {
            Rational g = G[bi](e.a, e.b);
            if (g == 0) continue;
            if (e.a != e.b) g *= 2;
            for (int t = 0; t < e.count; ++t) {
                const auto& rc = e.rows[static_cast<std::size_t>(t)];
                acc[static_cast<std::size_t>(rc.row)] += rc.coef * g;
            }
        }
    return acc;
}

struct RoundingConfig {
    Integer start_denominator = 1000000;
    Integer max_denominator = Integer("1000000000000");
};

/// Exact PSD blocks representing target + epsilon, or nullopt.
///
/// The numeric blocks should represent target + epsilon - shrink. After
/// rationalization each row residual is spread evenly over the block-0 entries
/// of that row (each block-0 entry meets exactly one row), then shrink times the
/// unit Gram is added.
inline std::optional<std::vector<RationalMatrix>> round_gram(const GramProblem& p,
                                                             const std::vector<Eigen::MatrixXd>& numeric,
                                                             const Rational& shrink, const Integer& max_den) {
    if (numeric.size() != p.blocks.size()) throw DomainError("numeric Gram has the wrong number of blocks");
    if (p.blocks.empty() || p.blocks[0].gen != 0) throw InvariantError("Gram problem lacks block 0");

    std::vector<RationalMatrix> G;
    for (std::size_t bi = 0; bi < p.blocks.size(); ++bi) {
        const auto& block = p.blocks[bi];
        if (numeric[bi].rows() != block.size() || numeric[bi].cols() != block.size())
            throw DomainError("numeric Gram block has the wrong size");
        RationalMatrix m(block.size());
        for (const auto& e : block.entries) {
            const double x = (numeric[bi](e.a, e.b) + numeric[bi](e.b, e.a)) / 2;
            m(e.a, e.b) = m(e.b, e.a) = rationalize(x, max_den);
        }
        G.push_back(std::move(m));
    }

    std::vector<Rational> want = p.rhs;
    want[0] -= shrink;
    std::vector<Rational> have = apply_rows(p, G);
    std::vector<Integer> weight(want.size(), 0);
    for (const auto& e : p.blocks[0].entries) weight[static_cast<std::size_t>(e.rows[0].row)] += e.a == e.b ? 1 : 2;
    for (const auto& e : p.blocks[0].entries) {
        const auto r = static_cast<std::size_t>(e.rows[0].row);
        if (weight[r] == 0) throw InvariantError("row without a block-0 entry");
        Rational delta = (want[r] - have[r]) / Rational(weight[r]);
        if (delta == 0) continue;
        G[0](e.a, e.b) += delta;
        if (e.a != e.b) G[0](e.b, e.a) += delta;
    }

    if (shrink != 0) {
        const auto unit = unit_gram(p);
        for (std::size_t bi = 0; bi < G.size(); ++bi)
            for (int a = 0; a < G[bi].size; ++a) G[bi](a, a) += shrink * unit[bi][static_cast<std::size_t>(a)];
    }

    for (const auto& m : G)
        if (!is_psd_exact(m)) return std::nullopt;
    return G;
}

namespace detail {

/// Tries denominators start, 2 start, 4 start, ... up to the limit.
template <class F>
auto with_denominators(const RoundingConfig& cfg, F&& attempt) -> decltype(attempt(cfg.start_denominator)) {
    for (Integer den = cfg.start_denominator; den <= cfg.max_denominator; den *= 2)
        if (auto r = attempt(den)) return r;
    return std::nullopt;
}

}  // namespace detail

/// Certificate for p.target + p.epsilon, verified exactly, or nullopt.
inline std::optional<certkit::Certificate> round_certificate(const GramProblem& p,
                                                             const std::vector<Eigen::MatrixXd>& numeric,
                                                             const Rational& shrink, const RoundingConfig& cfg = {}) {
    if (p.kind != GramKind::noncommutative) throw DomainError("round_certificate needs a noncommutative problem");
    return detail::with_denominators(cfg, [&](const Integer& den) -> std::optional<certkit::Certificate> {
        auto G = round_gram(p, numeric, shrink, den);
        if (!G) return std::nullopt;
        certkit::Certificate c{p.n, p.target, p.epsilon, {}, {}};
        for (std::size_t bi = 0; bi < G->size(); ++bi) {
            const auto& block = p.blocks[bi];
            const auto factors = exact_psd_factor((*G)[bi]);
            for (const auto& sv : *factors) {
                NcPoly g(p.n);
                for (std::size_t a = 0; a < sv.l.size(); ++a)
                    if (sv.l[a] != 0) g.add_term(block.basis[a], sv.l[a]);
                c.terms.push_back({block.gen, sv.d, std::move(g)});
            }
        }
        c.close_with_commutators();
        if (!certkit::verify(c)) throw InvariantError("rounded certificate does not verify");
        return c;
    });
}

/// Commutative Putinar certificate for the projected target, or nullopt.
inline std::optional<certkit::CommutativeCertificate> round_commutative(const GramProblem& p,
                                                                        const std::vector<Eigen::MatrixXd>& numeric,
                                                                        const Rational& shrink,
                                                                        const RoundingConfig& cfg = {}) {
    if (p.kind != GramKind::commutative) throw DomainError("round_commutative needs a commutative problem");
    if (p.n != 2) throw DomainError("commutative certificates are defined for two variables");
    return detail::with_denominators(cfg, [&](const Integer& den) -> std::optional<certkit::CommutativeCertificate> {
        auto G = round_gram(p, numeric, shrink, den);
        if (!G) return std::nullopt;
        certkit::CommutativeCertificate cc;
        cc.target = ncpoly::commutative_project(p.target);
        cc.epsilon = p.epsilon;
        for (std::size_t bi = 0; bi < G->size(); ++bi) {
            const auto& block = p.blocks[bi];
            auto& list = block.gen == 0 ? cc.p : block.gen == 1 ? cc.q : cc.r;
            const auto factors = exact_psd_factor((*G)[bi]);
            for (const auto& sv : *factors) {
                NcPoly g(p.n);
                for (std::size_t a = 0; a < sv.l.size(); ++a)
                    if (sv.l[a] != 0) g.add_term(block.basis[a], sv.l[a]);
                list.push_back({sv.d, ncpoly::commutative_project(g)});
            }
        }
        if (!certkit::verify(cc)) throw InvariantError("rounded commutative certificate does not verify");
        return cc;
    });
}

}  // namespace tracecert::tsos
