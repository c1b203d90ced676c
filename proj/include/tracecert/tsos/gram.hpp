#pragma once

// Gram-matrix encoding of "f + eps lies in M_{R,k} up to cyclic equivalence".
//
// Block 0 holds G_0 over words of length <= k, block i holds G_i over words of
// length <= k - 1 for the generator 1 - X_i^2. The polynomial represented is
//   sum_i sum_{u,v} G_i[u,v] u* p_i v.
// One linear constraint per row key. In the noncommutative case a key is the
// least of the rotation classes of w and w*; both sides are symmetric, so equal
// sums over these merged classes is the same as cyclic equivalence. In the
// commutative case a key is the sorted word of a monomial.

#include <array>
#include <map>
#include <vector>

#include "tracecert/ncpoly/commutative.hpp"
#include "tracecert/ncpoly/cyclic.hpp"
#include "tracecert/tsos/sdp.hpp"

namespace tracecert::tsos {

using ncpoly::CommPoly;
using ncpoly::Letter;
using ncpoly::NcPoly;
using ncpoly::Word;

enum class GramKind { noncommutative, commutative };

struct RowCoef {
    int row = 0;
    int coef = 0;
};

/// Rows touched by basis[a]* p basis[b] (same as for (b, a)).
struct GramEntry {
    int a = 0, b = 0;
    std::array<RowCoef, 2> rows{};
    int count = 0;
};

struct GramBlock {
    int gen = 0;
    std::vector<Word> basis;
    /// Upper triangle, a <= b.
    std::vector<GramEntry> entries;

    int size() const { return static_cast<int>(basis.size()); }
};

struct GramProblem {
    GramKind kind = GramKind::noncommutative;
    int n = 0;
    int k = 0;
    /// Polynomial to certify, as given.
    NcPoly target;
    Rational epsilon = 0;
    /// Row keys in graded-lex order; row 0 is the unit.
    std::vector<Word> rows;
    std::map<Word, int> row_index;
    /// Coefficient of target + epsilon on each row.
    std::vector<Rational> rhs;
    std::vector<GramBlock> blocks;

    int num_rows() const { return static_cast<int>(rows.size()); }

    Word key(const Word& w) const {
        if (kind == GramKind::noncommutative) return ncpoly::involution_cyclic_key(w);
        std::vector<int> e(static_cast<std::size_t>(n), 0);
        for (Letter x : w) ++e[static_cast<std::size_t>(x - 1)];
        return ncpoly::sorted_word(ncpoly::Exponents{std::move(e)});
    }

    /// Number of variables of the matrix blocks.
    std::size_t num_entries() const {
        std::size_t s = 0;
        for (const auto& b : blocks) s += b.entries.size();
        return s;
    }
};

namespace detail {

inline std::vector<Word> gram_basis(GramKind kind, int n, int len) {
    if (len < 0) return {};
    std::vector<Word> all = ncpoly::words_up_to(n, len);
    if (kind == GramKind::noncommutative) return all;
    std::vector<Word> sorted;
    for (auto& w : all)
        if (std::is_sorted(w.begin(), w.end())) sorted.push_back(std::move(w));
    return sorted;
}

inline GramProblem build(GramKind kind, const NcPoly& target, const NcPoly& symmetric_lhs, const Rational& epsilon,
                         int n, int k) {
    if (k < 0) throw DomainError("level must be >= 0");
    if (symmetric_lhs.degree() > 2 * k)
        throw DomainError("degree " + std::to_string(symmetric_lhs.degree()) + " exceeds 2k = " + std::to_string(2 * k));
    GramProblem p;
    p.kind = kind;
    p.n = n;
    p.k = k;
    p.target = target;
    p.epsilon = epsilon;

    std::map<Word, int> index;
    for (int gen = 0; gen <= n; ++gen) {
        GramBlock block;
        block.gen = gen;
        block.basis = gram_basis(kind, n, gen == 0 ? k : k - 1);
        if (block.basis.empty()) continue;
        p.blocks.push_back(std::move(block));
    }
    // Row keys first, so rows can be sorted before numbering.
    for (const auto& block : p.blocks)
        for (int a = 0; a < block.size(); ++a)
            for (int b = a; b < block.size(); ++b) {
                Word uv = block.basis[static_cast<std::size_t>(a)].adj() * block.basis[static_cast<std::size_t>(b)];
                index.emplace(p.key(uv), 0);
            }
    for (const auto& [w, c] : symmetric_lhs)
        if (!index.count(p.key(w))) throw DomainError("word " + ncpoly::format_word(w) + " has no Gram row");
    int r = 0;
    for (auto& [w, i] : index) {
        i = r++;
        p.rows.push_back(w);
    }
    p.row_index = std::move(index);

    for (auto& block : p.blocks)
        for (int a = 0; a < block.size(); ++a)
            for (int b = a; b < block.size(); ++b) {
                const Word& u = block.basis[static_cast<std::size_t>(a)];
                const Word& v = block.basis[static_cast<std::size_t>(b)];
                GramEntry e;
                e.a = a;
                e.b = b;
                e.rows[0] = {p.row_index.at(p.key(u.adj() * v)), 1};
                e.count = 1;
                if (block.gen > 0) {
                    Word mid = u.adj() * Word{static_cast<Letter>(block.gen), static_cast<Letter>(block.gen)} * v;
                    e.rows[1] = {p.row_index.at(p.key(mid)), -1};
                    e.count = 2;
                }
                block.entries.push_back(e);
            }

    p.rhs.assign(p.rows.size(), Rational(0));
    for (const auto& [w, c] : symmetric_lhs) p.rhs[static_cast<std::size_t>(p.row_index.at(p.key(w)))] += c;
    p.rhs[0] += epsilon;
    return p;
}

}  // namespace detail

/// Gram problem for f + eps in M_{R,k}. f must be symmetric or cyclically
/// equivalent to its adjoint (then its hermitian part is used for the rows).
inline GramProblem build_gram(const NcPoly& f, const Rational& epsilon, int k, int n = 0) {
    const int nv = std::max({n, f.nvars(), 1});
    NcPoly h = f;
    if (!is_symmetric(f)) {
        if (!ncpoly::cyc_equiv(f, adj(f))) throw DomainError("polynomial is not cyclically equivalent to a symmetric one");
        h = ncpoly::hermitian_cyclic_part(f);
    }
    return detail::build(GramKind::noncommutative, f.widened(nv), h.widened(nv), epsilon, nv, k);
}

/// Commutative quadratic module of 1 - x_i^2, rows per monomial.
inline GramProblem build_commutative_gram(const CommPoly& g, const Rational& epsilon, int k) {
    const int n = g.nvars();
    if (n < 1) throw DomainError("commutative Gram problem needs at least one variable");
    NcPoly lifted = ncpoly::cyclic_sort_section(g);
    return detail::build(GramKind::commutative, lifted, lifted, epsilon, n, k);
}

/// Sparse linear forms, one per row, on the block entries.
inline std::vector<std::vector<SdpEntry>> row_forms(const GramProblem& p) {
    std::vector<std::vector<SdpEntry>> rows(static_cast<std::size_t>(p.num_rows()));
    for (std::size_t bi = 0; bi < p.blocks.size(); ++bi)
        for (const auto& e : p.blocks[bi].entries)
            for (int t = 0; t < e.count; ++t) {
                const auto& rc = e.rows[static_cast<std::size_t>(t)];
                rows[static_cast<std::size_t>(rc.row)].push_back({static_cast<int>(bi), e.a, e.b, double(rc.coef)});
            }
    return rows;
}

/// min <C, X> over the non-constant rows, C being the constant row. The problem
/// is feasible iff the optimum is at most rhs[0].
inline SdpData standard_form(const GramProblem& p) {
    auto rows = row_forms(p);
    SdpData d;
    for (const auto& b : p.blocks) d.sizes.push_back(b.size());
    d.C = std::move(rows[0]);
    d.A.assign(std::make_move_iterator(rows.begin() + 1), std::make_move_iterator(rows.end()));
    d.b.resize(p.num_rows() - 1);
    for (int r = 1; r < p.num_rows(); ++r) d.b(r - 1) = to_double(p.rhs[static_cast<std::size_t>(r)]);
    return d;
}

/// Strictly positive diagonal Gram blocks representing the constant 1 exactly:
/// beta_l = (2n)^-(l+1) on generator blocks, and on block 0 whatever
/// completes sum_i sum_v beta v* (1 - X_i^2) v to 1.
inline std::vector<std::vector<Rational>> unit_gram(const GramProblem& p) {
    const int n = p.n;
    auto beta = [n](std::size_t len) {
        Integer den = 1;
        for (std::size_t i = 0; i <= len; ++i) den *= 2 * n;
        return Rational(Integer(1), den);
    };
    NcPoly P(n);
    std::vector<std::vector<Rational>> diag(p.blocks.size());
    for (std::size_t bi = 0; bi < p.blocks.size(); ++bi) {
        const auto& block = p.blocks[bi];
        diag[bi].assign(block.basis.size(), Rational(0));
        if (block.gen == 0) continue;
        NcPoly gen = NcPoly::constant(n, 1) - NcPoly::monomial(n, Word::power(block.gen, 2));
        for (std::size_t a = 0; a < block.basis.size(); ++a) {
            const Word& v = block.basis[a];
            diag[bi][a] = beta(v.size());
            P += diag[bi][a] * (NcPoly::monomial(n, v.adj()) * gen * NcPoly::monomial(n, v));
        }
    }
    const CommPoly Pc = ncpoly::commutative_project(P);
    auto coeff = [&](const Word& w) {
        if (p.kind == GramKind::noncommutative) return P.coeff(w);
        return Pc.coeff(ncpoly::commutative_project(NcPoly::monomial(n, w)).begin()->first);
    };
    for (std::size_t bi = 0; bi < p.blocks.size(); ++bi) {
        const auto& block = p.blocks[bi];
        if (block.gen != 0) continue;
        for (std::size_t a = 0; a < block.basis.size(); ++a) {
            const Word& u = block.basis[a];
            diag[bi][a] = (u.empty() ? Rational(1) : Rational(0)) - coeff(u.adj() * u);
            if (diag[bi][a] <= 0) throw InvariantError("unit Gram diagonal is not positive");
        }
    }
    return diag;
}

}  // namespace tracecert::tsos
