#pragma once

#include <cmath>
#include <map>

#include "tracecert/functional.hpp"
#include "tracecert/mateval/eval.hpp"
#include "tracecert/ncpoly/word.hpp"

namespace tracecert::mateval {

/// phi(w) = (1/s) tr w(A) for every word of length <= k.
struct MomentTable {
    int n = 0;
    int k = 0;
    std::map<ncpoly::Word, double> values;

    double at(const ncpoly::Word& w) const {
        auto it = values.find(w);
        if (it == values.end()) throw DomainError("word " + ncpoly::format_word(w) + " not in moment table");
        return it->second;
    }
};

/// Evaluates state(w) for all words of length <= k, reusing prefix products.
template <class State>
MomentTable moment_table_from(int n, int k, const std::vector<Matrix>& ops, const Matrix& identity,
                              State&& state) {
    MomentTable t{n, k, {}};
    std::map<ncpoly::Word, Matrix> products;
    for (const auto& w : ncpoly::words_up_to(n, k)) {
        Matrix m = w.empty() ? identity
                             : Matrix(products.at(w.prefix(w.size() - 1)) * ops[static_cast<std::size_t>(w[w.size() - 1] - 1)]);
        t.values[w] = state(m);
        if (static_cast<int>(w.size()) < k) products.emplace(w, std::move(m));
    }
    return t;
}

inline MomentTable moment_table(const MatTuple& A, int k) {
    if (k < 0) throw DomainError("negative moment degree");
    const int s = A.s();
    return moment_table_from(A.n(), k, A.matrices, Matrix::Identity(s, s),
                             [s](const Matrix& m) { return m.trace() / s; });
}

/// sup_w |t1(w) - t2(w)|.
inline double moment_distance(const MomentTable& t1, const MomentTable& t2) {
    if (t1.k != t2.k || t1.n != t2.n) throw DomainError("moment tables of different shape");
    double d = 0;
    for (const auto& [w, v] : t1.values) d = std::max(d, std::abs(v - t2.at(w)));
    return d;
}

inline TracialFunctional functional_from_moments(const MomentTable& t) {
    TracialFunctional L{t.n, t.k / 2, {}};
    for (const auto& [w, v] : t.values) {
        auto key = ncpoly::cyclic_canonical(w).representative;
        if (key == w) L.values[key] = v;
    }
    return L;
}

}  // namespace tracecert::mateval
