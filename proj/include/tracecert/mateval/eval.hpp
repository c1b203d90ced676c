#pragma once

#include <map>

#include "tracecert/mateval/tuple.hpp"
#include "tracecert/ncpoly/ncpoly.hpp"

namespace tracecert::mateval {

inline void check_dimensions(const ncpoly::NcPoly& f, const MatTuple& A) {
    for (const auto& [w, c] : f)
        if (w.max_letter() > A.n())
            throw DomainError("polynomial uses X" + std::to_string(w.max_letter()) + " but the tuple has " +
                              std::to_string(A.n()) + " matrices");
}

inline Matrix evaluate_word(const ncpoly::Word& w, const MatTuple& A) {
    const int s = A.s();
    if (w.empty()) return Matrix::Identity(s, s);
    Matrix out = A[static_cast<std::size_t>(w[0] - 1)];
    for (std::size_t p = 1; p < w.size(); ++p) out = out * A[static_cast<std::size_t>(w[p] - 1)];
    return out;
}

/// f(A_1, ..., A_n).
inline Matrix evaluate(const ncpoly::NcPoly& f, const MatTuple& A) {
    check_dimensions(f, A);
    const int s = A.s();
    Matrix out = Matrix::Zero(s, s);
    for (const auto& [w, c] : f) out += to_double(c) * evaluate_word(w, A);
    return out;
}

inline double trace_value(const ncpoly::NcPoly& f, const MatTuple& A, bool normalized = false) {
    double t = evaluate(f, A).trace();
    return normalized && A.s() > 0 ? t / A.s() : t;
}

inline double min_eigenvalue(const Matrix& m) {
    Eigen::SelfAdjointEigenSolver<Matrix> es((m + m.transpose()) / 2, Eigen::EigenvaluesOnly);
    return es.eigenvalues()(0);
}

/// Least eigenvalue of f(A) is >= -tol.psd.
inline bool psd_check(const ncpoly::NcPoly& f, const MatTuple& A, const Tolerances& tol = {}) {
    return min_eigenvalue(evaluate(f, A)) >= -tol.psd;
}

}  // namespace tracecert::mateval
