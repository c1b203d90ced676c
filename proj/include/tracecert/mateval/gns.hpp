#pragma once

// Truncated GNS construction: <p, q> = L(q* p) on polynomials of degree <= k,
// quotient by the numerical kernel, compressed multiplication operators.

#include <vector>

#include "tracecert/functional.hpp"
#include "tracecert/mateval/moments.hpp"
#include "tracecert/mateval/sample.hpp"

namespace tracecert::mateval {

struct GnsModel {
    int n = 0;
    int k = 0;
    /// Words spanning the truncated space before the quotient.
    std::vector<ncpoly::Word> basis;
    /// Symmetric dim x dim operators in an orthonormal basis of the quotient.
    std::vector<Matrix> ops;
    /// Coordinates of the class of 1.
    Vector xi;
    /// max |model moment - L(w)| over words of length <= k.
    double defect = 0;
    /// How far the raw compressions were from the contraction ball.
    double clipped = 0;
    /// Words of length <= 2k + 1 that L does not define (read as 0).
    int missing = 0;

    int dim() const { return static_cast<int>(xi.size()); }
};

/// Moments <w(X) xi, xi> of the model.
inline MomentTable moment_table(const GnsModel& g, int k) {
    const int d = g.dim();
    return moment_table_from(g.n, k, g.ops, Matrix::Identity(d, d),
                             [&g](const Matrix& m) { return g.xi.dot(m * g.xi); });
}

inline GnsModel gns_truncated(const TracialFunctional& L, int k, const Tolerances& tol = {}) {
    if (k < 0) throw DomainError("negative truncation degree");
    const int n = L.n;
    GnsModel g;
    g.n = n;
    g.k = k;
    g.basis = ncpoly::words_up_to(n, k);
    const auto m = static_cast<Eigen::Index>(g.basis.size());

    auto lookup = [&](const ncpoly::Word& w) {
        auto v = L.value(w);
        if (!v) {
            ++g.missing;
            return 0.0;
        }
        return *v;
    };

    Matrix M(m, m);
    for (Eigen::Index a = 0; a < m; ++a)
        for (Eigen::Index b = 0; b < m; ++b) M(a, b) = lookup(g.basis[a].adj() * g.basis[b]);
    M = (M + M.transpose()) / 2;

    Eigen::SelfAdjointEigenSolver<Matrix> es(M);
    const Vector& lam = es.eigenvalues();
    const double top = std::max(lam(m - 1), 0.0);
    if (top <= 0) throw DomainError("moment matrix has no positive eigenvalue");
    if (lam(0) < -tol.gns_indefinite * std::max(1.0, top))
        throw DomainError("moment matrix is indefinite (least eigenvalue " + std::to_string(lam(0)) + ")");

    std::vector<Eigen::Index> kept;
    for (Eigen::Index j = 0; j < m; ++j)
        if (lam(j) > tol.gns_kernel * top) kept.push_back(j);
    const auto d = static_cast<Eigen::Index>(kept.size());

    // Columns of E are the coefficient vectors of an orthonormal basis.
    Matrix E(m, d);
    g.xi.resize(d);
    for (Eigen::Index a = 0; a < d; ++a) {
        E.col(a) = es.eigenvectors().col(kept[a]) / std::sqrt(lam(kept[a]));
        g.xi(a) = std::sqrt(lam(kept[a])) * es.eigenvectors()(0, kept[a]);
    }

    for (ncpoly::Letter i = 1; i <= n; ++i) {
        Matrix K(m, m);
        for (Eigen::Index a = 0; a < m; ++a)
            for (Eigen::Index b = 0; b < m; ++b) K(a, b) = lookup(g.basis[a].adj() * ncpoly::Word{i} * g.basis[b]);
        Matrix X = E.transpose() * K * E;
        X = (X + X.transpose()) / 2;
        Matrix C = clip_to_contraction(X);
        g.clipped = std::max(g.clipped, (C - X).cwiseAbs().maxCoeff());
        g.ops.push_back(std::move(C));
    }

    MomentTable model = moment_table(g, k);
    for (const auto& [w, v] : model.values) g.defect = std::max(g.defect, std::abs(v - lookup(w)));
    return g;
}

}  // namespace tracecert::mateval
