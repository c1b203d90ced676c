#pragma once

// Dykstra alternating projections between the PSD cone (eigenvalue clipping)
// and the affine set of Gram blocks meeting every row. Slow but simple; kept as
// a cross-check for the interior point solver.

#include <algorithm>
#include <cmath>
#include <vector>

#include <Eigen/Dense>

#include "tracecert/tsos/gram.hpp"

namespace tracecert::tsos {

struct ApConfig {
    int max_iterations = 100000;
    double tol = 1e-9;
    /// Give up when the gap has not improved by 1% over this many iterations.
    int stall_window = 1000;
};

struct ApResult {
    bool converged = false;
    int iterations = 0;
    /// Relative row residual of the last PSD iterate.
    double gap = 0;
    std::vector<Eigen::MatrixXd> blocks;
};

/// Looks for PSD blocks with row sums equal to `target` (one value per row).
inline ApResult alternating_projections(const GramProblem& p, const Eigen::VectorXd& target, const ApConfig& cfg = {}) {
    using detail::Blocks;
    const auto forms = row_forms(p);
    const int m = p.num_rows();
    std::vector<int> sizes;
    for (const auto& b : p.blocks) sizes.push_back(b.size());

    // Gram matrix of the row forms in the Frobenius inner product.
    Eigen::MatrixXd AAt = Eigen::MatrixXd::Zero(m, m);
    for (std::size_t bi = 0; bi < p.blocks.size(); ++bi)
        for (const auto& e : p.blocks[bi].entries) {
            const double w = e.a == e.b ? 1 : 2;
            for (int s = 0; s < e.count; ++s)
                for (int t = 0; t < e.count; ++t)
                    AAt(e.rows[static_cast<std::size_t>(s)].row, e.rows[static_cast<std::size_t>(t)].row) +=
                        w * e.rows[static_cast<std::size_t>(s)].coef * e.rows[static_cast<std::size_t>(t)].coef;
        }
    Eigen::LDLT<Eigen::MatrixXd> solver(AAt);

    auto rows_of = [&](const Blocks& X) {
        Eigen::VectorXd out(m);
        for (int r = 0; r < m; ++r) out(r) = detail::inner(forms[static_cast<std::size_t>(r)], X);
        return out;
    };
    auto project_affine = [&](const Blocks& X) {
        Eigen::VectorXd z = solver.solve(rows_of(X) - target);
        Blocks out = X;
        for (int r = 0; r < m; ++r) detail::add_to(out, forms[static_cast<std::size_t>(r)], -z(r));
        return out;
    };
    auto project_psd = [](const Blocks& X) {
        Blocks out;
        for (const auto& B : X) {
            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es((B + B.transpose()) / 2);
            Eigen::VectorXd lam = es.eigenvalues().cwiseMax(0.0);
            out.push_back(es.eigenvectors() * lam.asDiagonal() * es.eigenvectors().transpose());
        }
        return out;
    };

    ApResult res;
    Blocks x = detail::zeros(sizes), pcorr = detail::zeros(sizes), qcorr = detail::zeros(sizes);
    double best = std::numeric_limits<double>::infinity();
    int best_at = 0;
    const double scale = 1 + target.norm();
    for (int it = 1; it <= cfg.max_iterations; ++it) {
        Blocks xp = x;
        for (std::size_t i = 0; i < xp.size(); ++i) xp[i] += pcorr[i];
        Blocks y = project_affine(xp);
        for (std::size_t i = 0; i < xp.size(); ++i) pcorr[i] = xp[i] - y[i];
        Blocks yq = y;
        for (std::size_t i = 0; i < yq.size(); ++i) yq[i] += qcorr[i];
        x = project_psd(yq);
        for (std::size_t i = 0; i < yq.size(); ++i) qcorr[i] = yq[i] - x[i];

        res.iterations = it;
        res.gap = (rows_of(x) - target).norm() / scale;
        if (res.gap < cfg.tol) {
            res.converged = true;
            break;
        }
        if (res.gap < 0.99 * best) {
            best = res.gap;
            best_at = it;
        } else if (it - best_at > cfg.stall_window) {
            break;
        }
    }
    res.blocks = std::move(x);
    return res;
}

}  // namespace tracecert::tsos
