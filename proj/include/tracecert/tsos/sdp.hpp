#pragma once

// Primal-dual interior point method for block-diagonal SDPs
//
//   min <C, X>  s.t. <A_j, X> = b_j,  X >= 0
//   max b'y     s.t. C - sum_j y_j A_j = S >= 0
//
// HKM search direction, Mehrotra predictor-corrector, infeasible start.

#include <algorithm>
#include <cstdio>
#include <cmath>
#include <limits>
#include <vector>

#include <Eigen/Dense>

namespace tracecert::tsos {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// v at (r, c) and (c, r) of block `block`; r <= c.
struct SdpEntry {
    int block = 0;
    int r = 0, c = 0;
    double v = 0;
};

struct SdpData {
    std::vector<int> sizes;
    std::vector<std::vector<SdpEntry>> A;
    std::vector<SdpEntry> C;
    Vector b;

    int num_constraints() const { return static_cast<int>(A.size()); }
};

struct IpmConfig {
    int max_iterations = 100;
    double primal_tol = 1e-9;
    double dual_tol = 1e-9;
    double gap_tol = 1e-8;
    double step_fraction = 0.95;
    /// When the run stalls or breaks down, the best iterate is still reported
    /// as near optimal if all three measures are below this.
    double near_tol = 1e-6;
    /// Stop after this many iterations without improving the best iterate.
    int stall_iterations = 8;
};

enum class IpmStatus { optimal, near_optimal, max_iterations, numerical_failure };

struct SdpSolution {
    IpmStatus status = IpmStatus::numerical_failure;
    std::vector<Matrix> X, S;
    Vector y;
    double primal_objective = 0, dual_objective = 0;
    double primal_infeasibility = 0, dual_infeasibility = 0, relative_gap = 0;
    int iterations = 0;
};

namespace detail {

using Blocks = std::vector<Matrix>;

inline double inner(const SdpEntry& e, const Matrix& X) { return e.r == e.c ? e.v * X(e.r, e.c) : 2 * e.v * X(e.r, e.c); }

inline double inner(const std::vector<SdpEntry>& A, const Blocks& X) {
    double s = 0;
    for (const auto& e : A) s += inner(e, X[static_cast<std::size_t>(e.block)]);
    return s;
}

/// tr(A Z) for a possibly non-symmetric Z.
inline double inner_general(const std::vector<SdpEntry>& A, const Blocks& Z) {
    double s = 0;
    for (const auto& e : A) {
        const Matrix& z = Z[static_cast<std::size_t>(e.block)];
        s += e.r == e.c ? e.v * z(e.r, e.c) : e.v * (z(e.r, e.c) + z(e.c, e.r));
    }
    return s;
}

inline void add_to(Blocks& M, const std::vector<SdpEntry>& A, double scale) {
    for (const auto& e : A) {
        Matrix& m = M[static_cast<std::size_t>(e.block)];
        m(e.r, e.c) += scale * e.v;
        if (e.r != e.c) m(e.c, e.r) += scale * e.v;
    }
}

inline Blocks zeros(const std::vector<int>& sizes) {
    Blocks out;
    for (int s : sizes) out.push_back(Matrix::Zero(s, s));
    return out;
}

inline double dot(const Blocks& a, const Blocks& b) {
    double s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i].cwiseProduct(b[i]).sum();
    return s;
}

inline double frob(const Blocks& a) { return std::sqrt(dot(a, a)); }

/// Largest alpha <= cap with X + alpha dX >= 0 (infinity if unbounded).
inline double max_step(const Blocks& X, const Blocks& dX) {
    double alpha = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < X.size(); ++i) {
        Eigen::LLT<Matrix> llt(X[i]);
        if (llt.info() != Eigen::Success) return 0;
        Matrix Linv = llt.matrixL().solve(Matrix::Identity(X[i].rows(), X[i].cols()));
        Matrix T = Linv * dX[i] * Linv.transpose();
        Eigen::SelfAdjointEigenSolver<Matrix> es((T + T.transpose()) / 2, Eigen::EigenvaluesOnly);
        double lmin = es.eigenvalues()(0);
        if (lmin < 0) alpha = std::min(alpha, -1 / lmin);
    }
    return alpha;
}

/// Per block: (constraint, r, c, v) with both orientations listed.
struct ExpandedEntry {
    int con, r, c;
    double v;
};

}  // namespace detail

inline SdpSolution ipm_solve(const SdpData& d, const IpmConfig& cfg = {}) {
    using namespace detail;
    const int m = d.num_constraints();
    const auto nb = d.sizes.size();
    int N = 0;
    for (int s : d.sizes) N += s;

    std::vector<std::vector<ExpandedEntry>> expanded(nb);
    double normA = 0;
    for (int j = 0; j < m; ++j) {
        double nj = 0;
        for (const auto& e : d.A[static_cast<std::size_t>(j)]) {
            expanded[static_cast<std::size_t>(e.block)].push_back({j, e.r, e.c, e.v});
            if (e.r != e.c) expanded[static_cast<std::size_t>(e.block)].push_back({j, e.c, e.r, e.v});
            nj += (e.r == e.c ? 1 : 2) * e.v * e.v;
        }
        normA = std::max(normA, std::sqrt(nj));
    }
    double normC = 0;
    for (const auto& e : d.C) normC += (e.r == e.c ? 1 : 2) * e.v * e.v;
    normC = std::sqrt(normC);
    const double normb = d.b.norm();

    // Initial point in the spirit of SDPT3.
    double xi = std::max({10.0, std::sqrt(static_cast<double>(N))});
    for (int j = 0; j < m; ++j) {
        double nj = 0;
        for (const auto& e : d.A[static_cast<std::size_t>(j)]) nj += (e.r == e.c ? 1 : 2) * e.v * e.v;
        xi = std::max(xi, N * (1 + std::abs(d.b(j))) / (1 + std::sqrt(nj)));
    }
    double eta = std::max({10.0, std::sqrt(static_cast<double>(N)), normA, normC});

    SdpSolution sol;
    Blocks X, S;
    for (int s : d.sizes) {
        X.push_back(xi * Matrix::Identity(s, s));
        S.push_back(eta * Matrix::Identity(s, s));
    }
    Vector y = Vector::Zero(m);
    Blocks Cm = zeros(d.sizes);
    add_to(Cm, d.C, 1.0);

    auto A_of = [&](const Blocks& Z, bool general) {
        Vector out(m);
        for (int j = 0; j < m; ++j)
            out(j) = general ? inner_general(d.A[static_cast<std::size_t>(j)], Z) : inner(d.A[static_cast<std::size_t>(j)], Z);
        return out;
    };
    auto At_of = [&](const Vector& v) {
        Blocks out = zeros(d.sizes);
        for (int j = 0; j < m; ++j) add_to(out, d.A[static_cast<std::size_t>(j)], v(j));
        return out;
    };

    struct Snapshot {
        double merit = std::numeric_limits<double>::infinity();
        Blocks X, S;
        Vector y;
        double pobj = 0, dobj = 0, pinf = 0, dinf = 0, gap = 0;
        int at = 0;
    } best;

    for (int it = 0;; ++it) {
        sol.iterations = it;
        Vector rp = d.b - A_of(X, false);
        Blocks AtY = At_of(y);
        Blocks Rd(nb);
        for (std::size_t i = 0; i < nb; ++i) Rd[i] = Cm[i] - S[i] - AtY[i];
        const double mu = dot(X, S) / N;
        const double pobj = dot(Cm, X), dobj = d.b.dot(y);
        sol.primal_objective = pobj;
        sol.dual_objective = dobj;
        sol.primal_infeasibility = rp.norm() / (1 + normb);
        sol.dual_infeasibility = frob(Rd) / (1 + normC);
        sol.relative_gap = std::abs(pobj - dobj) / (1 + std::abs(pobj) + std::abs(dobj));
#ifdef TRACECERT_IPM_TRACE
        std::fprintf(stderr, "%3d p=%.3e d=%.3e gap=%.3e mu=%.3e pobj=%.9f dobj=%.9f\n", it, sol.primal_infeasibility,
                     sol.dual_infeasibility, sol.relative_gap, mu, pobj, dobj);
#endif
        if (sol.primal_infeasibility < cfg.primal_tol && sol.dual_infeasibility < cfg.dual_tol &&
            sol.relative_gap < cfg.gap_tol) {
            sol.status = IpmStatus::optimal;
            break;
        }
        const double merit = std::max({sol.primal_infeasibility, sol.dual_infeasibility, sol.relative_gap});
        if (merit < 0.9 * best.merit) {
            best = {merit, X, S, y, pobj, dobj, sol.primal_infeasibility, sol.dual_infeasibility, sol.relative_gap, it};
        } else if (it - best.at >= cfg.stall_iterations) {
            sol.status = IpmStatus::max_iterations;
            break;
        }
        if (it >= cfg.max_iterations) {
            sol.status = IpmStatus::max_iterations;
            break;
        }

        Blocks Sinv(nb);
        bool ok = true;
        for (std::size_t i = 0; i < nb; ++i) {
            Eigen::LLT<Matrix> llt(S[i]);
            if (llt.info() != Eigen::Success) {
                ok = false;
                break;
            }
            Sinv[i] = llt.solve(Matrix::Identity(S[i].rows(), S[i].cols()));
        }
        if (!ok) {
            sol.status = IpmStatus::numerical_failure;
            break;
        }

        // Schur complement M_ij = tr(A_i X A_j S^-1).
        Matrix M = Matrix::Zero(m, m);
        for (std::size_t bi = 0; bi < nb; ++bi) {
            const auto& E = expanded[bi];
            const Matrix& Xb = X[bi];
            const Matrix& Sb = Sinv[bi];
            for (std::size_t p = 0; p < E.size(); ++p)
                for (std::size_t q = 0; q < E.size(); ++q) {
                    const auto& ei = E[p];
                    const auto& ej = E[q];
                    if (ej.con < ei.con) continue;
                    M(ei.con, ej.con) += ei.v * ej.v * Xb(ei.c, ej.r) * Sb(ej.c, ei.r);
                }
        }
        M = M.selfadjointView<Eigen::Upper>();
        Eigen::LDLT<Matrix> schur(M);
        if (schur.info() != Eigen::Success) {
            sol.status = IpmStatus::numerical_failure;
            break;
        }

        Blocks XRdSinv(nb);
        for (std::size_t i = 0; i < nb; ++i) XRdSinv[i] = X[i] * Rd[i] * Sinv[i];
        const Vector base = d.b + A_of(XRdSinv, true);
        const Vector ASinv = A_of(Sinv, false);

        auto direction = [&](double sigma_mu, const Blocks* Q, Blocks& dX, Vector& dy, Blocks& dS) {
            Vector rhs = base - sigma_mu * ASinv;
            Blocks QSinv;
            if (Q) {
                QSinv.resize(nb);
                for (std::size_t i = 0; i < nb; ++i) QSinv[i] = (*Q)[i] * Sinv[i];
                rhs += A_of(QSinv, true);
            }
            dy = schur.solve(rhs);
            Blocks Aty = At_of(dy);
            dS.resize(nb);
            dX.resize(nb);
            for (std::size_t i = 0; i < nb; ++i) {
                dS[i] = Rd[i] - Aty[i];
                Matrix t = sigma_mu * Sinv[i] - X[i] - X[i] * dS[i] * Sinv[i];
                if (Q) t -= QSinv[i];
                dX[i] = (t + t.transpose()) / 2;
            }
        };

        Blocks dXa, dSa, dX, dS;
        Vector dya, dy;
        direction(0.0, nullptr, dXa, dya, dSa);
        double ap = std::min(1.0, max_step(X, dXa)), ad = std::min(1.0, max_step(S, dSa));
        double mu_aff = 0;
        for (std::size_t i = 0; i < nb; ++i) mu_aff += ((X[i] + ap * dXa[i]).cwiseProduct(S[i] + ad * dSa[i])).sum();
        mu_aff /= N;
        double sigma = std::clamp(std::pow(mu_aff / mu, 3), 0.0, 1.0);

        Blocks Q(nb);
        for (std::size_t i = 0; i < nb; ++i) Q[i] = dXa[i] * dSa[i];
        direction(sigma * mu, &Q, dX, dy, dS);

        ap = std::min(1.0, cfg.step_fraction * max_step(X, dX));
        ad = std::min(1.0, cfg.step_fraction * max_step(S, dS));
        if (!(ap > 0) || !(ad > 0) || !std::isfinite(ap) || !std::isfinite(ad)) {
            sol.status = IpmStatus::numerical_failure;
            break;
        }
        for (std::size_t i = 0; i < nb; ++i) {
            X[i] += ap * dX[i];
            S[i] += ad * dS[i];
        }
        y += ad * dy;
    }
    if (sol.status != IpmStatus::optimal && best.merit < std::numeric_limits<double>::infinity()) {
        X = std::move(best.X);
        S = std::move(best.S);
        y = std::move(best.y);
        sol.primal_objective = best.pobj;
        sol.dual_objective = best.dobj;
        sol.primal_infeasibility = best.pinf;
        sol.dual_infeasibility = best.dinf;
        sol.relative_gap = best.gap;
        if (best.merit < cfg.near_tol) sol.status = IpmStatus::near_optimal;
    }
    sol.X = std::move(X);
    sol.S = std::move(S);
    sol.y = std::move(y);
    return sol;
}

}  // namespace tracecert::tsos
