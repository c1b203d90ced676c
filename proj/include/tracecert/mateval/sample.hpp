#pragma once

// Random contraction tuples and the trace falsifier.

#include <cmath>
#include <cstdint>
#include <optional>
#include <random>

#include "tracecert/mateval/eval.hpp"

namespace tracecert::mateval {

/// Symmetric GOE draw rescaled to spectral norm u^(1/s), u uniform on [0,1].
inline Matrix sample_contraction(int s, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    Matrix g(s, s);
    for (int r = 0; r < s; ++r)
        for (int c = 0; c < s; ++c) g(r, c) = gauss(rng);
    Matrix m = (g + g.transpose()) / 2;
    double norm = MatTuple::spectral_norm(m);
    double radius = std::pow(unif(rng), 1.0 / s);
    if (norm > 0) m *= radius / norm;
    return m;
}

inline MatTuple sample_contraction_tuple(int n, int s, std::mt19937_64& rng) {
    if (s < 1) throw DomainError("matrix size must be >= 1");
    MatTuple t;
    for (int i = 0; i < n; ++i) t.matrices.push_back(sample_contraction(s, rng));
    return t;
}

inline MatTuple sample_contraction_tuple(int n, int s, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    return sample_contraction_tuple(n, s, rng);
}

/// Nearest point of the contraction ball in the Frobenius norm.
inline Matrix clip_to_contraction(const Matrix& m) {
    Eigen::SelfAdjointEigenSolver<Matrix> es((m + m.transpose()) / 2);
    Vector lam = es.eigenvalues().cwiseMax(-1.0).cwiseMin(1.0);
    return es.eigenvectors() * lam.asDiagonal() * es.eigenvectors().transpose();
}

struct Witness {
    MatTuple tuple;
    double trace = 0;
    bool normalized = false;
};

inline nlohmann::json to_json(const Witness& w) {
    nlohmann::json j = to_json(w.tuple);
    j["trace"] = w.trace;
    j["normalized"] = w.normalized;
    return j;
}

struct FalsifyConfig {
    int max_size = 4;
    int trials = 100;
    std::uint64_t seed = 0;
    /// Report (1/s) tr instead of tr.
    bool normalized = false;
    int refine_iterations = 200;
    Tolerances tol{};
};

/// Projected coordinate descent on the symmetric entries, step halving when a
/// sweep makes no progress.
inline double refine_tuple(const ncpoly::NcPoly& f, MatTuple& A, int iterations) {
    const int s = A.s();
    double best = trace_value(f, A, true);
    double step = 0.25;
    for (int it = 0; it < iterations && step > 1e-10; ++it) {
        bool improved = false;
        for (auto& m : A.matrices)
            for (int r = 0; r < s; ++r)
                for (int c = r; c < s; ++c)
                    for (double dir : {1.0, -1.0}) {
                        Matrix saved = m;
                        m(r, c) += dir * step;
                        if (r != c) m(c, r) += dir * step;
                        m = clip_to_contraction(m);
                        double v = trace_value(f, A, true);
                        if (v < best - 1e-15) {
                            best = v;
                            improved = true;
                            break;
                        }
                        m = saved;
                    }
        if (!improved) step /= 2;
    }
    return best;
}

/// Looks for contractions with tr f(A) < -tol.witness. Absence of a witness
/// proves nothing.
inline std::optional<Witness> falsify_trace_nonneg(const ncpoly::NcPoly& f, const FalsifyConfig& cfg) {
    if (cfg.max_size < 1 || cfg.trials < 1) throw DomainError("falsifier needs max_size >= 1 and trials >= 1");
    const int n = std::max(1, f.nvars());
    std::optional<MatTuple> best;
    double best_value = 0;
    for (int s = 1; s <= cfg.max_size; ++s)
        for (int trial = 0; trial < cfg.trials; ++trial) {
            // Independent substream per (size, trial).
            std::seed_seq seq{static_cast<std::uint32_t>(cfg.seed), static_cast<std::uint32_t>(cfg.seed >> 32),
                              static_cast<std::uint32_t>(s), static_cast<std::uint32_t>(trial)};
            std::mt19937_64 rng(seq);
            MatTuple A = sample_contraction_tuple(n, s, rng);
            double v = trace_value(f, A, true);
            if (!best || v < best_value) {
                best = std::move(A);
                best_value = v;
            }
        }
    refine_tuple(f, *best, cfg.refine_iterations);
    Witness w{*best, trace_value(f, *best, cfg.normalized), cfg.normalized};
    if (w.trace < -cfg.tol.witness) return w;
    return std::nullopt;
}

}  // namespace tracecert::mateval
