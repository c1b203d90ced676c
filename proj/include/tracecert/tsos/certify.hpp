#pragma once

// Driver: numeric solve, exact rounding or dual extraction, level schedule.

#include <cmath>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "tracecert/certkit/json.hpp"
#include "tracecert/tsos/alternating.hpp"
#include "tracecert/tsos/dual.hpp"
#include "tracecert/tsos/rounding.hpp"

namespace tracecert::tsos {

enum class SolveStatus { feasible, infeasible_with_dual, undecided };
enum class SolverMethod { interior_point, alternating_projections };
enum class FastPath { automatic, on, off };

inline std::string to_string(SolveStatus s) {
    switch (s) {
        case SolveStatus::feasible: return "feasible";
        case SolveStatus::infeasible_with_dual: return "infeasible-with-dual";
        case SolveStatus::undecided: return "undecided";
    }
    return "?";
}

struct SolverConfig {
    SolverMethod method = SolverMethod::interior_point;
    IpmConfig ipm;
    ApConfig ap;
    RoundingConfig rounding;
    /// Tolerance for the dual conditions.
    double dual_tol = 1e-6;
    /// |slack| below this counts as zero: rounding is tried without a margin.
    double zero_slack = 1e-7;
    FastPath fast_path = FastPath::automatic;
};

struct SolveReport {
    SolveStatus status = SolveStatus::undecided;
    int level = 0;
    int iterations = 0;
    double primal_residual = 0, dual_residual = 0, gap = 0;
    /// Numeric estimate of the largest t with f + eps - t still representable.
    double slack = 0;
    std::optional<certkit::Certificate> certificate;
    std::optional<certkit::CommutativeCertificate> commutative;
    std::optional<TracialFunctional> functional;
    std::optional<DualConditions> conditions;
    std::string message;
};

namespace detail {

inline Rational shrink_for(const Rational& epsilon, double slack) {
    Rational half_slack = rationalize(slack / 2, 1000000);
    Rational s = epsilon > 0 ? std::min(Rational(epsilon / 2), half_slack) : half_slack;
    if (s <= 0 || to_double(s) > slack) return 0;
    return s;
}

inline void attach_dual(const GramProblem& p, const std::vector<double>& raw, const SolverConfig& cfg, SolveReport& r) {
    try {
        TracialFunctional L = extract_dual(p, raw);
        const NcPoly lhs = p.target + NcPoly::constant(p.target.nvars(), p.epsilon);
        DualConditions c = check_conditions(L, lhs);
        r.functional = std::move(L);
        r.conditions = c;
        if (c.ok(cfg.dual_tol) && c.value < -cfg.dual_tol) {
            r.status = SolveStatus::infeasible_with_dual;
            r.message = "separating functional found";
        } else {
            r.message = "dual conditions not met within tolerance";
        }
    } catch (const DomainError& e) {
        r.message = e.what();
    }
}

inline void attach_primal(const GramProblem& p, const std::vector<Eigen::MatrixXd>& X, const Rational& shrink,
                          const SolverConfig& cfg, SolveReport& r) {
    if (p.kind == GramKind::noncommutative) {
        r.certificate = round_certificate(p, X, shrink, cfg.rounding);
        if (r.certificate) r.status = SolveStatus::feasible;
    } else {
        r.commutative = round_commutative(p, X, shrink, cfg.rounding);
        if (r.commutative) r.status = SolveStatus::feasible;
    }
    r.message = r.status == SolveStatus::feasible ? "certificate verified" : "exact rounding failed";
}

inline SolveReport solve_ipm(const GramProblem& p, const SolverConfig& cfg) {
    SolveReport r;
    r.level = p.k;
    const SdpData d = standard_form(p);
    const SdpSolution s = ipm_solve(d, cfg.ipm);
    r.iterations = s.iterations;
    r.primal_residual = s.primal_infeasibility;
    r.dual_residual = s.dual_infeasibility;
    r.gap = s.relative_gap;
    r.slack = to_double(p.rhs[0]) - d.b.dot(s.y);
    if (s.status != IpmStatus::optimal && s.status != IpmStatus::near_optimal) {
        r.message = s.status == IpmStatus::numerical_failure ? "interior point method broke down"
                                                             : "interior point method did not converge";
        return r;
    }

    if (r.slack > cfg.zero_slack) {
        attach_primal(p, s.X, shrink_for(p.epsilon, r.slack), cfg, r);
    } else if (r.slack >= -cfg.zero_slack) {
        attach_primal(p, s.X, 0, cfg, r);
        if (r.status != SolveStatus::feasible) r.message = "slack is numerically zero; exact rounding failed";
    } else {
        std::vector<double> raw(static_cast<std::size_t>(p.num_rows()));
        raw[0] = 1;
        for (int j = 1; j < p.num_rows(); ++j) raw[static_cast<std::size_t>(j)] = -s.y(j - 1);
        attach_dual(p, raw, cfg, r);
    }
    return r;
}

inline SolveReport solve_ap(const GramProblem& p, const SolverConfig& cfg) {
    SolveReport r;
    r.level = p.k;
    const Rational shrink = p.epsilon > 0 ? Rational(p.epsilon / 2) : Rational(0);
    Eigen::VectorXd target(p.num_rows());
    for (int i = 0; i < p.num_rows(); ++i) target(i) = to_double(p.rhs[static_cast<std::size_t>(i)]);
    target(0) -= to_double(shrink);
    ApResult a = alternating_projections(p, target, cfg.ap);
    r.iterations = a.iterations;
    r.primal_residual = a.gap;
    if (!a.converged) {
        r.message = "alternating projections stalled";
        return r;
    }
    r.slack = to_double(shrink);
    attach_primal(p, a.blocks, shrink, cfg, r);
    return r;
}

}  // namespace detail

/// Feasibility of the Gram problem: an exactly verified certificate, a checked
/// separating functional, or undecided.
inline SolveReport solve(const GramProblem& p, const SolverConfig& cfg = {}) {
    if (cfg.method == SolverMethod::alternating_projections) return detail::solve_ap(p, cfg);
    return detail::solve_ipm(p, cfg);
}

/// Commutative Putinar search at level k for a polynomial in two variables.
/// On infeasibility the dual is lifted to words through sorting.
inline SolveReport commutative_putinar_search(const CommPoly& g, const Rational& epsilon, int k,
                                              const SolverConfig& cfg = {}) {
    if (g.nvars() != 2) throw DomainError("commutative search needs a polynomial in two variables");
    return solve(build_commutative_gram(g, epsilon, k), cfg);
}

inline NcPoly symmetrize(const NcPoly& f) { return make_rational(1, 2) * (f + adj(f)); }

/// Level schedule ceil(deg/2), ..., k_max. Returns the first verified
/// certificate, else the dual evidence from the highest level reached.
inline SolveReport certify(const NcPoly& f, const Rational& epsilon, int k_max, const SolverConfig& cfg = {}) {
    if (epsilon < 0) throw DomainError("epsilon must be nonnegative");
    if (!is_symmetric(f) && !ncpoly::cyc_equiv(f, adj(f)))
        throw DomainError("polynomial is not cyclically equivalent to a symmetric one");
    const int n = std::max(f.nvars(), 1);
    const NcPoly fw = f.widened(n);
    const int k_min = std::max(1, (std::max(fw.degree(), 0) + 1) / 2);
    const bool sorted = n <= 2 && ncpoly::is_cyclically_sorted(fw.widened(2));
    const bool fast = cfg.fast_path != FastPath::off && sorted;
    const bool generic = cfg.fast_path != FastPath::on || !sorted;

    SolveReport best;
    best.level = k_min;
    best.message = k_max < k_min ? "k_max is below the degree bound" : "no level decided";
    auto keep_dual = [&](SolveReport& r) {
        if (r.status == SolveStatus::infeasible_with_dual &&
            (best.status != SolveStatus::infeasible_with_dual || r.level >= best.level))
            best = std::move(r);
        else if (best.status == SolveStatus::undecided)
            best = std::move(r);
    };

    for (int k = k_min; k <= k_max; ++k) {
        if (fast) {
            const NcPoly f2 = fw.widened(2);
            SolveReport r = commutative_putinar_search(ncpoly::commutative_project(f2), epsilon, k, cfg);
            if (r.status == SolveStatus::feasible) {
                r.certificate = certkit::putinar_lift(*r.commutative, f2);
                if (!certkit::verify(*r.certificate)) throw InvariantError("lifted certificate does not verify");
                r.message = "certificate verified (sorted fast path)";
                return r;
            }
            if (r.functional) r.conditions = check_conditions(*r.functional, f2 + NcPoly::constant(2, epsilon));
            keep_dual(r);
        }
        if (generic) {
            SolveReport r = solve(build_gram(fw, epsilon, k, n), cfg);
            if (r.status == SolveStatus::feasible) return r;
            keep_dual(r);
        }
    }
    return best;
}

inline nlohmann::json to_json(const DualConditions& c) {
    return {{"min_eigenvalue", c.min_eigenvalue},
            {"max_abs_value", c.max_abs_value},
            {"unit_error", c.unit_error},
            {"symmetry_error", c.symmetry_error},
            {"value", c.value}};
}

inline nlohmann::json to_json(const SolveReport& r) {
    nlohmann::json j = {{"status", to_string(r.status)},
                        {"level", r.level},
                        {"iterations", r.iterations},
                        {"residuals", {{"primal", r.primal_residual}, {"dual", r.dual_residual}, {"gap", r.gap}}},
                        {"slack", r.slack},
                        {"message", r.message}};
    if (r.certificate) j["certificate"] = certkit::to_json(*r.certificate);
    if (r.commutative) j["commutative_certificate"] = certkit::to_json(*r.commutative);
    if (r.functional) j["functional"] = to_json(*r.functional);
    if (r.conditions) j["conditions"] = to_json(*r.conditions);
    return j;
}

}  // namespace tracecert::tsos
