#pragma once

#include <cmath>
#include <vector>

#include <Eigen/Dense>
#include <nlohmann/json.hpp>

#include "tracecert/error.hpp"

namespace tracecert::mateval {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// Every floating threshold of the numeric side in one place.
struct Tolerances {
    double symmetry = 1e-12;
    double contraction = 1e-9;
    double psd = 1e-9;
    double witness = 1e-9;
    /// Relative eigenvalue cutoff defining the GNS kernel.
    double gns_kernel = 1e-8;
    /// Relative negative eigenvalue tolerated in a GNS moment matrix.
    double gns_indefinite = 1e-6;
    double moment_cyclic = 1e-9;
};

/// n real symmetric s x s matrices.
struct MatTuple {
    std::vector<Matrix> matrices;

    int n() const { return static_cast<int>(matrices.size()); }
    int s() const { return matrices.empty() ? 0 : static_cast<int>(matrices.front().rows()); }
    const Matrix& operator[](std::size_t i) const { return matrices[i]; }

    /// Throws DomainError on non-square, ragged or non-symmetric input.
    void validate(const Tolerances& tol = {}) const {
        for (const auto& m : matrices) {
            if (m.rows() != m.cols() || m.rows() != s()) throw DomainError("matrices must be square and of equal size");
            if ((m - m.transpose()).cwiseAbs().maxCoeff() > tol.symmetry)
                throw DomainError("matrix is not symmetric");
        }
    }

    bool is_contraction(const Tolerances& tol = {}) const {
        for (const auto& m : matrices)
            if (spectral_norm(m) > 1 + tol.contraction) return false;
        return true;
    }

    static double spectral_norm(const Matrix& m) {
        if (m.size() == 0) return 0;
        Eigen::SelfAdjointEigenSolver<Matrix> es(m, Eigen::EigenvaluesOnly);
        return es.eigenvalues().cwiseAbs().maxCoeff();
    }
};

inline nlohmann::json to_json(const MatTuple& t) {
    nlohmann::json mats = nlohmann::json::array();
    for (const auto& m : t.matrices) {
        nlohmann::json rows = nlohmann::json::array();
        for (Eigen::Index r = 0; r < m.rows(); ++r)
            for (Eigen::Index c = 0; c < m.cols(); ++c) rows.push_back(m(r, c));
        mats.push_back(std::move(rows));
    }
    return {{"n", t.n()}, {"s", t.s()}, {"matrices", std::move(mats)}};
}

inline MatTuple tuple_from_json(const nlohmann::json& j) {
    try {
        int n = j.at("n").get<int>(), s = j.at("s").get<int>();
        const auto& mats = j.at("matrices");
        if (n < 0 || s < 0 || static_cast<int>(mats.size()) != n)
            throw DomainError("matrix tuple: expected " + std::to_string(n) + " matrices");
        MatTuple t;
        for (const auto& flat : mats) {
            if (static_cast<int>(flat.size()) != s * s) throw DomainError("matrix tuple: matrix is not s x s");
            Matrix m(s, s);
            for (int r = 0; r < s; ++r)
                for (int c = 0; c < s; ++c) m(r, c) = flat.at(static_cast<std::size_t>(r * s + c)).get<double>();
            t.matrices.push_back(std::move(m));
        }
        t.validate();
        return t;
    } catch (const nlohmann::json::exception& e) {
        throw DomainError(std::string("matrix tuple: ") + e.what());
    }
}

}  // namespace tracecert::mateval
