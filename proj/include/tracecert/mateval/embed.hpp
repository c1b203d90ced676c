#pragma once

#include <complex>
#include <vector>

#include "tracecert/mateval/tuple.hpp"

namespace tracecert::mateval {

using ComplexMatrix = Eigen::MatrixXcd;

/// Each entry a + ib becomes the block [[a, -b], [b, a]]. Hermitian input gives a
/// symmetric matrix of twice the size with tr f(out) = 2 Re tr f(in).
inline MatTuple real_embedding(const std::vector<ComplexMatrix>& mats, const Tolerances& tol = {}) {
    MatTuple out;
    for (const auto& h : mats) {
        if (h.rows() != h.cols()) throw DomainError("complex matrix is not square");
        if ((h - h.adjoint()).cwiseAbs().maxCoeff() > tol.symmetry) throw DomainError("complex matrix is not self-adjoint");
        const auto s = h.rows();
        Matrix r(2 * s, 2 * s);
        for (Eigen::Index i = 0; i < s; ++i)
            for (Eigen::Index j = 0; j < s; ++j) {
                double a = h(i, j).real(), b = h(i, j).imag();
                r(2 * i, 2 * j) = a;
                r(2 * i, 2 * j + 1) = -b;
                r(2 * i + 1, 2 * j) = b;
                r(2 * i + 1, 2 * j + 1) = a;
            }
        out.matrices.push_back(std::move(r));
    }
    out.validate(tol);
    return out;
}

/// E_{i,i+1} + E_{i+1,i} for i = 1..n, indices mod n.
inline MatTuple multilinear_witness(int n) {
    if (n < 2) throw DomainError("multilinear witness needs n >= 2");
    MatTuple out;
    for (int i = 0; i < n; ++i) {
        Matrix m = Matrix::Zero(n, n);
        int j = (i + 1) % n;
        m(i, j) = 1;
        m(j, i) = 1;
        out.matrices.push_back(std::move(m));
    }
    return out;
}

}  // namespace tracecert::mateval
