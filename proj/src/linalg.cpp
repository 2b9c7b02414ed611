// Copyright 2026 The covchan Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "covchan/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace covchan {

Matrix identity(int d) { return Matrix::Identity(d, d); }

Matrix matrix_unit(int i, int j, int d) {
    Matrix m = Matrix::Zero(d, d);
    m(i, j) = 1.0;
    return m;
}

Matrix swap_operator(int d) {
    Matrix f = Matrix::Zero(d * d, d * d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            f(i * d + j, j * d + i) = 1.0;
    return f;
}

Matrix max_entangled_projector(int d) {
    Matrix p = Matrix::Zero(d * d, d * d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            p(i * d + i, j * d + j) = 1.0 / d;
    return p;
}

double hermiticity_error(const Matrix& m) {
    return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

bool is_hermitian(const Matrix& m, double tol) {
    return m.rows() == m.cols() && hermiticity_error(m) <= tol;
}

Matrix kron(const Matrix& a, const Matrix& b) {
    const auto ar = a.rows(), ac = a.cols(), br = b.rows(), bc = b.cols();
    Matrix out(ar * br, ac * bc);
    for (Eigen::Index i = 0; i < ar; ++i)
        for (Eigen::Index j = 0; j < ac; ++j)
            out.block(i * br, j * bc, br, bc) = a(i, j) * b;
    return out;
}

namespace {

void check_factor_dims(const Matrix& m, int d1, int d2) {
    if (d1 < 1 || d2 < 1 || m.rows() != m.cols() ||
        m.rows() != static_cast<Eigen::Index>(d1) * d2) {
        throw std::invalid_argument("dimension mismatch: matrix is " +
                                    std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                                    ", expected " + std::to_string(d1) + "*" + std::to_string(d2));
    }
}

} // namespace

Matrix partial_trace(const Matrix& m, int d1, int d2, Subsystem over) {
    check_factor_dims(m, d1, d2);
    if (over == Subsystem::second) {
        Matrix out = Matrix::Zero(d1, d1);
        for (int i = 0; i < d1; ++i)
            for (int j = 0; j < d1; ++j)
                for (int k = 0; k < d2; ++k)
                    out(i, j) += m(i * d2 + k, j * d2 + k);
        return out;
    }
    Matrix out = Matrix::Zero(d2, d2);
    for (int i = 0; i < d2; ++i)
        for (int j = 0; j < d2; ++j)
            for (int k = 0; k < d1; ++k)
                out(i, j) += m(k * d2 + i, k * d2 + j);
    return out;
}

Matrix partial_transpose(const Matrix& m, int d1, int d2, Subsystem on) {
    check_factor_dims(m, d1, d2);
    Matrix out(m.rows(), m.cols());
    for (int i = 0; i < d1; ++i)
        for (int k = 0; k < d2; ++k)
            for (int j = 0; j < d1; ++j)
                for (int l = 0; l < d2; ++l) {
                    if (on == Subsystem::second)
                        out(i * d2 + k, j * d2 + l) = m(i * d2 + l, j * d2 + k);
                    else
                        out(i * d2 + k, j * d2 + l) = m(j * d2 + k, i * d2 + l);
                }
    return out;
}

namespace {

void check_hermitian(const Matrix& m, double tol) {
    if (m.rows() != m.cols())
        throw std::invalid_argument("not hermitian: matrix is not square");
    const double err = hermiticity_error(m);
    if (err > tol)
        throw std::invalid_argument("not hermitian: max |M - M^dagger| = " + std::to_string(err));
}

} // namespace

RealVector hermitian_spectrum(const Matrix& m, double tol) {
    check_hermitian(m, tol);
    Eigen::SelfAdjointEigenSolver<Matrix> solver(((m + m.adjoint()) / 2.0).eval(),
                                                 Eigen::EigenvaluesOnly);
    return solver.eigenvalues().reverse();
}

Eigensystem hermitian_eigensystem(const Matrix& m, double tol) {
    check_hermitian(m, tol);
    Eigen::SelfAdjointEigenSolver<Matrix> solver(((m + m.adjoint()) / 2.0).eval());
    Eigensystem sys;
    sys.values = solver.eigenvalues().reverse();
    sys.vectors = solver.eigenvectors().rowwise().reverse();
    return sys;
}

double von_neumann_entropy(const RealVector& spectrum, LogBase base) {
    double sum = 0.0;
    for (Eigen::Index i = 0; i < spectrum.size(); ++i) {
        if (spectrum[i] < -1e-8)
            throw std::invalid_argument("invalid spectrum: eigenvalue " +
                                        std::to_string(spectrum[i]) + " below -1e-8");
        sum += spectrum[i];
    }
    if (std::abs(sum - 1.0) > 1e-8)
        throw std::invalid_argument("invalid spectrum: trace " + std::to_string(sum));
    double s = 0.0;
    for (Eigen::Index i = 0; i < spectrum.size(); ++i) {
        const double p = std::max(spectrum[i], 0.0);
        if (p > 0.0)
            s -= p * std::log(p);
    }
    s = std::max(s, 0.0);
    return base == LogBase::two ? s / std::log(2.0) : s;
}

RealVector sorted_descending(const RealVector& v) {
    RealVector out = v;
    std::sort(out.data(), out.data() + out.size(), std::greater<double>());
    return out;
}

MajorizationVerdict more_mixed(const RealVector& a, const RealVector& b, double tol) {
    if (a.size() != b.size())
        throw std::invalid_argument("majorization: length mismatch");
    if (std::abs(a.sum() - b.sum()) > tol)
        throw std::invalid_argument("majorization: trace mismatch |" +
                                    std::to_string(a.sum()) + " - " +
                                    std::to_string(b.sum()) + "|");
    const RealVector sa = sorted_descending(a);
    const RealVector sb = sorted_descending(b);
    double pa = 0.0, pb = 0.0;
    double excess_a = 0.0, excess_b = 0.0; // prefix-sum excess of a over b and vice versa
    for (Eigen::Index k = 0; k < sa.size(); ++k) {
        pa += sa[k];
        pb += sb[k];
        excess_a = std::max(excess_a, pa - pb);
        excess_b = std::max(excess_b, pb - pa);
    }
    const bool a_more_mixed = excess_a <= tol;
    const bool b_more_mixed = excess_b <= tol;
    MajorizationVerdict v{};
    if (a_more_mixed && b_more_mixed)
        v.relation = Mixedness::equal;
    else if (a_more_mixed)
        v.relation = Mixedness::first_more_mixed;
    else if (b_more_mixed)
        v.relation = Mixedness::second_more_mixed;
    else
        v.relation = Mixedness::incomparable;
    v.max_partial_sum_gap = std::max(excess_a, excess_b);
    return v;
}

} // namespace covchan
