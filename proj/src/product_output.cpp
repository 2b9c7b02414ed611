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

#include "covchan/product_output.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace covchan {

void validate_simplex(const RealVector& lambda, double tol) {
    if (lambda.size() < 1)
        throw std::invalid_argument("invalid simplex point: empty");
    double sum = 0.0;
    for (Eigen::Index i = 0; i < lambda.size(); ++i) {
        if (lambda[i] < -tol)
            throw std::invalid_argument("invalid simplex point: weight " +
                                        std::to_string(lambda[i]));
        sum += lambda[i];
    }
    if (std::abs(sum - 1.0) > tol)
        throw std::invalid_argument("invalid simplex point: sum " + std::to_string(sum));
}

Matrix schmidt_input(const RealVector& lambda) {
    validate_simplex(lambda);
    const int d = static_cast<int>(lambda.size());
    Matrix rho = Matrix::Zero(d * d, d * d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            rho(i * d + i, j * d + j) = std::sqrt(std::max(lambda[i], 0.0) *
                                                  std::max(lambda[j], 0.0));
    return rho;
}

RealVector eta_values(double t, int d, const RealVector& lambda) {
    validate_simplex(lambda);
    if (lambda.size() != d)
        throw std::invalid_argument("eta_values: lambda has wrong length");
    const double unit = (1.0 - t) / d;
    RealVector eta(d * (d - 1));
    int k = 0;
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            if (i != j)
                eta[k++] = t * (1.0 - t) * (lambda[i] + lambda[j]) / d + unit * unit;
    return eta;
}

Matrix restricted_block(double t, int d, const RealVector& lambda) {
    validate_simplex(lambda);
    if (lambda.size() != d)
        throw std::invalid_argument("restricted_block: lambda has wrong length");
    const double unit = (1.0 - t) / d;
    Matrix block = Matrix::Zero(d, d);
    for (int i = 0; i < d; ++i) {
        const double sqi = std::sqrt(std::max(lambda[i], 0.0));
        for (int j = 0; j < d; ++j)
            block(i, j) = t * t * sqi * std::sqrt(std::max(lambda[j], 0.0));
        block(i, i) += 2.0 * t * (1.0 - t) / d * lambda[i] + unit * unit;
    }
    return block;
}

ProductOutput product_output(double t, int d, const RealVector& lambda) {
    if (!cp_range(Family::transpose_depolarising, d).contains(t))
        throw not_cp_error("product_output: t=" + std::to_string(t) +
                           " outside the CP range for d=" + std::to_string(d));
    validate_simplex(lambda);
    ProductOutput out;
    out.t = t;
    out.d = d;
    out.lambda = lambda;
    const Matrix rho = schmidt_input(lambda);
    Matrix diag_lambda = Matrix::Zero(d, d);
    for (int i = 0; i < d; ++i)
        diag_lambda(i, i) = lambda[i];
    const double unit = (1.0 - t) / d;
    out.full_matrix = t * t * rho +
                      (t * (1.0 - t) / d) *
                          (kron(diag_lambda, identity(d)) + kron(identity(d), diag_lambda)) +
                      unit * unit * identity(d * d);
    out.eta = eta_values(t, d, lambda);
    out.block = restricted_block(t, d, lambda);
    return out;
}

Matrix product_output_generic(const ChannelSpec& spec1, const ChannelSpec& spec2,
                              const RealVector& lambda) {
    if (spec1.d != spec2.d)
        throw std::invalid_argument("product_output_generic: channel dimensions differ");
    validate_simplex(lambda);
    const int d = spec1.d;
    if (lambda.size() != d)
        throw std::invalid_argument("product_output_generic: lambda has wrong length");
    Matrix out = Matrix::Zero(d * d, d * d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            const double w = std::sqrt(std::max(lambda[i], 0.0) * std::max(lambda[j], 0.0));
            if (w == 0.0)
                continue;
            const Matrix unit = matrix_unit(i, j, d);
            out += w * kron(apply_channel(spec1, unit), apply_channel(spec2, unit));
        }
    return out;
}

Matrix apply_pair(const ChannelSpec& spec1, const ChannelSpec& spec2, const Matrix& m) {
    if (spec1.d != spec2.d)
        throw std::invalid_argument("apply_pair: channel dimensions differ");
    const int d = spec1.d;
    if (m.rows() != d * d || m.cols() != d * d)
        throw std::invalid_argument("apply_pair: input must be d^2 x d^2");
    // precompute the images of all matrix units once per channel
    std::vector<Matrix> im1(d * d), im2(d * d);
    for (int i = 0; i < d; ++i)
        for (int k = 0; k < d; ++k) {
            im1[i * d + k] = apply_channel(spec1, matrix_unit(i, k, d));
            im2[i * d + k] = apply_channel(spec2, matrix_unit(i, k, d));
        }
    Matrix out = Matrix::Zero(d * d, d * d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (int k = 0; k < d; ++k)
                for (int l = 0; l < d; ++l) {
                    const Complex c = m(i * d + j, k * d + l);
                    if (c == Complex(0.0, 0.0))
                        continue;
                    out += c * kron(im1[i * d + k], im2[j * d + l]);
                }
    return out;
}

RealVector product_spectrum(double t, int d, const RealVector& lambda) {
    const RealVector eta = eta_values(t, d, lambda);
    const RealVector block_spec = hermitian_spectrum(restricted_block(t, d, lambda));
    RealVector all(eta.size() + block_spec.size());
    all << eta, block_spec;
    return sorted_descending(all);
}

EntropySplit entropy_split(double t, int d, const RealVector& lambda) {
    if (!cp_range(Family::transpose_depolarising, d).contains(t))
        throw not_cp_error("entropy_split: t=" + std::to_string(t) +
                           " outside the CP range for d=" + std::to_string(d));
    const RealVector eta = eta_values(t, d, lambda);
    const RealVector block_spec = hermitian_spectrum(restricted_block(t, d, lambda));
    double s1 = 0.0;
    for (Eigen::Index i = 0; i < eta.size(); ++i) {
        if (eta[i] < -1e-8)
            throw std::invalid_argument("entropy_split: negative eigenvalue " +
                                        std::to_string(eta[i]));
        if (eta[i] > 0.0)
            s1 -= eta[i] * std::log(eta[i]);
    }
    double s2 = 0.0;
    for (Eigen::Index i = 0; i < block_spec.size(); ++i) {
        if (block_spec[i] < -1e-8)
            throw std::invalid_argument("entropy_split: negative eigenvalue " +
                                        std::to_string(block_spec[i]));
        if (block_spec[i] > 0.0)
            s2 -= block_spec[i] * std::log(block_spec[i]);
    }
    return {s1, s2, s1 + s2};
}

NsdResult nsd_criterion(double t, int d, const RealVector& lambda, double tol) {
    validate_simplex(lambda);
    const double unit = (1.0 - t) / d;
    const Matrix shifted = restricted_block(t, d, lambda) - unit * unit * identity(d);
    const double max_eig = hermitian_spectrum(shifted)[0];
    NsdResult res;
    res.applicable = t < 0.0;
    res.max_shifted_eigenvalue = max_eig;
    res.negative_semidefinite = !res.applicable || max_eig <= tol;
    return res;
}

double nsd_threshold(int d) { return -2.0 / (static_cast<double>(d) * d - 2.0); }

} // namespace covchan
