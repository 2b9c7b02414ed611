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

#ifndef COVCHAN_PRODUCT_OUTPUT_HPP
#define COVCHAN_PRODUCT_OUTPUT_HPP

#include "covchan/channel.hpp"
#include "covchan/linalg.hpp"

namespace covchan {

// Output of Lambda_t (x) Lambda_t on the Schmidt-diagonal pure input
// rho(lambda). The state splits over the basis {e_i (x) e_j}:
//   - each e_i (x) e_j with i != j is an eigenvector with eigenvalue
//     eta_ij = t(1-t)(lambda_i + lambda_j)/d + ((1-t)/d)^2,
//   - the span of {e_i (x) e_i} carries the d x d block
//     X_hat = t^2 |sqrt(lambda)><sqrt(lambda)| + (2t(1-t)/d) diag(lambda)
//             + ((1-t)/d)^2 1.

struct ProductOutput {
    double t;
    int d;
    RealVector lambda;
    Matrix full_matrix; // X(lambda), d^2 x d^2
    RealVector eta;     // d(d-1) off-diagonal eigenvalues, pairs (i,j) in row-major order
    Matrix block;       // X_hat(lambda), d x d
};

struct EntropySplit {
    double s1;    // off-diagonal (eta) contribution, nats
    double s2;    // block contribution
    double total; // = entropy of the full output
};

struct NsdResult {
    bool negative_semidefinite;  // always true when not applicable (t >= 0)
    bool applicable;             // the criterion is a negative-t argument
    double max_shifted_eigenvalue;
};

void validate_simplex(const RealVector& lambda, double tol = 1e-12);

/// Rank-1 projector sum_ij sqrt(lambda_i lambda_j) e_ij (x) e_ij; both
/// partial traces equal diag(lambda).
Matrix schmidt_input(const RealVector& lambda);

/// Closed-form X(lambda) = t^2 rho + (t(1-t)/d)(rho' (x) 1 + 1 (x) rho')
/// + ((1-t)/d)^2 1, with eta list and restricted block attached.
/// Throws not_cp_error for t outside the transpose-depolarising CP range.
ProductOutput product_output(double t, int d, const RealVector& lambda);

/// Brute-force oracle: sum_ij sqrt(lambda_i lambda_j) Phi1(e_ij) (x) Phi2(e_ij).
Matrix product_output_generic(const ChannelSpec& spec1, const ChannelSpec& spec2,
                              const RealVector& lambda);

/// (Phi1 (x) Phi2)(m) for an arbitrary bipartite m, by matrix-unit summation.
Matrix apply_pair(const ChannelSpec& spec1, const ChannelSpec& spec2, const Matrix& m);

RealVector eta_values(double t, int d, const RealVector& lambda);

Matrix restricted_block(double t, int d, const RealVector& lambda);

/// Full output spectrum, sorted decreasing, assembled from the eta values
/// and the block spectrum (no d^2 x d^2 eigensolve).
RealVector product_spectrum(double t, int d, const RealVector& lambda);

EntropySplit entropy_split(double t, int d, const RealVector& lambda);

/// Negative semidefiniteness of X_hat(lambda) - ((1-t)/d)^2 1 for t < 0;
/// holds for every lambda exactly when t >= -2/(d^2-2).
NsdResult nsd_criterion(double t, int d, const RealVector& lambda, double tol = 1e-10);

double nsd_threshold(int d); // -2/(d^2-2)

} // namespace covchan

#endif
