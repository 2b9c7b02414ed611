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

#ifndef COVCHAN_LINALG_HPP
#define COVCHAN_LINALG_HPP

#include <Eigen/Dense>
#include <complex>

namespace covchan {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

// Tensor-basis convention used everywhere: e_i (x) e_j of C^{d1} (x) C^{d2}
// maps to flat index i*d2 + j.

enum class Subsystem { first, second };

enum class LogBase { natural, two };

enum class Mixedness { first_more_mixed, second_more_mixed, equal, incomparable };

struct MajorizationVerdict {
    Mixedness relation;
    double max_partial_sum_gap; // largest prefix-sum excess of the less mixed side
};

/// Eigenvalues sorted decreasing; columns of `vectors` aligned with `values`.
struct Eigensystem {
    RealVector values;
    Matrix vectors;
};

Matrix identity(int d);
Matrix matrix_unit(int i, int j, int d);

/// Swap operator F on C^d (x) C^d: F (x (x) y) = y (x) x.
Matrix swap_operator(int d);

/// Projector onto (1/sqrt(d)) sum_i e_i (x) e_i.
Matrix max_entangled_projector(int d);

double hermiticity_error(const Matrix& m); // max |m - m^dagger| entrywise
bool is_hermitian(const Matrix& m, double tol = 1e-10);

Matrix kron(const Matrix& a, const Matrix& b);

/// Trace out one tensor factor of an m of dimension d1*d2.
Matrix partial_trace(const Matrix& m, int d1, int d2, Subsystem over);

/// Transpose one tensor factor; involutive, trace- and Hermiticity-preserving.
Matrix partial_transpose(const Matrix& m, int d1, int d2, Subsystem on);

/// Spectrum of a Hermitian matrix, sorted decreasing.
/// Throws std::invalid_argument if the Hermiticity check exceeds `tol`.
RealVector hermitian_spectrum(const Matrix& m, double tol = 1e-10);
Eigensystem hermitian_eigensystem(const Matrix& m, double tol = 1e-10);

/// -sum p ln p (or log2) for a density-matrix spectrum. Values in
/// [-1e-8, 0] are clamped to zero; anything more negative, or a total
/// trace off one by more than 1e-8, is rejected.
double von_neumann_entropy(const RealVector& spectrum, LogBase base = LogBase::natural);

/// Mixedness comparison by prefix sums of the decreasing rearrangements.
/// first_more_mixed: every prefix sum of a is <= the one of b + tol.
/// Throws std::invalid_argument on length or trace mismatch.
MajorizationVerdict more_mixed(const RealVector& a, const RealVector& b, double tol);

RealVector sorted_descending(const RealVector& v);

} // namespace covchan

#endif
