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

#ifndef COVCHAN_COVARIANCE_HPP
#define COVCHAN_COVARIANCE_HPP

#include <complex>
#include <vector>

#include "covchan/channel.hpp"
#include "covchan/linalg.hpp"
#include "covchan/rng.hpp"

namespace covchan {

// SU(d)-invariance structure of the two channel families. A channel with
// output representation alpha commutes, at the Choi level, with
// K(U) = conj(U) (x) alpha(U); here alpha(U) = U ("identical") or conj(U)
// ("conjugate"). Both cases split C^d (x) C^d into exactly two invariant
// blocks, so invariant Choi matrices are two-parameter.

enum class RepCase { identical, conjugate };

struct ProjectorSet {
    RepCase rep;
    int d;
    std::vector<Matrix> projectors; // identical: {P, P_perp}; conjugate: {P_s, P_a}
    std::vector<int> ranks;         // identical: {1, d^2-1}; conjugate: {d(d+1)/2, d(d-1)/2}
};

ProjectorSet invariant_projectors(RepCase rep, int d);

/// Max Frobenius commutator norm ||[C, K(U)]|| over n Haar samples.
/// Invariant channels stay below 1e-10; a wrong case shows up as O(1).
double verify_invariance(const ChoiMatrix& c, RepCase rep, int n_samples, Rng& rng);

struct ChoiDecomposition {
    std::vector<std::complex<double>> coefficients; // c_k = Tr(C P_k) / rank(P_k)
    double residual;                                // ||C - sum c_k P_k||_F
};

/// Expansion of a Choi matrix over the invariant projectors. Residual is
/// ~0 iff C lies in the invariant span; for CP invariant maps all c_k >= 0.
ChoiDecomposition choi_projector_decomposition(const ChoiMatrix& c, RepCase rep);

/// The two extreme invariant channels of a case: the specs whose Choi
/// matrices are the trace-normalized projectors (d/rank) P_k.
std::vector<ChannelSpec> extreme_channels(RepCase rep, int d);

/// d=2 only: the conjugate representation is unitarily equivalent to the
/// identical one via Y = [[0,1],[-1,0]], merging the two families.
/// Returns ||(1 (x) Y) C(Lambda_t) (1 (x) Y)^dagger - C(Delta_{-t})||_F.
double d2_family_equivalence(double t);

} // namespace covchan

#endif
