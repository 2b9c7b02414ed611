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

#ifndef COVCHAN_ADDITIVITY_HPP
#define COVCHAN_ADDITIVITY_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "covchan/product_output.hpp"
#include "covchan/rng.hpp"

namespace covchan {

// Minimal-output-entropy experiments for Lambda_t (x) Lambda_t. Everything
// here is deterministic given (options, seed); randomized branches draw
// from substreams derived from (seed, branch index).

enum class Certificate { ppt_entanglement_breaking, nsd_criterion, numerical_only };
enum class Verdict { additive_within_tol, violation_candidate };
enum class Region { ppt, ppt_boundary, nsd, nsd_boundary, missing, not_cp };

std::string to_string(Certificate c);
std::string to_string(Verdict v);
std::string to_string(Region r);

/// Which additivity certificate covers parameter t at dimension d:
/// the PPT interval [-1/(d^2-1), 1/(d+1)], the negative-semidefiniteness
/// interval [-2/(d^2-2), -1/(d^2-1)), or neither (numerics only).
Certificate classify_certificate(int d, double t, double eps = 1e-12);

/// t-axis region label used by sweeps; boundaries resolved within eps.
Region classify_region(int d, double t, double eps = 1e-12);

struct MinimizeResult {
    RealVector best_lambda;
    double value; // nats
    int n_starts;
};

/// Multistart Nelder-Mead over the simplex in softmax coordinates. The
/// start set always contains the d vertices, the uniform point and all
/// edge midpoints (each also evaluated at the exact lambda), topped up
/// with random Dirichlet points; the result never exceeds any start value.
/// Throws not_cp_error outside the CP range.
MinimizeResult minimize_over_simplex(double t, int d, int n_starts, std::uint64_t seed);

struct AdditivityOptions {
    int n_starts = 50;
    std::uint64_t seed = 0;
    double tol = 1e-7; // nats
};

struct AdditivityReport {
    int d;
    double t;
    double s_min_single;
    RealVector best_lambda;
    double s_min_product;
    double gap; // s_min_product - 2 s_min_single
    int n_starts;
    Verdict verdict;
    Certificate certificate;
    std::uint64_t seed;
};

AdditivityReport additivity_report(double t, int d, const AdditivityOptions& opts = {});

struct MMCounterexample {
    RealVector lambda;
    RealVector lambda_prime; // more mixed than lambda by construction
    int prefix_index;        // first violated prefix sum (0-based)
    double excess;           // by how much it is violated
};

struct MMVerdict {
    int d;
    double t;
    int n_pairs;
    std::vector<MMCounterexample> counterexamples;
    bool pass;
    std::uint64_t seed;
};

/// One draw of the mm_test pair generator: a flat Dirichlet lambda and
/// its image under 1..3d random T-transforms (more mixed by construction).
std::pair<RealVector, RealVector> mixed_pair(int d, Rng& rng);

/// Randomized test of "lambda' more mixed than lambda implies X(lambda')
/// more mixed than X(lambda)". Pairs come from `mixed_pair`.
/// Counterexamples are results, not errors. Throws not_cp_error outside
/// the CP range.
MMVerdict mm_test(double t, int d, int n_pairs, std::uint64_t seed, double tol = 1e-9);

/// Minimum output entropy of Lambda_t (x) Lambda_t over n Haar-random pure
/// bipartite inputs, computed through the generic matrix-unit route.
/// Returns +infinity for n = 0. Throws not_cp_error outside the CP range.
double pure_state_scan(double t, int d, int n, std::uint64_t seed);

struct ScanOptions {
    int n_lambda = 200; // simplex samples for the NSD worst case
    int n_starts = 20;
    std::uint64_t seed = 0;
};

struct ThresholdRow {
    int d;
    double t;
    Region region;
    bool cp;
    double cp_min_eig;
    double ppt_min_eig;
    double nsd_max_shifted; // worst shifted block eigenvalue over sampled lambda
    double gap;             // NaN when not CP
};

/// One classification row per grid point; out-of-range t yields a flagged
/// row instead of an error.
std::vector<ThresholdRow> threshold_scan(int d, const std::vector<double>& t_grid,
                                         const ScanOptions& opts = {});

} // namespace covchan

#endif
