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

#ifndef COVCHAN_CHANNEL_HPP
#define COVCHAN_CHANNEL_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

#include "covchan/linalg.hpp"

namespace covchan {

// The three covariant families on d x d matrices:
//   trace                   tau(A)      = Tr(A) 1/d
//   depolarising            Delta_t(A)  = t A   + (1-t) tau(A)
//   transpose-depolarising  Lambda_t(A) = t A^T + (1-t) tau(A)
// Out-of-range t is representable on purpose; the CP/TP/PPT predicates
// classify, they do not reject, so boundary scans stay expressible.

enum class Family { trace, depolarising, transpose_depolarising };

std::string family_name(Family f);

struct ChannelSpec {
    Family family;
    int d;
    double t = 0.0; // ignored for the trace family

    // mixing weight actually applied (0 for the trace family)
    double effective_t() const { return family == Family::trace ? 0.0 : t; }
};

/// Choi matrix C(Phi) = sum_ij e_ij (x) Phi(e_ij); first tensor factor is
/// the input copy, second is the output. In the computational basis the
/// basis conjugation J acts trivially on matrix units, so no separate
/// antiunitary appears here.
struct ChoiMatrix {
    Matrix m; // d^2 x d^2
    int d;
};

struct Interval {
    double lo;
    double hi;
    bool contains(double t, double eps = 1e-12) const { return t >= lo - eps && t <= hi + eps; }
};

class not_cp_error : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

Matrix apply_channel(const ChannelSpec& spec, const Matrix& a);

ChoiMatrix choi(const ChannelSpec& spec);

/// Phi(A) = Tr_1[(A^T (x) 1) C]; inverse of `choi` as a linear map.
Matrix apply_from_choi(const ChoiMatrix& c, const Matrix& a);

struct CpReport {
    bool holds;
    double min_eigenvalue;
};

/// Positive semidefiniteness of the Choi matrix (complete positivity).
CpReport is_cp(const ChoiMatrix& c, double tol = 1e-10);

/// Tr_2 C = 1 within Frobenius tolerance (trace preservation).
bool is_tp(const ChoiMatrix& c, double tol = 1e-10);

/// Maximal CP parameter interval of a family.
/// depolarising: [-1/(d^2-1), 1]; transpose-depolarising: [-1/(d-1), 1/(d+1)];
/// trace: unbounded (t is ignored).
Interval cp_range(Family family, int d);

/// Positivity of the partial transpose (second factor) of the Choi matrix.
CpReport is_ppt(const ChoiMatrix& c, double tol = 1e-10);

struct SminResult {
    double s_min;                // nats
    RealVector output_spectrum;  // spectrum of the output of any pure input
    int n_cross_checked;         // random pure inputs compared
    double max_entropy_deviation;
};

/// Minimal output entropy. The pure-input output spectrum of both
/// nontrivial families is {t + (1-t)/d} u {(1-t)/d} x (d-1), independent
/// of the input by covariance; with n_cross_check > 0 that independence
/// is sampled and the worst deviation reported.
/// Throws not_cp_error outside the CP range.
SminResult s_min_single(const ChannelSpec& spec, int n_cross_check = 0,
                        std::uint64_t seed = 0);

/// ln d - S_min, in nats (irreducible-output invariant channels).
double holevo_capacity_invariant(const ChannelSpec& spec);

} // namespace covchan

#endif
