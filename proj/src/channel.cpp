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

#include "covchan/channel.hpp"

#include <cmath>
#include <limits>

#include "covchan/rng.hpp"

namespace covchan {

std::string family_name(Family f) {
    switch (f) {
        case Family::trace: return "trace";
        case Family::depolarising: return "depolarising";
        case Family::transpose_depolarising: return "transpose-depolarising";
    }
    return "?";
}

Matrix apply_channel(const ChannelSpec& spec, const Matrix& a) {
    if (a.rows() != spec.d || a.cols() != spec.d)
        throw std::invalid_argument("apply: input is " + std::to_string(a.rows()) + "x" +
                                    std::to_string(a.cols()) + ", channel acts on d=" +
                                    std::to_string(spec.d));
    const Matrix mixed = (a.trace() / static_cast<double>(spec.d)) * identity(spec.d);
    switch (spec.family) {
        case Family::trace:
            return mixed;
        case Family::depolarising:
            return spec.t * a + (1.0 - spec.t) * mixed;
        case Family::transpose_depolarising:
            return spec.t * a.transpose() + (1.0 - spec.t) * mixed;
    }
    return mixed;
}

ChoiMatrix choi(const ChannelSpec& spec) {
    const int d = spec.d;
    const double t = spec.effective_t();
    Matrix c;
    switch (spec.family) {
        case Family::trace:
            c = identity(d * d) / d;
            break;
        case Family::depolarising:
            c = t * d * max_entangled_projector(d) + ((1.0 - t) / d) * identity(d * d);
            break;
        case Family::transpose_depolarising:
            c = t * swap_operator(d) + ((1.0 - t) / d) * identity(d * d);
            break;
    }
    return {std::move(c), d};
}

Matrix apply_from_choi(const ChoiMatrix& c, const Matrix& a) {
    if (a.rows() != c.d || a.cols() != c.d)
        throw std::invalid_argument("apply_from_choi: dimension mismatch");
    const Matrix lifted = kron(a.transpose(), identity(c.d)) * c.m;
    return partial_trace(lifted, c.d, c.d, Subsystem::first);
}

CpReport is_cp(const ChoiMatrix& c, double tol) {
    const RealVector spec = hermitian_spectrum(c.m);
    const double min_eig = spec[spec.size() - 1];
    return {min_eig >= -tol, min_eig};
}

bool is_tp(const ChoiMatrix& c, double tol) {
    const Matrix reduced = partial_trace(c.m, c.d, c.d, Subsystem::second);
    return (reduced - identity(c.d)).norm() <= tol;
}

Interval cp_range(Family family, int d) {
    switch (family) {
        case Family::depolarising:
            return {-1.0 / (static_cast<double>(d) * d - 1.0), 1.0};
        case Family::transpose_depolarising:
            return {-1.0 / (d - 1.0), 1.0 / (d + 1.0)};
        case Family::trace:
            return {-std::numeric_limits<double>::infinity(),
                    std::numeric_limits<double>::infinity()};
    }
    return {0.0, 0.0};
}

CpReport is_ppt(const ChoiMatrix& c, double tol) {
    const Matrix pt = partial_transpose(c.m, c.d, c.d, Subsystem::second);
    const RealVector spec = hermitian_spectrum(pt);
    const double min_eig = spec[spec.size() - 1];
    return {min_eig >= -tol, min_eig};
}

SminResult s_min_single(const ChannelSpec& spec, int n_cross_check, std::uint64_t seed) {
    if (!cp_range(spec.family, spec.d).contains(spec.t) && spec.family != Family::trace)
        throw not_cp_error("s_min_single: " + family_name(spec.family) + " channel with t=" +
                           std::to_string(spec.t) + " is not completely positive");
    const int d = spec.d;
    const double t = spec.effective_t();
    RealVector out(d);
    out[0] = t + (1.0 - t) / d;
    for (int i = 1; i < d; ++i)
        out[i] = (1.0 - t) / d;
    out = sorted_descending(out);

    SminResult res;
    res.output_spectrum = out;
    res.s_min = von_neumann_entropy(out);
    res.n_cross_checked = n_cross_check;
    res.max_entropy_deviation = 0.0;
    if (n_cross_check > 0) {
        Rng rng = derive_rng(seed, 0x5f1d);
        for (int k = 0; k < n_cross_check; ++k) {
            const CVector psi = haar_state(d, rng);
            const Matrix rho_out = apply_channel(spec, psi * psi.adjoint());
            const double s = von_neumann_entropy(hermitian_spectrum(rho_out));
            res.max_entropy_deviation = std::max(res.max_entropy_deviation,
                                                 std::abs(s - res.s_min));
        }
    }
    return res;
}

double holevo_capacity_invariant(const ChannelSpec& spec) {
    return std::log(static_cast<double>(spec.d)) - s_min_single(spec).s_min;
}

} // namespace covchan
