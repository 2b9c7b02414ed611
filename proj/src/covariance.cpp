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

#include "covchan/covariance.hpp"

#include <algorithm>

namespace covchan {

ProjectorSet invariant_projectors(RepCase rep, int d) {
    ProjectorSet set;
    set.rep = rep;
    set.d = d;
    if (rep == RepCase::identical) {
        const Matrix p = max_entangled_projector(d);
        set.projectors = {p, identity(d * d) - p};
        set.ranks = {1, d * d - 1};
    } else {
        const Matrix f = swap_operator(d);
        set.projectors = {(identity(d * d) + f) / 2.0, (identity(d * d) - f) / 2.0};
        set.ranks = {d * (d + 1) / 2, d * (d - 1) / 2};
    }
    return set;
}

double verify_invariance(const ChoiMatrix& c, RepCase rep, int n_samples, Rng& rng) {
    double worst = 0.0;
    for (int k = 0; k < n_samples; ++k) {
        const Matrix u = haar_unitary(c.d, rng);
        const Matrix u_bar = u.conjugate();
        const Matrix k_u = rep == RepCase::identical ? kron(u_bar, u) : kron(u_bar, u_bar);
        worst = std::max(worst, (c.m * k_u - k_u * c.m).norm());
    }
    return worst;
}

ChoiDecomposition choi_projector_decomposition(const ChoiMatrix& c, RepCase rep) {
    const ProjectorSet set = invariant_projectors(rep, c.d);
    ChoiDecomposition dec;
    Matrix reconstructed = Matrix::Zero(c.m.rows(), c.m.cols());
    for (std::size_t k = 0; k < set.projectors.size(); ++k) {
        const std::complex<double> ck = (c.m * set.projectors[k]).trace() /
                                        static_cast<double>(set.ranks[k]);
        dec.coefficients.push_back(ck);
        reconstructed += ck * set.projectors[k];
    }
    dec.residual = (c.m - reconstructed).norm();
    return dec;
}

std::vector<ChannelSpec> extreme_channels(RepCase rep, int d) {
    if (rep == RepCase::identical)
        return {{Family::depolarising, d, 1.0},
                {Family::depolarising, d, -1.0 / (static_cast<double>(d) * d - 1.0)}};
    return {{Family::transpose_depolarising, d, 1.0 / (d + 1.0)},
            {Family::transpose_depolarising, d, -1.0 / (d - 1.0)}};
}

double d2_family_equivalence(double t) {
    Matrix y(2, 2);
    y << 0.0, 1.0, -1.0, 0.0;
    const Matrix conjugator = kron(identity(2), y);
    const Matrix lhs = conjugator *
                       choi({Family::transpose_depolarising, 2, t}).m *
                       conjugator.adjoint();
    const Matrix rhs = choi({Family::depolarising, 2, -t}).m;
    return (lhs - rhs).norm();
}

} // namespace covchan
