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

#include "covchan/rng.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace covchan {

namespace {

std::uint64_t splitmix64(std::uint64_t& x) {
    x += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = x;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

} // namespace

Rng seeded_rng(std::uint64_t seed) { return Rng(seed); }

Rng derive_rng(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t x = seed ^ (0xa0761d6478bd642fULL + stream * 0xe7037ed1a0b428dbULL);
    splitmix64(x);
    return Rng(splitmix64(x));
}

double uniform_unit(Rng& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::uint64_t uniform_index(Rng& rng, std::uint64_t n) {
    // rejection keeps the draw exactly uniform
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % n;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % n;
}

double standard_normal(Rng& rng) {
    // Box-Muller, cosine branch only; u1 shifted into (0, 1]
    const double u1 = 1.0 - uniform_unit(rng);
    const double u2 = uniform_unit(rng);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

Complex standard_complex_normal(Rng& rng) {
    const double u1 = 1.0 - uniform_unit(rng);
    const double u2 = uniform_unit(rng);
    const double r = std::sqrt(-std::log(u1));
    return {r * std::cos(2.0 * std::numbers::pi * u2),
            r * std::sin(2.0 * std::numbers::pi * u2)};
}

Matrix haar_unitary(int d, Rng& rng) {
    if (d < 2)
        throw std::invalid_argument("haar_unitary: d must be >= 2");
    Matrix g(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            g(i, j) = standard_complex_normal(rng);
    Eigen::HouseholderQR<Matrix> qr(g);
    Matrix q = qr.householderQ();
    const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int j = 0; j < d; ++j)
        q.col(j) *= r(j, j) / std::abs(r(j, j));
    const Complex det = q.determinant();
    q /= std::pow(det, 1.0 / d);
    return q;
}

CVector haar_state(int d, Rng& rng) {
    CVector psi(d);
    for (int i = 0; i < d; ++i)
        psi[i] = standard_complex_normal(rng);
    return psi / psi.norm();
}

RealVector random_simplex(int d, Rng& rng) {
    if (d < 1)
        throw std::invalid_argument("random_simplex: d must be >= 1");
    RealVector w(d);
    double sum = 0.0;
    for (int i = 0; i < d; ++i) {
        w[i] = -std::log(1.0 - uniform_unit(rng));
        sum += w[i];
    }
    w /= sum;
    // absorb the normalization rounding residual into the largest weight
    Eigen::Index imax;
    w.maxCoeff(&imax);
    w[imax] += 1.0 - w.sum();
    return w;
}

} // namespace covchan
