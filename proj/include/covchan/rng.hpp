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

#ifndef COVCHAN_RNG_HPP
#define COVCHAN_RNG_HPP

#include <cstdint>
#include <random>

#include "covchan/linalg.hpp"

namespace covchan {

// mt19937_64 plus hand-rolled transforms so that a seed yields the same
// stream on every platform (std distributions are implementation-defined).
using Rng = std::mt19937_64;

Rng seeded_rng(std::uint64_t seed);

/// Independent substream for branch `stream` of a run seeded with `seed`.
Rng derive_rng(std::uint64_t seed, std::uint64_t stream);

double uniform_unit(Rng& rng);              // [0, 1)
std::uint64_t uniform_index(Rng& rng, std::uint64_t n); // {0, ..., n-1}
double standard_normal(Rng& rng);
Complex standard_complex_normal(Rng& rng);  // variance 1 (1/2 per component)

/// Haar-distributed element of SU(d): Gaussian matrix, QR, phase-fix the
/// R diagonal, divide by det^{1/d}.
Matrix haar_unitary(int d, Rng& rng);

/// Haar-random unit vector in C^d.
CVector haar_state(int d, Rng& rng);

/// Flat Dirichlet(1,...,1) sample via normalized exponentials.
RealVector random_simplex(int d, Rng& rng);

} // namespace covchan

#endif
