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

#include "covchan/additivity.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>

#include "covchan/rng.hpp"

namespace covchan {

std::string to_string(Certificate c) {
    switch (c) {
        case Certificate::ppt_entanglement_breaking: return "ppt-entanglement-breaking";
        case Certificate::nsd_criterion: return "nsd-criterion";
        case Certificate::numerical_only: return "numerical-only";
    }
    return "?";
}

std::string to_string(Verdict v) {
    return v == Verdict::additive_within_tol ? "additive-within-tol" : "violation-candidate";
}

std::string to_string(Region r) {
    switch (r) {
        case Region::ppt: return "ppt";
        case Region::ppt_boundary: return "ppt-boundary";
        case Region::nsd: return "nsd";
        case Region::nsd_boundary: return "nsd-boundary";
        case Region::missing: return "missing";
        case Region::not_cp: return "not-cp";
    }
    return "?";
}

Certificate classify_certificate(int d, double t, double eps) {
    const double r1_lo = -1.0 / (static_cast<double>(d) * d - 1.0);
    const double r1_hi = 1.0 / (d + 1.0);
    if (t >= r1_lo - eps && t <= r1_hi + eps)
        return Certificate::ppt_entanglement_breaking;
    if (t >= nsd_threshold(d) - eps && t < r1_lo)
        return Certificate::nsd_criterion;
    return Certificate::numerical_only;
}

Region classify_region(int d, double t, double eps) {
    if (!cp_range(Family::transpose_depolarising, d).contains(t, eps))
        return Region::not_cp;
    const double r1_lo = -1.0 / (static_cast<double>(d) * d - 1.0);
    const double r1_hi = 1.0 / (d + 1.0);
    if (std::abs(t - r1_lo) <= eps || std::abs(t - r1_hi) <= eps)
        return Region::ppt_boundary;
    if (t > r1_lo && t < r1_hi)
        return Region::ppt;
    if (std::abs(t - nsd_threshold(d)) <= eps)
        return Region::nsd_boundary;
    if (t > nsd_threshold(d))
        return Region::nsd;
    return Region::missing;
}

namespace {

RealVector softmax(const RealVector& z) {
    const double zmax = z.maxCoeff();
    RealVector lambda = (z.array() - zmax).exp();
    return lambda / lambda.sum();
}

// z with softmax(z) ~ lambda; zero weights clamp to exp(-34)
RealVector softmax_coords(const RealVector& lambda) {
    RealVector z(lambda.size());
    for (Eigen::Index i = 0; i < lambda.size(); ++i)
        z[i] = std::log(std::max(lambda[i], 1.7e-15));
    return z;
}

struct Candidate {
    RealVector lambda;
    double value;
};

// Nelder-Mead on f(softmax(z)); returns the best vertex reached.
Candidate nelder_mead(const std::function<double(const RealVector&)>& f,
                      const RealVector& z0, int max_iter, double diam_tol) {
    const int n = static_cast<int>(z0.size());
    std::vector<RealVector> zs(n + 1, z0);
    std::vector<double> fs(n + 1);
    for (int i = 1; i <= n; ++i)
        zs[i][i - 1] += 0.5;
    for (int i = 0; i <= n; ++i)
        fs[i] = f(softmax(zs[i]));

    std::vector<int> order(n + 1);
    for (int it = 0; it < max_iter; ++it) {
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(),
                         [&](int a, int b) { return fs[a] < fs[b]; });
        const int best = order[0], worst = order[n], second_worst = order[n - 1];

        double diameter = 0.0;
        for (int i = 0; i <= n; ++i)
            diameter = std::max(diameter, (zs[i] - zs[best]).lpNorm<Eigen::Infinity>());
        if (diameter < diam_tol)
            break;

        RealVector centroid = RealVector::Zero(n);
        for (int i = 0; i <= n; ++i)
            if (i != worst)
                centroid += zs[i];
        centroid /= n;

        const RealVector reflected = centroid + (centroid - zs[worst]);
        const double fr = f(softmax(reflected));
        if (fr < fs[best]) {
            const RealVector expanded = centroid + 2.0 * (centroid - zs[worst]);
            const double fe = f(softmax(expanded));
            if (fe < fr) {
                zs[worst] = expanded;
                fs[worst] = fe;
            } else {
                zs[worst] = reflected;
                fs[worst] = fr;
            }
        } else if (fr < fs[second_worst]) {
            zs[worst] = reflected;
            fs[worst] = fr;
        } else {
            const RealVector contracted = centroid + 0.5 * (zs[worst] - centroid);
            const double fc = f(softmax(contracted));
            if (fc < fs[worst]) {
                zs[worst] = contracted;
                fs[worst] = fc;
            } else {
                for (int i = 0; i <= n; ++i) {
                    if (i == best)
                        continue;
                    zs[i] = zs[best] + 0.5 * (zs[i] - zs[best]);
                    fs[i] = f(softmax(zs[i]));
                }
            }
        }
    }
    int best = 0;
    for (int i = 1; i <= n; ++i)
        if (fs[i] < fs[best])
            best = i;
    return {softmax(zs[best]), fs[best]};
}

} // namespace

MinimizeResult minimize_over_simplex(double t, int d, int n_starts, std::uint64_t seed) {
    if (!cp_range(Family::transpose_depolarising, d).contains(t))
        throw not_cp_error("minimize_over_simplex: t=" + std::to_string(t) +
                           " outside the CP range for d=" + std::to_string(d));
    const auto objective = [&](const RealVector& lambda) {
        return entropy_split(t, d, lambda).total;
    };

    std::vector<RealVector> starts;
    for (int i = 0; i < d; ++i) { // vertices
        RealVector v = RealVector::Zero(d);
        v[i] = 1.0;
        starts.push_back(v);
    }
    starts.push_back(RealVector::Constant(d, 1.0 / d)); // uniform
    for (int i = 0; i < d; ++i)                         // edge midpoints
        for (int j = i + 1; j < d; ++j) {
            RealVector v = RealVector::Zero(d);
            v[i] = v[j] = 0.5;
            starts.push_back(v);
        }
    const int n_random = std::max(0, n_starts - static_cast<int>(starts.size()));
    for (int k = 0; k < n_random; ++k) {
        Rng rng = derive_rng(seed, static_cast<std::uint64_t>(k));
        starts.push_back(random_simplex(d, rng));
    }

    MinimizeResult result;
    result.n_starts = static_cast<int>(starts.size());
    result.value = std::numeric_limits<double>::infinity();
    for (const RealVector& start : starts) {
        const double f0 = objective(start); // exact-start evaluation
        if (f0 < result.value) {
            result.value = f0;
            result.best_lambda = start;
        }
        Candidate cand = nelder_mead(objective, softmax_coords(start), 2000, 1e-10);
        const int imax = static_cast<int>(std::distance(
            cand.lambda.data(),
            std::max_element(cand.lambda.data(), cand.lambda.data() + cand.lambda.size())));
        if (cand.lambda[imax] > 1.0 - 1e-9) { // snap to the vertex
            RealVector vertex = RealVector::Zero(d);
            vertex[imax] = 1.0;
            const double fv = objective(vertex);
            if (fv <= cand.value) {
                cand.lambda = vertex;
                cand.value = fv;
            }
        }
        if (cand.value < result.value) {
            result.value = cand.value;
            result.best_lambda = cand.lambda;
        }
    }
    return result;
}

AdditivityReport additivity_report(double t, int d, const AdditivityOptions& opts) {
    AdditivityReport rep;
    rep.d = d;
    rep.t = t;
    rep.seed = opts.seed;
    rep.s_min_single = s_min_single({Family::transpose_depolarising, d, t}).s_min;
    MinimizeResult min = minimize_over_simplex(t, d, opts.n_starts, opts.seed);
    rep.best_lambda = min.best_lambda;
    rep.s_min_product = min.value;
    rep.gap = min.value - 2.0 * rep.s_min_single;
    rep.n_starts = min.n_starts;
    rep.verdict = std::abs(rep.gap) <= opts.tol ? Verdict::additive_within_tol
                                                : Verdict::violation_candidate;
    rep.certificate = classify_certificate(d, t);
    return rep;
}

std::pair<RealVector, RealVector> mixed_pair(int d, Rng& rng) {
    const RealVector lambda = random_simplex(d, rng);
    RealVector mixed = lambda;
    const int n_transforms = 1 + static_cast<int>(uniform_index(rng, 3 * d));
    for (int k = 0; k < n_transforms; ++k) {
        const int i = static_cast<int>(uniform_index(rng, d));
        int j = static_cast<int>(uniform_index(rng, d - 1));
        if (j >= i)
            ++j;
        const double s = uniform_unit(rng);
        const double xi = mixed[i], xj = mixed[j];
        mixed[i] = (1.0 - s) * xi + s * xj;
        mixed[j] = s * xi + (1.0 - s) * xj;
    }
    return {lambda, mixed};
}

MMVerdict mm_test(double t, int d, int n_pairs, std::uint64_t seed, double tol) {
    if (!cp_range(Family::transpose_depolarising, d).contains(t))
        throw not_cp_error("mm_test: t=" + std::to_string(t) +
                           " outside the CP range for d=" + std::to_string(d));
    MMVerdict verdict;
    verdict.d = d;
    verdict.t = t;
    verdict.n_pairs = n_pairs;
    verdict.seed = seed;
    Rng rng = derive_rng(seed, 0x6d6d); // "mm"
    for (int pair = 0; pair < n_pairs; ++pair) {
        const auto [lambda, mixed] = mixed_pair(d, rng);
        const RealVector spec_mixed = product_spectrum(t, d, mixed);
        const RealVector spec_base = product_spectrum(t, d, lambda);
        double prefix_mixed = 0.0, prefix_base = 0.0;
        int fail_index = -1;
        double excess = 0.0;
        for (Eigen::Index k = 0; k < spec_mixed.size(); ++k) {
            prefix_mixed += spec_mixed[k];
            prefix_base += spec_base[k];
            if (prefix_mixed > prefix_base + tol && fail_index < 0) {
                fail_index = static_cast<int>(k);
            }
            excess = std::max(excess, prefix_mixed - prefix_base);
        }
        if (fail_index >= 0)
            verdict.counterexamples.push_back({lambda, mixed, fail_index, excess});
    }
    verdict.pass = verdict.counterexamples.empty();
    return verdict;
}

double pure_state_scan(double t, int d, int n, std::uint64_t seed) {
    if (!cp_range(Family::transpose_depolarising, d).contains(t))
        throw not_cp_error("pure_state_scan: t=" + std::to_string(t) +
                           " outside the CP range for d=" + std::to_string(d));
    if (n <= 0)
        return std::numeric_limits<double>::infinity();
    const ChannelSpec spec{Family::transpose_depolarising, d, t};
    Rng rng = derive_rng(seed, 0x7073); // "ps"
    double min_entropy = std::numeric_limits<double>::infinity();
    for (int k = 0; k < n; ++k) {
        const CVector psi = haar_state(d * d, rng);
        const Matrix out = apply_pair(spec, spec, psi * psi.adjoint());
        min_entropy = std::min(min_entropy,
                               von_neumann_entropy(hermitian_spectrum(out)));
    }
    return min_entropy;
}

std::vector<ThresholdRow> threshold_scan(int d, const std::vector<double>& t_grid,
                                         const ScanOptions& opts) {
    std::vector<ThresholdRow> rows;
    rows.reserve(t_grid.size());
    for (std::size_t idx = 0; idx < t_grid.size(); ++idx) {
        const double t = t_grid[idx];
        ThresholdRow row;
        row.d = d;
        row.t = t;
        row.region = classify_region(d, t);
        row.cp = row.region != Region::not_cp;
        const ChoiMatrix c = choi({Family::transpose_depolarising, d, t});
        row.cp_min_eig = is_cp(c).min_eigenvalue;
        row.ppt_min_eig = is_ppt(c).min_eigenvalue;
        Rng rng = derive_rng(opts.seed, idx);
        double worst = -std::numeric_limits<double>::infinity();
        for (int k = 0; k < opts.n_lambda; ++k) {
            const RealVector lambda = random_simplex(d, rng);
            worst = std::max(worst, nsd_criterion(t, d, lambda).max_shifted_eigenvalue);
        }
        row.nsd_max_shifted = worst;
        if (row.cp) {
            const MinimizeResult min =
                minimize_over_simplex(t, d, opts.n_starts, opts.seed + idx);
            const double s_single =
                s_min_single({Family::transpose_depolarising, d, t}).s_min;
            row.gap = min.value - 2.0 * s_single;
        } else {
            row.gap = std::numeric_limits<double>::quiet_NaN();
        }
        rows.push_back(row);
    }
    return rows;
}

} // namespace covchan
