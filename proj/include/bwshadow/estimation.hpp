// Copyright 2026 The bwshadow developers

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * @file
 * Pauli expectation estimators from snapshot streams, and the
 * brickwork-vs-local-Clifford comparison analytics.
 */

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "bwshadow/clifford.hpp"
#include "bwshadow/frame_op.hpp"
#include "bwshadow/pauli.hpp"
#include "bwshadow/rng.hpp"
#include "bwshadow/stabilizer.hpp"

namespace bwshadow {

enum class EstimatorKind { mean, median_of_means };

struct EstimationConfig {
    PauliString v;
    Ensemble ensemble = Ensemble::bw_periodic;
    long shots = 1000;  // per run
    int runs = 1;
    EstimatorKind estimator = EstimatorKind::mean;
    int batches = 1;    // median-of-means batches; must divide shots
    std::uint64_t seed = 1;

    EstimationConfig(PauliString pauli, Ensemble e) : v(std::move(pauli)), ensemble(e) {}
};

inline Boundary ensemble_boundary(Ensemble e) {
    return e == Ensemble::bw_open ? Boundary::open : Boundary::periodic;
}

/// Draws the circuit and outcome for one shot; `value` is the raw
/// snapshot <i|U W(v) U^dag|i> before frame rescaling.
inline Snapshot sample_snapshot(const PauliString &v, Ensemble ensemble,
                                std::uint64_t master_seed, std::uint64_t shot_index) {
    Rng rng = Rng::stream(master_seed, shot_index);
    const int n = v.qubits();
    const CliffordElement u = (ensemble == Ensemble::local_clifford)
                                  ? sample_local_layer(n, rng)
                                  : sample_brickwork(n, ensemble_boundary(ensemble), rng);
    Snapshot s;
    s.shot_index = shot_index;
    s.seed = master_seed;
    s.outcome = measure_all(u, rng);
    s.value = v.is_z_type() ? snapshot_value_ztype(u, s.outcome, v)
                            : snapshot_value_general(u, s.outcome, v);
    return s;
}

struct EstimationResult {
    std::vector<double> run_estimates;
    double grand_mean = 0.0;
    double run_std = 0.0;          // deviation of the per-run estimates
    double sample_std = 0.0;       // empirical single-shot deviation of f
    double sample_variance = 0.0;  // empirical Var(f)
    double second_moment = 0.0;    // empirical E[f^2]
    double second_moment_std_err = 0.0;
    double frame_value = 0.0;      // <v|S|v>
    double variance_bound = 0.0;   // 1/<v|S|v>
    long total_shots = 0;
};

/// Runs the full estimation protocol: `runs` independent repetitions of
/// `shots` snapshots each, rescaled by the frame eigenvalue of the chosen
/// ensemble.
inline EstimationResult estimate(const EstimationConfig &cfg) {
    if (cfg.v.is_identity()) {
        throw std::invalid_argument("identity Pauli: expectation is trivially 1");
    }
    if (cfg.shots < 1 || cfg.runs < 1) {
        throw std::invalid_argument("shots and runs must be positive");
    }
    if (cfg.estimator == EstimatorKind::median_of_means &&
        (cfg.batches < 1 || cfg.shots % cfg.batches != 0)) {
        throw std::invalid_argument("median-of-means batches must divide the shot count");
    }
    const FrameEigenvalue eig = frame_eigenvalue(cfg.v, cfg.ensemble, EigenvalueMode::exact);
    const double s = eig.value;

    EstimationResult res;
    res.frame_value = s;
    res.variance_bound = 1.0 / s;
    res.total_shots = static_cast<long>(cfg.runs) * cfg.shots;
    res.run_estimates.reserve(static_cast<std::size_t>(cfg.runs));

    double sum_f = 0.0, sum_f2 = 0.0, sum_f4 = 0.0;
    for (int r = 0; r < cfg.runs; ++r) {
        std::vector<double> batch_means;
        double run_sum = 0.0, batch_sum = 0.0;
        const long batch_len = (cfg.estimator == EstimatorKind::median_of_means)
                                   ? cfg.shots / cfg.batches
                                   : cfg.shots;
        for (long k = 0; k < cfg.shots; ++k) {
            const std::uint64_t index =
                static_cast<std::uint64_t>(r) * static_cast<std::uint64_t>(cfg.shots) +
                static_cast<std::uint64_t>(k);
            const Snapshot snap = sample_snapshot(cfg.v, cfg.ensemble, cfg.seed, index);
            const double f = static_cast<double>(snap.value) / s;
            run_sum += f;
            batch_sum += f;
            sum_f += f;
            sum_f2 += f * f;
            sum_f4 += f * f * f * f;
            if ((k + 1) % batch_len == 0) {
                batch_means.push_back(batch_sum / static_cast<double>(batch_len));
                batch_sum = 0.0;
            }
        }
        double est;
        if (cfg.estimator == EstimatorKind::median_of_means) {
            std::sort(batch_means.begin(), batch_means.end());
            const std::size_t m = batch_means.size();
            est = (m % 2 == 1) ? batch_means[m / 2]
                               : 0.5 * (batch_means[m / 2 - 1] + batch_means[m / 2]);
        } else {
            est = run_sum / static_cast<double>(cfg.shots);
        }
        res.run_estimates.push_back(est);
    }

    const double ntot = static_cast<double>(res.total_shots);
    res.grand_mean = sum_f / ntot;
    res.second_moment = sum_f2 / ntot;
    res.sample_variance = std::max(res.second_moment - res.grand_mean * res.grand_mean, 0.0);
    res.sample_std = std::sqrt(res.sample_variance);
    const double var_f2 = std::max(sum_f4 / ntot - res.second_moment * res.second_moment, 0.0);
    res.second_moment_std_err = std::sqrt(var_f2 / ntot);

    double mean_runs = 0.0;
    for (double e : res.run_estimates) {
        mean_runs += e;
    }
    mean_runs /= static_cast<double>(cfg.runs);
    double var_runs = 0.0;
    for (double e : res.run_estimates) {
        var_runs += (e - mean_runs) * (e - mean_runs);
    }
    res.run_std = cfg.runs > 1 ? std::sqrt(var_runs / static_cast<double>(cfg.runs - 1)) : 0.0;
    return res;
}

struct ComparisonReport {
    double var_bw = 1.0;
    double var_lc = 1.0;
    int threshold_lhs = 0;    // |suppLC(v)|
    double threshold_rhs = 0; // 0.8 |partBW(v)| + 1.4 |v~|
    bool satisfied = false;
    BwPartition partition;
    int brick_weight = 0;     // |v~|
};

/// Threshold criterion and both variances; `satisfied` is decided in
/// integer arithmetic (5 lhs >= 4 #parts + 7 |v~|).
inline ComparisonReport compare(const PauliString &v, Boundary b = Boundary::periodic) {
    ComparisonReport rep;
    const BrickSupport s = brick_support(v, b);
    rep.partition = bw_partition(s);
    rep.brick_weight = s.weight();
    rep.threshold_lhs = lc_support_size(v);
    const int parts = rep.partition.is_full_cycle ? 1 : rep.partition.count();
    rep.threshold_rhs = 0.8 * parts + 1.4 * rep.brick_weight;
    rep.satisfied = 5 * rep.threshold_lhs >= 4 * parts + 7 * rep.brick_weight;
    if (!v.is_identity()) {
        rep.var_bw = variance_bound(v, bw_ensemble(b), b);
        rep.var_lc = variance_bound(v, Ensemble::local_clifford);
    }
    return rep;
}

struct AdvantageEstimate {
    int n = 0;
    long samples = 0;
    double p_hat = 0.0;
    double std_err = 0.0;
};

/// Fraction of uniformly random Pauli strings with varBW <= varLC, decided
/// in exact rational arithmetic. Identity draws count as satisfied.
inline AdvantageEstimate advantage_probability(int n, long samples, std::uint64_t seed) {
    if (samples < 1) {
        throw std::invalid_argument("samples must be positive");
    }
    std::vector<BigRat> s_open_table(static_cast<std::size_t>(n / 2), BigRat(0));
    for (int l = 1; l <= n / 2 - 1; ++l) {
        s_open_table[static_cast<std::size_t>(l)] = s_open_exact(2 * l + 2);
    }
    const BigRat s_per_n = s_per_exact(n);
    // BW advantage depends only on (partition, |suppLC|); memoize on that key
    std::map<std::pair<std::vector<int>, int>, bool> memo;
    Rng rng(seed);
    long hits = 0;
    for (long t = 0; t < samples; ++t) {
        const PauliString v =
            PauliString::from_bits(n, rng.bits(2 * static_cast<std::size_t>(n)));
        const int k = lc_support_size(v);
        const BwPartition part = bw_partition(v, Boundary::periodic);
        std::vector<int> key = part.parts;
        if (part.is_full_cycle) {
            key.assign(1, -1);
        }
        auto [it, fresh] = memo.try_emplace({std::move(key), k}, false);
        if (fresh) {
            // varBW <= varLC  <=>  3^k * <v|S|v> >= 1
            BigRat lhs = pow_int(3, static_cast<unsigned>(k));
            if (part.is_full_cycle) {
                lhs *= s_per_n;
            } else {
                for (int l : part.parts) {
                    lhs *= s_open_table[static_cast<std::size_t>(l)];
                }
            }
            it->second = lhs >= 1;
        }
        hits += it->second ? 1 : 0;
    }
    AdvantageEstimate a;
    a.n = n;
    a.samples = samples;
    a.p_hat = static_cast<double>(hits) / static_cast<double>(samples);
    a.std_err = std::sqrt(std::max(a.p_hat * (1.0 - a.p_hat), 0.0) /
                          static_cast<double>(samples));
    return a;
}

struct ThresholdRow {
    int n = 0;
    int min_supp = 0;        // smallest |suppLC| with varBW <= varLC
    double ratio = 0.0;      // min_supp / n
    int sufficiency = 0;     // ceil(0.68 n + 0.12) + 1
    double analytic = 0.0;   // 0.68 (n + 1) / n
};

/// For fully supported periodic strings, the smallest support count where
/// the brickwork variance wins, per qubit count up to n_max.
inline std::vector<ThresholdRow> threshold_sweep(int n_max) {
    if (n_max < 2 || n_max % 2 != 0) {
        throw std::invalid_argument("n_max must be even and >= 2");
    }
    std::vector<ThresholdRow> rows;
    for (int n = 2; n <= n_max; n += 2) {
        const BigRat s = s_per_exact(n); // varBW = 1/s
        ThresholdRow row;
        row.n = n;
        row.min_supp = -1;
        for (int k = n / 2; k <= n; ++k) {
            if (pow_int(3, static_cast<unsigned>(k)) * s >= 1) {
                row.min_supp = k;
                break;
            }
        }
        if (row.min_supp < 0) {
            throw std::logic_error("no support count satisfies varBW <= varLC");
        }
        row.ratio = static_cast<double>(row.min_supp) / static_cast<double>(n);
        row.sufficiency = static_cast<int>(std::ceil(0.68 * n + 0.12)) + 1;
        row.analytic = 0.68 * (n + 1) / static_cast<double>(n);
        rows.push_back(row);
    }
    return rows;
}

} // namespace bwshadow
