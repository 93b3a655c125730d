// Copyright 2026 The qdspin Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QDSPIN_ANALYSIS_H
#define QDSPIN_ANALYSIS_H

#include <cstddef>
#include <cstdint>
#include <vector>

#include "qdspin/protocols.h"

namespace qdspin {

inline constexpr size_t kDefaultSamples = 2000;
inline constexpr uint64_t kDefaultSeed = 42;

/// kHeralded scores each sample by sum_o P(o | detected) * F_o. kLossInclusive
/// scores it by sum_o P(o) * F_o, so undetected photons count as failures.
enum class FidelityMode { kHeralded, kLossInclusive };

struct FidelityEstimate {
    double mean;
    double std_error;
    double efficiency;
};

/// Average gate fidelity over Haar-random product inputs.
///
/// Each sample draws spin 1 then spin 2 from a generator seeded with `seed`,
/// runs the protocol, and scores it per `mode`, with F_o the fidelity between
/// the corrected branch state and the ideal gate output.
/// Efficiency is the mean detection probability. The standard error is the
/// sample standard deviation over sqrt(n_samples), and 0 for a single sample.
FidelityEstimate average_fidelity(Protocol p, const Hardware &hw, size_t n_samples, uint64_t seed,
                                  FidelityMode mode = FidelityMode::kHeralded);
FidelityEstimate average_fidelity(Protocol p, const CavityParams &params, size_t n_samples, uint64_t seed,
                                  FidelityMode mode = FidelityMode::kHeralded);

/// Generator used for the Haar draws of `average_fidelity`.
std::mt19937_64 make_rng(uint64_t seed);

/// Sub-seed for one grid point; depends only on (seed, index).
uint64_t derive_seed(uint64_t seed, uint64_t index);

struct SweepGrid {
    std::vector<double> g;
    std::vector<double> kappa_s;
    std::vector<double> gamma;
    std::vector<double> detuning;

    size_t size() const { return g.size() * kappa_s.size() * gamma.size() * detuning.size(); }
    /// Parameters of grid point `index`; g varies fastest, then detuning, gamma, kappa_s.
    CavityParams point(size_t index) const;
};

/// `steps` evenly spaced values from lo to hi inclusive; {lo} when steps == 1.
std::vector<double> linspace(double lo, double hi, size_t steps);

struct SweepRecord {
    Protocol protocol;
    double g_over_kappa;
    double kappa_s_over_kappa;
    double gamma_over_kappa;
    double detuning_over_kappa;
    double mean_fidelity;
    double std_error;
    double efficiency;
    size_t n_samples;
    uint64_t seed;
};

/// Worker count from QDSPIN_WORKERS if set, else the machine's hardware concurrency.
unsigned default_workers();

/// Evaluates every grid point, one record per point in grid order. Each point
/// uses derive_seed(seed, index), so output does not depend on `workers`.
/// Throws std::invalid_argument for an empty grid or n_samples == 0.
std::vector<SweepRecord> sweep(Protocol p, const SweepGrid &grid, size_t n_samples, uint64_t seed,
                               unsigned workers = 0);

}  // namespace qdspin

#endif  // QDSPIN_ANALYSIS_H
