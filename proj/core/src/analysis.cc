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

#include "qdspin/analysis.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>

namespace qdspin {

namespace {

double sample_fidelity(const ProtocolRun &run, FidelityMode mode) {
    double f = 0;
    for (const auto &o : run.outcomes) {
        double weight = mode == FidelityMode::kHeralded ? o.conditioned_probability : o.raw_probability;
        f += weight * fidelity(o.corrected, o.reference);
    }
    return f;
}

}  // namespace

std::mt19937_64 make_rng(uint64_t seed) {
    std::seed_seq seq{static_cast<uint32_t>(seed), static_cast<uint32_t>(seed >> 32)};
    return std::mt19937_64(seq);
}

uint64_t derive_seed(uint64_t seed, uint64_t index) {
    std::seed_seq seq{static_cast<uint32_t>(seed), static_cast<uint32_t>(seed >> 32), static_cast<uint32_t>(index),
                      static_cast<uint32_t>(index >> 32)};
    uint32_t out[2];
    seq.generate(out, out + 2);
    return (static_cast<uint64_t>(out[0]) << 32) | out[1];
}

FidelityEstimate average_fidelity(Protocol p, const Hardware &hw, size_t n_samples, uint64_t seed,
                                  FidelityMode mode) {
    if (n_samples == 0) {
        throw std::invalid_argument("n_samples must be at least 1");
    }
    auto rng = make_rng(seed);
    double sum = 0, sum_sq = 0, eff = 0;
    for (size_t i = 0; i < n_samples; i++) {
        Spinor s1 = haar_random_spin(rng);
        Spinor s2 = haar_random_spin(rng);
        auto run = run_protocol(p, s1, s2, hw, false);
        double f = sample_fidelity(run, mode);
        sum += f;
        sum_sq += f * f;
        eff += run.efficiency;
    }
    const double n = static_cast<double>(n_samples);
    const double mean = sum / n;
    double std_error = 0;
    if (n_samples > 1) {
        double var = std::max(0.0, (sum_sq - n * mean * mean) / (n - 1));
        std_error = std::sqrt(var / n);
    }
    return {std::clamp(mean, 0.0, 1.0), std_error, std::clamp(eff / n, 0.0, 1.0)};
}

FidelityEstimate average_fidelity(Protocol p, const CavityParams &params, size_t n_samples, uint64_t seed,
                                  FidelityMode mode) {
    return average_fidelity(p, Hardware::from(params), n_samples, seed, mode);
}

CavityParams SweepGrid::point(size_t index) const {
    if (index >= size()) {
        throw std::out_of_range("grid index out of range");
    }
    CavityParams p;
    p.g = g[index % g.size()];
    index /= g.size();
    p.probe_detuning = detuning[index % detuning.size()];
    index /= detuning.size();
    p.gamma = gamma[index % gamma.size()];
    index /= gamma.size();
    p.kappa_s = kappa_s[index];
    return p;
}

std::vector<double> linspace(double lo, double hi, size_t steps) {
    std::vector<double> out;
    if (steps == 1) {
        out.push_back(lo);
        return out;
    }
    out.reserve(steps);
    for (size_t i = 0; i < steps; i++) {
        out.push_back(lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(steps - 1));
    }
    return out;
}

unsigned default_workers() {
    unsigned n = std::max(1u, std::thread::hardware_concurrency());
    if (const char *env = std::getenv("QDSPIN_WORKERS")) {
        char *end = nullptr;
        long cap = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && cap > 0) {
            n = std::min(n, static_cast<unsigned>(cap));
        }
    }
    return n;
}

std::vector<SweepRecord> sweep(Protocol p, const SweepGrid &grid, size_t n_samples, uint64_t seed,
                               unsigned workers) {
    if (grid.size() == 0) {
        throw std::invalid_argument("sweep grid is empty");
    }
    if (n_samples == 0) {
        throw std::invalid_argument("n_samples must be at least 1");
    }
    for (size_t i = 0; i < grid.size(); i++) {
        grid.point(i).validate();
    }

    std::vector<SweepRecord> records(grid.size());
    auto evaluate = [&](size_t i) {
        CavityParams params = grid.point(i);
        auto est = average_fidelity(p, params, n_samples, derive_seed(seed, i));
        records[i] = {p,        params.g,      params.kappa_s,  params.gamma, params.probe_detuning,
                      est.mean, est.std_error, est.efficiency, n_samples,    seed};
    };

    if (workers == 0) {
        workers = default_workers();
    }
    workers = std::min<unsigned>(workers, static_cast<unsigned>(grid.size()));
    if (workers <= 1) {
        for (size_t i = 0; i < grid.size(); i++) {
            evaluate(i);
        }
        return records;
    }

    std::atomic<size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mu;
    {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; w++) {
            pool.emplace_back([&] {
                for (size_t i = next++; i < grid.size(); i = next++) {
                    try {
                        evaluate(i);
                    } catch (...) {
                        std::lock_guard lock(failure_mu);
                        if (!failure) {
                            failure = std::current_exception();
                        }
                    }
                }
            });
        }
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
    return records;
}

}  // namespace qdspin
