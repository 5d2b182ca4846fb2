// Copyright 2026 The kinkprobe Authors
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

#ifndef KINKPROBE_PROBE_H
#define KINKPROBE_PROBE_H

#include <array>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "kinkprobe/probe_record.h"
#include "kinkprobe/reconstruct.h"
#include "kinkprobe/spin_model.h"

namespace kinkprobe {

using Rng = std::mt19937_64;

/// t_j = theta_j / (2 eps (1 + eta_known)). With eta_known equal to the true
/// gate error, the effective phases land exactly on the theta grid.
std::vector<double> probe_time_grid(const ThetaGrid &grid, double epsilon, double eta_known = 0.0);

/// `points` equally spaced times on [0, t_max] (both ends included).
std::vector<double> linear_time_grid(double t_max, int points);

/// Noise-free coherence: sx + i sy = F(2 eps' t) evaluated by CharacteristicFunction.
ProbeRecord simulate_probe_exact(const ModelParams &model, const ObservableSpec &obs, double epsilon,
                                 const std::vector<double> &time_grid, const GateErrorModel &gate_error = {});

/// Draws configurations from the canonical distribution.
///
/// Ring: exact sequential sampling. sigma_1 comes from the diagonal of T^N,
/// then each sigma_{k+1} from T(sigma_k, s) [T^{N-k}](s, sigma_1), using
/// max-normalized matrix powers.
///
/// Long range: single-spin-flip Metropolis from a uniform random start,
/// 100 N sweeps of burn-in before the first sample and N sweeps between
/// samples. A sweep is N attempts, each proposing one of N flips or no move.
class GibbsSampler {
   public:
    explicit GibbsSampler(const ModelParams &model);

    SpinConfig sample(Rng &rng);
    /// Same as sample(), reusing the caller's buffer.
    void sample_into(std::vector<int> &spins, Rng &rng);

    SamplerInfo info() const;

   private:
    void sample_ring(std::vector<int> &spins, Rng &rng) const;
    void metropolis_sweeps(std::int64_t sweeps, Rng &rng);

    ModelParams model_;
    // Ring: P(sigma_1 = +1), and P(sigma_{k+1} = +1 | sigma_k, sigma_1) indexed
    // [k][2 * (sigma_k < 0) + (sigma_1 < 0)] for k = 1..N-1.
    double first_up_ = 0.5;
    std::vector<std::array<double, 4>> next_up_;
    // Long range chain state.
    std::vector<int> chain_;
    long long chain_magnetization_ = 0;
    bool burned_in_ = false;
};

SpinConfig gibbs_sample(const ModelParams &model, Rng &rng);

/// Relative phase between |down> and |up> accumulated by the gate sequence
/// for one classical configuration: a global rotation carrying a, then one
/// controlled rotation of +-2 eps' t b per term, signed by the spin product.
double circuit_phase(const SpinConfig &config, const ObservableSpec &obs, double epsilon, double t,
                     const GateErrorModel &gate_error = {});

/// Universal-gate count of the circuit: 3 per term (two CNOTs and one
/// rotation) plus one for a nonzero global rotation.
int circuit_gate_count(const ObservableSpec &obs);

/// Shot-sampled probe readout.
///
/// At each time point, `shots` fresh Gibbs configurations feed a +-1 readout
/// of sx with p(+1) = (1 + cos phase) / 2, and an independent pool of `shots`
/// feeds sy with p(+1) = (1 + sin phase) / 2. Time point i uses its own
/// generator seeded from (seed, i), so records are reproducible for any
/// worker count.
ProbeRecord simulate_probe_shots(const ModelParams &model, const ObservableSpec &obs, double epsilon,
                                 const std::vector<double> &time_grid, std::int64_t shots,
                                 const GateErrorModel &gate_error, std::uint64_t seed);

}  // namespace kinkprobe

#endif
