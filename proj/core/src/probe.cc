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

#include "kinkprobe/probe.h"

#include <cmath>

#include "kinkprobe/errors.h"
#include "kinkprobe/parallel.h"

namespace kinkprobe {

namespace {

long long net_rotations(std::span<const int> spins, const ObservableSpec &obs) {
    long long net = 0;
    for (const auto &term : obs.terms) {
        int product = 1;
        for (int idx : term) {
            product *= spins[static_cast<std::size_t>(idx)];
        }
        net += product;
    }
    return net;
}

void check_probe_inputs(const ModelParams &model, const ObservableSpec &obs, double epsilon,
                        const GateErrorModel &gate_error) {
    model.validate(/*allow_zero_beta=*/true);
    obs.validate_for(model.n);
    gate_error.validate();
    if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
        throw InputError("probe coupling eps must be finite and > 0");
    }
}

ProbeRecord empty_record(const ModelParams &model, const ObservableSpec &obs, double epsilon,
                         const std::vector<double> &time_grid, const GateErrorModel &gate_error) {
    ProbeRecord rec;
    rec.epsilon = epsilon;
    rec.time_grid = time_grid;
    rec.sx.assign(time_grid.size(), 0.0);
    rec.sy.assign(time_grid.size(), 0.0);
    rec.eta = gate_error.eta;
    rec.model = model;
    rec.observable = obs;
    return rec;
}

}  // namespace

std::vector<double> probe_time_grid(const ThetaGrid &grid, double epsilon, double eta_known) {
    if (!(epsilon > 0.0)) {
        throw InputError("probe coupling eps must be > 0");
    }
    GateErrorModel{eta_known}.validate();
    std::vector<double> t(grid.theta.size());
    for (std::size_t j = 0; j < t.size(); ++j) {
        t[j] = grid.theta[j] / (2.0 * epsilon * (1.0 + eta_known));
    }
    return t;
}

std::vector<double> linear_time_grid(double t_max, int points) {
    if (points < 2 || !(t_max > 0.0)) {
        throw InputError("linear time grid needs t_max > 0 and at least 2 points");
    }
    std::vector<double> t(static_cast<std::size_t>(points));
    for (int i = 0; i < points; ++i) {
        t[static_cast<std::size_t>(i)] = t_max * i / (points - 1);
    }
    return t;
}

ProbeRecord simulate_probe_exact(const ModelParams &model, const ObservableSpec &obs, double epsilon,
                                 const std::vector<double> &time_grid, const GateErrorModel &gate_error) {
    check_probe_inputs(model, obs, epsilon, gate_error);
    ProbeRecord rec = empty_record(model, obs, epsilon, time_grid, gate_error);
    rec.sampler = SamplerInfo{"none", 0, 0};
    const CharacteristicFunction f(model, obs);
    const double eps_eff = gate_error.effective_epsilon(epsilon);
    parallel_for(time_grid.size(), [&](std::size_t i) {
        cdouble v = f(2.0 * eps_eff * time_grid[i]);
        rec.sx[i] = v.real();
        rec.sy[i] = v.imag();
    });
    return rec;
}

double circuit_phase(const SpinConfig &config, const ObservableSpec &obs, double epsilon, double t,
                     const GateErrorModel &gate_error) {
    obs.validate_for(config.size());
    const double gamma = 2.0 * gate_error.effective_epsilon(epsilon) * t;
    return gamma * (obs.a + obs.b * static_cast<double>(net_rotations(config.spins(), obs)));
}

int circuit_gate_count(const ObservableSpec &obs) {
    return 3 * static_cast<int>(obs.terms.size()) + (obs.a != 0.0 ? 1 : 0);
}

ProbeRecord simulate_probe_shots(const ModelParams &model, const ObservableSpec &obs, double epsilon,
                                 const std::vector<double> &time_grid, std::int64_t shots,
                                 const GateErrorModel &gate_error, std::uint64_t seed) {
    check_probe_inputs(model, obs, epsilon, gate_error);
    if (shots < 1) {
        throw InputError("shots must be >= 1");
    }
    ProbeRecord rec = empty_record(model, obs, epsilon, time_grid, gate_error);
    rec.shots = shots;
    rec.seed = seed;
    const GibbsSampler prototype(model);
    rec.sampler = prototype.info();
    const double eps_eff = gate_error.effective_epsilon(epsilon);

    parallel_for(time_grid.size(), [&](std::size_t i) {
        std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                          static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(i >> 32)};
        Rng rng(seq);
        std::uniform_real_distribution<double> uniform(0.0, 1.0);
        GibbsSampler sampler = prototype;
        std::vector<int> spins;
        const double gamma = 2.0 * eps_eff * time_grid[i];
        auto draw_phase = [&] {
            sampler.sample_into(spins, rng);
            return gamma * (obs.a + obs.b * static_cast<double>(net_rotations(spins, obs)));
        };
        std::int64_t plus_x = 0;
        for (std::int64_t s = 0; s < shots; ++s) {
            plus_x += uniform(rng) < 0.5 * (1.0 + std::cos(draw_phase())) ? 1 : 0;
        }
        std::int64_t plus_y = 0;
        for (std::int64_t s = 0; s < shots; ++s) {
            plus_y += uniform(rng) < 0.5 * (1.0 + std::sin(draw_phase())) ? 1 : 0;
        }
        const double n_shots = static_cast<double>(shots);
        rec.sx[i] = static_cast<double>(2 * plus_x - shots) / n_shots;
        rec.sy[i] = static_cast<double>(2 * plus_y - shots) / n_shots;
    });
    return rec;
}

}  // namespace kinkprobe
