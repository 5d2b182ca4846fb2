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

#ifndef KINKPROBE_PROBE_RECORD_H
#define KINKPROBE_PROBE_RECORD_H

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kinkprobe/charfunc.h"
#include "kinkprobe/spin_model.h"

namespace kinkprobe {

/// Miscalibrated controlled rotations: every gate acts with eps' = (1 + eta) eps.
struct GateErrorModel {
    double eta = 0.0;

    /// Throws InputError unless eta > -1.
    void validate() const;
    double effective_epsilon(double epsilon) const { return (1.0 + eta) * epsilon; }
};

/// How Gibbs configurations were drawn for a shot-sampled record.
struct SamplerInfo {
    std::string method;  // "exact-transfer", "metropolis" or "none"
    std::int64_t burn_in_sweeps = 0;
    std::int64_t thinning_sweeps = 0;
};

/// Probe-qubit coherence <sx> + i <sy> versus interaction time.
struct ProbeRecord {
    double epsilon = 0.0;
    std::vector<double> time_grid;
    std::vector<double> sx;
    std::vector<double> sy;
    /// Shots per time point and per readout basis; nullopt for exact expectations.
    std::optional<std::int64_t> shots;
    double eta = 0.0;
    std::uint64_t seed = 0;
    ModelParams model;
    ObservableSpec observable;
    SamplerInfo sampler;
};

/// Reinterprets a record as F samples on the nominal grid theta_j = 2 eps t_j.
CharFunctionSamples to_samples(const ProbeRecord &record);

}  // namespace kinkprobe

#endif
