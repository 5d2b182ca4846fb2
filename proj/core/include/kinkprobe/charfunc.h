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

#ifndef KINKPROBE_CHARFUNC_H
#define KINKPROBE_CHARFUNC_H

#include <memory>
#include <string_view>
#include <vector>

#include "kinkprobe/joint_counts.h"
#include "kinkprobe/partition.h"
#include "kinkprobe/spin_model.h"

namespace kinkprobe {

/// Long-range kink characteristic functions are built from Q(m,k) up to this size.
inline constexpr int kMaxLongRangeKinkSpins = 64;

enum class Provenance { Analytic, ProbeExact, ProbeShots };

std::string_view to_string(Provenance p);

/// Samples of F(theta) = <exp(i theta X)> on an increasing theta grid.
struct CharFunctionSamples {
    std::vector<double> theta;
    std::vector<cdouble> values;
    Provenance provenance = Provenance::Analytic;
    ObservableSpec observable;
    ModelParams model;
};

/// Couplings whose partition function is the numerator of F(theta).
///
/// Magnetization: h -> h + i theta / beta. Kink number: J -> J - i theta / (2 beta).
/// Custom observables have no such deformation and raise UnsupportedError.
ComplexParams deform_params(const ModelParams &model, const ObservableSpec &obs, double theta);

/// Evaluates F(theta) = e^{i theta a} Z(deformed) / Z(physical) for one model/observable pair.
///
/// Construction does the theta-independent work once: the physical partition
/// function, and for the long-range kink case the Q(m,k) table with its
/// log-weights. Evaluation is const and safe to call concurrently.
class CharacteristicFunction {
   public:
    CharacteristicFunction(const ModelParams &model, const ObservableSpec &obs);

    cdouble operator()(double theta) const;

    const ModelParams &model() const { return model_; }
    const ObservableSpec &observable() const { return obs_; }

   private:
    cdouble longrange_kinks(double theta) const;

    ModelParams model_;
    ObservableSpec obs_;
    ScaledComplex z_physical_;
    // Long-range kinks only: log(Q(m,k) w(m)) - shift for every nonzero Q, with its k.
    std::vector<double> lr_log_weight_;
    std::vector<int> lr_kinks_;
};

/// One-shot convenience; builds a CharacteristicFunction each call.
cdouble charfunc(const ModelParams &model, const ObservableSpec &obs, double theta);

/// F on a grid, evaluated in parallel with deterministic ordering.
CharFunctionSamples charfunc_samples(const ModelParams &model, const ObservableSpec &obs,
                                     const std::vector<double> &theta);

}  // namespace kinkprobe

#endif
