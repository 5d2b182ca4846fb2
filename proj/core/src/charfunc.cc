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

#include "kinkprobe/charfunc.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "kinkprobe/errors.h"
#include "kinkprobe/parallel.h"

namespace kinkprobe {

std::string_view to_string(Provenance p) {
    switch (p) {
        case Provenance::Analytic:
            return "analytic";
        case Provenance::ProbeExact:
            return "probe-exact";
        case Provenance::ProbeShots:
            return "probe-shots";
    }
    return "?";
}

namespace {

void require_builtin(const ObservableSpec &obs, int n) {
    if (obs.kind == ObservableKind::Custom) {
        throw UnsupportedError(
            "custom observables have no parameter deformation; use enumerate_oracle or the probe simulator");
    }
    if (static_cast<int>(obs.terms.size()) != n) {
        throw InputError("observable was built for N = " + std::to_string(obs.terms.size()) +
                         " but the model has N = " + std::to_string(n));
    }
}

}  // namespace

ComplexParams deform_params(const ModelParams &model, const ObservableSpec &obs, double theta) {
    model.validate();
    require_builtin(obs, model.n);
    ComplexParams p = ComplexParams::from_model(model);
    if (obs.kind == ObservableKind::Magnetization) {
        p.ht = cdouble{model.h, theta / model.beta};
    } else {
        p.jt = cdouble{model.j, -theta / (2.0 * model.beta)};
    }
    return p;
}

CharacteristicFunction::CharacteristicFunction(const ModelParams &model, const ObservableSpec &obs)
    : model_(model), obs_(obs) {
    model_.validate();
    require_builtin(obs_, model_.n);

    if (model_.kind == ModelKind::LongRangeAllToAll && obs_.kind == ObservableKind::KinkNumber) {
        const int n = model_.n;
        if (n == 1) {
            // A one-site ring has no kinks.
            lr_log_weight_ = {0.0};
            lr_kinks_ = {0};
            return;
        }
        if (n > kMaxLongRangeKinkSpins) {
            throw SizeError("long-range kink statistics limited to N <= " +
                            std::to_string(kMaxLongRangeKinkSpins));
        }
        JointCounts q = joint_counts(n);
        double shift = -std::numeric_limits<double>::infinity();
        for (int m = -n; m <= n; ++m) {
            double log_w = model_.beta * (model_.j * (static_cast<double>(m) * m - n) / 2.0 + model_.h * m);
            for (int k = 0; k <= n; ++k) {
                double c = q.at(m, k);
                if (c > 0.0) {
                    lr_log_weight_.push_back(std::log(c) + log_w);
                    lr_kinks_.push_back(k);
                    shift = std::max(shift, lr_log_weight_.back());
                }
            }
        }
        for (double &lw : lr_log_weight_) {
            lw -= shift;
        }
        return;
    }
    z_physical_ = partition(model_.kind, ComplexParams::from_model(model_));
}

cdouble CharacteristicFunction::longrange_kinks(double theta) const {
    cdouble num{0.0, 0.0};
    double den = 0.0;
    for (std::size_t i = 0; i < lr_log_weight_.size(); ++i) {
        double w = std::exp(lr_log_weight_[i]);
        num += w * std::polar(1.0, theta * lr_kinks_[i]);
        den += w;
    }
    return num / den;
}

cdouble CharacteristicFunction::operator()(double theta) const {
    if (!lr_kinks_.empty()) {
        return longrange_kinks(theta);
    }
    ComplexParams deformed = deform_params(model_, obs_, theta);
    return std::polar(1.0, theta * obs_.a) * ratio(partition(model_.kind, deformed), z_physical_);
}

cdouble charfunc(const ModelParams &model, const ObservableSpec &obs, double theta) {
    return CharacteristicFunction(model, obs)(theta);
}

CharFunctionSamples charfunc_samples(const ModelParams &model, const ObservableSpec &obs,
                                     const std::vector<double> &theta) {
    CharacteristicFunction f(model, obs);
    CharFunctionSamples out;
    out.theta = theta;
    out.values.resize(theta.size());
    out.provenance = Provenance::Analytic;
    out.observable = obs;
    out.model = model;
    parallel_for(theta.size(), [&](std::size_t i) { out.values[i] = f(theta[i]); });
    return out;
}

}  // namespace kinkprobe
