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

#include "kinkprobe/probe_record.h"

#include "kinkprobe/errors.h"

namespace kinkprobe {

void GateErrorModel::validate() const {
    if (!(eta > -1.0)) {
        throw InputError("gate error eta must be > -1, got " + std::to_string(eta));
    }
}

CharFunctionSamples to_samples(const ProbeRecord &record) {
    CharFunctionSamples f;
    f.theta.reserve(record.time_grid.size());
    f.values.reserve(record.time_grid.size());
    for (std::size_t i = 0; i < record.time_grid.size(); ++i) {
        f.theta.push_back(2.0 * record.epsilon * record.time_grid[i]);
        f.values.emplace_back(record.sx[i], record.sy[i]);
    }
    f.provenance = record.shots ? Provenance::ProbeShots : Provenance::ProbeExact;
    f.observable = record.observable;
    f.model = record.model;
    return f;
}

}  // namespace kinkprobe
