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

#ifndef KINKPROBE_DISTRIBUTION_H
#define KINKPROBE_DISTRIBUTION_H

#include <string>
#include <vector>

namespace kinkprobe {

enum class ModelKind;
enum class ObservableKind;

struct DistributionMeta {
    ObservableKind observable{};
    ModelKind model{};
    int n = 0;
    std::string method;
};

/// Probabilities over a contiguous integer support.
struct Distribution {
    std::vector<int> support;
    std::vector<double> probs;
    /// Largest |Im P(x)| discarded by a Fourier inversion; 0 for exact sums.
    double residual_imag = 0.0;
    DistributionMeta meta;

    std::size_t size() const { return probs.size(); }
    /// P(x), or 0 for x outside the support.
    double prob_at(int x) const;
    double total() const;
    double mean() const;
};

double total_variation(const Distribution &p, const Distribution &q);
double max_abs_difference(const Distribution &p, const Distribution &q);

}  // namespace kinkprobe

#endif
