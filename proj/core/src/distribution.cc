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

#include "kinkprobe/distribution.h"

#include <algorithm>
#include <cmath>

namespace kinkprobe {

double Distribution::prob_at(int x) const {
    // Supports are contiguous and increasing.
    if (support.empty() || x < support.front() || x > support.back()) {
        return 0.0;
    }
    return probs[static_cast<std::size_t>(x - support.front())];
}

double Distribution::total() const {
    double s = 0.0;
    for (double p : probs) {
        s += p;
    }
    return s;
}

double Distribution::mean() const {
    double s = 0.0;
    for (std::size_t i = 0; i < probs.size(); ++i) {
        s += support[i] * probs[i];
    }
    return s;
}

namespace {

template <typename Reduce>
void for_union_support(const Distribution &p, const Distribution &q, Reduce reduce) {
    int lo = std::min(p.support.empty() ? 0 : p.support.front(), q.support.empty() ? 0 : q.support.front());
    int hi = std::max(p.support.empty() ? 0 : p.support.back(), q.support.empty() ? 0 : q.support.back());
    for (int x = lo; x <= hi; ++x) {
        reduce(p.prob_at(x) - q.prob_at(x));
    }
}

}  // namespace

double total_variation(const Distribution &p, const Distribution &q) {
    double s = 0.0;
    for_union_support(p, q, [&](double d) { s += std::abs(d); });
    return 0.5 * s;
}

double max_abs_difference(const Distribution &p, const Distribution &q) {
    double m = 0.0;
    for_union_support(p, q, [&](double d) { m = std::max(m, std::abs(d)); });
    return m;
}

}  // namespace kinkprobe
