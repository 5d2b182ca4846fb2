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

#include "kinkprobe/spin_model.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <string>

#include "kinkprobe/errors.h"
#include "kinkprobe/parallel.h"

namespace kinkprobe {

std::string_view to_string(ModelKind kind) {
    switch (kind) {
        case ModelKind::NearestNeighborRing:
            return "ring";
        case ModelKind::LongRangeAllToAll:
            return "longrange";
    }
    return "?";
}

std::string_view to_string(ObservableKind kind) {
    switch (kind) {
        case ObservableKind::Magnetization:
            return "magnetization";
        case ObservableKind::KinkNumber:
            return "kinks";
        case ObservableKind::Custom:
            return "custom";
    }
    return "?";
}

void ModelParams::validate(bool allow_zero_beta) const {
    if (n < 1) {
        throw InputError("model needs N >= 1, got " + std::to_string(n));
    }
    if (!std::isfinite(j) || !std::isfinite(h) || !std::isfinite(beta)) {
        throw InputError("model parameters must be finite");
    }
    if (allow_zero_beta ? beta < 0.0 : beta <= 0.0) {
        throw InputError(std::string("beta must be ") + (allow_zero_beta ? ">= 0" : "> 0") + ", got " +
                         std::to_string(beta));
    }
}

SpinConfig::SpinConfig(std::vector<int> spins) : spins_(std::move(spins)) {
    for (int s : spins_) {
        if (s != 1 && s != -1) {
            throw InputError("spin values must be -1 or +1");
        }
    }
}

SpinConfig SpinConfig::all_up(int n) { return SpinConfig(std::vector<int>(static_cast<std::size_t>(n), 1)); }

SpinConfig SpinConfig::from_bits(std::uint64_t bits, int n) {
    std::vector<int> s(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        s[static_cast<std::size_t>(i)] = ((bits >> i) & 1u) ? -1 : 1;
    }
    return SpinConfig(std::move(s));
}

std::uint64_t SpinConfig::to_bits() const {
    std::uint64_t bits = 0;
    for (int i = 0; i < size() && i < 64; ++i) {
        if ((*this)[i] < 0) {
            bits |= std::uint64_t{1} << i;
        }
    }
    return bits;
}

ObservableSpec ObservableSpec::magnetization(int n) {
    ObservableSpec obs;
    obs.a = 0.0;
    obs.b = 1.0;
    obs.kind = ObservableKind::Magnetization;
    for (int i = 0; i < n; ++i) {
        obs.terms.push_back({i});
    }
    return obs;
}

ObservableSpec ObservableSpec::kink_number(int n) {
    ObservableSpec obs;
    obs.a = n / 2.0;
    obs.b = -0.5;
    obs.kind = ObservableKind::KinkNumber;
    for (int i = 0; i < n; ++i) {
        obs.terms.push_back({i, (i + 1) % n});
    }
    return obs;
}

ObservableSpec ObservableSpec::custom(double a, double b, std::vector<std::vector<int>> terms) {
    ObservableSpec obs;
    obs.a = a;
    obs.b = b;
    obs.terms = std::move(terms);
    obs.kind = ObservableKind::Custom;
    return obs;
}

std::pair<int, int> ObservableSpec::integer_bounds() const {
    double spread = std::abs(b) * static_cast<double>(terms.size());
    // Slack absorbs representation error in a and b (e.g. a = N/2, b = -1/2).
    int lo = static_cast<int>(std::ceil(a - spread - 1e-9));
    int hi = static_cast<int>(std::floor(a + spread + 1e-9));
    return {lo, hi};
}

void ObservableSpec::validate_for(int n) const {
    for (const auto &term : terms) {
        for (int idx : term) {
            if (idx < 0 || idx >= n) {
                throw InputError("observable index " + std::to_string(idx) + " out of range for N = " +
                                 std::to_string(n));
            }
        }
    }
}

double observable_value(const SpinConfig &config, const ObservableSpec &obs) {
    obs.validate_for(config.size());
    long long sum = 0;
    for (const auto &term : obs.terms) {
        int product = 1;
        for (int idx : term) {
            product *= config[idx];
        }
        sum += product;
    }
    return obs.a + obs.b * static_cast<double>(sum);
}

double energy(const ModelParams &model, const SpinConfig &config) {
    if (config.size() != model.n) {
        throw InputError("configuration length " + std::to_string(config.size()) + " does not match N = " +
                         std::to_string(model.n));
    }
    const int n = model.n;
    long long pair_sum = 0;
    long long mag = 0;
    for (int i = 0; i < n; ++i) {
        mag += config[i];
    }
    if (model.kind == ModelKind::NearestNeighborRing) {
        for (int i = 0; i < n; ++i) {
            pair_sum += config[i] * config[(i + 1) % n];
        }
    } else {
        // sum_{m<n} s_m s_n = (M^2 - N) / 2
        pair_sum = (mag * mag - n) / 2;
    }
    return -model.j * static_cast<double>(pair_sum) - model.h * static_cast<double>(mag);
}

namespace {

constexpr std::uint64_t kOracleBlocks = 256;

struct PackedObservable {
    ObservableKind kind;
    double a;
    double b;
    std::vector<std::uint64_t> masks;
};

int ring_kinks(std::uint64_t bits, int n, std::uint64_t full_mask) {
    std::uint64_t rotated = ((bits >> 1) | ((bits & 1u) << (n - 1))) & full_mask;
    return std::popcount(bits ^ rotated);
}

}  // namespace

OracleResult enumerate_oracle(const ModelParams &model, const ObservableSpec &obs) {
    model.validate(/*allow_zero_beta=*/true);
    if (model.n > kMaxOracleSpins) {
        throw SizeError("enumeration oracle limited to N <= " + std::to_string(kMaxOracleSpins) + ", got N = " +
                        std::to_string(model.n));
    }
    obs.validate_for(model.n);

    const int n = model.n;
    const std::uint64_t total = std::uint64_t{1} << n;
    const std::uint64_t full_mask = total - 1;
    const auto [x_lo, x_hi] = obs.integer_bounds();
    const std::size_t width = static_cast<std::size_t>(x_hi - x_lo + 1);

    PackedObservable packed{obs.kind, obs.a, obs.b, {}};
    for (const auto &term : obs.terms) {
        std::uint64_t m = 0;
        for (int idx : term) {
            m ^= std::uint64_t{1} << idx;  // repeated indices cancel, matching s^2 = 1
        }
        packed.masks.push_back(m);
    }

    // Both energies depend on the configuration only through (M, K).
    std::vector<double> log_weight(static_cast<std::size_t>((n + 1) * (n + 1)));
    for (int downs = 0; downs <= n; ++downs) {
        for (int k = 0; k <= n; ++k) {
            double mag = n - 2.0 * downs;
            double pair_sum = model.kind == ModelKind::NearestNeighborRing ? n - 2.0 * k : (mag * mag - n) / 2.0;
            double e = -model.j * pair_sum - model.h * mag;
            log_weight[static_cast<std::size_t>(downs * (n + 1) + k)] = -model.beta * e;
        }
    }

    auto visit = [&](std::uint64_t bits, double &lw, int &x) {
        int downs = std::popcount(bits);
        int k = ring_kinks(bits, n, full_mask);
        lw = log_weight[static_cast<std::size_t>(downs * (n + 1) + k)];
        switch (packed.kind) {
            case ObservableKind::Magnetization:
                x = n - 2 * downs;
                return;
            case ObservableKind::KinkNumber:
                x = k;
                return;
            case ObservableKind::Custom: {
                long long sum = 0;
                for (std::uint64_t m : packed.masks) {
                    sum += (std::popcount(bits & m) & 1) ? -1 : 1;
                }
                double v = packed.a + packed.b * static_cast<double>(sum);
                double r = std::round(v);
                if (std::abs(v - r) > 1e-9) {
                    throw InputError("observable takes non-integer value " + std::to_string(v));
                }
                x = static_cast<int>(r);
                return;
            }
        }
    };

    const std::uint64_t blocks = std::min(total, kOracleBlocks);
    auto block_begin = [&](std::uint64_t b) { return b * total / blocks; };

    std::vector<double> block_max(blocks, -std::numeric_limits<double>::infinity());
    parallel_for(blocks, [&](std::size_t b) {
        double best = -std::numeric_limits<double>::infinity();
        double lw = 0.0;
        int x = 0;
        for (std::uint64_t bits = block_begin(b); bits < block_begin(b + 1); ++bits) {
            visit(bits, lw, x);
            best = std::max(best, lw);
        }
        block_max[b] = best;
    });
    const double shift = *std::max_element(block_max.begin(), block_max.end());

    std::vector<std::vector<double>> block_hist(blocks, std::vector<double>(width, 0.0));
    parallel_for(blocks, [&](std::size_t b) {
        auto &hist = block_hist[b];
        double lw = 0.0;
        int x = 0;
        for (std::uint64_t bits = block_begin(b); bits < block_begin(b + 1); ++bits) {
            visit(bits, lw, x);
            hist[static_cast<std::size_t>(x - x_lo)] += std::exp(lw - shift);
        }
    });

    std::vector<double> hist(width, 0.0);
    for (const auto &bh : block_hist) {
        for (std::size_t i = 0; i < width; ++i) {
            hist[i] += bh[i];
        }
    }
    double scaled_z = 0.0;
    for (double w : hist) {
        scaled_z += w;
    }

    OracleResult result;
    result.log_z = shift + std::log(scaled_z);
    result.z = std::exp(result.log_z);
    result.dist.support.resize(width);
    result.dist.probs.resize(width);
    for (std::size_t i = 0; i < width; ++i) {
        result.dist.support[i] = x_lo + static_cast<int>(i);
        result.dist.probs[i] = hist[i] / scaled_z;
    }
    result.dist.meta = DistributionMeta{obs.kind, model.kind, n, "enumeration"};
    return result;
}

}  // namespace kinkprobe
