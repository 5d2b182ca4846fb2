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

#ifndef KINKPROBE_SPIN_MODEL_H
#define KINKPROBE_SPIN_MODEL_H

#include <cstdint>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "kinkprobe/distribution.h"

namespace kinkprobe {

/// Largest N accepted by the exhaustive enumeration oracle.
inline constexpr int kMaxOracleSpins = 24;

enum class ModelKind { NearestNeighborRing, LongRangeAllToAll };

std::string_view to_string(ModelKind kind);

/// Classical Ising couplings.
///
/// NearestNeighborRing: H = -J sum_n s_n s_{n+1} - h sum_n s_n with s_{N+1} = s_1.
/// LongRangeAllToAll:   H = -J sum_{m<n} s_m s_n - h sum_n s_n.
struct ModelParams {
    ModelKind kind = ModelKind::NearestNeighborRing;
    int n = 1;
    double j = 1.0;
    double h = 0.0;
    double beta = 1.0;

    /// Throws InputError unless n >= 1 and beta > 0 (or beta >= 0 when allowed).
    void validate(bool allow_zero_beta = false) const;
};

/// A configuration of N classical spins, each -1 or +1.
class SpinConfig {
   public:
    explicit SpinConfig(std::vector<int> spins);

    static SpinConfig all_up(int n);
    /// Bit i of `bits` set means spin i is -1.
    static SpinConfig from_bits(std::uint64_t bits, int n);

    int size() const { return static_cast<int>(spins_.size()); }
    int operator[](int i) const { return spins_[static_cast<std::size_t>(i)]; }
    std::span<const int> spins() const { return spins_; }
    std::uint64_t to_bits() const;

    bool operator==(const SpinConfig &) const = default;

   private:
    std::vector<int> spins_;
};

enum class ObservableKind { Magnetization, KinkNumber, Custom };

std::string_view to_string(ObservableKind kind);

/// X = a + b * sum over terms of the product of the selected spins.
///
/// Indices are 0-based. The built-in kink number uses every ring bond
/// (n, n+1 mod N), including the wrap bond (N-1, 0).
struct ObservableSpec {
    double a = 0.0;
    double b = 1.0;
    std::vector<std::vector<int>> terms;
    ObservableKind kind = ObservableKind::Custom;

    static ObservableSpec magnetization(int n);
    static ObservableSpec kink_number(int n);
    static ObservableSpec custom(double a, double b, std::vector<std::vector<int>> terms);

    /// Integer window [lo, hi] guaranteed to contain every value of X.
    std::pair<int, int> integer_bounds() const;

    /// Throws InputError if any index lies outside [0, n).
    void validate_for(int n) const;
};

double observable_value(const SpinConfig &config, const ObservableSpec &obs);

double energy(const ModelParams &model, const SpinConfig &config);

struct OracleResult {
    double log_z = 0.0;
    /// exp(log_z); may be +inf for extreme couplings, use log_z in that case.
    double z = 0.0;
    Distribution dist;
};

/// Exhaustive sum over all 2^N configurations.
///
/// Returns log Z and P(x) = sum_{X(config)=x} e^{-beta E} / Z. beta = 0 is
/// permitted and yields the counting distribution. The 2^N loop is split
/// into a fixed number of index-ordered blocks, so the result does not
/// depend on the worker count. Throws SizeError for N > kMaxOracleSpins and
/// InputError when X takes a non-integer value.
OracleResult enumerate_oracle(const ModelParams &model, const ObservableSpec &obs);

}  // namespace kinkprobe

#endif
