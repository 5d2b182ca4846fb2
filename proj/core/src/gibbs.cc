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

#include <algorithm>
#include <cmath>

#include "kinkprobe/errors.h"
#include "kinkprobe/probe.h"

namespace kinkprobe {

namespace {

using Mat2 = std::array<double, 4>;  // row-major, index 0 = spin up

Mat2 multiply(const Mat2 &x, const Mat2 &y) {
    return {x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3], x[2] * y[0] + x[3] * y[2],
            x[2] * y[1] + x[3] * y[3]};
}

Mat2 normalized(Mat2 m) {
    double top = std::max({m[0], m[1], m[2], m[3]});
    for (double &v : m) {
        v /= top;
    }
    return m;
}

int spin_index(int s) { return s > 0 ? 0 : 1; }

constexpr std::int64_t kBurnInSweepsPerSpin = 100;

}  // namespace

GibbsSampler::GibbsSampler(const ModelParams &model) : model_(model) {
    model_.validate(/*allow_zero_beta=*/true);
    const int n = model_.n;
    if (model_.kind == ModelKind::LongRangeAllToAll) {
        chain_.assign(static_cast<std::size_t>(n), 1);
        return;
    }

    const double bj = model_.beta * model_.j;
    const double bh = model_.beta * model_.h;
    // Max-normalized transfer matrix; only ratios within one power are ever used.
    const Mat2 t = normalized({std::exp(bj + bh), std::exp(-bj), std::exp(-bj), std::exp(bj - bh)});

    // powers[p] ~ T^p, p = 0..N.
    std::vector<Mat2> powers(static_cast<std::size_t>(n) + 1);
    powers[0] = {1.0, 0.0, 0.0, 1.0};
    for (int p = 1; p <= n; ++p) {
        powers[static_cast<std::size_t>(p)] = normalized(multiply(powers[static_cast<std::size_t>(p - 1)], t));
    }
    const Mat2 &full = powers[static_cast<std::size_t>(n)];
    first_up_ = full[0] / (full[0] + full[3]);

    next_up_.assign(static_cast<std::size_t>(n), {0.5, 0.5, 0.5, 0.5});
    for (int k = 1; k < n; ++k) {
        const Mat2 &rest = powers[static_cast<std::size_t>(n - k)];
        for (int sk = 0; sk < 2; ++sk) {
            for (int s1 = 0; s1 < 2; ++s1) {
                double up = t[static_cast<std::size_t>(2 * sk + 0)] * rest[static_cast<std::size_t>(0 * 2 + s1)];
                double down = t[static_cast<std::size_t>(2 * sk + 1)] * rest[static_cast<std::size_t>(1 * 2 + s1)];
                next_up_[static_cast<std::size_t>(k)][static_cast<std::size_t>(2 * sk + s1)] = up / (up + down);
            }
        }
    }
}

SamplerInfo GibbsSampler::info() const {
    if (model_.kind == ModelKind::NearestNeighborRing) {
        return SamplerInfo{"exact-transfer", 0, 0};
    }
    return SamplerInfo{"metropolis", kBurnInSweepsPerSpin * model_.n, model_.n};
}

void GibbsSampler::sample_ring(std::vector<int> &spins, Rng &rng) const {
    std::uniform_real_distribution<double> uniform(0.0, 1.0);
    const int n = model_.n;
    spins.resize(static_cast<std::size_t>(n));
    spins[0] = uniform(rng) < first_up_ ? 1 : -1;
    const int s1 = spin_index(spins[0]);
    for (int k = 1; k < n; ++k) {
        int sk = spin_index(spins[static_cast<std::size_t>(k - 1)]);
        double p_up = next_up_[static_cast<std::size_t>(k)][static_cast<std::size_t>(2 * sk + s1)];
        spins[static_cast<std::size_t>(k)] = uniform(rng) < p_up ? 1 : -1;
    }
}

void GibbsSampler::metropolis_sweeps(std::int64_t sweeps, Rng &rng) {
    std::uniform_real_distribution<double> uniform(0.0, 1.0);
    // Site N proposes no move. Without it the chain is periodic at beta = 0,
    // where every flip is accepted and the spin-count parity alternates.
    std::uniform_int_distribution<int> site(0, model_.n);
    const double beta = model_.beta;
    const std::int64_t attempts = sweeps * model_.n;
    for (std::int64_t a = 0; a < attempts; ++a) {
        int i = site(rng);
        if (i == model_.n) {
            continue;
        }
        int s = chain_[static_cast<std::size_t>(i)];
        long long m_old = chain_magnetization_;
        long long m_new = m_old - 2 * s;
        // E(M) = -J (M^2 - N) / 2 - h M
        double delta = -model_.j * static_cast<double>(m_new * m_new - m_old * m_old) / 2.0 -
                       model_.h * static_cast<double>(m_new - m_old);
        if (delta <= 0.0 || uniform(rng) < std::exp(-beta * delta)) {
            chain_[static_cast<std::size_t>(i)] = -s;
            chain_magnetization_ = m_new;
        }
    }
}

void GibbsSampler::sample_into(std::vector<int> &spins, Rng &rng) {
    if (model_.kind == ModelKind::NearestNeighborRing) {
        sample_ring(spins, rng);
        return;
    }
    if (!burned_in_) {
        std::bernoulli_distribution coin(0.5);
        chain_magnetization_ = 0;
        for (int &s : chain_) {
            s = coin(rng) ? 1 : -1;
            chain_magnetization_ += s;
        }
        metropolis_sweeps(kBurnInSweepsPerSpin * model_.n, rng);
        burned_in_ = true;
    } else {
        metropolis_sweeps(model_.n, rng);
    }
    spins = chain_;
}

SpinConfig GibbsSampler::sample(Rng &rng) {
    std::vector<int> spins;
    sample_into(spins, rng);
    return SpinConfig(std::move(spins));
}

SpinConfig gibbs_sample(const ModelParams &model, Rng &rng) {
    GibbsSampler sampler(model);
    return sampler.sample(rng);
}

}  // namespace kinkprobe
