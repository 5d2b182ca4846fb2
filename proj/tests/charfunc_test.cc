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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "kinkprobe/charfunc.h"
#include "kinkprobe/errors.h"
#include "kinkprobe/joint_counts.h"
#include "test_util.h"

namespace kinkprobe {
namespace {

using std::numbers::pi;

ObservableSpec spec_for(oracle::Obs obs, int n) {
    return obs == oracle::Obs::M ? ObservableSpec::magnetization(n) : ObservableSpec::kink_number(n);
}

cdouble from_oracle(const oracle::BruteForce &bf, double theta) {
    std::complex<long double> acc{0.0L, 0.0L};
    for (const auto &[x, p] : bf.p) {
        acc += p * std::polar(1.0L, static_cast<long double>(theta) * x);
    }
    return {static_cast<double>(acc.real()), static_cast<double>(acc.imag())};
}

TEST(DeformParams, IdentityAtZero) {
    ModelParams m{ModelKind::NearestNeighborRing, 5, 0.7, 0.2, 1.3};
    for (auto obs : {ObservableSpec::magnetization(5), ObservableSpec::kink_number(5)}) {
        auto p = deform_params(m, obs, 0.0);
        EXPECT_EQ(p.jt, cdouble(0.7, 0.0));
        EXPECT_EQ(p.ht, cdouble(0.2, 0.0));
        EXPECT_EQ(p.beta, 1.3);
        EXPECT_EQ(p.n, 5);
    }
}

TEST(DeformParams, MagnetizationShiftsField) {
    ModelParams m{ModelKind::NearestNeighborRing, 50, 1.0, 0.2, 1.0};
    auto p = deform_params(m, ObservableSpec::magnetization(50), pi);
    EXPECT_EQ(p.ht, cdouble(0.2, pi));
    EXPECT_EQ(p.jt, cdouble(1.0, 0.0));
}

TEST(DeformParams, KinksShiftCoupling) {
    ModelParams m{ModelKind::NearestNeighborRing, 50, 1.0, 0.0, 0.1};
    auto p = deform_params(m, ObservableSpec::kink_number(50), pi);
    EXPECT_DOUBLE_EQ(p.jt.real(), 1.0);
    EXPECT_NEAR(p.jt.imag(), -5.0 * pi, 1e-14);
    EXPECT_EQ(p.ht, cdouble(0.0, 0.0));
}

TEST(DeformParams, CustomIsUnsupported) {
    ModelParams m{ModelKind::NearestNeighborRing, 3, 1.0, 0.0, 1.0};
    auto obs = ObservableSpec::custom(0.0, 1.0, {{0, 1}});
    EXPECT_THROW(deform_params(m, obs, 0.3), UnsupportedError);
    EXPECT_THROW(charfunc(m, obs, 0.3), UnsupportedError);
}

TEST(DeformParams, RejectsMismatchedObservableAndBadBeta) {
    ModelParams m{ModelKind::NearestNeighborRing, 4, 1.0, 0.0, 1.0};
    EXPECT_THROW(deform_params(m, ObservableSpec::magnetization(5), 0.1), InputError);
    m.beta = 0.0;
    EXPECT_THROW(deform_params(m, ObservableSpec::magnetization(4), 0.1), InputError);
}

TEST(Charfunc, NormalizedAtZero) {
    for (auto kind : {ModelKind::NearestNeighborRing, ModelKind::LongRangeAllToAll}) {
        for (auto obs : {oracle::Obs::M, oracle::Obs::K}) {
            ModelParams m{kind, 9, 0.8, 0.35, 0.9};
            EXPECT_EQ(charfunc(m, spec_for(obs, 9), 0.0), cdouble(1.0, 0.0));
        }
    }
}

TEST(Charfunc, RingMagnetizationAtPiIsParity) {
    for (int n : {3, 4, 11, 50}) {
        ModelParams m{ModelKind::NearestNeighborRing, n, 1.0, 0.3, 1.0};
        cdouble f = charfunc(m, ObservableSpec::magnetization(n), pi);
        EXPECT_NEAR(f.real(), n % 2 == 0 ? 1.0 : -1.0, 1e-10) << n;
        EXPECT_NEAR(f.imag(), 0.0, 1e-10) << n;
        if (n <= 4) {
            auto bf = oracle::brute_force(m.kind, n, m.j, m.h, m.beta, oracle::Obs::M);
            EXPECT_LT(std::abs(f - from_oracle(bf, pi)), 1e-12);
        }
    }
}

TEST(Charfunc, TwoSpinRingKinks) {
    ModelParams m{ModelKind::NearestNeighborRing, 2, 1.0, 0.0, 1.0};
    const double p0 = 2 * std::exp(2.0) / (2 * std::exp(2.0) + 2 * std::exp(-2.0));
    EXPECT_NEAR(p0, 0.9820, 1e-4);
    EXPECT_NEAR(1 - p0, 0.01799, 1e-5);
    for (double theta : {0.3, 1.0, 2.5, 4.0}) {
        cdouble f = charfunc(m, ObservableSpec::kink_number(2), theta);
        cdouble expected = p0 + (1 - p0) * std::polar(1.0, 2 * theta);
        EXPECT_LT(std::abs(f - expected), 1e-14);
    }
}

TEST(Charfunc, LongRangeKinksRefusesLargeN) {
    ModelParams m{ModelKind::LongRangeAllToAll, kMaxLongRangeKinkSpins + 1, 1.0, 0.0, 0.1};
    EXPECT_THROW(CharacteristicFunction(m, ObservableSpec::kink_number(m.n)), SizeError);
}

TEST(Charfunc, LongRangeKinksSingleSpin) {
    ModelParams m{ModelKind::LongRangeAllToAll, 1, 1.0, 0.5, 1.0};
    EXPECT_EQ(charfunc(m, ObservableSpec::kink_number(1), 1.7), cdouble(1.0, 0.0));
}

TEST(Charfunc, LongRangeKinksMatchEnumerationAtTwenty) {
    ModelParams m{ModelKind::LongRangeAllToAll, 20, 1.0, 0.4, 0.05};
    auto r = enumerate_oracle(m, ObservableSpec::kink_number(20));
    CharacteristicFunction f(m, ObservableSpec::kink_number(20));
    for (double theta : {0.1, 0.9, 2.0, 3.1, 5.5}) {
        cdouble ref{0.0, 0.0};
        for (std::size_t i = 0; i < r.dist.size(); ++i) {
            ref += r.dist.probs[i] * std::polar(1.0, theta * r.dist.support[i]);
        }
        EXPECT_LT(std::abs(f(theta) - ref), 1e-12) << theta;
    }
}

TEST(CharfuncSamples, MatchesPointwiseAndIgnoresWorkerCount) {
    ModelParams m{ModelKind::NearestNeighborRing, 30, 0.6, 0.1, 1.2};
    auto obs = ObservableSpec::kink_number(30);
    std::vector<double> theta;
    for (int j = 0; j < 31; ++j) {
        theta.push_back(2 * pi * j / 31);
    }
    CharFunctionSamples a;
    {
        testutil::ScopedThreads t(1);
        a = charfunc_samples(m, obs, theta);
    }
    testutil::ScopedThreads t(4);
    auto b = charfunc_samples(m, obs, theta);
    EXPECT_EQ(a.values, b.values);
    EXPECT_EQ(a.provenance, Provenance::Analytic);
    for (std::size_t j = 0; j < theta.size(); ++j) {
        EXPECT_EQ(a.values[j], charfunc(m, obs, theta[j]));
    }
}

TEST(JointCountsTest, TotalsAndSaturatedConfigs) {
    for (int n : {2, 3, 8, 17, 40}) {
        auto q = joint_counts(n);
        long double total = 0.0L;
        for (int m = -n; m <= n; ++m) {
            for (int k = 0; k <= n; ++k) {
                total += q.at(m, k);
            }
        }
        EXPECT_EQ(total, std::ldexp(1.0L, n)) << n;
        EXPECT_EQ(q.at(n, 0), 1.0);
        EXPECT_EQ(q.at(-n, 0), 1.0);
        EXPECT_LT(q.max_residual(), 1e-6);
    }
}

TEST(JointCountsTest, FourRing) {
    // Two down spins: 4 adjacent placements with two kinks, 2 alternating with four.
    auto q = joint_counts(4);
    EXPECT_EQ(q.at(0, 2), 4.0);
    EXPECT_EQ(q.at(0, 4), 2.0);
    EXPECT_EQ(q.at(2, 2), 4.0);
    EXPECT_EQ(q.at(5, 0), 0.0);
    EXPECT_EQ(q.at(0, -1), 0.0);
}

TEST(JointCountsTest, MatchesRunCountingFormula) {
    for (int n : {2, 5, 12, 23, 31, 48, 64}) {
        auto q = joint_counts(n);
        for (int m = -n; m <= n; ++m) {
            for (int k = 0; k <= n; ++k) {
                const double want = static_cast<double>(oracle::kink_count(n, m, k));
                ASSERT_EQ(q.at(m, k), want) << n << " " << m << " " << k;
            }
        }
    }
}

TEST(JointCountsTest, RejectsTinyRings) { EXPECT_THROW(joint_counts(1), InputError); }

// Properties

TEST(CharfuncProperty, OracleEquivalenceAllCombinations) {
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    for (auto kind : {ModelKind::NearestNeighborRing, ModelKind::LongRangeAllToAll}) {
        for (auto obs : {oracle::Obs::M, oracle::Obs::K}) {
            for (int n = 2; n <= 12; ++n) {
                ModelParams m{kind, n, u(rng), u(rng), 1.0};
                auto bf = oracle::brute_force(kind, n, m.j, m.h, m.beta, obs);
                CharacteristicFunction f(m, spec_for(obs, n));
                const int pts = 2 * n + 1;
                for (int j = 0; j < pts; ++j) {
                    double theta = 2 * pi * j / pts;
                    EXPECT_LT(std::abs(f(theta) - from_oracle(bf, theta)), 1e-10)
                        << to_string(kind) << " " << static_cast<int>(obs) << " " << n << " " << j;
                }
            }
        }
    }
}

TEST(CharfuncProperty, PeriodicHermitianAndBounded) {
    std::mt19937_64 rng(29);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    std::uniform_real_distribution<double> th(0.0, 2 * pi);
    for (auto kind : {ModelKind::NearestNeighborRing, ModelKind::LongRangeAllToAll}) {
        for (auto obs : {oracle::Obs::M, oracle::Obs::K}) {
            for (int trial = 0; trial < 6; ++trial) {
                const int n = 5 + 7 * trial;
                ModelParams m{kind, n, u(rng), u(rng), 0.5 + std::abs(u(rng)) / 2};
                CharacteristicFunction f(m, spec_for(obs, n));
                for (int s = 0; s < 10; ++s) {
                    double theta = th(rng);
                    cdouble v = f(theta);
                    EXPECT_LE(std::abs(v), 1.0 + 1e-9);
                    EXPECT_LT(std::abs(f(theta + 2 * pi) - v), 1e-9);
                    EXPECT_LT(std::abs(f(2 * pi - theta) - std::conj(v)), 1e-10);
                }
            }
        }
    }
}

TEST(CharfuncProperty, RingKinksEvenAtPi) {
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (int n = 1; n <= 120; n += 7) {
        ModelParams m{ModelKind::NearestNeighborRing, n, u(rng), u(rng), 1.0};
        cdouble f = charfunc(m, ObservableSpec::kink_number(n), pi);
        EXPECT_LT(std::abs(f - 1.0), 1e-9) << n;
    }
}

}  // namespace
}  // namespace kinkprobe
