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
#include "kinkprobe/cumulants.h"
#include "kinkprobe/errors.h"
#include "kinkprobe/reconstruct.h"
#include "test_util.h"

namespace kinkprobe {
namespace {

using std::numbers::pi;
using testutil::relative;

CumulantSet numeric(const ModelParams &m, const ObservableSpec &obs, int order = 3) {
    auto grid = build_theta_grid(obs, m.n);
    return numerical_cumulants(charfunc_samples(m, obs, grid.theta), order);
}

TEST(CumulantContextTest, ZeroField) {
    ModelParams m{ModelKind::NearestNeighborRing, 10, 0.7, 0.0, 1.2};
    auto c = CumulantContext::from_model(m);
    EXPECT_EQ(c.u, 1.0);
    EXPECT_NEAR(c.v, 1 - 3 * std::exp(4 * 0.84), 1e-12);
    EXPECT_EQ(c.w, 1.0);
    EXPECT_NEAR(c.lambda_plus, 2 * std::cosh(0.84), 1e-14);
    EXPECT_NEAR(c.lambda_minus, 2 * std::sinh(0.84), 1e-14);
}

TEST(CumulantContextTest, UAtLeastOne) {
    std::mt19937_64 rng(2);
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    for (int i = 0; i < 100; ++i) {
        ModelParams m{ModelKind::NearestNeighborRing, 10, u(rng), u(rng), 1.0};
        EXPECT_GE(CumulantContext::from_model(m).u, 1.0);
    }
}

TEST(ClosedCumulants, RingMagnetizationZeroFieldIsSymmetric) {
    ModelParams m{ModelKind::NearestNeighborRing, 30, 1.0, 0.0, 0.8};
    auto c = closed_cumulants(m, ObservableSpec::magnetization(30));
    EXPECT_EQ(c.kappa1(), 0.0);
    EXPECT_EQ(c.kappa3(), 0.0);
    EXPECT_EQ(c.flavor, CumulantFlavor::ClosedLargeN);
}

TEST(ClosedCumulants, RingMagnetizationVarianceAtZeroField) {
    ModelParams m{ModelKind::NearestNeighborRing, 50, 1.0, 0.0, 1.0};
    auto c = closed_cumulants(m, ObservableSpec::magnetization(50));
    EXPECT_NEAR(c.kappa2(), 50 * std::exp(2.0), 1e-10);
    EXPECT_NEAR(c.kappa2(), 369.45, 0.01);
}

TEST(ClosedCumulants, RingMagnetizationVarianceAgainstOracleAtTwelve) {
    ModelParams m{ModelKind::NearestNeighborRing, 12, 1.0, 0.0, 1.0};
    auto c = closed_cumulants(m, ObservableSpec::magnetization(12));
    auto bf = oracle::brute_force(m.kind, 12, 1.0, 0.0, 1.0, oracle::Obs::M);
    const double ratio = std::tanh(1.0);
    const double tol = std::max(1e-9, 3 * std::pow(ratio, 12) * 12);
    EXPECT_LT(relative(c.kappa2(), static_cast<double>(oracle::moments(bf).c2)), tol);
}

TEST(ClosedCumulants, RingKinkMeanAtZeroField) {
    ModelParams m{ModelKind::NearestNeighborRing, 50, 1.0, 0.0, 1.0};
    auto c = closed_cumulants(m, ObservableSpec::kink_number(50));
    EXPECT_NEAR(c.kappa1(), 50 / (1 + std::exp(2.0)), 1e-12);
    EXPECT_NEAR(c.kappa1(), 5.960, 1e-3);
}

TEST(ClosedCumulants, ExactKinkMeanMatchesOracle) {
    for (int n = 2; n <= 14; ++n) {
        ModelParams m{ModelKind::NearestNeighborRing, n, 0.9, 0.0, 1.1};
        auto c = closed_cumulants(m, ObservableSpec::kink_number(n), CumulantFlavor::ExactSmallFormula);
        EXPECT_EQ(c.flavor, CumulantFlavor::ExactSmallFormula);
        ASSERT_EQ(c.kappa.size(), 1u);
        auto bf = oracle::brute_force(m.kind, n, m.j, 0.0, m.beta, oracle::Obs::K);
        EXPECT_NEAR(c.kappa1(), static_cast<double>(oracle::moments(bf).mean), 1e-12) << n;
        EXPECT_NEAR(c.kappa1(), static_cast<double>(oracle::exact_ring_kink_mean(n, 0.9, 1.1)), 1e-12) << n;
    }
}

TEST(ClosedCumulants, RingFormsMatchNumericalWhereTruncationVanishes) {
    // (lambda-/lambda+)^N is far below double resolution at these couplings.
    for (double h : {0.0, 0.15, 0.4}) {
        ModelParams m{ModelKind::NearestNeighborRing, 200, 0.6, h, 0.5};
        for (auto obs : {ObservableSpec::magnetization(200), ObservableSpec::kink_number(200)}) {
            auto closed = closed_cumulants(m, obs);
            auto num = numeric(m, obs);
            for (int j = 0; j < 3; ++j) {
                double scale = std::max(1e-6 * m.n, std::abs(closed.kappa[static_cast<std::size_t>(j)]));
                EXPECT_LT(std::abs(closed.kappa[static_cast<std::size_t>(j)] - num.kappa[static_cast<std::size_t>(j)]) /
                              scale,
                          1e-8)
                    << "h=" << h << " kind=" << to_string(obs.kind) << " order=" << j + 1;
            }
        }
    }
}

TEST(ClosedCumulants, LongRangeMagnetizationIsExact) {
    std::mt19937_64 rng(37);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int n = 2; n <= 12; ++n) {
        ModelParams m{ModelKind::LongRangeAllToAll, n, u(rng), u(rng), 0.7};
        auto c = closed_cumulants(m, ObservableSpec::magnetization(n));
        EXPECT_EQ(c.flavor, CumulantFlavor::ExactSmallFormula);
        auto mom = oracle::moments(oracle::brute_force(m.kind, n, m.j, m.h, m.beta, oracle::Obs::M));
        EXPECT_NEAR(c.kappa1(), static_cast<double>(mom.mean), 1e-11);
        EXPECT_NEAR(c.kappa2(), static_cast<double>(mom.c2), 1e-10);
        EXPECT_NEAR(c.kappa3(), static_cast<double>(mom.c3), 1e-9);
    }
}

TEST(ClosedCumulants, UnsupportedCombinationsNameTheFallback) {
    ModelParams lr{ModelKind::LongRangeAllToAll, 10, 1.0, 0.0, 0.1};
    ModelParams ring{ModelKind::NearestNeighborRing, 10, 1.0, 0.2, 0.1};
    auto expect_fallback = [](auto &&call) {
        try {
            call();
            ADD_FAILURE() << "expected UnsupportedError";
        } catch (const UnsupportedError &e) {
            EXPECT_NE(std::string(e.what()).find("numerical_cumulants"), std::string::npos);
        }
    };
    expect_fallback([&] { closed_cumulants(lr, ObservableSpec::kink_number(10)); });
    expect_fallback([&] { closed_cumulants(ring, ObservableSpec::custom(0, 1, {{0}})); });
    expect_fallback([&] { closed_cumulants(ring, ObservableSpec::magnetization(10), CumulantFlavor::NumericalFromF); });
    expect_fallback(
        [&] { closed_cumulants(ring, ObservableSpec::kink_number(10), CumulantFlavor::ExactSmallFormula); });
}

TEST(NumericalCumulants, PointMass) {
    ModelParams m{ModelKind::NearestNeighborRing, 6, 1.0, 0.0, 1.0};
    CharFunctionSamples f;
    f.model = m;
    f.observable = ObservableSpec::magnetization(6);
    auto grid = build_theta_grid(f.observable, 6);
    f.theta = grid.theta;
    for (double t : grid.theta) {
        f.values.push_back(std::polar(1.0, 4.0 * t));
    }
    auto c = numerical_cumulants(f, 3);
    EXPECT_NEAR(c.kappa1(), 4.0, 1e-12);
    EXPECT_NEAR(c.kappa2(), 0.0, 1e-12);
    EXPECT_NEAR(c.kappa3(), 0.0, 1e-12);
    EXPECT_EQ(c.flavor, CumulantFlavor::NumericalFromF);
}

TEST(NumericalCumulants, MeanMatchesOracle) {
    ModelParams m{ModelKind::NearestNeighborRing, 12, 1.0, 0.3, 1.0};
    auto c = numeric(m, ObservableSpec::magnetization(12));
    auto mom = oracle::moments(oracle::brute_force(m.kind, 12, 1.0, 0.3, 1.0, oracle::Obs::M));
    EXPECT_NEAR(c.kappa1(), static_cast<double>(mom.mean), 1e-9);
    EXPECT_NEAR(c.kappa2(), static_cast<double>(mom.c2), 1e-9);
    EXPECT_NEAR(c.kappa3(), static_cast<double>(mom.c3), 1e-8);
}

TEST(NumericalCumulants, MatchClosedFormsAtFiftySpins) {
    ModelParams m{ModelKind::NearestNeighborRing, 50, 1.0, 0.2, 1.0};
    auto obs = ObservableSpec::magnetization(50);
    auto closed = closed_cumulants(m, obs);
    auto num = numeric(m, obs);
    for (int j = 0; j < 3; ++j) {
        EXPECT_LT(relative(num.kappa[static_cast<std::size_t>(j)], closed.kappa[static_cast<std::size_t>(j)]), 1e-6)
            << j + 1;
    }
}

TEST(NumericalCumulants, RejectsUnnormalizedSamples) {
    ModelParams m{ModelKind::NearestNeighborRing, 4, 1.0, 0.0, 1.0};
    auto obs = ObservableSpec::magnetization(4);
    auto f = charfunc_samples(m, obs, build_theta_grid(obs, 4).theta);
    f.values[0] *= 0.9;
    EXPECT_THROW(numerical_cumulants(f, 3), InputError);
    EXPECT_THROW(numerical_cumulants(CharFunctionSamples{}, 3), InputError);
}

TEST(DistributionCumulants, HigherOrdersOfTwoPointLaw) {
    Distribution d;
    d.support = {-1, 0, 1};
    d.probs = {0.5, 0.0, 0.5};
    auto k = distribution_cumulants(d, 4);
    ASSERT_EQ(k.size(), 4u);
    EXPECT_NEAR(k[0], 0.0, 1e-15);
    EXPECT_NEAR(k[1], 1.0, 1e-15);
    EXPECT_NEAR(k[2], 0.0, 1e-15);
    EXPECT_NEAR(k[3], -2.0, 1e-15);
    EXPECT_THROW(distribution_cumulants(d, 0), InputError);
}

TEST(DistributionCumulants, PoissonLikeShift) {
    // Cumulants above the first are shift invariant.
    Distribution a;
    a.support = {0, 1, 2, 3};
    a.probs = {0.1, 0.2, 0.3, 0.4};
    Distribution b = a;
    b.support = {10, 11, 12, 13};
    auto ka = distribution_cumulants(a, 5);
    auto kb = distribution_cumulants(b, 5);
    EXPECT_NEAR(kb[0] - ka[0], 10.0, 1e-12);
    for (int j = 1; j < 5; ++j) {
        EXPECT_NEAR(ka[static_cast<std::size_t>(j)], kb[static_cast<std::size_t>(j)], 1e-10);
    }
}

// Properties

TEST(CumulantProperty, ClosedFormsScaleLinearly) {
    std::mt19937_64 rng(41);
    std::uniform_real_distribution<double> u(-1.5, 1.5);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 10 + trial * 13;
        ModelParams m{ModelKind::NearestNeighborRing, n, u(rng), u(rng), 1.0};
        ModelParams m2 = m;
        m2.n = 2 * n;
        for (auto kind : {ObservableKind::Magnetization, ObservableKind::KinkNumber}) {
            auto obs = [&](int k) {
                return kind == ObservableKind::Magnetization ? ObservableSpec::magnetization(k)
                                                              : ObservableSpec::kink_number(k);
            };
            auto a = closed_cumulants(m, obs(n));
            auto b = closed_cumulants(m2, obs(2 * n));
            for (int j = 0; j < 3; ++j) {
                double x = a.kappa[static_cast<std::size_t>(j)];
                double y = b.kappa[static_cast<std::size_t>(j)];
                if (x == 0.0) {
                    EXPECT_EQ(y, 0.0);
                } else {
                    EXPECT_LT(relative(y / x, 2.0), 1e-9);
                }
            }
        }
    }
}

TEST(CumulantProperty, VarianceIsNonNegative) {
    std::mt19937_64 rng(43);
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    for (int trial = 0; trial < 200; ++trial) {
        ModelParams m{ModelKind::NearestNeighborRing, 40, u(rng), u(rng), 1.0};
        EXPECT_GE(closed_cumulants(m, ObservableSpec::magnetization(40)).kappa2(), 0.0);
        EXPECT_GE(closed_cumulants(m, ObservableSpec::kink_number(40)).kappa2(), 0.0);
    }
}

}  // namespace
}  // namespace kinkprobe
