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

#include "kinkprobe/cumulants.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "kinkprobe/errors.h"
#include "kinkprobe/reconstruct.h"

namespace kinkprobe {

std::string_view to_string(CumulantFlavor f) {
    switch (f) {
        case CumulantFlavor::ClosedLargeN:
            return "closed-large-n";
        case CumulantFlavor::ExactSmallFormula:
            return "exact-finite-n";
        case CumulantFlavor::NumericalFromF:
            return "numerical-from-f";
    }
    return "?";
}

CumulantContext CumulantContext::from_model(const ModelParams &model) {
    const double a = model.beta * model.j;
    const double b = model.beta * model.h;
    const double sh = std::sinh(b);
    CumulantContext c;
    c.u = std::sqrt(1.0 + std::exp(4.0 * a) * sh * sh);
    c.v = 1.0 - std::exp(4.0 * a) * (2.0 + std::cosh(2.0 * b));
    c.w = 1.0 - 8.0 * std::exp(8.0 * a) * sh * sh * sh * sh;
    c.lambda_plus = std::exp(a) * std::cosh(b) + std::exp(-a) * c.u;
    c.lambda_minus = std::exp(a) * std::cosh(b) - std::exp(-a) * c.u;
    return c;
}

namespace {

[[noreturn]] void unsupported(const ModelParams &model, const ObservableSpec &obs, CumulantFlavor flavor) {
    throw UnsupportedError("no closed-form cumulants (" + std::string(to_string(flavor)) + ") for " +
                           std::string(to_string(model.kind)) + "/" + std::string(to_string(obs.kind)) +
                           "; use numerical_cumulants");
}

CumulantSet ring_magnetization(const ModelParams &model) {
    const double n = model.n;
    const double a = model.beta * model.j;
    const double b = model.beta * model.h;
    const CumulantContext c = CumulantContext::from_model(model);
    const double e2 = std::exp(2.0 * a);
    return CumulantSet{{n * e2 * std::sinh(b) / c.u,
                        n * e2 * std::cosh(b) / std::pow(c.u, 3),
                        n * c.v * e2 * std::sinh(b) / std::pow(c.u, 5)},
                       CumulantFlavor::ClosedLargeN};
}

CumulantSet ring_kinks(const ModelParams &model) {
    const double n = model.n;
    const double a = model.beta * model.j;
    const double b = model.beta * model.h;
    const CumulantContext c = CumulantContext::from_model(model);
    const double lp = c.lambda_plus;
    const double sh = std::sinh(b);
    const double ch = std::cosh(b);
    double k1 = n / (c.u * lp * std::exp(a));
    double k2 = n * (ch + 2.0 * std::exp(3.0 * a) * sh * sh * lp) / (std::pow(c.u, 3) * lp * lp);
    double bracket = 5.0 * std::exp(2.0 * a) - (2.0 + c.w) * std::exp(2.0 * a) * std::cosh(2.0 * b) -
                     2.0 * c.u * c.w * ch + 4.0 * (c.u * c.u - 1.0) * c.lambda_minus * std::exp(a) * ch;
    double k3 = n * std::exp(-a) * bracket / (2.0 * std::pow(c.u, 5) * lp * lp * lp);
    return CumulantSet{{k1, k2, k3}, CumulantFlavor::ClosedLargeN};
}

// <K> = (N/2) e^{-bJ} [cosh^{N-1} - sinh^{N-1}] / [cosh^N + sinh^N], divided through by cosh^N.
CumulantSet ring_kinks_exact_mean(const ModelParams &model) {
    const double n = model.n;
    const double a = model.beta * model.j;
    const double t = std::tanh(a);
    double mean = 0.5 * n * std::exp(-a) * (1.0 - std::pow(t, n - 1.0)) / (std::cosh(a) * (1.0 + std::pow(t, n)));
    return CumulantSet{{mean}, CumulantFlavor::ExactSmallFormula};
}

// g(n) = C(N,n) e^{-2bh n} e^{2bJ (n^2 - N n)}, n = number of down spins.
CumulantSet longrange_magnetization(const ModelParams &model) {
    const int n = model.n;
    const double a = model.beta * model.j;
    const double b = model.beta * model.h;
    const double lg_n = std::lgamma(n + 1.0);
    std::vector<double> log_g(static_cast<std::size_t>(n + 1));
    double shift = -std::numeric_limits<double>::infinity();
    for (int d = 0; d <= n; ++d) {
        double lg = lg_n - std::lgamma(d + 1.0) - std::lgamma(n - d + 1.0) - 2.0 * b * d +
                    2.0 * a * (static_cast<double>(d) * d - static_cast<double>(n) * d);
        log_g[static_cast<std::size_t>(d)] = lg;
        shift = std::max(shift, lg);
    }
    double g0 = 0.0;
    double g1 = 0.0;
    for (int d = 0; d <= n; ++d) {
        double g = std::exp(log_g[static_cast<std::size_t>(d)] - shift);
        g0 += g;
        g1 += d * g;
    }
    const double mean = g1 / g0;
    // G2/G0 - (G1/G0)^2 and the third-order combination, as central moments.
    double c2 = 0.0;
    double c3 = 0.0;
    for (int d = 0; d <= n; ++d) {
        double g = std::exp(log_g[static_cast<std::size_t>(d)] - shift) / g0;
        double dev = d - mean;
        c2 += dev * dev * g;
        c3 += dev * dev * dev * g;
    }
    return CumulantSet{{n - 2.0 * mean, 4.0 * c2, -8.0 * c3}, CumulantFlavor::ExactSmallFormula};
}

}  // namespace

CumulantSet closed_cumulants(const ModelParams &model, const ObservableSpec &obs, CumulantFlavor flavor) {
    model.validate();
    if (flavor == CumulantFlavor::NumericalFromF || obs.kind == ObservableKind::Custom) {
        unsupported(model, obs, flavor);
    }
    if (model.kind == ModelKind::LongRangeAllToAll) {
        if (obs.kind == ObservableKind::Magnetization) {
            return longrange_magnetization(model);
        }
        unsupported(model, obs, flavor);
    }
    if (flavor == CumulantFlavor::ExactSmallFormula) {
        if (obs.kind == ObservableKind::KinkNumber && model.h == 0.0) {
            return ring_kinks_exact_mean(model);
        }
        unsupported(model, obs, flavor);
    }
    return obs.kind == ObservableKind::Magnetization ? ring_magnetization(model) : ring_kinks(model);
}

std::vector<double> distribution_cumulants(const Distribution &dist, int max_order) {
    if (max_order < 1) {
        throw InputError("max_order must be >= 1");
    }
    const double total = dist.total();
    double mean = 0.0;
    for (std::size_t i = 0; i < dist.size(); ++i) {
        mean += dist.support[i] * dist.probs[i];
    }
    mean /= total;

    // Central moments mu[k], k = 0..max_order.
    std::vector<double> mu(static_cast<std::size_t>(max_order) + 1, 0.0);
    for (std::size_t i = 0; i < dist.size(); ++i) {
        double dev = dist.support[i] - mean;
        double p = dist.probs[i] / total;
        double power = 1.0;
        for (int k = 0; k <= max_order; ++k) {
            mu[static_cast<std::size_t>(k)] += power * p;
            power *= dev;
        }
    }
    mu[1] = 0.0;

    // kappa_n = mu_n - sum_{m=1}^{n-1} C(n-1, m-1) kappa_m mu_{n-m}, applied to X - mean.
    std::vector<double> kappa(static_cast<std::size_t>(max_order) + 1, 0.0);
    for (int order = 2; order <= max_order; ++order) {
        double value = mu[static_cast<std::size_t>(order)];
        double binom = 1.0;  // C(order-1, m-1), starting at m = 1
        for (int m = 1; m < order; ++m) {
            value -= binom * kappa[static_cast<std::size_t>(m)] * mu[static_cast<std::size_t>(order - m)];
            binom = binom * (order - m) / m;
        }
        kappa[static_cast<std::size_t>(order)] = value;
    }
    kappa[1] = mean;
    return std::vector<double>(kappa.begin() + 1, kappa.end());
}

CumulantSet numerical_cumulants(const CharFunctionSamples &f, int max_order) {
    if (f.theta.empty() || f.theta.front() != 0.0 || std::abs(f.values.front() - cdouble{1.0, 0.0}) > 1e-9) {
        throw InputError("numerical_cumulants needs normalized samples with F(0) = 1 at theta = 0");
    }
    Distribution dist = invert_dft(f);
    return CumulantSet{distribution_cumulants(dist, max_order), CumulantFlavor::NumericalFromF};
}

}  // namespace kinkprobe
