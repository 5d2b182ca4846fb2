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

#include "kinkprobe/partition.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "kinkprobe/errors.h"

namespace kinkprobe {

cdouble ScaledComplex::value() const { return mantissa * std::exp(log_scale); }

double ScaledComplex::log_abs() const { return std::log(std::abs(mantissa)) + log_scale; }

cdouble ratio(const ScaledComplex &num, const ScaledComplex &den) {
    if (num.mantissa == cdouble{0.0, 0.0}) {
        return {0.0, 0.0};
    }
    return num.mantissa / den.mantissa * std::exp(num.log_scale - den.log_scale);
}

ComplexParams ComplexParams::from_model(const ModelParams &model) {
    return ComplexParams{cdouble{model.j, 0.0}, cdouble{model.h, 0.0}, model.beta, model.n};
}

namespace {

struct Scaled {
    cdouble m;
    double l;
};

Scaled operator*(const Scaled &x, const Scaled &y) { return {x.m * y.m, x.l + y.l}; }

Scaled add(const Scaled &x, const Scaled &y, double sign) {
    double l = std::max(x.l, y.l);
    return {x.m * std::exp(x.l - l) + sign * y.m * std::exp(y.l - l), l};
}

Scaled exp_scaled(cdouble z) { return {std::polar(1.0, z.imag()), z.real()}; }

// Below this |Re z| the library cosh/sinh are used directly (more accurate near 0).
constexpr double kDirectHyperbolic = 350.0;

Scaled cosh_scaled(cdouble z) {
    double r = std::abs(z.real());
    if (r < kDirectHyperbolic) {
        return {std::cosh(z), 0.0};
    }
    return {0.5 * (std::exp(z - r) + std::exp(-z - r)), r};
}

Scaled sinh_scaled(cdouble z) {
    double r = std::abs(z.real());
    if (r < kDirectHyperbolic) {
        return {std::sinh(z), 0.0};
    }
    return {0.5 * (std::exp(z - r) - std::exp(-z - r)), r};
}

cdouble ipow(cdouble base, unsigned exponent) {
    cdouble result{1.0, 0.0};
    while (exponent) {
        if (exponent & 1u) {
            result *= base;
        }
        base *= base;
        exponent >>= 1;
    }
    return result;
}

void require_positive_beta(double beta) {
    if (!(beta > 0.0)) {
        throw InputError("partition engines need beta > 0");
    }
}

}  // namespace

TransferSpectrum transfer_spectrum(const ComplexParams &p, SqrtBranch branch) {
    require_positive_beta(p.beta);
    const cdouble a = p.beta_j();
    const cdouble b = p.beta_h();

    Scaled first = exp_scaled(a) * cosh_scaled(b);

    Scaled sh = sinh_scaled(b);
    Scaled inner = exp_scaled(4.0 * a) * Scaled{sh.m * sh.m, 2.0 * sh.l};
    // 1 + inner, keeping the positive real factor outside so the principal
    // branch of the square root is unchanged.
    Scaled radicand = inner.l > 0.0 ? Scaled{std::exp(-inner.l) + inner.m, inner.l}
                                    : Scaled{1.0 + inner.m * std::exp(inner.l), 0.0};
    Scaled root{std::sqrt(radicand.m), 0.5 * radicand.l};
    if (branch == SqrtBranch::Negated) {
        root.m = -root.m;
    }
    Scaled second = exp_scaled(-a) * root;

    Scaled plus = add(first, second, +1.0);
    Scaled minus = add(first, second, -1.0);
    double l = std::max(plus.l, minus.l);
    return TransferSpectrum{minus.m * std::exp(minus.l - l), plus.m * std::exp(plus.l - l), l};
}

ScaledComplex partition_nn(const ComplexParams &p, SqrtBranch branch) {
    if (p.n < 1) {
        throw InputError("partition_nn needs N >= 1");
    }
    TransferSpectrum s = transfer_spectrum(p, branch);
    cdouble dominant = s.lambda_plus;
    cdouble other = s.lambda_minus;
    if (std::abs(other) > std::abs(dominant)) {
        std::swap(dominant, other);
    }
    double mag = std::abs(dominant);
    if (mag == 0.0) {
        return {};
    }
    const unsigned n = static_cast<unsigned>(p.n);
    // Z = d^N (1 + (o/d)^N), with d^N split into phase and log-magnitude.
    cdouble phase = ipow(dominant / mag, n);
    cdouble correction = 1.0 + ipow(other / dominant, n);
    return ScaledComplex{phase * correction, p.n * (s.log_scale + std::log(mag))};
}

ScaledComplex partition_longrange(const ComplexParams &p) {
    require_positive_beta(p.beta);
    if (p.n < 1) {
        throw InputError("partition_longrange needs N >= 1");
    }
    const int n = p.n;
    const cdouble a = p.beta_j();
    const cdouble b = p.beta_h();
    const double lg_n = std::lgamma(n + 1.0);

    std::vector<cdouble> log_terms(static_cast<std::size_t>(n + 1));
    double shift = -std::numeric_limits<double>::infinity();
    for (int downs = 0; downs <= n; ++downs) {
        double mag = n - 2.0 * downs;
        double log_binom = lg_n - std::lgamma(downs + 1.0) - std::lgamma(n - downs + 1.0);
        cdouble lt = log_binom + a * ((mag * mag - n) / 2.0) + b * mag;
        log_terms[static_cast<std::size_t>(downs)] = lt;
        shift = std::max(shift, lt.real());
    }
    cdouble sum{0.0, 0.0};
    for (const cdouble &lt : log_terms) {
        sum += std::exp(lt - shift);
    }
    return ScaledComplex{sum, shift};
}

ScaledComplex partition_longrange(int n, double j, cdouble ht, double beta) {
    return partition_longrange(ComplexParams{cdouble{j, 0.0}, ht, beta, n});
}

ScaledComplex partition(ModelKind kind, const ComplexParams &p) {
    return kind == ModelKind::NearestNeighborRing ? partition_nn(p) : partition_longrange(p);
}

cdouble loschmidt_amplitude(const ModelParams &model, double t) {
    model.validate();
    // beta J -> (beta + i t) J, written so that beta * jt reproduces beta J bit-for-bit at t = 0.
    const cdouble stretch{1.0, t / model.beta};
    ComplexParams evolved{model.j * stretch, model.h * stretch, model.beta, model.n};
    ComplexParams physical = ComplexParams::from_model(model);
    return ratio(partition(model.kind, evolved), partition(model.kind, physical));
}

}  // namespace kinkprobe
