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

#include "kinkprobe/reconstruct.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "kinkprobe/cumulants.h"
#include "kinkprobe/errors.h"

namespace kinkprobe {

ThetaGrid build_theta_grid(const ObservableSpec &obs, int n, std::optional<int> points) {
    if (n < 1) {
        throw InputError("build_theta_grid needs N >= 1");
    }
    obs.validate_for(n);
    auto [lo, hi] = obs.integer_bounds();
    const int minimal = hi - lo + 1;
    const int count = points.value_or(minimal);
    if (count < minimal) {
        throw InputError("theta grid of " + std::to_string(count) + " points aliases a support of width " +
                         std::to_string(minimal));
    }
    ThetaGrid grid{lo, hi, count, std::vector<double>(static_cast<std::size_t>(count))};
    for (int j = 0; j < count; ++j) {
        grid.theta[static_cast<std::size_t>(j)] = 2.0 * std::numbers::pi * j / count;
    }
    return grid;
}

namespace {

constexpr double kGridTolerance = 1e-9;

// Checks that theta_j * stretch equals 2 pi j / M for the samples' own size M.
ThetaGrid checked_grid(const CharFunctionSamples &f, double stretch) {
    if (f.values.size() != f.theta.size()) {
        throw InputError("theta grid and F values differ in length");
    }
    ThetaGrid grid = build_theta_grid(f.observable, f.model.n, static_cast<int>(f.theta.size()));
    for (std::size_t j = 0; j < f.theta.size(); ++j) {
        if (std::abs(f.theta[j] * stretch - grid.theta[j]) > kGridTolerance) {
            throw InputError("F samples are not on the uniform theta grid (index " + std::to_string(j) + ")");
        }
    }
    return grid;
}

// Phases are looked up by (x j) mod M so no large angle is ever formed.
Distribution fourier_inverse(const CharFunctionSamples &f, const ThetaGrid &grid, const char *method) {
    const int m_pts = grid.points;
    std::vector<cdouble> roots(static_cast<std::size_t>(m_pts));
    for (int q = 0; q < m_pts; ++q) {
        roots[static_cast<std::size_t>(q)] = std::polar(1.0, -2.0 * std::numbers::pi * q / m_pts);
    }
    Distribution dist;
    dist.meta = DistributionMeta{f.observable.kind, f.model.kind, f.model.n, method};
    for (int x = grid.x_min; x <= grid.x_max; ++x) {
        int step = ((x % m_pts) + m_pts) % m_pts;
        int q = 0;
        cdouble acc{0.0, 0.0};
        for (int j = 0; j < m_pts; ++j) {
            acc += f.values[static_cast<std::size_t>(j)] * roots[static_cast<std::size_t>(q)];
            q += step;
            if (q >= m_pts) {
                q -= m_pts;
            }
        }
        acc /= static_cast<double>(m_pts);
        dist.support.push_back(x);
        dist.probs.push_back(acc.real());
        dist.residual_imag = std::max(dist.residual_imag, std::abs(acc.imag()));
    }
    return dist;
}

}  // namespace

Distribution invert_dft(const CharFunctionSamples &f) {
    return fourier_inverse(f, checked_grid(f, 1.0), "dft");
}

Distribution invert_with_gate_error(const CharFunctionSamples &f, double eta) {
    GateErrorModel{eta}.validate();
    return fourier_inverse(f, checked_grid(f, 1.0 + eta), eta == 0.0 ? "dft" : "dft-eta-corrected");
}

double estimate_gate_error(const ProbeRecord &record) {
    const std::size_t count = record.time_grid.size();
    if (count < 3 || record.sx.size() != count || record.sy.size() != count) {
        throw EstimationError("record too short to estimate a period");
    }
    if (!(record.epsilon > 0.0)) {
        throw InputError("record needs epsilon > 0");
    }
    std::vector<double> power(count);
    for (std::size_t i = 0; i < count; ++i) {
        power[i] = std::max(record.sx[i] * record.sx[i] + record.sy[i] * record.sy[i], 1e-300);
    }

    constexpr double kThreshold = 0.25;
    std::size_t i = 0;
    while (i < count && power[i] >= kThreshold) {
        ++i;
    }
    if (i == count) {
        throw EstimationError("coherence never decays within the record; no detectable period");
    }
    while (i < count && power[i] < kThreshold) {
        ++i;
    }
    if (i == count) {
        throw EstimationError("coherence never recovers within the record; no detectable period");
    }
    std::size_t peak = i;
    while (peak + 1 < count && power[peak + 1] >= power[peak]) {
        ++peak;
    }
    if (peak + 1 >= count) {
        throw EstimationError("recurrence peak sits on the end of the record");
    }

    const double x0 = record.time_grid[peak - 1];
    const double x1 = record.time_grid[peak];
    const double x2 = record.time_grid[peak + 1];
    const double y0 = std::log(power[peak - 1]);
    const double y1 = std::log(power[peak]);
    const double y2 = std::log(power[peak + 1]);
    const double num = (x1 - x0) * (x1 - x0) * (y1 - y2) - (x1 - x2) * (x1 - x2) * (y1 - y0);
    const double den = (x1 - x0) * (y1 - y2) - (x1 - x2) * (y1 - y0);
    const double t_peak = den != 0.0 ? x1 - 0.5 * num / den : x1;

    const double theta_measured = 2.0 * record.epsilon * t_peak;
    const double divisions = std::max(1.0, std::round(2.0 * std::numbers::pi / theta_measured));
    return (2.0 * std::numbers::pi / divisions) / theta_measured - 1.0;
}

Distribution gaussian_approx(const ModelParams &model) {
    if (model.kind != ModelKind::NearestNeighborRing) {
        throw UnsupportedError("gaussian_approx is defined for the ring magnetization only");
    }
    CumulantSet c = closed_cumulants(model, ObservableSpec::magnetization(model.n));
    Distribution dist;
    dist.meta = DistributionMeta{ObservableKind::Magnetization, model.kind, model.n, "gaussian"};
    double total = 0.0;
    for (int m = -model.n; m <= model.n; ++m) {
        double p = 0.0;
        if ((m + model.n) % 2 == 0) {
            double d = m - c.kappa1();
            p = std::exp(-d * d / (2.0 * c.kappa2()));
        }
        dist.support.push_back(m);
        dist.probs.push_back(p);
        total += p;
    }
    for (double &p : dist.probs) {
        p /= total;
    }
    return dist;
}

double ValidationReport::worst() const {
    return std::max({normalization_defect, -most_negative, parity_violation, residual_imag});
}

ValidationReport validate_distribution(const Distribution &dist) {
    ValidationReport r;
    r.normalization_defect = std::abs(dist.total() - 1.0);
    r.residual_imag = dist.residual_imag;
    for (std::size_t i = 0; i < dist.size(); ++i) {
        const double p = dist.probs[i];
        const int x = dist.support[i];
        r.most_negative = std::min(r.most_negative, p);
        bool forbidden = false;
        if (dist.meta.observable == ObservableKind::Magnetization) {
            forbidden = ((x - dist.meta.n) % 2) != 0;
        } else if (dist.meta.observable == ObservableKind::KinkNumber) {
            forbidden = (x % 2) != 0;
        }
        if (forbidden) {
            r.parity_violation += std::abs(p);
        }
    }
    return r;
}

Distribution sanitize(const Distribution &dist) {
    Distribution out = dist;
    double total = 0.0;
    for (double &p : out.probs) {
        p = std::max(p, 0.0);
        total += p;
    }
    if (total > 0.0) {
        for (double &p : out.probs) {
            p /= total;
        }
    }
    return out;
}

cdouble charfunc_from_distribution(const Distribution &dist, double theta) {
    cdouble acc{0.0, 0.0};
    for (std::size_t i = 0; i < dist.size(); ++i) {
        acc += dist.probs[i] * std::polar(1.0, theta * dist.support[i]);
    }
    return acc;
}

}  // namespace kinkprobe
