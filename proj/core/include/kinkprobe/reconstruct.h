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

#ifndef KINKPROBE_RECONSTRUCT_H
#define KINKPROBE_RECONSTRUCT_H

#include <optional>
#include <vector>

#include "kinkprobe/charfunc.h"
#include "kinkprobe/distribution.h"
#include "kinkprobe/probe_record.h"
#include "kinkprobe/spin_model.h"

namespace kinkprobe {

/// Uniform grid theta_j = 2 pi j / points on [0, 2 pi).
///
/// With points >= hi - lo + 1 the finite Fourier sum recovers every P(x) on
/// [lo, hi] exactly.
struct ThetaGrid {
    int x_min = 0;
    int x_max = 0;
    int points = 0;
    std::vector<double> theta;
};

/// Minimal alias-free grid for the observable's integer window: 2N+1 points
/// for the magnetization, N+1 for kinks. An override must be at least that
/// large.
ThetaGrid build_theta_grid(const ObservableSpec &obs, int n, std::optional<int> points = std::nullopt);

/// P(x) = (1/M) sum_j F(theta_j) e^{-i x theta_j} over the observable's window.
/// The samples must lie on a uniform grid built by build_theta_grid.
Distribution invert_dft(const CharFunctionSamples &f);

/// Discretized revised transform for gate error eta.
///
/// Samples taken with rotation angle eps' = (1+eta) eps at nominal phases
/// theta_j carry F(theta_j (1+eta)); the effective phases must form the
/// uniform grid. eta = 0 gives exactly invert_dft's output.
Distribution invert_with_gate_error(const CharFunctionSamples &f, double eta);

/// Recovers eta from the stretched recurrence period of the probe coherence.
///
/// Uses |F(t)|, which returns to 1 at the first theta where every allowed x
/// is in phase. The peak is refined by a parabola through log |F|^2, and
/// the ideal recurrence is taken to be the nearest 2 pi / g. Throws
/// EstimationError when the signal never decays and recovers in the span.
double estimate_gate_error(const ProbeRecord &record);

/// P(m) ~ exp(-(m - kappa1)^2 / (2 kappa2)) on the parity-allowed magnetizations of the ring.
Distribution gaussian_approx(const ModelParams &model);

struct ValidationReport {
    double normalization_defect = 0.0;  // |sum p - 1|
    double most_negative = 0.0;         // min(0, min p)
    double parity_violation = 0.0;      // probability on forbidden-parity support points
    double residual_imag = 0.0;
    /// Largest of the four defects.
    double worst() const;
};

ValidationReport validate_distribution(const Distribution &dist);

/// Clips negative probabilities to zero and renormalizes.
Distribution sanitize(const Distribution &dist);

/// F(theta) = sum_x P(x) e^{i theta x}.
cdouble charfunc_from_distribution(const Distribution &dist, double theta);

}  // namespace kinkprobe

#endif
