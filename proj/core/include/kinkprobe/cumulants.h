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

#ifndef KINKPROBE_CUMULANTS_H
#define KINKPROBE_CUMULANTS_H

#include <string_view>
#include <vector>

#include "kinkprobe/charfunc.h"
#include "kinkprobe/distribution.h"
#include "kinkprobe/spin_model.h"

namespace kinkprobe {

enum class CumulantFlavor {
    /// Leading-eigenvalue approximation; error O((lambda-/lambda+)^N).
    ClosedLargeN,
    /// Exact at finite N: the zero-field ring kink mean, and the long-range
    /// magnetization sums over g(n).
    ExactSmallFormula,
    /// Moments of a reconstructed distribution.
    NumericalFromF,
};

std::string_view to_string(CumulantFlavor f);

struct CumulantSet {
    /// kappa[0] is the mean, kappa[1] the variance, kappa[2] the third cumulant, ...
    std::vector<double> kappa;
    CumulantFlavor flavor = CumulantFlavor::ClosedLargeN;

    double kappa1() const { return kappa.at(0); }
    double kappa2() const { return kappa.at(1); }
    double kappa3() const { return kappa.at(2); }
};

/// Ring-model shorthands at the physical (undeformed) couplings.
struct CumulantContext {
    double u = 1.0;  // sqrt(1 + e^{4bJ} sinh^2 bh)
    double v = 0.0;  // 1 - e^{4bJ} (2 + cosh 2bh)
    double w = 1.0;  // 1 - 8 e^{8bJ} sinh^4 bh
    double lambda_plus = 0.0;
    double lambda_minus = 0.0;

    static CumulantContext from_model(const ModelParams &model);
};

/// Closed-form cumulants.
///
/// Ring, magnetization or kinks: kappa1..3 in the large-N approximation.
/// Ring, kinks, h = 0, ExactSmallFormula: the exact finite-N mean only.
/// Long range, magnetization: exact kappa1..3 from G_alpha = sum n^alpha g(n)
/// (tagged ExactSmallFormula whatever flavor was requested).
/// Anything else raises UnsupportedError pointing at numerical_cumulants.
CumulantSet closed_cumulants(const ModelParams &model, const ObservableSpec &obs,
                             CumulantFlavor flavor = CumulantFlavor::ClosedLargeN);

/// Cumulants kappa_1..kappa_max_order of a distribution, via moments about the mean.
std::vector<double> distribution_cumulants(const Distribution &dist, int max_order);

/// Reconstructs P(x) from F (which must satisfy F(0) = 1) and returns its cumulants.
CumulantSet numerical_cumulants(const CharFunctionSamples &f, int max_order);

}  // namespace kinkprobe

#endif
