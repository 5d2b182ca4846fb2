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

#ifndef KINKPROBE_PARTITION_H
#define KINKPROBE_PARTITION_H

#include <complex>

#include "kinkprobe/spin_model.h"

namespace kinkprobe {

using cdouble = std::complex<double>;

/// A complex number stored as mantissa * exp(log_scale).
///
/// Partition functions routinely exceed the double range, so every engine
/// returns this form and callers take ratios before exponentiating.
struct ScaledComplex {
    cdouble mantissa{0.0, 0.0};
    double log_scale = 0.0;

    /// May overflow; prefer ratio() or log_abs().
    cdouble value() const;
    double log_abs() const;
};

/// num / den, subtracting log scales first.
cdouble ratio(const ScaledComplex &num, const ScaledComplex &den);

/// Analytically continued couplings. Engines only ever use beta * jt and beta * ht.
struct ComplexParams {
    cdouble jt{1.0, 0.0};
    cdouble ht{0.0, 0.0};
    double beta = 1.0;
    int n = 1;

    static ComplexParams from_model(const ModelParams &model);
    cdouble beta_j() const { return beta * jt; }
    cdouble beta_h() const { return beta * ht; }
};

/// Eigenvalues of the 2x2 ring transfer matrix, sharing one exp(log_scale) factor.
struct TransferSpectrum {
    cdouble lambda_minus;
    cdouble lambda_plus;
    double log_scale = 0.0;
};

/// Which square root is taken in the eigenvalue formula. Negated swaps lambda+ and lambda-.
enum class SqrtBranch { Principal, Negated };

/// lambda_{+-} = e^{bJ} cosh(bh) +- e^{-bJ} sqrt(1 + e^{4bJ} sinh^2(bh)), b = beta.
///
/// Overflow-free for |beta J|, |beta h| up to ~700.
TransferSpectrum transfer_spectrum(const ComplexParams &p, SqrtBranch branch = SqrtBranch::Principal);

/// Z = lambda_-^N + lambda_+^N for the periodic nearest-neighbour chain.
ScaledComplex partition_nn(const ComplexParams &p, SqrtBranch branch = SqrtBranch::Principal);

/// All-to-all model, summed over the number of down spins in the log domain.
ScaledComplex partition_longrange(int n, double j, cdouble ht, double beta);
/// Same, with a complex coupling as well (used for complex inverse temperature).
ScaledComplex partition_longrange(const ComplexParams &p);

/// Dispatches on the model kind.
ScaledComplex partition(ModelKind kind, const ComplexParams &p);

/// Survival amplitude Z(beta + it) / Z(beta) of the thermally weighted superposition.
cdouble loschmidt_amplitude(const ModelParams &model, double t);

}  // namespace kinkprobe

#endif
