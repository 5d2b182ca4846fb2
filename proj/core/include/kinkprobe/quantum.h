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

#ifndef KINKPROBE_QUANTUM_H
#define KINKPROBE_QUANTUM_H

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kinkprobe/partition.h"
#include "kinkprobe/spin_model.h"

namespace kinkprobe {

/// Largest system size for dense registers and thermal basis ensembles.
inline constexpr int kMaxQuantumSpins = 14;
/// Largest system size for the dense-matrix Trotter error probe.
inline constexpr int kMaxTrotterSpins = 6;

/// Dense state of the ancilla plus N system qubits.
///
/// Basis index: bit i (i < N) set means system qubit i is |down> (spin -1);
/// bit N is the ancilla, 0 for |up>.
///
/// Quantum-scheme readout: the controlled phase acts on the ancilla |up>
/// branch, then a Hadamard maps the coherence onto (<sz>, <sy>) = (Re F, Im F).
/// The classical scheme (ProbeRecord) reads the same F from (<sx>, <sy>)
/// because it has no final Hadamard.
class QuantumRegister {
   public:
    /// Throws InputError unless amplitudes.size() == 2^{n+1} and the norm is 1 within 1e-12.
    /// n = 0 is a bare ancilla.
    QuantumRegister(int n, std::vector<cdouble> amplitudes);

    /// |+> (ancilla) tensor the given normalized system state of length 2^n.
    static QuantumRegister with_probe(int n, const std::vector<cdouble> &system);
    /// |+> tensor |config>.
    static QuantumRegister with_probe(const SpinConfig &config);

    int n() const { return n_; }
    const std::vector<cdouble> &amplitudes() const { return amp_; }
    double norm() const;

    void hadamard_ancilla();
    /// Multiplies the ancilla-|up> amplitude of system basis state s by factor[s].
    /// Factors must have unit modulus.
    void controlled_diagonal(const std::vector<cdouble> &factor);
    double ancilla_z() const;
    double ancilla_y() const;

   private:
    int n_;
    std::vector<cdouble> amp_;
};

/// Diagonal mixed state sum_s p_s |s><s| of N system qubits.
struct BasisEnsemble {
    int n = 0;
    std::vector<double> probs;  // length 2^n, same bit convention as QuantumRegister

    /// Canonical state e^{-beta H} / Z of the classical model; N <= kMaxQuantumSpins.
    static BasisEnsemble thermal(const ModelParams &model);
    /// Throws InputError unless probabilities are non-negative and sum to 1 within 1e-12.
    void validate() const;
};

/// Ancilla expectations after the controlled evolution and the Hadamard.
struct AncillaReadout {
    double re_f = 0.0;  // <sz>
    double im_f = 0.0;  // <sy>
};

/// X = a + b sum_k P_k with each P_k a Pauli string over {I, X, Y, Z}.
///
/// String position i acts on system qubit i.
struct PauliObservable {
    int n = 0;
    double a = 0.0;
    double b = 1.0;
    std::vector<std::string> terms;

    bool is_diagonal() const;
    /// Z-type strings for each product term; repeated indices cancel.
    static PauliObservable from_z_observable(const ObservableSpec &obs, int n);
    /// Inverse of from_z_observable; throws UnsupportedError for non-diagonal strings.
    ObservableSpec to_z_observable() const;
    /// Throws InputError for wrong string lengths or letters.
    void validate() const;
};

/// XX on each open-chain bond plus Z on every site; its terms do not commute.
PauliObservable noncommuting_test_observable(int n);

/// Applies the ancilla-controlled e^{i theta X} (exactly, or as an m-fold
/// product of per-term exponentials), the Hadamard, and reads the ancilla.
///
/// The register must hold the ancilla in |+> for the readout to equal F.
/// Throws SizeError for N > kMaxQuantumSpins.
AncillaReadout quantum_probe(const QuantumRegister &reg, const ObservableSpec &obs, double theta,
                             std::optional<int> trotter_steps = std::nullopt);
/// Non-diagonal observables raise UnsupportedError.
AncillaReadout quantum_probe(const QuantumRegister &reg, const PauliObservable &obs, double theta,
                             std::optional<int> trotter_steps = std::nullopt);

/// Mixed-state version. Each |s> spans an invariant two-dimensional block
/// with the ancilla, so the register is evolved block by block and the
/// readouts are averaged with weights p_s.
AncillaReadout quantum_probe(const BasisEnsemble &ensemble, const ObservableSpec &obs, double theta,
                             std::optional<int> trotter_steps = std::nullopt);

/// Operator-norm distance between e^{i theta X} and (e^{i theta a / m} prod_k e^{i theta b P_k / m})^m.
///
/// Throws SizeError for N > kMaxTrotterSpins and InputError for m < 1.
double trotter_error_probe(const PauliObservable &obs, double theta, int m);

}  // namespace kinkprobe

#endif
