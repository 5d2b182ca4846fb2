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

#include "kinkprobe/quantum.h"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numbers>

#include "kinkprobe/errors.h"

namespace kinkprobe {

namespace {

constexpr double kNormTolerance = 1e-12;

void check_quantum_size(int n) {
    if (n > kMaxQuantumSpins) {
        throw SizeError("quantum register limited to N <= " + std::to_string(kMaxQuantumSpins) + ", got " +
                        std::to_string(n));
    }
}

// Per-basis-state factor of the controlled evolution, exact or Trotterized.
std::vector<cdouble> evolution_factors(const ObservableSpec &obs, int n, double theta,
                                       std::optional<int> trotter_steps) {
    obs.validate_for(n);
    if (trotter_steps && *trotter_steps < 1) {
        throw InputError("trotter steps must be >= 1");
    }
    const std::size_t dim = std::size_t{1} << n;
    std::vector<cdouble> factor(dim);
    std::vector<int> signs(obs.terms.size());
    for (std::size_t s = 0; s < dim; ++s) {
        long long net = 0;
        for (std::size_t k = 0; k < obs.terms.size(); ++k) {
            int product = 1;
            for (int idx : obs.terms[k]) {
                product *= ((s >> idx) & 1U) ? -1 : 1;
            }
            signs[k] = product;
            net += product;
        }
        if (!trotter_steps) {
            factor[s] = std::polar(1.0, theta * (obs.a + obs.b * static_cast<double>(net)));
            continue;
        }
        const int m = *trotter_steps;
        const cdouble global = std::polar(1.0, theta * obs.a / m);
        const cdouble up = std::polar(1.0, theta * obs.b / m);
        const cdouble down = std::conj(up);
        cdouble f{1.0, 0.0};
        for (int step = 0; step < m; ++step) {
            f *= global;
            for (int sign : signs) {
                f *= sign > 0 ? up : down;
            }
        }
        factor[s] = f;
    }
    return factor;
}

AncillaReadout read_after_hadamard(QuantumRegister reg, const std::vector<cdouble> &factor) {
    reg.controlled_diagonal(factor);
    reg.hadamard_ancilla();
    return AncillaReadout{reg.ancilla_z(), reg.ancilla_y()};
}

using Matrix = Eigen::MatrixXcd;

Matrix pauli_string_matrix(const std::string &term) {
    const int n = static_cast<int>(term.size());
    const Eigen::Index dim = Eigen::Index{1} << n;
    Matrix p = Matrix::Zero(dim, dim);
    for (Eigen::Index s = 0; s < dim; ++s) {
        Eigen::Index target = s;
        cdouble phase{1.0, 0.0};
        for (int i = 0; i < n; ++i) {
            const bool down = ((s >> i) & 1) != 0;
            switch (term[static_cast<std::size_t>(i)]) {
                case 'X':
                    target ^= Eigen::Index{1} << i;
                    break;
                case 'Y':
                    target ^= Eigen::Index{1} << i;
                    phase *= down ? cdouble{0.0, -1.0} : cdouble{0.0, 1.0};
                    break;
                case 'Z':
                    phase *= down ? -1.0 : 1.0;
                    break;
                default:
                    break;
            }
        }
        p(target, s) = phase;
    }
    return p;
}

}  // namespace

QuantumRegister::QuantumRegister(int n, std::vector<cdouble> amplitudes) : n_(n), amp_(std::move(amplitudes)) {
    if (n < 0) {
        throw InputError("register size must be >= 0");
    }
    check_quantum_size(n);
    if (amp_.size() != (std::size_t{2} << n)) {
        throw InputError("register needs 2^(N+1) amplitudes");
    }
    if (std::abs(norm() - 1.0) > kNormTolerance) {
        throw InputError("register state is not normalized");
    }
}

QuantumRegister QuantumRegister::with_probe(int n, const std::vector<cdouble> &system) {
    check_quantum_size(n);
    if (n < 0 || system.size() != (std::size_t{1} << n)) {
        throw InputError("system state needs 2^N amplitudes");
    }
    const double r = std::numbers::sqrt2 / 2.0;
    std::vector<cdouble> amp(system.size() * 2);
    for (std::size_t s = 0; s < system.size(); ++s) {
        amp[s] = r * system[s];
        amp[s + system.size()] = r * system[s];
    }
    return QuantumRegister(n, std::move(amp));
}

QuantumRegister QuantumRegister::with_probe(const SpinConfig &config) {
    check_quantum_size(config.size());
    std::vector<cdouble> system(std::size_t{1} << config.size());
    system[config.to_bits()] = 1.0;
    return with_probe(config.size(), system);
}

double QuantumRegister::norm() const {
    double total = 0.0;
    for (const cdouble &c : amp_) {
        total += std::norm(c);
    }
    return std::sqrt(total);
}

void QuantumRegister::hadamard_ancilla() {
    const std::size_t half = amp_.size() / 2;
    const double r = std::numbers::sqrt2 / 2.0;
    for (std::size_t s = 0; s < half; ++s) {
        const cdouble up = amp_[s];
        const cdouble down = amp_[s + half];
        amp_[s] = r * (up + down);
        amp_[s + half] = r * (up - down);
    }
}

void QuantumRegister::controlled_diagonal(const std::vector<cdouble> &factor) {
    if (factor.size() != amp_.size() / 2) {
        throw InputError("controlled phase needs one factor per system basis state");
    }
    for (std::size_t s = 0; s < factor.size(); ++s) {
        amp_[s] *= factor[s];
    }
}

double QuantumRegister::ancilla_z() const {
    const std::size_t half = amp_.size() / 2;
    double z = 0.0;
    for (std::size_t s = 0; s < half; ++s) {
        z += std::norm(amp_[s]) - std::norm(amp_[s + half]);
    }
    return z;
}

double QuantumRegister::ancilla_y() const {
    // <sy> = 2 Im sum_s conj(up_s) down_s
    const std::size_t half = amp_.size() / 2;
    cdouble acc{0.0, 0.0};
    for (std::size_t s = 0; s < half; ++s) {
        acc += std::conj(amp_[s]) * amp_[s + half];
    }
    return 2.0 * acc.imag();
}

BasisEnsemble BasisEnsemble::thermal(const ModelParams &model) {
    model.validate(/*allow_zero_beta=*/true);
    check_quantum_size(model.n);
    const std::size_t dim = std::size_t{1} << model.n;
    BasisEnsemble ens{model.n, std::vector<double>(dim)};
    std::vector<double> log_w(dim);
    for (std::size_t s = 0; s < dim; ++s) {
        log_w[s] = -model.beta * energy(model, SpinConfig::from_bits(s, model.n));
    }
    const double shift = *std::max_element(log_w.begin(), log_w.end());
    double total = 0.0;
    for (std::size_t s = 0; s < dim; ++s) {
        ens.probs[s] = std::exp(log_w[s] - shift);
        total += ens.probs[s];
    }
    for (double &p : ens.probs) {
        p /= total;
    }
    return ens;
}

void BasisEnsemble::validate() const {
    check_quantum_size(n);
    if (n < 0 || probs.size() != (std::size_t{1} << n)) {
        throw InputError("ensemble needs 2^N probabilities");
    }
    double total = 0.0;
    for (double p : probs) {
        if (!(p >= 0.0)) {
            throw InputError("ensemble probabilities must be non-negative");
        }
        total += p;
    }
    if (std::abs(total - 1.0) > kNormTolerance) {
        throw InputError("ensemble probabilities do not sum to 1");
    }
}

bool PauliObservable::is_diagonal() const {
    return std::all_of(terms.begin(), terms.end(), [](const std::string &t) {
        return t.find_first_not_of("IZ") == std::string::npos;
    });
}

PauliObservable PauliObservable::from_z_observable(const ObservableSpec &obs, int n) {
    obs.validate_for(n);
    PauliObservable p{n, obs.a, obs.b, {}};
    for (const auto &term : obs.terms) {
        std::string s(static_cast<std::size_t>(n), 'I');
        for (int idx : term) {
            char &c = s[static_cast<std::size_t>(idx)];
            c = c == 'I' ? 'Z' : 'I';
        }
        p.terms.push_back(std::move(s));
    }
    return p;
}

ObservableSpec PauliObservable::to_z_observable() const {
    validate();
    if (!is_diagonal()) {
        throw UnsupportedError("observable is not diagonal in the computational basis");
    }
    std::vector<std::vector<int>> products;
    for (const auto &t : terms) {
        std::vector<int> idx;
        for (std::size_t i = 0; i < t.size(); ++i) {
            if (t[i] == 'Z') {
                idx.push_back(static_cast<int>(i));
            }
        }
        products.push_back(std::move(idx));
    }
    return ObservableSpec::custom(a, b, std::move(products));
}

void PauliObservable::validate() const {
    if (n < 1) {
        throw InputError("Pauli observable needs N >= 1");
    }
    for (const auto &t : terms) {
        if (t.size() != static_cast<std::size_t>(n) || t.find_first_not_of("IXYZ") != std::string::npos) {
            throw InputError("Pauli string '" + t + "' must have N letters from I, X, Y, Z");
        }
    }
}

PauliObservable noncommuting_test_observable(int n) {
    if (n < 2) {
        throw InputError("non-commuting test observable needs N >= 2");
    }
    PauliObservable p{n, 0.0, 1.0, {}};
    for (int i = 0; i + 1 < n; ++i) {
        std::string s(static_cast<std::size_t>(n), 'I');
        s[static_cast<std::size_t>(i)] = 'X';
        s[static_cast<std::size_t>(i + 1)] = 'X';
        p.terms.push_back(std::move(s));
    }
    for (int i = 0; i < n; ++i) {
        std::string s(static_cast<std::size_t>(n), 'I');
        s[static_cast<std::size_t>(i)] = 'Z';
        p.terms.push_back(std::move(s));
    }
    return p;
}

AncillaReadout quantum_probe(const QuantumRegister &reg, const ObservableSpec &obs, double theta,
                             std::optional<int> trotter_steps) {
    check_quantum_size(reg.n());
    return read_after_hadamard(reg, evolution_factors(obs, reg.n(), theta, trotter_steps));
}

AncillaReadout quantum_probe(const QuantumRegister &reg, const PauliObservable &obs, double theta,
                             std::optional<int> trotter_steps) {
    if (obs.n != reg.n()) {
        throw InputError("observable and register sizes differ");
    }
    return quantum_probe(reg, obs.to_z_observable(), theta, trotter_steps);
}

AncillaReadout quantum_probe(const BasisEnsemble &ensemble, const ObservableSpec &obs, double theta,
                             std::optional<int> trotter_steps) {
    ensemble.validate();
    const std::vector<cdouble> factor = evolution_factors(obs, ensemble.n, theta, trotter_steps);
    const double r = std::numbers::sqrt2 / 2.0;
    AncillaReadout total;
    for (std::size_t s = 0; s < factor.size(); ++s) {
        const double p = ensemble.probs[s];
        if (p == 0.0) {
            continue;
        }
        // The block spanned by |up, s> and |down, s> is a bare ancilla.
        AncillaReadout block = read_after_hadamard(QuantumRegister(0, {r, r}), {factor[s]});
        total.re_f += p * block.re_f;
        total.im_f += p * block.im_f;
    }
    return total;
}

double trotter_error_probe(const PauliObservable &obs, double theta, int m) {
    obs.validate();
    if (obs.n > kMaxTrotterSpins) {
        throw SizeError("Trotter error probe limited to N <= " + std::to_string(kMaxTrotterSpins));
    }
    if (m < 1) {
        throw InputError("trotter steps must be >= 1");
    }
    const Eigen::Index dim = Eigen::Index{1} << obs.n;
    const Matrix identity = Matrix::Identity(dim, dim);

    Matrix x = obs.a * identity;
    std::vector<Matrix> paulis;
    for (const auto &t : obs.terms) {
        paulis.push_back(pauli_string_matrix(t));
        x += obs.b * paulis.back();
    }
    Eigen::SelfAdjointEigenSolver<Matrix> eig(x);
    Eigen::VectorXcd phases(dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
        phases(i) = std::polar(1.0, theta * eig.eigenvalues()(i));
    }
    const Matrix exact = eig.eigenvectors() * phases.asDiagonal() * eig.eigenvectors().adjoint();

    // e^{i phi P} = cos(phi) + i sin(phi) P since P^2 = 1.
    const double phi = theta * obs.b / m;
    Matrix step = std::polar(1.0, theta * obs.a / m) * identity;
    for (const Matrix &p : paulis) {
        step = (std::cos(phi) * identity + cdouble{0.0, std::sin(phi)} * p) * step;
    }
    Matrix product = identity;
    for (int k = 0; k < m; ++k) {
        product = step * product;
    }
    Eigen::JacobiSVD<Matrix> svd(exact - product);
    return svd.singularValues()(0);
}

}  // namespace kinkprobe
