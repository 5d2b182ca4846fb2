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

#include "kinkprobe/joint_counts.h"

#include <quadmath.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "kinkprobe/errors.h"

namespace kinkprobe {

namespace {

using quad = __float128;

struct QComplex {
    quad re = 0;
    quad im = 0;
};

QComplex operator+(QComplex x, QComplex y) { return {x.re + y.re, x.im + y.im}; }
QComplex operator*(QComplex x, QComplex y) { return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re}; }

struct QMat2 {
    QComplex a, b, c, d;
};

QMat2 operator*(const QMat2 &x, const QMat2 &y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

QComplex trace_power(QMat2 base, unsigned exponent) {
    QMat2 result{{1, 0}, {0, 0}, {0, 0}, {1, 0}};
    while (exponent) {
        if (exponent & 1u) {
            result = result * base;
        }
        base = base * base;
        exponent >>= 1;
    }
    return result.a + result.d;
}

// Unit roots e^{2 pi i r / period} for r in [0, period).
std::vector<QComplex> roots_of_unity(int period) {
    const quad two_pi = 2 * M_PIq;
    std::vector<QComplex> out(static_cast<std::size_t>(period));
    for (int r = 0; r < period; ++r) {
        quad angle = two_pi * r / period;
        out[static_cast<std::size_t>(r)] = {cosq(angle), sinq(angle)};
    }
    return out;
}

}  // namespace

JointCounts::JointCounts(int n, std::vector<double> counts, double max_residual)
    : n_(n), counts_(std::move(counts)), max_residual_(max_residual) {}

double JointCounts::at(int m, int k) const {
    if (m < -n_ || m > n_ || k < 0 || k > n_) {
        return 0.0;
    }
    return counts_[static_cast<std::size_t>((m + n_) * (n_ + 1) + k)];
}

JointCounts joint_counts(int n) {
    if (n < 2) {
        throw InputError("joint_counts needs N >= 2, got " + std::to_string(n));
    }
    const int mag_points = 2 * n + 1;
    const int kink_points = n + 1;
    const auto mag_roots = roots_of_unity(mag_points);
    const auto kink_roots = roots_of_unity(kink_points);
    auto conj = [](QComplex z) { return QComplex{z.re, -z.im}; };

    // Transfer matrix entries: e^{i phi} (up,up), e^{-i phi} (down,down), e^{i psi} on a kink.
    std::vector<QComplex> traces(static_cast<std::size_t>(mag_points * kink_points));
    for (int j = 0; j < mag_points; ++j) {
        QComplex up = mag_roots[static_cast<std::size_t>(j)];
        for (int l = 0; l < kink_points; ++l) {
            QComplex kink = kink_roots[static_cast<std::size_t>(l)];
            QMat2 t{up, kink, kink, conj(up)};
            traces[static_cast<std::size_t>(j * kink_points + l)] = trace_power(t, static_cast<unsigned>(n));
        }
    }

    // Inverse transform over the kink phase, then over the magnetization phase.
    std::vector<QComplex> partial(static_cast<std::size_t>(mag_points * kink_points));
    for (int j = 0; j < mag_points; ++j) {
        for (int k = 0; k < kink_points; ++k) {
            QComplex acc;
            for (int l = 0; l < kink_points; ++l) {
                int r = (k * l) % kink_points;
                acc = acc + traces[static_cast<std::size_t>(j * kink_points + l)] *
                                conj(kink_roots[static_cast<std::size_t>(r)]);
            }
            partial[static_cast<std::size_t>(j * kink_points + k)] = acc;
        }
    }

    const quad norm = static_cast<quad>(mag_points) * kink_points;
    std::vector<double> counts(static_cast<std::size_t>(mag_points * kink_points));
    double max_residual = 0.0;
    for (int m = -n; m <= n; ++m) {
        for (int k = 0; k < kink_points; ++k) {
            QComplex acc;
            for (int j = 0; j < mag_points; ++j) {
                int r = ((m * j) % mag_points + mag_points) % mag_points;
                acc = acc + partial[static_cast<std::size_t>(j * kink_points + k)] *
                                conj(mag_roots[static_cast<std::size_t>(r)]);
            }
            quad value = acc.re / norm;
            quad rounded = roundq(value);
            double residual = static_cast<double>(std::max(fabsq(value - rounded), fabsq(acc.im / norm)));
            max_residual = std::max(max_residual, residual);
            counts[static_cast<std::size_t>((m + n) * kink_points + k)] = static_cast<double>(rounded);
        }
    }
    if (max_residual >= 1e-6) {
        throw std::runtime_error("joint_counts: inverse transform residual " + std::to_string(max_residual) +
                                 " exceeds 1e-6 at N = " + std::to_string(n));
    }
    return JointCounts(n, std::move(counts), max_residual);
}

}  // namespace kinkprobe
