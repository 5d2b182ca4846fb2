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

#include "oracles/oracles.h"

#include <quadmath.h>

#include <algorithm>
#include <cmath>
#include <vector>

namespace oracle {

namespace {

using kinkprobe::ModelKind;

long double config_energy(ModelKind kind, int n, double j, double h, std::uint64_t bits) {
    std::vector<int> s(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        s[static_cast<std::size_t>(i)] = ((bits >> i) & 1U) ? -1 : 1;
    }
    long double pair = 0.0L;
    long double field = 0.0L;
    for (int a = 0; a < n; ++a) {
        field += s[static_cast<std::size_t>(a)];
        if (kind == ModelKind::NearestNeighborRing) {
            pair += s[static_cast<std::size_t>(a)] * s[static_cast<std::size_t>((a + 1) % n)];
        } else {
            for (int b = a + 1; b < n; ++b) {
                pair += s[static_cast<std::size_t>(a)] * s[static_cast<std::size_t>(b)];
            }
        }
    }
    return -static_cast<long double>(j) * pair - static_cast<long double>(h) * field;
}

int config_observable(int n, std::uint64_t bits, Obs obs) {
    int value = 0;
    for (int a = 0; a < n; ++a) {
        int sa = ((bits >> a) & 1U) ? -1 : 1;
        if (obs == Obs::M) {
            value += sa;
        } else {
            int sb = ((bits >> ((a + 1) % n)) & 1U) ? -1 : 1;
            value += sa != sb ? 1 : 0;
        }
    }
    return value;
}

unsigned __int128 binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) {
        return 0;
    }
    unsigned __int128 c = 1;
    for (int i = 1; i <= k; ++i) {
        c = c * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
    }
    return c;
}

}  // namespace

BruteForce brute_force(ModelKind kind, int n, double j, double h, double beta, Obs obs) {
    const std::uint64_t total = std::uint64_t{1} << n;
    std::vector<long double> log_w(total);
    long double top = -INFINITY;
    for (std::uint64_t c = 0; c < total; ++c) {
        log_w[c] = -static_cast<long double>(beta) * config_energy(kind, n, j, h, c);
        top = std::max(top, log_w[c]);
    }
    BruteForce out;
    long double z = 0.0L;
    for (std::uint64_t c = 0; c < total; ++c) {
        long double w = std::exp(log_w[c] - top);
        z += w;
        out.p[config_observable(n, c, obs)] += w;
    }
    for (auto &[x, p] : out.p) {
        p /= z;
    }
    out.log_z = top + std::log(z);
    return out;
}

std::complex<long double> spectral_survival(ModelKind kind, int n, double j, double h, double beta, double t) {
    const std::uint64_t total = std::uint64_t{1} << n;
    std::vector<long double> e(total);
    for (std::uint64_t c = 0; c < total; ++c) {
        e[c] = config_energy(kind, n, j, h, c);
    }
    long double e_min = *std::min_element(e.begin(), e.end());
    long double z = 0.0L;
    std::complex<long double> acc{0.0L, 0.0L};
    for (std::uint64_t c = 0; c < total; ++c) {
        long double w = std::exp(-static_cast<long double>(beta) * (e[c] - e_min));
        z += w;
        acc += w * std::polar(1.0L, -static_cast<long double>(t) * e[c]);
    }
    return acc / z;
}

LogComplex ring_trace(int n, std::complex<long double> bj, std::complex<long double> bh) {
    using C = std::complex<long double>;
    C t[2][2];
    for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) {
            long double sa = a == 0 ? 1.0L : -1.0L;
            long double sb = b == 0 ? 1.0L : -1.0L;
            t[a][b] = std::exp(bj * (sa * sb) + bh * ((sa + sb) / 2.0L));
        }
    }
    C p[2][2] = {{1.0L, 0.0L}, {0.0L, 1.0L}};
    long double log_scale = 0.0L;
    for (int step = 0; step < n; ++step) {
        C q[2][2];
        long double top = 0.0L;
        for (int a = 0; a < 2; ++a) {
            for (int b = 0; b < 2; ++b) {
                q[a][b] = p[a][0] * t[0][b] + p[a][1] * t[1][b];
                top = std::max(top, std::abs(q[a][b]));
            }
        }
        for (int a = 0; a < 2; ++a) {
            for (int b = 0; b < 2; ++b) {
                p[a][b] = q[a][b] / top;
            }
        }
        log_scale += std::log(top);
    }
    C tr = p[0][0] + p[1][1];
    return LogComplex{log_scale + std::log(std::abs(tr)), std::arg(tr)};
}

unsigned __int128 kink_count(int n, int m, int k) {
    if ((n - m) % 2 != 0 || m < -n || m > n || k < 0 || k % 2 != 0) {
        return 0;
    }
    const int down = (n - m) / 2;
    if (k == 0) {
        return (down == 0 || down == n) ? 1 : 0;
    }
    const int r = k / 2;
    unsigned __int128 num = static_cast<unsigned __int128>(n) * binomial(down - 1, r - 1) * binomial(n - down - 1, r - 1);
    return num / static_cast<unsigned>(r);
}

long double longrange_log_z_quad(int n, double j, double h, double beta) {
    // log of the largest term first, so every summand is <= 1
    std::vector<__float128> log_term(static_cast<std::size_t>(n) + 1);
    __float128 top = -HUGE_VALQ;
    for (int d = 0; d <= n; ++d) {
        __float128 m = n - 2 * d;
        __float128 log_binom = lgammaq(n + 1) - lgammaq(d + 1) - lgammaq(n - d + 1);
        __float128 e = -static_cast<__float128>(j) * (m * m - n) / 2 - static_cast<__float128>(h) * m;
        log_term[static_cast<std::size_t>(d)] = log_binom - static_cast<__float128>(beta) * e;
        if (log_term[static_cast<std::size_t>(d)] > top) {
            top = log_term[static_cast<std::size_t>(d)];
        }
    }
    __float128 sum = 0;
    for (__float128 lt : log_term) {
        sum += expq(lt - top);
    }
    return static_cast<long double>(top + logq(sum));
}

long double exact_ring_kink_mean(int n, double j, double beta) {
    const long double a = static_cast<long double>(beta) * j;
    const long double c = std::cosh(a);
    const long double s = std::sinh(a);
    return n / 2.0L * std::exp(-a) * (std::pow(c, n - 1) - std::pow(s, n - 1)) / (std::pow(c, n) + std::pow(s, n));
}

Moments moments(const BruteForce &bf) {
    Moments m;
    for (const auto &[x, p] : bf.p) {
        m.mean += p * x;
    }
    for (const auto &[x, p] : bf.p) {
        long double d = x - m.mean;
        m.c2 += p * d * d;
        m.c3 += p * d * d * d;
    }
    return m;
}

}  // namespace oracle
