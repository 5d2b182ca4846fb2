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

#ifndef KINKPROBE_JOINT_COUNTS_H
#define KINKPROBE_JOINT_COUNTS_H

#include <vector>

namespace kinkprobe {

/// Q(m,k): number of ring configurations with magnetization m and kink number k.
class JointCounts {
   public:
    JointCounts(int n, std::vector<double> counts, double max_residual);

    int n() const { return n_; }
    /// Zero outside m in [-N, N], k in [0, N].
    double at(int m, int k) const;
    /// Largest distance of a raw inverse-transform value from its rounded integer.
    double max_residual() const { return max_residual_; }

   private:
    int n_;
    std::vector<double> counts_;  // row-major, (m + N) * (N + 1) + k
    double max_residual_;
};

/// Computes Q(m,k) for N >= 2 from the trace of a doubly phase-deformed 2x2
/// transfer matrix raised to the N-th power, sampled on a (2N+1) x (N+1)
/// phase grid and inverted by a 2D discrete Fourier transform.
///
/// The arithmetic runs in 128-bit floating point so entries up to 2^64 still
/// round to the right integer; a raw value further than 1e-6 from an integer
/// raises std::runtime_error.
JointCounts joint_counts(int n);

}  // namespace kinkprobe

#endif
