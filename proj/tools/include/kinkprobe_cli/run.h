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

#ifndef KINKPROBE_CLI_RUN_H
#define KINKPROBE_CLI_RUN_H

#include <optional>
#include <ostream>
#include <string>

#include "kinkprobe/cumulants.h"
#include "kinkprobe/probe_record.h"
#include "kinkprobe/reconstruct.h"
#include "kinkprobe_cli/config.h"

namespace kinkprobe::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitUsage = 64;

/// Exact-mode reconstructions must pass validation within this tolerance.
inline constexpr double kValidationTolerance = 1e-9;

struct RunOutcome {
    int exit_code = kExitOk;
    ProbeRecord record;  // nominal time grid
    /// Distribution written to distribution.csv (sanitized in shot mode).
    Distribution distribution;
    /// Plain inversion of the nominal-grid record; only set when correcting eta.
    std::optional<Distribution> naive_distribution;
    std::optional<double> estimated_eta;
    ValidationReport validation;
    std::optional<CumulantSet> closed;
    std::vector<double> numerical;  // kappa_1..kappa_4 of `distribution`
    std::optional<double> oracle_max_deviation;
};

/// Simulates, reconstructs and writes the requested files into config.out.
///
/// Input problems throw (InputError, SizeError, ...); a validation breach
/// returns kExitValidation after writing the outputs, with the report on `err`.
RunOutcome run(const RunConfig &config, std::ostream &err);

/// Full command-line entry point: parses flags, runs, maps errors to exit codes.
int cli_main(int argc, const char *const *argv);

}  // namespace kinkprobe::cli

#endif
