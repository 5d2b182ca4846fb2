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

#ifndef KINKPROBE_CLI_CONFIG_H
#define KINKPROBE_CLI_CONFIG_H

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "kinkprobe/spin_model.h"

namespace kinkprobe::cli {

/// Everything a run needs. Field names double as the JSON config keys.
struct RunConfig {
    std::string command = "probe";  // "probe" or "repro"
    std::string preset;
    std::string model = "ring";               // "ring" or "longrange"
    std::string observable = "magnetization";  // "magnetization" or "kinks"
    int n = 50;
    double j = 1.0;
    double h = 0.0;
    double beta = 1.0;
    double epsilon = 0.01;
    std::optional<std::int64_t> shots;  // nullopt: exact expectations
    double eta = 0.0;
    bool correct_eta = false;
    std::uint64_t seed = 1;
    std::optional<int> grid;
    std::string out = "out";
    std::vector<std::string> formats{"csv", "json", "svg"};
    bool oracle = false;

    ModelParams model_params() const;
    ObservableSpec observable_spec() const;
    bool wants(const std::string &format) const;

    /// Checks every library precondition up front; throws InputError, SizeError or UnsupportedError.
    void validate() const;
};

nlohmann::ordered_json to_json(const RunConfig &config);

/// Overwrites the fields present in `j`. Unknown keys raise InputError.
void apply_json(RunConfig &config, const nlohmann::json &j);

/// Parameters for a named figure preset; throws InputError for unknown names.
RunConfig preset_config(const std::string &name);
const std::vector<std::string> &preset_names();

}  // namespace kinkprobe::cli

#endif
