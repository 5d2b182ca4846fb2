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

#include "kinkprobe_cli/config.h"

#include <algorithm>
#include <cmath>
#include <map>

#include "kinkprobe/charfunc.h"
#include "kinkprobe/errors.h"
#include "kinkprobe/probe_record.h"
#include "kinkprobe/reconstruct.h"

namespace kinkprobe::cli {

namespace {

const std::vector<std::string> kFormats{"csv", "json", "svg"};

struct Preset {
    std::string model;
    std::string observable;
    int n;
    double beta;
    double h;
    double eta = 0.0;
    bool correct_eta = false;
};

// J = 1 and eps = 0.01 throughout.
const std::map<std::string, Preset> &presets() {
    static const std::map<std::string, Preset> table{
        {"fig2b", {"ring", "magnetization", 50, 1.0, 0.0}},
        {"fig2c", {"ring", "magnetization", 50, 1.0, 0.2}},
        {"fig3b", {"ring", "kinks", 50, 0.1, 0.0}},
        {"fig3c", {"ring", "kinks", 50, 0.1, 10.0}},
        {"sm-m-a", {"longrange", "magnetization", 50, 0.01, 0.0}},
        {"sm-m-b", {"longrange", "magnetization", 50, 0.03, 0.0}},
        {"sm-m-c", {"longrange", "magnetization", 50, 0.01, 10.0}},
        {"sm-m-d", {"longrange", "magnetization", 50, 0.03, 2.0}},
        {"sm-k-a", {"longrange", "kinks", 20, 0.05, 0.0}},
        {"sm-k-b", {"longrange", "kinks", 20, 0.05, 10.0}},
        {"sm-error", {"ring", "magnetization", 20, 1.0, 0.1, 0.02, true}},
    };
    return table;
}

template <typename T>
T get(const nlohmann::json &j, const std::string &key) {
    try {
        return j.get<T>();
    } catch (const nlohmann::json::exception &) {
        throw InputError("config key '" + key + "' has the wrong type");
    }
}

}  // namespace

ModelParams RunConfig::model_params() const {
    ModelParams m;
    m.kind = model == "longrange" ? ModelKind::LongRangeAllToAll : ModelKind::NearestNeighborRing;
    m.n = n;
    m.j = j;
    m.h = h;
    m.beta = beta;
    return m;
}

ObservableSpec RunConfig::observable_spec() const {
    return observable == "kinks" ? ObservableSpec::kink_number(n) : ObservableSpec::magnetization(n);
}

bool RunConfig::wants(const std::string &format) const {
    return std::find(formats.begin(), formats.end(), format) != formats.end();
}

void RunConfig::validate() const {
    if (command != "probe" && command != "repro") {
        throw InputError("unknown command '" + command + "'");
    }
    if (model != "ring" && model != "longrange") {
        throw InputError("model must be 'ring' or 'longrange', got '" + model + "'");
    }
    if (observable != "magnetization" && observable != "kinks") {
        throw InputError("observable must be 'magnetization' or 'kinks', got '" + observable + "'");
    }
    auto m = model_params();
    m.validate();
    if (!std::isfinite(j) || !std::isfinite(h)) {
        throw InputError("J and h must be finite");
    }
    if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
        throw InputError("epsilon must be positive");
    }
    if (shots && *shots < 1) {
        throw InputError("shots must be >= 1");
    }
    GateErrorModel{eta}.validate();
    if (model == "longrange" && observable == "kinks" && n > kMaxLongRangeKinkSpins) {
        throw SizeError("long-range kink statistics need N <= " + std::to_string(kMaxLongRangeKinkSpins));
    }
    build_theta_grid(observable_spec(), n, grid);
    for (const auto &f : formats) {
        if (std::find(kFormats.begin(), kFormats.end(), f) == kFormats.end()) {
            throw InputError("unknown output format '" + f + "'");
        }
    }
    if (out.empty()) {
        throw InputError("output directory must not be empty");
    }
}

nlohmann::ordered_json to_json(const RunConfig &c) {
    nlohmann::ordered_json j;
    j["command"] = c.command;
    if (!c.preset.empty()) {
        j["preset"] = c.preset;
    }
    j["model"] = c.model;
    j["observable"] = c.observable;
    j["n"] = c.n;
    j["j"] = c.j;
    j["h"] = c.h;
    j["beta"] = c.beta;
    j["epsilon"] = c.epsilon;
    j["shots"] = c.shots ? nlohmann::ordered_json(*c.shots) : nlohmann::ordered_json(nullptr);
    j["eta"] = c.eta;
    j["correct_eta"] = c.correct_eta;
    j["seed"] = c.seed;
    j["grid"] = c.grid ? nlohmann::ordered_json(*c.grid) : nlohmann::ordered_json(nullptr);
    j["out"] = c.out;
    j["formats"] = c.formats;
    j["oracle"] = c.oracle;
    return j;
}

void apply_json(RunConfig &c, const nlohmann::json &j) {
    if (!j.is_object()) {
        throw InputError("config file must hold a JSON object");
    }
    for (const auto &[key, v] : j.items()) {
        if (key == "command") {
            c.command = get<std::string>(v, key);
        } else if (key == "preset") {
            c.preset = get<std::string>(v, key);
        } else if (key == "model") {
            c.model = get<std::string>(v, key);
        } else if (key == "observable") {
            c.observable = get<std::string>(v, key);
        } else if (key == "n") {
            c.n = get<int>(v, key);
        } else if (key == "j") {
            c.j = get<double>(v, key);
        } else if (key == "h") {
            c.h = get<double>(v, key);
        } else if (key == "beta") {
            c.beta = get<double>(v, key);
        } else if (key == "epsilon") {
            c.epsilon = get<double>(v, key);
        } else if (key == "shots") {
            c.shots = v.is_null() ? std::nullopt : std::optional<std::int64_t>(get<std::int64_t>(v, key));
        } else if (key == "eta") {
            c.eta = get<double>(v, key);
        } else if (key == "correct_eta") {
            c.correct_eta = get<bool>(v, key);
        } else if (key == "seed") {
            c.seed = get<std::uint64_t>(v, key);
        } else if (key == "grid") {
            c.grid = v.is_null() ? std::nullopt : std::optional<int>(get<int>(v, key));
        } else if (key == "out") {
            c.out = get<std::string>(v, key);
        } else if (key == "formats") {
            c.formats = get<std::vector<std::string>>(v, key);
        } else if (key == "oracle") {
            c.oracle = get<bool>(v, key);
        } else {
            throw InputError("unknown config key '" + key + "'");
        }
    }
}

RunConfig preset_config(const std::string &name) {
    auto it = presets().find(name);
    if (it == presets().end()) {
        throw InputError("unknown preset '" + name + "'");
    }
    const Preset &p = it->second;
    RunConfig c;
    c.command = "repro";
    c.preset = name;
    c.model = p.model;
    c.observable = p.observable;
    c.n = p.n;
    c.beta = p.beta;
    c.h = p.h;
    c.eta = p.eta;
    c.correct_eta = p.correct_eta;
    c.out = "out/" + name;
    return c;
}

const std::vector<std::string> &preset_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto &[name, p] : presets()) {
            v.push_back(name);
        }
        return v;
    }();
    return names;
}

}  // namespace kinkprobe::cli
