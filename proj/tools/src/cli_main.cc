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

#include <filesystem>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "kinkprobe/errors.h"
#include "kinkprobe_cli/run.h"

namespace kinkprobe::cli {

namespace {

struct Flags {
    std::string model;
    std::string obs;
    int n = 0;
    double j = 0.0;
    double h = 0.0;
    double beta = 0.0;
    double eps = 0.0;
    std::int64_t shots = 0;
    double eta = 0.0;
    bool correct_eta = false;
    std::uint64_t seed = 0;
    int grid = 0;
    std::string out;
    std::vector<std::string> formats;
    std::string config;
    bool oracle = false;
    std::map<std::string, CLI::Option *> opt;

    bool given(const std::string &name) const { return opt.at(name)->count() > 0; }
};

void add_flags(CLI::App *app, Flags &f) {
    app->set_help_flag("--help", "print this help and exit");  // -h would clash with --h
    f.opt["model"] = app->add_option("--model", f.model, "ring or longrange")
                         ->check(CLI::IsMember({"ring", "longrange"}));
    f.opt["obs"] = app->add_option("--obs", f.obs, "magnetization or kinks")
                       ->check(CLI::IsMember({"magnetization", "kinks"}));
    f.opt["N"] = app->add_option("--N", f.n, "number of spins");
    f.opt["J"] = app->add_option("--J", f.j, "coupling");
    f.opt["h"] = app->add_option("--h", f.h, "longitudinal field");
    f.opt["beta"] = app->add_option("--beta", f.beta, "inverse temperature");
    f.opt["eps"] = app->add_option("--eps", f.eps, "probe coupling epsilon");
    f.opt["shots"] = app->add_option("--shots", f.shots, "shots per time point and basis (default: exact)");
    f.opt["eta"] = app->add_option("--eta", f.eta, "relative gate error of the controlled rotations");
    f.opt["correct-eta"] = app->add_flag("--correct-eta", f.correct_eta, "invert with the configured eta and report its estimate");
    f.opt["seed"] = app->add_option("--seed", f.seed, "RNG seed for shot sampling");
    f.opt["grid"] = app->add_option("--grid", f.grid, "number of theta points (at least the alias-free minimum)");
    f.opt["out"] = app->add_option("--out", f.out, "output directory");
    f.opt["format"] = app->add_option("--format", f.formats, "outputs among csv,json,svg")
                          ->delimiter(',')
                          ->check(CLI::IsMember({"csv", "json", "svg"}));
    f.opt["config"] = app->add_option("--config", f.config, "JSON file with RunConfig fields");
    f.opt["oracle"] = app->add_flag("--oracle", f.oracle, "compare with exhaustive enumeration (N <= 12)");
}

void apply_flags(RunConfig &c, const Flags &f) {
    if (f.given("model")) c.model = f.model;
    if (f.given("obs")) c.observable = f.obs;
    if (f.given("N")) c.n = f.n;
    if (f.given("J")) c.j = f.j;
    if (f.given("h")) c.h = f.h;
    if (f.given("beta")) c.beta = f.beta;
    if (f.given("eps")) c.epsilon = f.eps;
    if (f.given("shots")) c.shots = f.shots;
    if (f.given("eta")) c.eta = f.eta;
    if (f.given("correct-eta")) c.correct_eta = f.correct_eta;
    if (f.given("seed")) c.seed = f.seed;
    if (f.given("grid")) c.grid = f.grid;
    if (f.given("out")) c.out = f.out;
    if (f.given("format")) c.formats = f.formats;
    if (f.given("oracle")) c.oracle = f.oracle;
}

nlohmann::json read_config(const std::string &path) {
    std::ifstream is(path);
    if (!is) {
        throw InputError("cannot read config file " + path);
    }
    try {
        return nlohmann::json::parse(is);
    } catch (const nlohmann::json::parse_error &e) {
        throw InputError("config file " + path + ": " + e.what());
    }
}

}  // namespace

int cli_main(int argc, const char *const *argv) {
    CLI::App app{"Full counting statistics of Ising observables from a simulated probe qubit", "kinkprobe"};
    app.set_help_flag("--help", "print this help and exit");
    app.require_subcommand(1);
    Flags probe_flags;
    Flags repro_flags;
    std::string preset;
    auto *probe = app.add_subcommand("probe", "Simulate one configuration");
    add_flags(probe, probe_flags);
    auto *repro = app.add_subcommand("repro", "Regenerate a figure preset");
    repro->add_option("preset", preset, "preset name")->required()->check(CLI::IsMember(preset_names()));
    add_flags(repro, repro_flags);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        const bool is_repro = repro->parsed();
        const Flags &f = is_repro ? repro_flags : probe_flags;
        RunConfig cfg = is_repro ? preset_config(preset) : RunConfig{};
        if (f.given("config")) {
            apply_json(cfg, read_config(f.config));
        }
        apply_flags(cfg, f);
        cfg.command = is_repro ? "repro" : "probe";
        if (is_repro) {
            cfg.preset = preset;
        }
        auto outcome = run(cfg, std::cerr);
        std::cout << cfg.out << ": " << outcome.distribution.size() << " points, mean "
                  << outcome.distribution.mean();
        if (outcome.estimated_eta) {
            std::cout << ", estimated eta " << *outcome.estimated_eta;
        }
        std::cout << "\n";
        return outcome.exit_code;
    } catch (const std::filesystem::filesystem_error &e) {
        std::cerr << "error: " << e.what() << "\n";
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
    }
    return kExitInputError;
}

}  // namespace kinkprobe::cli
