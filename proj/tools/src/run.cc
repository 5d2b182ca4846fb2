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

#include "kinkprobe_cli/run.h"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>

#include "kinkprobe/errors.h"
#include "kinkprobe/probe.h"
#include "kinkprobe_cli/svg.h"

namespace kinkprobe::cli {

namespace {

namespace fs = std::filesystem;

// Dense trace for locating the recurrence when eta is estimated.
constexpr int kSurveyPoints = 2001;
constexpr int kCumulantOrder = 4;
constexpr int kMaxOracleN = 12;

ProbeRecord simulate(const RunConfig &cfg, const ModelParams &model, const ObservableSpec &obs,
                     const std::vector<double> &times, std::uint64_t seed) {
    GateErrorModel gate{cfg.eta};
    if (cfg.shots) {
        return simulate_probe_shots(model, obs, cfg.epsilon, times, *cfg.shots, gate, seed);
    }
    return simulate_probe_exact(model, obs, cfg.epsilon, times, gate);
}

std::string g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void write_file(const fs::path &path, const std::string &text) {
    std::ofstream os(path, std::ios::binary);
    if (!os) {
        throw InputError("cannot write " + path.string());
    }
    os << text;
    if (!os) {
        throw InputError("failed writing " + path.string());
    }
}

std::string coherence_csv(const ProbeRecord &r) {
    std::string s = "t,theta,sx,sy\n";
    for (std::size_t i = 0; i < r.time_grid.size(); ++i) {
        s += g17(r.time_grid[i]) + "," + g17(2.0 * r.epsilon * r.time_grid[i]) + "," + g17(r.sx[i]) + "," +
             g17(r.sy[i]) + "\n";
    }
    return s;
}

std::string distribution_csv(const Distribution &d) {
    std::string s = "x,p\n";
    for (std::size_t i = 0; i < d.size(); ++i) {
        s += std::to_string(d.support[i]) + "," + g17(d.probs[i]) + "\n";
    }
    return s;
}

bool all_finite(const Distribution &d) {
    for (double p : d.probs) {
        if (!std::isfinite(p)) {
            return false;
        }
    }
    return true;
}

nlohmann::ordered_json report_json(const RunConfig &cfg, const RunOutcome &out, const std::string &closed_note,
                                   std::optional<double> exact_mean) {
    nlohmann::ordered_json j;
    j["model"] = cfg.model;
    j["observable"] = cfg.observable;
    j["n"] = cfg.n;
    if (out.closed) {
        j["closed"] = {{"flavor", to_string(out.closed->flavor)}, {"kappa", out.closed->kappa}};
    } else {
        j["closed"] = {{"unsupported", closed_note}};
    }
    if (exact_mean) {
        j["exact_mean"] = {{"flavor", to_string(CumulantFlavor::ExactSmallFormula)}, {"kappa1", *exact_mean}};
    }
    j["numerical"] = {{"flavor", to_string(CumulantFlavor::NumericalFromF)}, {"kappa", out.numerical}};
    const auto &v = out.validation;
    nlohmann::ordered_json val;
    val["normalization_defect"] = v.normalization_defect;
    val["most_negative"] = v.most_negative;
    val["parity_violation"] = v.parity_violation;
    val["residual_imag"] = v.residual_imag;
    if (cfg.shots) {
        val["tolerance"] = nullptr;
        val["clipped"] = true;
    } else {
        val["tolerance"] = kValidationTolerance;
        val["passed"] = v.worst() <= kValidationTolerance;
    }
    j["validation"] = val;
    nlohmann::ordered_json gate;
    gate["eta"] = cfg.eta;
    gate["corrected"] = cfg.correct_eta;
    if (out.estimated_eta) {
        gate["estimated_eta"] = *out.estimated_eta;
    }
    j["gate_error"] = gate;
    nlohmann::ordered_json sampler;
    sampler["method"] = out.record.sampler.method;
    sampler["burn_in_sweeps"] = out.record.sampler.burn_in_sweeps;
    sampler["thinning_sweeps"] = out.record.sampler.thinning_sweeps;
    sampler["shots"] = cfg.shots ? nlohmann::ordered_json(*cfg.shots) : nlohmann::ordered_json(nullptr);
    sampler["seed"] = cfg.seed;
    j["sampler"] = sampler;
    if (out.oracle_max_deviation) {
        j["oracle"] = {{"max_abs_deviation", *out.oracle_max_deviation}};
    }
    return j;
}

}  // namespace

RunOutcome run(const RunConfig &cfg, std::ostream &err) {
    cfg.validate();
    const ModelParams model = cfg.model_params();
    const ObservableSpec obs = cfg.observable_spec();
    const ThetaGrid grid = build_theta_grid(obs, cfg.n, cfg.grid);

    RunOutcome out;
    out.record = simulate(cfg, model, obs, probe_time_grid(grid, cfg.epsilon), cfg.seed);
    Distribution raw = invert_dft(to_samples(out.record));

    std::optional<ProbeRecord> corrected;
    if (cfg.correct_eta) {
        auto survey = simulate(cfg, model, obs, linear_time_grid(std::numbers::pi / cfg.epsilon, kSurveyPoints),
                               cfg.seed + 1);
        out.estimated_eta = estimate_gate_error(survey);
        // The inversion uses the calibrated eta; the estimate is reported next to it.
        corrected = simulate(cfg, model, obs, probe_time_grid(grid, cfg.epsilon, cfg.eta), cfg.seed + 2);
        out.naive_distribution = raw;
        raw = invert_with_gate_error(to_samples(*corrected), cfg.eta);
    }

    out.validation = validate_distribution(raw);
    out.distribution = cfg.shots ? sanitize(raw) : raw;
    out.numerical = distribution_cumulants(out.distribution, kCumulantOrder);

    std::string closed_note;
    try {
        out.closed = closed_cumulants(model, obs);
    } catch (const UnsupportedError &e) {
        closed_note = e.what();
    }
    std::optional<double> exact_mean;
    if (model.kind == ModelKind::NearestNeighborRing && obs.kind == ObservableKind::KinkNumber && model.h == 0.0) {
        exact_mean = closed_cumulants(model, obs, CumulantFlavor::ExactSmallFormula).kappa1();
    }
    if (cfg.oracle) {
        if (cfg.n <= kMaxOracleN) {
            out.oracle_max_deviation = max_abs_difference(out.distribution, enumerate_oracle(model, obs).dist);
        } else {
            err << "note: --oracle ignored for N > " << kMaxOracleN << "\n";
        }
    }

    const fs::path dir(cfg.out);
    fs::create_directories(dir);
    if (cfg.wants("csv")) {
        write_file(dir / "coherence.csv", coherence_csv(out.record));
        write_file(dir / "distribution.csv", distribution_csv(out.distribution));
        if (corrected) {
            write_file(dir / "coherence_corrected.csv", coherence_csv(*corrected));
            write_file(dir / "distribution_naive.csv", distribution_csv(*out.naive_distribution));
        }
    }
    if (cfg.wants("json")) {
        write_file(dir / "cumulants.json", report_json(cfg, out, closed_note, exact_mean).dump(2) + "\n");
    }
    if (cfg.wants("svg")) {
        std::string title = cfg.preset.empty() ? cfg.model + " " + cfg.observable : cfg.preset;
        title += "  N=" + std::to_string(cfg.n) + "  beta=" + g17(cfg.beta) + "  h=" + g17(cfg.h);
        write_file(dir / "plot.svg", render_svg(corrected ? *corrected : out.record, out.distribution, title));
    }
    write_file(dir / "config.json", to_json(cfg).dump(2) + "\n");

    const bool failed = cfg.shots ? !all_finite(raw) : out.validation.worst() > kValidationTolerance;
    if (failed) {
        const auto &v = out.validation;
        err << "validation failed (tolerance " << kValidationTolerance << ")\n"
            << "  normalization_defect " << v.normalization_defect << "\n"
            << "  most_negative " << v.most_negative << "\n"
            << "  parity_violation " << v.parity_violation << "\n"
            << "  residual_imag " << v.residual_imag << "\n";
        out.exit_code = kExitValidation;
    }
    return out;
}

}  // namespace kinkprobe::cli
