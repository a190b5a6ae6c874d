// Copyright 2026 The qmem Authors
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

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "qmem/harness.h"

namespace {

struct Overrides {
    std::string config;
    std::optional<uint64_t> seed;
    std::string out;
    std::optional<size_t> threads;
    std::optional<std::string> family;
    std::optional<std::vector<size_t>> sizes;
    std::optional<std::vector<double>> betas;
    std::optional<size_t> trials;
    std::optional<uint64_t> t_max;
    std::optional<uint64_t> check_interval;
    std::optional<std::string> decoder;
    std::optional<std::vector<std::string>> tracked;
    std::optional<std::string> target;
    std::optional<std::string> method;
    std::optional<size_t> state_cap;
    std::optional<size_t> restarts;
    std::optional<std::vector<double>> epsilons;
    std::optional<std::string> direction;
    std::optional<double> delta;
    bool gauge_only = false;
};

void add_common(CLI::App *sub, Overrides &o) {
    qmem::ExperimentConfig d;
    sub->add_option("--config", o.config, "JSON experiment config");
    sub->add_option("--seed", o.seed, "master seed")->default_str(std::to_string(d.master_seed));
    sub->add_option("--out", o.out, "results CSV path (stdout when omitted)");
    sub->add_option("--threads", o.threads, "worker threads")->default_str(std::to_string(d.threads));
    sub->add_option("--family", o.family, "ising1d | ising2d | surface2d | toric3d")->default_str("surface2d");
    sub->add_option("--sizes", o.sizes, "linear sizes (n for ising1d)")->default_str("2 3 4");
    sub->add_option("--delta", o.delta, "check strength")->default_str("1");
    sub->add_flag("--gauge-only", o.gauge_only, "toric3d without star checks");
}

int run(qmem::ExperimentKind kind, const Overrides &o) {
    qmem::ExperimentConfig cfg;
    try {
        if (!o.config.empty()) {
            std::ifstream f(o.config);
            if (!f) {
                throw qmem::ConfigError("cannot read config " + o.config);
            }
            nlohmann::json j;
            try {
                j = nlohmann::json::parse(f);
            } catch (const nlohmann::json::exception &e) {
                throw qmem::ConfigError(std::string("config is not valid JSON: ") + e.what());
            }
            if (j.contains("kind") && j["kind"] != std::string(qmem::kind_name(kind))) {
                throw qmem::ConfigError("config kind " + j["kind"].dump() + " does not match subcommand");
            }
            cfg = qmem::config_from_json(j);
        }
        cfg.kind = kind;
        if (o.seed) cfg.master_seed = *o.seed;
        if (!o.out.empty()) cfg.output = o.out;
        if (o.threads) cfg.threads = *o.threads;
        if (o.family) cfg.family = qmem::parse_family(*o.family);
        if (o.sizes) cfg.sizes = *o.sizes;
        if (o.delta) cfg.build.delta = *o.delta;
        if (o.gauge_only) cfg.build.gauge_only = true;
        if (o.betas) cfg.betas = *o.betas;
        if (o.trials) cfg.trials = *o.trials;
        if (o.t_max) cfg.t_max = *o.t_max;
        if (o.check_interval) cfg.check_interval = *o.check_interval;
        if (o.decoder) cfg.decoder = qmem::parse_decoder(*o.decoder);
        if (o.tracked) {
            cfg.tracked.clear();
            for (const auto &t : *o.tracked) cfg.tracked.push_back(qmem::parse_observable(t));
        }
        if (o.target) cfg.target = qmem::LogicalTarget::parse(*o.target);
        if (o.method) cfg.method = qmem::parse_scan_method(*o.method);
        if (o.state_cap) cfg.state_cap = *o.state_cap;
        if (o.restarts) cfg.restarts = *o.restarts;
        if (o.epsilons) cfg.epsilons = *o.epsilons;
        if (o.direction) cfg.direction = qmem::parse_direction(*o.direction);
        cfg.validate();
    } catch (const std::invalid_argument &e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 1;
    }
    qmem::RunResult r;
    try {
        r = qmem::run_experiment(cfg);
    } catch (const qmem::ConfigError &e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 1;
    }
    if (cfg.output.empty()) {
        std::cout << qmem::results_csv(r.rows);
        std::cerr << r.summary.dump() << "\n";
    } else {
        std::cout << r.summary.dump(2) << "\n";
    }
    return r.exit_code();
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"qmem: energy barriers, thermal lifetimes and spectra of stabilizer memories"};
    app.require_subcommand(1);
    qmem::ExperimentConfig d;

    Overrides analyze;
    auto *a = app.add_subcommand("analyze", "code properties: n, k, checks, distance");
    add_common(a, analyze);

    Overrides barrier;
    auto *b = app.add_subcommand("barrier", "energy barrier between logical sectors");
    add_common(b, barrier);
    b->add_option("--target", barrier.target, "logical target, e.g. X0 or Z1")->default_str(d.target.str());
    b->add_option("--method", barrier.method, "exact | given_order | exhaustive_orders | annealed")->default_str("exact");
    b->add_option("--state-cap", barrier.state_cap, "state budget for exact search")->default_str(std::to_string(d.state_cap));
    b->add_option("--restarts", barrier.restarts, "annealing restarts")->default_str(std::to_string(d.restarts));

    Overrides dynamics;
    auto *dy = app.add_subcommand("dynamics", "Metropolis memory-lifetime trials");
    add_common(dy, dynamics);
    dy->add_option("--betas", dynamics.betas, "inverse temperatures")->default_str("2");
    dy->add_option("--trials", dynamics.trials, "trials per (L, beta)")->default_str(std::to_string(d.trials));
    dy->add_option("--t-max", dynamics.t_max, "sweep budget per trial")->default_str(std::to_string(d.t_max));
    dy->add_option("--check-interval", dynamics.check_interval, "sweeps between decodes")->default_str("1");
    dy->add_option("--decoder", dynamics.decoder, "majority | ml | greedy | match2d (family default when omitted)");
    dy->add_option("--tracked", dynamics.tracked, "X_ec Z_ec bit_ec (family default when omitted)");

    Overrides spectrum;
    auto *s = app.add_subcommand("spectrum", "low-lying spectrum under a uniform field");
    add_common(s, spectrum);
    s->add_option("--epsilons", spectrum.epsilons, "field strengths")->default_str("0.1");
    s->add_option("--direction", spectrum.direction, "Xfield | Zfield")->default_str("Zfield");

    std::string report_in;
    std::string report_json;
    auto *r = app.add_subcommand("report", "summarize a results CSV");
    r->add_option("results", report_in, "results CSV")->required();
    r->add_option("--json", report_json, "also write the JSON summary here");

    CLI11_PARSE(app, argc, argv);

    if (a->parsed()) return run(qmem::ExperimentKind::analyze, analyze);
    if (b->parsed()) return run(qmem::ExperimentKind::barrier, barrier);
    if (dy->parsed()) return run(qmem::ExperimentKind::dynamics, dynamics);
    if (s->parsed()) return run(qmem::ExperimentKind::spectrum, spectrum);

    qmem::Report rep;
    try {
        rep = qmem::report_file(report_in);
    } catch (const std::invalid_argument &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    std::cout << rep.text();
    if (!report_json.empty()) {
        std::ofstream f(report_json);
        f << rep.json().dump(2) << "\n";
    }
    return 0;
}
