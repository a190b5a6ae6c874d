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

#include "qmem/harness.h"

#include <algorithm>
#include <atomic>
#include <bit>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include "qmem/code_analysis.h"

namespace qmem {

using nlohmann::json;

std::string_view kind_name(ExperimentKind k) {
    switch (k) {
        case ExperimentKind::analyze:
            return "analyze";
        case ExperimentKind::barrier:
            return "barrier";
        case ExperimentKind::dynamics:
            return "dynamics";
        case ExperimentKind::spectrum:
            return "spectrum";
    }
    return "unknown";
}

ExperimentKind parse_kind(std::string_view name) {
    for (auto k : {ExperimentKind::analyze, ExperimentKind::barrier, ExperimentKind::dynamics, ExperimentKind::spectrum}) {
        if (kind_name(k) == name) {
            return k;
        }
    }
    throw ConfigError("unknown experiment kind '" + std::string(name) + "'");
}

void ExperimentConfig::validate() const {
    auto fail = [](const std::string &msg) { throw ConfigError(msg); };
    if (sizes.empty()) {
        fail("sizes must be non-empty");
    }
    if (threads == 0) {
        fail("threads must be >= 1");
    }
    if (build.delta <= 0) {
        fail("delta must be > 0");
    }
    if (kind == ExperimentKind::dynamics) {
        if (betas.empty()) {
            fail("betas must be non-empty");
        }
        for (double b : betas) {
            if (std::isnan(b) || b < 0) {
                fail("betas must be >= 0");
            }
        }
        if (trials == 0) {
            fail("trials must be >= 1");
        }
        if (check_interval == 0) {
            fail("check_interval must be >= 1");
        }
        if (t_max < check_interval) {
            fail("t_max must be >= check_interval");
        }
        bool classical = family == Family::ising1d || family == Family::ising2d;
        if (decoder) {
            if (*decoder == DecoderId::majority && !classical) {
                fail("majority decoder needs an ising family");
            }
            if (*decoder == DecoderId::match2d && family != Family::surface2d) {
                fail("match2d decoder needs surface2d");
            }
        }
        for (auto o : tracked) {
            if (classical != (o == Observable::bit_ec)) {
                fail(std::string(observable_name(o)) + " is not defined for " + std::string(family_name(family)));
            }
        }
    }
    if (kind == ExperimentKind::spectrum && epsilons.empty()) {
        fail("epsilons must be non-empty");
    }
    if (kind == ExperimentKind::barrier && restarts == 0) {
        fail("restarts must be >= 1");
    }
}

namespace {

template <typename T>
void read(const json &j, const char *key, T &out) {
    if (j.contains(key)) {
        out = j.at(key).get<T>();
    }
}

}  // namespace

ExperimentConfig config_from_json(const json &j) {
    static const std::set<std::string> known{
        "kind",     "family",      "sizes",          "gauge_only", "delta",     "boundary",   "master_seed",
        "output",   "threads",     "betas",          "trials",     "t_max",     "check_interval", "decoder",
        "tracked",  "target",      "method",         "state_cap",  "restarts",  "epsilons",   "direction",
        "distance_cap"};
    if (!j.is_object()) {
        throw ConfigError("config must be a JSON object");
    }
    for (const auto &[key, value] : j.items()) {
        if (!known.count(key)) {
            throw ConfigError("unknown config field '" + key + "'");
        }
    }
    ExperimentConfig cfg;
    try {
        if (j.contains("kind")) {
            cfg.kind = parse_kind(j.at("kind").get<std::string>());
        }
        if (j.contains("family")) {
            cfg.family = parse_family(j.at("family").get<std::string>());
        }
        read(j, "sizes", cfg.sizes);
        read(j, "gauge_only", cfg.build.gauge_only);
        read(j, "delta", cfg.build.delta);
        if (j.contains("boundary")) {
            cfg.build.boundary = parse_boundary(j.at("boundary").get<std::string>());
        }
        read(j, "master_seed", cfg.master_seed);
        read(j, "output", cfg.output);
        read(j, "threads", cfg.threads);
        read(j, "betas", cfg.betas);
        read(j, "trials", cfg.trials);
        read(j, "t_max", cfg.t_max);
        read(j, "check_interval", cfg.check_interval);
        if (j.contains("decoder") && !j.at("decoder").is_null()) {
            cfg.decoder = parse_decoder(j.at("decoder").get<std::string>());
        }
        if (j.contains("tracked")) {
            cfg.tracked.clear();
            for (const auto &o : j.at("tracked")) {
                cfg.tracked.push_back(parse_observable(o.get<std::string>()));
            }
        }
        if (j.contains("target")) {
            cfg.target = LogicalTarget::parse(j.at("target").get<std::string>());
        }
        if (j.contains("method")) {
            cfg.method = parse_scan_method(j.at("method").get<std::string>());
        }
        read(j, "state_cap", cfg.state_cap);
        read(j, "restarts", cfg.restarts);
        read(j, "epsilons", cfg.epsilons);
        if (j.contains("direction")) {
            cfg.direction = parse_direction(j.at("direction").get<std::string>());
        }
        read(j, "distance_cap", cfg.distance_cap);
    } catch (const ConfigError &) {
        throw;
    } catch (const std::exception &e) {
        throw ConfigError(std::string("bad config: ") + e.what());
    }
    return cfg;
}

json config_to_json(const ExperimentConfig &cfg) {
    json j;
    j["kind"] = kind_name(cfg.kind);
    j["family"] = family_name(cfg.family);
    j["sizes"] = cfg.sizes;
    j["gauge_only"] = cfg.build.gauge_only;
    j["delta"] = cfg.build.delta;
    j["boundary"] = boundary_name(cfg.build.boundary);
    j["master_seed"] = cfg.master_seed;
    j["output"] = cfg.output;
    j["threads"] = cfg.threads;
    j["betas"] = cfg.betas;
    j["trials"] = cfg.trials;
    j["t_max"] = cfg.t_max;
    j["check_interval"] = cfg.check_interval;
    j["decoder"] = cfg.decoder ? json(decoder_name(*cfg.decoder)) : json(nullptr);
    std::vector<std::string> tracked;
    for (auto o : cfg.tracked) {
        tracked.emplace_back(observable_name(o));
    }
    j["tracked"] = tracked;
    j["target"] = cfg.target.str();
    j["method"] = scan_method_name(cfg.method);
    j["state_cap"] = cfg.state_cap;
    j["restarts"] = cfg.restarts;
    j["epsilons"] = cfg.epsilons;
    j["direction"] = direction_name(cfg.direction);
    j["distance_cap"] = cfg.distance_cap;
    return j;
}

uint64_t trial_seed(uint64_t master_seed, Family family, size_t L, double beta, size_t trial) {
    uint64_t key = derive_seed(static_cast<uint64_t>(family) + 1, L, std::bit_cast<uint64_t>(beta));
    return derive_seed(master_seed, key, trial);
}

std::string format_double(double x) {
    if (std::isnan(x)) {
        return "nan";
    }
    if (std::isinf(x)) {
        return x > 0 ? "inf" : "-inf";
    }
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, end);
}

namespace {

std::string csv_field(const std::string &s) {
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') {
            out += '"';
        }
        out += c;
    }
    out += '"';
    return out;
}

}  // namespace

std::string results_csv(const std::vector<ResultRow> &rows) {
    std::string out(kResultsHeader);
    out += '\n';
    for (const auto &r : rows) {
        out += csv_field(r.kind) + ',' + csv_field(r.family) + ',' + std::to_string(r.L) + ',' +
               (r.beta ? format_double(*r.beta) : "") + ',' + std::to_string(r.seed) + ',' + csv_field(r.decoder) + ',' +
               csv_field(r.observable) + ',' + csv_field(r.value) + ',' + (r.censored ? "1" : "0") + ',' +
               csv_field(r.extra_json) + '\n';
    }
    return out;
}

std::vector<std::string> split_csv_line(std::string_view line) {
    std::vector<std::string> fields;
    std::string cur;
    bool quoted = false;
    for (size_t i = 0; i < line.size(); i++) {
        char c = line[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    cur += '"';
                    i++;
                } else {
                    quoted = false;
                }
            } else {
                cur += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            fields.push_back(std::move(cur));
            cur.clear();
        } else if (c != '\r') {
            cur += c;
        }
    }
    if (quoted) {
        throw std::invalid_argument("unterminated quoted field");
    }
    fields.push_back(std::move(cur));
    return fields;
}

namespace {

using Job = std::function<std::vector<ResultRow>()>;

std::vector<ResultRow> run_jobs(const std::vector<Job> &jobs, size_t threads) {
    std::vector<std::vector<ResultRow>> slots(jobs.size());
    std::atomic<size_t> next{0};
    auto worker = [&]() {
        for (size_t i = next++; i < jobs.size(); i = next++) {
            slots[i] = jobs[i]();
        }
    };
    size_t count = std::max<size_t>(1, std::min(threads, jobs.size()));
    if (count == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (size_t t = 0; t < count; t++) {
            pool.emplace_back(worker);
        }
        for (auto &t : pool) {
            t.join();
        }
    }
    std::vector<ResultRow> rows;
    for (auto &s : slots) {
        for (auto &r : s) {
            rows.push_back(std::move(r));
        }
    }
    return rows;
}

ResultRow base_row(const ExperimentConfig &cfg, size_t L) {
    ResultRow r;
    r.kind = kind_name(cfg.kind);
    r.family = family_name(cfg.family);
    r.L = L;
    return r;
}

std::string extra(json j) {
    j["version"] = kVersion;
    return j.dump();
}

std::string opt_string(const std::optional<size_t> &v) { return v ? std::to_string(*v) : ""; }

std::vector<ResultRow> analyze_job(const ExperimentConfig &cfg, size_t L) {
    std::vector<ResultRow> rows;
    auto add = [&](const std::string &observable, const std::string &value, json e = json::object()) {
        ResultRow r = base_row(cfg, L);
        r.observable = observable;
        r.value = value;
        r.extra_json = extra(std::move(e));
        rows.push_back(std::move(r));
    };
    CodeModel m;
    try {
        m = build_model(cfg.family, L, cfg.build);
    } catch (const std::invalid_argument &e) {
        add("n", "", {{"refused", e.what()}});
        return rows;
    }
    json id{{"model", m.id()}};
    add("n", std::to_string(m.n), id);
    add("k", std::to_string(m.k()), id);
    add("checks", std::to_string(m.num_checks()), id);
    add("check_rank", std::to_string(check_rank(m)), id);
    add("valid", validate_model(m).ok ? "1" : "0", id);
    std::optional<size_t> cap;
    if (m.n > kExactDistanceMaxQubits || m.k() > kExactDistanceMaxLogicals) {
        cap = cfg.distance_cap;
    }
    try {
        DistanceResult d = code_distance(m, cap);
        json e = id;
        e["exhausted"] = d.exhausted;
        if (cap) {
            e["weight_cap"] = *cap;
        }
        add("distance", opt_string(d.distance), e);
        add("x_distance", opt_string(d.x_distance), e);
        add("z_distance", opt_string(d.z_distance), e);
    } catch (const std::exception &e) {
        add("distance", "", {{"model", m.id()}, {"refused", e.what()}});
    }
    return rows;
}

std::vector<ResultRow> barrier_job(const ExperimentConfig &cfg, size_t L) {
    AnnealOptions anneal;
    anneal.seed = trial_seed(cfg.master_seed, cfg.family, L, 0.0, 0);
    anneal.restarts = cfg.restarts;
    std::vector<size_t> one{L};
    BarrierScan scan = barrier_scan(cfg.family, one, cfg.target, cfg.method, cfg.build, anneal, cfg.state_cap);
    ResultRow r = base_row(cfg, L);
    r.observable = "barrier_" + cfg.target.str();
    const auto &row = scan.rows.at(0);
    if (row.result) {
        r.value = std::to_string(row.result->barrier);
        r.seed = row.result->seed;
        r.extra_json = extra(
            {{"model", row.result->model_id},
             {"method", std::string(scan_method_name(cfg.method))},
             {"witness_length", row.result->witness.size()},
             {"states_explored", row.result->states_explored}});
    } else {
        r.extra_json = extra({{"method", std::string(scan_method_name(cfg.method))}, {"refused", row.refusal}});
    }
    return {r};
}

std::vector<ResultRow> spectrum_job(const ExperimentConfig &cfg, size_t L, double epsilon) {
    std::vector<ResultRow> rows;
    json base{{"epsilon", epsilon}, {"direction", std::string(direction_name(cfg.direction))}};
    auto add = [&](const std::string &observable, const std::string &value, json e) {
        ResultRow r = base_row(cfg, L);
        r.observable = observable;
        r.value = value;
        r.extra_json = extra(std::move(e));
        rows.push_back(std::move(r));
    };
    try {
        CodeModel m = build_model(cfg.family, L, cfg.build);
        SpectrumReport s = ground_splitting(m, Perturbation{cfg.direction, epsilon});
        json e = base;
        e["model"] = m.id();
        e["method"] = s.method;
        e["max_residual"] = s.max_residual();
        json with_levels = e;
        with_levels["eigenvalues"] = s.eigenvalues;
        add("splitting", format_double(s.splitting), with_levels);
        add("gap", format_double(s.gap), e);
        add("E0", format_double(s.eigenvalues.at(0)), e);
        add("ground_degeneracy", std::to_string(s.ground_degeneracy), e);
    } catch (const EigenNonConvergence &ex) {
        json e = base;
        e["refused"] = ex.what();
        e["residuals"] = ex.residuals;
        add("splitting", "", e);
    } catch (const std::invalid_argument &ex) {
        json e = base;
        e["refused"] = ex.what();
        add("splitting", "", e);
    }
    return rows;
}

std::vector<ResultRow> dynamics_job(
    const ExperimentConfig &cfg, const CodeModel &m, DecoderId decoder, const std::vector<Observable> &tracked, double beta,
    size_t trial) {
    uint64_t seed = trial_seed(cfg.master_seed, cfg.family, m.linear_size, beta, trial);
    LifetimeOptions opts;
    opts.t_max = cfg.t_max;
    opts.check_interval = cfg.check_interval;
    opts.tracked = tracked;
    LifetimeRecord rec = lifetime_trial(m, beta, decoder, opts, seed);
    json e{
        {"model", rec.model_id},
        {"trial", trial},
        {"master_seed", cfg.master_seed},
        {"t_max", rec.t_max},
        {"check_interval", rec.check_interval},
        {"skipped_snapshots", rec.skipped_snapshots},
        {"sweeps", rec.sweeps_run},
        {"delta", m.delta},
        {"gauge_only", m.gauge_only}};
    std::string extra_json = extra(e);
    std::vector<ResultRow> rows;
    auto add = [&](const std::string &observable, const std::optional<uint64_t> &failure) {
        ResultRow r = base_row(cfg, m.linear_size);
        r.beta = beta;
        r.seed = seed;
        r.decoder = decoder_name(decoder);
        r.observable = observable;
        r.value = std::to_string(failure.value_or(rec.t_max));
        r.censored = !failure;
        r.extra_json = extra_json;
        rows.push_back(std::move(r));
    };
    for (size_t i = 0; i < tracked.size(); i++) {
        add("lifetime_" + std::string(observable_name(tracked[i])), rec.failure_sweep[i]);
    }
    add("lifetime_memory", rec.memory_failure());
    return rows;
}

}  // namespace

RunResult run_experiment(const ExperimentConfig &cfg) {
    cfg.validate();
    std::vector<size_t> sizes = cfg.sizes;
    std::sort(sizes.begin(), sizes.end());
    sizes.erase(std::unique(sizes.begin(), sizes.end()), sizes.end());

    std::vector<Job> jobs;
    std::vector<CodeModel> models;
    std::vector<ResultRow> early;
    if (cfg.kind == ExperimentKind::dynamics) {
        std::vector<double> betas = cfg.betas;
        std::sort(betas.begin(), betas.end());
        betas.erase(std::unique(betas.begin(), betas.end()), betas.end());
        models.reserve(sizes.size());
        for (size_t L : sizes) {
            try {
                models.push_back(build_model(cfg.family, L, cfg.build));
            } catch (const std::invalid_argument &e) {
                ResultRow r = base_row(cfg, L);
                r.observable = "lifetime_memory";
                r.extra_json = extra({{"refused", e.what()}});
                early.push_back(std::move(r));
            }
        }
        for (const auto &m : models) {
            DecoderId decoder = cfg.decoder.value_or(default_decoder(m));
            std::vector<Observable> tracked = cfg.tracked.empty() ? default_tracked(m) : cfg.tracked;
            for (double beta : betas) {
                for (size_t t = 0; t < cfg.trials; t++) {
                    const CodeModel *mp = &m;
                    jobs.push_back([&cfg, mp, decoder, tracked, beta, t]() {
                        return dynamics_job(cfg, *mp, decoder, tracked, beta, t);
                    });
                }
            }
        }
    } else {
        for (size_t L : sizes) {
            switch (cfg.kind) {
                case ExperimentKind::analyze:
                    jobs.push_back([&cfg, L]() { return analyze_job(cfg, L); });
                    break;
                case ExperimentKind::barrier:
                    jobs.push_back([&cfg, L]() { return barrier_job(cfg, L); });
                    break;
                case ExperimentKind::spectrum:
                    for (double eps : cfg.epsilons) {
                        jobs.push_back([&cfg, L, eps]() { return spectrum_job(cfg, L, eps); });
                    }
                    break;
                default:
                    break;
            }
        }
    }
    RunResult out;
    out.rows = std::move(early);
    for (auto &r : run_jobs(jobs, cfg.threads)) {
        out.rows.push_back(std::move(r));
    }
    std::stable_sort(out.rows.begin(), out.rows.end(), [](const ResultRow &a, const ResultRow &b) {
        if (a.L != b.L) {
            return a.L < b.L;
        }
        return a.beta.value_or(-1) < b.beta.value_or(-1);
    });

    std::map<std::pair<size_t, std::string>, std::pair<size_t, size_t>> censoring;
    for (const auto &r : out.rows) {
        if (r.value.empty()) {
            out.refused++;
        }
        if (r.kind == "dynamics" && !r.value.empty()) {
            auto &c = censoring[{r.L, (r.beta ? format_double(*r.beta) : "") + "/" + r.observable}];
            c.first++;
            c.second += r.censored;
        }
    }
    json summary{
        {"kind", std::string(kind_name(cfg.kind))},
        {"family", std::string(family_name(cfg.family))},
        {"rows", out.rows.size()},
        {"refused", out.refused},
        {"partial", out.refused > 0},
        {"version", kVersion}};
    json cens = json::array();
    for (const auto &[key, c] : censoring) {
        cens.push_back(
            {{"L", key.first},
             {"point", key.second},
             {"trials", c.first},
             {"censored", c.second},
             {"rate", static_cast<double>(c.second) / static_cast<double>(c.first)}});
    }
    summary["censoring"] = cens;
    out.summary = summary;
    if (!cfg.output.empty()) {
        std::ofstream f(cfg.output, std::ios::binary);
        if (!f) {
            throw std::runtime_error("cannot write " + cfg.output);
        }
        f << results_csv(out.rows);
    }
    return out;
}

FitResult fit_arrhenius(const std::vector<std::pair<double, double>> &beta_tau) {
    std::set<double> distinct;
    for (const auto &[b, t] : beta_tau) {
        if (!(t > 0)) {
            throw std::invalid_argument("lifetimes must be positive for an Arrhenius fit");
        }
        distinct.insert(b);
    }
    if (distinct.size() < 3) {
        throw std::invalid_argument("Arrhenius fit needs at least 3 distinct betas");
    }
    const double n = static_cast<double>(beta_tau.size());
    double sx = 0, sy = 0;
    for (const auto &[b, t] : beta_tau) {
        sx += b;
        sy += std::log(t);
    }
    double mx = sx / n, my = sy / n;
    double sxx = 0, sxy = 0;
    for (const auto &[b, t] : beta_tau) {
        sxx += (b - mx) * (b - mx);
        sxy += (b - mx) * (std::log(t) - my);
    }
    FitResult f;
    f.slope = sxy / sxx;
    f.intercept = my - f.slope * mx;
    double ss = 0;
    for (const auto &[b, t] : beta_tau) {
        double r = std::log(t) - (f.intercept + f.slope * b);
        ss += r * r;
    }
    f.slope_stderr = beta_tau.size() > 2 ? std::sqrt(ss / (n - 2) / sxx) : 0;
    f.points = beta_tau.size();
    return f;
}

}  // namespace qmem
