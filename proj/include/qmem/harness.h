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

#ifndef QMEM_HARNESS_H
#define QMEM_HARNESS_H

#include <iosfwd>
#include <json.hpp>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qmem/barrier.h"
#include "qmem/decoders.h"
#include "qmem/spectral.h"
#include "qmem/thermal.h"

namespace qmem {

inline constexpr std::string_view kVersion = "0.1.0";

enum class ExperimentKind : uint8_t { analyze, barrier, dynamics, spectrum };
std::string_view kind_name(ExperimentKind k);
ExperimentKind parse_kind(std::string_view name);

class ConfigError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

struct ExperimentConfig {
    ExperimentKind kind = ExperimentKind::analyze;
    Family family = Family::surface2d;
    std::vector<size_t> sizes{2, 3, 4};
    BuildOptions build;
    uint64_t master_seed = 1;
    std::string output;
    size_t threads = 1;

    // dynamics
    std::vector<double> betas{2.0};
    size_t trials = 10;
    uint64_t t_max = 10000;
    uint64_t check_interval = 1;
    /// Default decoder of the family when unset.
    std::optional<DecoderId> decoder;
    /// Default observables of the family when empty.
    std::vector<Observable> tracked;

    // barrier
    LogicalTarget target;
    ScanMethod method = ScanMethod::exact;
    size_t state_cap = kDefaultStateCap;
    size_t restarts = 16;

    // spectrum
    std::vector<double> epsilons{0.1};
    FieldDirection direction = FieldDirection::z_field;

    // analyze
    /// Weight cap for distance searches above the exact-search size limit.
    size_t distance_cap = 8;

    /// Throws ConfigError.
    void validate() const;
};

/// Missing fields keep their defaults; unknown fields are a ConfigError.
ExperimentConfig config_from_json(const nlohmann::json &j);
nlohmann::json config_to_json(const ExperimentConfig &cfg);

/// Seed of one trial: derive_seed(master, grid key, trial) where the grid key
/// depends only on (family, L, beta).
uint64_t trial_seed(uint64_t master_seed, Family family, size_t L, double beta, size_t trial);

struct ResultRow {
    std::string kind;
    std::string family;
    size_t L = 0;
    std::optional<double> beta;
    uint64_t seed = 0;
    std::string decoder;
    std::string observable;
    /// Empty for refused measurements.
    std::string value;
    bool censored = false;
    std::string extra_json;
};

inline constexpr std::string_view kResultsHeader = "kind,family,L,beta,seed,decoder,observable,value,censored,extra_json";

/// Shortest round-trip decimal.
std::string format_double(double x);
std::string results_csv(const std::vector<ResultRow> &rows);
/// RFC 4180 field splitting (quoted fields, doubled quotes).
std::vector<std::string> split_csv_line(std::string_view line);

struct RunResult {
    std::vector<ResultRow> rows;
    size_t refused = 0;
    nlohmann::json summary;

    /// 0 on success, 2 when any sub-job was refused.
    int exit_code() const { return refused ? 2 : 0; }
};

/// Executes the configured grid; rows are in canonical order regardless of
/// thread count. Writes the CSV to cfg.output when it is set.
RunResult run_experiment(const ExperimentConfig &cfg);

struct FitResult {
    double slope = 0;
    double intercept = 0;
    double slope_stderr = 0;
    size_t points = 0;
};

/// Least squares of log(tau) against beta. Needs >= 3 distinct betas and tau > 0.
FitResult fit_arrhenius(const std::vector<std::pair<double, double>> &beta_tau);

struct LifetimeGroup {
    std::string family;
    size_t L = 0;
    double beta = 0;
    std::string decoder;
    std::string observable;
    size_t trials = 0;
    size_t censored = 0;
    /// Censored trials count at their recorded value (t_max).
    double median = 0;
    bool median_censored = false;

    double censoring_rate() const { return trials ? static_cast<double>(censored) / static_cast<double>(trials) : 0; }
};

struct FitGroup {
    std::string family;
    size_t L = 0;
    std::string decoder;
    std::string observable;
    std::optional<FitResult> fit;
    std::string note;
};

struct Report {
    std::vector<LifetimeGroup> lifetimes;
    std::vector<FitGroup> fits;
    /// Non-lifetime measurements passed through: (family, L, observable, value).
    std::vector<ResultRow> measurements;
    std::vector<std::string> errors;
    size_t rows = 0;

    std::string text() const;
    nlohmann::json json() const;
};

/// Parses a results file (schema above). Malformed rows are recorded in
/// `errors` with their line numbers and skipped.
Report build_report(std::istream &in);
Report report_file(const std::string &path);

std::optional<double> median_of(std::vector<double> values);

}  // namespace qmem

#endif
