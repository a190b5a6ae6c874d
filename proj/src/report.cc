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

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <map>
#include <sstream>
#include <tuple>

#include "qmem/harness.h"

namespace qmem {

using nlohmann::json;

std::optional<double> median_of(std::vector<double> values) {
    if (values.empty()) {
        return std::nullopt;
    }
    std::sort(values.begin(), values.end());
    size_t h = values.size() / 2;
    if (values.size() % 2) {
        return values[h];
    }
    return (values[h - 1] + values[h]) / 2;
}

namespace {

struct Sample {
    double value;
    bool censored;
};

bool starts_with(std::string_view s, std::string_view prefix) { return s.substr(0, prefix.size()) == prefix; }

}  // namespace

Report build_report(std::istream &in) {
    Report rep;
    std::string line;
    size_t line_no = 0;
    std::map<std::string, size_t> col;
    static const std::vector<std::string> required{
        "kind", "family", "L", "beta", "seed", "decoder", "observable", "value", "censored", "extra_json"};
    using Key = std::tuple<std::string, size_t, double, std::string, std::string>;
    std::map<Key, std::vector<Sample>> groups;
    while (std::getline(in, line)) {
        line_no++;
        if (line.empty() || line == "\r") {
            continue;
        }
        std::vector<std::string> f;
        try {
            f = split_csv_line(line);
        } catch (const std::invalid_argument &e) {
            rep.errors.push_back("line " + std::to_string(line_no) + ": " + e.what());
            continue;
        }
        if (col.empty()) {
            for (size_t i = 0; i < f.size(); i++) {
                col[f[i]] = i;
            }
            for (const auto &name : required) {
                if (!col.count(name)) {
                    rep.errors.push_back("line " + std::to_string(line_no) + ": header lacks column '" + name + "'");
                    return rep;
                }
            }
            continue;
        }
        auto get = [&](const std::string &name) -> const std::string & { return f.at(col.at(name)); };
        try {
            if (f.size() < col.size()) {
                throw std::invalid_argument("expected " + std::to_string(col.size()) + " fields, got " + std::to_string(f.size()));
            }
            ResultRow r;
            r.kind = get("kind");
            r.family = get("family");
            r.L = std::stoul(get("L"));
            if (!get("beta").empty()) {
                r.beta = std::stod(get("beta"));
            }
            r.seed = std::stoull(get("seed"));
            r.decoder = get("decoder");
            r.observable = get("observable");
            r.value = get("value");
            const auto &c = get("censored");
            if (c != "0" && c != "1") {
                throw std::invalid_argument("censored must be 0 or 1");
            }
            r.censored = c == "1";
            r.extra_json = get("extra_json");
            rep.rows++;
            if (r.kind == "dynamics" && starts_with(r.observable, "lifetime_")) {
                if (r.value.empty()) {
                    continue;
                }
                if (!r.beta) {
                    throw std::invalid_argument("lifetime row without beta");
                }
                double v = std::stod(r.value);
                groups[{r.family, r.L, *r.beta, r.decoder, r.observable}].push_back({v, r.censored});
            } else {
                rep.measurements.push_back(std::move(r));
            }
        } catch (const std::exception &e) {
            rep.errors.push_back("line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    for (auto &[key, samples] : groups) {
        LifetimeGroup g;
        std::tie(g.family, g.L, g.beta, g.decoder, g.observable) = key;
        g.trials = samples.size();
        std::sort(samples.begin(), samples.end(), [](const Sample &a, const Sample &b) {
            return std::tie(a.value, a.censored) < std::tie(b.value, b.censored);
        });
        std::vector<double> values;
        for (const auto &s : samples) {
            values.push_back(s.value);
            g.censored += s.censored;
        }
        g.median = *median_of(values);
        size_t h = samples.size() / 2;
        g.median_censored = samples[h].censored || (samples.size() % 2 == 0 && samples[h - 1].censored);
        rep.lifetimes.push_back(std::move(g));
    }
    std::map<std::tuple<std::string, size_t, std::string, std::string>, std::vector<const LifetimeGroup *>> by_curve;
    for (const auto &g : rep.lifetimes) {
        by_curve[{g.family, g.L, g.decoder, g.observable}].push_back(&g);
    }
    for (const auto &[key, gs] : by_curve) {
        FitGroup fg;
        std::tie(fg.family, fg.L, fg.decoder, fg.observable) = key;
        std::vector<std::pair<double, double>> points;
        for (const auto *g : gs) {
            if (!g->median_censored) {
                points.emplace_back(g->beta, g->median);
            }
        }
        try {
            fg.fit = fit_arrhenius(points);
        } catch (const std::invalid_argument &e) {
            fg.note = e.what();
        }
        rep.fits.push_back(std::move(fg));
    }
    return rep;
}

Report report_file(const std::string &path) {
    std::ifstream f(path);
    if (!f) {
        throw std::invalid_argument("cannot read " + path);
    }
    return build_report(f);
}

std::string Report::text() const {
    std::ostringstream out;
    out << "rows: " << rows << "\n";
    if (!lifetimes.empty()) {
        out << "\nlifetimes (median sweeps, censored counted at t_max)\n";
        out << std::left << std::setw(10) << "family" << std::setw(5) << "L" << std::setw(8) << "beta" << std::setw(10)
            << "decoder" << std::setw(18) << "observable" << std::setw(8) << "trials" << std::setw(12) << "median"
            << "censored\n";
        for (const auto &g : lifetimes) {
            out << std::left << std::setw(10) << g.family << std::setw(5) << g.L << std::setw(8) << format_double(g.beta)
                << std::setw(10) << g.decoder << std::setw(18) << g.observable << std::setw(8) << g.trials << std::setw(12)
                << format_double(g.median) << std::fixed << std::setprecision(0) << 100 * g.censoring_rate() << "%"
                << std::defaultfloat << "\n";
        }
    }
    if (!fits.empty()) {
        out << "\nArrhenius fits: log(median) = intercept + slope * beta\n";
        for (const auto &f : fits) {
            out << f.family << " L=" << f.L << " " << f.decoder << " " << f.observable << ": ";
            if (f.fit) {
                out << "slope " << format_double(f.fit->slope) << " +- " << format_double(f.fit->slope_stderr) << " ("
                    << f.fit->points << " points)\n";
            } else {
                out << "no fit (" << f.note << ")\n";
            }
        }
    }
    if (!measurements.empty()) {
        out << "\nmeasurements\n";
        for (const auto &m : measurements) {
            out << m.kind << " " << m.family << " L=" << m.L << " " << m.observable << " = "
                << (m.value.empty() ? "refused" : m.value) << "\n";
        }
    }
    for (const auto &e : errors) {
        out << "error: " << e << "\n";
    }
    return out.str();
}

json Report::json() const {
    nlohmann::json j;
    j["rows"] = rows;
    j["lifetimes"] = nlohmann::json::array();
    for (const auto &g : lifetimes) {
        j["lifetimes"].push_back(
            {{"family", g.family},
             {"L", g.L},
             {"beta", g.beta},
             {"decoder", g.decoder},
             {"observable", g.observable},
             {"trials", g.trials},
             {"censored", g.censored},
             {"censoring_rate", g.censoring_rate()},
             {"median", g.median},
             {"median_censored", g.median_censored}});
    }
    j["fits"] = nlohmann::json::array();
    for (const auto &f : fits) {
        nlohmann::json e{{"family", f.family}, {"L", f.L}, {"decoder", f.decoder}, {"observable", f.observable}};
        if (f.fit) {
            e["slope"] = f.fit->slope;
            e["intercept"] = f.fit->intercept;
            e["slope_stderr"] = f.fit->slope_stderr;
            e["points"] = f.fit->points;
        } else {
            e["note"] = f.note;
        }
        j["fits"].push_back(e);
    }
    j["measurements"] = nlohmann::json::array();
    for (const auto &m : measurements) {
        j["measurements"].push_back(
            {{"kind", m.kind}, {"family", m.family}, {"L", m.L}, {"observable", m.observable}, {"value", m.value}});
    }
    j["errors"] = errors;
    return j;
}

}  // namespace qmem
