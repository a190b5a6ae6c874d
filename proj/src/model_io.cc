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

#include "qmem/model_io.h"

#include <stdexcept>

#include "json.hpp"

namespace qmem {

using nlohmann::json;

std::string model_to_json(const CodeModel &m, int indent) {
    json doc;
    doc["format"] = "qmem.code_model";
    doc["version"] = kModelFormatVersion;
    doc["family"] = family_name(m.family);
    doc["n"] = m.n;
    doc["delta"] = m.delta;
    doc["classical"] = m.classical;
    doc["gauge_only"] = m.gauge_only;
    doc["boundary"] = boundary_name(m.boundary);
    doc["dimension"] = m.dimension;
    doc["linear_size"] = m.linear_size;
    json checks = json::array();
    for (const auto &c : m.checks) {
        checks.push_back({{"type", c.type == CheckType::Z ? "Z" : "X"}, {"qubits", c.qubits()}, {"location", c.location}});
    }
    doc["checks"] = std::move(checks);
    json logicals = json::array();
    for (const auto &p : m.logicals) {
        logicals.push_back({{"X", p.x.str()}, {"Z", p.z.str()}});
    }
    doc["logicals"] = std::move(logicals);
    return doc.dump(indent);
}

CodeModel model_from_json(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error &e) {
        throw std::invalid_argument(std::string("model JSON parse error: ") + e.what());
    }
    try {
        if (doc.at("format").get<std::string>() != "qmem.code_model") {
            throw std::invalid_argument("not a qmem.code_model document");
        }
        int version = doc.at("version").get<int>();
        if (version != kModelFormatVersion) {
            throw std::invalid_argument("unsupported model format version " + std::to_string(version));
        }
        CodeModel m;
        m.family = parse_family(doc.at("family").get<std::string>());
        m.n = doc.at("n").get<size_t>();
        m.delta = doc.at("delta").get<double>();
        m.classical = doc.at("classical").get<bool>();
        m.gauge_only = doc.at("gauge_only").get<bool>();
        m.boundary = parse_boundary(doc.at("boundary").get<std::string>());
        m.dimension = doc.at("dimension").get<size_t>();
        m.linear_size = doc.at("linear_size").get<size_t>();
        for (const auto &c : doc.at("checks")) {
            std::string type = c.at("type").get<std::string>();
            if (type != "Z" && type != "X") {
                throw std::invalid_argument("check type must be \"Z\" or \"X\"");
            }
            CheckType t = type == "Z" ? CheckType::Z : CheckType::X;
            auto qubits = c.at("qubits").get<std::vector<size_t>>();
            m.checks.push_back(
                Check{PauliOperator::on(m.n, qubits, t == CheckType::Z ? PauliKind::Z : PauliKind::X),
                      t,
                      c.at("location").get<std::vector<int>>()});
        }
        for (const auto &p : doc.at("logicals")) {
            auto x = PauliOperator::from_str(p.at("X").get<std::string>());
            auto z = PauliOperator::from_str(p.at("Z").get<std::string>());
            if (x.num_qubits() != m.n || z.num_qubits() != m.n) {
                throw std::invalid_argument("logical string length does not match n");
            }
            m.logicals.push_back({std::move(x), std::move(z)});
        }
        return m;
    } catch (const json::exception &e) {
        throw std::invalid_argument(std::string("malformed model JSON: ") + e.what());
    } catch (const std::out_of_range &e) {
        throw std::invalid_argument(std::string("malformed model JSON: ") + e.what());
    }
}

}  // namespace qmem
