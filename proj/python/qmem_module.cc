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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qmem/barrier.h"
#include "qmem/code_analysis.h"
#include "qmem/decoders.h"
#include "qmem/energy.h"
#include "qmem/harness.h"
#include "qmem/model_io.h"
#include "qmem/spectral.h"
#include "qmem/thermal.h"

namespace py = pybind11;
using namespace qmem;

namespace {

BitVector bits_from_list(const std::vector<int> &bits) {
    BitVector v(bits.size());
    for (size_t i = 0; i < bits.size(); i++) {
        v.set(i, bits[i] != 0);
    }
    return v;
}

std::vector<int> bits_to_list(const BitVector &v) {
    std::vector<int> out(v.size());
    for (size_t i = 0; i < v.size(); i++) {
        out[i] = v.get(i);
    }
    return out;
}

py::dict barrier_dict(const BarrierResult &r) {
    py::dict d;
    d["model"] = r.model_id;
    d["target"] = r.target.str();
    d["barrier"] = r.barrier;
    d["method"] = std::string(method_name(r.method));
    d["seed"] = r.seed;
    d["states_explored"] = r.states_explored;
    py::list flips;
    for (const auto &f : r.witness) {
        flips.append(py::make_tuple(f.qubit, std::string(1, "IXZY"[static_cast<int>(f.kind)])));
    }
    d["witness"] = flips;
    return d;
}

}  // namespace

PYBIND11_MODULE(qmem, m) {
    m.doc() = "Energy barriers, thermal lifetimes and spectra of small stabilizer memories.";
    m.attr("__version__") = std::string(kVersion);

    py::register_exception<SearchRefused>(m, "SearchRefused");

    py::class_<PauliOperator>(m, "PauliOperator")
        .def(py::init([](const std::string &text) { return PauliOperator::from_str(text); }), py::arg("text"))
        .def_property_readonly("num_qubits", &PauliOperator::num_qubits)
        .def_property_readonly("weight", &PauliOperator::weight)
        .def("commutes", [](const PauliOperator &a, const PauliOperator &b) { return commutes(a, b); })
        .def("__mul__", [](const PauliOperator &a, const PauliOperator &b) { return a * b; })
        .def("__eq__", [](const PauliOperator &a, const PauliOperator &b) { return a == b; })
        .def("__str__", &PauliOperator::str)
        .def("__repr__", [](const PauliOperator &p) { return "qmem.PauliOperator('" + p.str() + "')"; });

    py::class_<CodeModel>(m, "CodeModel")
        .def_property_readonly("id", &CodeModel::id)
        .def_readonly("n", &CodeModel::n)
        .def_property_readonly("k", &CodeModel::k)
        .def_property_readonly("num_checks", &CodeModel::num_checks)
        .def_readonly("classical", &CodeModel::classical)
        .def_readonly("delta", &CodeModel::delta)
        .def_property_readonly(
            "checks",
            [](const CodeModel &c) {
                std::vector<std::string> out;
                for (const auto &ch : c.checks) out.push_back(ch.op.str());
                return out;
            })
        .def_property_readonly(
            "logicals",
            [](const CodeModel &c) {
                std::vector<std::pair<std::string, std::string>> out;
                for (const auto &l : c.logicals) out.emplace_back(l.x.str(), l.z.str());
                return out;
            })
        .def("to_json", [](const CodeModel &c) { return model_to_json(c, 2); })
        .def("__repr__", [](const CodeModel &c) { return "qmem.CodeModel('" + c.id() + "')"; });

    m.def(
        "build_model",
        [](const std::string &family, size_t size, bool gauge_only, double delta, const std::string &boundary) {
            BuildOptions o;
            o.gauge_only = gauge_only;
            o.delta = delta;
            o.boundary = parse_boundary(boundary);
            return build_model(parse_family(family), size, o);
        },
        py::arg("family"), py::arg("size"), py::arg("gauge_only") = false, py::arg("delta") = 1.0,
        py::arg("boundary") = "auto");
    m.def("model_from_json", &model_from_json, py::arg("text"));
    m.def(
        "validate_model",
        [](const CodeModel &c) {
            auto r = validate_model(c);
            return py::make_tuple(r.ok, r.violated);
        },
        py::arg("model"));
    m.def(
        "code_distance",
        [](const CodeModel &c, std::optional<size_t> cap) { return code_distance(c, cap).distance; }, py::arg("model"),
        py::arg("weight_cap") = py::none());
    m.def("check_rank", &check_rank, py::arg("model"));
    m.def(
        "syndrome",
        [](const CodeModel &c, const PauliOperator &e) { return bits_to_list(syndrome_energy(c, e).syndrome); },
        py::arg("model"), py::arg("error"));

    m.def(
        "exact_barrier",
        [](const CodeModel &c, const std::string &target, size_t cap) {
            return barrier_dict(exact_barrier(c, LogicalTarget::parse(target), cap));
        },
        py::arg("model"), py::arg("target") = "X0", py::arg("state_cap") = kDefaultStateCap);
    m.def(
        "ordered_flip_barrier",
        [](const CodeModel &c, const std::string &target, const std::string &strategy, uint64_t seed, size_t restarts) {
            auto t = LogicalTarget::parse(target);
            auto support = target_operator(c, t).support();
            OrderStrategy s = strategy == "given_order"         ? OrderStrategy::given_order
                              : strategy == "exhaustive_orders" ? OrderStrategy::exhaustive_orders
                              : strategy == "annealed"          ? OrderStrategy::annealed
                                                                : throw std::invalid_argument("unknown strategy " + strategy);
            AnnealOptions a;
            a.seed = seed;
            a.restarts = restarts;
            return barrier_dict(ordered_flip_barrier(c, support, t.kind, s, a));
        },
        py::arg("model"), py::arg("target"), py::arg("strategy") = "annealed", py::arg("seed") = 1,
        py::arg("restarts") = 16);

    m.def(
        "decode",
        [](const std::string &decoder, const CodeModel &c, const std::vector<int> &syndrome, uint64_t seed) {
            auto r = decode(parse_decoder(decoder), c, bits_from_list(syndrome), seed);
            return py::make_tuple(r.correction, r.cleared, r.cost);
        },
        py::arg("decoder"), py::arg("model"), py::arg("syndrome"), py::arg("seed") = 0);

    m.def(
        "equilibrium_energy_check",
        [](const CodeModel &c, double beta, size_t sweeps, size_t burn_in, uint64_t seed) {
            Rng rng(seed);
            auto r = equilibrium_energy_check(c, beta, sweeps, burn_in, rng);
            return py::make_tuple(r.estimate, r.stderr_estimate, r.exact);
        },
        py::arg("model"), py::arg("beta"), py::arg("sweeps"), py::arg("burn_in") = 1000, py::arg("seed") = 1);
    m.def(
        "lifetime_trial",
        [](const CodeModel &c, double beta, const std::string &decoder, uint64_t t_max, uint64_t check_interval,
           uint64_t seed) {
            LifetimeOptions o;
            o.t_max = t_max;
            o.check_interval = check_interval;
            auto r = lifetime_trial(c, beta, parse_decoder(decoder), o, seed);
            py::dict d;
            for (size_t i = 0; i < r.tracked.size(); i++) {
                d[py::str(std::string(observable_name(r.tracked[i])))] =
                    r.failure_sweep[i] ? py::cast(*r.failure_sweep[i]) : py::none();
            }
            return d;
        },
        py::arg("model"), py::arg("beta"), py::arg("decoder"), py::arg("t_max") = 10000, py::arg("check_interval") = 1,
        py::arg("seed") = 1);

    m.def(
        "ground_splitting",
        [](const CodeModel &c, double epsilon, const std::string &direction) {
            auto r = ground_splitting(c, Perturbation{parse_direction(direction), epsilon});
            py::dict d;
            d["eigenvalues"] = r.eigenvalues;
            d["splitting"] = r.splitting;
            d["gap"] = r.gap;
            d["ground_degeneracy"] = r.ground_degeneracy;
            d["max_residual"] = r.max_residual();
            d["method"] = r.method;
            return d;
        },
        py::arg("model"), py::arg("epsilon"), py::arg("direction") = "Zfield");

    m.def(
        "run_experiment",
        [](const std::string &config_json) {
            auto cfg = config_from_json(nlohmann::json::parse(config_json));
            auto r = run_experiment(cfg);
            return py::make_tuple(results_csv(r.rows), r.summary.dump(), r.exit_code());
        },
        py::arg("config_json"));
    m.def(
        "fit_arrhenius",
        [](const std::vector<std::pair<double, double>> &points) {
            auto f = fit_arrhenius(points);
            return py::make_tuple(f.slope, f.intercept, f.slope_stderr);
        },
        py::arg("points"));
}
