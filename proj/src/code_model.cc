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

#include "qmem/code_model.h"

#include <array>
#include <stdexcept>

#include "qmem/code_analysis.h"
#include "qmem/coset.h"
#include "qmem/gf2.h"

namespace qmem {

std::string_view family_name(Family f) {
    switch (f) {
        case Family::ising1d:
            return "ising1d";
        case Family::ising2d:
            return "ising2d";
        case Family::surface2d:
            return "surface2d";
        case Family::toric3d:
            return "toric3d";
    }
    throw std::invalid_argument("unknown family");
}

Family parse_family(std::string_view name) {
    for (Family f : {Family::ising1d, Family::ising2d, Family::surface2d, Family::toric3d}) {
        if (family_name(f) == name) {
            return f;
        }
    }
    throw std::invalid_argument("unknown family '" + std::string(name) + "'");
}

std::string_view boundary_name(Boundary b) {
    switch (b) {
        case Boundary::automatic:
            return "auto";
        case Boundary::open:
            return "open";
        case Boundary::periodic:
            return "periodic";
    }
    throw std::invalid_argument("unknown boundary");
}

Boundary parse_boundary(std::string_view name) {
    for (Boundary b : {Boundary::automatic, Boundary::open, Boundary::periodic}) {
        if (boundary_name(b) == name) {
            return b;
        }
    }
    throw std::invalid_argument("unknown boundary '" + std::string(name) + "'");
}

std::string CodeModel::id() const {
    std::string out(family_name(family));
    out += family == Family::ising1d ? "_n" : "_L";
    out += std::to_string(linear_size);
    if (boundary == Boundary::periodic && family != Family::toric3d) {
        out += "_periodic";
    }
    if (gauge_only) {
        out += "_gauge";
    }
    return out;
}

size_t surface_qubit_index(size_t L, size_t r, size_t c) { return (r * (2 * L - 1) + c) / 2; }

size_t toric_edge_index(size_t L, size_t x, size_t y, size_t z, size_t dir) {
    return 3 * ((x % L) + L * ((y % L) + L * (z % L))) + dir;
}

namespace {

Check make_check(size_t n, const std::vector<size_t> &qubits, CheckType type, std::vector<int> location) {
    return Check{PauliOperator::on(n, qubits, type == CheckType::Z ? PauliKind::Z : PauliKind::X), type, std::move(location)};
}

std::vector<size_t> all_qubits(size_t n) {
    std::vector<size_t> q(n);
    for (size_t i = 0; i < n; i++) {
        q[i] = i;
    }
    return q;
}

CodeModel build_ising1d(size_t n, bool periodic) {
    if (periodic && n < 3) {
        throw std::invalid_argument("periodic ising1d needs n >= 3");
    }
    CodeModel m;
    m.family = Family::ising1d;
    m.n = n;
    m.classical = true;
    m.dimension = 1;
    m.linear_size = n;
    for (size_t i = 0; i + 1 < n; i++) {
        m.checks.push_back(make_check(n, {i, i + 1}, CheckType::Z, {static_cast<int>(i)}));
    }
    if (periodic) {
        m.checks.push_back(make_check(n, {0, n - 1}, CheckType::Z, {static_cast<int>(n - 1)}));
    }
    std::vector<size_t> first{0};
    m.logicals.push_back({PauliOperator::on(n, all_qubits(n), PauliKind::X), PauliOperator::on(n, first, PauliKind::Z)});
    return m;
}

CodeModel build_ising2d(size_t L, bool periodic) {
    if (periodic && L < 3) {
        throw std::invalid_argument("periodic ising2d needs L >= 3");
    }
    CodeModel m;
    m.family = Family::ising2d;
    m.n = L * L;
    m.classical = true;
    m.dimension = 2;
    m.linear_size = L;
    auto site = [L](size_t x, size_t y) { return (y % L) * L + (x % L); };
    for (size_t y = 0; y < L; y++) {
        for (size_t x = 0; x < L; x++) {
            if (x + 1 < L || periodic) {
                m.checks.push_back(make_check(
                    m.n, {site(x, y), site(x + 1, y)}, CheckType::Z, {static_cast<int>(x), static_cast<int>(y), 0}));
            }
            if (y + 1 < L || periodic) {
                m.checks.push_back(make_check(
                    m.n, {site(x, y), site(x, y + 1)}, CheckType::Z, {static_cast<int>(x), static_cast<int>(y), 1}));
            }
        }
    }
    std::vector<size_t> first{0};
    m.logicals.push_back(
        {PauliOperator::on(m.n, all_qubits(m.n), PauliKind::X), PauliOperator::on(m.n, first, PauliKind::Z)});
    return m;
}

CodeModel build_surface2d(size_t L) {
    CodeModel m;
    m.family = Family::surface2d;
    size_t W = 2 * L - 1;
    m.n = L * L + (L - 1) * (L - 1);
    m.dimension = 2;
    m.linear_size = L;
    auto neighbours = [&](size_t r, size_t c) {
        std::vector<size_t> q;
        if (r > 0) {
            q.push_back(surface_qubit_index(L, r - 1, c));
        }
        if (c > 0) {
            q.push_back(surface_qubit_index(L, r, c - 1));
        }
        if (c + 1 < W) {
            q.push_back(surface_qubit_index(L, r, c + 1));
        }
        if (r + 1 < W) {
            q.push_back(surface_qubit_index(L, r + 1, c));
        }
        return q;
    };
    for (size_t r = 0; r < W; r += 2) {
        for (size_t c = 1; c < W; c += 2) {
            m.checks.push_back(
                make_check(m.n, neighbours(r, c), CheckType::Z, {static_cast<int>(r), static_cast<int>(c)}));
        }
    }
    for (size_t r = 1; r < W; r += 2) {
        for (size_t c = 0; c < W; c += 2) {
            m.checks.push_back(
                make_check(m.n, neighbours(r, c), CheckType::X, {static_cast<int>(r), static_cast<int>(c)}));
        }
    }
    std::vector<size_t> column, row;
    for (size_t t = 0; t < W; t += 2) {
        column.push_back(surface_qubit_index(L, t, 0));
        row.push_back(surface_qubit_index(L, 0, t));
    }
    m.logicals.push_back({PauliOperator::on(m.n, row, PauliKind::X), PauliOperator::on(m.n, column, PauliKind::Z)});
    return m;
}

CodeModel build_toric3d(size_t L, bool gauge_only) {
    CodeModel m;
    m.family = Family::toric3d;
    m.n = 3 * L * L * L;
    m.dimension = 3;
    m.linear_size = L;
    m.boundary = Boundary::periodic;
    m.gauge_only = gauge_only;
    auto edge = [L](std::array<size_t, 3> v, size_t dir) { return toric_edge_index(L, v[0], v[1], v[2], dir); };
    auto shift = [L](std::array<size_t, 3> v, size_t dir, bool backwards) {
        v[dir] = backwards ? (v[dir] + L - 1) % L : (v[dir] + 1) % L;
        return v;
    };
    // Plaquette planes, labelled by their normal direction.
    constexpr std::array<std::array<size_t, 2>, 3> kPlanes{{{1, 2}, {0, 2}, {0, 1}}};
    for (size_t z = 0; z < L; z++) {
        for (size_t y = 0; y < L; y++) {
            for (size_t x = 0; x < L; x++) {
                std::array<size_t, 3> v{x, y, z};
                for (size_t normal = 0; normal < 3; normal++) {
                    auto [a, b] = kPlanes[normal];
                    std::vector<size_t> q{edge(v, a), edge(shift(v, a, false), b), edge(shift(v, b, false), a), edge(v, b)};
                    m.checks.push_back(make_check(
                        m.n,
                        q,
                        CheckType::Z,
                        {static_cast<int>(x), static_cast<int>(y), static_cast<int>(z), static_cast<int>(normal)}));
                }
            }
        }
    }
    if (!gauge_only) {
        for (size_t z = 0; z < L; z++) {
            for (size_t y = 0; y < L; y++) {
                for (size_t x = 0; x < L; x++) {
                    std::array<size_t, 3> v{x, y, z};
                    std::vector<size_t> q;
                    for (size_t d = 0; d < 3; d++) {
                        q.push_back(edge(v, d));
                        q.push_back(edge(shift(v, d, true), d));
                    }
                    m.checks.push_back(make_check(
                        m.n, q, CheckType::X, {static_cast<int>(x), static_cast<int>(y), static_cast<int>(z)}));
                }
            }
        }
    }
    for (size_t d = 0; d < 3; d++) {
        std::vector<size_t> line, membrane;
        for (size_t t = 0; t < L; t++) {
            std::array<size_t, 3> v{0, 0, 0};
            v[d] = t;
            line.push_back(edge(v, d));
        }
        for (size_t s = 0; s < L; s++) {
            for (size_t t = 0; t < L; t++) {
                std::array<size_t, 3> v{0, 0, 0};
                v[(d + 1) % 3] = s;
                v[(d + 2) % 3] = t;
                membrane.push_back(edge(v, d));
            }
        }
        m.logicals.push_back({PauliOperator::on(m.n, membrane, PauliKind::X), PauliOperator::on(m.n, line, PauliKind::Z)});
    }
    if (gauge_only) {
        m.logicals = complete_css_logicals(m.n, m.checks, std::move(m.logicals));
    }
    return m;
}

}  // namespace

CodeModel build_model(Family family, size_t size, const BuildOptions &options) {
    if (size < 2) {
        throw std::invalid_argument("model size must be at least 2");
    }
    if (options.gauge_only && family != Family::toric3d) {
        throw std::invalid_argument("gauge_only is only defined for toric3d");
    }
    if (!(options.delta > 0)) {
        throw std::invalid_argument("delta must be positive");
    }
    CodeModel m;
    switch (family) {
        case Family::ising1d:
        case Family::ising2d: {
            bool periodic = options.boundary == Boundary::periodic;
            m = family == Family::ising1d ? build_ising1d(size, periodic) : build_ising2d(size, periodic);
            m.boundary = periodic ? Boundary::periodic : Boundary::open;
            break;
        }
        case Family::surface2d:
            if (options.boundary == Boundary::periodic) {
                throw std::invalid_argument("surface2d has open boundaries; use toric3d for a periodic code");
            }
            m = build_surface2d(size);
            m.boundary = Boundary::open;
            break;
        case Family::toric3d:
            if (options.boundary == Boundary::open) {
                throw std::invalid_argument("toric3d is periodic");
            }
            m = build_toric3d(size, options.gauge_only);
            break;
        default:
            throw std::invalid_argument("unknown family");
    }
    m.delta = options.delta;
    return m;
}

ValidationReport validate_model(const CodeModel &m) {
    auto fail = [](std::string name, std::string detail, std::vector<size_t> witnesses) {
        return ValidationReport{false, std::move(name), std::move(detail), std::move(witnesses)};
    };
    for (size_t i = 0; i < m.checks.size(); i++) {
        if (m.checks[i].op.num_qubits() != m.n) {
            return fail("bit vector length", "check " + std::to_string(i) + " has wrong length", {i});
        }
    }
    for (size_t i = 0; i < m.logicals.size(); i++) {
        if (m.logicals[i].x.num_qubits() != m.n || m.logicals[i].z.num_qubits() != m.n) {
            return fail("bit vector length", "logical pair " + std::to_string(i) + " has wrong length", {i});
        }
    }
    for (size_t i = 0; i < m.checks.size(); i++) {
        for (size_t j = i + 1; j < m.checks.size(); j++) {
            if (!commutes(m.checks[i].op, m.checks[j].op)) {
                return fail(
                    "checks commute",
                    "checks " + std::to_string(i) + " and " + std::to_string(j) + " anticommute",
                    {i, j});
            }
        }
    }
    for (size_t i = 0; i < m.logicals.size(); i++) {
        for (size_t c = 0; c < m.checks.size(); c++) {
            if (!commutes(m.logicals[i].x, m.checks[c].op) || !commutes(m.logicals[i].z, m.checks[c].op)) {
                return fail(
                    "logicals commute with checks",
                    "logical pair " + std::to_string(i) + " anticommutes with check " + std::to_string(c),
                    {i, c});
            }
        }
    }
    RowSpan span(check_matrix(m));
    size_t rank = span.rank();
    for (size_t i = 0; i < m.logicals.size(); i++) {
        for (const auto *op : {&m.logicals[i].x, &m.logicals[i].z}) {
            if (!span.add(symplectic_vector(*op))) {
                return fail(
                    "logical outside check group",
                    "logical pair " + std::to_string(i) + " is generated by the checks and earlier logicals",
                    {i});
            }
        }
    }
    for (size_t i = 0; i < m.logicals.size(); i++) {
        if (commutes(m.logicals[i].x, m.logicals[i].z)) {
            return fail("logical pair anticommutes", "Xbar and Zbar of pair " + std::to_string(i) + " commute", {i});
        }
        for (size_t j = i + 1; j < m.logicals.size(); j++) {
            const auto &a = m.logicals[i];
            const auto &b = m.logicals[j];
            if (!commutes(a.x, b.x) || !commutes(a.x, b.z) || !commutes(a.z, b.x) || !commutes(a.z, b.z)) {
                return fail(
                    "distinct pairs commute",
                    "logical pairs " + std::to_string(i) + " and " + std::to_string(j) + " anticommute",
                    {i, j});
            }
        }
    }
    if (m.logicals.size() != m.n - rank) {
        return fail(
            "logical count",
            "k = " + std::to_string(m.logicals.size()) + " but n - rank = " + std::to_string(m.n - rank),
            {m.logicals.size(), m.n - rank});
    }
    return {};
}

}  // namespace qmem
