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

#ifndef QMEM_CODE_MODEL_H
#define QMEM_CODE_MODEL_H

#include <string>
#include <string_view>
#include <vector>

#include "qmem/pauli.h"

namespace qmem {

enum class Family : uint8_t { ising1d, ising2d, surface2d, toric3d };
enum class Boundary : uint8_t { automatic, open, periodic };

/// Z-type checks are products of Z (detect X errors); X-type checks are products of X.
enum class CheckType : uint8_t { Z, X };

std::string_view family_name(Family f);
Family parse_family(std::string_view name);
std::string_view boundary_name(Boundary b);
Boundary parse_boundary(std::string_view name);

struct Check {
    PauliOperator op;
    CheckType type;
    /// Lattice coordinates of the check (family specific).
    std::vector<int> location;

    std::vector<size_t> qubits() const { return op.support(); }
    bool operator==(const Check &other) const = default;
};

struct LogicalPair {
    PauliOperator x;
    PauliOperator z;
    bool operator==(const LogicalPair &other) const = default;
};

/// A memory model: qubits, commuting parity checks, and a symplectic basis of
/// logical operators. Every check contributes -delta * check to the Hamiltonian.
struct CodeModel {
    Family family = Family::ising1d;
    size_t n = 0;
    std::vector<Check> checks;
    double delta = 1.0;
    std::vector<LogicalPair> logicals;
    bool classical = false;
    bool gauge_only = false;
    Boundary boundary = Boundary::open;
    size_t dimension = 1;
    size_t linear_size = 0;

    size_t k() const { return logicals.size(); }
    size_t num_checks() const { return checks.size(); }
    /// e.g. "surface2d_L3", "toric3d_L2_gauge".
    std::string id() const;
    bool operator==(const CodeModel &other) const = default;
};

struct BuildOptions {
    Boundary boundary = Boundary::automatic;
    bool gauge_only = false;
    double delta = 1.0;
};

/// Builds one of the memory families.
///
///   ising1d(n):    n spins, ZZ bonds along a chain, Zbar = Z_0, Xbar = all X.
///   ising2d(L):    L x L spins, nearest-neighbour ZZ bonds, same logicals.
///   surface2d(L):  L^2 + (L-1)^2 qubits on the sites (r, c), r + c even, of a
///                  (2L-1) x (2L-1) grid. Plaquettes (Z-type) sit at (even, odd)
///                  and lose a qubit on the top and bottom rows; stars (X-type)
///                  sit at (odd, even) and lose a qubit on the left and right
///                  columns. Zbar runs down column 0, Xbar along row 0.
///   toric3d(L):    periodic L^3 cubic lattice, 3 L^3 edge qubits, 3 L^3
///                  4-qubit plaquettes, L^3 6-qubit stars, k = 3. gauge_only
///                  drops the stars (and the basis is completed to k = L^3 + 2).
///
/// Throws std::invalid_argument on bad sizes or options.
CodeModel build_model(Family family, size_t size, const BuildOptions &options = {});

/// Site index of grid position (r, c) of a surface2d model with linear size L.
size_t surface_qubit_index(size_t L, size_t r, size_t c);
/// Edge index of the edge leaving vertex (x, y, z) in direction dir on the L^3 torus.
size_t toric_edge_index(size_t L, size_t x, size_t y, size_t z, size_t dir);

struct ValidationReport {
    bool ok = true;
    /// Name of the first violated invariant, empty when ok.
    std::string violated;
    std::string detail;
    std::vector<size_t> witnesses;
};

ValidationReport validate_model(const CodeModel &m);

}  // namespace qmem

#endif
