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

#include "qmem/code_analysis.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qmem/coset.h"

namespace qmem {

BinaryMatrix type_matrix(const CodeModel &m, CheckType type) {
    BinaryMatrix out(0, m.n);
    for (const auto &c : m.checks) {
        if (c.type == type) {
            out.append_row(type == CheckType::Z ? c.op.z_part() : c.op.x_part());
        }
    }
    return out;
}

BinaryMatrix check_matrix(const CodeModel &m) {
    BinaryMatrix out(0, 2 * m.n);
    for (const auto &c : m.checks) {
        out.append_row(symplectic_vector(c.op));
    }
    return out;
}

size_t check_rank(const CodeModel &m) { return rank_gf2(check_matrix(m)); }

std::vector<LogicalPair> complete_css_logicals(size_t n, const std::vector<Check> &checks, std::vector<LogicalPair> seed) {
    BinaryMatrix hz(0, n), hx(0, n);
    for (const auto &c : checks) {
        if (c.type == CheckType::Z) {
            hz.append_row(c.op.z_part());
        } else {
            hx.append_row(c.op.x_part());
        }
    }
    for (const auto &p : seed) {
        if (!p.x.is_x_type() || !p.z.is_z_type()) {
            throw std::invalid_argument("seed logicals must be pure X / pure Z");
        }
    }
    // X logicals: ker(hz) modulo span(hx); Z logicals: ker(hx) modulo span(hz).
    RowSpan x_span(hx);
    RowSpan z_span(hz);
    for (const auto &p : seed) {
        x_span.add(p.x.x_part());
        z_span.add(p.z.z_part());
    }
    std::vector<BitVector> xs, zs;
    BinaryMatrix x_kernel = nullspace(hz);
    BinaryMatrix z_kernel = nullspace(hx);
    for (const auto &v : x_kernel.row_vectors()) {
        if (x_span.add(v)) {
            xs.push_back(v);
        }
    }
    for (const auto &v : z_kernel.row_vectors()) {
        if (z_span.add(v)) {
            zs.push_back(v);
        }
    }
    if (xs.size() != zs.size()) {
        throw std::logic_error("X and Z logical spaces have different dimensions");
    }
    for (auto &x : xs) {
        for (const auto &p : seed) {
            if (x.dot(p.z.z_part())) {
                x ^= p.x.x_part();
            }
        }
    }
    for (auto &z : zs) {
        for (const auto &p : seed) {
            if (z.dot(p.x.x_part())) {
                z ^= p.z.z_part();
            }
        }
    }
    size_t extra = xs.size();
    if (extra > 0) {
        BinaryMatrix pairing(extra, extra);
        for (size_t a = 0; a < extra; a++) {
            for (size_t b = 0; b < extra; b++) {
                pairing.set(a, b, xs[a].dot(zs[b]));
            }
        }
        auto inv = inverse(pairing);
        if (!inv) {
            throw std::logic_error("degenerate logical pairing; seed logicals are inconsistent with the checks");
        }
        for (size_t b = 0; b < extra; b++) {
            BitVector z(n);
            for (size_t c = 0; c < extra; c++) {
                if (inv->get(c, b)) {
                    z ^= zs[c];
                }
            }
            seed.push_back({PauliOperator(xs[b], BitVector(n)), PauliOperator(BitVector(n), std::move(z))});
        }
    }
    return seed;
}

BitVector logical_class(const CodeModel &m, const PauliOperator &p) {
    BitVector out(2 * m.k());
    for (size_t i = 0; i < m.k(); i++) {
        out.set(2 * i, !commutes(p, m.logicals[i].z));
        out.set(2 * i + 1, !commutes(p, m.logicals[i].x));
    }
    return out;
}

namespace {

std::optional<size_t> min_over_combinations(
    const BinaryMatrix &stabilizers, const std::vector<BitVector> &basis, size_t cap) {
    std::optional<size_t> best;
    uint64_t count = uint64_t{1} << basis.size();
    size_t n = stabilizers.cols();
    for (uint64_t mask = 1; mask < count; mask++) {
        BitVector offset(n);
        for (size_t i = 0; i < basis.size(); i++) {
            if ((mask >> i) & 1) {
                offset ^= basis[i];
            }
        }
        size_t local_cap = best ? std::min(cap, *best) : cap;
        auto w = coset_min_weight(stabilizers, offset, local_cap);
        if (w && (!best || *w < *best)) {
            best = w;
        }
    }
    return best;
}

}  // namespace

DistanceResult code_distance(const CodeModel &m, std::optional<size_t> weight_cap) {
    if (!weight_cap && m.n > kExactDistanceMaxQubits) {
        throw std::invalid_argument(
            "exact distance search refused for n = " + std::to_string(m.n) + " without a weight cap");
    }
    if (m.k() > kExactDistanceMaxLogicals) {
        throw std::invalid_argument("too many logical qubits for exhaustive logical combinations");
    }
    for (const auto &c : m.checks) {
        if (!(c.op.is_x_type() || c.op.is_z_type())) {
            throw std::invalid_argument("code_distance requires CSS checks");
        }
    }
    size_t cap = weight_cap.value_or(m.n);
    std::vector<BitVector> xs, zs;
    for (const auto &p : m.logicals) {
        xs.push_back(p.x.x_part());
        zs.push_back(p.z.z_part());
    }
    DistanceResult r;
    r.x_distance = min_over_combinations(type_matrix(m, CheckType::X), xs, cap);
    r.z_distance = min_over_combinations(type_matrix(m, CheckType::Z), zs, cap);
    if (r.x_distance && r.z_distance) {
        r.distance = std::min(*r.x_distance, *r.z_distance);
    } else if (r.x_distance || r.z_distance) {
        r.distance = r.x_distance ? r.x_distance : r.z_distance;
    }
    r.exhausted = !r.distance;
    return r;
}

LogicalWeights minimal_logical_weights(const CodeModel &m, std::optional<size_t> weight_cap) {
    size_t cap = weight_cap.value_or(m.n);
    BinaryMatrix hx = type_matrix(m, CheckType::X);
    BinaryMatrix hz = type_matrix(m, CheckType::Z);
    LogicalWeights out;
    for (const auto &p : m.logicals) {
        out.x.push_back(coset_min_weight(hx, p.x.x_part(), cap));
        out.z.push_back(coset_min_weight(hz, p.z.z_part(), cap));
    }
    return out;
}

const SupportDims::PairDims &SupportDims::tightest() const {
    if (pairs.empty()) {
        throw std::logic_error("no logical pairs");
    }
    return *std::min_element(pairs.begin(), pairs.end(), [](const PairDims &a, const PairDims &b) {
        return a.d_x + a.d_z < b.d_x + b.d_z;
    });
}

namespace {

/// Least-squares slope of log(w) against log(L).
double log_log_slope(const std::vector<size_t> &sizes, const std::vector<size_t> &weights) {
    double mx = 0, my = 0;
    size_t k = sizes.size();
    for (size_t i = 0; i < k; i++) {
        mx += std::log(static_cast<double>(sizes[i]));
        my += std::log(static_cast<double>(weights[i]));
    }
    mx /= k;
    my /= k;
    double sxy = 0, sxx = 0;
    for (size_t i = 0; i < k; i++) {
        double dx = std::log(static_cast<double>(sizes[i])) - mx;
        sxy += dx * (std::log(static_cast<double>(weights[i])) - my);
        sxx += dx * dx;
    }
    return sxy / sxx;
}

}  // namespace

SupportDims support_dims(Family family, std::span<const size_t> sizes, const BuildOptions &options) {
    std::vector<size_t> distinct(sizes.begin(), sizes.end());
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    if (distinct.size() < 2) {
        throw std::invalid_argument("support_dims needs at least two distinct sizes");
    }
    SupportDims out;
    out.family = family;
    out.sizes = distinct;
    size_t k = 0;
    for (size_t L : distinct) {
        CodeModel m = build_model(family, L, options);
        out.dimension = m.dimension;
        if (k == 0) {
            k = m.k();
        } else if (k != m.k()) {
            throw std::invalid_argument("logical count varies with size; support dimensions undefined");
        }
        auto w = minimal_logical_weights(m);
        std::vector<std::pair<size_t, size_t>> row;
        for (size_t i = 0; i < m.k(); i++) {
            if (!w.x[i] || !w.z[i]) {
                throw std::runtime_error("minimal logical weight search exhausted");
            }
            row.emplace_back(*w.x[i], *w.z[i]);
        }
        out.weights.push_back(std::move(row));
    }
    for (size_t i = 0; i < k; i++) {
        std::vector<size_t> wx, wz;
        for (const auto &row : out.weights) {
            wx.push_back(row[i].first);
            wz.push_back(row[i].second);
        }
        SupportDims::PairDims d;
        d.slope_x = log_log_slope(distinct, wx);
        d.slope_z = log_log_slope(distinct, wz);
        d.d_x = static_cast<int>(std::lround(d.slope_x));
        d.d_z = static_cast<int>(std::lround(d.slope_z));
        out.pairs.push_back(d);
    }
    return out;
}

}  // namespace qmem
