// Copyright 2026 The gqca Authors
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


#include "gqca/invariant.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "gqca/errors.hpp"
#include "gqca/qca.hpp"

namespace gqca {

int domain_walls(uint64_t index, int length) {
    // Interior pairs, plus the two pairs touching the fixed 0 boundary.
    const uint64_t interior = length > 1 ? (index ^ (index >> 1)) & ((uint64_t{1} << (length - 1)) - 1) : 0;
    return std::popcount(interior) + static_cast<int>((index >> (length - 1)) & 1) + static_cast<int>(index & 1);
}

InvariantValue invariant_eigenvalue(uint64_t index, int length) {
    const int walls = domain_walls(index, length);
    return {length + 1 - 2 * walls, walls};
}

InvariantValue invariant_eigenvalue(const BitString &bits) {
    return invariant_eigenvalue(bits.index(), bits.size());
}

std::vector<int> invariant_diagonal(int length) {
    if (length < 1 || length > kMaxStatevectorQubits) {
        throw CapacityError("invariant diagonal needs 1 <= L <= " + std::to_string(kMaxStatevectorQubits));
    }
    std::vector<int> diag(size_t{1} << length);
    for (uint64_t k = 0; k < diag.size(); ++k) {
        diag[k] = invariant_eigenvalue(k, length).value;
    }
    return diag;
}

double commutator_norm(const RuleSpec &rule, int length) {
    if (length < 1 || length > kMaxDenseQubits) {
        throw CapacityError("commutator norm limited to 1 <= L <= " + std::to_string(kMaxDenseQubits));
    }
    const std::vector<int> o = invariant_diagonal(length);
    // O is diagonal, so [O, U]_rc = (o_r - o_c) U_rc; column c of U is the
    // cycle applied to basis state c.
    double total = 0.0;
    for (uint64_t c = 0; c < o.size(); ++c) {
        Statevector s = Statevector::basis(BitString(length, c));
        apply_cycle_in_place(s, rule);
        for (uint64_t r = 0; r < o.size(); ++r) {
            const int d = o[r] - o[c];
            if (d != 0) {
                total += d * d * std::norm(s[r]);
            }
        }
    }
    return std::sqrt(total);
}

SectorDimension sector_dimension(int length, int run_count) {
    if (length < 1 || length > kMaxBitStringLength) {
        throw DomainError("sector dimension needs 1 <= L <= " + std::to_string(kMaxBitStringLength));
    }
    if (run_count < 0) {
        throw DomainError("run count must be non-negative");
    }
    const int n = length + 1;
    const int k = 2 * run_count;
    SectorDimension out;
    if (k > n) {
        return out;
    }
    const int kk = std::min(k, n - k);
    unsigned __int128 c = 1;
    for (int i = 1; i <= kk; ++i) {
        c = c * static_cast<unsigned>(n - kk + i) / static_cast<unsigned>(i);
    }
    out.count = static_cast<uint64_t>(c);
    out.relative = std::ldexp(static_cast<double>(out.count), -length);
    return out;
}

std::vector<uint64_t> sector_states(const BitString &reference) {
    const int length = reference.size();
    if (length > kMaxStatevectorQubits) {
        throw CapacityError("sector enumeration limited to L <= " + std::to_string(kMaxStatevectorQubits));
    }
    const int walls = invariant_eigenvalue(reference).domain_walls;
    // Choose `walls` of the L+1 bonds; bond b sits between sites b and b+1.
    // Site s reads 1 when an odd number of chosen bonds lies left of it.
    std::vector<uint64_t> out;
    std::vector<int> bonds(static_cast<size_t>(walls));
    for (int i = 0; i < walls; ++i) {
        bonds[static_cast<size_t>(i)] = i;
    }
    const int n = length + 1;
    while (true) {
        uint64_t index = 0;
        for (int i = 0; i + 1 < walls; i += 2) {
            for (int s = bonds[static_cast<size_t>(i)] + 1; s <= bonds[static_cast<size_t>(i + 1)]; ++s) {
                index |= site_mask(length, s);
            }
        }
        out.push_back(index);
        int i = walls - 1;
        while (i >= 0 && bonds[static_cast<size_t>(i)] == n - walls + i) {
            --i;
        }
        if (i < 0) {
            break;
        }
        ++bonds[static_cast<size_t>(i)];
        for (int j = i + 1; j < walls; ++j) {
            bonds[static_cast<size_t>(j)] = bonds[static_cast<size_t>(j - 1)] + 1;
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

ExponentialFit fit_exponential(const std::vector<double> &x, const std::vector<double> &y) {
    if (x.size() != y.size() || x.size() < 2) {
        throw DomainError("exponential fit needs at least two paired points");
    }
    const double n = static_cast<double>(x.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    std::vector<double> ly(y.size());
    for (size_t i = 0; i < x.size(); ++i) {
        if (!(y[i] > 0.0)) {
            throw DomainError("exponential fit needs positive ordinates");
        }
        ly[i] = std::log(y[i]);
        sx += x[i];
        sy += ly[i];
        sxx += x[i] * x[i];
        sxy += x[i] * ly[i];
    }
    const double denom = n * sxx - sx * sx;
    if (denom == 0.0) {
        throw DomainError("exponential fit needs distinct abscissae");
    }
    const double slope = (n * sxy - sx * sy) / denom;
    const double intercept = (sy - slope * sx) / n;
    double ss_res = 0, ss_tot = 0;
    const double mean = sy / n;
    for (size_t i = 0; i < x.size(); ++i) {
        const double pred = intercept + slope * x[i];
        ss_res += (ly[i] - pred) * (ly[i] - pred);
        ss_tot += (ly[i] - mean) * (ly[i] - mean);
    }
    ExponentialFit fit;
    fit.amplitude = std::exp(intercept);
    fit.decay_length = slope != 0.0 ? -1.0 / slope : INFINITY;
    fit.r_squared = ss_tot > 0.0 ? 1.0 - ss_res / ss_tot : 1.0;
    return fit;
}

}  // namespace gqca
