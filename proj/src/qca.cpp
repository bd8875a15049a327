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

#include "gqca/qca.hpp"

#include <Eigen/Sparse>
#include <bit>
#include <cmath>
#include <istream>
#include <ostream>
#include <string>

#include "gqca/errors.hpp"

namespace gqca {

namespace {

void check_site(int site, int length) {
    if (site < 1 || site > length) {
        throw DomainError("site " + std::to_string(site) + " outside [1, " + std::to_string(length) + "]");
    }
}

void check_dense(int length) {
    if (length < 1) {
        throw DomainError("chain length must be positive");
    }
    if (length > kMaxDenseQubits) {
        throw CapacityError("dense operators limited to L <= " + std::to_string(kMaxDenseQubits) + ", got " +
                            std::to_string(length));
    }
}

void put_u64_le(std::ostream &out, uint64_t v) {
    char bytes[8];
    for (int b = 0; b < 8; ++b) {
        bytes[b] = static_cast<char>((v >> (8 * b)) & 0xff);
    }
    out.write(bytes, 8);
}

uint64_t get_u64_le(std::istream &in) {
    unsigned char bytes[8];
    in.read(reinterpret_cast<char *>(bytes), 8);
    if (!in) {
        throw DomainError("truncated statevector stream");
    }
    uint64_t v = 0;
    for (int b = 7; b >= 0; --b) {
        v = (v << 8) | bytes[b];
    }
    return v;
}

}  // namespace

Mat8 neighborhood_unitary(const RuleSpec &rule) {
    Mat8 u = Mat8::Zero();
    const Mat2 &v = rule.activation();
    for (int m = 0; m < 2; ++m) {
        for (int n = 0; n < 2; ++n) {
            Mat2 block = rule.activates(m, n) ? v : identity2();
            for (int out = 0; out < 2; ++out) {
                for (int in = 0; in < 2; ++in) {
                    u(4 * m + 2 * out + n, 4 * m + 2 * in + n) = block(out, in);
                }
            }
        }
    }
    return u;
}

namespace {

using SparseOp = Eigen::SparseMatrix<Complex>;

// Column `col` of the local update has at most two nonzeros: the center
// bit is mapped through V^{c_mn} while both neighbors pass unchanged.
SparseOp local_update_sparse(const RuleSpec &rule, int site, int length) {
    const uint64_t dim = uint64_t{1} << length;
    const uint64_t mask = site_mask(length, site);
    std::vector<Eigen::Triplet<Complex>> entries;
    entries.reserve(2 * dim);
    for (uint64_t col = 0; col < dim; ++col) {
        int m = site_bit(col, length, site - 1);
        int n = site_bit(col, length, site + 1);
        int in = (col & mask) ? 1 : 0;
        const Mat2 block = rule.activates(m, n) ? rule.activation() : identity2();
        for (int out = 0; out < 2; ++out) {
            uint64_t row = out ? (col | mask) : (col & ~mask);
            if (block(out, in) != Complex(0.0, 0.0)) {
                entries.emplace_back(static_cast<int>(row), static_cast<int>(col), block(out, in));
            }
        }
    }
    SparseOp op(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    op.setFromTriplets(entries.begin(), entries.end());
    return op;
}

}  // namespace

MatX local_update_unitary(const RuleSpec &rule, int site, int length) {
    check_dense(length);
    check_site(site, length);
    return MatX(local_update_sparse(rule, site, length));
}

MatX cycle_unitary_dense(const RuleSpec &rule, int length) {
    check_dense(length);
    const auto dim = static_cast<Eigen::Index>(uint64_t{1} << length);
    std::vector<SparseOp> ops;
    for (int site = 2; site <= length; site += 2) {
        ops.push_back(local_update_sparse(rule, site, length));
    }
    for (int site = 1; site <= length; site += 2) {
        ops.push_back(local_update_sparse(rule, site, length));
    }
    // Column by column keeps the working set in cache.
    MatX u(dim, dim);
    Eigen::VectorXcd v(dim), w(dim);
    for (Eigen::Index col = 0; col < dim; ++col) {
        v.setZero();
        v(col) = 1.0;
        for (const SparseOp &op : ops) {
            w.noalias() = op * v;
            v.swap(w);
        }
        u.col(col) = v;
    }
    return u;
}

void apply_local_update(Statevector &state, const RuleSpec &rule, int site) {
    const int length = state.num_qubits();
    check_site(site, length);
    const uint64_t mask = site_mask(length, site);
    const uint64_t left = site > 1 ? site_mask(length, site - 1) : 0;
    const uint64_t right = site < length ? site_mask(length, site + 1) : 0;
    const Mat2 &v = rule.activation();
    const Complex v00 = v(0, 0), v01 = v(0, 1), v10 = v(1, 0), v11 = v(1, 1);
    bool active[4];
    for (int k = 0; k < 4; ++k) {
        active[k] = rule.activates(k >> 1, k & 1);
    }
    std::span<Complex> amps = state.amplitudes();
    const uint64_t dim = state.dimension();
    for (uint64_t hi = 0; hi < dim; hi += 2 * mask) {
        for (uint64_t k = hi; k < hi + mask; ++k) {
            int m = (k & left) ? 1 : 0;
            int n = (k & right) ? 1 : 0;
            if (!active[2 * m + n]) {
                continue;
            }
            Complex a0 = amps[k];
            Complex a1 = amps[k | mask];
            amps[k] = v00 * a0 + v01 * a1;
            amps[k | mask] = v10 * a0 + v11 * a1;
        }
    }
}

void apply_cycle_in_place(Statevector &state, const RuleSpec &rule) {
    const int length = state.num_qubits();
    for (int site = 2; site <= length; site += 2) {
        apply_local_update(state, rule, site);
    }
    for (int site = 1; site <= length; site += 2) {
        apply_local_update(state, rule, site);
    }
    state.check_normalized();
}

Statevector apply_cycle(Statevector state, const RuleSpec &rule) {
    apply_cycle_in_place(state, rule);
    return state;
}

std::vector<double> population(std::span<const double> probabilities, int length) {
    if (probabilities.size() != (uint64_t{1} << length)) {
        throw DomainError("probability vector size does not match 2^L");
    }
    std::vector<double> pop(static_cast<size_t>(length), 0.0);
    for (uint64_t k = 0; k < probabilities.size(); ++k) {
        const double p = probabilities[k];
        if (p == 0.0) {
            continue;
        }
        for (uint64_t bits = k; bits != 0; bits &= bits - 1) {
            int pos = std::countr_zero(bits);
            pop[static_cast<size_t>(length - 1 - pos)] += p;
        }
    }
    return pop;
}

std::vector<double> population(const Statevector &state) {
    state.check_normalized();
    std::vector<double> p = state.probabilities();
    return population(p, state.num_qubits());
}

void evolve_each(const BitString &initial, const RuleSpec &rule, int t_max,
                 const std::function<void(int, const Statevector &)> &visit) {
    if (t_max < 0) {
        throw DomainError("t_max must be non-negative");
    }
    Statevector state = Statevector::basis(initial);
    visit(0, state);
    for (int t = 1; t <= t_max; ++t) {
        apply_cycle_in_place(state, rule);
        visit(t, state);
    }
}

Trajectory evolve(const BitString &initial, const RuleSpec &rule, int t_max, bool keep_states) {
    Trajectory traj{rule, initial, t_max, {}, {}};
    evolve_each(initial, rule, t_max, [&](int, const Statevector &state) {
        if (keep_states) {
            traj.states.push_back(state);
        }
        traj.populations.push_back(population(state));
    });
    return traj;
}

void write_statevector_binary(const Statevector &state, std::ostream &out) {
    for (const Complex &a : state.amplitudes()) {
        put_u64_le(out, std::bit_cast<uint64_t>(a.real()));
        put_u64_le(out, std::bit_cast<uint64_t>(a.imag()));
    }
}

Statevector read_statevector_binary(int num_qubits, std::istream &in) {
    Statevector s(num_qubits);
    for (Complex &a : s.amplitudes()) {
        double re = std::bit_cast<double>(get_u64_le(in));
        double im = std::bit_cast<double>(get_u64_le(in));
        a = Complex(re, im);
    }
    return s;
}

}  // namespace gqca
