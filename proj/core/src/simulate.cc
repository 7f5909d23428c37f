// Copyright 2026 The dictenc Authors
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
#include <atomic>
#include <cmath>
#include <thread>
#include <unordered_map>

#include "dictenc/circuit.h"
#include "dictenc/errors.h"

namespace dictenc {

namespace {

using u64 = std::uint64_t;

u64 bit(Qubit q) {
    return u64{1} << q;
}

bool is_identity(const Mat2 &u) {
    return u[0] == Complex(1) && u[1] == Complex(0) && u[2] == Complex(0) && u[3] == Complex(1);
}

// Calls fn(i) for every i whose `fixed_mask` bits equal `fixed_value`.
template <typename Fn>
void for_each_matching(u64 dim, u64 fixed_mask, u64 fixed_value, Fn &&fn) {
    u64 free = (dim - 1) & ~fixed_mask;
    u64 sub = 0;
    do {
        fn(sub | fixed_value);
        sub = (sub - free) & free;
    } while (sub != 0);
}

u64 selector_value(u64 index, const std::vector<Qubit> &selector) {
    u64 p = 0;
    for (std::size_t k = 0; k < selector.size(); ++k) {
        p |= ((index >> selector[k]) & 1) << k;
    }
    return p;
}

void apply_dense(const Gate &gate, std::vector<Complex> &psi) {
    u64 dim = psi.size();
    if (const auto *g = std::get_if<gates::SingleQubit>(&gate)) {
        const Mat2 &u = g->matrix;
        for_each_matching(dim, bit(g->qubit), 0, [&](u64 i) {
            Complex a = psi[i];
            Complex b = psi[i | bit(g->qubit)];
            psi[i] = u[0] * a + u[1] * b;
            psi[i | bit(g->qubit)] = u[2] * a + u[3] * b;
        });
    } else if (const auto *g = std::get_if<gates::Cnot>(&gate)) {
        u64 c = g->polarity ? bit(g->control) : 0;
        for_each_matching(dim, bit(g->control) | bit(g->target), c,
                          [&](u64 i) { std::swap(psi[i], psi[i | bit(g->target)]); });
    } else if (const auto *g = std::get_if<gates::Swap>(&gate)) {
        for_each_matching(dim, bit(g->a) | bit(g->b), bit(g->a),
                          [&](u64 i) { std::swap(psi[i], psi[i ^ bit(g->a) ^ bit(g->b)]); });
    } else if (const auto *g = std::get_if<gates::MultiControlledX>(&gate)) {
        if (g->targets.empty()) {
            return;
        }
        u64 mask = 0;
        u64 value = 0;
        for (std::size_t k = 0; k < g->controls.size(); ++k) {
            mask |= bit(g->controls[k]);
            if (g->pattern[k]) {
                value |= bit(g->controls[k]);
            }
        }
        u64 flip = 0;
        for (Qubit t : g->targets) {
            flip |= bit(t);
        }
        u64 low = bit(g->targets.front());
        for_each_matching(dim, mask | low, value, [&](u64 i) { std::swap(psi[i], psi[i ^ flip]); });
    } else {
        const auto &m = std::get<gates::Multiplexed>(gate);
        u64 t = bit(m.target);
        for_each_matching(dim, t, 0, [&](u64 i) {
            const Mat2 &u = m.unitaries[selector_value(i, m.selector)];
            Complex a = psi[i];
            Complex b = psi[i | t];
            psi[i] = u[0] * a + u[1] * b;
            psi[i | t] = u[2] * a + u[3] * b;
        });
    }
}

void apply_all(const Circuit &circuit, std::vector<Complex> &psi) {
    for (const auto &gate : circuit.gates()) {
        apply_dense(gate, psi);
    }
    if (circuit.global_phase() != 0) {
        Complex ph = std::polar(1.0, circuit.global_phase());
        for (auto &a : psi) {
            a *= ph;
        }
    }
}

}  // namespace

DenseMatrix to_unitary(const Circuit &circuit, unsigned cap) {
    Qubit q = circuit.qubit_count();
    if (q > cap) {
        throw CapacityError("to_unitary: circuit has " + std::to_string(q) + " qubits, above the cap of " +
                            std::to_string(cap) + "; use apply_to_state or apply_to_basis_state instead");
    }
    std::size_t dim = std::size_t{1} << q;
    DenseMatrix out(dim);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        std::vector<Complex> psi(dim);
        for (std::size_t col = next++; col < dim; col = next++) {
            std::fill(psi.begin(), psi.end(), Complex(0));
            psi[col] = 1;
            apply_all(circuit, psi);
            for (std::size_t row = 0; row < dim; ++row) {
                out(row, col) = psi[row];
            }
        }
    };
    unsigned threads = std::clamp<unsigned>(std::thread::hardware_concurrency(), 1, 16);
    if (dim < 64) {
        threads = 1;
    }
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < threads; ++t) {
        pool.emplace_back(worker);
    }
    worker();
    return out;
}

StateVector apply_to_state(const Circuit &circuit, StateVector state) {
    Qubit q = circuit.qubit_count();
    if (q > kStateCap) {
        throw CapacityError("apply_to_state: circuit has " + std::to_string(q) + " qubits, above the cap of " +
                            std::to_string(kStateCap));
    }
    if (state.size() != (std::size_t{1} << q)) {
        throw std::invalid_argument("apply_to_state: state has " + std::to_string(state.size()) +
                                    " amplitudes but the circuit acts on " + std::to_string(q) + " qubits");
    }
    apply_all(circuit, state);
    return state;
}

SparseState apply_to_basis_state(const Circuit &circuit, std::uint64_t basis, double prune) {
    Qubit q = circuit.qubit_count();
    if (q >= 64) {
        throw CapacityError("apply_to_basis_state: at most 63 qubits are supported");
    }
    if (q < 64 && (basis >> q) != 0) {
        throw std::invalid_argument("apply_to_basis_state: basis index out of range");
    }
    SparseState state{{basis, Complex(1)}};
    std::unordered_map<u64, Complex> next;
    auto mix = [&](u64 t, auto &&pick) {
        next.clear();
        for (const auto &[i, a] : state) {
            const Mat2 *u = pick(i);
            if (u == nullptr) {
                next[i] += a;
                continue;
            }
            u64 lo = i & ~t;
            int b = (i & t) ? 1 : 0;
            Complex x = (*u)[b] * a;
            Complex y = (*u)[2 + b] * a;
            if (x != Complex(0)) {
                next[lo] += x;
            }
            if (y != Complex(0)) {
                next[lo | t] += y;
            }
        }
        state.clear();
        for (const auto &[i, a] : next) {
            if (std::abs(a) > prune) {
                state.emplace_back(i, a);
            }
        }
    };
    for (const auto &gate : circuit.gates()) {
        if (const auto *g = std::get_if<gates::SingleQubit>(&gate)) {
            mix(bit(g->qubit), [&](u64) { return &g->matrix; });
        } else if (const auto *g = std::get_if<gates::Multiplexed>(&gate)) {
            mix(bit(g->target), [&](u64 i) -> const Mat2 * {
                const Mat2 &u = g->unitaries[selector_value(i, g->selector)];
                return is_identity(u) ? nullptr : &u;
            });
        } else if (const auto *g = std::get_if<gates::Cnot>(&gate)) {
            for (auto &entry : state) {
                if (((entry.first >> g->control) & 1) == (g->polarity ? 1u : 0u)) {
                    entry.first ^= bit(g->target);
                }
            }
        } else if (const auto *g = std::get_if<gates::Swap>(&gate)) {
            for (auto &entry : state) {
                u64 x = (entry.first >> g->a) & 1;
                u64 y = (entry.first >> g->b) & 1;
                if (x != y) {
                    entry.first ^= bit(g->a) | bit(g->b);
                }
            }
        } else {
            const auto &m = std::get<gates::MultiControlledX>(gate);
            u64 mask = 0;
            u64 value = 0;
            u64 flip = 0;
            for (std::size_t k = 0; k < m.controls.size(); ++k) {
                mask |= bit(m.controls[k]);
                if (m.pattern[k]) {
                    value |= bit(m.controls[k]);
                }
            }
            for (Qubit t : m.targets) {
                flip |= bit(t);
            }
            for (auto &entry : state) {
                if ((entry.first & mask) == value) {
                    entry.first ^= flip;
                }
            }
        }
    }
    if (circuit.global_phase() != 0) {
        Complex ph = std::polar(1.0, circuit.global_phase());
        for (auto &entry : state) {
            entry.second *= ph;
        }
    }
    std::sort(state.begin(), state.end(), [](const auto &a, const auto &b) { return a.first < b.first; });
    return state;
}

}  // namespace dictenc
