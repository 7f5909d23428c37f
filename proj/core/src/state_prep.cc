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
#include <cmath>

#include "dictenc/errors.h"
#include "dictenc/synthesis.h"

namespace dictenc {

namespace {

// Subtree weights: level t holds 2^t entries, level T holds |amp|.
std::vector<std::vector<double>> tree_weights(std::span<const Complex> amps, unsigned bits) {
    std::vector<std::vector<double>> w(bits + 1);
    w[bits].assign(std::size_t{1} << bits, 0.0);
    for (std::size_t k = 0; k < amps.size(); ++k) {
        w[bits][k] = std::norm(amps[k]);
    }
    for (unsigned t = bits; t-- > 0;) {
        w[t].resize(std::size_t{1} << t);
        for (std::size_t p = 0; p < w[t].size(); ++p) {
            w[t][p] = w[t + 1][2 * p] + w[t + 1][2 * p + 1];
        }
    }
    for (auto &level : w) {
        for (double &x : level) {
            x = std::sqrt(x);
        }
    }
    return w;
}

Mat2 rotation_from(Complex a, Complex b) {
    return {a, -std::conj(b), b, std::conj(a)};
}

// Rotation that level t applies for prefix p.
Mat2 level_unitary(std::span<const Complex> amps, const std::vector<std::vector<double>> &w, unsigned bits,
                   unsigned t, std::size_t p) {
    double parent = w[t][p];
    if (parent == 0) {
        return mat2::identity();
    }
    Complex a;
    Complex b;
    if (t + 1 == bits) {
        a = 2 * p < amps.size() ? amps[2 * p] / parent : Complex(0);
        b = 2 * p + 1 < amps.size() ? amps[2 * p + 1] / parent : Complex(0);
    } else {
        a = w[t + 1][2 * p] / parent;
        b = w[t + 1][2 * p + 1] / parent;
    }
    // Renormalize against rounding so the payload stays unitary to 1e-12.
    double norm = std::sqrt(std::norm(a) + std::norm(b));
    return rotation_from(a / norm, b / norm);
}

void check_amplitudes(std::span<const Complex> amps, unsigned bits) {
    if (amps.empty()) {
        throw DomainError("prepare_state: empty amplitude vector");
    }
    if (amps.size() > (std::size_t{1} << bits)) {
        throw DomainError("prepare_state: " + std::to_string(amps.size()) + " amplitudes do not fit in " +
                          std::to_string(bits) + " qubits");
    }
    for (Complex c : amps) {
        if (!is_finite(c)) {
            throw DomainError("prepare_state: non-finite amplitude");
        }
    }
    double total = norm_squared(amps);
    if (std::abs(total - 1) > 1e-10) {
        throw DomainError("prepare_state: amplitudes have squared norm " + std::to_string(total) + ", expected 1");
    }
}

}  // namespace

Circuit prepare_state(std::span<const Complex> amps, const RegisterLayout &layout, std::string_view target) {
    const Register &reg = layout.get(target);
    unsigned bits = reg.size;
    check_amplitudes(amps, bits);
    Circuit circuit(layout);
    if (bits == 0) {
        circuit.add_global_phase(std::arg(amps[0]));
        return circuit;
    }
    auto w = tree_weights(amps, bits);
    for (unsigned t = 0; t < bits; ++t) {
        gates::Multiplexed g;
        for (unsigned k = 0; k < t; ++k) {
            g.selector.push_back(reg[bits - t + k]);
        }
        g.target = reg[bits - 1 - t];
        g.unitaries.resize(std::size_t{1} << t);
        bool trivial = true;
        for (std::size_t p = 0; p < g.unitaries.size(); ++p) {
            g.unitaries[p] = level_unitary(amps, w, bits, t, p);
            trivial = trivial && g.unitaries[p] == mat2::identity();
        }
        if (trivial) {
            continue;
        }
        if (t == 0) {
            circuit.append(gates::SingleQubit{g.target, g.unitaries[0]});
        } else {
            circuit.append(std::move(g));
        }
    }
    return circuit;
}

Circuit prepare_state(std::span<const Complex> amps) {
    RegisterLayout layout;
    layout.add("target", ceil_log2(std::max<std::size_t>(amps.size(), 1)));
    return prepare_state(amps, layout, "target");
}

Circuit controlled_prepare_state(std::span<const StateVector> states, const RegisterLayout &layout,
                                 std::string_view control, std::string_view target) {
    const Register &ctl = layout.get(control);
    const Register &reg = layout.get(target);
    unsigned bits = reg.size;
    if (states.size() != (std::size_t{1} << ctl.size)) {
        throw std::invalid_argument("controlled_prepare_state: need one state per control value");
    }
    if (bits == 0) {
        throw std::invalid_argument("controlled_prepare_state: target register is empty");
    }
    std::vector<std::vector<std::vector<double>>> weights;
    for (const auto &s : states) {
        check_amplitudes(s, bits);
        weights.push_back(tree_weights(s, bits));
    }
    Circuit circuit(layout);
    for (unsigned t = 0; t < bits; ++t) {
        gates::Multiplexed g;
        for (unsigned k = 0; k < t; ++k) {
            g.selector.push_back(reg[bits - t + k]);
        }
        for (Qubit q : ctl.qubits()) {
            g.selector.push_back(q);
        }
        g.target = reg[bits - 1 - t];
        g.unitaries.resize(std::size_t{1} << g.selector.size());
        for (std::size_t c = 0; c < states.size(); ++c) {
            for (std::size_t p = 0; p < (std::size_t{1} << t); ++p) {
                g.unitaries[p + (c << t)] = level_unitary(states[c], weights[c], bits, t, p);
            }
        }
        circuit.append(std::move(g));
    }
    return circuit;
}

StateVector dictionary_amplitudes(std::span<const DataItem> items) {
    double alpha = 0;
    for (const auto &item : items) {
        alpha += std::abs(item.value);
    }
    StateVector amps(std::size_t{1} << ceil_log2(items.size()), Complex(0));
    double scale = 1 / std::sqrt(alpha);
    for (std::size_t l = 0; l < items.size(); ++l) {
        amps[l] = principal_sqrt(items[l].value) * scale;
    }
    return amps;
}

}  // namespace dictenc
