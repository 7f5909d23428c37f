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

#include "dictenc/circuit.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

#include "dictenc/errors.h"
#include "json.hpp"

namespace dictenc {

namespace mat2 {

Mat2 identity() {
    return {1, 0, 0, 1};
}

Mat2 pauli_x() {
    return {0, 1, 1, 0};
}

Mat2 hadamard() {
    double h = std::numbers::sqrt2 / 2;
    return {h, h, h, -h};
}

Mat2 phase(double theta) {
    return {1, 0, 0, std::polar(1.0, theta)};
}

Mat2 rz(double theta) {
    return {std::polar(1.0, -theta / 2), 0, 0, std::polar(1.0, theta / 2)};
}

Mat2 ry(double theta) {
    double c = std::cos(theta / 2);
    double s = std::sin(theta / 2);
    return {c, -s, s, c};
}

Mat2 multiply(const Mat2 &a, const Mat2 &b) {
    return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3], a[2] * b[0] + a[3] * b[2],
            a[2] * b[1] + a[3] * b[3]};
}

Mat2 adjoint(const Mat2 &a) {
    return {std::conj(a[0]), std::conj(a[2]), std::conj(a[1]), std::conj(a[3])};
}

Mat2 scaled(const Mat2 &a, Complex factor) {
    return {a[0] * factor, a[1] * factor, a[2] * factor, a[3] * factor};
}

double unitarity_residual(const Mat2 &a) {
    Mat2 p = multiply(adjoint(a), a);
    return max_abs_diff(p, identity());
}

double max_abs_diff(const Mat2 &a, const Mat2 &b) {
    double worst = 0;
    for (std::size_t k = 0; k < 4; ++k) {
        worst = std::max(worst, std::abs(a[k] - b[k]));
    }
    return worst;
}

Mat2 u3(double theta, double phi, double lambda) {
    double c = std::cos(theta / 2);
    double s = std::sin(theta / 2);
    return {c, -std::polar(s, lambda), std::polar(s, phi), std::polar(c, phi + lambda)};
}

namespace {

double wrap_angle(double a) {
    constexpr double pi = std::numbers::pi;
    a = std::remainder(a, 2 * pi);
    if (a <= -pi) {
        a += 2 * pi;
    }
    return a;
}

}  // namespace

EulerAngles euler_zyz(const Mat2 &u) {
    constexpr double eps = 1e-15;
    double c = std::abs(u[0]);
    double s = std::abs(u[2]);
    EulerAngles out{2 * std::atan2(s, c), 0, 0, 0};
    if (c > eps && s > eps) {
        out.phase = std::arg(u[0]);
        out.phi = std::arg(u[2]) - out.phase;
        out.lambda = std::arg(-u[1]) - out.phase;
    } else if (s <= eps) {
        out.theta = 0;
        out.phase = std::arg(u[0]);
        out.lambda = std::arg(u[3]) - out.phase;
    } else {
        out.theta = std::numbers::pi;
        out.phase = std::arg(u[2]);
        out.lambda = std::arg(-u[1]) - out.phase;
    }
    out.phi = wrap_angle(out.phi);
    out.lambda = wrap_angle(out.lambda);
    out.phase = wrap_angle(out.phase);
    return out;
}

}  // namespace mat2

std::vector<Qubit> Register::qubits() const {
    std::vector<Qubit> out(size);
    for (Qubit k = 0; k < size; ++k) {
        out[k] = offset + k;
    }
    return out;
}

const Register &RegisterLayout::add(std::string name, Qubit size) {
    if (contains(name)) {
        throw std::invalid_argument("RegisterLayout: register '" + name + "' already exists");
    }
    registers_.push_back({std::move(name), total_, size});
    total_ += size;
    return registers_.back();
}

const Register *RegisterLayout::find(std::string_view name) const {
    for (const auto &r : registers_) {
        if (r.name == name) {
            return &r;
        }
    }
    return nullptr;
}

const Register &RegisterLayout::get(std::string_view name) const {
    if (const Register *r = find(name)) {
        return *r;
    }
    throw std::out_of_range("RegisterLayout: no register named '" + std::string(name) + "'");
}

Gate adjoint(const Gate &gate) {
    if (const auto *g = std::get_if<gates::SingleQubit>(&gate)) {
        return gates::SingleQubit{g->qubit, mat2::adjoint(g->matrix)};
    }
    if (const auto *g = std::get_if<gates::Multiplexed>(&gate)) {
        gates::Multiplexed out = *g;
        for (auto &u : out.unitaries) {
            u = mat2::adjoint(u);
        }
        return out;
    }
    return gate;
}

std::vector<Qubit> touched_qubits(const Gate &gate) {
    return std::visit(
        [](const auto &g) -> std::vector<Qubit> {
            using T = std::decay_t<decltype(g)>;
            if constexpr (std::is_same_v<T, gates::SingleQubit>) {
                return {g.qubit};
            } else if constexpr (std::is_same_v<T, gates::Cnot>) {
                return {g.control, g.target};
            } else if constexpr (std::is_same_v<T, gates::Swap>) {
                return {g.a, g.b};
            } else if constexpr (std::is_same_v<T, gates::MultiControlledX>) {
                std::vector<Qubit> out = g.controls;
                out.insert(out.end(), g.targets.begin(), g.targets.end());
                return out;
            } else {
                std::vector<Qubit> out = g.selector;
                out.push_back(g.target);
                return out;
            }
        },
        gate);
}

bool is_elementary(const Gate &gate) {
    if (std::holds_alternative<gates::SingleQubit>(gate)) {
        return true;
    }
    if (const auto *g = std::get_if<gates::Cnot>(&gate)) {
        return g->polarity;
    }
    return false;
}

std::string_view gate_name(const Gate &gate) {
    static constexpr std::string_view names[] = {"u", "cnot", "swap", "mcx", "multiplexed"};
    return names[gate.index()];
}

void Circuit::append(Gate gate) {
    Qubit total = qubit_count();
    auto qubits = touched_qubits(gate);
    std::set<Qubit> distinct;
    for (Qubit q : qubits) {
        if (q >= total) {
            throw std::out_of_range("Circuit: " + std::string(gate_name(gate)) + " touches qubit " +
                                    std::to_string(q) + " but the layout has " + std::to_string(total));
        }
        if (!distinct.insert(q).second) {
            throw std::invalid_argument("Circuit: " + std::string(gate_name(gate)) + " uses qubit " +
                                        std::to_string(q) + " twice");
        }
    }
    if (const auto *g = std::get_if<gates::SingleQubit>(&gate)) {
        if (mat2::unitarity_residual(g->matrix) > 1e-12) {
            throw DomainError("Circuit: single-qubit payload is not unitary");
        }
    } else if (const auto *g = std::get_if<gates::MultiControlledX>(&gate)) {
        if (g->pattern.size() != g->controls.size()) {
            throw std::invalid_argument("Circuit: mcx control pattern length differs from control count");
        }
    } else if (const auto *g = std::get_if<gates::Multiplexed>(&gate)) {
        if (g->selector.size() >= 32 || g->unitaries.size() != (std::size_t{1} << g->selector.size())) {
            throw std::invalid_argument("Circuit: multiplexor needs 2^k unitaries for k selector qubits");
        }
        for (const auto &u : g->unitaries) {
            if (mat2::unitarity_residual(u) > 1e-12) {
                throw DomainError("Circuit: multiplexor payload is not unitary");
            }
        }
    }
    gates_.push_back(std::move(gate));
}

void Circuit::append(const Circuit &other) {
    if (other.qubit_count() > qubit_count()) {
        throw std::invalid_argument("Circuit: appended circuit has more qubits than this layout");
    }
    for (const auto &g : other.gates_) {
        append(g);
    }
    global_phase_ += other.global_phase_;
}

Circuit Circuit::adjoint() const {
    Circuit out(layout_);
    out.gates_.reserve(gates_.size());
    for (auto it = gates_.rbegin(); it != gates_.rend(); ++it) {
        out.gates_.push_back(dictenc::adjoint(*it));
    }
    out.global_phase_ = -global_phase_;
    return out;
}

std::size_t depth(const Circuit &circuit) {
    std::vector<std::size_t> level(circuit.qubit_count(), 0);
    std::size_t deepest = 0;
    for (const auto &gate : circuit.gates()) {
        if (!is_elementary(gate)) {
            throw MustDecomposeError("depth: circuit contains a composite " + std::string(gate_name(gate)) +
                                     " gate; decompose first");
        }
        auto qubits = touched_qubits(gate);
        std::size_t layer = 0;
        for (Qubit q : qubits) {
            layer = std::max(layer, level[q]);
        }
        ++layer;
        for (Qubit q : qubits) {
            level[q] = layer;
        }
        deepest = std::max(deepest, layer);
    }
    return deepest;
}

GateCounts count_gates(const Circuit &circuit) {
    GateCounts counts;
    for (const auto &gate : circuit.gates()) {
        if (!is_elementary(gate)) {
            throw MustDecomposeError("count_gates: circuit contains a composite " + std::string(gate_name(gate)) +
                                     " gate; decompose first");
        }
        if (std::holds_alternative<gates::SingleQubit>(gate)) {
            ++counts.single_qubit;
        } else {
            ++counts.cnot;
        }
    }
    return counts;
}

std::size_t pool_demand(const Circuit &circuit) {
    std::size_t demand = 0;
    for (const auto &gate : circuit.gates()) {
        std::size_t need = 0;
        if (const auto *g = std::get_if<gates::MultiControlledX>(&gate)) {
            std::size_t k = g->controls.size();
            // A single target ends the chain in a Toffoli, so one ancilla fewer.
            if (k >= 2) {
                need = g->targets.size() == 1 ? k - 2 : k - 1;
            }
        } else if (const auto *g = std::get_if<gates::Multiplexed>(&gate)) {
            std::size_t k = g->selector.size();
            need = k >= 2 ? k - 1 : 0;
        }
        demand = std::max(demand, need);
    }
    return demand;
}

Circuit with_pool(Circuit circuit) {
    std::size_t demand = pool_demand(circuit);
    if (demand > 0 && !circuit.layout().contains(kPoolRegister)) {
        circuit.add_register(std::string(kPoolRegister), static_cast<Qubit>(demand));
    }
    return circuit;
}

using nlohmann::json;

namespace {

json layout_json(const RegisterLayout &layout) {
    json regs = json::array();
    for (const auto &r : layout.registers()) {
        regs.push_back({{"name", r.name}, {"offset", r.offset}, {"size", r.size}});
    }
    return {{"total_qubits", layout.total_qubits()}, {"registers", std::move(regs)}};
}

json mat2_json(const Mat2 &m) {
    json out = json::array();
    for (Complex v : m) {
        out.push_back({v.real(), v.imag()});
    }
    return out;
}

}  // namespace

std::string layout_to_json(const RegisterLayout &layout) {
    return layout_json(layout).dump(2) + "\n";
}

RegisterLayout layout_from_json(std::string_view text) {
    try {
        json doc = json::parse(text);
        RegisterLayout layout;
        for (const auto &r : doc.at("registers")) {
            const auto &added = layout.add(r.at("name").get<std::string>(), r.at("size").get<Qubit>());
            if (r.contains("offset") && r.at("offset").get<Qubit>() != added.offset) {
                throw ParseError("layout JSON: register '" + added.name + "' offset does not follow its predecessors");
            }
        }
        if (doc.contains("total_qubits") && doc.at("total_qubits").get<Qubit>() != layout.total_qubits()) {
            throw ParseError("layout JSON: total_qubits disagrees with register sizes");
        }
        return layout;
    } catch (const json::exception &e) {
        throw ParseError(std::string("layout JSON: ") + e.what());
    }
}

std::string circuit_to_json(const Circuit &circuit) {
    json out;
    out["layout"] = layout_json(circuit.layout());
    out["global_phase"] = circuit.global_phase();
    json list = json::array();
    for (const auto &gate : circuit.gates()) {
        json g;
        g["kind"] = gate_name(gate);
        std::visit(
            [&](const auto &x) {
                using T = std::decay_t<decltype(x)>;
                if constexpr (std::is_same_v<T, gates::SingleQubit>) {
                    g["qubit"] = x.qubit;
                    g["matrix"] = mat2_json(x.matrix);
                } else if constexpr (std::is_same_v<T, gates::Cnot>) {
                    g["control"] = x.control;
                    g["target"] = x.target;
                    g["polarity"] = x.polarity;
                } else if constexpr (std::is_same_v<T, gates::Swap>) {
                    g["qubits"] = {x.a, x.b};
                } else if constexpr (std::is_same_v<T, gates::MultiControlledX>) {
                    g["controls"] = x.controls;
                    g["pattern"] = x.pattern;
                    g["targets"] = x.targets;
                } else {
                    g["selector"] = x.selector;
                    g["target"] = x.target;
                    json us = json::array();
                    for (const auto &u : x.unitaries) {
                        us.push_back(mat2_json(u));
                    }
                    g["unitaries"] = std::move(us);
                }
            },
            gate);
        list.push_back(std::move(g));
    }
    out["gates"] = std::move(list);
    return out.dump(2) + "\n";
}

}  // namespace dictenc
