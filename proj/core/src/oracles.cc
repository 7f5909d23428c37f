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

#include "dictenc/errors.h"
#include "dictenc/synthesis.h"

namespace dictenc {

std::uint64_t BooleanFunctionTable::operator()(std::uint64_t k) const {
    auto it = nonzeros.find(k);
    return it == nonzeros.end() ? 0 : it->second;
}

std::size_t BooleanFunctionTable::sparsity() const {
    std::size_t count = 0;
    for (const auto &[k, v] : nonzeros) {
        count += v != 0 ? 1 : 0;
    }
    return count;
}

void append_select_f(Circuit &circuit, const BooleanFunctionTable &f, std::span<const Qubit> selector,
                     std::span<const Qubit> word) {
    if (selector.size() != f.index_bits || word.size() != f.word_bits) {
        throw std::invalid_argument("select_f: register sizes (" + std::to_string(selector.size()) + ", " +
                                    std::to_string(word.size()) + ") do not match the table (" +
                                    std::to_string(f.index_bits) + ", " + std::to_string(f.word_bits) + ")");
    }
    for (const auto &[k, v] : f.nonzeros) {
        if (f.index_bits < 64 && (k >> f.index_bits) != 0) {
            throw std::invalid_argument("select_f: table index " + std::to_string(k) + " exceeds index_bits");
        }
        if (f.word_bits < 64 && (v >> f.word_bits) != 0) {
            throw std::invalid_argument("select_f: table word for index " + std::to_string(k) +
                                        " exceeds word_bits");
        }
        if (v == 0) {
            continue;
        }
        gates::MultiControlledX g;
        g.controls.assign(selector.begin(), selector.end());
        for (std::size_t b = 0; b < selector.size(); ++b) {
            g.pattern.push_back(((k >> b) & 1) != 0);
        }
        for (std::size_t b = 0; b < word.size(); ++b) {
            if ((v >> b) & 1) {
                g.targets.push_back(word[b]);
            }
        }
        circuit.append(std::move(g));
    }
}

Circuit select_f(const BooleanFunctionTable &f, const RegisterLayout &layout, std::span<const Qubit> selector,
                 std::span<const Qubit> word) {
    Circuit circuit(layout);
    append_select_f(circuit, f, selector, word);
    return circuit;
}

RegisterLayout oracle_layout(unsigned n, unsigned m) {
    RegisterLayout layout;
    layout.add(std::string(kSystemRegister), n);
    layout.add(std::string(kScratchRegister), n);
    layout.add(std::string(kDelRegister), 1);
    layout.add(std::string(kIdxRegister), m);
    return layout;
}

RegisterLayout hermitian_oracle_layout(unsigned n) {
    RegisterLayout layout;
    layout.add(std::string(kSystemRegister), n);
    layout.add(std::string(kScratchRegister), n);
    layout.add(std::string(kDel0Register), 1);
    layout.add(std::string(kDel1Register), 1);
    layout.add(std::string(kIdxRegister), n);
    return layout;
}

namespace {

std::vector<Qubit> concat(std::initializer_list<std::vector<Qubit>> parts) {
    std::vector<Qubit> out;
    for (const auto &p : parts) {
        out.insert(out.end(), p.begin(), p.end());
    }
    return out;
}

void controlled_register_swap(Circuit &circuit, Qubit flag, const Register &a, const Register &b) {
    for (Qubit k = 0; k < a.size; ++k) {
        circuit.append(gates::Cnot{b[k], a[k], true});
        circuit.append(gates::MultiControlledX{{flag, a[k]}, {false, true}, {b[k]}});
        circuit.append(gates::Cnot{b[k], a[k], true});
    }
}

void require_valid(const ValidationReport &report, const char *who) {
    if (!report.ok()) {
        throw DomainError(std::string(who) + ": invalid dictionary: " + report.summary());
    }
}

}  // namespace

OracleTables oracle_tables(const Dictionary &d) {
    unsigned n = d.n;
    unsigned m = d.index_bits();
    OracleTables t;
    t.ranging = {n + m, 1, {}};
    t.mapping = {n + 1 + m, n, {}};
    t.uncompute = {n + 1 + m, n, {}};
    for (std::uint64_t l = 0; l < d.items.size(); ++l) {
        for (const auto &[j, i] : d.items[l].rows_by_column) {
            t.ranging.nonzeros[j | (l << n)] = 1;
            if (i != 0) {
                t.mapping.nonzeros[j | (l << (n + 1))] = i;
            }
            if (j != 0) {
                t.uncompute.nonzeros[i | (l << (n + 1))] = j;
            }
        }
    }
    return t;
}

Circuit build_oc(const Dictionary &d) {
    require_valid(validate(d), "build_oc");
    RegisterLayout layout = oracle_layout(d.n, d.index_bits());
    const Register &system = layout.get(kSystemRegister);
    const Register &scratch = layout.get(kScratchRegister);
    const Register &del = layout.get(kDelRegister);
    const Register &idx = layout.get(kIdxRegister);
    OracleTables t = oracle_tables(d);

    Circuit circuit(layout);
    circuit.append(gates::SingleQubit{del[0], mat2::pauli_x()});
    append_select_f(circuit, t.ranging, concat({system.qubits(), idx.qubits()}), del.qubits());
    append_select_f(circuit, t.mapping, concat({system.qubits(), del.qubits(), idx.qubits()}), scratch.qubits());
    append_select_f(circuit, t.uncompute, concat({scratch.qubits(), del.qubits(), idx.qubits()}), system.qubits());
    controlled_register_swap(circuit, del[0], system, scratch);
    return circuit;
}

Circuit build_oc_hermitian(const HermitianDictionary &d) {
    require_valid(validate(d), "build_oc_hermitian");
    unsigned n = d.n;
    RegisterLayout layout = hermitian_oracle_layout(n);
    const Register &system = layout.get(kSystemRegister);
    const Register &scratch = layout.get(kScratchRegister);
    const Register &del1 = layout.get(kDel1Register);
    const Register &idx = layout.get(kIdxRegister);

    BooleanFunctionTable ranging{2 * n, 1, {}};
    BooleanFunctionTable mapping{2 * n + 1, n, {}};
    BooleanFunctionTable uncompute{2 * n + 1, n, {}};
    for (std::uint64_t l = 0; l < d.items.size(); ++l) {
        for (const auto &[j, i] : d.items[l].rows_by_column) {
            ranging.nonzeros[j | (l << n)] = 1;
            if (i != 0) {
                mapping.nonzeros[j | (l << (n + 1))] = i;
            }
            if (l != 0) {
                uncompute.nonzeros[j | (i << (n + 1))] = l;
            }
        }
    }

    Circuit circuit(layout);
    circuit.append(gates::SingleQubit{del1[0], mat2::pauli_x()});
    append_select_f(circuit, ranging, concat({system.qubits(), idx.qubits()}), del1.qubits());
    append_select_f(circuit, mapping, concat({system.qubits(), del1.qubits(), idx.qubits()}), scratch.qubits());
    append_select_f(circuit, uncompute, concat({system.qubits(), del1.qubits(), scratch.qubits()}), idx.qubits());
    controlled_register_swap(circuit, del1[0], idx, scratch);
    return circuit;
}

}  // namespace dictenc
