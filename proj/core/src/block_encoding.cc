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
#include <numeric>
#include <random>
#include <thread>

#include "dictenc/errors.h"
#include "dictenc/synthesis.h"
#include "json.hpp"

namespace dictenc {

namespace {

StateVector conjugated(StateVector v) {
    for (auto &x : v) {
        x = std::conj(x);
    }
    return v;
}

std::size_t pool_size(const RegisterLayout &layout) {
    const Register *r = layout.find(kPoolRegister);
    return r == nullptr ? 0 : r->size;
}

}  // namespace

BlockEncoding assemble(const Dictionary &d) {
    unsigned n = d.n;
    unsigned m = d.index_bits();
    Circuit oc = build_oc(d);
    const RegisterLayout &layout = oc.layout();
    StateVector amps = dictionary_amplitudes(d.items);

    Circuit circuit(layout);
    circuit.append(prepare_state(amps, layout, kIdxRegister));
    circuit.append(oc);
    circuit.append(prepare_state(conjugated(amps), layout, kIdxRegister).adjoint());

    BlockEncoding be;
    be.circuit = std::move(circuit);
    be.alpha = subnormalization(d);
    be.system_qubits = n;
    be.ancilla_count = be.circuit.qubit_count() - n;
    be.source = "dictionary (s0=" + std::to_string(d.item_count()) + ", m=" + std::to_string(m) + ")";
    return be;
}

BlockEncoding assemble_hermitian(const HermitianDictionary &d) {
    unsigned n = d.n;
    Circuit oc = build_oc_hermitian(d);
    const RegisterLayout &layout = oc.layout();
    double alpha = subnormalization(d);
    StateVector amps(d.items.size());
    for (std::size_t l = 0; l < d.items.size(); ++l) {
        amps[l] = std::sqrt(d.items[l].value.real() / alpha);
    }

    Circuit w(layout);
    w.append(prepare_state(amps, layout, kIdxRegister));
    w.append(oc);

    Circuit circuit(layout);
    circuit.append(w);
    circuit.append(gates::Swap{layout.get(kDel0Register)[0], layout.get(kDel1Register)[0]});
    const Register &idx = layout.get(kIdxRegister);
    const Register &system = layout.get(kSystemRegister);
    for (Qubit k = 0; k < n; ++k) {
        circuit.append(gates::Swap{idx[k], system[k]});
    }
    circuit.append(w.adjoint());

    BlockEncoding be;
    be.circuit = std::move(circuit);
    be.alpha = alpha;
    be.system_qubits = n;
    be.ancilla_count = be.circuit.qubit_count() - n;
    be.hermitian = true;
    be.source = "hermitian dictionary (s0=" + std::to_string(d.item_count()) + ")";
    return be;
}

BlockEncoding frobenius_baseline(const SparseMatrix &a) {
    unsigned n = a.qubits();
    if (n > kDenseMatrixCap) {
        throw CapacityError("frobenius_baseline: n = " + std::to_string(n) + " exceeds the cap of " +
                            std::to_string(kDenseMatrixCap));
    }
    double norm = frobenius_norm(a);
    if (norm == 0) {
        throw DomainError("frobenius_baseline: matrix is zero");
    }
    RegisterLayout layout;
    layout.add(std::string(kSystemRegister), n);
    layout.add(std::string(kRowRegister), n);
    BlockEncoding be;
    be.alpha = norm;
    be.system_qubits = n;
    be.source = "frobenius baseline";
    if (n == 0) {
        Circuit circuit(layout);
        circuit.add_global_phase(std::arg(a.triplets().front().value));
        be.circuit = std::move(circuit);
        return be;
    }

    std::size_t dim = a.dim();
    std::vector<StateVector> rows(dim, StateVector(dim, Complex(0)));
    for (const auto &t : a.triplets()) {
        rows[t.row][t.col] = std::conj(t.value);
    }
    StateVector row_norms(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        double r = std::sqrt(norm_squared(rows[i]));
        row_norms[i] = r / norm;
        if (r == 0) {
            rows[i][0] = 1;
        } else {
            for (auto &x : rows[i]) {
                x /= r;
            }
        }
    }
    // Row norms are rescaled so the amplitude vector is normalized to rounding.
    double total = std::sqrt(norm_squared(row_norms));
    for (auto &x : row_norms) {
        x /= total;
    }

    Circuit circuit(layout);
    circuit.append(prepare_state(row_norms, layout, kRowRegister));
    const Register &sys = layout.get(kSystemRegister);
    const Register &row = layout.get(kRowRegister);
    for (Qubit k = 0; k < n; ++k) {
        circuit.append(gates::Swap{sys[k], row[k]});
    }
    circuit.append(controlled_prepare_state(rows, layout, kSystemRegister, kRowRegister).adjoint());
    be.circuit = std::move(circuit);
    be.ancilla_count = n;
    return be;
}

BlockEncoding decompose(const BlockEncoding &be) {
    BlockEncoding out = be;
    out.circuit = decompose(with_pool(be.circuit));
    out.ancilla_count = out.circuit.qubit_count() - out.system_qubits;
    return out;
}

namespace {

Complex sparse_dot(const SparseState &x, const SparseState &y) {
    Complex acc = 0;
    auto i = x.begin();
    auto j = y.begin();
    while (i != x.end() && j != y.end()) {
        if (i->first < j->first) {
            ++i;
        } else if (j->first < i->first) {
            ++j;
        } else {
            acc += std::conj(i->second) * j->second;
            ++i;
            ++j;
        }
    }
    return acc;
}

Complex sparse_at(const SparseState &x, std::uint64_t index) {
    auto it = std::lower_bound(x.begin(), x.end(), index, [](const auto &e, std::uint64_t v) { return e.first < v; });
    return it != x.end() && it->first == index ? it->second : Complex(0);
}

std::vector<SparseState> simulate_columns(const Circuit &circuit, const std::vector<std::uint64_t> &cols) {
    std::vector<SparseState> out(cols.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t k = next++; k < cols.size(); k = next++) {
            out[k] = apply_to_basis_state(circuit, cols[k]);
        }
    };
    unsigned threads = std::clamp<unsigned>(std::thread::hardware_concurrency(), 1, 16);
    threads = std::min<std::size_t>(threads, cols.size());
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < threads; ++t) {
        pool.emplace_back(worker);
    }
    worker();
    return out;
}

}  // namespace

VerificationReport verify_block_encoding(const BlockEncoding &be, const SparseMatrix &a, const VerifyOptions &options) {
    if (a.qubits() != be.system_qubits) {
        throw std::invalid_argument("verify_block_encoding: matrix has n = " + std::to_string(a.qubits()) +
                                    " but the encoding acts on " + std::to_string(be.system_qubits) + " qubits");
    }
    const Circuit &circuit = be.circuit;
    std::uint64_t dim = std::uint64_t{1} << be.system_qubits;
    std::size_t logical = circuit.qubit_count() - pool_size(circuit.layout());

    VerificationReport report;
    report.tolerance = options.tol;
    report.sampled = options.sampled || logical > options.cap;

    std::vector<std::uint64_t> cols(dim);
    std::iota(cols.begin(), cols.end(), 0);
    if (report.sampled) {
        std::mt19937_64 rng(options.seed);
        std::shuffle(cols.begin(), cols.end(), rng);
        cols.resize(std::min<std::size_t>(cols.size(), std::max<std::size_t>(options.sample_columns, 1)));
        std::sort(cols.begin(), cols.end());
    }
    report.columns_checked = cols.size();

    auto outputs = simulate_columns(circuit, cols);

    std::vector<std::vector<Complex>> expected(cols.size(), std::vector<Complex>(dim, Complex(0)));
    std::vector<std::size_t> slot(dim, cols.size());
    for (std::size_t k = 0; k < cols.size(); ++k) {
        slot[cols[k]] = k;
    }
    for (const auto &t : a.triplets()) {
        if (slot[t.col] < cols.size()) {
            expected[slot[t.col]][t.row] = t.value;
        }
    }
    double eps = 0;
    for (std::size_t k = 0; k < cols.size(); ++k) {
        std::vector<Complex> got(dim, Complex(0));
        for (const auto &[index, amp] : outputs[k]) {
            if (index < dim) {
                got[index] = amp;
            }
        }
        for (std::uint64_t i = 0; i < dim; ++i) {
            eps = std::max(eps, std::abs(expected[k][i] - be.alpha * got[i]));
        }
    }
    report.epsilon = eps;

    // Full-unitary checks when small enough in both width and work.
    double work = static_cast<double>(circuit.gate_count()) * std::ldexp(1.0, 2 * circuit.qubit_count());
    if (!report.sampled && circuit.qubit_count() <= options.full_unitary_cap && work <= 4e9) {
        DenseMatrix u = to_unitary(circuit, options.full_unitary_cap);
        report.full_unitary = true;
        report.unitarity_residual = unitarity_residual(u);
        if (be.hermitian) {
            report.hermiticity_residual = hermiticity_residual(u);
        }
    } else {
        double unit = 0;
        for (std::size_t x = 0; x < cols.size(); ++x) {
            for (std::size_t y = x; y < cols.size(); ++y) {
                Complex g = sparse_dot(outputs[x], outputs[y]);
                unit = std::max(unit, std::abs(g - Complex(x == y ? 1.0 : 0.0)));
            }
        }
        report.unitarity_residual = unit;
        if (be.hermitian) {
            double herm = 0;
            for (std::size_t x = 0; x < cols.size(); ++x) {
                for (std::size_t y = 0; y < cols.size(); ++y) {
                    Complex uxy = sparse_at(outputs[y], cols[x]);
                    Complex uyx = sparse_at(outputs[x], cols[y]);
                    herm = std::max(herm, std::abs(uxy - std::conj(uyx)));
                }
            }
            report.hermiticity_residual = herm;
        }
    }
    report.passed = eps <= options.tol && report.unitarity_residual <= options.tol &&
                    (!report.hermiticity_residual || *report.hermiticity_residual <= options.tol);
    return report;
}

DenseMatrix extract_block(const BlockEncoding &be) {
    if (be.system_qubits > kDenseMatrixCap) {
        throw CapacityError("extract_block: n above the dense cap");
    }
    std::uint64_t dim = std::uint64_t{1} << be.system_qubits;
    std::vector<std::uint64_t> cols(dim);
    std::iota(cols.begin(), cols.end(), 0);
    auto outputs = simulate_columns(be.circuit, cols);
    DenseMatrix block(dim);
    for (std::uint64_t j = 0; j < dim; ++j) {
        for (const auto &[index, amp] : outputs[j]) {
            if (index < dim) {
                block(index, j) = amp;
            }
        }
    }
    return block;
}

std::string VerificationReport::to_json() const {
    nlohmann::ordered_json j;
    j["epsilon"] = epsilon;
    j["unitarity_residual"] = unitarity_residual;
    j["hermiticity_residual"] = hermiticity_residual ? nlohmann::ordered_json(*hermiticity_residual) : nullptr;
    j["full_unitary"] = full_unitary;
    j["sampled"] = sampled;
    j["columns_checked"] = columns_checked;
    j["tolerance"] = tolerance;
    j["passed"] = passed;
    return j.dump(2) + "\n";
}

std::string block_encoding_to_json(const BlockEncoding &be) {
    nlohmann::ordered_json j;
    j["alpha"] = be.alpha;
    j["system_qubits"] = be.system_qubits;
    j["ancilla_count"] = be.ancilla_count;
    j["hermitian"] = be.hermitian;
    j["layout"] = nlohmann::ordered_json::parse(layout_to_json(be.layout()));
    j["qasm"] = export_qasm(be.circuit);
    return j.dump(2) + "\n";
}

}  // namespace dictenc
