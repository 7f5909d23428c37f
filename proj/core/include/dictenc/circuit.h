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

#ifndef DICTENC_CIRCUIT_H
#define DICTENC_CIRCUIT_H

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "dictenc/numerics.h"

namespace dictenc {

using Qubit = std::uint32_t;

/// 2x2 complex matrix, row-major: {u00, u01, u10, u11}.
using Mat2 = std::array<Complex, 4>;

namespace mat2 {

Mat2 identity();
Mat2 pauli_x();
Mat2 hadamard();
/// diag(1, e^{i theta})
Mat2 phase(double theta);
/// diag(e^{-i theta/2}, e^{i theta/2})
Mat2 rz(double theta);
/// [[cos theta/2, -sin theta/2], [sin theta/2, cos theta/2]]
Mat2 ry(double theta);
Mat2 multiply(const Mat2 &a, const Mat2 &b);
Mat2 adjoint(const Mat2 &a);
Mat2 scaled(const Mat2 &a, Complex factor);
double unitarity_residual(const Mat2 &a);
double max_abs_diff(const Mat2 &a, const Mat2 &b);

/// OpenQASM u(theta, phi, lambda) without global phase:
/// [[cos t/2, -e^{i l} sin t/2], [e^{i p} sin t/2, e^{i(p+l)} cos t/2]].
Mat2 u3(double theta, double phi, double lambda);

/// U = e^{i phase} u3(theta, phi, lambda). Angles are normalized to (-pi, pi].
struct EulerAngles {
    double theta;
    double phi;
    double lambda;
    double phase;
};
EulerAngles euler_zyz(const Mat2 &u);

}  // namespace mat2

/// A named, contiguous block of qubits.
struct Register {
    std::string name;
    Qubit offset = 0;
    Qubit size = 0;

    Qubit operator[](std::size_t k) const {
        return offset + static_cast<Qubit>(k);
    }
    std::vector<Qubit> qubits() const;
    bool operator==(const Register &) const = default;
};

/// Registers laid out back to back in insertion order: the first register
/// holds qubit 0, which is the least significant bit of a basis index.
class RegisterLayout {
   public:
    const Register &add(std::string name, Qubit size);

    const Register &get(std::string_view name) const;
    const Register *find(std::string_view name) const;
    bool contains(std::string_view name) const {
        return find(name) != nullptr;
    }

    Qubit total_qubits() const {
        return total_;
    }
    std::span<const Register> registers() const {
        return registers_;
    }

    bool operator==(const RegisterLayout &) const = default;

   private:
    std::vector<Register> registers_;
    Qubit total_ = 0;
};

/// Name of the register decompose() draws clean ancillas from.
inline constexpr std::string_view kPoolRegister = "pool";

namespace gates {

struct SingleQubit {
    Qubit qubit;
    Mat2 matrix;
};

/// polarity true: fires on |1>, false: fires on |0>.
struct Cnot {
    Qubit control;
    Qubit target;
    bool polarity = true;
};

struct Swap {
    Qubit a;
    Qubit b;
};

/// Flips every target when control k reads pattern[k].
struct MultiControlledX {
    std::vector<Qubit> controls;
    std::vector<bool> pattern;
    std::vector<Qubit> targets;
};

/// Applies unitaries[v] to target, where v = sum_k bit(selector[k]) << k.
struct Multiplexed {
    std::vector<Qubit> selector;
    Qubit target;
    std::vector<Mat2> unitaries;
};

}  // namespace gates

using Gate = std::variant<gates::SingleQubit, gates::Cnot, gates::Swap, gates::MultiControlledX, gates::Multiplexed>;

Gate adjoint(const Gate &gate);
std::vector<Qubit> touched_qubits(const Gate &gate);
/// True for single-qubit gates and positive-control CNOTs.
bool is_elementary(const Gate &gate);
std::string_view gate_name(const Gate &gate);

/// Gate sequence over a register layout, plus a tracked global phase
/// (radians) so imported circuits reproduce blocks exactly.
class Circuit {
   public:
    Circuit() = default;
    explicit Circuit(RegisterLayout layout) : layout_(std::move(layout)) {
    }

    const RegisterLayout &layout() const {
        return layout_;
    }
    Qubit qubit_count() const {
        return layout_.total_qubits();
    }
    /// Appends a register; existing qubit indices are unchanged.
    const Register &add_register(std::string name, Qubit size) {
        return layout_.add(std::move(name), size);
    }

    std::span<const Gate> gates() const {
        return gates_;
    }
    std::size_t gate_count() const {
        return gates_.size();
    }
    double global_phase() const {
        return global_phase_;
    }
    void add_global_phase(double radians) {
        global_phase_ += radians;
    }

    /// Checks index range, control/target disjointness and payload unitarity (1e-12).
    void append(Gate gate);
    /// Appends every gate of `other` (and its phase); `other` must fit in this layout.
    void append(const Circuit &other);

    Circuit adjoint() const;

   private:
    RegisterLayout layout_;
    std::vector<Gate> gates_;
    double global_phase_ = 0;
};

/// Layer count under ASAP scheduling. Throws MustDecomposeError on composite gates.
std::size_t depth(const Circuit &circuit);

struct GateCounts {
    std::size_t single_qubit = 0;
    std::size_t cnot = 0;
    std::size_t total() const {
        return single_qubit + cnot;
    }
};
/// Throws MustDecomposeError on composite gates.
GateCounts count_gates(const Circuit &circuit);

/// Clean ancillas decompose() needs: k - 2 for a single-target k-control X, k - 1 for fan-out and multiplexors.
std::size_t pool_demand(const Circuit &circuit);

/// Appends a pool register sized by pool_demand() when the layout has none.
Circuit with_pool(Circuit circuit);

/// Rewrites into single-qubit gates and positive CNOTs.
///
/// Multi-controlled gates compute the AND of their controls into a V-chain
/// of clean ancillas from the pool register, and restore them, so the result
/// matches the input on every state whose pool qubits start in |0>.
/// Throws CapacityError when the pool is too small.
Circuit decompose(const Circuit &circuit);

inline constexpr unsigned kUnitaryCap = 14;
inline constexpr unsigned kStateCap = 26;

/// Full 2^q x 2^q unitary, columns simulated in parallel.
DenseMatrix to_unitary(const Circuit &circuit, unsigned cap = kUnitaryCap);

/// Dense gate-by-gate evolution.
StateVector apply_to_state(const Circuit &circuit, StateVector state);

/// Nonzero amplitudes as (basis index, amplitude), sorted by index.
using SparseState = std::vector<std::pair<std::uint64_t, Complex>>;

/// Evolves a computational basis state keeping only nonzero amplitudes
/// (entries below `prune` are dropped). Exact up to the pruning threshold,
/// and far cheaper than dense evolution for oracle circuits.
SparseState apply_to_basis_state(const Circuit &circuit, std::uint64_t basis, double prune = 1e-15);

/// OpenQASM 2.0 with `u(theta,phi,lambda)` and `cx` only. The register layout
/// and global phase are carried in `// layout` and `// global_phase` comments.
/// Throws MustDecomposeError on composite gates.
std::string export_qasm(const Circuit &circuit);

/// Reads the dialect export_qasm writes (also accepts x, h, rz, ry, ccx-free
/// qelib1 subsets: x, h, s, sdg, t, tdg, rz, ry, rx, u1, u2, u3, u, cx).
Circuit import_qasm(std::string_view text);

std::string layout_to_json(const RegisterLayout &layout);
RegisterLayout layout_from_json(std::string_view text);

/// Debug dump of every gate's fields.
std::string circuit_to_json(const Circuit &circuit);

}  // namespace dictenc

#endif
