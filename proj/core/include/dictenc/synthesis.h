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

#ifndef DICTENC_SYNTHESIS_H
#define DICTENC_SYNTHESIS_H

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dictenc/circuit.h"
#include "dictenc/dictionary.h"
#include "dictenc/sparse_matrix.h"

namespace dictenc {

// Register names used by the oracles.
inline constexpr std::string_view kSystemRegister = "system";
inline constexpr std::string_view kScratchRegister = "scratch";
inline constexpr std::string_view kDelRegister = "del";
inline constexpr std::string_view kDel0Register = "del0";
inline constexpr std::string_view kDel1Register = "del1";
inline constexpr std::string_view kIdxRegister = "idx";
inline constexpr std::string_view kRowRegister = "row";

/// ---- State preparation ----

/// Binary-tree amplitude loading on `target` (qubit 0 least significant).
/// Amplitudes are zero-padded up to 2^|target|. Throws DomainError if the
/// vector is not normalized to 1e-10 or is too long.
Circuit prepare_state(std::span<const Complex> amps, const RegisterLayout &layout, std::string_view target);

/// Same, on a fresh layout holding a single register "target" of
/// ceil_log2(amps.size()) qubits.
Circuit prepare_state(std::span<const Complex> amps);

/// For every basis value c of `control`, maps |c>|0> to |c>|states[c]>.
/// states.size() must equal 2^|control|.
Circuit controlled_prepare_state(std::span<const StateVector> states, const RegisterLayout &layout,
                                 std::string_view control, std::string_view target);

/// PREP amplitudes sqrt(A_l)/sqrt(alpha) padded to 2^m.
StateVector dictionary_amplitudes(std::span<const DataItem> items);

/// ---- Sparse Boolean selectors ----

struct BooleanFunctionTable {
    unsigned index_bits = 0;
    unsigned word_bits = 0;
    /// k -> f(k); zero words are ignored.
    std::map<std::uint64_t, std::uint64_t> nonzeros;

    std::uint64_t operator()(std::uint64_t k) const;
    std::size_t sparsity() const;
};

/// |k>|z> -> |k>|z xor f(k)>, one multi-controlled X per nonzero entry.
Circuit select_f(const BooleanFunctionTable &f, const RegisterLayout &layout, std::span<const Qubit> selector,
                 std::span<const Qubit> word);
/// Appends the selector to an existing circuit.
void append_select_f(Circuit &circuit, const BooleanFunctionTable &f, std::span<const Qubit> selector,
                     std::span<const Qubit> word);

/// ---- Column oracles ----

/// Registers, low to high: system (n), scratch (n), del (1), idx (m).
RegisterLayout oracle_layout(unsigned n, unsigned m);
/// Registers, low to high: system (n), scratch (n), del0, del1, idx (n).
RegisterLayout hermitian_oracle_layout(unsigned n);

/// The three tables driving the column oracle, indexed as documented in
/// build_oc.
struct OracleTables {
    BooleanFunctionTable ranging;
    BooleanFunctionTable mapping;
    BooleanFunctionTable uncompute;
};
OracleTables oracle_tables(const Dictionary &d);

/// X(del), ranging select (idx, system) -> del, mapping select
/// (idx, del, system) -> scratch, uncompute select (idx, del, scratch) ->
/// system, then system <-> scratch swap controlled on del = 0.
Circuit build_oc(const Dictionary &d);

/// Hermitian variant: the system register controls and idx evolves,
/// |l>_idx|j> -> |c_j(l)>_idx|j> with del1 = 0 when defined.
Circuit build_oc_hermitian(const HermitianDictionary &d);

/// ---- Block encodings ----

struct BlockEncoding {
    Circuit circuit;
    double alpha = 0;
    unsigned system_qubits = 0;
    /// Every qubit outside the system register, pool included.
    std::size_t ancilla_count = 0;
    bool hermitian = false;
    std::string source;

    const RegisterLayout &layout() const {
        return circuit.layout();
    }
};

BlockEncoding assemble(const Dictionary &d);
BlockEncoding assemble_hermitian(const HermitianDictionary &d);
BlockEncoding frobenius_baseline(const SparseMatrix &a);

/// Adds the ancilla pool and lowers to {U(2), CNOT}.
BlockEncoding decompose(const BlockEncoding &be);

struct VerifyOptions {
    double tol = 1e-9;
    /// Limit on qubits outside the clean pool; above it columns are sampled.
    unsigned cap = kUnitaryCap;
    /// Force sampling even under the cap.
    bool sampled = false;
    std::size_t sample_columns = 8;
    std::uint64_t seed = 0x5eed;
    /// Full-unitary checks (unitarity, Hermiticity) run up to this many qubits.
    unsigned full_unitary_cap = 11;
};

struct VerificationReport {
    double epsilon = 0;
    double unitarity_residual = 0;
    std::optional<double> hermiticity_residual;
    /// True when the residuals cover the whole unitary, not just block columns.
    bool full_unitary = false;
    bool sampled = false;
    std::size_t columns_checked = 0;
    double tolerance = 0;
    bool passed = false;

    std::string to_json() const;
};

/// Simulates U on |0>_anc|j> and compares alpha * block with `a`.
VerificationReport verify_block_encoding(const BlockEncoding &be, const SparseMatrix &a,
                                         const VerifyOptions &options = {});

/// Extracted block, alpha not applied. Requires n <= kDenseMatrixCap.
DenseMatrix extract_block(const BlockEncoding &be);

/// {"alpha":..,"ancilla_count":..,"hermitian":..,"layout":{..},"qasm":".."}.
/// The circuit must be decomposed.
std::string block_encoding_to_json(const BlockEncoding &be);

/// ---- LCU form ----

struct LcuForm {
    unsigned n = 0;
    /// A_l.
    std::vector<Complex> values;
    /// sqrt(A_l), the PREP weights before normalization.
    std::vector<Complex> coefficients;
    /// Bit k set means the term acts as X on system qubit k.
    std::vector<Index> masks;

    /// sum_l A_l X^{masks[l]} on the system register.
    SparseMatrix reconstruct() const;
};

/// Requires every item to cover all columns with c_l(j) = j xor t_l.
/// Throws NotLcuExpressibleError naming the item and a column pair.
LcuForm export_lcu(const Dictionary &d);

}  // namespace dictenc

#endif
