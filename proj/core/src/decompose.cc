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

#include <numbers>

#include "dictenc/circuit.h"
#include "dictenc/errors.h"

namespace dictenc {

namespace {

constexpr double kPi = std::numbers::pi;

class Lowering {
   public:
    Lowering(const Circuit &source, std::vector<Qubit> pool) : out_(source.layout()), pool_(std::move(pool)) {
        out_.add_global_phase(source.global_phase());
    }

    Circuit take() {
        return std::move(out_);
    }

    void lower(const Gate &gate) {
        if (const auto *g = std::get_if<gates::SingleQubit>(&gate)) {
            out_.append(*g);
        } else if (const auto *g = std::get_if<gates::Cnot>(&gate)) {
            if (g->polarity) {
                cx(g->control, g->target);
            } else {
                x(g->control);
                cx(g->control, g->target);
                x(g->control);
            }
        } else if (const auto *g = std::get_if<gates::Swap>(&gate)) {
            cx(g->a, g->b);
            cx(g->b, g->a);
            cx(g->a, g->b);
        } else if (const auto *g = std::get_if<gates::MultiControlledX>(&gate)) {
            lower_mcx(*g);
        } else {
            lower_multiplexed(std::get<gates::Multiplexed>(gate));
        }
    }

   private:
    void u(Qubit q, const Mat2 &m) {
        out_.append(gates::SingleQubit{q, m});
    }
    void x(Qubit q) {
        u(q, mat2::pauli_x());
    }
    void cx(Qubit c, Qubit t) {
        out_.append(gates::Cnot{c, t, true});
    }

    void toffoli(Qubit a, Qubit b, Qubit t) {
        Mat2 tg = mat2::phase(kPi / 4);
        Mat2 tdg = mat2::phase(-kPi / 4);
        u(t, mat2::hadamard());
        cx(b, t);
        u(t, tdg);
        cx(a, t);
        u(t, tg);
        cx(b, t);
        u(t, tdg);
        cx(a, t);
        u(b, tg);
        u(t, tg);
        u(t, mat2::hadamard());
        cx(a, b);
        u(a, tg);
        u(b, tdg);
        cx(a, b);
    }

    void flip_negatives(const std::vector<Qubit> &controls, const std::vector<bool> &pattern) {
        for (std::size_t k = 0; k < controls.size(); ++k) {
            if (!pattern[k]) {
                x(controls[k]);
            }
        }
    }

    void require_pool(std::size_t needed) {
        if (needed > pool_.size()) {
            throw CapacityError("decompose: need " + std::to_string(needed) + " pool ancillas but the layout has " +
                                std::to_string(pool_.size()) + " (shortfall " + std::to_string(needed - pool_.size()) +
                                "); call with_pool first");
        }
    }

    // AND of `controls` into pool ancillas; the last entry of the returned
    // chain holds the conjunction. Requires at least two controls.
    std::vector<std::array<Qubit, 3>> and_chain(const std::vector<Qubit> &controls, std::size_t length) {
        require_pool(length);
        std::vector<std::array<Qubit, 3>> chain;
        Qubit acc = controls[0];
        for (std::size_t k = 0; k < length; ++k) {
            chain.push_back({acc, controls[k + 1], pool_[k]});
            acc = pool_[k];
        }
        for (const auto &t : chain) {
            toffoli(t[0], t[1], t[2]);
        }
        return chain;
    }

    void undo_chain(const std::vector<std::array<Qubit, 3>> &chain) {
        for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
            toffoli((*it)[0], (*it)[1], (*it)[2]);
        }
    }

    void lower_mcx(const gates::MultiControlledX &g) {
        std::size_t k = g.controls.size();
        if (g.targets.empty()) {
            return;
        }
        flip_negatives(g.controls, g.pattern);
        if (k == 0) {
            for (Qubit t : g.targets) {
                x(t);
            }
        } else if (k == 1) {
            for (Qubit t : g.targets) {
                cx(g.controls[0], t);
            }
        } else if (g.targets.size() == 1) {
            auto chain = and_chain(g.controls, k - 2);
            Qubit acc = chain.empty() ? g.controls[0] : chain.back()[2];
            toffoli(acc, g.controls[k - 1], g.targets[0]);
            undo_chain(chain);
        } else {
            auto chain = and_chain(g.controls, k - 1);
            for (Qubit t : g.targets) {
                cx(chain.back()[2], t);
            }
            undo_chain(chain);
        }
        flip_negatives(g.controls, g.pattern);
    }

    void controlled_u(Qubit c, Qubit t, const Mat2 &m) {
        auto e = mat2::euler_zyz(m);
        double alpha = e.phase + (e.phi + e.lambda) / 2;
        double beta = e.phi;
        double gamma = e.theta;
        double delta = e.lambda;
        u(t, mat2::rz((delta - beta) / 2));
        cx(c, t);
        u(t, mat2::multiply(mat2::ry(-gamma / 2), mat2::rz(-(delta + beta) / 2)));
        cx(c, t);
        u(t, mat2::multiply(mat2::rz(beta), mat2::ry(gamma / 2)));
        if (alpha != 0) {
            u(c, mat2::phase(alpha));
        }
    }

    void lower_multiplexed(const gates::Multiplexed &g) {
        std::size_t k = g.selector.size();
        if (k == 0) {
            u(g.target, g.unitaries[0]);
            return;
        }
        for (std::size_t p = 0; p < g.unitaries.size(); ++p) {
            const Mat2 &m = g.unitaries[p];
            if (mat2::max_abs_diff(m, mat2::identity()) == 0) {
                continue;
            }
            std::vector<bool> pattern(k);
            for (std::size_t b = 0; b < k; ++b) {
                pattern[b] = ((p >> b) & 1) != 0;
            }
            flip_negatives(g.selector, pattern);
            auto chain = k >= 2 ? and_chain(g.selector, k - 1) : std::vector<std::array<Qubit, 3>>{};
            Qubit c = chain.empty() ? g.selector[0] : chain.back()[2];
            controlled_u(c, g.target, m);
            undo_chain(chain);
            flip_negatives(g.selector, pattern);
        }
    }

    Circuit out_;
    std::vector<Qubit> pool_;
};

}  // namespace

Circuit decompose(const Circuit &circuit) {
    std::vector<Qubit> pool;
    if (const Register *r = circuit.layout().find(kPoolRegister)) {
        pool = r->qubits();
    }
    Lowering lowering(circuit, pool);
    for (const auto &gate : circuit.gates()) {
        lowering.lower(gate);
    }
    return lowering.take();
}

}  // namespace dictenc
