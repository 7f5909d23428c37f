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

#ifndef DICTENC_TOOLS_CLI_H
#define DICTENC_TOOLS_CLI_H

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace dictenc::cli {

enum ExitCode : int {
    kOk = 0,
    kVerificationFailed = 1,
    kInputError = 2,
    kCapacityError = 3,
};

struct GenerateParams {
    std::string kind;  // cyclic | laplacian2d | gep
    unsigned n = 3;
    std::vector<double> alphas{1, 1, 1};
    std::uint64_t nx = 4;
    std::uint64_t ny = 4;
    double dx = 1;
    double dy = 1;
    std::uint64_t n1 = 2;
    std::uint64_t n2 = 3;
    /// 0 keeps a_k = k + 1, b_k = k + 1; otherwise values are drawn from this seed.
    std::uint64_t seed = 0;
};

struct RunConfig {
    std::string command;  // encode | verify | compare | generate | export
    std::string input;
    std::string output_dir;
    double tolerance = 1e-9;
    unsigned cap = 14;
    bool hermitian = false;
    bool lcu = false;
    bool sampled = false;
    bool greedy = false;
    double value_tol = 0;
    std::string format = "qasm";  // export: qasm | circuit-json | block-json | lcu
    GenerateParams generate;
};

/// Default output directory: $DICTENC_OUT_DIR, else "dictenc_out".
std::string default_output_dir();

/// Runs one command. Human-readable progress goes to `out`; failures are
/// written to `err` as one JSON object.
int run(const RunConfig &config, std::ostream &out, std::ostream &err);

}  // namespace dictenc::cli

#endif
