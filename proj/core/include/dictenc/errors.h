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

#ifndef DICTENC_ERRORS_H
#define DICTENC_ERRORS_H

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dictenc {

/// Malformed textual input (MatrixMarket, JSON, QASM). `line` is 1-based, 0 when unknown.
class ParseError : public std::runtime_error {
   public:
    ParseError(const std::string &message, std::size_t line = 0)
        : std::runtime_error(line == 0 ? message : "line " + std::to_string(line) + ": " + message), line_(line) {
    }
    std::size_t line() const {
        return line_;
    }

   private:
    std::size_t line_;
};

/// Input is well-formed but uses a feature this library does not handle (e.g. pattern matrices).
class UnsupportedFormatError : public ParseError {
   public:
    using ParseError::ParseError;
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// A size limit was hit: simulation cap, ancilla pool, Hermitian index capacity.
class CapacityError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Operation needs a circuit containing only single-qubit gates and CNOTs.
class MustDecomposeError : public std::logic_error {
   public:
    using std::logic_error::logic_error;
};

/// Dictionary is not expressible as a sum of X-string unitaries.
class NotLcuExpressibleError : public std::invalid_argument {
   public:
    NotLcuExpressibleError(const std::string &message, std::size_t item, std::size_t col_a, std::size_t col_b)
        : std::invalid_argument(message), item_(item), col_a_(col_a), col_b_(col_b) {
    }
    std::size_t item() const {
        return item_;
    }
    std::size_t first_column() const {
        return col_a_;
    }
    std::size_t second_column() const {
        return col_b_;
    }

   private:
    std::size_t item_;
    std::size_t col_a_;
    std::size_t col_b_;
};

/// Cost-model hypothesis not satisfied.
class InapplicableError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace dictenc

#endif
