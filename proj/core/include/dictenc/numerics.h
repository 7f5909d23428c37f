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

#ifndef DICTENC_NUMERICS_H
#define DICTENC_NUMERICS_H

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace dictenc {

using Complex = std::complex<double>;

/// Absolute per-entry tolerance used by the verification predicates.
inline constexpr double kDefaultTolerance = 1e-10;

/// Principal square root with the argument taken in [0, 2pi): sqrt(|c|) e^{i theta/2}.
///
/// With this branch -1 maps to i (not -i as a (-pi, pi] branch would give on
/// the lower side of the cut), and sqrt(c) * conj(sqrt(c)) == |c| for every c.
Complex principal_sqrt(Complex c);

/// Smallest m with 2^m >= value. ceil_log2(0) == ceil_log2(1) == 0.
unsigned ceil_log2(std::uint64_t value);

constexpr bool is_power_of_two(std::uint64_t value) {
    return value != 0 && (value & (value - 1)) == 0;
}

bool is_finite(Complex c);

/// Square complex matrix stored row-major.
class DenseMatrix {
   public:
    DenseMatrix() = default;
    explicit DenseMatrix(std::size_t dim);
    DenseMatrix(std::size_t dim, std::vector<Complex> row_major);

    static DenseMatrix identity(std::size_t dim);

    std::size_t dim() const {
        return dim_;
    }
    Complex &operator()(std::size_t row, std::size_t col) {
        return data_[row * dim_ + col];
    }
    const Complex &operator()(std::size_t row, std::size_t col) const {
        return data_[row * dim_ + col];
    }
    std::span<const Complex> data() const {
        return data_;
    }

    DenseMatrix adjoint() const;
    DenseMatrix operator*(const DenseMatrix &rhs) const;
    std::vector<Complex> operator*(std::span<const Complex> vec) const;
    DenseMatrix &operator*=(Complex scale);

    /// Number of entries that are exactly nonzero.
    std::size_t count_nonzero() const;

   private:
    std::size_t dim_ = 0;
    std::vector<Complex> data_;
};

/// Amplitude vector over 2^q basis states; qubit 0 is the least significant index bit.
using StateVector = std::vector<Complex>;

double norm_squared(std::span<const Complex> amplitudes);

/// Max-abs entry of a - b. Dimensions must agree.
double max_abs_diff(const DenseMatrix &a, const DenseMatrix &b);

/// Max-abs entry of M^dag M - I.
double unitarity_residual(const DenseMatrix &m);
bool is_unitary(const DenseMatrix &m, double tol = kDefaultTolerance);

/// Max-abs entry of M - M^dag.
double hermiticity_residual(const DenseMatrix &m);
bool is_hermitian(const DenseMatrix &m, double tol = kDefaultTolerance);

double frobenius_norm(const DenseMatrix &m);

/// Power iteration failed to meet its relative tolerance within the iteration cap.
class ConvergenceError : public std::runtime_error {
   public:
    ConvergenceError(const std::string &message, double last_estimate)
        : std::runtime_error(message), last_estimate_(last_estimate) {
    }
    double last_estimate() const {
        return last_estimate_;
    }

   private:
    double last_estimate_;
};

struct PowerIterationOptions {
    double relative_tolerance = 1e-8;
    std::size_t max_iterations = 10'000;
};

/// Largest singular value, by power iteration on M^dag M.
double spectral_norm(const DenseMatrix &m, const PowerIterationOptions &options = {});

}  // namespace dictenc

#endif
