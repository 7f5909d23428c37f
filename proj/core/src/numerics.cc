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

#include "dictenc/numerics.h"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace dictenc {

Complex principal_sqrt(Complex c) {
    double magnitude = std::abs(c);
    if (magnitude == 0) {
        return {0, 0};
    }
    double theta = std::arg(c);
    if (theta < 0) {
        theta += 2 * std::numbers::pi;
    }
    return std::polar(std::sqrt(magnitude), theta / 2);
}

unsigned ceil_log2(std::uint64_t value) {
    unsigned bits = 0;
    while (bits < 64 && (std::uint64_t{1} << bits) < value) {
        ++bits;
    }
    return bits;
}

bool is_finite(Complex c) {
    return std::isfinite(c.real()) && std::isfinite(c.imag());
}

DenseMatrix::DenseMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {
}

DenseMatrix::DenseMatrix(std::size_t dim, std::vector<Complex> row_major) : dim_(dim), data_(std::move(row_major)) {
    if (data_.size() != dim * dim) {
        throw std::invalid_argument("DenseMatrix: expected " + std::to_string(dim * dim) + " entries");
    }
}

DenseMatrix DenseMatrix::identity(std::size_t dim) {
    DenseMatrix result(dim);
    for (std::size_t k = 0; k < dim; ++k) {
        result(k, k) = 1;
    }
    return result;
}

DenseMatrix DenseMatrix::adjoint() const {
    DenseMatrix result(dim_);
    for (std::size_t r = 0; r < dim_; ++r) {
        for (std::size_t c = 0; c < dim_; ++c) {
            result(c, r) = std::conj((*this)(r, c));
        }
    }
    return result;
}

DenseMatrix DenseMatrix::operator*(const DenseMatrix &rhs) const {
    if (rhs.dim_ != dim_) {
        throw std::invalid_argument("DenseMatrix: dimension mismatch in product");
    }
    DenseMatrix result(dim_);
    for (std::size_t r = 0; r < dim_; ++r) {
        for (std::size_t k = 0; k < dim_; ++k) {
            Complex left = (*this)(r, k);
            if (left == Complex{}) {
                continue;
            }
            for (std::size_t c = 0; c < dim_; ++c) {
                result(r, c) += left * rhs(k, c);
            }
        }
    }
    return result;
}

std::vector<Complex> DenseMatrix::operator*(std::span<const Complex> vec) const {
    if (vec.size() != dim_) {
        throw std::invalid_argument("DenseMatrix: dimension mismatch in matrix-vector product");
    }
    std::vector<Complex> result(dim_);
    for (std::size_t r = 0; r < dim_; ++r) {
        Complex acc{};
        for (std::size_t c = 0; c < dim_; ++c) {
            acc += (*this)(r, c) * vec[c];
        }
        result[r] = acc;
    }
    return result;
}

DenseMatrix &DenseMatrix::operator*=(Complex scale) {
    for (auto &v : data_) {
        v *= scale;
    }
    return *this;
}

std::size_t DenseMatrix::count_nonzero() const {
    return static_cast<std::size_t>(std::count_if(data_.begin(), data_.end(), [](Complex v) { return v != Complex{}; }));
}

double norm_squared(std::span<const Complex> amplitudes) {
    double total = 0;
    for (Complex a : amplitudes) {
        total += std::norm(a);
    }
    return total;
}

double max_abs_diff(const DenseMatrix &a, const DenseMatrix &b) {
    if (a.dim() != b.dim()) {
        throw std::invalid_argument("max_abs_diff: dimension mismatch");
    }
    double worst = 0;
    auto lhs = a.data();
    auto rhs = b.data();
    for (std::size_t k = 0; k < lhs.size(); ++k) {
        worst = std::max(worst, std::abs(lhs[k] - rhs[k]));
    }
    return worst;
}

double unitarity_residual(const DenseMatrix &m) {
    // Gram matrix accumulated row by row over exact nonzeros; circuit unitaries are sparse.
    std::size_t dim = m.dim();
    std::vector<Complex> gram(dim * dim);
    std::vector<std::pair<std::size_t, Complex>> row;
    for (std::size_t r = 0; r < dim; ++r) {
        row.clear();
        for (std::size_t c = 0; c < dim; ++c) {
            if (m(r, c) != Complex(0)) {
                row.emplace_back(c, m(r, c));
            }
        }
        for (std::size_t x = 0; x < row.size(); ++x) {
            Complex left = std::conj(row[x].second);
            Complex *out = &gram[row[x].first * dim];
            for (std::size_t y = x; y < row.size(); ++y) {
                out[row[y].first] += left * row[y].second;
            }
        }
    }
    double worst = 0;
    for (std::size_t a = 0; a < dim; ++a) {
        for (std::size_t b = a; b < dim; ++b) {
            worst = std::max(worst, std::abs(gram[a * dim + b] - Complex(a == b ? 1.0 : 0.0)));
        }
    }
    return worst;
}

bool is_unitary(const DenseMatrix &m, double tol) {
    return unitarity_residual(m) <= tol;
}

double hermiticity_residual(const DenseMatrix &m) {
    double worst = 0;
    for (std::size_t r = 0; r < m.dim(); ++r) {
        for (std::size_t c = r; c < m.dim(); ++c) {
            worst = std::max(worst, std::abs(m(r, c) - std::conj(m(c, r))));
        }
    }
    return worst;
}

bool is_hermitian(const DenseMatrix &m, double tol) {
    return hermiticity_residual(m) <= tol;
}

double frobenius_norm(const DenseMatrix &m) {
    return std::sqrt(norm_squared(m.data()));
}

double spectral_norm(const DenseMatrix &m, const PowerIterationOptions &options) {
    std::size_t dim = m.dim();
    if (dim == 0) {
        return 0;
    }
    DenseMatrix gram = m.adjoint() * m;

    // Fixed, non-symmetric start vector so no singular direction is missed by construction.
    std::vector<Complex> v(dim);
    std::uint64_t state = 0x9E3779B97F4A7C15ull;
    for (auto &x : v) {
        state = state * 6364136223846793005ull + 1442695040888963407ull;
        x = Complex(1.0 + double(state >> 40) / double(1ull << 24), 0.25);
    }
    double scale = std::sqrt(norm_squared(v));
    for (auto &x : v) {
        x /= scale;
    }

    double eigen = 0;
    for (std::size_t iter = 0; iter < options.max_iterations; ++iter) {
        std::vector<Complex> w = gram * std::span<const Complex>(v);
        double next = std::sqrt(norm_squared(w));
        if (next == 0) {
            return 0;
        }
        for (std::size_t k = 0; k < dim; ++k) {
            v[k] = w[k] / next;
        }
        if (iter > 0 && std::abs(next - eigen) <= options.relative_tolerance * next) {
            return std::sqrt(next);
        }
        eigen = next;
    }
    throw ConvergenceError("spectral_norm: power iteration did not converge", std::sqrt(eigen));
}

}  // namespace dictenc
