// Copyright 2026 The NQA Authors
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

#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace nqa {

/// Row-major real matrix. This is the independent verification oracle, so
/// nothing in here knows about words or blocks.
class DenseMatrix {
   public:
    DenseMatrix() = default;
    DenseMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {
    }
    DenseMatrix(size_t rows, size_t cols, std::vector<double> data);

    static DenseMatrix identity(size_t n);
    static DenseMatrix diagonal(std::span<const double> diag);

    size_t rows() const {
        return rows_;
    }
    size_t cols() const {
        return cols_;
    }
    bool is_square() const {
        return rows_ == cols_;
    }

    double &operator()(size_t r, size_t c) {
        return data_[r * cols_ + c];
    }
    double operator()(size_t r, size_t c) const {
        return data_[r * cols_ + c];
    }
    std::span<const double> data() const {
        return data_;
    }
    std::span<double> data() {
        return data_;
    }

    DenseMatrix &operator+=(const DenseMatrix &other);
    DenseMatrix &operator-=(const DenseMatrix &other);
    DenseMatrix &operator*=(double c);

    bool operator==(const DenseMatrix &) const = default;

   private:
    size_t rows_ = 0;
    size_t cols_ = 0;
    std::vector<double> data_;
};

DenseMatrix operator+(DenseMatrix a, const DenseMatrix &b);
DenseMatrix operator-(DenseMatrix a, const DenseMatrix &b);
DenseMatrix operator*(double c, DenseMatrix a);

/// Amplitudes of an m-slot register. Basis index x has slot 1 as its most
/// significant bit.
struct StateVector {
    size_t num_slots = 0;
    std::vector<double> amplitudes;

    StateVector() = default;
    explicit StateVector(size_t m);
    StateVector(size_t m, std::vector<double> amps);

    /// |x>, where bits[0] is slot 1.
    static StateVector basis(size_t m, size_t index);
    size_t dim() const {
        return amplitudes.size();
    }
};

DenseMatrix mat_mul(const DenseMatrix &a, const DenseMatrix &b);
DenseMatrix mat_transpose(const DenseMatrix &a);
std::vector<double> mat_vec(const DenseMatrix &a, std::span<const double> v);
StateVector mat_vec(const DenseMatrix &a, const StateVector &v);
DenseMatrix kron(const DenseMatrix &a, const DenseMatrix &b);

/// max_ij |a_ij - b_ij|; throws DimensionError on shape mismatch.
double max_norm_diff(const DenseMatrix &a, const DenseMatrix &b);
double max_abs(const DenseMatrix &a);
double frobenius_norm(const DenseMatrix &a);
double trace(const DenseMatrix &a);

/// LU with partial pivoting.
double determinant(const DenseMatrix &a);

struct JacobiOptions {
    double tol = 1e-12;
    int max_sweeps = 100;
};

/// Eigenvalues of a symmetric matrix, ascending, by cyclic Jacobi rotations.
///
/// Sweeps stop once the off-diagonal Frobenius mass drops to
/// tol * max(1, ||A||_F). Throws DomainError if ||A - A^T||_max > tol and
/// NumericError if max_sweeps is exhausted. n is limited to 4096.
std::vector<double> sym_eigenvalues(const DenseMatrix &a, JacobiOptions options = {});

struct SymEigen {
    std::vector<double> values;  ///< ascending
    DenseMatrix vectors;         ///< column i belongs to values[i]
};

/// Same iteration as sym_eigenvalues, also accumulating the rotations.
SymEigen sym_eigen(const DenseMatrix &a, JacobiOptions options = {});

/// ||A^T A - I||_max <= tol.
bool is_orthogonal(const DenseMatrix &a, double tol);

}  // namespace nqa
