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

#include "nqa/linalg.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "nqa/errors.h"

namespace nqa {

namespace {

void check_same_shape(const DenseMatrix &a, const DenseMatrix &b, const char *op) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw DimensionError(std::string(op) + ": shape mismatch " + std::to_string(a.rows()) + "x" +
                             std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) + "x" +
                             std::to_string(b.cols()));
    }
}

void require_square(const DenseMatrix &a, const char *op) {
    if (!a.is_square()) {
        throw DimensionError(std::string(op) + ": matrix is not square");
    }
}

}  // namespace

DenseMatrix::DenseMatrix(size_t rows, size_t cols, std::vector<double> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows * cols) {
        throw DimensionError("DenseMatrix: data length does not match shape");
    }
}

DenseMatrix DenseMatrix::identity(size_t n) {
    DenseMatrix out(n, n);
    for (size_t i = 0; i < n; ++i) {
        out(i, i) = 1.0;
    }
    return out;
}

DenseMatrix DenseMatrix::diagonal(std::span<const double> diag) {
    DenseMatrix out(diag.size(), diag.size());
    for (size_t i = 0; i < diag.size(); ++i) {
        out(i, i) = diag[i];
    }
    return out;
}

DenseMatrix &DenseMatrix::operator+=(const DenseMatrix &other) {
    check_same_shape(*this, other, "operator+=");
    for (size_t i = 0; i < data_.size(); ++i) {
        data_[i] += other.data_[i];
    }
    return *this;
}

DenseMatrix &DenseMatrix::operator-=(const DenseMatrix &other) {
    check_same_shape(*this, other, "operator-=");
    for (size_t i = 0; i < data_.size(); ++i) {
        data_[i] -= other.data_[i];
    }
    return *this;
}

DenseMatrix &DenseMatrix::operator*=(double c) {
    for (double &x : data_) {
        x *= c;
    }
    return *this;
}

DenseMatrix operator+(DenseMatrix a, const DenseMatrix &b) {
    a += b;
    return a;
}

DenseMatrix operator-(DenseMatrix a, const DenseMatrix &b) {
    a -= b;
    return a;
}

DenseMatrix operator*(double c, DenseMatrix a) {
    a *= c;
    return a;
}

StateVector::StateVector(size_t m) : num_slots(m), amplitudes(size_t{1} << m, 0.0) {
}

StateVector::StateVector(size_t m, std::vector<double> amps) : num_slots(m), amplitudes(std::move(amps)) {
    if (amplitudes.size() != (size_t{1} << m)) {
        throw DimensionError("StateVector: expected 2^" + std::to_string(m) + " amplitudes");
    }
}

StateVector StateVector::basis(size_t m, size_t index) {
    StateVector v(m);
    if (index >= v.dim()) {
        throw DimensionError("StateVector::basis: index out of range");
    }
    v.amplitudes[index] = 1.0;
    return v;
}

DenseMatrix mat_mul(const DenseMatrix &a, const DenseMatrix &b) {
    if (a.cols() != b.rows()) {
        throw DimensionError("mat_mul: inner dimensions differ");
    }
    DenseMatrix out(a.rows(), b.cols());
    for (size_t i = 0; i < a.rows(); ++i) {
        for (size_t k = 0; k < a.cols(); ++k) {
            double aik = a(i, k);
            if (aik == 0.0) {
                continue;
            }
            for (size_t j = 0; j < b.cols(); ++j) {
                out(i, j) += aik * b(k, j);
            }
        }
    }
    return out;
}

DenseMatrix mat_transpose(const DenseMatrix &a) {
    DenseMatrix out(a.cols(), a.rows());
    for (size_t i = 0; i < a.rows(); ++i) {
        for (size_t j = 0; j < a.cols(); ++j) {
            out(j, i) = a(i, j);
        }
    }
    return out;
}

std::vector<double> mat_vec(const DenseMatrix &a, std::span<const double> v) {
    if (a.cols() != v.size()) {
        throw DimensionError("mat_vec: vector length does not match matrix");
    }
    std::vector<double> out(a.rows(), 0.0);
    for (size_t i = 0; i < a.rows(); ++i) {
        double acc = 0.0;
        for (size_t j = 0; j < a.cols(); ++j) {
            acc += a(i, j) * v[j];
        }
        out[i] = acc;
    }
    return out;
}

StateVector mat_vec(const DenseMatrix &a, const StateVector &v) {
    return StateVector(v.num_slots, mat_vec(a, std::span<const double>(v.amplitudes)));
}

DenseMatrix kron(const DenseMatrix &a, const DenseMatrix &b) {
    DenseMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (size_t i = 0; i < a.rows(); ++i) {
        for (size_t j = 0; j < a.cols(); ++j) {
            double aij = a(i, j);
            if (aij == 0.0) {
                continue;
            }
            for (size_t k = 0; k < b.rows(); ++k) {
                for (size_t l = 0; l < b.cols(); ++l) {
                    out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
                }
            }
        }
    }
    return out;
}

double max_norm_diff(const DenseMatrix &a, const DenseMatrix &b) {
    check_same_shape(a, b, "max_norm_diff");
    double m = 0.0;
    for (size_t i = 0; i < a.data().size(); ++i) {
        m = std::max(m, std::abs(a.data()[i] - b.data()[i]));
    }
    return m;
}

double max_abs(const DenseMatrix &a) {
    double m = 0.0;
    for (double x : a.data()) {
        m = std::max(m, std::abs(x));
    }
    return m;
}

double frobenius_norm(const DenseMatrix &a) {
    double s = 0.0;
    for (double x : a.data()) {
        s += x * x;
    }
    return std::sqrt(s);
}

double trace(const DenseMatrix &a) {
    require_square(a, "trace");
    double t = 0.0;
    for (size_t i = 0; i < a.rows(); ++i) {
        t += a(i, i);
    }
    return t;
}

double determinant(const DenseMatrix &a) {
    require_square(a, "determinant");
    DenseMatrix lu = a;
    size_t n = a.rows();
    double det = 1.0;
    for (size_t col = 0; col < n; ++col) {
        size_t pivot = col;
        for (size_t r = col + 1; r < n; ++r) {
            if (std::abs(lu(r, col)) > std::abs(lu(pivot, col))) {
                pivot = r;
            }
        }
        if (lu(pivot, col) == 0.0) {
            return 0.0;
        }
        if (pivot != col) {
            for (size_t c = 0; c < n; ++c) {
                std::swap(lu(pivot, c), lu(col, c));
            }
            det = -det;
        }
        det *= lu(col, col);
        for (size_t r = col + 1; r < n; ++r) {
            double f = lu(r, col) / lu(col, col);
            for (size_t c = col; c < n; ++c) {
                lu(r, c) -= f * lu(col, c);
            }
        }
    }
    return det;
}

namespace {

// Cyclic Jacobi. Leaves the eigenvalues on the diagonal of the returned
// matrix; accumulates the rotations into *vectors when given.
DenseMatrix jacobi(const DenseMatrix &a, JacobiOptions options, DenseMatrix *vectors) {
    require_square(a, "sym_eigenvalues");
    size_t n = a.rows();
    if (n > 4096) {
        throw DimensionError("sym_eigenvalues: dimension above 4096");
    }
    if (max_norm_diff(a, mat_transpose(a)) > options.tol) {
        throw DomainError("sym_eigenvalues: matrix is not symmetric");
    }
    // Work on the exactly symmetrized copy.
    DenseMatrix s(n, n);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) {
            s(i, j) = 0.5 * (a(i, j) + a(j, i));
        }
    }
    double threshold = options.tol * std::max(1.0, frobenius_norm(s));

    auto off_mass = [&]() {
        double off = 0.0;
        for (size_t i = 0; i < n; ++i) {
            for (size_t j = i + 1; j < n; ++j) {
                off += 2.0 * s(i, j) * s(i, j);
            }
        }
        return std::sqrt(off);
    };

    int sweep = 0;
    while (off_mass() > threshold) {
        if (sweep++ >= options.max_sweeps) {
            throw NumericError("sym_eigenvalues: Jacobi did not converge");
        }
        for (size_t p = 0; p + 1 < n; ++p) {
            for (size_t q = p + 1; q < n; ++q) {
                double apq = s(p, q);
                if (apq == 0.0) {
                    continue;
                }
                double app = s(p, p);
                double aqq = s(q, q);
                double theta = (aqq - app) / (2.0 * apq);
                double t = std::copysign(1.0, theta) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                double c = 1.0 / std::sqrt(t * t + 1.0);
                double sn = t * c;
                for (size_t k = 0; k < n; ++k) {
                    double skp = s(k, p);
                    double skq = s(k, q);
                    s(k, p) = c * skp - sn * skq;
                    s(k, q) = sn * skp + c * skq;
                }
                for (size_t k = 0; k < n; ++k) {
                    double spk = s(p, k);
                    double sqk = s(q, k);
                    s(p, k) = c * spk - sn * sqk;
                    s(q, k) = sn * spk + c * sqk;
                }
                s(p, q) = 0.0;
                s(q, p) = 0.0;
                if (vectors) {
                    for (size_t k = 0; k < n; ++k) {
                        double vkp = (*vectors)(k, p);
                        double vkq = (*vectors)(k, q);
                        (*vectors)(k, p) = c * vkp - sn * vkq;
                        (*vectors)(k, q) = sn * vkp + c * vkq;
                    }
                }
            }
        }
    }
    return s;
}

}  // namespace

std::vector<double> sym_eigenvalues(const DenseMatrix &a, JacobiOptions options) {
    DenseMatrix s = jacobi(a, options, nullptr);
    std::vector<double> eig(s.rows());
    for (size_t i = 0; i < s.rows(); ++i) {
        eig[i] = s(i, i);
    }
    std::sort(eig.begin(), eig.end());
    return eig;
}

SymEigen sym_eigen(const DenseMatrix &a, JacobiOptions options) {
    DenseMatrix v = DenseMatrix::identity(a.rows());
    DenseMatrix s = jacobi(a, options, &v);
    size_t n = s.rows();
    std::vector<size_t> order(n);
    for (size_t i = 0; i < n; ++i) {
        order[i] = i;
    }
    std::stable_sort(order.begin(), order.end(), [&](size_t i, size_t j) { return s(i, i) < s(j, j); });
    SymEigen out{std::vector<double>(n), DenseMatrix(n, n)};
    for (size_t c = 0; c < n; ++c) {
        out.values[c] = s(order[c], order[c]);
        for (size_t r = 0; r < n; ++r) {
            out.vectors(r, c) = v(r, order[c]);
        }
    }
    return out;
}

bool is_orthogonal(const DenseMatrix &a, double tol) {
    if (!a.is_square()) {
        return false;
    }
    DenseMatrix g = mat_mul(mat_transpose(a), a);
    return max_norm_diff(g, DenseMatrix::identity(a.rows())) <= tol;
}

}  // namespace nqa
