/*
 * Copyright 2026 The focknet authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

#include "focknet/errors.hpp"

namespace focknet {

using Complex = std::complex<double>;

/// Maximum allowed deviation of U†U from the identity for a matrix to be
/// accepted as unitary (max absolute entry).
inline constexpr double kUnitaryTolerance = 1e-10;

/// Dense square complex matrix, row-major. A 0x0 matrix is valid and denotes
/// the empty matrix (its permanent is 1 by convention).
class ComplexMatrix {
public:
    ComplexMatrix() = default;

    explicit ComplexMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim, Complex(0.0, 0.0)) {}

    ComplexMatrix(std::size_t dim, std::vector<Complex> entries)
        : dim_(dim), entries_(std::move(entries)) {
        if (entries_.size() != dim_ * dim_) {
            throw DimensionMismatch("ComplexMatrix: entry count does not match dim*dim");
        }
    }

    /// Construct from nested initializer lists, e.g. {{a, b}, {c, d}}.
    ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows)
        : dim_(rows.size()) {
        entries_.reserve(dim_ * dim_);
        for (const auto& row : rows) {
            if (row.size() != dim_) {
                throw DimensionMismatch("ComplexMatrix: ragged initializer");
            }
            entries_.insert(entries_.end(), row.begin(), row.end());
        }
    }

    static ComplexMatrix identity(std::size_t dim) {
        ComplexMatrix m(dim);
        for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
        return m;
    }

    std::size_t dim() const { return dim_; }

    Complex& operator()(std::size_t row, std::size_t col) { return entries_[row * dim_ + col]; }
    const Complex& operator()(std::size_t row, std::size_t col) const {
        return entries_[row * dim_ + col];
    }

    const std::vector<Complex>& entries() const { return entries_; }

    ComplexMatrix transpose() const {
        ComplexMatrix t(dim_);
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t j = 0; j < dim_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    ComplexMatrix adjoint() const {
        ComplexMatrix t(dim_);
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t j = 0; j < dim_; ++j) t(j, i) = std::conj((*this)(i, j));
        return t;
    }

    friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
        if (a.dim() != b.dim()) {
            throw DimensionMismatch("matrix product: dimensions differ");
        }
        const std::size_t n = a.dim();
        ComplexMatrix c(n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t k = 0; k < n; ++k) {
                const Complex aik = a(i, k);
                if (aik == Complex(0.0, 0.0)) continue;
                for (std::size_t j = 0; j < n; ++j) c(i, j) += aik * b(k, j);
            }
        }
        return c;
    }

    /// Max absolute entry of (this† * this - I); zero for a perfect unitary.
    double unitarity_defect() const {
        double defect = 0.0;
        for (std::size_t i = 0; i < dim_; ++i) {
            for (std::size_t j = 0; j < dim_; ++j) {
                Complex dot(0.0, 0.0);
                for (std::size_t k = 0; k < dim_; ++k) {
                    dot += std::conj((*this)(k, i)) * (*this)(k, j);
                }
                if (i == j) dot -= 1.0;
                defect = std::max(defect, std::abs(dot));
            }
        }
        return defect;
    }

private:
    std::size_t dim_ = 0;
    std::vector<Complex> entries_;
};

/// A ComplexMatrix validated to be unitary on construction.
class UnitaryMatrix {
public:
    explicit UnitaryMatrix(ComplexMatrix inner) : inner_(std::move(inner)) {
        const double defect = inner_.unitarity_defect();
        if (defect > kUnitaryTolerance) {
            throw NotUnitary("UnitaryMatrix: max |U†U - I| entry is " +
                             std::to_string(defect));
        }
    }

    static UnitaryMatrix identity(std::size_t dim) {
        return UnitaryMatrix(ComplexMatrix::identity(dim));
    }

    std::size_t dim() const { return inner_.dim(); }
    const ComplexMatrix& matrix() const { return inner_; }
    const Complex& operator()(std::size_t row, std::size_t col) const { return inner_(row, col); }

    friend UnitaryMatrix operator*(const UnitaryMatrix& a, const UnitaryMatrix& b) {
        return UnitaryMatrix(a.matrix() * b.matrix());
    }

private:
    ComplexMatrix inner_;
};

}  // namespace focknet
