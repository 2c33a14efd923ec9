#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace gjinv {

/// Raised when rows are ragged or the input is empty.
class NonSquareError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when a NaN or infinity reaches a matrix constructor.
class NonFiniteError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class InvalidDimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class DimensionMismatchError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Dense n x n matrix of doubles, row-major.
///
/// Indices are 0-based: element (i, j) lives at data()[i * n + j]. The
/// 1-based (i, j) of the usual textbook notation maps to (i - 1, j - 1).
/// Every element is finite at construction; the mutable accessor exists
/// for the elimination engine, which owns its working copies exclusively.
class DenseMatrix {
public:
    /// n x n zero matrix.
    explicit DenseMatrix(std::size_t n);

    /// Takes ownership of row-major values; values.size() must equal n * n.
    DenseMatrix(std::size_t n, std::vector<double> values);

    static DenseMatrix from_rows(const std::vector<std::vector<double>>& rows);
    static DenseMatrix from_rows(std::initializer_list<std::initializer_list<double>> rows);
    static DenseMatrix identity(std::size_t n);

    [[nodiscard]] std::size_t size() const noexcept { return n_; }

    [[nodiscard]] double operator()(std::size_t i, std::size_t j) const noexcept
    {
        return data_[i * n_ + j];
    }
    double& operator()(std::size_t i, std::size_t j) noexcept { return data_[i * n_ + j]; }

    [[nodiscard]] std::span<const double> data() const noexcept { return data_; }
    [[nodiscard]] std::span<const double> row(std::size_t i) const noexcept
    {
        return std::span<const double>(data_).subspan(i * n_, n_);
    }

    void swap_rows(std::size_t a, std::size_t b) noexcept;
    void swap_cols(std::size_t a, std::size_t b) noexcept;

    [[nodiscard]] DenseMatrix transpose() const;

    friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

private:
    std::size_t n_;
    std::vector<double> data_;
};

[[nodiscard]] DenseMatrix multiply(const DenseMatrix& a, const DenseMatrix& b);

/// Largest elementwise |a(i,j) - b(i,j)|; 0 for identical matrices.
[[nodiscard]] double max_abs_diff(const DenseMatrix& a, const DenseMatrix& b);

}  // namespace gjinv
