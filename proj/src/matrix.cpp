#include "gjinv/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace gjinv {

namespace {

void require_finite(std::span<const double> values)
{
    for (std::size_t k = 0; k < values.size(); ++k) {
        if (!std::isfinite(values[k])) {
            throw NonFiniteError("matrix element at index " + std::to_string(k) +
                                 " is not finite");
        }
    }
}

void require_same_size(const DenseMatrix& a, const DenseMatrix& b)
{
    if (a.size() != b.size()) {
        throw DimensionMismatchError("dimension mismatch: " + std::to_string(a.size()) +
                                     " vs " + std::to_string(b.size()));
    }
}

}  // namespace

DenseMatrix::DenseMatrix(std::size_t n) : n_(n), data_(n * n, 0.0)
{
    if (n == 0) throw InvalidDimensionError("matrix dimension must be positive");
}

DenseMatrix::DenseMatrix(std::size_t n, std::vector<double> values)
    : n_(n), data_(std::move(values))
{
    if (n == 0) throw InvalidDimensionError("matrix dimension must be positive");
    if (data_.size() != n * n) {
        throw NonSquareError("expected " + std::to_string(n * n) + " values, got " +
                             std::to_string(data_.size()));
    }
    require_finite(data_);
}

DenseMatrix DenseMatrix::from_rows(const std::vector<std::vector<double>>& rows)
{
    const std::size_t n = rows.size();
    if (n == 0) throw NonSquareError("matrix has no rows");
    std::vector<double> values;
    values.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        if (rows[i].size() != n) {
            throw NonSquareError("row " + std::to_string(i) + " has " +
                                 std::to_string(rows[i].size()) + " values, expected " +
                                 std::to_string(n));
        }
        values.insert(values.end(), rows[i].begin(), rows[i].end());
    }
    return DenseMatrix(n, std::move(values));
}

DenseMatrix DenseMatrix::from_rows(std::initializer_list<std::initializer_list<double>> rows)
{
    std::vector<std::vector<double>> copy;
    copy.reserve(rows.size());
    for (const auto& r : rows) copy.emplace_back(r);
    return from_rows(copy);
}

DenseMatrix DenseMatrix::identity(std::size_t n)
{
    DenseMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

void DenseMatrix::swap_rows(std::size_t a, std::size_t b) noexcept
{
    if (a == b) return;
    std::swap_ranges(data_.begin() + static_cast<std::ptrdiff_t>(a * n_),
                     data_.begin() + static_cast<std::ptrdiff_t>((a + 1) * n_),
                     data_.begin() + static_cast<std::ptrdiff_t>(b * n_));
}

void DenseMatrix::swap_cols(std::size_t a, std::size_t b) noexcept
{
    if (a == b) return;
    for (std::size_t i = 0; i < n_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

DenseMatrix DenseMatrix::transpose() const
{
    DenseMatrix t(n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

DenseMatrix multiply(const DenseMatrix& a, const DenseMatrix& b)
{
    require_same_size(a, b);
    const std::size_t n = a.size();
    DenseMatrix c(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            const double aik = a(i, k);
            for (std::size_t j = 0; j < n; ++j) c(i, j) += aik * b(k, j);
        }
    return c;
}

double max_abs_diff(const DenseMatrix& a, const DenseMatrix& b)
{
    require_same_size(a, b);
    double worst = 0.0;
    const auto x = a.data();
    const auto y = b.data();
    for (std::size_t k = 0; k < x.size(); ++k) worst = std::max(worst, std::abs(x[k] - y[k]));
    return worst;
}

}  // namespace gjinv
