#include "gjinv/analysis.hpp"

#include <cmath>
#include <random>
#include <string>
#include <vector>

namespace gjinv::analysis {

namespace {

// Determinant of the minor built from rows [row, n) and the columns listed
// in `cols`, expanded along its first row.
double laplace(const DenseMatrix& a, std::size_t row, const std::vector<std::size_t>& cols)
{
    const std::size_t m = cols.size();
    if (m == 1) return a(row, cols[0]);
    if (m == 2) return a(row, cols[0]) * a(row + 1, cols[1]) - a(row, cols[1]) * a(row + 1, cols[0]);

    double sum = 0.0;
    std::vector<std::size_t> rest(m - 1);
    for (std::size_t c = 0; c < m; ++c) {
        const double head = a(row, cols[c]);
        if (head == 0.0) continue;
        for (std::size_t s = 0, t = 0; s < m; ++s)
            if (s != c) rest[t++] = cols[s];
        const double minor = laplace(a, row + 1, rest);
        sum += (c % 2 == 0 ? head : -head) * minor;
    }
    return sum;
}

DenseMatrix minor_matrix(const DenseMatrix& a, std::size_t skip_row, std::size_t skip_col)
{
    const std::size_t n = a.size();
    std::vector<double> values;
    values.reserve((n - 1) * (n - 1));
    for (std::size_t i = 0; i < n; ++i) {
        if (i == skip_row) continue;
        for (std::size_t j = 0; j < n; ++j)
            if (j != skip_col) values.push_back(a(i, j));
    }
    return DenseMatrix(n - 1, std::move(values));
}

}  // namespace

double residual_norm(const DenseMatrix& a, const DenseMatrix& ainv)
{
    return max_abs_diff(multiply(a, ainv), DenseMatrix::identity(a.size()));
}

double cofactor_det(const DenseMatrix& a)
{
    const std::size_t n = a.size();
    if (n > kMaxCofactorDim)
        throw TooLargeError("cofactor_det supports n <= " + std::to_string(kMaxCofactorDim));
    std::vector<std::size_t> cols(n);
    for (std::size_t j = 0; j < n; ++j) cols[j] = j;
    return laplace(a, 0, cols);
}

DenseMatrix adjugate_inverse(const DenseMatrix& a)
{
    const std::size_t n = a.size();
    if (n > kMaxAdjugateDim)
        throw TooLargeError("adjugate_inverse supports n <= " + std::to_string(kMaxAdjugateDim));
    const double d = cofactor_det(a);
    if (std::abs(d) < kOracleSingularCutoff) throw OracleSingularError("matrix is singular");

    DenseMatrix inv(n);
    if (n == 1) {
        inv(0, 0) = 1.0 / d;
        return inv;
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const double cofactor = ((i + j) % 2 == 0 ? 1.0 : -1.0) * cofactor_det(minor_matrix(a, i, j));
            inv(j, i) = cofactor / d;
        }
    return inv;
}

DenseMatrix gen_hilbert(std::size_t n)
{
    if (n == 0) throw InvalidDimensionError("Hilbert dimension must be positive");
    DenseMatrix h(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) h(i, j) = 1.0 / static_cast<double>(i + j + 1);
    return h;
}

DenseMatrix gen_random_integer(std::size_t n, std::uint64_t seed, std::uint32_t magnitude)
{
    if (n == 0) throw InvalidDimensionError("matrix dimension must be positive");
    std::mt19937_64 rng(seed);
    const std::uint64_t span = 2ULL * magnitude + 1;
    std::vector<double> values(n * n);
    for (auto& v : values) {
        const auto draw = static_cast<std::int64_t>(rng() % span);
        v = static_cast<double>(draw - static_cast<std::int64_t>(magnitude));
    }
    return DenseMatrix(n, std::move(values));
}

StrategyReport compare_strategies(const DenseMatrix& a, double threshold, Mode mode)
{
    StrategyReport report{};
    for (auto s : {PivotStrategy::None, PivotStrategy::PartialRow, PivotStrategy::Full}) {
        auto& out = report.outcomes[static_cast<std::size_t>(s)];
        out.strategy = s;
        try {
            const auto r = invert(a, {.strategy = s, .threshold = threshold, .mode = mode});
            out.residual_max = residual_norm(a, r.inverse);
            out.determinant = r.determinant;
            out.swap_count = r.log.swap_count();
        } catch (const SingularError& e) {
            out.singular_step = e.step();
        }
    }
    return report;
}

}  // namespace gjinv::analysis
