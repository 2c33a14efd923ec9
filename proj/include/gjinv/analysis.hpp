#pragma once

// Brute-force oracles and test-matrix generators that check the elimination
// engine independently of its own arithmetic, plus the strategy comparison
// harness behind `gjinv compare`.

#include "gjinv/engine.hpp"
#include "gjinv/matrix.hpp"

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string_view>

namespace gjinv::analysis {

class TooLargeError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Oracle-side singularity (|det| below 1e-300), distinct from the engine's
/// threshold-based SingularError.
class OracleSingularError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

inline constexpr std::size_t kMaxCofactorDim = 10;
inline constexpr std::size_t kMaxAdjugateDim = 8;
inline constexpr double kOracleSingularCutoff = 1e-300;

/// Name of the generator behind gen_random_integer, for report metadata.
inline constexpr std::string_view kRandomGeneratorName = "std::mt19937_64";

/// max |A * ainv - I|.
[[nodiscard]] double residual_norm(const DenseMatrix& a, const DenseMatrix& ainv);

/// Laplace expansion along the first row, recursively. n <= 10.
[[nodiscard]] double cofactor_det(const DenseMatrix& a);

/// adj(A) / det(A) using cofactor_det for every minor. n <= 8.
[[nodiscard]] DenseMatrix adjugate_inverse(const DenseMatrix& a);

/// H(i, j) = 1 / (i + j + 1) with 0-based indices.
[[nodiscard]] DenseMatrix gen_hilbert(std::size_t n);

/// Integers drawn uniformly from [-magnitude, magnitude]. Each entry is
/// (raw % (2 * magnitude + 1)) - magnitude for consecutive raw outputs of
/// std::mt19937_64 seeded with `seed`, filled row by row. The standard
/// fixes mt19937_64's output sequence, so results match across platforms.
[[nodiscard]] DenseMatrix gen_random_integer(std::size_t n, std::uint64_t seed,
                                             std::uint32_t magnitude);

struct StrategyOutcome {
    PivotStrategy strategy;
    /// Set when invert threw SingularError.
    std::optional<std::size_t> singular_step;
    std::optional<double> residual_max;
    std::optional<double> determinant;
    std::size_t swap_count = 0;

    [[nodiscard]] bool succeeded() const noexcept { return !singular_step.has_value(); }
};

struct StrategyReport {
    std::array<StrategyOutcome, 3> outcomes;  // None, PartialRow, Full

    [[nodiscard]] const StrategyOutcome& at(PivotStrategy s) const noexcept
    {
        return outcomes[static_cast<std::size_t>(s)];
    }
};

/// Runs invert under every strategy; singular outcomes are recorded rather
/// than thrown.
[[nodiscard]] StrategyReport compare_strategies(const DenseMatrix& a,
                                                double threshold = kDefaultThreshold,
                                                Mode mode = Mode::Compact);

}  // namespace gjinv::analysis
