#pragma once

// Gauss-Jordan (diagonalization) inversion with configurable pivoting.
//
// Conventions: row/column indices are 0-based; step numbers are 1-based,
// so step s eliminates column s - 1. EliminationState::k counts completed
// steps, hence the next step is k + 1 and its pivot position is (k, k).

#include "gjinv/matrix.hpp"

#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <utility>
#include <vector>

namespace gjinv {

inline constexpr double kDefaultThreshold = 1e-12;

enum class PivotStrategy { None, PartialRow, Full };

/// Explicit keeps the A^k / D^k pair; Compact shares one working array.
enum class Mode { Explicit, Compact };

[[nodiscard]] std::string_view to_string(PivotStrategy s) noexcept;
[[nodiscard]] std::string_view to_string(Mode m) noexcept;

/// No admissible pivot above the zero threshold at the given step.
class SingularError : public std::runtime_error {
public:
    explicit SingularError(std::size_t step);
    [[nodiscard]] std::size_t step() const noexcept { return step_; }

private:
    std::size_t step_;
};

/// Division by a pivot that was never brought into place. Unreachable when
/// eliminate_step is preceded by select_pivot/apply_pivot.
class ZeroPivotError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

struct PivotChoice {
    std::size_t step;  // 1-based
    std::size_t row;
    std::size_t col;
    double value;

    friend bool operator==(const PivotChoice&, const PivotChoice&) = default;
};

using SwapPair = std::pair<std::size_t, std::size_t>;

struct PivotLogEntry {
    std::size_t step;  // 1-based
    std::optional<SwapPair> row_swap;
    std::optional<SwapPair> col_swap;

    friend bool operator==(const PivotLogEntry&, const PivotLogEntry&) = default;
};

/// Swaps performed during elimination, in increasing step order. Steps
/// whose pivot was already in place have no entry.
class PivotLog {
public:
    void record(std::size_t step, std::optional<SwapPair> row_swap,
                std::optional<SwapPair> col_swap);

    [[nodiscard]] const std::vector<PivotLogEntry>& entries() const noexcept { return entries_; }
    [[nodiscard]] bool empty() const noexcept { return entries_.empty(); }
    [[nodiscard]] std::size_t swap_count() const noexcept;

    friend bool operator==(const PivotLog&, const PivotLog&) = default;

private:
    std::vector<PivotLogEntry> entries_;
};

struct EliminationState {
    std::size_t k = 0;
    Mode mode = Mode::Compact;
    /// Explicit: A^k. Compact: the single working array X.
    DenseMatrix work;
    /// Explicit: D^k. Empty in compact mode.
    std::optional<DenseMatrix> inverse_work;
    PivotLog log;
    double pivot_product = 1.0;
    int sign = 1;

    [[nodiscard]] std::size_t size() const noexcept { return work.size(); }
    [[nodiscard]] double determinant() const noexcept { return sign * pivot_product; }
};

struct InversionResult {
    DenseMatrix inverse;
    double determinant;
    PivotLog log;
    PivotStrategy strategy;
    std::size_t steps;
};

struct InvertOptions {
    PivotStrategy strategy = PivotStrategy::Full;
    double threshold = kDefaultThreshold;
    Mode mode = Mode::Compact;
};

/// Optional observation points for the driver, used by the CLI trace.
struct InvertHooks {
    std::function<void(const EliminationState&)> on_start;
    std::function<void(const EliminationState&, const PivotChoice&)> on_pivot;
    std::function<void(const EliminationState&)> on_step;
};

[[nodiscard]] EliminationState initialize(const DenseMatrix& a, Mode mode);

/// Max-|value| candidate for step state.k + 1 within the strategy's search
/// region; ties go to the smallest row, then the smallest column. Returns
/// nullopt when every candidate is <= threshold in magnitude.
[[nodiscard]] std::optional<PivotChoice> select_pivot(const EliminationState& state,
                                                      PivotStrategy strategy, double threshold);

/// Brings the chosen pivot to (k, k). A row swap exchanges rows of the
/// A-part and of the already-formed columns of D; a column swap touches the
/// A-part only and is compensated by depivot.
[[nodiscard]] EliminationState apply_pivot(EliminationState state, const PivotChoice& choice);

/// One elimination step with the pivot at (k, k): normalize the pivot row,
/// clear the pivot column elsewhere, accumulate the pivot into the
/// determinant, then advance k.
[[nodiscard]] EliminationState eliminate_step(EliminationState state);

/// Undoes the logged swaps in reverse order: a row swap (k, i) of A becomes
/// a column swap of the inverse, a column swap (k, j) a row swap.
[[nodiscard]] DenseMatrix depivot(DenseMatrix inverse_candidate, const PivotLog& log);

/// The inverse held by a fully eliminated state, before depivoting.
[[nodiscard]] DenseMatrix raw_inverse(const EliminationState& state);

/// Throws SingularError carrying the failing step.
[[nodiscard]] InversionResult invert(const DenseMatrix& a, const InvertOptions& options = {},
                                     const InvertHooks& hooks = {});

enum class SingularPolicy { Throw, ReturnZero };

[[nodiscard]] double det(const DenseMatrix& a, PivotStrategy strategy = PivotStrategy::Full,
                         double threshold = kDefaultThreshold,
                         SingularPolicy policy = SingularPolicy::Throw);

}  // namespace gjinv
