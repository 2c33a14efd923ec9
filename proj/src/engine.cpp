#include "gjinv/engine.hpp"

#include <cmath>
#include <string>

namespace gjinv {

std::string_view to_string(PivotStrategy s) noexcept
{
    switch (s) {
    case PivotStrategy::None: return "none";
    case PivotStrategy::PartialRow: return "partial";
    case PivotStrategy::Full: return "full";
    }
    return "unknown";
}

std::string_view to_string(Mode m) noexcept
{
    return m == Mode::Explicit ? "explicit" : "compact";
}

SingularError::SingularError(std::size_t step)
    : std::runtime_error("singular matrix: no admissible pivot at step " + std::to_string(step)),
      step_(step)
{
}

void PivotLog::record(std::size_t step, std::optional<SwapPair> row_swap,
                      std::optional<SwapPair> col_swap)
{
    if (row_swap && row_swap->first == row_swap->second) row_swap.reset();
    if (col_swap && col_swap->first == col_swap->second) col_swap.reset();
    if (!row_swap && !col_swap) return;
    entries_.push_back({step, row_swap, col_swap});
}

std::size_t PivotLog::swap_count() const noexcept
{
    std::size_t count = 0;
    for (const auto& e : entries_) count += (e.row_swap ? 1 : 0) + (e.col_swap ? 1 : 0);
    return count;
}

EliminationState initialize(const DenseMatrix& a, Mode mode)
{
    EliminationState state{.k = 0, .mode = mode, .work = a, .inverse_work = std::nullopt, .log = {}};
    if (mode == Mode::Explicit) state.inverse_work = DenseMatrix::identity(a.size());
    return state;
}

std::optional<PivotChoice> select_pivot(const EliminationState& state, PivotStrategy strategy,
                                        double threshold)
{
    const std::size_t n = state.size();
    const std::size_t k = state.k;
    if (k >= n) throw std::logic_error("select_pivot: elimination already complete");

    const std::size_t row_end = strategy == PivotStrategy::None ? k + 1 : n;
    const std::size_t col_end = strategy == PivotStrategy::Full ? n : k + 1;

    std::optional<PivotChoice> best;
    double best_abs = -1.0;
    for (std::size_t i = k; i < row_end; ++i) {
        for (std::size_t j = k; j < col_end; ++j) {
            const double v = state.work(i, j);
            if (std::abs(v) > best_abs) {
                best_abs = std::abs(v);
                best = PivotChoice{k + 1, i, j, v};
            }
        }
    }
    if (!(best_abs > threshold)) return std::nullopt;
    return best;
}

EliminationState apply_pivot(EliminationState state, const PivotChoice& choice)
{
    const std::size_t k = state.k;
    if (choice.step != k + 1) throw std::logic_error("apply_pivot: choice is for another step");

    if (choice.row != k) {
        state.work.swap_rows(k, choice.row);
        if (state.inverse_work) {
            // Columns k.. of D are still identity columns; the compact form
            // never stores them, so only the formed part moves.
            auto& d = *state.inverse_work;
            for (std::size_t j = 0; j < k; ++j) std::swap(d(k, j), d(choice.row, j));
        }
        state.sign = -state.sign;
    }
    if (choice.col != k) {
        state.work.swap_cols(k, choice.col);
        state.sign = -state.sign;
    }
    state.log.record(choice.step, SwapPair{k, choice.row}, SwapPair{k, choice.col});
    return state;
}

EliminationState eliminate_step(EliminationState state)
{
    const std::size_t n = state.size();
    const std::size_t p = state.k;
    if (p >= n) throw std::logic_error("eliminate_step: elimination already complete");

    auto& x = state.work;
    const double pivot = x(p, p);
    if (pivot == 0.0) throw ZeroPivotError("zero pivot at step " + std::to_string(p + 1));
    state.pivot_product *= pivot;

    if (state.mode == Mode::Compact) {
        x(p, p) = 1.0;
        for (std::size_t j = 0; j < n; ++j) x(p, j) /= pivot;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == p) continue;
            const double f = x(i, p);
            x(i, p) = 0.0;
            for (std::size_t j = 0; j < n; ++j) x(i, j) -= x(p, j) * f;
        }
    } else {
        auto& d = *state.inverse_work;
        for (std::size_t j = 0; j < n; ++j) {
            x(p, j) /= pivot;
            d(p, j) /= pivot;
        }
        x(p, p) = 1.0;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == p) continue;
            const double f = x(i, p);
            for (std::size_t j = 0; j < n; ++j) {
                x(i, j) += -f * x(p, j);
                d(i, j) += -f * d(p, j);
            }
            x(i, p) = 0.0;
        }
    }
    ++state.k;
    return state;
}

DenseMatrix depivot(DenseMatrix inverse_candidate, const PivotLog& log)
{
    const auto& entries = log.entries();
    for (auto it = entries.rbegin(); it != entries.rend(); ++it) {
        if (it->row_swap) inverse_candidate.swap_cols(it->row_swap->first, it->row_swap->second);
        if (it->col_swap) inverse_candidate.swap_rows(it->col_swap->first, it->col_swap->second);
    }
    return inverse_candidate;
}

DenseMatrix raw_inverse(const EliminationState& state)
{
    if (state.k != state.size()) throw std::logic_error("raw_inverse: elimination incomplete");
    return state.mode == Mode::Explicit ? *state.inverse_work : state.work;
}

InversionResult invert(const DenseMatrix& a, const InvertOptions& options,
                       const InvertHooks& hooks)
{
    if (!(options.threshold >= 0.0) || !std::isfinite(options.threshold))
        throw std::invalid_argument("zero threshold must be finite and non-negative");

    auto state = initialize(a, options.mode);
    if (hooks.on_start) hooks.on_start(state);
    const std::size_t n = a.size();
    while (state.k < n) {
        const auto choice = select_pivot(state, options.strategy, options.threshold);
        if (!choice) throw SingularError(state.k + 1);
        state = apply_pivot(std::move(state), *choice);
        if (hooks.on_pivot) hooks.on_pivot(state, *choice);
        state = eliminate_step(std::move(state));
        if (hooks.on_step) hooks.on_step(state);
    }
    return InversionResult{
        .inverse = depivot(raw_inverse(state), state.log),
        .determinant = state.determinant(),
        .log = std::move(state.log),
        .strategy = options.strategy,
        .steps = n,
    };
}

double det(const DenseMatrix& a, PivotStrategy strategy, double threshold, SingularPolicy policy)
{
    try {
        return invert(a, {.strategy = strategy, .threshold = threshold}).determinant;
    } catch (const SingularError&) {
        if (policy == SingularPolicy::ReturnZero) return 0.0;
        throw;
    }
}

}  // namespace gjinv
