#pragma once

#include "gjinv/engine.hpp"
#include "gjinv/matrix.hpp"

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace gjinv::cli {

enum class Command { Invert, Det, Compare };

enum ExitCode : int { kExitOk = 0, kExitSingular = 1, kExitUsage = 2 };

/// Malformed matrix text. line/column are 1-based; column points at the
/// offending token, or one past the last character for missing values.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& what);
    [[nodiscard]] std::size_t line() const noexcept { return line_; }
    [[nodiscard]] std::size_t column() const noexcept { return column_; }
    [[nodiscard]] const std::string& detail() const noexcept { return detail_; }

private:
    std::size_t line_;
    std::size_t column_;
    std::string detail_;
};

/// Reads the text grammar described in docs/format.md.
[[nodiscard]] DenseMatrix parse_matrix(std::istream& in);
[[nodiscard]] DenseMatrix parse_matrix(std::string_view text);

/// Writes n, then one row per line with 17 significant digits.
void format_matrix(std::ostream& out, const DenseMatrix& m);
[[nodiscard]] std::string format_matrix(const DenseMatrix& m);

/// The 3x3 matrix [[1,1,1],[1,2,3],[1,3,6]] served by --demo.
[[nodiscard]] DenseMatrix demo_matrix();

struct CliConfig {
    Command command = Command::Invert;
    /// Path to read; stdin when neither this nor `demo` is set.
    std::optional<std::string> input;
    bool demo = false;
    PivotStrategy pivot = PivotStrategy::Full;
    double threshold = kDefaultThreshold;
    Mode mode = Mode::Compact;
    bool trace = false;
    bool json = false;
    /// det only: report 0 instead of failing on singular input.
    bool singular_zero = false;
};

[[nodiscard]] std::optional<PivotStrategy> parse_strategy(std::string_view name);
[[nodiscard]] std::optional<Mode> parse_mode(std::string_view name);

/// Executes one command. Results go to `out`; trace and diagnostics go to
/// `err`. Never throws; failures are reported through the exit code.
int run(const CliConfig& config, std::istream& in, std::ostream& out, std::ostream& err);

/// Full argv entry point used by the gjinv binary.
int main_entry(int argc, const char* const* argv, std::istream& in, std::ostream& out,
               std::ostream& err);

}  // namespace gjinv::cli
