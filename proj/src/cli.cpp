#include "gjinv/cli.hpp"

#include "gjinv/analysis.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <vector>

namespace gjinv::cli {

namespace {

using nlohmann::json;

struct Token {
    std::string_view text;
    std::size_t column;  // 1-based
};

constexpr bool is_space(char c) noexcept
{
    return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f';
}

std::vector<Token> tokenize(std::string_view line)
{
    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && is_space(line[i])) ++i;
        const std::size_t start = i;
        while (i < line.size() && !is_space(line[i])) ++i;
        if (i > start) tokens.push_back({line.substr(start, i - start), start + 1});
    }
    return tokens;
}

bool is_ignorable(const std::vector<Token>& tokens)
{
    return tokens.empty() || tokens.front().text.front() == '#';
}

std::size_t parse_dimension(const Token& tok, std::size_t line_no)
{
    std::size_t n = 0;
    const char* first = tok.text.data();
    const char* last = first + tok.text.size();
    const auto [ptr, ec] = std::from_chars(first, last, n);
    if (ec != std::errc{} || ptr != last) {
        throw ParseError(line_no, tok.column,
                         "expected a positive integer dimension, found '" + std::string(tok.text) + "'");
    }
    if (n == 0) throw ParseError(line_no, tok.column, "matrix dimension must be positive");
    return n;
}

double parse_value(const Token& tok, std::size_t line_no)
{
    std::string_view text = tok.text;
    if (text.size() > 1 && text.front() == '+') text.remove_prefix(1);
    double value = 0.0;
    const char* first = text.data();
    const char* last = first + text.size();
    const auto [ptr, ec] = std::from_chars(first, last, value, std::chars_format::general);
    if (ec == std::errc::result_out_of_range) {
        throw ParseError(line_no, tok.column,
                         "value '" + std::string(tok.text) + "' is out of range");
    }
    if (ec != std::errc{} || ptr != last) {
        throw ParseError(line_no, tok.column, "invalid number '" + std::string(tok.text) + "'");
    }
    if (!std::isfinite(value)) {
        throw ParseError(line_no, tok.column, "non-finite value '" + std::string(tok.text) + "'");
    }
    return value;
}

std::string fmt17(double v)
{
    std::ostringstream os;
    os << std::setprecision(17) << v;
    return os.str();
}

json matrix_json(const DenseMatrix& m)
{
    json rows = json::array();
    for (std::size_t i = 0; i < m.size(); ++i) {
        const auto r = m.row(i);
        rows.push_back(std::vector<double>(r.begin(), r.end()));
    }
    return rows;
}

json swaps_json(const PivotLog& log)
{
    // Reported with 1-based indices, like the trace.
    const auto pair = [](const std::optional<SwapPair>& p) -> json {
        if (!p) return nullptr;
        return json::array({p->first + 1, p->second + 1});
    };
    json out = json::array();
    for (const auto& e : log.entries())
        out.push_back({{"step", e.step}, {"row", pair(e.row_swap)}, {"col", pair(e.col_swap)}});
    return out;
}

void print_trace_matrix(std::ostream& os, const DenseMatrix& m)
{
    const auto flags = os.flags();
    const auto precision = os.precision();
    os << std::fixed << std::setprecision(6);
    for (std::size_t i = 0; i < m.size(); ++i) {
        for (std::size_t j = 0; j < m.size(); ++j) os << std::setw(14) << m(i, j);
        os << '\n';
    }
    os.flags(flags);
    os.precision(precision);
}

void print_trace_state(std::ostream& os, const EliminationState& s)
{
    if (s.mode == Mode::Compact) {
        print_trace_matrix(os, s.work);
    } else {
        os << "A:\n";
        print_trace_matrix(os, s.work);
        os << "D:\n";
        print_trace_matrix(os, *s.inverse_work);
    }
    os << '\n';
}

InvertHooks trace_hooks(std::ostream& err)
{
    InvertHooks hooks;
    hooks.on_start = [&err](const EliminationState& s) {
        err << "Initial matrix\n";
        print_trace_state(err, s);
    };
    hooks.on_pivot = [&err](const EliminationState&, const PivotChoice& c) {
        const std::size_t k = c.step;
        err << "Step " << k << ": pivot " << fmt17(c.value) << " at (" << c.row + 1 << ','
            << c.col + 1 << ")\n";
        if (c.row + 1 != k) err << "Pivoting: swap rows " << k << " and " << c.row + 1 << '\n';
        if (c.col + 1 != k) err << "Pivoting: swap columns " << k << " and " << c.col + 1 << '\n';
    };
    hooks.on_step = [&err](const EliminationState& s) {
        err << "Iteration k=" << s.k << '\n';
        print_trace_state(err, s);
    };
    return hooks;
}

void trace_depivot(std::ostream& err, const InversionResult& r)
{
    const auto& entries = r.log.entries();
    for (auto it = entries.rbegin(); it != entries.rend(); ++it) {
        if (it->row_swap)
            err << "Depivoting: swap columns " << it->row_swap->first + 1 << " and "
                << it->row_swap->second + 1 << '\n';
        if (it->col_swap)
            err << "Depivoting: swap rows " << it->col_swap->first + 1 << " and "
                << it->col_swap->second + 1 << '\n';
    }
    err << "Inverse\n";
    print_trace_matrix(err, r.inverse);
    err << '\n';
}

DenseMatrix load_input(const CliConfig& config, std::istream& in)
{
    if (config.demo) return demo_matrix();
    if (config.input) {
        std::ifstream file(*config.input);
        if (!file) throw std::runtime_error("cannot open input file '" + *config.input + "'");
        return parse_matrix(file);
    }
    return parse_matrix(in);
}

int run_invert(const CliConfig& config, const DenseMatrix& a, std::ostream& out, std::ostream& err)
{
    const InvertOptions options{.strategy = config.pivot, .threshold = config.threshold, .mode = config.mode};
    const auto result = invert(a, options, config.trace ? trace_hooks(err) : InvertHooks{});
    if (config.trace) trace_depivot(err, result);
    const double residual = analysis::residual_norm(a, result.inverse);

    if (config.json) {
        const json doc = {
            {"n", a.size()},
            {"strategy", to_string(config.pivot)},
            {"mode", to_string(config.mode)},
            {"threshold", config.threshold},
            {"determinant", result.determinant},
            {"inverse", matrix_json(result.inverse)},
            {"swaps", swaps_json(result.log)},
            {"residual_max", residual},
        };
        out << doc.dump(2) << '\n';
    } else {
        out << "# determinant " << fmt17(result.determinant) << '\n';
        out << "# residual_max " << fmt17(residual) << '\n';
        format_matrix(out, result.inverse);
    }
    return kExitOk;
}

int run_det(const CliConfig& config, const DenseMatrix& a, std::ostream& out, std::ostream& err)
{
    double determinant = 0.0;
    try {
        const InvertOptions options{.strategy = config.pivot, .threshold = config.threshold, .mode = config.mode};
        determinant = invert(a, options, config.trace ? trace_hooks(err) : InvertHooks{}).determinant;
    } catch (const SingularError& e) {
        if (!config.singular_zero) throw;
        err << "gjinv: " << e.what() << "; reporting determinant 0\n";
    }
    if (config.json) {
        const json doc = {
            {"n", a.size()},
            {"strategy", to_string(config.pivot)},
            {"mode", to_string(config.mode)},
            {"threshold", config.threshold},
            {"determinant", determinant},
        };
        out << doc.dump(2) << '\n';
    } else {
        out << fmt17(determinant) << '\n';
    }
    return kExitOk;
}

int run_compare(const CliConfig& config, const DenseMatrix& a, std::ostream& out)
{
    const auto report = analysis::compare_strategies(a, config.threshold, config.mode);
    if (config.json) {
        json rows = json::array();
        for (const auto& o : report.outcomes) {
            rows.push_back({
                {"strategy", to_string(o.strategy)},
                {"outcome", o.succeeded() ? "success" : "singular"},
                {"singular_step", o.singular_step ? json(*o.singular_step) : json(nullptr)},
                {"residual_max", o.residual_max ? json(*o.residual_max) : json(nullptr)},
                {"determinant", o.determinant ? json(*o.determinant) : json(nullptr)},
                {"swap_count", o.swap_count},
            });
        }
        const json doc = {
            {"n", a.size()},
            {"mode", to_string(config.mode)},
            {"threshold", config.threshold},
            {"strategies", rows},
        };
        out << doc.dump(2) << '\n';
        return kExitOk;
    }
    out << std::left << std::setw(10) << "strategy" << std::setw(22) << "outcome" << std::setw(26)
        << "residual_max" << std::setw(26) << "determinant" << "swaps\n";
    for (const auto& o : report.outcomes) {
        out << std::setw(10) << to_string(o.strategy);
        if (o.succeeded()) {
            out << std::setw(22) << "success" << std::setw(26) << fmt17(*o.residual_max)
                << std::setw(26) << fmt17(*o.determinant) << o.swap_count << '\n';
        } else {
            out << std::setw(22) << ("singular at step " + std::to_string(*o.singular_step))
                << std::setw(26) << "-" << std::setw(26) << "-" << o.swap_count << '\n';
        }
    }
    out << std::right;
    return kExitOk;
}

}  // namespace

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) +
                         ": " + what),
      line_(line), column_(column), detail_(what)
{
}

DenseMatrix parse_matrix(std::istream& in)
{
    std::string line;
    std::size_t line_no = 0;
    std::size_t n = 0;
    std::vector<double> values;
    std::size_t rows_read = 0;

    while (std::getline(in, line)) {
        ++line_no;
        const auto tokens = tokenize(line);
        if (is_ignorable(tokens)) continue;

        if (n == 0) {
            n = parse_dimension(tokens[0], line_no);
            if (tokens.size() > 1) {
                throw ParseError(line_no, tokens[1].column,
                                 "unexpected token '" + std::string(tokens[1].text) +
                                     "' after the dimension");
            }
            values.reserve(n * n);
            continue;
        }
        if (rows_read == n) {
            throw ParseError(line_no, tokens[0].column,
                             "unexpected extra row; the matrix has " + std::to_string(n) + " rows");
        }
        ++rows_read;
        if (tokens.size() < n) {
            throw ParseError(line_no, line.size() + 1,
                             "row " + std::to_string(rows_read) + " has " +
                                 std::to_string(tokens.size()) + " values, expected " +
                                 std::to_string(n));
        }
        if (tokens.size() > n) {
            throw ParseError(line_no, tokens[n].column,
                             "row " + std::to_string(rows_read) + " has more than " +
                                 std::to_string(n) + " values");
        }
        for (const auto& tok : tokens) values.push_back(parse_value(tok, line_no));
    }

    if (n == 0) throw ParseError(line_no + 1, 1, "missing matrix dimension");
    if (rows_read < n) {
        throw ParseError(line_no + 1, 1,
                         "expected " + std::to_string(n) + " rows, found " + std::to_string(rows_read));
    }
    return DenseMatrix(n, std::move(values));
}

DenseMatrix parse_matrix(std::string_view text)
{
    std::istringstream in{std::string(text)};
    return parse_matrix(in);
}

void format_matrix(std::ostream& out, const DenseMatrix& m)
{
    out << m.size() << '\n';
    for (std::size_t i = 0; i < m.size(); ++i) {
        for (std::size_t j = 0; j < m.size(); ++j) out << (j ? " " : "") << fmt17(m(i, j));
        out << '\n';
    }
}

std::string format_matrix(const DenseMatrix& m)
{
    std::ostringstream os;
    format_matrix(os, m);
    return os.str();
}

DenseMatrix demo_matrix()
{
    return DenseMatrix::from_rows({{1, 1, 1}, {1, 2, 3}, {1, 3, 6}});
}

std::optional<PivotStrategy> parse_strategy(std::string_view name)
{
    if (name == "none") return PivotStrategy::None;
    if (name == "partial") return PivotStrategy::PartialRow;
    if (name == "full") return PivotStrategy::Full;
    return std::nullopt;
}

std::optional<Mode> parse_mode(std::string_view name)
{
    if (name == "explicit") return Mode::Explicit;
    if (name == "compact") return Mode::Compact;
    return std::nullopt;
}

int run(const CliConfig& config, std::istream& in, std::ostream& out, std::ostream& err)
{
    try {
        if (!(config.threshold >= 0.0) || !std::isfinite(config.threshold)) {
            err << "gjinv: usage error: threshold must be finite and non-negative\n";
            return kExitUsage;
        }
        const DenseMatrix a = load_input(config, in);
        switch (config.command) {
        case Command::Invert: return run_invert(config, a, out, err);
        case Command::Det: return run_det(config, a, out, err);
        case Command::Compare: return run_compare(config, a, out);
        }
        return kExitUsage;
    } catch (const ParseError& e) {
        err << "gjinv: parse error at " << e.what() << '\n';
        return kExitUsage;
    } catch (const SingularError& e) {
        err << "gjinv: " << e.what() << '\n';
        return kExitSingular;
    } catch (const std::exception& e) {
        err << "gjinv: error: " << e.what() << '\n';
        return kExitUsage;
    }
}

int main_entry(int argc, const char* const* argv, std::istream& in, std::ostream& out,
               std::ostream& err)
{
    CLI::App app{"Gauss-Jordan matrix inversion with configurable pivoting", "gjinv"};
    app.require_subcommand(1);

    CliConfig config;
    std::string input;
    std::string pivot = "full";
    std::string mode = "compact";

    const auto add_common = [&](CLI::App* sub) {
        auto* in_opt = sub->add_option("--input", input, "Matrix file (default: stdin)");
        auto* demo_opt = sub->add_flag("--demo", config.demo, "Use the built-in 3x3 demo matrix");
        in_opt->excludes(demo_opt);
        sub->add_option("--pivot", pivot, "Pivot strategy")
            ->check(CLI::IsMember({"none", "partial", "full"}))
            ->capture_default_str();
        sub->add_option("--threshold", config.threshold, "Zero threshold for pivots")
            ->check(CLI::NonNegativeNumber)
            ->capture_default_str();
        sub->add_option("--mode", mode, "Working storage")
            ->check(CLI::IsMember({"explicit", "compact"}))
            ->capture_default_str();
        sub->add_flag("--trace", config.trace, "Print every iteration to stderr");
        sub->add_flag("--json", config.json, "Emit JSON on stdout");
    };

    auto* inv = app.add_subcommand("invert", "Invert a matrix");
    auto* dt = app.add_subcommand("det", "Determinant as the product of pivots");
    auto* cmp = app.add_subcommand("compare", "Compare residuals across pivot strategies");
    add_common(inv);
    add_common(dt);
    add_common(cmp);
    dt->add_flag("--singular-zero", config.singular_zero, "Report 0 for singular input");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << "gjinv: usage error: " << e.what() << '\n';
        return kExitUsage;
    }

    if (inv->parsed()) config.command = Command::Invert;
    if (dt->parsed()) config.command = Command::Det;
    if (cmp->parsed()) config.command = Command::Compare;
    if (!input.empty()) config.input = input;
    config.pivot = *parse_strategy(pivot);
    config.mode = *parse_mode(mode);
    return run(config, in, out, err);
}

}  // namespace gjinv::cli
