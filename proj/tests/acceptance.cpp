// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any
// criterion fails. Tolerances are fixed here and never tuned at run time.

#include "gjinv/analysis.hpp"
#include "gjinv/cli.hpp"
#include "gjinv/engine.hpp"

#include <json.hpp>

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

using namespace gjinv;
using namespace gjinv::analysis;
using Clock = std::chrono::steady_clock;

namespace {

constexpr PivotStrategy kStrategies[] = {PivotStrategy::None, PivotStrategy::PartialRow,
                                         PivotStrategy::Full};

struct Verdict {
    bool pass;
    std::string detail;
};

double seconds_since(Clock::time_point t0)
{
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string sci(double v)
{
    std::ostringstream os;
    os.precision(3);
    os << std::scientific << v;
    return os.str();
}

struct Sweep {
    std::vector<DenseMatrix> matrices;
};

// 500 seeded integer matrices, n = 2 + seed % 5, entries in [-5, 5],
// keeping only |det| >= 1 by the Laplace oracle.
const Sweep& sweep()
{
    static const Sweep s = [] {
        Sweep out;
        for (std::uint64_t seed = 1; out.matrices.size() < 500; ++seed) {
            auto m = gen_random_integer(2 + seed % 5, seed, 5);
            if (std::abs(cofactor_det(m)) >= 1.0) out.matrices.push_back(std::move(m));
        }
        return out;
    }();
    return s;
}

Verdict demo_matrix_criterion()
{
    const auto a = cli::demo_matrix();
    const auto oracle = adjugate_inverse(a);
    double worst_inv = 0.0, worst_det = 0.0, slowest = 0.0;
    for (auto strategy : kStrategies)
        for (auto mode : {Mode::Explicit, Mode::Compact}) {
            const auto t0 = Clock::now();
            const auto r = invert(a, {.strategy = strategy, .mode = mode});
            slowest = std::max(slowest, seconds_since(t0));
            worst_inv = std::max(worst_inv, max_abs_diff(r.inverse, oracle));
            worst_det = std::max(worst_det, std::abs(r.determinant - 1.0));
        }
    const bool pass = worst_inv <= 1e-12 && worst_det <= 1e-12 && slowest < 1e-3;
    return {pass, "6 runs; max |inv - adj| = " + sci(worst_inv) + ", max |det - 1| = " +
                      sci(worst_det) + ", slowest run " + sci(slowest) + " s"};
}

Verdict oracle_sweep_criterion()
{
    const auto t0 = Clock::now();
    double worst_det = 0.0, worst_res = 0.0;
    std::size_t runs = 0, none_singular = 0;
    for (const auto& a : sweep().matrices) {
        const double oracle = cofactor_det(a);
        for (auto strategy : kStrategies) {
            try {
                const auto r = invert(a, {.strategy = strategy});
                worst_det = std::max(worst_det, std::abs(r.determinant - oracle) / std::abs(oracle));
                worst_res = std::max(worst_res, residual_norm(a, r.inverse));
                ++runs;
            } catch (const SingularError&) {
                if (strategy != PivotStrategy::None) return {false, "pivoted strategy reported singular"};
                ++none_singular;
            }
        }
    }
    const double elapsed = seconds_since(t0);
    const bool pass = worst_det <= 1e-9 && worst_res <= 1e-10 && elapsed < 10.0;
    return {pass, std::to_string(sweep().matrices.size()) + " matrices, " + std::to_string(runs) +
                      " successful runs (" + std::to_string(none_singular) +
                      " zero-pivot failures without pivoting); max rel det err " + sci(worst_det) +
                      ", max residual " + sci(worst_res) + ", " + sci(elapsed) + " s"};
}

Verdict permutation_sign_criterion()
{
    std::size_t cases = 0;
    double worst_det = 0.0;
    bool exact_inverse = true;
    for (std::size_t n = 1; n <= 5; ++n) {
        std::vector<std::size_t> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        do {
            DenseMatrix p(n);
            for (std::size_t i = 0; i < n; ++i) p(i, perm[i]) = 1.0;
            int inversions = 0;
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
            const double sign = inversions % 2 == 0 ? 1.0 : -1.0;
            for (auto strategy : {PivotStrategy::PartialRow, PivotStrategy::Full}) {
                const auto r = invert(p, {.strategy = strategy});
                worst_det = std::max(worst_det, std::abs(r.determinant - sign));
                exact_inverse = exact_inverse && r.inverse == p.transpose();
            }
            ++cases;
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    const bool pass = cases == 153 && worst_det <= 1e-15 && exact_inverse;
    return {pass, std::to_string(cases) + " permutations x {partial, full}; max |det - sign| = " +
                      sci(worst_det) + ", inverse == transpose: " + (exact_inverse ? "yes" : "no")};
}

Verdict zero_pivot_recovery_criterion()
{
    const auto outcome = [](const DenseMatrix& a, PivotStrategy s) -> std::optional<std::size_t> {
        try {
            (void)invert(a, {.strategy = s});
            return std::nullopt;
        } catch (const SingularError& e) {
            return e.step();
        }
    };
    const auto swap2 = DenseMatrix::from_rows({{0, 1}, {1, 0}});
    const auto rank1 = DenseMatrix::from_rows({{1, 2}, {2, 4}});
    const bool swap_ok = outcome(swap2, PivotStrategy::None) == 1u &&
                         !outcome(swap2, PivotStrategy::PartialRow) &&
                         !outcome(swap2, PivotStrategy::Full);
    bool rank_ok = true;
    std::string steps;
    for (auto s : kStrategies) {
        const auto step = outcome(rank1, s);
        rank_ok = rank_ok && step.has_value() && *step >= 1;
        steps += std::string(to_string(s)) + "@" + (step ? std::to_string(*step) : "none") + " ";
    }
    return {swap_ok && rank_ok, std::string("[[0,1],[1,0]]: none fails, partial/full succeed: ") +
                                    (swap_ok ? "yes" : "no") + "; [[1,2],[2,4]] singular steps: " + steps};
}

Verdict mode_equivalence_criterion()
{
    double worst = 0.0;
    bool same_pivots = true;
    std::size_t runs = 0;
    for (const auto& a : sweep().matrices) {
        for (auto strategy : kStrategies) {
            std::vector<PivotChoice> pe, pc;
            InvertHooks he, hc;
            he.on_pivot = [&](const EliminationState&, const PivotChoice& c) { pe.push_back(c); };
            hc.on_pivot = [&](const EliminationState&, const PivotChoice& c) { pc.push_back(c); };
            bool se = false, sc = false;
            std::optional<InversionResult> re, rc;
            try { re = invert(a, {.strategy = strategy, .mode = Mode::Explicit}, he); } catch (const SingularError&) { se = true; }
            try { rc = invert(a, {.strategy = strategy, .mode = Mode::Compact}, hc); } catch (const SingularError&) { sc = true; }
            same_pivots = same_pivots && pe == pc && se == sc;
            if (re && rc) {
                worst = std::max(worst, max_abs_diff(re->inverse, rc->inverse));
                ++runs;
            }
        }
    }
    const bool pass = same_pivots && worst <= 1e-12;
    return {pass, std::to_string(runs) + " paired runs; identical pivot sequences: " +
                      (same_pivots ? "yes" : "no") + ", max |explicit - compact| = " + sci(worst)};
}

// Residuals observed on the first verified run (x86-64, GCC 11, -O3), at
// zero threshold so every nonzero pivot is admissible.
struct HilbertGolden {
    std::size_t n;
    double none;
    double full;
};
constexpr HilbertGolden kHilbertGolden[] = {
    {8, 1.5050172805786133e-06, 2.5331974029541016e-07},
    {10, 0.00334930419921875, 0.0001678466796875},
};
constexpr double kGoldenSlack = 10.0;
constexpr double kHilbertThreshold = 0.0;

Verdict rounding_error_criterion()
{
    std::string detail;
    bool pass = true;
    for (const auto& g : kHilbertGolden) {
        const auto report = compare_strategies(gen_hilbert(g.n), kHilbertThreshold);
        const auto& none = report.at(PivotStrategy::None);
        const auto& full = report.at(PivotStrategy::Full);
        if (!none.succeeded() || !full.succeeded()) {
            pass = false;
            detail += "H" + std::to_string(g.n) + ": unexpected singular outcome; ";
            continue;
        }
        const bool ok = *full.residual_max <= *none.residual_max &&
                        *full.residual_max <= kGoldenSlack * g.full;
        pass = pass && ok;
        detail += "H" + std::to_string(g.n) + " none " + sci(*none.residual_max) + " full " +
                  sci(*full.residual_max) + "; ";
    }
    const auto swap2 = compare_strategies(DenseMatrix::from_rows({{0, 1}, {1, 0}}));
    const bool witness = !swap2.at(PivotStrategy::None).succeeded() &&
                         swap2.at(PivotStrategy::Full).succeeded();
    pass = pass && witness;
    detail += std::string("none-fails/full-succeeds witness: ") + (witness ? "yes" : "no");
    return {pass, detail};
}

struct Process {
    int code;
    std::string output;
};

Process shell(const std::string& command)
{
    Process p{-1, {}};
    FILE* pipe = popen(command.c_str(), "r");
    if (!pipe) return p;
    std::array<char, 4096> buf{};
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) p.output.append(buf.data(), got);
    const int status = pclose(pipe);
    p.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return p;
}

Verdict cli_contract_criterion()
{
    const std::string bin = GJINV_BINARY;
    std::vector<std::string> failures;

    const auto demo = shell(bin + " invert --demo --json 2>/dev/null");
    if (demo.code != 0) {
        failures.push_back("demo exit " + std::to_string(demo.code));
    } else {
        const auto doc = nlohmann::json::parse(demo.output, nullptr, false);
        for (const char* key : {"n", "strategy", "mode", "threshold", "determinant", "inverse", "swaps", "residual_max"})
            if (doc.is_discarded() || !doc.contains(key)) failures.push_back(std::string("missing key ") + key);
        if (!doc.is_discarded() && std::abs(doc.value("determinant", 0.0) - 1.0) > 1e-12)
            failures.push_back("demo determinant");
    }

    const auto singular = shell("printf '2\\n1 2\\n2 4\\n' | " + bin + " invert 2>&1");
    if (singular.code != 1) failures.push_back("singular exit " + std::to_string(singular.code));

    const auto malformed = shell("printf '2\\n1 0\\n0\\n' | " + bin + " invert 2>&1");
    if (malformed.code != 2) failures.push_back("malformed exit " + std::to_string(malformed.code));
    if (malformed.output.find("line 3") == std::string::npos) failures.push_back("no line number in diagnostic");

    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> dist(-1e3, 1e3);
    for (int trial = 0; trial < 200; ++trial) {
        DenseMatrix m(1 + trial % 6);
        for (std::size_t i = 0; i < m.size(); ++i)
            for (std::size_t j = 0; j < m.size(); ++j) m(i, j) = dist(rng);
        if (max_abs_diff(cli::parse_matrix(cli::format_matrix(m)), m) != 0.0) {
            failures.push_back("round trip");
            break;
        }
    }

    std::string detail = "demo/singular/malformed exit codes 0/1/2, 17-digit round trip";
    for (const auto& f : failures) detail += "; FAILED: " + f;
    return {failures.empty(), detail};
}

}  // namespace

int main()
{
    const auto t0 = Clock::now();
    const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria = {
        {"C1 demo matrix, 3 strategies x 2 modes", demo_matrix_criterion},
        {"C2 oracle equivalence sweep", oracle_sweep_criterion},
        {"C3 permutation sign and inverse", permutation_sign_criterion},
        {"C4 zero-pivot recovery", zero_pivot_recovery_criterion},
        {"C5 explicit/compact equivalence", mode_equivalence_criterion},
        {"C6 pivoting reduces rounding error", rounding_error_criterion},
        {"C7 CLI contract", cli_contract_criterion},
    };
    int failed = 0;
    for (const auto& [name, check] : criteria) {
        const auto v = check();
        failed += v.pass ? 0 : 1;
        std::cout << (v.pass ? "[PASS] " : "[FAIL] ") << name << ": " << v.detail << '\n';
    }
    const double elapsed = seconds_since(t0);
    const bool fast = elapsed < 30.0;
    failed += fast ? 0 : 1;
    std::cout << (fast ? "[PASS] " : "[FAIL] ") << "C7 acceptance wall-clock " << sci(elapsed) << " s (< 30 s)\n";
    std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << '\n';
    return failed == 0 ? 0 : 1;
}
