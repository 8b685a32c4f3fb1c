#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bgap/functions.hpp"
#include "bgap/gap.hpp"

namespace bgap {

enum class OutputFormat { json, csv, text };

OutputFormat parse_format(std::string_view text);   // ParseError on bad input
EvalMode parse_mode(std::string_view text);         // "exact" | "float"
std::string format_name(OutputFormat f);
std::string mode_name(EvalMode m);

/// Configuration of a grid scan: gap reports on all (x,y) in
/// {0, 1/G, ..., 1}^2 over samples of `function` at grid 2n.
struct ScanConfig {
    unsigned n = 1;
    std::string function = "e2";
    unsigned grid = 10;  // G >= 1
    EvalMode mode = EvalMode::exact;
    std::uint64_t seed = 0;
    OutputFormat format = OutputFormat::text;
};

/// Scan output. Cells are ordered by (x, y) ascending regardless of
/// evaluation order. Exactly one of `cells` / `fcells` is populated,
/// matching `mode`. The minimum-gap4 location is the lexicographically
/// smallest (x, y) among the minimizers.
struct ScanResult {
    unsigned n = 0;
    std::string function;
    unsigned grid = 0;
    EvalMode mode = EvalMode::exact;
    bool convex_input = false;

    std::vector<GapReport> cells;
    std::vector<GapReportFloat> fcells;

    Rational min_gap4;
    Rational min_x, min_y;
    double fmin_gap4 = 0, fmin_x = 0, fmin_y = 0;

    std::size_t equality_cells = 0;  // cells with gap4 == 0; the diagonal always qualifies
    std::size_t total_cells = 0;
    std::int64_t runtime_ms = 0;  // measured; serialized as 0 so emission is byte-deterministic

    /// The spec-level success verdict: residuals vanish and, when the input
    /// samples are convex, the minimum gap4 is nonnegative.
    bool verdict_ok() const;
};

ScanResult run_scan(const ScanConfig& config);

/// JSON document with keys n, function, grid, mode, cells, min_gap4,
/// convex_input, runtime_ms. Exact values are "p/q" strings in lowest
/// terms; float values are plain numbers.
std::string to_json(const ScanResult& result);
/// One row per cell: x,y,gap1,gap2,gap3,gap4,residual; float mode appends
/// the plot-ready operator columns b2n_x,b2n_y,b2n_mid,tensor.
std::string to_csv(const ScanResult& result);
/// Human-readable summary.
std::string to_text(const ScanResult& result);
std::string serialize(const ScanResult& result, OutputFormat format);

/// Inverse of to_json (derivable counters are recomputed from the cells).
ScanResult scan_result_from_json(const std::string& text);

/// One randomized identity trial that failed: the inputs plus the residual.
struct IdentityCase {
    Rational x, y;
    std::vector<long> samples;
    Rational residual;
};

/// Outcome of seeded random identity trials at one n: random rational
/// x, y in [0,1] and integer samples in [-100,100]; the residual must be
/// exactly zero in every case.
struct IdentityOutcome {
    unsigned n = 0;
    unsigned trials = 0;
    std::uint64_t seed = 0;
    std::size_t zero_count = 0;
    Rational max_abs_residual;
    std::optional<IdentityCase> first_failure;

    bool all_zero() const { return zero_count == trials; }
};

IdentityOutcome run_identity_trials(unsigned n, unsigned trials, std::uint64_t seed);

}  // namespace bgap
