#include "bgap/scan.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <utility>

#include "json.hpp"

namespace bgap {

namespace {

using ordered_json = nlohmann::ordered_json;

// Absolute tolerance for the float lane's chain checks and verdicts. The
// exact lane never uses tolerances.
constexpr double kFloatTol = 1e-9;
constexpr double kFloatEqTol = 1e-12;

std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

// Deterministic generator for randomized trials. Draws use raw engine words
// so results are reproducible from the seed on any platform.
class TrialRng {
public:
    explicit TrialRng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t below(std::uint64_t bound) { return eng_() % bound; }

    Rational unit_rational(unsigned max_den) {
        const long q = 1 + static_cast<long>(below(max_den));
        const long p = static_cast<long>(below(static_cast<std::uint64_t>(q) + 1));
        return Rational(p, q);
    }

    long int_between(long lo, long hi) {
        return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo) + 1));
    }

private:
    std::mt19937_64 eng_;
};

}  // namespace

OutputFormat parse_format(std::string_view text) {
    if (text == "json") return OutputFormat::json;
    if (text == "csv") return OutputFormat::csv;
    if (text == "text") return OutputFormat::text;
    throw ParseError("unknown format '" + std::string(text) + "'");
}

EvalMode parse_mode(std::string_view text) {
    if (text == "exact") return EvalMode::exact;
    if (text == "float") return EvalMode::floating;
    throw ParseError("unknown mode '" + std::string(text) + "'");
}

std::string format_name(OutputFormat f) {
    switch (f) {
        case OutputFormat::json: return "json";
        case OutputFormat::csv: return "csv";
        default: return "text";
    }
}

std::string mode_name(EvalMode m) {
    return m == EvalMode::exact ? "exact" : "float";
}

bool ScanResult::verdict_ok() const {
    if (mode == EvalMode::exact) {
        for (const auto& cell : cells) {
            if (!cell.identity_residual.is_zero()) return false;
        }
        return !convex_input || min_gap4.sign() >= 0;
    }
    return !convex_input || fmin_gap4 >= -kFloatTol;
}

ScanResult run_scan(const ScanConfig& config) {
    if (config.n == 0) throw ParseError("n must be positive");
    if (config.grid == 0) throw ParseError("grid must be positive");
    const auto t0 = std::chrono::steady_clock::now();

    const FunctionSpec fn = FunctionSpec::parse(config.function);
    const SampleVector samples = fn.sample(2 * config.n, config.mode);
    const unsigned G = config.grid;

    ScanResult res;
    res.n = config.n;
    res.function = fn.text();
    res.grid = G;
    res.mode = config.mode;
    res.total_cells = static_cast<std::size_t>(G + 1) * (G + 1);

    if (config.mode == EvalMode::exact) {
        res.convex_input = is_convex_samples(samples.values());
        res.cells.reserve(res.total_cells);
        bool have_min = false;
        for (unsigned i = 0; i <= G; ++i) {
            const Rational x(static_cast<long>(i), static_cast<long>(G));
            for (unsigned j = 0; j <= G; ++j) {
                const Rational y(static_cast<long>(j), static_cast<long>(G));
                GapReport cell = gap_report(config.n, samples.values(), x, y);
                const std::string at = " at (" + x.str() + ", " + y.str() + ")";
                if (cell.gap1 != cell.gap2) {
                    throw Error("gap1 != gap2" + at);
                }
                if (cell.gap2 != cell.gap3 + cell.gap4 + cell.gap4) {
                    throw Error("gap2 != gap3 + 2*gap4" + at);
                }
                if (cell.gap4.is_zero()) ++res.equality_cells;
                if (!have_min || cell.gap4 < res.min_gap4) {
                    have_min = true;
                    res.min_gap4 = cell.gap4;
                    res.min_x = x;
                    res.min_y = y;
                }
                res.cells.push_back(std::move(cell));
            }
        }
    } else {
        res.convex_input = is_convex_samples(samples.approx_values(), kFloatEqTol);
        res.fcells.reserve(res.total_cells);
        bool have_min = false;
        for (unsigned i = 0; i <= G; ++i) {
            const double x = static_cast<double>(i) / G;
            for (unsigned j = 0; j <= G; ++j) {
                const double y = static_cast<double>(j) / G;
                GapReportFloat cell =
                    gap_report_float(config.n, samples.approx_values(), x, y);
                const std::string at =
                    " at (" + fmt_double(x) + ", " + fmt_double(y) + ")";
                if (std::fabs(cell.gap1 - cell.gap2) > kFloatTol) {
                    throw Error("gap1 != gap2" + at);
                }
                if (std::fabs(cell.gap2 - (cell.gap3 + 2.0 * cell.gap4)) > kFloatTol) {
                    throw Error("gap2 != gap3 + 2*gap4" + at);
                }
                if (std::fabs(cell.gap4) <= kFloatEqTol) ++res.equality_cells;
                if (!have_min || cell.gap4 < res.fmin_gap4) {
                    have_min = true;
                    res.fmin_gap4 = cell.gap4;
                    res.fmin_x = x;
                    res.fmin_y = y;
                }
                res.fcells.push_back(cell);
            }
        }
    }

    const auto t1 = std::chrono::steady_clock::now();
    res.runtime_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
    return res;
}

std::string to_json(const ScanResult& result) {
    ordered_json doc;
    doc["n"] = result.n;
    doc["function"] = result.function;
    doc["grid"] = result.grid;
    doc["mode"] = mode_name(result.mode);
    ordered_json cells = ordered_json::array();
    if (result.mode == EvalMode::exact) {
        for (const auto& c : result.cells) {
            cells.push_back({{"x", c.x.wire()},
                             {"y", c.y.wire()},
                             {"gap1", c.gap1.wire()},
                             {"gap2", c.gap2.wire()},
                             {"gap3", c.gap3.wire()},
                             {"gap4", c.gap4.wire()},
                             {"residual", c.identity_residual.wire()}});
        }
    } else {
        for (const auto& c : result.fcells) {
            cells.push_back({{"x", c.x},
                             {"y", c.y},
                             {"gap1", c.gap1},
                             {"gap2", c.gap2},
                             {"gap3", c.gap3},
                             {"gap4", c.gap4},
                             {"residual", c.residual}});
        }
    }
    doc["cells"] = std::move(cells);
    if (result.mode == EvalMode::exact) {
        doc["min_gap4"] = {{"value", result.min_gap4.wire()},
                           {"x", result.min_x.wire()},
                           {"y", result.min_y.wire()}};
    } else {
        doc["min_gap4"] = {{"value", result.fmin_gap4},
                           {"x", result.fmin_x},
                           {"y", result.fmin_y}};
    }
    doc["convex_input"] = result.convex_input;
    doc["runtime_ms"] = 0;
    return doc.dump(2) + "\n";
}

std::string to_csv(const ScanResult& result) {
    std::string out = "x,y,gap1,gap2,gap3,gap4,residual";
    if (result.mode == EvalMode::floating) out += ",b2n_x,b2n_y,b2n_mid,tensor";
    out += "\n";
    if (result.mode == EvalMode::exact) {
        for (const auto& c : result.cells) {
            out += c.x.wire() + "," + c.y.wire() + "," + c.gap1.wire() + "," +
                   c.gap2.wire() + "," + c.gap3.wire() + "," + c.gap4.wire() + "," +
                   c.identity_residual.wire() + "\n";
        }
    } else {
        for (const auto& c : result.fcells) {
            out += fmt_double(c.x) + "," + fmt_double(c.y) + "," + fmt_double(c.gap1) +
                   "," + fmt_double(c.gap2) + "," + fmt_double(c.gap3) + "," +
                   fmt_double(c.gap4) + "," + fmt_double(c.residual) + "," +
                   fmt_double(c.b2n_x) + "," + fmt_double(c.b2n_y) + "," +
                   fmt_double(c.b2n_mid) + "," + fmt_double(c.tensor_xy) + "\n";
        }
    }
    return out;
}

std::string to_text(const ScanResult& result) {
    std::string out;
    out += "scan n=" + std::to_string(result.n) + " fn=" + result.function +
           " grid=" + std::to_string(result.grid) + " mode=" + mode_name(result.mode) +
           "\n";
    out += "cells " + std::to_string(result.total_cells) + ", equality cells " +
           std::to_string(result.equality_cells) + ", convex input " +
           (result.convex_input ? "yes" : "no") + "\n";
    if (result.mode == EvalMode::exact) {
        out += "min gap4 = " + result.min_gap4.str() + " at (" + result.min_x.str() +
               ", " + result.min_y.str() + ")\n";
        bool residuals_zero = true;
        for (const auto& c : result.cells) {
            if (!c.identity_residual.is_zero()) residuals_zero = false;
        }
        out += std::string("residuals all zero: ") + (residuals_zero ? "yes" : "NO") + "\n";
    } else {
        out += "min gap4 = " + fmt_double(result.fmin_gap4) + " at (" +
               fmt_double(result.fmin_x) + ", " + fmt_double(result.fmin_y) + ")\n";
    }
    out += "runtime " + std::to_string(result.runtime_ms) + " ms\n";
    return out;
}

std::string serialize(const ScanResult& result, OutputFormat format) {
    switch (format) {
        case OutputFormat::json: return to_json(result);
        case OutputFormat::csv: return to_csv(result);
        default: return to_text(result);
    }
}

ScanResult scan_result_from_json(const std::string& text) {
    const ordered_json doc = ordered_json::parse(text);
    ScanResult res;
    res.n = doc.at("n").get<unsigned>();
    res.function = doc.at("function").get<std::string>();
    res.grid = doc.at("grid").get<unsigned>();
    res.mode = parse_mode(doc.at("mode").get<std::string>());
    res.convex_input = doc.at("convex_input").get<bool>();
    res.runtime_ms = doc.at("runtime_ms").get<std::int64_t>();
    const auto& cells = doc.at("cells");
    res.total_cells = cells.size();
    if (res.mode == EvalMode::exact) {
        for (const auto& c : cells) {
            GapReport r;
            r.n = res.n;
            r.x = Rational::parse(c.at("x").get<std::string>());
            r.y = Rational::parse(c.at("y").get<std::string>());
            r.gap1 = Rational::parse(c.at("gap1").get<std::string>());
            r.gap2 = Rational::parse(c.at("gap2").get<std::string>());
            r.gap3 = Rational::parse(c.at("gap3").get<std::string>());
            r.gap4 = Rational::parse(c.at("gap4").get<std::string>());
            r.identity_residual = Rational::parse(c.at("residual").get<std::string>());
            r.xy_equal = r.x == r.y;
            if (r.gap4.is_zero()) ++res.equality_cells;
            res.cells.push_back(std::move(r));
        }
        const auto& m = doc.at("min_gap4");
        res.min_gap4 = Rational::parse(m.at("value").get<std::string>());
        res.min_x = Rational::parse(m.at("x").get<std::string>());
        res.min_y = Rational::parse(m.at("y").get<std::string>());
    } else {
        for (const auto& c : cells) {
            GapReportFloat r;
            r.n = res.n;
            r.x = c.at("x").get<double>();
            r.y = c.at("y").get<double>();
            r.gap1 = c.at("gap1").get<double>();
            r.gap2 = c.at("gap2").get<double>();
            r.gap3 = c.at("gap3").get<double>();
            r.gap4 = c.at("gap4").get<double>();
            r.residual = c.at("residual").get<double>();
            if (std::fabs(r.gap4) <= kFloatEqTol) ++res.equality_cells;
            res.fcells.push_back(r);
        }
        const auto& m = doc.at("min_gap4");
        res.fmin_gap4 = m.at("value").get<double>();
        res.fmin_x = m.at("x").get<double>();
        res.fmin_y = m.at("y").get<double>();
    }
    return res;
}

IdentityOutcome run_identity_trials(unsigned n, unsigned trials, std::uint64_t seed) {
    if (n == 0) throw ParseError("n must be positive");
    IdentityOutcome out;
    out.n = n;
    out.trials = trials;
    out.seed = seed;

    TrialRng rng(seed);
    for (unsigned t = 0; t < trials; ++t) {
        const Rational x = rng.unit_rational(64);
        const Rational y = rng.unit_rational(64);
        std::vector<long> raw(2 * n + 1);
        std::vector<Rational> samples(2 * n + 1);
        for (std::size_t k = 0; k < raw.size(); ++k) {
            raw[k] = rng.int_between(-100, 100);
            samples[k] = Rational(raw[k]);
        }
        const Rational residual =
            identity_lhs(n, samples, x, y) - identity_rhs(gap_coefficients(n, x, y), samples);
        if (residual.is_zero()) {
            ++out.zero_count;
        } else if (!out.first_failure) {
            out.first_failure = IdentityCase{x, y, raw, residual};
        }
        const Rational mag = abs(residual);
        if (mag > out.max_abs_residual) out.max_abs_residual = mag;
    }
    return out;
}

}  // namespace bgap
