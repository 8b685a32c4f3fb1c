// bgap: exact verification of the Bernstein midpoint-gap inequalities.
//
//   bgap identity --n N --trials T [--seed S]
//   bgap coeffs   --n N --x P/Q --y P/Q
//   bgap scan     --n N --fn SPEC --grid G [--mode exact|float]
//                 [--format json|csv|text] [--out PATH] [--seed S]
//
// Exit status: 0 success, 1 invariant or verdict failure, 2 usage error,
// 3 I/O error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "bgap/scan.hpp"

namespace {

constexpr unsigned kCliMaxN = 64;  // library itself is uncapped

int cmd_identity(unsigned n, unsigned trials, std::uint64_t seed) {
    const bgap::IdentityOutcome out = bgap::run_identity_trials(n, trials, seed);
    std::cout << "identity n=" << n << " trials=" << trials << " seed=" << seed << "\n";
    std::cout << "max |residual| = " << out.max_abs_residual.wire() << "\n";
    std::cout << "residual 0 in " << out.zero_count << "/" << trials << " cases\n";
    if (out.all_zero()) return 0;
    const auto& f = *out.first_failure;
    std::cerr << "first failing case: x=" << f.x.wire() << " y=" << f.y.wire()
              << " samples=[";
    for (std::size_t i = 0; i < f.samples.size(); ++i) {
        if (i > 0) std::cerr << ",";
        std::cerr << f.samples[i];
    }
    std::cerr << "] residual=" << f.residual.wire() << "\n";
    return 1;
}

int cmd_coeffs(unsigned n, const std::string& x_text, const std::string& y_text) {
    const bgap::Rational x = bgap::Rational::parse(x_text);
    const bgap::Rational y = bgap::Rational::parse(y_text);
    const bgap::GapCoefficients coeffs = bgap::gap_coefficients(n, x, y);
    for (std::size_t k = 0; k < coeffs.c.size(); ++k) {
        if (k > 0) std::cout << " ";
        std::cout << coeffs.c[k].wire();
    }
    std::cout << "\n";
    return 0;
}

int cmd_scan(const bgap::ScanConfig& config, const std::string& out_path) {
    const bgap::ScanResult result = bgap::run_scan(config);
    const std::string payload = bgap::serialize(result, config.format);
    if (out_path.empty()) {
        std::cout << payload;
    } else {
        std::ofstream out(out_path, std::ios::binary | std::ios::trunc);
        if (!out) throw bgap::IoError("cannot open '" + out_path + "' for writing");
        out << payload;
        out.flush();
        if (!out) throw bgap::IoError("write to '" + out_path + "' failed");
    }
    if (!result.verdict_ok()) {
        std::cerr << "scan verdict failed: convex input with negative min gap4 "
                     "or nonzero residual\n";
        return 1;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Bernstein-operator gap verification"};
    app.require_subcommand(1);

    unsigned n = 1;
    unsigned trials = 100;
    std::uint64_t seed = 0;
    std::string x_text, y_text;
    std::string fn_text = "e2";
    unsigned grid = 10;
    std::string mode_text = "exact";
    std::string format_text = "text";
    std::string out_path;

    auto* identity = app.add_subcommand("identity", "seeded random residual checks");
    identity->add_option("--n", n, "operator parameter n")
        ->required()
        ->check(CLI::Range(1u, kCliMaxN));
    identity->add_option("--trials", trials, "number of random cases")
        ->required()
        ->check(CLI::Range(1u, 10000000u));
    identity->add_option("--seed", seed, "generator seed");

    auto* coeffs = app.add_subcommand("coeffs", "print gap coefficients at (x, y)");
    coeffs->add_option("--n", n, "operator parameter n")
        ->required()
        ->check(CLI::Range(1u, kCliMaxN));
    coeffs->add_option("--x", x_text, "rational x in [0,1], e.g. 1/3")->required();
    coeffs->add_option("--y", y_text, "rational y in [0,1]")->required();

    auto* scan = app.add_subcommand("scan", "gap reports over an (x,y) grid");
    scan->add_option("--n", n, "operator parameter n")
        ->required()
        ->check(CLI::Range(1u, kCliMaxN));
    scan->add_option("--fn", fn_text, "function spec, e.g. e2, abs:1/2, hat:1/2, "
                                      "pwl:0,0;1/2,1;1,0, exp")
        ->required();
    scan->add_option("--grid", grid, "grid density G; points are i/G")
        ->required()
        ->check(CLI::Range(1u, 4096u));
    scan->add_option("--mode", mode_text, "exact or float")
        ->check(CLI::IsMember({"exact", "float"}));
    scan->add_option("--format", format_text, "json, csv or text")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    scan->add_option("--out", out_path, "write the report to a file");
    scan->add_option("--seed", seed, "configuration seed (echoed, reserved)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (identity->parsed()) return cmd_identity(n, trials, seed);
        if (coeffs->parsed()) return cmd_coeffs(n, x_text, y_text);
        bgap::ScanConfig config;
        config.n = n;
        config.function = fn_text;
        config.grid = grid;
        config.mode = bgap::parse_mode(mode_text);
        config.seed = seed;
        config.format = bgap::parse_format(format_text);
        return cmd_scan(config, out_path);
    } catch (const bgap::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const bgap::DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const bgap::UnsupportedExact& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const bgap::IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
