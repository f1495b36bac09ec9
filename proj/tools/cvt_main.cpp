// Command-line front end for the carry value transformation library.
//
// Subcommands: compute, orbit, table, census, verify. Data goes to stdout
// (or --out for table); diagnostics and timing go to stderr so pipelines
// can consume csv/json/pgm output directly.
//
// Exit codes:
//   0  success, or every verified property passed
//   1  a verified property failed
//   2  usage error (bad arguments, unknown property, out-of-range size)
//   3  value outside the supported 63-bit range
//   4  orbit iteration cap exceeded (partial trace still emitted)
//   5  output file could not be written

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cvt/cvt.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_verify_failed = 1;
constexpr int exit_usage = 2;
constexpr int exit_overflow = 3;
constexpr int exit_cap_exceeded = 4;
constexpr int exit_io = 5;

// "LO..HI" (inclusive) or a single value.
std::vector<cvt::radix> parse_bases(const std::string& spec) {
    const auto dots = spec.find("..");
    std::uint64_t lo = 0;
    std::uint64_t hi = 0;
    try {
        if (dots == std::string::npos) {
            lo = hi = std::stoull(spec);
        } else {
            lo = std::stoull(spec.substr(0, dots));
            hi = std::stoull(spec.substr(dots + 2));
        }
    } catch (const std::exception&) {
        throw CLI::ValidationError("--bases", "expected B or LO..HI");
    }
    if (lo < 2 || hi < lo)
        throw CLI::ValidationError("--bases", "range must satisfy 2 <= LO <= HI");
    std::vector<cvt::radix> bases;
    for (std::uint64_t b = lo; b <= hi; ++b)
        bases.emplace_back(b);
    return bases;
}

void write_output(const std::string& data, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout.write(data.data(), static_cast<std::streamsize>(data.size()));
        return;
    }
    std::ofstream file(out_path, std::ios::binary);
    if (!file || !file.write(data.data(), static_cast<std::streamsize>(data.size())))
        throw std::ios_base::failure("cannot write " + out_path);
}

int run_compute(cvt::natural a, cvt::natural b, std::uint64_t beta) {
    std::cout << cvt::compute_report(a, b, cvt::radix{beta});
    return exit_ok;
}

int run_orbit(cvt::natural a, cvt::natural b, std::uint64_t beta, const std::string& variant,
              const std::string& format, std::size_t cap, bool digits) {
    const cvt::radix base{beta};
    cvt::orbit_result o;
    if (variant == "mcvt") {
        o = cvt::mcvt_orbit(a, b, base);
    } else {
        o = cap == 0 ? cvt::orbit(a, b, base) : cvt::orbit(a, b, base, cap);
    }

    if (format == "json")
        std::cout << cvt::orbit_to_json(o);
    else if (format == "csv")
        std::cout << cvt::orbit_to_csv(o, variant == "mcvt" ? "mcvt" : "cvt");
    else
        std::cout << cvt::orbit_to_text(o, digits);

    if (!o.converged()) {
        std::cerr << "cap of " << o.stop.steps_taken
                  << " steps exceeded before the carry component reached zero\n";
        return exit_cap_exceeded;
    }
    return exit_ok;
}

int run_table(std::size_t n, const std::string& format, const std::string& out_path,
              bool ascii) {
    const cvt::iteration_table t = cvt::build_table(n);
    write_output(format == "pgm" ? cvt::table_to_pgm(t, ascii) : cvt::table_to_csv(t),
                 out_path);
    return exit_ok;
}

int run_census(std::size_t n, const std::string& format) {
    const cvt::class_census c = cvt::census(n);
    std::cout << (format == "json" ? cvt::census_to_json(c) : cvt::census_to_text(c));
    return exit_ok;
}

int run_verify(const std::string& property, cvt::natural max, const std::string& bases_spec) {
    const std::vector<cvt::radix> bases = parse_bases(bases_spec);
    const auto outcomes = cvt::verify::run_properties(property, max, bases);
    bool all_passed = true;
    for (const auto& outcome : outcomes) {
        std::cout << "property: " << outcome.property << "\n";
        std::cout << "universe: " << outcome.universe << "\n";
        std::cout << "passed: " << (outcome.passed ? "yes" : "no");
        if (outcome.report_only)
            std::cout << " (report-only)";
        std::cout << "\n";
        std::cout << "violations: " << outcome.violations << "\n";
        for (const auto& example : outcome.counterexamples)
            std::cout << "  counterexample: " << example << "\n";
        std::cerr << outcome.property << ": " << outcome.elapsed_seconds << "s\n";
        all_passed = all_passed && outcome.passed;
    }
    return all_passed ? exit_ok : exit_verify_failed;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"carry value transformation toolkit"};
    app.require_subcommand(1);

    const auto natural_range = CLI::Range(std::uint64_t{0}, cvt::max_natural);
    const auto base_min = CLI::Range(std::uint64_t{2}, cvt::max_natural);

    cvt::natural a = 0;
    cvt::natural b = 0;
    std::uint64_t beta = 2;
    std::string variant = "cvt";
    std::string format;
    std::string out_path;
    std::string bases_spec = "2..10";
    std::string property;
    std::size_t n = 1;
    std::size_t cap = 0;
    cvt::natural max = 1023;
    bool ascii = false;
    bool digits = false;

    auto* compute = app.add_subcommand("compute", "CVT, MCVT and XOR of a pair");
    compute->add_option("a", a, "first operand")->required()->check(natural_range);
    compute->add_option("b", b, "second operand")->required()->check(natural_range);
    compute->add_option("--base", beta, "number base (default 2)")->check(base_min);

    auto* orbit = app.add_subcommand("orbit", "trajectory of repeated (CVT, XOR) steps");
    orbit->add_option("a", a, "first operand")->required()->check(natural_range);
    orbit->add_option("b", b, "second operand")->required()->check(natural_range);
    orbit->add_option("--base", beta, "number base (default 2)")->check(base_min);
    orbit->add_option("--variant", variant, "cvt (default) or mcvt")
        ->check(CLI::IsMember({"cvt", "mcvt"}));
    orbit->add_option("--format", format, "text (default), csv or json")
        ->check(CLI::IsMember({"text", "csv", "json"}));
    orbit->add_option("--cap", cap, "maximum steps (default: proven bound)");
    orbit->add_flag("--digits", digits, "print states as base-beta digit strings");

    auto* table = app.add_subcommand("table", "2^n x 2^n iteration-count table");
    table->add_option("n", n, "table exponent, 1..12")->required();
    table->add_option("--format", format, "csv (default) or pgm")
        ->check(CLI::IsMember({"csv", "pgm"}));
    table->add_option("--out", out_path, "write to a file instead of stdout");
    table->add_flag("--ascii", ascii, "emit ASCII P2 instead of binary P5 (pgm only)");

    auto* census = app.add_subcommand("census", "equivalence classes by iteration count");
    census->add_option("n", n, "table exponent, 1..12")->required();
    census->add_option("--format", format, "text (default) or json")
        ->check(CLI::IsMember({"text", "json"}));

    auto* verify = app.add_subcommand("verify", "brute-force a property over a universe");
    verify->add_option("property", property,
                       "theorem1|theorem2|theorem3|lemma1|lemma2|lemma4|hamming-note|"
                       "symmetry|quadrants|counts|all")
        ->required();
    verify->add_option("--max", max, "largest operand swept (default 1023)")
        ->check(natural_range);
    verify->add_option("--bases", bases_spec, "base range LO..HI, inclusive (default 2..10)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }

    try {
        if (compute->parsed())
            return run_compute(a, b, beta);
        if (orbit->parsed())
            return run_orbit(a, b, beta, variant, format, cap, digits);
        if (table->parsed())
            return run_table(n, format, out_path, ascii);
        if (census->parsed())
            return run_census(n, format);
        if (verify->parsed())
            return run_verify(property, max, bases_spec);
    } catch (const cvt::overflow_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_overflow;
    } catch (const cvt::cap_exceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_cap_exceeded;
    } catch (const cvt::range_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const cvt::malformed_input& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::ios_base::failure& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_io;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }
    return exit_usage;
}
