// Acceptance suite: runs every contract criterion at its stated tolerance
// and prints one pass/fail line per criterion. Exits nonzero if any
// criterion fails. Expects the CLI binary path as argv[1] (used by the CLI
// contract criterion).

#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "cvt/cvt.hpp"
#include "subprocess.hpp"

using namespace cvt;

namespace {

struct harness {
    int failures = 0;
    int total = 0;

    void criterion(int number, const std::string& description, bool ok,
                   const std::vector<std::string>& details = {}) {
        ++total;
        if (!ok)
            ++failures;
        std::printf("[%s] criterion %2d: %s\n", ok ? "PASS" : "FAIL", number,
                    description.c_str());
        for (const auto& line : details)
            std::printf("       %s\n", line.c_str());
        std::fflush(stdout);
    }
};

std::vector<radix> bases_2_to_10() {
    std::vector<radix> bases;
    for (natural beta = 2; beta <= 10; ++beta)
        bases.emplace_back(beta);
    return bases;
}

std::vector<std::string> outcome_details(const verify::verify_outcome& out) {
    std::vector<std::string> details;
    if (out.violations > 0) {
        details.push_back("violations: " + std::to_string(out.violations));
        for (const auto& example : out.counterexamples)
            details.push_back("counterexample: " + example);
    }
    return details;
}

void check_sum_identity(harness& h) {
    const auto out = verify::theorem1(1023, bases_2_to_10());
    h.criterion(1, "sum identity CVT+XOR = a+b, a,b in [0,1023], bases 2..10", out.passed,
                outcome_details(out));
}

void check_golden_orbits(harness& h) {
    using sv = std::vector<pair_state>;
    struct golden {
        natural a, b;
        sv states;
        std::size_t count;
    };
    const std::vector<golden> cases = {
        {1, 8, {{0, 9}}, 1},
        {12, 10, {{16, 6}, {0, 22}}, 2},
        {12, 25, {{16, 21}, {32, 5}, {0, 37}}, 3},
        {14, 22, {{12, 24}, {16, 20}, {32, 4}, {0, 36}}, 4},
        {21, 27, {{34, 14}, {4, 44}, {8, 40}, {16, 32}, {0, 48}}, 5},
        {27, 5, {{2, 30}, {4, 28}, {8, 24}, {16, 16}, {32, 0}, {0, 32}}, 5},
        {127, 65,
         {{130, 62}, {4, 188}, {8, 184}, {16, 176}, {32, 160}, {64, 128}, {0, 192}},
         7},
    };
    std::vector<std::string> details;
    bool ok = true;
    for (const auto& g : cases) {
        const orbit_result o = orbit(g.a, g.b, radix{2});
        const bool match = o.converged() && o.states == g.states &&
                           *o.iteration_count == g.count;
        if (!match) {
            ok = false;
            details.push_back("orbit of (" + std::to_string(g.a) + ", " +
                              std::to_string(g.b) + ") deviates from the golden trace");
        }
    }
    h.criterion(2, "seven golden orbits, including the post-XOR-zero step of (27, 5)", ok,
                details);
}

void check_convergence(harness& h) {
    const auto out = verify::theorem2(1023);
    h.criterion(3, "orbits reach (0, a+b) within bitlen(max(a,b)) steps, a,b in [0,1023]",
                out.passed, outcome_details(out));
}

void check_width_bound(harness& h) {
    const auto out = verify::lemma1(10);
    h.criterion(4, "orbit states of n-bit inputs stay below 2^(n+1), n in [1,10]",
                out.passed, outcome_details(out));
}

void check_zero_propagation(harness& h) {
    const auto out = verify::lemma2(255);
    h.criterion(5,
                "carry zero digits propagate and the growing-string zero count strictly "
                "increases, a,b in [0,255]",
                out.passed, outcome_details(out));
}

void check_mcvt_collapse(harness& h) {
    const auto out = verify::theorem3(1023, bases_2_to_10());
    h.criterion(6, "MCVT reaches zero within two steps, a,b in [0,1023], bases 2..10",
                out.passed, outcome_details(out));
}

void check_census_lists(harness& h) {
    // Published per-class cardinalities, asserted verbatim. The n=5 entries
    // 263 and 133 below cannot be produced by any correct implementation:
    // the table is symmetric with an all-ones diagonal, so every class past
    // the first has even cardinality. The computed census is
    // {274, 306, 264, 132, 48}; the mismatch is reported, not reconciled.
    const std::map<std::size_t, std::uint64_t> expected[] = {
        {{1, 4}},
        {{1, 12}, {2, 4}},
        {{1, 34}, {2, 18}, {3, 12}},
        {{1, 96}, {2, 78}, {3, 58}, {4, 24}},
        {{1, 274}, {2, 306}, {3, 263}, {4, 133}, {5, 48}},
    };
    bool ok = true;
    std::vector<std::string> details;
    for (std::size_t n = 1; n <= 5; ++n) {
        const class_census c = census(n);
        std::uint64_t total = 0;
        for (const auto& [count, info] : c.classes)
            total += info.cardinality;
        if (total != std::uint64_t{1} << (2 * n)) {
            ok = false;
            details.push_back("n=" + std::to_string(n) + ": census sums to " +
                              std::to_string(total) + ", not 4^n");
        }
        if (c.classes.size() != expected[n - 1].size()) {
            ok = false;
            details.push_back("n=" + std::to_string(n) + ": class count differs");
            continue;
        }
        for (const auto& [count, cardinality] : expected[n - 1]) {
            const std::uint64_t actual = c.classes.at(count).cardinality;
            if (actual != cardinality) {
                ok = false;
                details.push_back("n=" + std::to_string(n) + " class " +
                                  std::to_string(count) + ": computed " +
                                  std::to_string(actual) + ", published " +
                                  std::to_string(cardinality));
            }
        }
    }
    if (!ok)
        details.push_back("note: a symmetric table with an all-ones diagonal forces even "
                          "cardinalities past class 1, so the published odd n=5 entries "
                          "263/133 are unreachable; computed 264/132");
    h.criterion(7, "class cardinalities match the published lists verbatim, n in [1,5]",
                ok, details);
}

void check_counting_formulas(harness& h) {
    bool ok = true;
    std::vector<std::string> details;
    for (std::size_t n = 1; n <= 8; ++n) {
        const std::uint64_t actual = count_one_iteration_pairs(n);
        const std::uint64_t predicted = predicted_one_iteration_pairs(n);
        if (actual != predicted) {
            ok = false;
            details.push_back("count-1 pairs at n=" + std::to_string(n) + ": " +
                              std::to_string(actual) + " vs 3^n+2^n-1 = " +
                              std::to_string(predicted));
        }
    }
    for (std::size_t n = 3; n <= 8; ++n) {
        const std::uint64_t actual = count_max_iteration_pairs(n);
        const std::uint64_t predicted = predicted_max_iteration_pairs(n);
        if (actual != predicted) {
            ok = false;
            details.push_back("count-n pairs at n=" + std::to_string(n) + ": " +
                              std::to_string(actual) + " vs 3*2^(n-1) = " +
                              std::to_string(predicted));
        }
    }
    details.push_back("n in [6,8] verified as extrapolation beyond the published range");
    h.criterion(8, "counting formulas 3^n+2^n-1 (n in [1,8]) and 3*2^(n-1) (n in [3,8])",
                ok, details);
}

void check_table_structure(harness& h) {
    bool ok = true;
    std::vector<std::string> details;

    const iteration_table t5 = build_table(5);
    if (!check_symmetry(t5)) {
        ok = false;
        details.push_back("n=5 table is not symmetric");
    }
    for (std::size_t depth : {std::size_t{1}, std::size_t{2}}) {
        const quadrant_report report = check_quadrant_self_similarity(t5, depth);
        if (!report.all_equal()) {
            ok = false;
            details.push_back("self-similarity fails at depth " + std::to_string(depth));
        }
    }
    for (std::size_t n = 2; n <= 8; ++n) {
        if (!check_no_max_in_quadrant(n)) {
            ok = false;
            details.push_back("count n found in the upper-left quadrant at n=" +
                              std::to_string(n));
        }
        const iteration_table big = build_table(n);
        const iteration_table smaller = build_table(n - 1);
        bool nested = true;
        for (std::size_t a = 0; a < smaller.side() && nested; ++a)
            for (std::size_t b = 0; b < smaller.side() && nested; ++b)
                nested = big.at(a, b) == smaller.at(a, b);
        if (!nested) {
            ok = false;
            details.push_back("upper-left block of n=" + std::to_string(n) +
                              " differs from the n-1 table");
        }
    }
    h.criterion(9,
                "table structure: symmetry (n=5), self-similarity depths 1-2, no max in "
                "the upper-left quadrant and block nesting for n in [2,8]",
                ok, details);
}

void check_hamming_report(harness& h) {
    const auto out = verify::hamming_note(1023);
    std::vector<std::string> details = outcome_details(out);
    details.push_back(out.violations == 0
                          ? "no violations to report"
                          : "violations reported above (claim is unproven; report-only)");
    h.criterion(10,
                "report: carry zero within hamming distance + 2 steps, and in one step "
                "at full-width distance, a,b in [0,1023]",
                out.passed, details);
}

void check_cli_contract(harness& h, const std::string& cli_path) {
    bool ok = true;
    std::vector<std::string> details;
    const std::string cli = "'" + cli_path + "'";

    const auto table1 = subprocess::run(cli + " table 1 --format csv");
    if (table1.status != 0 || table1.output != "a\\b,0,1\n0,1,1\n1,1,1\n") {
        ok = false;
        details.push_back("table 1 csv does not match the golden three-line document");
    }

    const auto again = subprocess::run(cli + " table 1 --format csv");
    if (again.output != table1.output) {
        ok = false;
        details.push_back("repeated invocation produced different bytes");
    }

    const auto table5 = subprocess::run(cli + " table 5 --format csv");
    bool round_trip = table5.status == 0;
    if (round_trip) {
        try {
            round_trip = parse_table_csv(table5.output) == build_table(5);
        } catch (const error&) {
            round_trip = false;
        }
    }
    if (!round_trip) {
        ok = false;
        details.push_back("table 5 csv did not round-trip to the built table");
    }

    h.criterion(11, "CLI contract: golden csv, byte-identical reruns, csv round-trip", ok,
                details);
}

} // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::fprintf(stderr, "usage: acceptance <path-to-cvt-cli>\n");
        return 2;
    }

    harness h;
    check_sum_identity(h);
    check_golden_orbits(h);
    check_convergence(h);
    check_width_bound(h);
    check_zero_propagation(h);
    check_mcvt_collapse(h);
    check_census_lists(h);
    check_counting_formulas(h);
    check_table_structure(h);
    check_hamming_report(h);
    check_cli_contract(h, argv[1]);

    std::printf("%d/%d criteria passed\n", h.total - h.failures, h.total);
    return h.failures == 0 ? 0 : 1;
}
