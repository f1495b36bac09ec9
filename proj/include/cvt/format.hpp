#pragma once

/// Renderers for the file formats the CLI emits: CSV and PGM for the
/// iteration table, text/CSV/JSON for orbits, text/JSON for the census.
/// All output is deterministic byte for byte; nothing here writes
/// timestamps or machine-dependent values.

#include <cstdint>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "cvt/census.hpp"
#include "cvt/digits.hpp"
#include "cvt/dynamics.hpp"
#include "cvt/errors.hpp"

namespace cvt {

using ordered_json = nlohmann::ordered_json;

/// CSV document for an iteration table: header "a\b,0,1,...", one row per
/// a value, comma separated, LF line ends, no trailing separator.
inline std::string table_to_csv(const iteration_table& t) {
    std::string out = "a\\b";
    for (std::size_t b = 0; b < t.side(); ++b) {
        out += ',';
        out += std::to_string(b);
    }
    out += '\n';
    for (std::size_t a = 0; a < t.side(); ++a) {
        out += std::to_string(a);
        for (std::size_t b = 0; b < t.side(); ++b) {
            out += ',';
            out += std::to_string(t.at(a, b));
        }
        out += '\n';
    }
    return out;
}

/// Parse a CSV document produced by table_to_csv back into a table.
inline iteration_table parse_table_csv(std::string_view csv) {
    std::istringstream in{std::string(csv)};
    std::string line;
    if (!std::getline(in, line) || line.rfind("a\\b,", 0) != 0)
        throw malformed_input("table csv: missing a\\b header");

    std::size_t side = 0;
    for (char ch : line)
        side += ch == ',';
    std::size_t n = 0;
    while ((std::size_t{1} << n) < side && n <= max_table_exponent)
        ++n;
    if ((std::size_t{1} << n) != side || n < 1 || n > max_table_exponent)
        throw malformed_input("table csv: column count is not a supported power of two");

    std::vector<std::uint8_t> entries;
    entries.reserve(side * side);
    std::size_t rows = 0;
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        std::istringstream row{line};
        std::string cell;
        if (!std::getline(row, cell, ',') || cell != std::to_string(rows))
            throw malformed_input("table csv: unexpected row label");
        std::size_t cols = 0;
        while (std::getline(row, cell, ',')) {
            int value = 0;
            try {
                value = std::stoi(cell);
            } catch (const std::exception&) {
                throw malformed_input("table csv: entry is not a number");
            }
            if (value < 1 || value > static_cast<int>(n))
                throw malformed_input("table csv: entry out of range for the exponent");
            entries.push_back(static_cast<std::uint8_t>(value));
            ++cols;
        }
        if (cols != side)
            throw malformed_input("table csv: row width mismatch");
        ++rows;
    }
    if (rows != side)
        throw malformed_input("table csv: row count mismatch");
    return iteration_table(n, std::move(entries));
}

namespace detail {

inline std::uint8_t table_pixel(std::uint8_t count, std::uint8_t max_count) {
    if (max_count < 2)
        return 0;
    return static_cast<std::uint8_t>(255u * (count - 1u) / (max_count - 1u));
}

inline std::uint8_t table_max(const iteration_table& t) {
    std::uint8_t m = 0;
    for (std::size_t a = 0; a < t.side(); ++a)
        for (std::size_t b = 0; b < t.side(); ++b)
            m = std::max(m, t.at(a, b));
    return m;
}

} // namespace detail

/// PGM image of a table, width = height = 2^n, maxval 255; counts map to
/// floor(255 * (count-1) / (max-1)), or an all-zero image when every entry
/// is equal. Binary "P5" by default, ASCII "P2" when requested.
inline std::string table_to_pgm(const iteration_table& t, bool ascii = false) {
    const std::uint8_t max_count = detail::table_max(t);
    std::string out = ascii ? "P2\n" : "P5\n";
    out += std::to_string(t.side()) + " " + std::to_string(t.side()) + "\n255\n";
    for (std::size_t a = 0; a < t.side(); ++a) {
        for (std::size_t b = 0; b < t.side(); ++b) {
            std::uint8_t pixel = detail::table_pixel(t.at(a, b), max_count);
            if (ascii) {
                out += std::to_string(pixel);
                out += b + 1 < t.side() ? ' ' : '\n';
            } else {
                out += static_cast<char>(pixel);
            }
        }
    }
    return out;
}

inline std::string format_pair(const pair_state& s) {
    return "(" + std::to_string(s.c) + ", " + std::to_string(s.x) + ")";
}

inline std::string format_pair_digits(const pair_state& s, radix base) {
    return "(" + format_digits(to_digits(s.c, base)) + ", " +
           format_digits(to_digits(s.x, base)) + ")";
}

/// Orbit as a line of (c, x) pairs plus count and terminal lines, the way
/// the tables in the write-ups print them. `digits` switches the pairs to
/// base-beta digit strings.
inline std::string orbit_to_text(const orbit_result& o, bool digits = false) {
    const radix base{o.beta};
    std::string out;
    for (std::size_t i = 0; i < o.states.size(); ++i) {
        if (i > 0)
            out += ", ";
        out += digits ? format_pair_digits(o.states[i], base) : format_pair(o.states[i]);
    }
    out += '\n';
    if (o.converged()) {
        out += "iteration_count = " + std::to_string(*o.iteration_count) + "\n";
        out += "terminal = " +
               (digits ? format_pair_digits(o.terminal(), base) : format_pair(o.terminal())) +
               "\n";
    } else {
        out += "cap exceeded after " + std::to_string(o.stop.steps_taken) + " steps\n";
    }
    return out;
}

/// Orbit as CSV rows step,<label>,xor where label names the first
/// component (cvt or mcvt).
inline std::string orbit_to_csv(const orbit_result& o, std::string_view first_component) {
    std::string out = "step,";
    out += first_component;
    out += ",xor\n";
    for (std::size_t i = 0; i < o.states.size(); ++i)
        out += std::to_string(i + 1) + "," + std::to_string(o.states[i].c) + "," +
               std::to_string(o.states[i].x) + "\n";
    return out;
}

/// Orbit as a single-line JSON object:
/// {"initial":[a,b],"base":B,"states":[[c,x],...],"iteration_count":k,
///  "terminal":[0,s]}. A capped orbit carries "cap_exceeded":true instead
/// of the count and terminal.
inline std::string orbit_to_json(const orbit_result& o) {
    ordered_json j;
    j["initial"] = {o.x0, o.y0};
    j["base"] = o.beta;
    auto states = ordered_json::array();
    for (const auto& s : o.states)
        states.push_back({s.c, s.x});
    j["states"] = std::move(states);
    if (o.converged()) {
        j["iteration_count"] = *o.iteration_count;
        j["terminal"] = {o.terminal().c, o.terminal().x};
    } else {
        j["cap_exceeded"] = true;
    }
    return j.dump() + "\n";
}

/// Census report: per-class cardinalities and representatives, followed by
/// the two closed-form predictions next to the measured counts.
inline std::string census_to_text(const class_census& c) {
    std::string out = "n = " + std::to_string(c.n) + "\n";
    for (const auto& [count, info] : c.classes) {
        out += "class " + std::to_string(count) + ": cardinality " +
               std::to_string(info.cardinality) + ", representative (" +
               std::to_string(info.representative.first) + ", " +
               std::to_string(info.representative.second) + ")\n";
    }
    const auto one = c.classes.count(1) ? c.classes.at(1).cardinality : 0;
    const auto max_it = c.classes.count(c.n) ? c.classes.at(c.n).cardinality : 0;
    out += "one-iteration pairs: actual " + std::to_string(one) +
           ", predicted 3^n + 2^n - 1 = " +
           std::to_string(predicted_one_iteration_pairs(c.n)) + "\n";
    out += "max-iteration pairs: actual " + std::to_string(max_it) +
           ", predicted 3*2^(n-1) = " +
           std::to_string(predicted_max_iteration_pairs(c.n)) + "\n";
    return out;
}

inline std::string census_to_json(const class_census& c) {
    ordered_json j;
    j["n"] = c.n;
    auto classes = ordered_json::array();
    for (const auto& [count, info] : c.classes) {
        ordered_json entry;
        entry["iterations"] = count;
        entry["cardinality"] = info.cardinality;
        entry["representative"] = {info.representative.first, info.representative.second};
        classes.push_back(std::move(entry));
    }
    j["classes"] = std::move(classes);
    const auto one = c.classes.count(1) ? c.classes.at(1).cardinality : 0;
    const auto max_it = c.classes.count(c.n) ? c.classes.at(c.n).cardinality : 0;
    j["one_iteration_pairs"] = {{"actual", one},
                                {"predicted", predicted_one_iteration_pairs(c.n)}};
    j["max_iteration_pairs"] = {{"actual", max_it},
                                {"predicted", predicted_max_iteration_pairs(c.n)}};
    return j.dump() + "\n";
}

/// Report for the compute command: the three transformation values in
/// decimal and base-beta digits, plus the sum identity evaluated both ways.
inline std::string compute_report(natural a, natural b, radix base) {
    const natural c = carry_value(a, b, base);
    const natural m = modified_carry_value(a, b, base);
    const natural x = digit_xor(a, b, base);
    const std::string suffix = ")_" + std::to_string(base.value());
    std::string out;
    out += "a    = " + std::to_string(a) + " (" + format_digits(to_digits(a, base)) + suffix + "\n";
    out += "b    = " + std::to_string(b) + " (" + format_digits(to_digits(b, base)) + suffix + "\n";
    out += "CVT  = " + std::to_string(c) + " (" + format_digits(to_digits(c, base)) + suffix + "\n";
    out += "MCVT = " + std::to_string(m) + " (" + format_digits(to_digits(m, base)) + suffix + "\n";
    out += "XOR  = " + std::to_string(x) + " (" + format_digits(to_digits(x, base)) + suffix + "\n";
    out += "sum check: a+b = " + std::to_string(reference_add(a, b)) + ", CVT+XOR = " +
           std::to_string(c + x) + "\n";
    return out;
}

} // namespace cvt
