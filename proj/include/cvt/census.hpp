#pragma once

/// Census of binary iteration counts over A x A, A = {0, ..., 2^n - 1}:
/// the 2^n x 2^n table of iteration_count(a, b, 2), the equivalence classes
/// of "requires the same number of iterations", and the structural checks
/// on the table (symmetry, off-diagonal quadrant self-similarity, the two
/// closed-form class counts).

#include <cstddef>
#include <cstdint>
#include <map>
#include <thread>
#include <utility>
#include <vector>

#include "cvt/dynamics.hpp"
#include "cvt/errors.hpp"

namespace cvt {

/// Desk-scale guard: 2^24 entries at n = 12.
inline constexpr std::size_t max_table_exponent = 12;

/// Dense 2^n x 2^n matrix of iteration counts, row index = first element of
/// the ordered pair. Counts never exceed n, so a byte per entry suffices.
class iteration_table {
public:
    iteration_table(std::size_t n, std::vector<std::uint8_t> entries)
        : n_(n), side_(std::size_t{1} << n), entries_(std::move(entries)) {}

    std::size_t exponent() const { return n_; }
    std::size_t side() const { return side_; }

    std::uint8_t at(std::size_t a, std::size_t b) const { return entries_[a * side_ + b]; }
    std::uint8_t& at(std::size_t a, std::size_t b) { return entries_[a * side_ + b]; }

    bool operator==(const iteration_table&) const = default;

private:
    std::size_t n_;
    std::size_t side_;
    std::vector<std::uint8_t> entries_;
};

namespace detail {

inline void check_table_exponent(std::size_t n) {
    if (n < 1 || n > max_table_exponent)
        throw range_error("table exponent must be between 1 and 12");
}

} // namespace detail

/// Table of iteration_count(a, b, 2) for all a, b below 2^n. Rows are
/// computed in parallel; each row lands in its own slice, so the result is
/// identical regardless of thread count.
inline iteration_table build_table(std::size_t n) {
    detail::check_table_exponent(n);
    const std::size_t side = std::size_t{1} << n;
    std::vector<std::uint8_t> entries(side * side);

    auto fill_rows = [&](std::size_t row_begin, std::size_t row_end) {
        const radix base{2};
        for (std::size_t a = row_begin; a < row_end; ++a)
            for (std::size_t b = 0; b < side; ++b)
                entries[a * side + b] =
                    static_cast<std::uint8_t>(iteration_count(a, b, base));
    };

    std::size_t workers = std::thread::hardware_concurrency();
    if (workers < 2 || side < 64) {
        fill_rows(0, side);
    } else {
        workers = std::min(workers, side);
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w) {
            std::size_t begin = side * w / workers;
            std::size_t end = side * (w + 1) / workers;
            pool.emplace_back(fill_rows, begin, end);
        }
        for (auto& t : pool)
            t.join();
    }
    return iteration_table(n, std::move(entries));
}

/// Equivalence classes of the relation "(a,b) R (c,d) iff equal iteration
/// count": cardinality and lexicographically smallest member per count.
struct class_census {
    struct class_info {
        std::uint64_t cardinality = 0;
        std::pair<natural, natural> representative{0, 0};
    };

    std::size_t n = 0;
    std::map<std::size_t, class_info> classes; // keyed by iteration count
};

inline class_census census(const iteration_table& t) {
    class_census result;
    result.n = t.exponent();
    for (std::size_t a = 0; a < t.side(); ++a) {
        for (std::size_t b = 0; b < t.side(); ++b) {
            auto [it, inserted] = result.classes.try_emplace(t.at(a, b));
            if (inserted)
                it->second.representative = {a, b};
            ++it->second.cardinality;
        }
    }
    return result;
}

inline class_census census(std::size_t n) { return census(build_table(n)); }

/// True iff entries[a][b] = entries[b][a] everywhere.
inline bool check_symmetry(const iteration_table& t) {
    for (std::size_t a = 0; a < t.side(); ++a)
        for (std::size_t b = a + 1; b < t.side(); ++b)
            if (t.at(a, b) != t.at(b, a))
                return false;
    return true;
}

/// One off-diagonal comparison inside the recursive quadrisection: the
/// block at (row, col) of the given size was split in four, and its
/// upper-right quarter compared elementwise against its lower-left quarter.
struct quadrant_comparison {
    std::size_t level = 0; // 1 = the whole table split once
    std::size_t row = 0;   // origin of the block that was split
    std::size_t col = 0;
    std::size_t block = 0; // side length of the block that was split
    bool equal = false;
};

struct quadrant_report {
    std::size_t n = 0;
    std::size_t depth = 0;
    std::vector<quadrant_comparison> comparisons;

    bool all_equal() const {
        for (const auto& c : comparisons)
            if (!c.equal)
                return false;
        return true;
    }
};

namespace detail {

inline bool blocks_equal(const iteration_table& t, std::size_t row_a, std::size_t col_a,
                         std::size_t row_b, std::size_t col_b, std::size_t size) {
    for (std::size_t i = 0; i < size; ++i)
        for (std::size_t j = 0; j < size; ++j)
            if (t.at(row_a + i, col_a + j) != t.at(row_b + i, col_b + j))
                return false;
    return true;
}

inline void compare_quadrants(const iteration_table& t, std::size_t row, std::size_t col,
                              std::size_t block, std::size_t level, std::size_t depth,
                              quadrant_report& report) {
    if (level > depth || block < 2)
        return;
    const std::size_t half = block / 2;
    // Upper-right quarter vs lower-left quarter of this block.
    bool equal = blocks_equal(t, row, col + half, row + half, col, half);
    report.comparisons.push_back({level, row, col, block, equal});
    compare_quadrants(t, row, col, half, level + 1, depth, report);
    compare_quadrants(t, row, col + half, half, level + 1, depth, report);
    compare_quadrants(t, row + half, col, half, level + 1, depth, report);
    compare_quadrants(t, row + half, col + half, half, level + 1, depth, report);
}

} // namespace detail

/// Recursive self-similarity check. At level 1 the whole table is split in
/// four and the upper-right quadrant compared against the lower-left; each
/// level descends into all four sub-blocks, down to the requested depth.
/// Depth 0 compares nothing and reports vacuous equality.
inline quadrant_report check_quadrant_self_similarity(const iteration_table& t,
                                                      std::size_t depth) {
    if (depth + 1 > t.exponent())
        throw range_error("self-similarity depth must be at most n - 1");
    quadrant_report report;
    report.n = t.exponent();
    report.depth = depth;
    detail::compare_quadrants(t, 0, 0, t.side(), 1, depth, report);
    return report;
}

/// Closed-form prediction 3 * 2^(n-1) for the size of the count-n class
/// (holds for n >= 3).
inline std::uint64_t predicted_max_iteration_pairs(std::size_t n) {
    return 3 * (std::uint64_t{1} << (n - 1));
}

/// Closed-form prediction 3^n + 2^n - 1 for the size of the count-1 class.
inline std::uint64_t predicted_one_iteration_pairs(std::size_t n) {
    std::uint64_t p3 = 1;
    for (std::size_t i = 0; i < n; ++i)
        p3 *= 3;
    return p3 + (std::uint64_t{1} << n) - 1;
}

/// Number of ordered pairs below 2^n whose iteration count is exactly n.
/// Closed form 3 * 2^(n-1) for n >= 3.
inline std::uint64_t count_max_iteration_pairs(std::size_t n) {
    if (n < 1)
        throw range_error("table exponent must be at least 1");
    const iteration_table t = build_table(n);
    std::uint64_t count = 0;
    for (std::size_t a = 0; a < t.side(); ++a)
        for (std::size_t b = 0; b < t.side(); ++b)
            count += t.at(a, b) == n;
    return count;
}

/// Number of ordered pairs below 2^n whose iteration count is 1. Closed
/// form 3^n + 2^n - 1: a AND b = 0 happens 3^n ways, a = b happens 2^n
/// ways, and (0,0) is the overlap.
inline std::uint64_t count_one_iteration_pairs(std::size_t n) {
    if (n < 1)
        throw range_error("table exponent must be at least 1");
    const iteration_table t = build_table(n);
    std::uint64_t count = 0;
    for (std::size_t a = 0; a < t.side(); ++a)
        for (std::size_t b = 0; b < t.side(); ++b)
            count += t.at(a, b) == 1;
    return count;
}

/// True iff the upper-left 2^(n-1) x 2^(n-1) block of the table holds no
/// entry equal to n. That block is the whole table one exponent down, whose
/// counts top out at n - 1.
inline bool check_no_max_in_quadrant(std::size_t n) {
    if (n < 2)
        throw range_error("quadrant check needs n >= 2");
    const iteration_table t = build_table(n);
    const std::size_t half = t.side() / 2;
    for (std::size_t a = 0; a < half; ++a)
        for (std::size_t b = 0; b < half; ++b)
            if (t.at(a, b) == n)
                return false;
    return true;
}

} // namespace cvt
