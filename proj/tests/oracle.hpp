#pragma once

// Independent reference routes used only by tests. These deliberately avoid
// the library's weight-accumulation loops: digits are extracted into arrays
// and values rebuilt by Horner evaluation from the most-significant end, so
// a shared bug would have to be present in two different formulations.

#include <algorithm>
#include <cstdint>
#include <vector>

namespace oracle {

using u64 = std::uint64_t;

inline std::vector<u64> digits_lsb_first(u64 n, u64 beta) {
    std::vector<u64> digits;
    for (; n != 0; n /= beta)
        digits.push_back(n % beta);
    return digits;
}

// Horner evaluation, most-significant digit first.
inline u64 value_of(const std::vector<u64>& digits_lsb, u64 beta) {
    u64 acc = 0;
    for (auto it = digits_lsb.rbegin(); it != digits_lsb.rend(); ++it)
        acc = acc * beta + *it;
    return acc;
}

// Column-by-column carry indicators of a schoolbook addition, shifted one
// column left.
inline u64 carry_value(u64 a, u64 b, u64 beta) {
    auto da = digits_lsb_first(a, beta);
    auto db = digits_lsb_first(b, beta);
    const std::size_t width = std::max(da.size(), db.size());
    da.resize(width, 0);
    db.resize(width, 0);
    std::vector<u64> carries(width + 1, 0);
    for (std::size_t i = 0; i < width; ++i)
        carries[i + 1] = da[i] + db[i] >= beta ? 1 : 0;
    return value_of(carries, beta);
}

inline u64 modified_carry_value(u64 a, u64 b, u64 beta) {
    auto da = digits_lsb_first(a, beta);
    auto db = digits_lsb_first(b, beta);
    const std::size_t width = std::max(da.size(), db.size());
    da.resize(width, 0);
    db.resize(width, 0);
    std::vector<u64> carries(width, 0);
    for (std::size_t i = 0; i < width; ++i)
        carries[i] = da[i] + db[i] >= beta ? 1 : 0;
    return value_of(carries, beta);
}

inline u64 digit_xor(u64 a, u64 b, u64 beta) {
    auto da = digits_lsb_first(a, beta);
    auto db = digits_lsb_first(b, beta);
    const std::size_t width = std::max(da.size(), db.size());
    da.resize(width, 0);
    db.resize(width, 0);
    std::vector<u64> sums(width, 0);
    for (std::size_t i = 0; i < width; ++i)
        sums[i] = (da[i] + db[i]) % beta;
    return value_of(sums, beta);
}

// Bit-pair comparison without XOR or popcount.
inline std::size_t hamming_distance(u64 a, u64 b) {
    std::size_t count = 0;
    while (a != 0 || b != 0) {
        count += (a & 1) != (b & 1);
        a >>= 1;
        b >>= 1;
    }
    return count;
}

} // namespace oracle
