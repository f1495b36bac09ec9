#pragma once

/// Radix-beta digit representations of natural numbers and the digitwise
/// transformations built on them: the carry value transformation (CVT), its
/// modified form (MCVT), and the generalized digitwise XOR.
///
/// For two numbers a, b written with the same number of base-beta digits,
///   CVT(a,b)  = the number whose digit at position k+1 is 1 where
///               a_k + b_k >= beta (the carry indicator), with a 0 appended
///               at position 0,
///   MCVT(a,b) = the same carry string without the appended zero,
///               so CVT(a,b) = beta * MCVT(a,b),
///   XOR(a,b)  = digitwise (a_k + b_k) mod beta.
/// These satisfy a + b = CVT(a,b) + XOR(a,b) in every base: the carry-save
/// decomposition of addition.

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "cvt/errors.hpp"

namespace cvt {

/// Nonnegative integer. Values are supported up to max_natural; operations
/// whose exact result would exceed it throw overflow_error instead of
/// wrapping.
using natural = std::uint64_t;

/// Largest supported value: 2^63 - 1. Results of every operation fit here
/// whenever a + b does, since CVT and XOR are both bounded by a + b.
inline constexpr natural max_natural = (natural{1} << 63) - 1;

/// Number base. Validated on construction: beta >= 2.
class radix {
public:
    explicit constexpr radix(natural beta) : beta_(beta) {
        if (beta < 2)
            throw malformed_input("radix must be at least 2");
    }

    constexpr natural value() const { return beta_; }
    constexpr bool is_binary() const { return beta_ == 2; }

    friend constexpr bool operator==(radix a, radix b) { return a.beta_ == b.beta_; }

private:
    natural beta_;
};

/// Digit string of a natural number, least-significant digit first.
/// Canonical form carries no most-significant zeros; zero is the empty
/// sequence.
struct digit_vector {
    radix base;
    std::vector<natural> digits;

    bool operator==(const digit_vector& other) const {
        return base == other.base && digits == other.digits;
    }
};

namespace detail {

// Accumulate acc + d * weight, throwing instead of wrapping. `weight_valid`
// is false once the running weight has outgrown max_natural; any nonzero
// digit there overflows.
inline void checked_accumulate(natural& acc, natural d, natural weight, bool weight_valid) {
    if (d == 0)
        return;
    if (!weight_valid || d > max_natural / weight)
        throw overflow_error("value exceeds 63-bit range");
    natural term = d * weight;
    if (acc > max_natural - term)
        throw overflow_error("value exceeds 63-bit range");
    acc += term;
}

// Advance weight by one radix step; clears `weight_valid` on overflow.
inline void step_weight(natural& weight, bool& weight_valid, natural beta) {
    if (weight_valid && weight > max_natural / beta)
        weight_valid = false;
    else if (weight_valid)
        weight *= beta;
}

inline void guard_sum(natural a, natural b) {
    if (a > max_natural || b > max_natural || a > max_natural - b)
        throw overflow_error("a + b exceeds 63-bit range");
}

} // namespace detail

/// Base-beta digits of n, least-significant first, zero-padded at the
/// most-significant end up to min_width. Canonical when min_width is 0:
/// no most-significant zeros, and zero becomes the empty sequence.
inline digit_vector to_digits(natural n, radix base, std::size_t min_width = 0) {
    digit_vector dv{base, {}};
    while (n != 0) {
        dv.digits.push_back(n % base.value());
        n /= base.value();
    }
    while (dv.digits.size() < min_width)
        dv.digits.push_back(0);
    return dv;
}

/// Value of a digit string: sum of digits[k] * beta^k. Most-significant
/// zeros are permitted; digits at or above the radix are rejected.
inline natural from_digits(const digit_vector& dv) {
    natural acc = 0;
    natural weight = 1;
    bool weight_valid = true;
    for (natural d : dv.digits) {
        if (d >= dv.base.value())
            throw malformed_input("digit out of range for radix");
        detail::checked_accumulate(acc, d, weight, weight_valid);
        detail::step_weight(weight, weight_valid, dv.base.value());
    }
    return acc;
}

/// Number of base-beta digits of n in canonical form (0 for n = 0).
inline std::size_t digit_length(natural n, radix base) {
    std::size_t len = 0;
    while (n != 0) {
        ++len;
        n /= base.value();
    }
    return len;
}

/// Digit string rendered most-significant first, the way numbers are
/// written. Digits above 9 (radix > 10) are printed as decimal values
/// separated by ':'. Zero renders as "0".
inline std::string format_digits(const digit_vector& dv) {
    if (dv.digits.empty())
        return "0";
    std::string out;
    bool wide = dv.base.value() > 10;
    for (auto it = dv.digits.rbegin(); it != dv.digits.rend(); ++it) {
        if (wide && !out.empty())
            out += ':';
        out += wide ? std::to_string(*it) : std::string(1, char('0' + *it));
    }
    return out;
}

/// Generic digit-loop implementations, valid for every radix. The public
/// entry points below dispatch to bitwise fast paths when beta = 2; these
/// remain the reference route and the cross-check target.
namespace digitwise {

/// Carry value transformation: carry indicators shifted one position left.
inline natural carry_value(natural a, natural b, radix base) {
    detail::guard_sum(a, b);
    const natural beta = base.value();
    natural acc = 0;
    natural weight = beta; // weight of position k+1
    bool weight_valid = true;
    while (a != 0 || b != 0) {
        natural da = a % beta;
        natural db = b % beta;
        if (da + db >= beta)
            detail::checked_accumulate(acc, 1, weight, weight_valid);
        detail::step_weight(weight, weight_valid, beta);
        a /= beta;
        b /= beta;
    }
    return acc;
}

/// Modified carry value transformation: the carry string unshifted.
inline natural modified_carry_value(natural a, natural b, radix base) {
    detail::guard_sum(a, b);
    const natural beta = base.value();
    natural acc = 0;
    natural weight = 1;
    bool weight_valid = true;
    while (a != 0 || b != 0) {
        natural da = a % beta;
        natural db = b % beta;
        if (da + db >= beta)
            detail::checked_accumulate(acc, 1, weight, weight_valid);
        detail::step_weight(weight, weight_valid, beta);
        a /= beta;
        b /= beta;
    }
    return acc;
}

/// Generalized XOR: digitwise sum modulo beta.
inline natural digit_xor(natural a, natural b, radix base) {
    detail::guard_sum(a, b);
    const natural beta = base.value();
    natural acc = 0;
    natural weight = 1;
    bool weight_valid = true;
    while (a != 0 || b != 0) {
        natural da = a % beta;
        natural db = b % beta;
        detail::checked_accumulate(acc, (da + db) % beta, weight, weight_valid);
        detail::step_weight(weight, weight_valid, beta);
        a /= beta;
        b /= beta;
    }
    return acc;
}

} // namespace digitwise

/// CVT(a, b) in the given base. In base 2 this is (a AND b) shifted left.
inline natural carry_value(natural a, natural b, radix base) {
    if (base.is_binary()) {
        detail::guard_sum(a, b);
        return (a & b) << 1;
    }
    return digitwise::carry_value(a, b, base);
}

/// MCVT(a, b): carry_value without the appended zero, so carry_value / beta.
inline natural modified_carry_value(natural a, natural b, radix base) {
    if (base.is_binary()) {
        detail::guard_sum(a, b);
        return a & b;
    }
    return digitwise::modified_carry_value(a, b, base);
}

/// Generalized XOR of a and b in the given base; bitwise XOR when beta = 2.
inline natural digit_xor(natural a, natural b, radix base) {
    if (base.is_binary()) {
        detail::guard_sum(a, b);
        return a ^ b;
    }
    return digitwise::digit_xor(a, b, base);
}

/// Ordinary machine addition, the independent oracle for the identity
/// a + b = CVT(a,b) + XOR(a,b). Never routed through the transformations.
inline natural reference_add(natural a, natural b) {
    detail::guard_sum(a, b);
    return a + b;
}

/// Number of bit positions at which the width-aligned binary strings of a
/// and b differ; equals the population count of digit_xor(a, b, 2).
inline std::size_t hamming_distance(natural a, natural b) {
    return static_cast<std::size_t>(std::popcount(a ^ b));
}

} // namespace cvt
