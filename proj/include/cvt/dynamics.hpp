#pragma once

/// The discrete dynamical system f(a, b) = (CVT(a, b), a XOR b).
///
/// Repeated application from any binary pair (x0, y0) reaches the fixed
/// point (0, x0 + y0): the component sum is invariant step to step, and in
/// base 2 the carry component dies out within bitlen(max(x0, y0)) + 1
/// steps. The MCVT variant (MCVT(a,b), a XOR b) collapses to a zero first
/// component within two steps in every base.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <optional>
#include <vector>

#include "cvt/digits.hpp"
#include "cvt/errors.hpp"

namespace cvt {

/// One point of the dynamical system: current carry value and XOR value.
struct pair_state {
    natural c = 0;
    natural x = 0;

    bool operator==(const pair_state&) const = default;
};

enum class stop_reason {
    cvt_zero,                // carry component reached 0 at the counted step
    xor_zero_then_cvt_zero,  // XOR hit 0 first; one more step zeroed the carry
    cap_exceeded,            // iteration cap ran out before the fixed point
};

struct stop_report {
    stop_reason reason = stop_reason::cvt_zero;
    std::size_t steps_taken = 0;
};

/// Trajectory of the scheme from an initial pair. states[0] is the first
/// image of f; the initial pair itself is not recorded. iteration_count is
/// the first step at which either component is zero, the quantity the
/// census tabulates. When the XOR component hits zero first, the orbit runs
/// exactly one more step so the terminal state still has a zero carry
/// component.
struct orbit_result {
    natural x0 = 0;
    natural y0 = 0;
    natural beta = 2;
    std::vector<pair_state> states;
    std::optional<std::size_t> iteration_count;
    stop_report stop;

    bool converged() const { return stop.reason != stop_reason::cap_exceeded; }

    /// Fixed point reached; only meaningful when converged.
    const pair_state& terminal() const { return states.back(); }
};

/// One application of f.
inline pair_state step(const pair_state& s, radix base) {
    return {carry_value(s.c, s.x, base), digit_xor(s.c, s.x, base)};
}

/// One application of the MCVT variant (MCVT(c,x), c XOR x). The component
/// sum is not preserved here.
inline pair_state mcvt_step(const pair_state& s, radix base) {
    return {modified_carry_value(s.c, s.x, base), digit_xor(s.c, s.x, base)};
}

/// Binary string length of the larger operand, with bitlen(0) defined as 1.
/// Proven upper bound on iteration_count in base 2.
inline std::size_t iteration_bound(natural a, natural b) {
    natural m = std::max(a, b);
    return m == 0 ? 1 : static_cast<std::size_t>(std::bit_width(m));
}

/// Default orbit cap: iteration_bound + 2 covers base 2 with room for the
/// post-XOR-zero step. Convergence is only proven in base 2, so wider
/// radices get a generous 4 * digit_length allowance instead.
inline std::size_t default_cap(natural x0, natural y0, radix base) {
    if (base.is_binary())
        return iteration_bound(x0, y0) + 2;
    std::size_t len = std::max<std::size_t>(digit_length(std::max(x0, y0), base), 1);
    return 4 * len;
}

/// Full orbit of (x0, y0) under f. Applies at most `cap` steps; if the
/// carry component is still nonzero when the cap runs out, the partial
/// trajectory is returned with stop_reason::cap_exceeded.
inline orbit_result orbit(natural x0, natural y0, radix base, std::size_t cap) {
    orbit_result result;
    result.x0 = x0;
    result.y0 = y0;
    result.beta = base.value();
    pair_state s{x0, y0};
    for (std::size_t i = 1; i <= cap; ++i) {
        s = step(s, base);
        result.states.push_back(s);
        if (!result.iteration_count && (s.c == 0 || s.x == 0))
            result.iteration_count = i;
        if (s.c == 0) {
            result.stop = {*result.iteration_count == i ? stop_reason::cvt_zero
                                                        : stop_reason::xor_zero_then_cvt_zero,
                           i};
            return result;
        }
    }
    result.stop = {stop_reason::cap_exceeded, cap};
    return result;
}

inline orbit_result orbit(natural x0, natural y0, radix base) {
    return orbit(x0, y0, base, default_cap(x0, y0, base));
}

/// First step at which either component of the orbit is zero.
inline std::size_t iteration_count(natural a, natural b, radix base, std::size_t cap) {
    pair_state s{a, b};
    for (std::size_t i = 1; i <= cap; ++i) {
        s = step(s, base);
        if (s.c == 0 || s.x == 0)
            return i;
    }
    throw cap_exceeded("orbit did not reach a zero component within the cap");
}

inline std::size_t iteration_count(natural a, natural b, radix base) {
    return iteration_count(a, b, base, default_cap(a, b, base));
}

/// Orbit of the MCVT variant, run until the first component is zero. Two
/// steps always suffice: the second MCVT works on a 0/1 carry string whose
/// set positions meet XOR digits of at most beta - 2.
inline orbit_result mcvt_orbit(natural a, natural b, radix base) {
    orbit_result result;
    result.x0 = a;
    result.y0 = b;
    result.beta = base.value();
    pair_state s{a, b};
    // A count past two contradicts the collapse argument; treat it as an
    // internal bug rather than iterating on.
    for (std::size_t i = 1; i <= 2; ++i) {
        s = mcvt_step(s, base);
        result.states.push_back(s);
        if (s.c == 0) {
            result.iteration_count = i;
            result.stop = {stop_reason::cvt_zero, i};
            return result;
        }
    }
    throw error("internal error: MCVT failed to collapse within two steps");
}

/// Smallest number of mcvt_step applications after which the first
/// component is zero; at most 2 in every base.
inline std::size_t mcvt_iterations_to_zero(natural a, natural b, radix base) {
    return *mcvt_orbit(a, b, base).iteration_count;
}

} // namespace cvt
