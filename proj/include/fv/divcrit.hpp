#pragma once

#include "fv/divisor.hpp"
#include "fv/floorcrit.hpp"

#include <string>

namespace fv {

/// N, or infinity.
struct Nmax {
    bool infinite = false;
    long value = 0;

    static Nmax inf() { return {true, 0}; }
    static Nmax finite(long n) { return {false, n}; }
    bool at_least(long n) const { return infinite || value >= n; }
    friend bool operator==(const Nmax&, const Nmax&) = default;
    std::string str() const { return infinite ? "inf" : std::to_string(value); }
};

struct DirectDivResult {
    bool holds = false;
    long first_violation = 0;
};

/// Direct evaluation of deg floor(i*Delta - B) >= i-1 for all 1 <= i <= N.
/// Requires 0 <= B <= Delta pointwise, floor(Delta) = 0, deg Delta <= 1, N >= 2.
DirectDivResult holds_direct_div(const Divisor& delta, const Divisor& b, long N);

struct DivClassification {
    bool holds = false;
    bool rest_ok = false;  // floor(N * Delta'') = 0
    TopCoefficients top;
    CrtClassification crt;
};

/// Closed form: holds iff floor(N*Delta'') = 0 and the two-variable floor
/// system holds for the top two coefficients (with their B parts).
DivClassification classify_div(const Divisor& delta, const Divisor& b, long N);

/// B = 0 shortcut: holds iff floor(N*Delta'') = 0 and delta+_N + delta' >= 1.
bool classify_div_no_b(const Divisor& delta, long N);

/// Largest N >= 1 with deg floor(i*Delta - B) >= i-1 for all i <= N, or
/// infinity. Requires Delta >= 0, deg Delta <= 1, 0 <= B <= Delta. The
/// infinite shapes are pattern-matched in closed form; finite answers are
/// found by ascending search.
Nmax vanishing_order(const Divisor& delta, const Divisor& b);

/// True iff deg floor(i*Delta) = i-1 exactly for all 1 <= i <= N.
/// Requires Delta >= 0, floor(Delta) = 0, deg Delta <= 1.
bool equality_profile(const Divisor& delta, long N);

}  // namespace fv
