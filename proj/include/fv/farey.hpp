#pragma once

#include "fv/rational.hpp"

#include <vector>

namespace fv {

/// Half-open gap [lo, hi) between two consecutive elements of the Farey set
/// of the given order; (lo, hi) contains no further element of that set.
struct FareyInterval {
    Rational lo;
    Rational hi;
    long order;

    /// The unique interval of the order-N decomposition of [0,1) containing x.
    static FareyInterval containing(const Rational& x, long N);
};

/// [0,1] \cap \bigcup_{i<=N} (1/i)Z, sorted ascending. First element 0, last 1.
std::vector<Rational> farey_set(long N);

/// Least element of the order-N Farey set strictly above x. Requires 0 <= x < 1.
/// Computed as min_{1<=i<=N} (1 + floor(i x)) / i, never materializing the set.
Rational delta_plus(const Rational& x, long N);

/// Greatest element of the order-N Farey set that is <= x. Requires 0 <= x < 1.
Rational farey_floor(const Rational& x, long N);

/// True iff the open interval (x, x') misses the order-N Farey set, decided
/// through the identity floor(i x) + floor(i (1 - x')) == i - 1 for i <= N.
bool gap_empty(const Rational& x, const Rational& x_prime, long N);

/// True iff x in (0,1) has a representation p/q with numerator p <= l.
bool in_bounded_numerator(const Rational& x, long l);

/// Smallest l >= 1 with l*x integral.
Int index_of(const Rational& x);

}  // namespace fv
