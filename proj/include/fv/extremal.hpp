#pragma once

#include "fv/rational.hpp"

#include <utility>
#include <vector>

namespace fv {

struct ExtremalRecord {
    long l = 0;
    long n_max = 0;
    std::vector<std::pair<Rational, Rational>> argmax_pairs;
};

/// The unique N with x+_{N+1} < 1 <= x+_N, equal to floor(1/(1-x)).
/// Requires 0 < x < 1.
long n_single(const Rational& x);

/// The unique N with x+_{N+1} + y < 1 <= x+_N + y, found by ascending search.
/// Requires 1 > x >= y > 0 and x + y < 1.
long n_pair(const Rational& x, const Rational& y);

/// Maximizes n_pair over pairs x >= y in the bounded-numerator set (numerators
/// <= l) with x + y < 1 and denominators <= search_denominator_bound. The
/// bound must be at least l^2 + l + 1 so the extremal pair is inside the box.
ExtremalRecord max_over_pairs(long l, long search_denominator_bound);

/// All reduced (p, q) with 1 <= p <= l, p < q <= 2p: the pairs x = p/q,
/// y = (q-p)/q with x >= y, both of numerator <= l, and x + y = 1.
std::vector<std::pair<long, long>> complementary_pairs(long l);

/// Ascending enumeration of the numerator-bounded set: reduced p/q in (0,1)
/// with p <= l and q <= max_denominator.
std::vector<Rational> bounded_numerator_set(long l, long max_denominator);

}  // namespace fv
