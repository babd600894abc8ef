#include "fv/farey.hpp"

#include <algorithm>
#include <set>

namespace fv {

namespace {

void check_unit_interval(const Rational& x) {
    if (x < Rational(0) || x >= Rational(1))
        throw std::invalid_argument("farey: x must lie in [0,1)");
}

void check_order(long N) {
    if (N < 1) throw std::invalid_argument("farey: order N must be >= 1");
}

}  // namespace

std::vector<Rational> farey_set(long N) {
    check_order(N);
    std::set<Rational> s;
    for (long q = 1; q <= N; ++q)
        for (long p = 0; p <= q; ++p) s.insert(Rational(p, q));
    return {s.begin(), s.end()};
}

Rational delta_plus(const Rational& x, long N) {
    check_order(N);
    check_unit_interval(x);
    Rational best(2);
    for (long i = 1; i <= N; ++i) {
        Rational cand((x * Rational(i)).floor() + 1, i);
        if (cand < best) best = cand;
    }
    return best;
}

Rational farey_floor(const Rational& x, long N) {
    check_order(N);
    check_unit_interval(x);
    Rational best(-1);
    for (long i = 1; i <= N; ++i) {
        Rational cand((x * Rational(i)).floor(), i);
        if (cand > best) best = cand;
    }
    return best;
}

FareyInterval FareyInterval::containing(const Rational& x, long N) {
    return {farey_floor(x, N), delta_plus(x, N), N};
}

bool gap_empty(const Rational& x, const Rational& x_prime, long N) {
    check_order(N);
    if (x >= x_prime) throw std::invalid_argument("gap_empty: requires x < x'");
    if (x < Rational(0) || x_prime > Rational(1))
        throw std::invalid_argument("gap_empty: requires 0 <= x < x' <= 1");
    for (long i = 1; i <= N; ++i) {
        Int lhs = (x * Rational(i)).floor() + ((Rational(1) - x_prime) * Rational(i)).floor();
        if (lhs != i - 1) return false;
    }
    return true;
}

bool in_bounded_numerator(const Rational& x, long l) {
    if (l < 1) throw std::invalid_argument("in_bounded_numerator: l must be >= 1");
    if (x <= Rational(0) || x >= Rational(1))
        throw std::invalid_argument("in_bounded_numerator: x must lie in (0,1)");
    return x.num() <= l;
}

Int index_of(const Rational& x) { return x.index(); }

}  // namespace fv
