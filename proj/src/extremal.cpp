#include "fv/extremal.hpp"

#include "fv/farey.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace fv {

long n_single(const Rational& x) {
    if (x <= Rational(0) || x >= Rational(1))
        throw std::invalid_argument("n_single: requires 0 < x < 1");
    return static_cast<long>((Rational(1) / (Rational(1) - x)).floor());
}

long n_pair(const Rational& x, const Rational& y) {
    if (!(Rational(1) > x && x >= y && y > Rational(0)))
        throw std::invalid_argument("n_pair: requires 1 > x >= y > 0");
    if (!(x + y < Rational(1))) throw std::invalid_argument("n_pair: requires x + y < 1");
    // x+_1 = 1, so N = 1 always qualifies; x+_M decreases to x with x + y < 1,
    // so the search terminates.
    long n = 1;
    while (delta_plus(x, n + 1) + y >= Rational(1)) ++n;
    return n;
}

std::vector<Rational> bounded_numerator_set(long l, long max_denominator) {
    std::vector<Rational> xs;
    for (long p = 1; p <= l; ++p)
        for (long q = p + 1; q <= max_denominator; ++q)
            if (std::gcd(p, q) == 1) xs.emplace_back(p, q);
    std::sort(xs.begin(), xs.end());
    return xs;
}

ExtremalRecord max_over_pairs(long l, long search_denominator_bound) {
    if (l < 1) throw std::invalid_argument("max_over_pairs: requires l >= 1");
    if (search_denominator_bound < l * l + l + 1)
        throw std::invalid_argument(
            "max_over_pairs: denominator bound below l^2 + l + 1 would miss the extremal pair");

    const std::vector<Rational> xs = bounded_numerator_set(l, search_denominator_bound);
    const long n = static_cast<long>(xs.size());

    ExtremalRecord rec;
    rec.l = l;

#pragma omp parallel
    {
        ExtremalRecord local;
#pragma omp for schedule(dynamic) nowait
        for (long xi = 0; xi < n; ++xi) {
            const Rational& x = xs[xi];
            for (long yi = 0; yi <= xi; ++yi) {
                const Rational& y = xs[yi];
                if (!(x + y < Rational(1))) break;  // xs ascending in y
                long v = n_pair(x, y);
                if (v > local.n_max) {
                    local.n_max = v;
                    local.argmax_pairs = {{x, y}};
                } else if (v == local.n_max) {
                    local.argmax_pairs.emplace_back(x, y);
                }
            }
        }
#pragma omp critical
        {
            if (local.n_max > rec.n_max) {
                rec.n_max = local.n_max;
                rec.argmax_pairs = std::move(local.argmax_pairs);
            } else if (local.n_max == rec.n_max) {
                rec.argmax_pairs.insert(rec.argmax_pairs.end(), local.argmax_pairs.begin(),
                                        local.argmax_pairs.end());
            }
        }
    }
    std::sort(rec.argmax_pairs.begin(), rec.argmax_pairs.end());

    if (rec.n_max > (l + 1) * (l + 1))
        throw std::logic_error("max_over_pairs: bound (l+1)^2 exceeded");
    return rec;
}

std::vector<std::pair<long, long>> complementary_pairs(long l) {
    if (l < 1) throw std::invalid_argument("complementary_pairs: requires l >= 1");
    std::vector<std::pair<long, long>> out;
    for (long p = 1; p <= l; ++p)
        for (long q = p + 1; q <= 2 * p; ++q)
            if (std::gcd(p, q) == 1) out.emplace_back(p, q);
    return out;
}

}  // namespace fv
