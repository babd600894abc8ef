#include "fv/extremal.hpp"

#include "fv/farey.hpp"

#include <doctest.h>

using namespace fv;

namespace {

Rational R(long long n, long long d = 1) { return Rational(n, d); }

/// Independent oracle for the pair failure index: the unique N with
/// x+_{N+1} + y < 1 <= x+_N + y, where the successor x+ is found by scanning
/// the materialized Farey set rather than by the closed-form minimum.
long n_pair_oracle(const Rational& x, const Rational& y) {
    auto successor = [&](long N) {
        for (const Rational& f : farey_set(N))
            if (f > x) return f;
        return R(1);
    };
    long N = 1;
    while (successor(N + 1) + y >= R(1)) ++N;
    return N;
}

}  // namespace

TEST_CASE("n_single") {
    CHECK(n_single(R(1, 2)) == 2);
    CHECK(n_single(R(4, 5)) == 5);  // l/(l+1) at l = 4 attains the bound l+1
    CHECK(n_single(R(2, 5)) == 1);
    // Closed form floor(1/(1-x)) on a grid.
    for (long num = 1; num < 24; ++num) {
        Rational x(num, 24);
        CHECK(n_single(x) == static_cast<long>((R(1) / (R(1) - x)).floor()));
    }
}

TEST_CASE("n_pair frozen values") {
    CHECK(n_pair(R(1, 2), R(1, 3)) == 4);
    CHECK(n_pair(R(1, 3), R(1, 4)) == 1);  // x < 1/2 forces N = 1
    // The l = 2 pattern pair (2/3, 2/7) attains (l+1)^2 = 9; the nearby
    // (2/3, 2/11) does not (3/4 + 2/11 < 1 already at N = 4).
    CHECK(n_pair(R(2, 3), R(2, 7)) == 9);
    CHECK(n_pair(R(2, 3), R(2, 11)) == 3);
    CHECK(n_pair(R(2, 3), R(2, 11)) == n_pair_oracle(R(2, 3), R(2, 11)));
}

TEST_CASE("n_pair equals the successor oracle on a grid") {
    for (long xd = 2; xd <= 9; ++xd)
        for (long xn = 1; xn < xd; ++xn)
            for (long yd = 2; yd <= 9; ++yd)
                for (long yn = 1; yn < yd; ++yn) {
                    Rational x(xn, xd), y(yn, yd);
                    if (y > x || x + y >= R(1)) continue;
                    CHECK(n_pair(x, y) == n_pair_oracle(x, y));
                }
}

TEST_CASE("max_over_pairs table") {
    for (long l = 1; l <= 3; ++l) {
        ExtremalRecord rec = max_over_pairs(l, 2 * (l * l + l + 1));
        CHECK(rec.l == l);
        CHECK(rec.n_max == (l + 1) * (l + 1));
        REQUIRE(rec.argmax_pairs.size() == 1);
        CHECK(rec.argmax_pairs[0].first == Rational(l, l + 1));
        CHECK(rec.argmax_pairs[0].second == Rational(l, l * l + l + 1));
    }
    CHECK_THROWS_AS(max_over_pairs(2, 6), std::invalid_argument);  // box misses the extremal pair
}

TEST_CASE("complementary_pairs") {
    using P = std::vector<std::pair<long, long>>;
    CHECK(complementary_pairs(1) == P{{1, 2}});
    CHECK(complementary_pairs(2) == P{{1, 2}, {2, 3}});
    CHECK(complementary_pairs(3) == P{{1, 2}, {2, 3}, {3, 4}, {3, 5}});
    // Contract: reduced, p <= l, p < q <= 2p, and both p/q, (q-p)/q have
    // numerator <= l with sum exactly 1.
    for (auto [p, q] : complementary_pairs(5)) {
        CHECK(p <= 5);
        CHECK(p < q);
        CHECK(q <= 2 * p);
        CHECK(in_bounded_numerator(Rational(p, q), 5));
        CHECK(in_bounded_numerator(Rational(q - p, q), 5));
        CHECK(Rational(p, q) + Rational(q - p, q) == R(1));
    }
}

TEST_CASE("bounded_numerator_set") {
    std::vector<Rational> s = bounded_numerator_set(1, 6);
    CHECK(s == std::vector<Rational>{R(1, 6), R(1, 5), R(1, 4), R(1, 3), R(1, 2)});
    // Membership test agrees with the predicate.
    s = bounded_numerator_set(3, 11);
    for (const Rational& x : s) CHECK(in_bounded_numerator(x, 3));
    for (long q = 2; q <= 11; ++q)
        for (long p = 1; p < q; ++p) {
            Rational x(p, q);
            bool in = std::find(s.begin(), s.end(), x) != s.end();
            CHECK(in == in_bounded_numerator(x, 3));
        }
    // Sorted ascending.
    CHECK(std::is_sorted(s.begin(), s.end()));
}
