#include "fv/farey.hpp"

#include <doctest.h>

#include <set>

using namespace fv;

namespace {

Rational R(long long n, long long d = 1) { return Rational(n, d); }

/// Independent construction of the order-N set: collect i^-1 Z directly.
std::set<Rational> reference_set(long N) {
    std::set<Rational> s;
    for (long i = 1; i <= N; ++i)
        for (long k = 0; k <= i; ++k) s.insert(Rational(k, i));
    return s;
}

}  // namespace

TEST_CASE("farey_set small orders") {
    CHECK(farey_set(1) == std::vector<Rational>{R(0), R(1)});
    CHECK(farey_set(3) == std::vector<Rational>{R(0), R(1, 3), R(1, 2), R(2, 3), R(1)});
    CHECK(farey_set(4) ==
          std::vector<Rational>{R(0), R(1, 4), R(1, 3), R(1, 2), R(2, 3), R(3, 4), R(1)});
    CHECK_THROWS_AS(farey_set(0), std::invalid_argument);
}

TEST_CASE("farey_set equals the direct union for N <= 20") {
    for (long N = 1; N <= 20; ++N) {
        std::set<Rational> ref = reference_set(N);
        std::vector<Rational> got = farey_set(N);
        CHECK(got.size() == ref.size());
        CHECK(std::set<Rational>(got.begin(), got.end()) == ref);
    }
}

TEST_CASE("delta_plus examples and scan oracle") {
    CHECK(delta_plus(R(0), 7) == R(1, 7));
    CHECK(delta_plus(R(2, 5), 3) == R(1, 2));
    CHECK(delta_plus(R(3, 4), 5) == R(4, 5));
    // Oracle: least set element strictly above x, by scanning the set.
    for (long N = 1; N <= 12; ++N) {
        std::vector<Rational> fs = farey_set(N);
        for (long num = 0; num < 24; ++num) {
            Rational x(num, 24);
            if (x >= R(1)) break;
            Rational expect(1);
            for (auto it = fs.rbegin(); it != fs.rend(); ++it)
                if (*it > x) expect = *it;
            CHECK(delta_plus(x, N) == expect);
        }
    }
}

TEST_CASE("farey_floor examples") {
    CHECK(farey_floor(R(2, 5), 3) == R(1, 3));
    CHECK(farey_floor(R(1, 2), 4) == R(1, 2));  // set elements are their own floor
    CHECK(farey_floor(R(9, 10), 3) == R(2, 3));
    // Floor and strict successor bracket x.
    for (long N = 1; N <= 10; ++N)
        for (long num = 0; num < 30; ++num) {
            Rational x(num, 30);
            if (x >= R(1)) break;
            CHECK(farey_floor(x, N) <= x);
            CHECK(delta_plus(x, N) > x);
        }
}

TEST_CASE("gap_empty matches set membership") {
    CHECK(gap_empty(R(1, 3), R(1, 2), 4));
    CHECK_FALSE(gap_empty(R(1, 3), R(1, 2), 5));  // 2/5 enters at order 5
    CHECK(gap_empty(R(0), R(1), 1));
    // Oracle on a grid of candidate gaps.
    for (long N = 1; N <= 8; ++N) {
        std::set<Rational> ref = reference_set(N);
        for (long a = 0; a < 12; ++a)
            for (long b = a + 1; b <= 12; ++b) {
                Rational x(a, 12), xp(b, 12);
                bool expect = true;
                for (const Rational& f : ref)
                    if (x < f && f < xp) expect = false;
                CHECK(gap_empty(x, xp, N) == expect);
            }
    }
}

TEST_CASE("FareyInterval::containing") {
    FareyInterval iv = FareyInterval::containing(R(2, 5), 3);
    CHECK(iv.lo == R(1, 3));
    CHECK(iv.hi == R(1, 2));
    CHECK(iv.order == 3);
    iv = FareyInterval::containing(R(1, 2), 3);  // set elements start their own gap
    CHECK(iv.lo == R(1, 2));
    CHECK(iv.hi == R(2, 3));
}

TEST_CASE("in_bounded_numerator") {
    CHECK_FALSE(in_bounded_numerator(R(3, 7), 2));
    CHECK(in_bounded_numerator(R(3, 7), 3));
    CHECK(in_bounded_numerator(R(5, 6), 5));  // l/(l+1) at l = 5
    CHECK(in_bounded_numerator(R(1, 100), 1));
    CHECK_FALSE(in_bounded_numerator(R(97, 100), 5));
}

TEST_CASE("index_of") {
    CHECK(index_of(R(1, 2)) == 2);
    CHECK(index_of(R(2, 3)) == 3);
    CHECK(index_of(R(4, 6)) == 3);
    CHECK(index_of(R(0)) == 1);
}
