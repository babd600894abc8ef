#include "fv/divcrit.hpp"

#include <doctest.h>

using namespace fv;

namespace {
Rational R(long long n, long long d = 1) { return Rational(n, d); }
Divisor D(const char* s) { return Divisor::parse(s); }
}  // namespace

TEST_CASE("holds_direct_div examples") {
    Divisor delta = D("2/3@P + 1/4@Q + 1/24@R");
    CHECK(holds_direct_div(delta, Divisor(), 6).holds);
    DirectDivResult r = holds_direct_div(delta, Divisor(), 7);
    CHECK_FALSE(r.holds);
    CHECK(r.first_violation == 7);
    CHECK(holds_direct_div(D("1/2@P + 1/2@Q"), Divisor(), 12).holds);
}

TEST_CASE("classify_div examples") {
    DivClassification c = classify_div(D("2/3@P + 1/4@Q + 1/24@R"), Divisor(), 6);
    CHECK(c.holds);
    CHECK(c.rest_ok);
    CHECK(c.top.p == "P");
    CHECK(c.top.delta == R(2, 3));

    CHECK(classify_div(D("3/4@P + 1/8@Q"), Divisor(), 4).holds);
    CHECK_FALSE(classify_div(D("3/4@P + 1/8@Q"), Divisor(), 5).holds);

    // Boundary shape with a nonzero B: case a) of the floor system at P.
    CHECK(classify_div(D("4/5@P + 1/5@Q"), D("1/5@Q"), 5).holds);
}

TEST_CASE("classify_div equals direct evaluation on a grid") {
    // All Deltas on <= 3 points with denominators <= 5 and deg <= 1, B = 0 or
    // the smallest admissible one-point boundary.
    std::vector<Rational> vals;
    for (long q = 2; q <= 5; ++q)
        for (long p = 1; p < q; ++p) vals.push_back(Rational(p, q));
    std::sort(vals.begin(), vals.end());
    vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
    const char* pts[] = {"P", "Q", "R"};
    for (size_t i = 0; i < vals.size(); ++i)
        for (size_t j = i; j <= vals.size(); ++j)
            for (size_t k = j; k <= vals.size(); ++k) {
                Divisor delta;
                delta.set("P", vals[i]);
                if (j < vals.size()) delta.set(pts[1], delta.coeff("Q") + vals[j]);
                if (k < vals.size()) delta.set(pts[2], delta.coeff("R") + vals[k]);
                if (delta.degree() > R(1)) continue;
                for (int bmode = 0; bmode < 2; ++bmode) {
                    Divisor b;
                    if (bmode == 1) b.set("P", vals[i] / R(2));
                    for (long N = 2; N <= 6; ++N) {
                        CHECK(classify_div(delta, b, N).holds == holds_direct_div(delta, b, N).holds);
                        if (b.is_zero())
                            CHECK(classify_div_no_b(delta, N) == holds_direct_div(delta, b, N).holds);
                    }
                }
            }
}

TEST_CASE("vanishing_order frozen values") {
    CHECK(vanishing_order(D("1/2@P + 1/2@Q"), Divisor()) == Nmax::inf());
    CHECK(vanishing_order(D("3/4@P + 1/8@Q"), Divisor()) == Nmax::finite(4));
    CHECK(vanishing_order(D("2/3@P + 1/4@Q + 1/24@R"), Divisor()) == Nmax::finite(6));
    // Single point of coefficient 1 stays empty forever, for any B <= Delta.
    CHECK(vanishing_order(D("1@P"), D("1/3@P")) == Nmax::inf());
    // Two-point degree-1 shape with B on one carrier, within 1/l.
    CHECK(vanishing_order(D("1/2@P + 1/2@Q"), D("1/2@Q")) == Nmax::inf());
    CHECK(vanishing_order(D("2/3@P + 1/3@Q"), D("1/3@Q")) == Nmax::inf());
    // Same shape but B too large on the carrier of the top coefficient.
    CHECK_FALSE(vanishing_order(D("2/3@P + 1/3@Q"), D("1/2@P")).infinite);
}

TEST_CASE("vanishing_order agrees with classify_div cutoffs") {
    Divisor delta = D("3/4@P + 1/8@Q");
    Nmax n = vanishing_order(delta, Divisor());
    CHECK(classify_div(delta, Divisor(), n.value).holds);
    CHECK_FALSE(classify_div(delta, Divisor(), n.value + 1).holds);
}

TEST_CASE("equality_profile") {
    CHECK_FALSE(equality_profile(D("1/2@P + 1/2@Q"), 2));  // deg floor(2*Delta) = 2, not 1
    CHECK(equality_profile(D("4/5@P + 1/5@Q"), 4));
    CHECK(equality_profile(D("5/6@P"), 5));
    CHECK_FALSE(equality_profile(D("5/6@P"), 7));
}
