#include "fv/basept.hpp"

#include "fv/oracle.hpp"

#include <doctest.h>

using namespace fv;

namespace {

Rational R(long long n, long long d = 1) { return Rational(n, d); }
Divisor D(const char* s) { return Divisor::parse(s); }

CurveModel cyclic(long long t, std::map<std::string, long long> pts) {
    PicardModel m;
    m.group = AbelianGroup{0, {t}};
    for (auto& [name, c] : pts) m.point_classes[name] = m.group.reduce({c});
    return CurveModel::elliptic(std::move(m));
}

bool has_tag(const BaseptClassification& c, const std::string& t) {
    return std::find(c.cases.begin(), c.cases.end(), t) != c.cases.end();
}

}  // namespace

TEST_CASE("duality examples") {
    CurveModel p1 = CurveModel::p1();
    DualityResult r = duality_check(p1, "Q", D("1@P"));  // deg 1: adjoint deg -1
    CHECK(r.in_bs_adjoint);
    CHECK(r.agree());
    r = duality_check(p1, "Q", D("2@P"));  // adjoint deg 0: nonempty and free
    CHECK_FALSE(r.in_bs_adjoint);
    CHECK(r.agree());

    CurveModel e = cyclic(5, {{"P", 1}, {"Q", 0}});
    r = duality_check(e, "Q", D("1@P"));  // K+P ~ P, unique member P != Q
    CHECK_FALSE(r.in_bs_adjoint);
    CHECK(r.agree());
    r = duality_check(e, "Q", D("1@Q"));  // unique member is Q
    CHECK(r.in_bs_adjoint);
    CHECK(r.agree());
    CHECK_THROWS_AS(duality_check(p1, "Q", D("1/2@P")), std::invalid_argument);
}

TEST_CASE("duality agrees across a small exhaustive family") {
    CurveModel e = cyclic(6, {{"P", 1}, {"Q", 0}});
    for (long a = -3; a <= 3; ++a)
        for (long b = -3; b <= 3; ++b) {
            Divisor d;
            d.set("P", R(a));
            d.set("Q", R(b));
            CHECK(duality_check(e, "Q", d).agree());
        }
}

TEST_CASE("single-step cases") {
    CurveModel e = cyclic(5, {{"P", 1}, {"Q", 0}});
    BaseptClassification c = basept_step({e, D("1@Q - 1@P"), Divisor(), "Q"});
    CHECK(c.in_bs);
    CHECK(has_tag(c, "sp-1"));

    // 0 != B <= P with P ~ Q - L: here L ~ 0 and B sits on Q itself.
    c = basept_step({CurveModel::p1(), Divisor(), D("1/2@Q"), "Q"});
    CHECK(c.in_bs);
    CHECK(has_tag(c, "sp-2"));

    c = basept_step({CurveModel::p1(), D("1@Q - 1/2@P1 - 1/2@P2"), D("1/2@P2"), "Q"});
    CHECK(c.in_bs);
    CHECK(has_tag(c, "sp-3"));
    CHECK(c.Delta == D("1/2@P1 + 1/2@P2"));

    // deg ceil(B+L) = 2 makes the adjoint system nonempty and free on P^1.
    c = basept_step({CurveModel::p1(), D("2@Q"), Divisor(), "Q"});
    CHECK_FALSE(c.in_bs);
    CHECK(c.cases.empty());
    CHECK(c.tags() == "none");
}

TEST_CASE("successive cases, N = 2") {
    CurveModel p1 = CurveModel::p1();
    // Half-half shape with B = 0: needs Q off the base locus of |P1+P2-Q|.
    BaseptClassification c = successive_basept({p1, D("1@Q - 1/2@P1 - 1/2@P2"), Divisor(), "Q"}, 2);
    CHECK(c.in_bs);
    CHECK(has_tag(c, "4.7-1"));

    // Half-half with Q ~ P1 and B on the other carrier.
    c = successive_basept({p1, D("1@Q - 1/2@Q - 1/2@P2"), D("1/2@P2"), "Q"}, 2);
    CHECK(c.in_bs);
    CHECK(has_tag(c, "4.7-2"));

    // floor(2*Delta) ~ Q with B <= min(Delta, frac(2*Delta)).
    c = successive_basept({p1, D("1@Q - 2/3@P1 - 1/3@P2"), D("1/4@P1"), "Q"}, 2);
    CHECK(c.in_bs);
    CHECK(has_tag(c, "4.7-3"));
}

TEST_CASE("successive cases, N >= 3") {
    CurveModel p1 = CurveModel::p1();
    // Two-point Delta with delta = 1/2 (index l = 2 <= N) on P^1.
    BaseptProblem half{p1, D("1@Q - 1/2@P1 - 1/2@P2"), D("1/2@P2"), "Q"};
    for (long N : {3L, 5L, 8L}) {
        BaseptClassification c = successive_basept(half, N);
        CHECK(c.in_bs);
        CHECK(has_tag(c, "4.9-1"));
        CHECK(c.index_l == 2);
    }

    // delta = (N-1)/N with B = (1/N) at the top carrier.
    BaseptClassification c =
        successive_basept({p1, D("1@Q - 3/4@P1 - 1/4@P2"), D("1/4@P1"), "Q"}, 4);
    CHECK(c.in_bs);
    CHECK(has_tag(c, "4.9-2"));

    // Elliptic: Delta = 2/3 Q + 1/3 P2 with Q carrying the top coefficient.
    CurveModel e = cyclic(5, {{"P2", 1}, {"Q", 0}});
    c = successive_basept({e, D("1@Q - 2/3@Q - 1/3@P2"), D("1/3@P2"), "Q"}, 3);
    CHECK(c.in_bs);
    CHECK(has_tag(c, "4.9-3"));

    // Chain condition floor(i*Delta) ~ (i-1)Q with B under every frac(i*Delta).
    c = successive_basept({p1, D("1@Q - 3/4@P1 - 1/8@P2"), D("1/4@P1"), "Q"}, 3);
    CHECK(c.in_bs);
    CHECK(has_tag(c, "4.9-4"));
    CHECK_FALSE(has_tag(c, "4.9-1"));  // index of 3/4 exceeds N = 3
}

TEST_CASE("top-level integral cases and the order cutoff") {
    // [P1 - Q] of order 7: case 1 persists through N = 6 and fails at 7.
    CurveModel e = cyclic(7, {{"P1", 1}, {"Q", 0}});
    BaseptProblem pr{e, D("1@Q - 1@P1"), Divisor(), "Q"};
    BaseptClassification c = successive_basept(pr, 6);
    CHECK(c.in_bs);
    CHECK(has_tag(c, "4.5-1"));
    c = successive_basept(pr, 7);
    CHECK_FALSE(c.in_bs);
    CHECK(in_bs_through(pr, 6));
    CHECK_FALSE(in_bs_through(pr, 7));

    // L ~ 0 with 0 != B <= P ~ Q persists for every N.
    BaseptProblem pers{CurveModel::p1(), Divisor(), D("1/2@Q"), "Q"};
    for (long N : {2L, 5L, 11L}) CHECK(has_tag(successive_basept(pers, N), "4.5-2"));
}

TEST_CASE("infinite horizon") {
    CurveModel p1 = CurveModel::p1();
    BaseptClassification c = successive_basept_infinite({p1, D("1@Q - 1@P"), Divisor(), "Q"});
    CHECK(c.in_bs);
    CHECK(has_tag(c, "cor-1"));

    c = successive_basept_infinite({p1, Divisor(), D("1/2@Q"), "Q"});
    CHECK(c.in_bs);
    CHECK(has_tag(c, "cor-2"));

    c = successive_basept_infinite({p1, D("1@Q - 1/2@P1 - 1/2@P2"), D("1/2@P1"), "Q"});
    CHECK(c.in_bs);
    CHECK(has_tag(c, "cor-3"));
    CHECK(c.index_l == 2);

    // Free generator: case 1 with a class of infinite order.
    CurveModel free_gen = CurveModel::elliptic([] {
        PicardModel m;
        m.group = AbelianGroup{1, {}};
        m.point_classes["G"] = {1};
        m.point_classes["O"] = {0};
        return m;
    }());
    c = successive_basept_infinite({free_gen, D("1@O - 1@G"), Divisor(), "O"});
    CHECK(c.in_bs);
    CHECK(has_tag(c, "cor-1"));

    // Torsion kills the infinite verdict.
    CurveModel e = cyclic(7, {{"P1", 1}, {"Q", 0}});
    c = successive_basept_infinite({e, D("1@Q - 1@P1"), Divisor(), "Q"});
    CHECK_FALSE(c.in_bs);
}

TEST_CASE("reduction route equals the closed form on a small grid") {
    CurveModel p1 = CurveModel::p1();
    std::vector<Rational> vals{R(1, 3), R(1, 2), R(2, 3), R(3, 4)};
    for (const Rational& a : vals)
        for (const Rational& b : vals) {
            if (a + b > R(1)) continue;
            Divisor delta;
            delta.set("P1", a);
            delta.set("P2", delta.coeff("P2") + b);
            BaseptProblem pr{p1, D("1@Q") - delta, Divisor(), "Q"};
            for (long N = 2; N <= 6; ++N)
                CHECK(successive_basept_reduction(pr, N) == successive_basept(pr, N).in_bs);
        }
}

TEST_CASE("hypothesis violations are rejected") {
    CurveModel p1 = CurveModel::p1();
    CHECK_THROWS_AS(basept_step({p1, D("1@Q"), D("-1/2@P"), "Q"}), std::invalid_argument);
    CHECK_THROWS_AS(basept_step({p1, D("-1@Q"), Divisor(), "Q"}), std::invalid_argument);
    CHECK_THROWS_AS(basept_step({p1, D("1@Q"), Divisor(), ""}), std::invalid_argument);
    CHECK_THROWS_AS(successive_basept({p1, D("1@Q - 1@P"), Divisor(), "Q"}, 1),
                    std::invalid_argument);
    // Elliptic model with two named points in one class is rejected.
    CurveModel bad = cyclic(4, {{"P1", 1}, {"P2", 1}, {"Q", 0}});
    CHECK_THROWS_AS(basept_step({bad, D("1@Q - 1/2@P1 - 1/2@P2"), Divisor(), "Q"}),
                    std::invalid_argument);
}
