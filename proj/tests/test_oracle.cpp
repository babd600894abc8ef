#include "fv/oracle.hpp"

#include <doctest.h>

using namespace fv;

namespace {

Divisor D(const char* s) { return Divisor::parse(s); }

bool reports_equal(const SweepReport& a, const SweepReport& b) {
    if (a.suite != b.suite || a.grid_size != b.grid_size || a.skipped != b.skipped) return false;
    if (a.mismatches.size() != b.mismatches.size()) return false;
    for (size_t i = 0; i < a.mismatches.size(); ++i) {
        const Mismatch &x = a.mismatches[i], &y = b.mismatches[i];
        if (x.instance != y.instance || x.input != y.input || x.classifier != y.classifier ||
            x.oracle != y.oracle)
            return false;
    }
    return true;
}

}  // namespace

TEST_CASE("streak oracles") {
    CurveModel p1 = CurveModel::p1();
    AdjointProblem pr{p1, D("1@Q - 3/4@P - 1/8@R"), Divisor()};
    CHECK(empty_adjoint_oracle(pr, 1));
    CHECK(empty_adjoint_oracle(pr, 4));
    CHECK_FALSE(empty_adjoint_oracle(pr, 5));
    CHECK(empty_streak_oracle(pr, 10) == 4);
    CHECK(empty_streak_oracle(pr, 3) == 3);  // clamped at the horizon

    BaseptProblem bp{p1, D("1@Q - 1/2@P1 - 1/2@P2"), D("1/2@P2"), "Q"};
    CHECK(bs_streak_oracle(bp, 20) == 20);  // infinite shape: full horizon
    CHECK(in_bs_oracle(p1, "Q", p1.div_class(D("-1@P"))));
    CHECK_FALSE(in_bs_oracle(p1, "Q", p1.div_class(D("1@P"))));
}

TEST_CASE("suite names round-trip") {
    for (Suite s : {Suite::Floor, Suite::Divisor, Suite::Vanish, Suite::Basept, Suite::CrossModule})
        CHECK(parse_suite(suite_name(s)) == s);
    CHECK_THROWS_AS(parse_suite("bogus"), std::invalid_argument);
}

TEST_CASE("config validation") {
    SweepConfig cfg;
    cfg.max_denominator = 0;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg = {};
    cfg.torsion_orders = {3, 0};
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg = {};
    cfg.max_denominator = 6;
    cfg.max_b_denominator = 0;
    CHECK(cfg.b_den() == 6);  // 0 falls back to the main bound
    cfg.max_b_denominator = 3;
    CHECK(cfg.b_den() == 3);
}

TEST_CASE("all suites succeed at desk scale and both engines agree") {
    for (Suite s : {Suite::Floor, Suite::Divisor, Suite::Vanish, Suite::Basept, Suite::CrossModule}) {
        SweepConfig cfg;
        cfg.suite = s;
        cfg.max_denominator = 4;
        cfg.max_b_denominator = 3;
        cfg.max_points = 2;
        cfg.max_N = 4;
        cfg.torsion_orders = {2, 3};
        SweepReport par = sweep(cfg);
        SweepReport ser = sweep_serial(cfg);
        CAPTURE(suite_name(s));
        CHECK(par.success());
        CHECK(par.grid_size > 0);
        CHECK(reports_equal(par, ser));
        // Determinism: a second parallel run reproduces the report.
        CHECK(reports_equal(par, sweep(cfg)));
    }
}
