#include "fv/oracle.hpp"

#include "fv/divcrit.hpp"
#include "fv/floorcrit.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <numeric>
#include <optional>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace fv {

bool empty_adjoint_oracle(const AdjointProblem& pr, long i) {
    Divisor d = round_up(pr.B + Rational(i) * pr.L);
    DivClass e = pr.curve.class_add(pr.curve.canonical_class(), pr.curve.div_class(d));
    return pr.curve.h0(e) == 0;
}

long empty_streak_oracle(const AdjointProblem& pr, long horizon) {
    for (long i = 1; i <= horizon; ++i)
        if (!empty_adjoint_oracle(pr, i)) return i - 1;
    return horizon;
}

bool in_bs_oracle(const CurveModel& curve, const std::string& q, const DivClass& e) {
    return curve.h0(curve.class_sub(e, curve.point_class(q))) == curve.h0(e);
}

long bs_streak_oracle(const BaseptProblem& pr, long horizon) {
    for (long i = 1; i <= horizon; ++i) {
        Divisor d = round_up(pr.B + Rational(i) * pr.L);
        DivClass e = pr.curve.class_add(pr.curve.canonical_class(), pr.curve.div_class(d));
        if (!in_bs_oracle(pr.curve, pr.Q, e)) return i - 1;
    }
    return horizon;
}

std::string suite_name(Suite s) {
    switch (s) {
        case Suite::Floor: return "floor";
        case Suite::Divisor: return "divisor";
        case Suite::Vanish: return "vanish";
        case Suite::Basept: return "basept";
        case Suite::CrossModule: return "crossmodule";
    }
    return "?";
}

Suite parse_suite(const std::string& name) {
    for (Suite s : {Suite::Floor, Suite::Divisor, Suite::Vanish, Suite::Basept, Suite::CrossModule})
        if (suite_name(s) == name) return s;
    throw std::invalid_argument("unknown suite: " + name);
}

void SweepConfig::validate() const {
    if (max_denominator < 1 || max_points < 1 || max_N < 1 || b_den() < 1)
        throw std::invalid_argument("sweep: all bounds must be >= 1");
    for (long t : torsion_orders)
        if (t < 1) throw std::invalid_argument("sweep: torsion orders must be >= 1");
}

namespace {

constexpr long long kGridCap = 200'000'000;

struct Engine {
    bool parallel = false;
    int jobs = 0;
};

/// Runs check(i) over the index space [0, n); instances are decoded from the
/// index, so nothing is materialized. Mismatches are collected per chunk and
/// merged in index order — the parallel report equals the serial one.
template <class Fn>
void run_indexed(long long n, const Engine& eng, SweepReport& rep, Fn&& check) {
    if (rep.grid_size + n > kGridCap)
        throw std::runtime_error("sweep: grid exceeds the instance cap; tighten the bounds");
    const long long base = rep.grid_size;
    rep.grid_size += n;

    auto handle = [&](long long i, std::vector<Mismatch>& out) {
        if (auto m = check(i)) {
            m->instance = base + i;
            out.push_back(std::move(*m));
        }
    };

    if (!eng.parallel) {
        for (long long i = 0; i < n; ++i) handle(i, rep.mismatches);
        return;
    }

    const long long chunk = 1024;
    const long long nchunks = (n + chunk - 1) / chunk;
    std::vector<std::vector<Mismatch>> buckets(static_cast<size_t>(nchunks));
#ifdef _OPENMP
    int threads = eng.jobs > 0 ? eng.jobs : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(threads)
#endif
    for (long long c = 0; c < nchunks; ++c) {
        const long long lo = c * chunk, hi = std::min(n, lo + chunk);
        for (long long i = lo; i < hi; ++i) handle(i, buckets[static_cast<size_t>(c)]);
    }
    for (auto& bucket : buckets)
        for (auto& m : bucket) rep.mismatches.push_back(std::move(m));
}

/// Reduced rationals p/q with q <= max_den inside the interval, sorted.
std::vector<Rational> reduced_in(long max_den, const Rational& lo, const Rational& hi,
                                 bool incl_lo, bool incl_hi) {
    std::vector<Rational> out;
    for (long q = 1; q <= max_den; ++q) {
        Int p_lo = (lo * Rational(q)).ceil();
        Int p_hi = (hi * Rational(q)).floor();
        for (Int p = p_lo; p <= p_hi; ++p) {
            if (boost::multiprecision::gcd(boost::multiprecision::abs(p), Int(q)) != 1) continue;
            Rational r(p, Int(q));
            if (!incl_lo && r == lo) continue;
            if (!incl_hi && r == hi) continue;
            out.push_back(std::move(r));
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<Rational> open01(long max_den) {
    return reduced_in(max_den, Rational(0), Rational(1), false, false);
}

std::vector<Rational> halfopen01(long max_den) {
    return reduced_in(max_den, Rational(0), Rational(1), true, false);
}

std::vector<Rational> coeffs_leq(const Rational& cap, long max_den) {
    return reduced_in(max_den, Rational(0), cap, true, true);
}

/// Non-decreasing coefficient tuples of length 1..max_len with sum <= 1,
/// i.e. fractional divisors up to point renaming. Candidates whose partial
/// sum would exceed 1 are counted as skipped.
std::vector<std::vector<Rational>> fractional_multisets(const std::vector<Rational>& values,
                                                        long max_len, long long& skipped) {
    std::vector<std::vector<Rational>> out;
    std::vector<Rational> cur;
    Rational sum(0);
    auto rec = [&](auto&& self, size_t start) -> void {
        if (!cur.empty()) out.push_back(cur);
        if (static_cast<long>(cur.size()) == max_len) return;
        for (size_t k = start; k < values.size(); ++k) {
            if (sum + values[k] > Rational(1)) {
                ++skipped;
                continue;
            }
            cur.push_back(values[k]);
            sum += values[k];
            self(self, k);
            sum -= values[k];
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

Divisor from_coeffs(const std::vector<Rational>& coeffs, const std::vector<std::string>& points) {
    Divisor d;
    for (size_t i = 0; i < coeffs.size(); ++i) d.set(points[i], coeffs[i]);
    return d;
}

/// All boundary parts 0 <= B <= Delta with the given denominator bound.
std::vector<Divisor> boundary_parts(const Divisor& delta, long max_den) {
    std::vector<Divisor> out{Divisor()};
    for (const auto& [p, c] : delta.entries()) {
        std::vector<Divisor> next;
        for (const Rational& b : coeffs_leq(c, max_den))
            for (const Divisor& prev : out) {
                Divisor d = prev;
                if (!b.is_zero()) d.set(p, b);
                next.push_back(std::move(d));
            }
        out = std::move(next);
    }
    return out;
}

/// (Delta, per-Delta boundary list) with a prefix-sum index over the pairs.
struct DeltaGrid {
    std::vector<Divisor> deltas;
    std::vector<std::vector<Divisor>> bs;
    std::vector<long long> prefix;  // prefix[i] = #pairs before deltas[i]

    long long pairs() const { return prefix.back(); }
    /// Index -> (delta index, boundary index).
    std::pair<size_t, size_t> locate(long long i) const {
        size_t d = static_cast<size_t>(
            std::upper_bound(prefix.begin(), prefix.end(), i) - prefix.begin() - 1);
        return {d, static_cast<size_t>(i - prefix[d])};
    }
};

DeltaGrid make_delta_grid(std::vector<Divisor> deltas, long b_den) {
    DeltaGrid g;
    g.deltas = std::move(deltas);
    g.prefix.push_back(0);
    for (const Divisor& d : g.deltas) {
        g.bs.push_back(boundary_parts(d, b_den));
        g.prefix.push_back(g.prefix.back() + static_cast<long long>(g.bs.back().size()));
    }
    return g;
}

// ---------------------------------------------------------------- floor ----

void build_floor(const SweepConfig& cfg, const Engine& eng, SweepReport& rep) {
    std::vector<Rational> ds = halfopen01(cfg.max_denominator);
    std::vector<Rational> bs = halfopen01(cfg.b_den());
    struct FloorInst {
        Rational d, b, dp, bp;
        long N;
    };
    std::vector<FloorInst> grid;
    for (long N = 2; N <= cfg.max_N; ++N)
        for (const Rational& d : ds)
            for (const Rational& b : bs) {
                if (b > d) {
                    ++rep.skipped;
                    continue;
                }
                for (const Rational& dp : ds) {
                    if (dp > d || d + dp > Rational(1)) {
                        ++rep.skipped;
                        continue;
                    }
                    for (const Rational& bp : bs) {
                        if (bp > dp) {
                            ++rep.skipped;
                            continue;
                        }
                        grid.push_back({d, b, dp, bp, N});
                    }
                }
            }

    run_indexed(static_cast<long long>(grid.size()), eng, rep,
                [&](long long i) -> std::optional<Mismatch> {
                    const FloorInst& in = grid[static_cast<size_t>(i)];
                    CrtInput input{in.d, in.b, in.dp, in.bp, in.N};
                    bool cls = classify_crt(input).holds();
                    DirectResult dir = holds_direct(input);
                    bool consistent = cls == dir.holds;
                    if (consistent && in.b.is_zero() && in.bp.is_zero())
                        consistent = holds_no_b(in.d, in.dp, in.N) == dir.holds;
                    if (consistent) return std::nullopt;
                    Mismatch m;
                    m.input = "delta=" + in.d.str() + " b=" + in.b.str() +
                              " delta'=" + in.dp.str() + " b'=" + in.bp.str() +
                              " N=" + std::to_string(in.N);
                    m.classifier = cls ? "holds" : "fails";
                    m.oracle = dir.holds ? "holds"
                                         : ("fails at i=" + std::to_string(dir.first_violation));
                    return m;
                });
}

// -------------------------------------------------------------- divisor ----

void build_divisor(const SweepConfig& cfg, const Engine& eng, SweepReport& rep) {
    const std::vector<std::string> points{"P1", "P2", "P3", "P4", "P5", "P6"};
    if (cfg.max_points > static_cast<long>(points.size()))
        throw std::invalid_argument("sweep: max_points too large");
    auto tuples = fractional_multisets(open01(cfg.max_denominator), cfg.max_points, rep.skipped);
    std::vector<Divisor> deltas;
    for (const auto& coeffs : tuples) deltas.push_back(from_coeffs(coeffs, points));
    DeltaGrid grid = make_delta_grid(std::move(deltas), cfg.b_den());

    const long long n_per = std::max<long>(cfg.max_N - 1, 0);
    run_indexed(grid.pairs() * n_per, eng, rep, [&](long long i) -> std::optional<Mismatch> {
        long N = 2 + static_cast<long>(i % n_per);
        auto [d, b] = grid.locate(i / n_per);
        const Divisor& delta = grid.deltas[d];
        const Divisor& bnd = grid.bs[d][b];
        bool cls = classify_div(delta, bnd, N).holds;
        DirectDivResult dir = holds_direct_div(delta, bnd, N);
        bool consistent = cls == dir.holds;
        if (consistent && bnd.is_zero()) consistent = classify_div_no_b(delta, N) == dir.holds;
        if (consistent) return std::nullopt;
        Mismatch m;
        m.input = "Delta=" + delta.str() + " B=" + bnd.str() + " N=" + std::to_string(N);
        m.classifier = cls ? "holds" : "fails";
        m.oracle = dir.holds ? "holds" : ("fails at i=" + std::to_string(dir.first_violation));
        return m;
    });
}

// --------------------------------------------------------------- vanish ----

void build_vanish(const SweepConfig& cfg, const Engine& eng, SweepReport& rep) {
    const std::vector<std::string> points{"P1", "P2", "P3"};
    const long npts = std::min<long>(cfg.max_points, 3);
    const CurveModel p1 = CurveModel::p1();

    // P^1: L with coefficients in [-1, 1], canonical up to renaming; B on at
    // most two of the points.
    std::vector<Rational> lvals =
        reduced_in(cfg.max_denominator, Rational(-1), Rational(1), true, true);
    std::vector<Divisor> ls{Divisor()};
    {
        std::vector<Rational> cur;
        auto rec = [&](auto&& self, size_t start) -> void {
            if (!cur.empty()) {
                Rational deg(0);
                for (const Rational& c : cur) deg += c;
                if (deg >= Rational(0))
                    ls.push_back(from_coeffs(cur, points));
                else
                    ++rep.skipped;
            }
            if (static_cast<long>(cur.size()) == npts) return;
            for (size_t k = start; k < lvals.size(); ++k) {
                cur.push_back(lvals[k]);
                self(self, k);
                cur.pop_back();
            }
        };
        rec(rec, 0);
    }

    std::vector<Divisor> b_parts{Divisor()};
    {
        std::vector<Rational> bvals = reduced_in(cfg.b_den(), Rational(0), Rational(1), false, true);
        for (long i = 0; i < npts; ++i)
            for (const Rational& bi : bvals) {
                Divisor d;
                d.set(points[static_cast<size_t>(i)], bi);
                b_parts.push_back(d);
                for (long j = i + 1; j < npts; ++j)
                    for (const Rational& bj : bvals) {
                        Divisor e = d;
                        e.set(points[static_cast<size_t>(j)], bj);
                        b_parts.push_back(std::move(e));
                    }
            }
    }

    // Elliptic: integral degree-0 classes of every order, plus one free
    // generator; boundary shapes exercising the nonempty verdict.
    std::vector<CurveModel> models;
    std::vector<std::string> model_names;
    for (long t : cfg.torsion_orders)
        for (long long g = 1; g < t; ++g) {
            PicardModel m;
            m.group = AbelianGroup{0, {t}};
            m.point_classes["G"] = {g};
            m.point_classes["O"] = {0};
            models.push_back(CurveModel::elliptic(std::move(m)));
            model_names.push_back("elliptic t=" + std::to_string(t) + " G=" + std::to_string(g));
        }
    {
        PicardModel m;
        m.group = AbelianGroup{1, {}};
        m.point_classes["G"] = {1};
        m.point_classes["O"] = {0};
        models.push_back(CurveModel::elliptic(std::move(m)));
        model_names.push_back("elliptic free");
    }
    const Divisor gl = Divisor::parse("1@G - 1@O");
    const std::vector<Divisor> ebs{Divisor(), Divisor::parse("1/2@O"), Divisor::parse("1@G")};

    const long long n_p1 = static_cast<long long>(ls.size()) * b_parts.size();
    const long long n_ell = static_cast<long long>(models.size()) * ebs.size();

    run_indexed(n_p1 + n_ell, eng, rep, [&](long long i) -> std::optional<Mismatch> {
        const CurveModel* curve;
        const Divisor *L, *B;
        std::string model;
        if (i < n_p1) {
            curve = &p1;
            L = &ls[static_cast<size_t>(i / static_cast<long long>(b_parts.size()))];
            B = &b_parts[static_cast<size_t>(i % static_cast<long long>(b_parts.size()))];
            model = "p1";
        } else {
            long long j = i - n_p1;
            size_t k = static_cast<size_t>(j / static_cast<long long>(ebs.size()));
            curve = &models[k];
            L = &gl;
            B = &ebs[j % static_cast<long long>(ebs.size())];
            model = model_names[k];
        }
        AdjointProblem pr{*curve, *L, *B};
        VanishingReport vr = analyze_vanishing(pr);
        long cls = vr.n_max.infinite ? cfg.max_N : std::min(vr.n_max.value, cfg.max_N);
        long orc = empty_streak_oracle(pr, cfg.max_N);
        if (cls == orc) return std::nullopt;
        Mismatch m;
        m.input = "curve=" + model + " L=" + L->str() + " B=" + B->str();
        m.classifier = vanish_case_tag(vr.tag) + " streak=" + std::to_string(cls);
        m.oracle = "streak=" + std::to_string(orc);
        return m;
    });
}

// --------------------------------------------------------------- basept ----

std::vector<CurveModel> basept_models(const SweepConfig& cfg, std::vector<std::string>& names) {
    std::vector<CurveModel> out;
    out.push_back(CurveModel::p1());
    names.push_back("p1");
    for (long t : cfg.torsion_orders) {
        std::vector<std::pair<long long, long long>> reps{{0, 0}, {1, 0}, {0, 1}, {1, 1},
                                                          {1, (t - 1) % t}, {2 % t, 1}};
        std::sort(reps.begin(), reps.end());
        reps.erase(std::unique(reps.begin(), reps.end()), reps.end());
        for (auto [c1, c2] : reps) {
            PicardModel m;
            m.group = AbelianGroup{0, {t}};
            m.point_classes["Q"] = m.group.reduce({0});
            m.point_classes["P1"] = m.group.reduce({c1});
            m.point_classes["P2"] = m.group.reduce({c2});
            out.push_back(CurveModel::elliptic(std::move(m)));
            names.push_back("elliptic t=" + std::to_string(t) + " P1=" + std::to_string(c1) +
                            " P2=" + std::to_string(c2));
        }
    }
    return out;
}

/// Ordered fractional divisors on subsets of the given points (the points
/// are distinguishable here), coefficients in (0,1), degree <= 1.
std::vector<Divisor> anchored_fractionals(const std::vector<std::string>& points, long max_den,
                                          long max_points, long long& skipped) {
    std::vector<Rational> vals = open01(max_den);
    std::vector<Divisor> out;
    size_t n = points.size();
    for (size_t mask = 1; mask < (size_t(1) << n); ++mask) {
        std::vector<size_t> sel;
        for (size_t i = 0; i < n; ++i)
            if (mask & (size_t(1) << i)) sel.push_back(i);
        if (static_cast<long>(sel.size()) > max_points) continue;
        std::vector<Rational> cur(sel.size());
        auto rec = [&](auto&& self, size_t k, const Rational& sum) -> void {
            if (k == sel.size()) {
                Divisor d;
                for (size_t j = 0; j < sel.size(); ++j) d.set(points[sel[j]], cur[j]);
                out.push_back(std::move(d));
                return;
            }
            for (const Rational& v : vals) {
                if (sum + v > Rational(1)) {
                    ++skipped;
                    continue;
                }
                cur[k] = v;
                self(self, k + 1, sum + v);
            }
        };
        rec(rec, 0, Rational(0));
    }
    return out;
}

void build_basept(const SweepConfig& cfg, const Engine& eng, SweepReport& rep) {
    std::vector<std::string> names;
    std::vector<CurveModel> models = basept_models(cfg, names);

    const std::vector<std::string> points{"Q", "P1", "P2"};
    DeltaGrid grid = make_delta_grid(
        anchored_fractionals(points, cfg.max_denominator, cfg.max_points, rep.skipped),
        cfg.b_den());
    const Divisor q_point = Divisor::parse("1@Q");
    std::vector<Divisor> dls;  // L = Q - Delta, aligned with grid.deltas
    for (const Divisor& d : grid.deltas) dls.push_back(q_point - d);

    // Integral degree-0 shapes (top-level cases of the classification).
    std::vector<std::pair<Divisor, Divisor>> extras;
    for (const char* ltxt : {"0", "1@Q - 1@P1", "1@P1 - 1@P2", "1@P1 - 1@Q"})
        for (const char* btxt : {"0", "1@Q", "1/2@Q", "1@P1", "1/2@P1", "1@P2"})
            extras.emplace_back(Divisor::parse(ltxt), Divisor::parse(btxt));

    const long long per_model = grid.pairs() + static_cast<long long>(extras.size());
    std::atomic<long long> skipped{0};

    run_indexed(per_model * static_cast<long long>(models.size()), eng, rep,
                [&](long long i) -> std::optional<Mismatch> {
                    size_t k = static_cast<size_t>(i / per_model);
                    long long r = i % per_model;
                    const Divisor *L, *B;
                    if (r < grid.pairs()) {
                        auto [d, b] = grid.locate(r);
                        L = &dls[d];
                        B = &grid.bs[d][b];
                    } else {
                        const auto& e = extras[static_cast<size_t>(r - grid.pairs())];
                        L = &e.first;
                        B = &e.second;
                    }
                    try {
                        models[k].validate_distinct_points({L, B}, {"Q"});
                    } catch (const std::invalid_argument&) {
                        ++skipped;  // distinct names sharing a class: no such curve
                        return std::nullopt;
                    }
                    BaseptProblem pr{models[k], *L, *B, "Q"};
                    long streak = bs_streak_oracle(pr, cfg.max_N);
                    bool step = basept_step(pr).in_bs;
                    if (step != (streak >= 1)) {
                        Mismatch m;
                        m.input = "curve=" + names[k] + " L=" + L->str() + " B=" + B->str();
                        m.classifier = std::string("step=") + (step ? "in-bs" : "out");
                        m.oracle = "streak=" + std::to_string(streak);
                        return m;
                    }
                    for (long N = 2; N <= cfg.max_N; ++N) {
                        BaseptClassification cls = successive_basept(pr, N);
                        if (cls.in_bs != (streak >= N)) {
                            Mismatch m;
                            m.input = "curve=" + names[k] + " L=" + L->str() + " B=" + B->str() +
                                      " N=" + std::to_string(N);
                            m.classifier = (cls.in_bs ? "in-bs " : "out ") + cls.tags();
                            m.oracle = "streak=" + std::to_string(streak);
                            return m;
                        }
                    }
                    return std::nullopt;
                });
    rep.skipped += skipped.load();
}

// ---------------------------------------------------------- crossmodule ----

void build_cross(const SweepConfig& cfg, const Engine& eng, SweepReport& rep) {
    const std::vector<std::string> points{"P1", "P2", "P3"};
    const CurveModel p1 = CurveModel::p1();
    auto tuples = fractional_multisets(open01(cfg.max_denominator),
                                       std::min<long>(cfg.max_points, 3), rep.skipped);
    std::vector<Divisor> deltas;
    for (const auto& coeffs : tuples) deltas.push_back(from_coeffs(coeffs, points));
    DeltaGrid grid = make_delta_grid(std::move(deltas), cfg.b_den());
    const Divisor q_point = Divisor::parse("1@Q");

    run_indexed(grid.pairs(), eng, rep, [&](long long i) -> std::optional<Mismatch> {
        auto [d, b] = grid.locate(i);
        const Divisor& delta = grid.deltas[d];
        const Divisor& bnd = grid.bs[d][b];
        Divisor L = q_point - delta;
        BaseptProblem bp{p1, L, bnd, "Q"};
        AdjointProblem ap{p1, L, bnd};
        VanishingReport van = analyze_vanishing(ap);
        for (long N = 2; N <= cfg.max_N; ++N) {
            bool a = successive_basept(bp, N).in_bs;
            bool v = van.empty_through(N);
            bool c = classify_div(delta, bnd, N).holds;
            if (a == v && v == c) continue;
            Mismatch m;
            m.input = "Delta=" + delta.str() + " B=" + bnd.str() + " N=" + std::to_string(N);
            m.classifier = std::string("basept=") + (a ? "1" : "0") + " vanish=" + (v ? "1" : "0");
            m.oracle = std::string("divisor=") + (c ? "1" : "0");
            return m;
        }
        return std::nullopt;
    });
}

SweepReport run_sweep(const SweepConfig& cfg, const Engine& eng) {
    cfg.validate();
    SweepReport rep;
    rep.suite = suite_name(cfg.suite);
    auto t0 = std::chrono::steady_clock::now();
    switch (cfg.suite) {
        case Suite::Floor: build_floor(cfg, eng, rep); break;
        case Suite::Divisor: build_divisor(cfg, eng, rep); break;
        case Suite::Vanish: build_vanish(cfg, eng, rep); break;
        case Suite::Basept: build_basept(cfg, eng, rep); break;
        case Suite::CrossModule: build_cross(cfg, eng, rep); break;
    }
    rep.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

}  // namespace

SweepReport sweep(const SweepConfig& config) { return run_sweep(config, {true, config.jobs}); }

SweepReport sweep_serial(const SweepConfig& config) { return run_sweep(config, {false, 1}); }

}  // namespace fv
