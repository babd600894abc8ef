#include "fv/floorcrit.hpp"

#include "fv/farey.hpp"

#include <cassert>

namespace fv {

void CrtInput::validate() const {
    const Rational zero(0), one(1);
    if (!(zero <= b)) throw std::invalid_argument("crt: hypothesis 0 <= b violated");
    if (!(b <= delta)) throw std::invalid_argument("crt: hypothesis b <= delta violated");
    if (!(delta < one)) throw std::invalid_argument("crt: hypothesis delta < 1 violated");
    if (!(zero <= b_p)) throw std::invalid_argument("crt: hypothesis 0 <= b' violated");
    if (!(b_p <= delta_p)) throw std::invalid_argument("crt: hypothesis b' <= delta' violated");
    if (!(delta_p < one)) throw std::invalid_argument("crt: hypothesis delta' < 1 violated");
    if (!(delta_p <= delta)) throw std::invalid_argument("crt: hypothesis delta' <= delta violated");
    if (!(delta + delta_p <= one)) throw std::invalid_argument("crt: hypothesis delta + delta' <= 1 violated");
    if (N < 2) throw std::invalid_argument("crt: hypothesis N >= 2 violated");
}

DirectResult holds_direct(const CrtInput& in) {
    in.validate();
    for (long i = 1; i <= in.N; ++i) {
        Rational ri(i);
        Int lhs = (ri * in.delta - in.b).floor() + (ri * in.delta_p - in.b_p).floor();
        if (lhs < i - 1) return {false, i};
    }
    return {true, 0};
}

CrtClassification classify_crt(const CrtInput& in) {
    in.validate();
    const Rational case_a_bound = (Rational(in.N - 1) + in.b) / Rational(in.N);

    if (in.delta >= case_a_bound) return {CrtTag::CaseA, {}, 0};

    // delta = delta' = 1/2 with b > 0, b' = 0: holds for every i (the floors
    // are (i-1)/2, (i-1)/2 for odd i and i/2-1, i/2 for even i) but misses
    // both main windows, whose lower bounds exceed 1/2 once b > 0.
    const Rational half(1, 2);
    if (in.delta == half && in.delta_p == half && in.b > Rational(0) && in.b_p.is_zero())
        return {CrtTag::CaseHalf, {}, 0};

    const Rational case_b_lower = (Rational(1) + in.b) / Rational(2);
    if (in.delta >= case_b_lower) {
        // max over 1 <= p < q <= N with delta < (p+b)/q, by plain enumeration.
        bool any = false;
        Rational best;
        std::vector<std::pair<long, long>> argmax;
        for (long q = 2; q <= in.N; ++q) {
            for (long p = 1; p < q; ++p) {
                if (!(in.delta < (Rational(p) + in.b) / Rational(q))) continue;
                Rational bound = (Rational(q - p) + in.b_p) / Rational(q);
                if (!any || bound > best) {
                    any = true;
                    best = bound;
                    argmax = {{p, q}};
                } else if (bound == best) {
                    argmax.emplace_back(p, q);
                }
            }
        }
        // (N-1, N) always qualifies when delta < (N-1+b)/N.
        assert(any);
        if (in.delta_p >= best) return {CrtTag::CaseB, std::move(argmax), 0};
    }
    return {CrtTag::Fails, {}, holds_direct(in).first_violation};
}

bool holds_no_b(const Rational& delta, const Rational& delta_p, long N) {
    CrtInput in{delta, Rational(0), delta_p, Rational(0), N};
    in.validate();
    return delta_plus(delta, N) + delta_p >= Rational(1);
}

std::pair<long, long> nd_witness(const Rational& delta, const Rational& b, long N) {
    if (N < 2) throw std::invalid_argument("nd_witness: requires N >= 2");
    if (b < Rational(0) || b >= Rational(1))
        throw std::invalid_argument("nd_witness: requires b in [0,1)");
    const Rational upper = (Rational(N - 1) + b) / Rational(N);
    if (delta < Rational(1, 2) || delta >= upper)
        throw std::invalid_argument("nd_witness: requires 1/2 <= delta < (N-1+b)/N");

    long p, q;
    if (delta >= Rational(N - 1, N)) {
        p = N - 1;
        q = N;
    } else {
        Rational succ = delta_plus(delta, N);
        p = static_cast<long>(succ.num());
        q = static_cast<long>(succ.den());
    }
    assert(delta < (Rational(p) + b) / Rational(q));
    assert(Rational(p, q) - delta < Rational(1, N + 1));
    return {p, q};
}

EacRegime eac_regime(const Rational& x, const Rational& b, long N) {
    if (N < 1) throw std::invalid_argument("eac_regime: requires N >= 1");
    if (b < Rational(0) || b >= Rational(1))
        throw std::invalid_argument("eac_regime: requires b in [0,1)");
    if (x < Rational(0) || x >= Rational(1))
        throw std::invalid_argument("eac_regime: requires x in [0,1)");

    const Rational top = (Rational(N - 1) + b) / Rational(N);
    if (x >= top) return EacRegime::TopWindow;
    if (N >= 2 && x >= (Rational(N - 2) + b) / Rational(N - 1)) {
        // In this window N*x - b cannot be an integer: the floor is exactly N-2.
        assert((Rational(N) * x - b).floor() == N - 2);
        return EacRegime::SecondWindow;
    }
    return EacRegime::Other;
}

}  // namespace fv
