#include "fv/divcrit.hpp"

#include "fv/farey.hpp"

namespace fv {

namespace {

void check_hypotheses(const Divisor& delta, const Divisor& b, long N, bool need_floor_zero) {
    if (!b.is_effective()) throw std::invalid_argument("divcrit: hypothesis B >= 0 violated");
    if (!leq(b, delta)) throw std::invalid_argument("divcrit: hypothesis B <= Delta violated");
    if (!delta.is_effective()) throw std::invalid_argument("divcrit: hypothesis Delta >= 0 violated");
    if (need_floor_zero && !round_down(delta).is_zero())
        throw std::invalid_argument("divcrit: hypothesis floor(Delta) = 0 violated");
    if (delta.degree() > Rational(1))
        throw std::invalid_argument("divcrit: hypothesis deg Delta <= 1 violated");
    if (N >= 0 && N < 2) throw std::invalid_argument("divcrit: hypothesis N >= 2 violated");
}

Int deg_floor(const Divisor& delta, const Divisor& b, long i) {
    Int deg = 0;
    for (const auto& [p, c] : delta.entries()) deg += (Rational(i) * c - b.coeff(p)).floor();
    return deg;
}

}  // namespace

DirectDivResult holds_direct_div(const Divisor& delta, const Divisor& b, long N) {
    check_hypotheses(delta, b, N, true);
    for (long i = 1; i <= N; ++i)
        if (deg_floor(delta, b, i) < i - 1) return {false, i};
    return {true, 0};
}

DivClassification classify_div(const Divisor& delta, const Divisor& b, long N) {
    check_hypotheses(delta, b, N, true);
    DivClassification r;
    r.top = top_two(delta);
    r.rest_ok = round_down(Rational(N) * r.top.rest).is_zero();
    Rational b_top = r.top.p ? b.coeff(*r.top.p) : Rational(0);
    Rational b_second = r.top.p_prime ? b.coeff(*r.top.p_prime) : Rational(0);
    r.crt = classify_crt({r.top.delta, b_top, r.top.delta_prime, b_second, N});
    r.holds = r.rest_ok && r.crt.holds();
    return r;
}

bool classify_div_no_b(const Divisor& delta, long N) {
    check_hypotheses(delta, Divisor(), N, true);
    TopCoefficients top = top_two(delta);
    if (!round_down(Rational(N) * top.rest).is_zero()) return false;
    return delta_plus(top.delta, N) + top.delta_prime >= Rational(1);
}

Nmax vanishing_order(const Divisor& delta, const Divisor& b) {
    check_hypotheses(delta, b, -1, false);

    // Closed-form infinite shapes; everything else fails at a finite index.
    if (delta.num_points() == 1 && delta.entries()[0].second == Rational(1)) return Nmax::inf();
    if (delta.num_points() == 2 && delta.degree() == Rational(1)) {
        const auto& e0 = delta.entries()[0];
        const auto& e1 = delta.entries()[1];
        const auto& top = e0.second >= e1.second ? e0 : e1;
        const auto& low = e0.second >= e1.second ? e1 : e0;
        Rational inv_index(Int(1), top.second.index());
        Rational bt = b.coeff(top.first), bl = b.coeff(low.first);
        if ((bl.is_zero() && bt <= inv_index) || (bt.is_zero() && bl <= inv_index))
            return Nmax::inf();
    }

    constexpr long kCap = 1000000;
    for (long i = 2; i <= kCap; ++i)
        if (deg_floor(delta, b, i) < i - 1) return Nmax::finite(i - 1);
    throw std::logic_error("vanishing_order: no failure found below cap for a finite shape");
}

bool equality_profile(const Divisor& delta, long N) {
    check_hypotheses(delta, Divisor(), -1, true);
    if (N < 1) throw std::invalid_argument("equality_profile: requires N >= 1");
    for (long i = 1; i <= N; ++i)
        if (deg_floor(delta, Divisor(), i) != i - 1) return false;
    return true;
}

}  // namespace fv
