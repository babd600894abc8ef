#pragma once

#include "fv/rational.hpp"

#include <utility>
#include <vector>

namespace fv {

/// Input of the two-variable floor-inequality system
///   floor(i*delta - b) + floor(i*delta' - b') >= i - 1   for 1 <= i <= N.
struct CrtInput {
    Rational delta;
    Rational b;
    Rational delta_p;
    Rational b_p;
    long N = 2;

    /// Throws naming the violated hypothesis.
    void validate() const;
};

enum class CrtTag { CaseA, CaseB, CaseHalf, Fails };

struct CrtClassification {
    CrtTag tag = CrtTag::Fails;
    /// CaseB: the pairs (p,q) attaining the binding lower bound on delta'.
    std::vector<std::pair<long, long>> witnesses;
    /// Fails: least i violating the system (0 otherwise).
    long violating_i = 0;

    bool holds() const { return tag != CrtTag::Fails; }
};

struct DirectResult {
    bool holds = false;
    long first_violation = 0;  // 0 when the system holds
};

/// Direct exact evaluation of the system for every i <= N.
DirectResult holds_direct(const CrtInput& in);

/// Closed-form classification:
///   CaseA    iff delta >= (N-1+b)/N,
///   CaseB    iff (1+b)/2 <= delta < (N-1+b)/N and
///            delta' >= max{(q-p+b')/q : 1 <= p < q <= N, delta < (p+b)/q},
///   CaseHalf iff delta = delta' = 1/2, b' = 0, b > 0: the boundary family
///            (floor(i/2 - b) + floor(i/2) = i - 1 for every i) that the two
///            main cases do not reach.
CrtClassification classify_crt(const CrtInput& in);

/// b = b' = 0 shortcut: the system holds iff delta_plus(delta, N) + delta' >= 1.
bool holds_no_b(const Rational& delta, const Rational& delta_p, long N);

/// For N >= 2, 0 <= b < 1, 1/2 <= delta < (N-1+b)/N: a pair 1 <= p < q <= N
/// with delta < (p+b)/q and p/q - delta < 1/(N+1). Deterministic choice:
/// (N-1, N) when delta >= (N-1)/N, else the reduced successor of delta in
/// the order-N Farey set.
std::pair<long, long> nd_witness(const Rational& delta, const Rational& b, long N);

enum class EacRegime { TopWindow, SecondWindow, Other };

/// TopWindow iff (N-1+b)/N <= x < 1 (equivalently floor(i*x-b) = i-1 for all
/// i <= N); SecondWindow iff N >= 2 and (N-2+b)/(N-1) <= x < (N-1+b)/N, in
/// which case floor(N*x-b) = N-2 is asserted.
EacRegime eac_regime(const Rational& x, const Rational& b, long N);

}  // namespace fv
