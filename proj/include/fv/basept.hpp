#pragma once

#include "fv/curve.hpp"
#include "fv/divisor.hpp"

#include <optional>
#include <string>
#include <vector>

namespace fv {

/// Data of the base-point question Q in Bs|ceil(K + B + iL)|.
struct BaseptProblem {
    CurveModel curve;
    Divisor L;
    Divisor B;
    std::string Q;

    /// Throws naming the violated hypothesis (B >= 0, deg L >= 0).
    void validate() const;
};

/// Both sides of the duality Q in Bs|K+D| <=> Q not in Bs|Q-D|.
struct DualityResult {
    bool in_bs_adjoint;   // Q in Bs|K+D|
    bool avoids_bs_dual;  // Q not in Bs|Q-D|

    bool agree() const { return in_bs_adjoint == avoids_bs_dual; }
};

/// Requires D integral; asserts the two sides agree.
DualityResult duality_check(const CurveModel& curve, const std::string& q, const Divisor& d);

/// Case tags plus the classifier verdict; empty tag list means the verdict is
/// negative. Delta/index are filled when the fractional shape is in play.
struct BaseptClassification {
    bool in_bs = false;
    std::vector<std::string> cases;
    std::optional<Divisor> Delta;   // ceil(L) - L in the fractional cases
    std::optional<long> index_l;    // index of the leading coefficient of Delta

    std::string tags() const;
};

/// Single step i = 1 (cases sp-1, sp-2, sp-3); verdict is asserted against
/// the base-locus oracle on ceil(K+B+L).
BaseptClassification basept_step(const BaseptProblem& problem);

/// All 1 <= i <= N, N >= 2. Tags: top-level 4.5-1 / 4.5-2, fractional cases
/// 4.7-1..3 for N = 2 and 4.9-1..4 for N >= 3. Every matching case is
/// reported; the verdict is asserted against the direct oracle.
BaseptClassification successive_basept(const BaseptProblem& problem, long N);

/// All i >= 1. Tags cor-1, cor-2, cor-3 (the irrational branch of the third
/// case has no representable instance).
BaseptClassification successive_basept_infinite(const BaseptProblem& problem);

/// The unclassified route for N >= 2: top-level cases 1/2, or the fractional
/// shape with Q avoiding Bs|floor(i*Delta - B) - (i-1)Q| for 2 <= i <= N.
/// Shares only the base-locus evaluator with the closed-form classifier.
bool successive_basept_reduction(const BaseptProblem& problem, long N);

/// Direct evaluation: Q in Bs|ceil(K+B+iL)| for all 1 <= i <= N.
bool in_bs_through(const BaseptProblem& problem, long N);

}  // namespace fv
