#pragma once

#include "fv/curve.hpp"
#include "fv/divcrit.hpp"
#include "fv/divisor.hpp"

#include <optional>
#include <string>
#include <vector>

namespace fv {

/// Data of the systems |ceil(K + B + iL)| on a fixed curve model.
struct AdjointProblem {
    CurveModel curve;
    Divisor L;
    Divisor B;

    /// Throws naming the violated hypothesis (B >= 0, deg L >= 0).
    void validate() const;
};

enum class VanishCase { V2_1, V2_2, V2_3, Nonempty };

std::string vanish_case_tag(VanishCase c);

struct VanishingReport {
    /// Largest N with emptiness for all 1 <= i <= N (0: nonempty already at
    /// i = 1).
    Nmax n_max;
    VanishCase tag = VanishCase::Nonempty;
    /// Case v2-2: Delta = ceil(L) - L (intrinsic in the class of L).
    Divisor delta;
    /// Case v2-3: order of the class of L.
    std::optional<Nmax> torsion_order;
    /// Infinite case v2-2 with B != 0: index of the fractional step.
    std::optional<long> index_l;

    bool empty_through(long N) const { return n_max.at_least(N); }
};

/// Full analysis: case tag plus the exact largest N with successive
/// emptiness (possibly 0 or infinity).
VanishingReport analyze_vanishing(const AdjointProblem& problem);

/// Emptiness of |ceil(K + B + L)| with the case of the one-step
/// classification.
VanishingReport is_empty_adjoint(const AdjointProblem& problem);

/// Emptiness for all 1 <= i <= N; report's n_max tells how far it goes.
VanishingReport successive_empty(const AdjointProblem& problem, long N);

/// Emptiness for all i >= 1.
VanishingReport successive_empty_infinite(const AdjointProblem& problem);

/// A maximal shape x'P' - xP per consecutive Farey gap of order N, with the
/// least index i making i*L integral of degree 1 (searched; 0 for the N = 1
/// shape P').
struct MaximalShape {
    Rational x;        // coefficient at -P (0 drops the P term)
    Rational x_prime;  // coefficient at P'
    long free_index;
};

std::vector<MaximalShape> maximal_L(long N);

/// Dichotomy for B on P^1 with deg(K+B) >= 0: either a multiple of K+B is
/// principal early, or an adjoint system becomes nonempty early.
struct NvlReport {
    char branch = 0;  // 'a' or 'b'
    long n = 0;       // branch a: least n with nm(K+B) ~ 0; branch b: least n
                      // with |ceil(K + nm(K+B))| nonempty
    /// deg floor(B) >= 1 preamble, branch a: minimal r with r(K+B) ~ 0;
    /// nonemptiness then holds exactly when r does not divide n.
    std::optional<long> r;
};

/// Bounds: branch a within 2l, branch b within (l+1)^2 + 1. Requires the
/// smallest two nonzero coefficients of frac(mB) of the form 1 - p/q, p <= l
/// (checked), or the deg floor(B) >= 1 preamble path.
NvlReport nvl_dichotomy(long m, const Divisor& B, long l);

/// Standard-coefficient specialization: smallest two nonzero coefficients of
/// frac(m*B) of the form 1 - 1/q (checked on frac(m*B), not on B — multiples
/// of a standard B need not stay standard, and the small bounds fail for
/// them); bounds 2 and 5.
NvlReport nvl_standard(long m, const Divisor& B);

}  // namespace fv
