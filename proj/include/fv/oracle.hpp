#pragma once

#include "fv/basept.hpp"
#include "fv/vanish.hpp"

#include <string>
#include <vector>

namespace fv {

/// h0-based emptiness of |ceil(K+B+iL)|; shares only the divisor/class
/// plumbing with the classifiers, none of their closed-form logic.
bool empty_adjoint_oracle(const AdjointProblem& pr, long i);

/// Number of consecutive indices i = 1, 2, ... (up to horizon) with
/// |ceil(K+B+iL)| empty.
long empty_streak_oracle(const AdjointProblem& pr, long horizon);

/// Q in Bs|E| decided through h0(E - Q) = h0(E) (with Bs of an empty system
/// the whole curve).
bool in_bs_oracle(const CurveModel& curve, const std::string& q, const DivClass& e);

/// Number of consecutive indices i = 1, 2, ... (up to horizon) with
/// Q in Bs|ceil(K+B+iL)|.
long bs_streak_oracle(const BaseptProblem& pr, long horizon);

enum class Suite { Floor, Divisor, Vanish, Basept, CrossModule };

std::string suite_name(Suite s);
Suite parse_suite(const std::string& name);

struct SweepConfig {
    Suite suite = Suite::Floor;
    long max_denominator = 6;
    /// Denominator bound for the boundary-part grids; 0 means
    /// max_denominator.
    long max_b_denominator = 0;
    long max_points = 3;
    long max_N = 6;
    /// Elliptic torsion orders to instantiate (vanish/basept suites).
    std::vector<long> torsion_orders;
    /// Worker threads for the parallel engine; 0 uses all hardware threads.
    int jobs = 0;

    long b_den() const { return max_b_denominator > 0 ? max_b_denominator : max_denominator; }
    void validate() const;
};

struct Mismatch {
    long long instance = 0;  // position in the deterministic enumeration
    std::string input;
    std::string classifier;
    std::string oracle;
};

struct SweepReport {
    std::string suite;
    long long grid_size = 0;
    /// Candidates rejected for violating standing hypotheses, counted at the
    /// enumeration level where they were rejected.
    long long skipped = 0;
    std::vector<Mismatch> mismatches;
    double elapsed_seconds = 0;

    bool success() const { return mismatches.empty(); }
};

/// Chunked parallel engine; mismatches are merged in enumeration order, so
/// the report is deterministic and equal to the serial one.
SweepReport sweep(const SweepConfig& config);

/// Plain-loop reference engine.
SweepReport sweep_serial(const SweepConfig& config);

}  // namespace fv
