#pragma once

#include "fv/rational.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace fv {

/// Formal finite sum of named points with exact rational coefficients.
/// Entries are kept sorted by point name; zero coefficients are never stored.
class Divisor {
public:
    using Entry = std::pair<std::string, Rational>;

    Divisor() = default;

    /// Grammar: "c1@P1 + c2@P2 - c3@P3" with ci in Rational grammar and
    /// alphanumeric point names. "" and "0" denote the zero divisor.
    static Divisor parse(std::string_view text);

    const std::vector<Entry>& entries() const { return entries_; }
    bool is_zero() const { return entries_.empty(); }
    size_t num_points() const { return entries_.size(); }

    Rational coeff(std::string_view point) const;
    void set(std::string_view point, Rational c);

    Rational degree() const;
    bool is_integral() const;
    bool is_effective() const;  // all coefficients >= 0

    Divisor operator-() const;
    Divisor& operator+=(const Divisor& o);
    Divisor& operator-=(const Divisor& o);
    friend Divisor operator+(Divisor a, const Divisor& b) { return a += b; }
    friend Divisor operator-(Divisor a, const Divisor& b) { return a -= b; }
    friend Divisor operator*(const Rational& c, const Divisor& d);

    friend bool operator==(const Divisor& a, const Divisor& b) { return a.entries_ == b.entries_; }

    /// Canonical printing: entries sorted by point name; zero divisor is "0".
    std::string str() const;

private:
    std::vector<Entry> entries_;
};

/// Componentwise coefficient comparison a <= b over the union of supports.
bool leq(const Divisor& a, const Divisor& b);

Divisor round_up(const Divisor& d);
Divisor round_down(const Divisor& d);
Divisor frac(const Divisor& d);
/// Componentwise minimum over the union of supports.
Divisor min(const Divisor& a, const Divisor& b);

inline Rational degree(const Divisor& d) { return d.degree(); }

/// Point of maximal multiplicity P (ties broken by point-name order), the
/// runner-up P', and the remainder rest = D - delta P - delta' P'.
struct TopCoefficients {
    std::optional<std::string> p;
    Rational delta;  // 0 if absent
    std::optional<std::string> p_prime;
    Rational delta_prime;  // 0 if absent
    Divisor rest;
};

/// Requires D >= 0.
TopCoefficients top_two(const Divisor& d);

}  // namespace fv
