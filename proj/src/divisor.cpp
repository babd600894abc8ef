#include "fv/divisor.hpp"

#include <algorithm>
#include <cctype>

namespace fv {

namespace {

bool name_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

}  // namespace

Divisor Divisor::parse(std::string_view text) {
    Divisor d;
    size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip_ws();
    if (i == text.size()) return d;
    if (text.substr(i) == "0") return d;

    bool first = true;
    while (i < text.size()) {
        skip_ws();
        int sign = 1;
        if (!first || text[i] == '+' || text[i] == '-') {
            if (i >= text.size() || (text[i] != '+' && text[i] != '-'))
                throw std::invalid_argument("Divisor: expected '+' or '-' at position " + std::to_string(i));
            if (text[i] == '-') sign = -1;
            ++i;
            skip_ws();
        }
        size_t cstart = i;
        while (i < text.size() && text[i] != '@') ++i;
        if (i == text.size())
            throw std::invalid_argument("Divisor: missing '@' in term starting at position " + std::to_string(cstart));
        std::string_view ctext = text.substr(cstart, i - cstart);
        while (!ctext.empty() && std::isspace(static_cast<unsigned char>(ctext.back()))) ctext.remove_suffix(1);
        Rational c = Rational::parse(ctext);
        ++i;  // '@'
        size_t nstart = i;
        while (i < text.size() && name_char(text[i])) ++i;
        if (i == nstart)
            throw std::invalid_argument("Divisor: missing point name at position " + std::to_string(nstart));
        std::string name(text.substr(nstart, i - nstart));
        d.set(name, d.coeff(name) + Rational(sign) * c);
        first = false;
        skip_ws();
    }
    return d;
}

Rational Divisor::coeff(std::string_view point) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), point,
                               [](const Entry& e, std::string_view p) { return e.first < p; });
    if (it != entries_.end() && it->first == point) return it->second;
    return Rational(0);
}

void Divisor::set(std::string_view point, Rational c) {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), point,
                               [](const Entry& e, std::string_view p) { return e.first < p; });
    if (it != entries_.end() && it->first == point) {
        if (c.is_zero())
            entries_.erase(it);
        else
            it->second = std::move(c);
    } else if (!c.is_zero()) {
        entries_.insert(it, Entry(std::string(point), std::move(c)));
    }
}

Rational Divisor::degree() const {
    Rational sum(0);
    for (const auto& [_, c] : entries_) sum += c;
    return sum;
}

bool Divisor::is_integral() const {
    return std::all_of(entries_.begin(), entries_.end(),
                       [](const Entry& e) { return e.second.is_integer(); });
}

bool Divisor::is_effective() const {
    return std::all_of(entries_.begin(), entries_.end(),
                       [](const Entry& e) { return e.second >= Rational(0); });
}

Divisor Divisor::operator-() const {
    Divisor r;
    r.entries_.reserve(entries_.size());
    for (const auto& [p, c] : entries_) r.entries_.emplace_back(p, -c);
    return r;
}

Divisor& Divisor::operator+=(const Divisor& o) {
    for (const auto& [p, c] : o.entries_) set(p, coeff(p) + c);
    return *this;
}

Divisor& Divisor::operator-=(const Divisor& o) {
    for (const auto& [p, c] : o.entries_) set(p, coeff(p) - c);
    return *this;
}

Divisor operator*(const Rational& c, const Divisor& d) {
    Divisor r;
    if (c.is_zero()) return r;
    for (const auto& [p, x] : d.entries()) r.set(p, c * x);
    return r;
}

std::string Divisor::str() const {
    if (entries_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [p, c] : entries_) {
        if (first) {
            if (c < Rational(0)) s += "-";
            first = false;
        } else {
            s += c < Rational(0) ? " - " : " + ";
        }
        Rational a = c < Rational(0) ? -c : c;
        s += a.str() + "@" + p;
    }
    return s;
}

bool leq(const Divisor& a, const Divisor& b) {
    for (const auto& [p, c] : a.entries())
        if (c > b.coeff(p)) return false;
    for (const auto& [p, c] : b.entries())
        if (c < Rational(0) && a.coeff(p).is_zero()) return false;
    return true;
}

Divisor round_up(const Divisor& d) {
    Divisor r;
    for (const auto& [p, c] : d.entries()) r.set(p, Rational(c.ceil()));
    return r;
}

Divisor round_down(const Divisor& d) {
    Divisor r;
    for (const auto& [p, c] : d.entries()) r.set(p, Rational(c.floor()));
    return r;
}

Divisor frac(const Divisor& d) { return d - round_down(d); }

Divisor min(const Divisor& a, const Divisor& b) {
    Divisor r;
    for (const auto& [p, c] : a.entries()) r.set(p, std::min(c, b.coeff(p)));
    for (const auto& [p, c] : b.entries()) r.set(p, std::min(c, a.coeff(p)));
    return r;
}

TopCoefficients top_two(const Divisor& d) {
    if (!d.is_effective()) throw std::invalid_argument("top_two: divisor must be effective");
    TopCoefficients t;
    t.rest = d;
    for (int round = 0; round < 2; ++round) {
        const Divisor::Entry* best = nullptr;
        for (const auto& e : t.rest.entries())
            if (!best || e.second > best->second) best = &e;
        if (!best) break;
        if (round == 0) {
            t.p = best->first;
            t.delta = best->second;
        } else {
            t.p_prime = best->first;
            t.delta_prime = best->second;
        }
        Divisor rest = t.rest;
        rest.set(best->first, Rational(0));
        t.rest = std::move(rest);
    }
    return t;
}

}  // namespace fv
