#include "fv/curve.hpp"

#include <numeric>
#include <stdexcept>

namespace fv {

AbelianGroup::Elem AbelianGroup::reduce(Elem e) const {
    if (e.size() != dim()) throw std::invalid_argument("AbelianGroup: wrong coordinate count");
    for (size_t j = 0; j < torsion.size(); ++j) {
        long long n = torsion[j];
        long long& c = e[free_rank + j];
        c %= n;
        if (c < 0) c += n;
    }
    return e;
}

AbelianGroup::Elem AbelianGroup::add(const Elem& a, const Elem& b) const {
    Elem r(dim());
    for (size_t j = 0; j < dim(); ++j) r[j] = a[j] + b[j];
    return reduce(std::move(r));
}

AbelianGroup::Elem AbelianGroup::neg(const Elem& a) const {
    Elem r(dim());
    for (size_t j = 0; j < dim(); ++j) r[j] = -a[j];
    return reduce(std::move(r));
}

AbelianGroup::Elem AbelianGroup::scale(const Int& k, const Elem& a) const {
    Elem r(dim());
    for (size_t j = 0; j < static_cast<size_t>(free_rank); ++j) {
        Int v = k * a[j];
        r[j] = static_cast<long long>(v);
    }
    for (size_t j = 0; j < torsion.size(); ++j) {
        Int v = (k % torsion[j]) * a[free_rank + j];
        r[free_rank + j] = static_cast<long long>(v % torsion[j]);
    }
    return reduce(std::move(r));
}

bool AbelianGroup::is_zero(const Elem& a) const {
    for (long long c : a)
        if (c != 0) return false;
    return true;
}

Nmax AbelianGroup::order(const Elem& a) const {
    for (size_t j = 0; j < static_cast<size_t>(free_rank); ++j)
        if (a[j] != 0) return Nmax::inf();
    long long ord = 1;
    for (size_t j = 0; j < torsion.size(); ++j) {
        long long n = torsion[j];
        long long c = a[free_rank + j] % n;
        if (c < 0) c += n;
        long long component = n / std::gcd(n, c == 0 ? n : c);
        ord = std::lcm(ord, component);
    }
    return Nmax::finite(ord);
}

AbelianGroup::Elem AbelianGroup::parse_elem(std::string_view text) const {
    if (text == "0") return zero();
    Elem e;
    size_t start = 0;
    while (start <= text.size()) {
        size_t end = text.find(':', start);
        if (end == std::string_view::npos) end = text.size();
        e.push_back(std::stoll(std::string(text.substr(start, end - start))));
        start = end + 1;
        if (end == text.size()) break;
    }
    if (e.size() != dim())
        throw std::invalid_argument("AbelianGroup: element needs " + std::to_string(dim()) +
                                    " coordinates");
    return reduce(std::move(e));
}

std::string AbelianGroup::elem_str(const Elem& a) const {
    if (a.empty()) return "0";
    std::string s;
    for (size_t j = 0; j < a.size(); ++j) {
        if (j) s += ":";
        s += std::to_string(a[j]);
    }
    return s;
}

AbelianGroup::Elem PicardModel::class_of_point(const std::string& name) const {
    auto it = point_classes.find(name);
    return it != point_classes.end() ? it->second : group.zero();
}

const PicardModel& CurveModel::picard() const {
    if (is_p1()) throw std::logic_error("CurveModel: P^1 has no Picard model");
    return picard_;
}

DivClass CurveModel::canonical_class() const {
    DivClass c;
    c.degree = canonical_degree();
    if (!is_p1()) c.pic0 = picard_.group.zero();
    return c;
}

DivClass CurveModel::point_class(const std::string& p) const {
    DivClass c;
    c.degree = 1;
    if (!is_p1()) c.pic0 = picard_.class_of_point(p);
    return c;
}

DivClass CurveModel::class_add(const DivClass& a, const DivClass& b) const {
    DivClass c;
    c.degree = a.degree + b.degree;
    if (!is_p1()) c.pic0 = picard_.group.add(a.pic0, b.pic0);
    return c;
}

DivClass CurveModel::class_sub(const DivClass& a, const DivClass& b) const {
    DivClass c;
    c.degree = a.degree - b.degree;
    if (!is_p1()) c.pic0 = picard_.group.add(a.pic0, picard_.group.neg(b.pic0));
    return c;
}

DivClass CurveModel::class_scale(const Int& k, const DivClass& a) const {
    DivClass c;
    c.degree = k * a.degree;
    if (!is_p1()) c.pic0 = picard_.group.scale(k, a.pic0);
    return c;
}

bool CurveModel::class_eq(const DivClass& a, const DivClass& b) const {
    if (a.degree != b.degree) return false;
    return is_p1() || a.pic0 == b.pic0;
}

DivClass CurveModel::div_class(const Divisor& d) const {
    if (!d.is_integral()) throw std::invalid_argument("div_class: divisor must be integral");
    DivClass c;
    c.degree = d.degree().num();
    if (!is_p1()) {
        c.pic0 = picard_.group.zero();
        for (const auto& [p, coeff] : d.entries())
            c.pic0 = picard_.group.add(c.pic0,
                                       picard_.group.scale(coeff.num(), picard_.class_of_point(p)));
    }
    return c;
}

bool CurveModel::lin_equiv(const Divisor& a, const Divisor& b) const {
    DivClass ca = div_class(a), cb = div_class(b);
    if (ca.degree != cb.degree) return false;
    if (is_p1()) return true;
    return picard_.group.add(ca.pic0, picard_.group.neg(cb.pic0)) ==
           picard_.group.zero();
}

Int CurveModel::h0(const DivClass& c) const {
    if (is_p1()) return c.degree >= -1 ? c.degree + 1 : Int(0);
    if (c.degree < 0) return 0;
    if (c.degree == 0) return picard_.group.is_zero(c.pic0) ? 1 : 0;
    return c.degree;
}

void CurveModel::validate_distinct_points(std::initializer_list<const Divisor*> divs,
                                          std::initializer_list<std::string> extra) const {
    if (is_p1()) return;
    std::map<AbelianGroup::Elem, std::string> seen;
    auto visit = [&](const std::string& name) {
        auto [it, inserted] = seen.emplace(picard_.class_of_point(name), name);
        if (!inserted && it->second != name)
            throw std::invalid_argument("elliptic model: distinct points " + it->second + " and " +
                                        name + " share a class");
    };
    for (const Divisor* d : divs)
        for (const auto& [p, c] : d->entries()) visit(p);
    for (const std::string& name : extra) visit(name);
}

bool CurveModel::in_base_locus(const std::string& q, const DivClass& c) const {
    if (is_p1()) return c.degree < 0;  // nonempty systems on P^1 are free
    if (c.degree < 0) return true;     // empty system: base locus is the curve
    if (c.degree == 0) return !picard_.group.is_zero(c.pic0);
    if (c.degree == 1) {
        // Unique effective member; Q lies in it iff the classes agree.
        return c.pic0 == picard_.class_of_point(q);
    }
    return false;  // deg >= 2 on an elliptic curve is base point free
}

}  // namespace fv
