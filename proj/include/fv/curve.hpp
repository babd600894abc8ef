#pragma once

#include "fv/divcrit.hpp"
#include "fv/divisor.hpp"

#include <map>
#include <string>
#include <vector>

namespace fv {

/// Finitely generated abelian group Z^r + Z/n1 + ... + Z/nk, elements as
/// coordinate vectors (free coordinates first, then one residue per cyclic
/// factor).
struct AbelianGroup {
    long free_rank = 0;
    std::vector<long long> torsion;

    using Elem = std::vector<long long>;

    size_t dim() const { return static_cast<size_t>(free_rank) + torsion.size(); }
    Elem zero() const { return Elem(dim(), 0); }
    Elem reduce(Elem e) const;
    Elem add(const Elem& a, const Elem& b) const;
    Elem neg(const Elem& a) const;
    Elem scale(const Int& k, const Elem& a) const;
    bool is_zero(const Elem& a) const;
    /// Order of the cyclic subgroup generated by a; infinite when a free
    /// coordinate is nonzero.
    Nmax order(const Elem& a) const;

    /// Grammar: coordinates separated by ':', e.g. "1:0:2". "0" is identity.
    Elem parse_elem(std::string_view text) const;
    std::string elem_str(const Elem& a) const;
};

/// Degree-0 class group of an elliptic curve together with the classes of the
/// named points. Points without an explicit assignment map to the identity.
struct PicardModel {
    AbelianGroup group;
    std::map<std::string, AbelianGroup::Elem> point_classes;

    AbelianGroup::Elem class_of_point(const std::string& name) const;
};

enum class CurveKind { P1, Elliptic };

/// Divisor class on the model: exact degree plus, on elliptic curves, the sum
/// of the point classes weighted by the coefficients.
struct DivClass {
    Int degree = 0;
    AbelianGroup::Elem pic0;  // empty on P1
};

/// P^1 or an elliptic curve presented through its Picard model. These are the
/// only genus <= 1 models; higher genus is outside the classification and is
/// unrepresentable here.
class CurveModel {
public:
    static CurveModel p1() { return CurveModel(CurveKind::P1, {}); }
    static CurveModel elliptic(PicardModel m) { return CurveModel(CurveKind::Elliptic, std::move(m)); }

    CurveKind kind() const { return kind_; }
    bool is_p1() const { return kind_ == CurveKind::P1; }
    const PicardModel& picard() const;

    Int canonical_degree() const { return is_p1() ? Int(-2) : Int(0); }
    /// Class of K: degree -2 on P^1, the trivial degree-0 class on elliptic.
    DivClass canonical_class() const;

    /// Requires an integral divisor.
    DivClass div_class(const Divisor& d) const;
    DivClass point_class(const std::string& p) const;
    DivClass class_add(const DivClass& a, const DivClass& b) const;
    DivClass class_sub(const DivClass& a, const DivClass& b) const;
    DivClass class_scale(const Int& k, const DivClass& a) const;
    bool class_eq(const DivClass& a, const DivClass& b) const;
    bool lin_equiv(const Divisor& a, const Divisor& b) const;

    /// h^0 of the class: P^1: max(0, deg+1); elliptic: 0 for deg < 0, 1 or 0
    /// at deg 0 depending on triviality of the class, deg for deg >= 1.
    Int h0(const DivClass& c) const;
    Int h0(const Divisor& d) const { return h0(div_class(d)); }

    /// Rejects elliptic inputs where two distinctly named points among the
    /// divisors' supports (plus the extra names) share a class: distinct
    /// points of an elliptic curve are never linearly equivalent. No-op on
    /// P^1.
    void validate_distinct_points(std::initializer_list<const Divisor*> divs,
                                  std::initializer_list<std::string> extra = {}) const;

    /// Q in Bs|E| for the complete system of the class. Empty systems have
    /// base locus the whole curve.
    bool in_base_locus(const std::string& q, const DivClass& c) const;
    bool in_base_locus(const std::string& q, const Divisor& d) const {
        return in_base_locus(q, div_class(d));
    }

private:
    CurveModel(CurveKind k, PicardModel m) : kind_(k), picard_(std::move(m)) {}

    CurveKind kind_;
    PicardModel picard_;
};

}  // namespace fv
