#ifndef RESFIELD_SERIES_HPP
#define RESFIELD_SERIES_HPP

#include <string>
#include <utility>
#include <vector>

#include "resfield/poly.hpp"
#include "resfield/value.hpp"

namespace resfield {

/// Exact element of the rational Puiseux subfield of k((t^Q)), stored in
/// canonical form
///
///     t^(m/e) * u(s) / w(s),   s = t^(1/e),
///
/// with u(0) != 0, w(0) = 1, gcd(u,w) = 1 and e minimal; zero is
/// a dedicated marker. The valuation is m/e by construction. Values are
/// immutable; equality is structural.
class SeriesElem {
public:
    explicit SeriesElem(const FieldDescriptor& d)
        : desc_(d), zero_(true), num_(d), den_(d) {}

    static SeriesElem zero(const FieldDescriptor& d) { return SeriesElem(d); }
    static SeriesElem one(const FieldDescriptor& d) {
        return constant(FieldElem::one(d));
    }
    static SeriesElem t(const FieldDescriptor& d) { return t_power(d, mpq_class(1)); }
    /// The lift ι: the constant series with residue c.
    static SeriesElem constant(const FieldElem& c);
    static SeriesElem t_power(const FieldDescriptor& d, const mpq_class& q);
    static SeriesElem monomial(const FieldElem& c, const mpq_class& q);
    /// General constructor t^(shift/ram) * u / w, canonicalized; w nonzero.
    static SeriesElem make(const FieldDescriptor& d, long long ram, long long shift,
                           const Poly& u, const Poly& w);

    const FieldDescriptor& descriptor() const { return desc_; }
    bool is_zero() const { return zero_; }
    /// True iff the element lies in ι(k).
    bool is_constant() const;

    SeriesElem operator+(const SeriesElem& o) const;
    SeriesElem operator-(const SeriesElem& o) const;
    SeriesElem operator-() const;
    SeriesElem operator*(const SeriesElem& o) const;
    SeriesElem operator/(const SeriesElem& o) const;
    SeriesElem inverse() const;  // throws DivisionByZero on 0

    bool operator==(const SeriesElem& o) const;
    bool operator!=(const SeriesElem& o) const { return !(*this == o); }

    /// v: K -> Gamma ∪ {∞}.
    ValueQ val() const;
    /// Exact coefficient of t^q (0 when q is below the valuation or has a
    /// denominator incompatible with the ramification).
    FieldElem coeff_at(const mpq_class& q) const;
    /// The residue map π on the valuation ring; throws NotInValuationRing.
    FieldElem residue_pi() const;
    /// The total residue res: constant-coefficient extractor, defined on all of K.
    FieldElem total_res() const;
    /// Res0 = res(t * a): the coefficient of t^-1.
    FieldElem res0() const;
    /// p_a(X) = sum_n c_{-n} X^n over the (finite) non-positive integer support.
    Poly extract_pa() const;
    /// All (q, c_q) with c_q != 0 and v(a) <= q <= up_to, exponents increasing.
    std::vector<std::pair<mpq_class, FieldElem>> truncated_expansion(const mpq_class& up_to) const;

    // canonical-form access
    long long ram() const { return ram_; }
    long long shift() const { return shift_; }
    const Poly& unit_num() const { return num_; }
    const Poly& unit_den() const { return den_; }

    std::string to_string() const;
    /// True when to_string() renders a single monomial with no leading sign.
    bool prints_atomically() const;

private:
    FieldDescriptor desc_;
    bool zero_;
    long long ram_ = 1;
    long long shift_ = 0;
    Poly num_, den_;

    static SeriesElem canonical(const FieldDescriptor& d, long long ram, long long shift,
                                Poly u, Poly w);
    // Coefficients h_0..h_n of the power-series expansion of num_/den_.
    std::vector<FieldElem> expand_unit(std::size_t n) const;
};

inline SeriesElem lift_iota(const FieldElem& c) { return SeriesElem::constant(c); }

}  // namespace resfield

#endif
