#ifndef RESFIELD_EXT_VALUATION_HPP
#define RESFIELD_EXT_VALUATION_HPP

#include <map>
#include <string>

#include "resfield/series.hpp"

namespace resfield {

/// Value in Z*gamma ⊕_lex Gamma, the group of the infinitesimal extension
/// of v to K(X). The gamma component dominates: (m,q) < (m',q') iff m < m'
/// or (m = m' and q < q'). X itself has value (1, 0), a positive
/// infinitesimal beyond Gamma.
struct LexValue {
    long long x_degree = 0;
    ValueQ base;

    bool operator==(const LexValue& o) const {
        return x_degree == o.x_degree && base == o.base;
    }
    bool operator!=(const LexValue& o) const { return !(*this == o); }
    bool operator<(const LexValue& o) const {
        if (x_degree != o.x_degree) return x_degree < o.x_degree;
        return base < o.base;
    }
    LexValue operator+(const LexValue& o) const {
        return {x_degree + o.x_degree, base + o.base};
    }
    LexValue operator-(const LexValue& o) const {
        return {x_degree - o.x_degree, base - o.base};
    }
    std::string to_string() const {
        return "(" + std::to_string(x_degree) + ", " + base.to_string() + ")";
    }
};

inline LexValue min(const LexValue& a, const LexValue& b) { return a < b ? a : b; }

/// Rational function over k in the Gauss residue variable x, kept coprime
/// with the denominator normalized to leading coefficient 1.
class RatFuncK {
public:
    explicit RatFuncK(const FieldDescriptor& d)
        : num_(Poly::zero(d)), den_(Poly::one(d)) {}
    static RatFuncK make(const Poly& num, const Poly& den);  // den != 0
    static RatFuncK from_poly(const Poly& p) { return make(p, Poly::one(p.descriptor())); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    RatFuncK operator*(const RatFuncK& o) const;
    RatFuncK operator+(const RatFuncK& o) const;
    bool operator==(const RatFuncK& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFuncK& o) const { return !(*this == o); }

    std::string to_string(const std::string& var = "x") const;

private:
    Poly num_, den_;
};

/// Laurent polynomial / rational function in X over the series field K,
/// the carrier of the Gauss and infinitesimal valuations. Canonical form
/// removes the common monomial factor X^j (the smallest X-exponent present
/// in numerator or denominator is 0); no coprime reduction in X is
/// performed — both valuations are representative-independent.
class ExtRatFunc {
public:
    using Coeffs = std::map<long long, SeriesElem>;  // exponent -> nonzero coeff

    explicit ExtRatFunc(const FieldDescriptor& d);
    /// num / den as maps from X-exponent to coefficient; den must be nonzero.
    static ExtRatFunc make(const FieldDescriptor& d, const Coeffs& num, const Coeffs& den);
    static ExtRatFunc from_series(const SeriesElem& c);
    static ExtRatFunc x_power(const FieldDescriptor& d, long long e);

    const FieldDescriptor& descriptor() const { return desc_; }
    const Coeffs& num() const { return num_; }
    const Coeffs& den() const { return den_; }
    bool is_zero() const { return num_.empty(); }
    bool den_is_one() const;

    ExtRatFunc operator+(const ExtRatFunc& o) const;
    ExtRatFunc operator-(const ExtRatFunc& o) const;
    ExtRatFunc operator-() const;
    ExtRatFunc operator*(const ExtRatFunc& o) const;
    ExtRatFunc operator/(const ExtRatFunc& o) const;  // throws DivisionByZero
    ExtRatFunc inverse() const;

    std::string to_string() const;

private:
    FieldDescriptor desc_;
    Coeffs num_, den_;
    void canonicalize();
};

/// Gauss valuation w(sum a_i X^i) = min v(a_i), extended to quotients.
/// Throws DivisionByZero on 0.
ValueQ gauss_val(const ExtRatFunc& f);

/// Gauss residue: coefficient-wise pi after scaling numerator and
/// denominator by t^-w; defined when gauss_val(f) = 0, else throws
/// NotInValuationRing. The residue of X is the transcendental x.
RatFuncK gauss_residue(const ExtRatFunc& f);

/// The unique valuation with w(X) > Gamma, valued in Z*gamma ⊕_lex Gamma.
/// Throws DivisionByZero on 0.
LexValue infinitesimal_val(const ExtRatFunc& f);

/// Expression in the transcendental X with closed series coefficients, e.g.
/// `(1 - t*X)` or `X^-2 + 3*X^-1 + t`.
ExtRatFunc parse_ext_ratfunc(const std::string& text, const FieldDescriptor& d);

}  // namespace resfield

#endif
