#ifndef RESFIELD_POLY_HPP
#define RESFIELD_POLY_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "resfield/field.hpp"

namespace resfield {

/// Univariate polynomial over k, coefficients indexed from degree 0.
/// The zero polynomial is the empty sequence; its degree is nullopt
/// (a distinct sentinel, not a number).
class Poly {
public:
    explicit Poly(const FieldDescriptor& d) : desc_(d) {}

    static Poly zero(const FieldDescriptor& d) { return Poly(d); }
    static Poly one(const FieldDescriptor& d) { return constant(FieldElem::one(d)); }
    static Poly x(const FieldDescriptor& d) { return monomial(FieldElem::one(d), 1); }
    static Poly constant(const FieldElem& c);
    static Poly monomial(const FieldElem& c, std::size_t k);
    static Poly from_coeffs(const FieldDescriptor& d, std::vector<FieldElem> coeffs);

    const FieldDescriptor& descriptor() const { return desc_; }
    std::optional<long> degree() const {
        if (c_.empty()) return std::nullopt;
        return static_cast<long>(c_.size()) - 1;
    }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
    bool is_constant() const { return c_.size() <= 1; }

    // Coefficient of X^i; zero beyond the degree.
    FieldElem coeff(std::size_t i) const {
        return i < c_.size() ? c_[i] : FieldElem::zero(desc_);
    }
    const std::vector<FieldElem>& coeffs() const { return c_; }
    FieldElem leading() const;
    // Smallest index with nonzero coefficient; nullopt for 0.
    std::optional<std::size_t> order() const;

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator-() const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const FieldElem& s) const;
    bool operator==(const Poly& o) const { return desc_ == o.desc_ && c_ == o.c_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    FieldElem eval(const FieldElem& y) const;  // Horner
    Poly derivative() const;
    Poly pow(unsigned long n) const;

    // Quotient and remainder; divisor nonzero.
    static std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b);
    // Monic gcd; gcd(0,0) = 0.
    static Poly gcd(const Poly& a, const Poly& b);
    Poly monic() const;

    // Divide out X^k (requires order() >= k).
    Poly shift_down(std::size_t k) const;
    Poly shift_up(std::size_t k) const;
    // X -> X^g on exponents.
    Poly inflate(std::size_t g) const;
    // Inverse of inflate; every nonzero exponent must be divisible by g.
    Poly compress(std::size_t g) const;

    std::string to_string(const std::string& var) const;  // descending powers

private:
    void trim();
    FieldDescriptor desc_;
    std::vector<FieldElem> c_;
};

struct RootsInK {
    bool all_of_k = false;              // true exactly for the zero polynomial
    std::vector<FieldElem> roots;       // canonical order, distinct
};

/// All roots of f lying in k. PrimeField: exhaustive evaluation over the p
/// residues. Rationals / GaussianRationals: content normalization to
/// (Gaussian-)integer coefficients, square-free reduction, then candidate
/// enumeration over divisors of the extreme coefficients.
RootsInK poly_roots_in_k(const Poly& f);

}  // namespace resfield

#endif
