#ifndef RESFIELD_FIELD_HPP
#define RESFIELD_FIELD_HPP

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "resfield/errors.hpp"

namespace resfield {

enum class FieldKind { Rationals, PrimeField, GaussianRationals };

/// Which coefficient field k we are working over. Immutable value type.
class FieldDescriptor {
public:
    static FieldDescriptor rationals() { return FieldDescriptor(FieldKind::Rationals, 0); }
    static FieldDescriptor gaussian_rationals() {
        return FieldDescriptor(FieldKind::GaussianRationals, 0);
    }
    // Throws Error unless p is a prime below 2^31.
    static FieldDescriptor prime_field(std::uint32_t p);

    FieldKind kind() const { return kind_; }
    std::uint32_t modulus() const { return p_; }
    bool is_finite() const { return kind_ == FieldKind::PrimeField; }

    bool operator==(const FieldDescriptor& o) const { return kind_ == o.kind_ && p_ == o.p_; }
    bool operator!=(const FieldDescriptor& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    FieldDescriptor(FieldKind k, std::uint32_t p) : kind_(k), p_(p) {}
    FieldKind kind_;
    std::uint32_t p_;
};

/// Exact element of k in canonical form: reduced fractions with positive
/// denominator, residues in [0,p). Equality is structural.
class FieldElem {
public:
    FieldElem() : desc_(FieldDescriptor::rationals()) {}

    static FieldElem zero(const FieldDescriptor& d);
    static FieldElem one(const FieldDescriptor& d);
    static FieldElem from_integer(const FieldDescriptor& d, long n);
    static FieldElem from_integer(const FieldDescriptor& d, const mpz_class& n);
    // Maps num/den into k; throws DivisionByZero if den vanishes in k.
    static FieldElem from_rational(const FieldDescriptor& d, const mpq_class& q);
    // Gaussian rational re + im*i; requires GaussianRationals when im != 0.
    static FieldElem gaussian(const FieldDescriptor& d, const mpq_class& re, const mpq_class& im);

    const FieldDescriptor& descriptor() const { return desc_; }
    bool is_zero() const;
    bool is_one() const;

    FieldElem operator+(const FieldElem& o) const;
    FieldElem operator-(const FieldElem& o) const;
    FieldElem operator*(const FieldElem& o) const;
    FieldElem operator/(const FieldElem& o) const;  // throws DivisionByZero
    FieldElem operator-() const;
    FieldElem inv() const;  // throws DivisionByZero on 0
    FieldElem pow(long e) const;

    bool operator==(const FieldElem& o) const;
    bool operator!=(const FieldElem& o) const { return !(*this == o); }

    // Deterministic total order used for sorting root sets and printing;
    // not a field order.
    static bool canonical_less(const FieldElem& a, const FieldElem& b);

    std::string to_string() const;
    // Same, but wrapped in parentheses when the rendering is compound
    // (Gaussian a+bi) or starts with a sign, for use in product position.
    std::string to_string_factor() const;

    // Component access; each checked against the descriptor kind.
    const mpq_class& rational() const;
    const mpq_class& gauss_re() const;
    const mpq_class& gauss_im() const;
    std::uint32_t residue() const;

private:
    explicit FieldElem(const FieldDescriptor& d) : desc_(d) {}
    FieldDescriptor desc_;
    mpq_class re_;        // Rationals value / Gaussian real part
    mpq_class im_;        // Gaussian imaginary part
    std::uint64_t res_ = 0;  // PrimeField residue in [0,p)
};

void require_same_descriptor(const FieldDescriptor& a, const FieldDescriptor& b);

/// Stream of the p elements of a prime field; throws InfiniteEnumeration
/// for the infinite descriptors.
class FieldEnumeration {
public:
    explicit FieldEnumeration(const FieldDescriptor& d);
    bool done() const { return next_ >= desc_.modulus(); }
    FieldElem next();
    std::uint32_t size() const { return desc_.modulus(); }

private:
    FieldDescriptor desc_;
    std::uint64_t next_ = 0;
};

/// Deterministic sample from k given a seed.
FieldElem field_sample(const FieldDescriptor& d, std::uint64_t seed);

}  // namespace resfield

#endif
