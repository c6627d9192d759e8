#include "resfield/field.hpp"

#include <utility>

namespace resfield {

namespace {

bool is_prime_u32(std::uint32_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t f = 3; f * f <= n; f += 2) {
        if (n % f == 0) return false;
    }
    return true;
}

std::uint64_t mod_pow(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    b %= p;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

mpq_class reduced(const mpz_class& num, const mpz_class& den) {
    mpq_class q(num, den);
    q.canonicalize();
    return q;
}

}  // namespace

FieldDescriptor FieldDescriptor::prime_field(std::uint32_t p) {
    if (p >= (1u << 31)) throw Error("prime modulus must be below 2^31");
    if (!is_prime_u32(p)) throw Error("modulus " + std::to_string(p) + " is not prime");
    return FieldDescriptor(FieldKind::PrimeField, p);
}

std::string FieldDescriptor::to_string() const {
    switch (kind_) {
        case FieldKind::Rationals: return "Q";
        case FieldKind::GaussianRationals: return "Qi";
        case FieldKind::PrimeField: return "Fp:" + std::to_string(p_);
    }
    return "?";
}

void require_same_descriptor(const FieldDescriptor& a, const FieldDescriptor& b) {
    if (a != b)
        throw DescriptorMismatch("operands over " + a.to_string() + " and " + b.to_string());
}

FieldElem FieldElem::zero(const FieldDescriptor& d) { return FieldElem(d); }

FieldElem FieldElem::one(const FieldDescriptor& d) { return from_integer(d, 1L); }

FieldElem FieldElem::from_integer(const FieldDescriptor& d, long n) {
    return from_integer(d, mpz_class(n));
}

FieldElem FieldElem::from_integer(const FieldDescriptor& d, const mpz_class& n) {
    FieldElem e(d);
    if (d.kind() == FieldKind::PrimeField) {
        mpz_class r = n % d.modulus();
        if (r < 0) r += d.modulus();
        e.res_ = r.get_ui();
    } else {
        e.re_ = mpq_class(n);
    }
    return e;
}

FieldElem FieldElem::from_rational(const FieldDescriptor& d, const mpq_class& q) {
    if (d.kind() == FieldKind::PrimeField) {
        FieldElem num = from_integer(d, q.get_num());
        FieldElem den = from_integer(d, q.get_den());
        return num / den;
    }
    FieldElem e(d);
    e.re_ = q;
    e.re_.canonicalize();
    return e;
}

FieldElem FieldElem::gaussian(const FieldDescriptor& d, const mpq_class& re, const mpq_class& im) {
    if (im != 0 && d.kind() != FieldKind::GaussianRationals)
        throw Error("imaginary part requires the Gaussian rationals (--field Qi)");
    FieldElem e = from_rational(d, re);
    if (d.kind() == FieldKind::GaussianRationals) {
        e.im_ = im;
        e.im_.canonicalize();
    }
    return e;
}

bool FieldElem::is_zero() const {
    switch (desc_.kind()) {
        case FieldKind::Rationals: return re_ == 0;
        case FieldKind::GaussianRationals: return re_ == 0 && im_ == 0;
        case FieldKind::PrimeField: return res_ == 0;
    }
    return false;
}

bool FieldElem::is_one() const {
    switch (desc_.kind()) {
        case FieldKind::Rationals: return re_ == 1;
        case FieldKind::GaussianRationals: return re_ == 1 && im_ == 0;
        case FieldKind::PrimeField: return res_ == 1 % desc_.modulus();
    }
    return false;
}

FieldElem FieldElem::operator+(const FieldElem& o) const {
    require_same_descriptor(desc_, o.desc_);
    FieldElem r(desc_);
    switch (desc_.kind()) {
        case FieldKind::Rationals:
            r.re_ = re_ + o.re_;
            break;
        case FieldKind::GaussianRationals:
            r.re_ = re_ + o.re_;
            r.im_ = im_ + o.im_;
            break;
        case FieldKind::PrimeField: {
            std::uint64_t s = res_ + o.res_;
            if (s >= desc_.modulus()) s -= desc_.modulus();
            r.res_ = s;
            break;
        }
    }
    return r;
}

FieldElem FieldElem::operator-() const {
    FieldElem r(desc_);
    switch (desc_.kind()) {
        case FieldKind::Rationals:
            r.re_ = -re_;
            break;
        case FieldKind::GaussianRationals:
            r.re_ = -re_;
            r.im_ = -im_;
            break;
        case FieldKind::PrimeField:
            r.res_ = res_ == 0 ? 0 : desc_.modulus() - res_;
            break;
    }
    return r;
}

FieldElem FieldElem::operator-(const FieldElem& o) const { return *this + (-o); }

FieldElem FieldElem::operator*(const FieldElem& o) const {
    require_same_descriptor(desc_, o.desc_);
    FieldElem r(desc_);
    switch (desc_.kind()) {
        case FieldKind::Rationals:
            r.re_ = re_ * o.re_;
            break;
        case FieldKind::GaussianRationals:
            r.re_ = re_ * o.re_ - im_ * o.im_;
            r.im_ = re_ * o.im_ + im_ * o.re_;
            break;
        case FieldKind::PrimeField:
            r.res_ = res_ * o.res_ % desc_.modulus();
            break;
    }
    return r;
}

FieldElem FieldElem::inv() const {
    if (is_zero()) throw DivisionByZero("inverse of zero in " + desc_.to_string());
    FieldElem r(desc_);
    switch (desc_.kind()) {
        case FieldKind::Rationals:
            r.re_ = reduced(re_.get_den(), re_.get_num());
            break;
        case FieldKind::GaussianRationals: {
            mpq_class n = re_ * re_ + im_ * im_;
            r.re_ = re_ / n;
            r.im_ = -im_ / n;
            r.re_.canonicalize();
            r.im_.canonicalize();
            break;
        }
        case FieldKind::PrimeField:
            r.res_ = mod_pow(res_, desc_.modulus() - 2, desc_.modulus());
            break;
    }
    return r;
}

FieldElem FieldElem::operator/(const FieldElem& o) const { return *this * o.inv(); }

FieldElem FieldElem::pow(long e) const {
    if (e < 0) return inv().pow(-e);
    FieldElem r = one(desc_);
    FieldElem b = *this;
    unsigned long n = static_cast<unsigned long>(e);
    while (n) {
        if (n & 1) r = r * b;
        b = b * b;
        n >>= 1;
    }
    return r;
}

bool FieldElem::operator==(const FieldElem& o) const {
    if (desc_ != o.desc_) return false;
    switch (desc_.kind()) {
        case FieldKind::Rationals: return re_ == o.re_;
        case FieldKind::GaussianRationals: return re_ == o.re_ && im_ == o.im_;
        case FieldKind::PrimeField: return res_ == o.res_;
    }
    return false;
}

bool FieldElem::canonical_less(const FieldElem& a, const FieldElem& b) {
    require_same_descriptor(a.desc_, b.desc_);
    switch (a.desc_.kind()) {
        case FieldKind::Rationals: return a.re_ < b.re_;
        case FieldKind::GaussianRationals:
            if (a.re_ != b.re_) return a.re_ < b.re_;
            return a.im_ < b.im_;
        case FieldKind::PrimeField: return a.res_ < b.res_;
    }
    return false;
}

namespace {

// Renders q, and q*i for the imaginary part: 1 -> "i", -1 -> "-i",
// 2 -> "2i", 2/3 -> "(2/3)*i" (the last keeps output reparseable).
std::string imag_str(const mpq_class& q) {
    if (q == 1) return "i";
    if (q == -1) return "-i";
    if (q.get_den() == 1) return q.get_str() + "i";
    if (q < 0) return "-(" + mpq_class(-q).get_str() + ")*i";
    return "(" + q.get_str() + ")*i";
}

}  // namespace

std::string FieldElem::to_string() const {
    switch (desc_.kind()) {
        case FieldKind::Rationals: return re_.get_str();
        case FieldKind::PrimeField: return std::to_string(res_);
        case FieldKind::GaussianRationals: {
            if (im_ == 0) return re_.get_str();
            if (re_ == 0) return imag_str(im_);
            std::string s = re_.get_str();
            if (im_ > 0)
                s += "+" + imag_str(im_);
            else
                s += "-" + imag_str(-im_);
            return s;
        }
    }
    return "?";
}

std::string FieldElem::to_string_factor() const {
    std::string s = to_string();
    bool compound = s.find('+') != std::string::npos || s.find('-') != std::string::npos;
    if (compound) return "(" + s + ")";
    return s;
}

const mpq_class& FieldElem::rational() const {
    if (desc_.kind() != FieldKind::Rationals) throw Error("not a rational field element");
    return re_;
}

const mpq_class& FieldElem::gauss_re() const {
    if (desc_.kind() != FieldKind::GaussianRationals) throw Error("not a Gaussian rational");
    return re_;
}

const mpq_class& FieldElem::gauss_im() const {
    if (desc_.kind() != FieldKind::GaussianRationals) throw Error("not a Gaussian rational");
    return im_;
}

std::uint32_t FieldElem::residue() const {
    if (desc_.kind() != FieldKind::PrimeField) throw Error("not a prime-field element");
    return static_cast<std::uint32_t>(res_);
}

FieldEnumeration::FieldEnumeration(const FieldDescriptor& d) : desc_(d) {
    if (!d.is_finite())
        throw InfiniteEnumeration("cannot enumerate " + d.to_string());
}

FieldElem FieldEnumeration::next() {
    FieldElem e = FieldElem::from_integer(desc_, mpz_class(static_cast<unsigned long>(next_)));
    ++next_;
    return e;
}

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

mpq_class sample_rational(std::uint64_t& state) {
    long num = static_cast<long>(splitmix64(state) % 33) - 16;  // [-16,16]
    long den = static_cast<long>(splitmix64(state) % 8) + 1;    // [1,8]
    mpq_class q(num, den);
    q.canonicalize();
    return q;
}

}  // namespace

FieldElem field_sample(const FieldDescriptor& d, std::uint64_t seed) {
    std::uint64_t state = seed;
    switch (d.kind()) {
        case FieldKind::Rationals:
            return FieldElem::from_rational(d, sample_rational(state));
        case FieldKind::GaussianRationals: {
            mpq_class re = sample_rational(state);
            mpq_class im = sample_rational(state);
            return FieldElem::gaussian(d, re, im);
        }
        case FieldKind::PrimeField:
            return FieldElem::from_integer(
                d, mpz_class(static_cast<unsigned long>(splitmix64(state) % d.modulus())));
    }
    throw Error("unreachable");
}

}  // namespace resfield
