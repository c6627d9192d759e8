#include "resfield/poly.hpp"

#include <algorithm>

namespace resfield {

void Poly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::constant(const FieldElem& c) {
    Poly p(c.descriptor());
    if (!c.is_zero()) p.c_.push_back(c);
    return p;
}

Poly Poly::monomial(const FieldElem& c, std::size_t k) {
    Poly p(c.descriptor());
    if (c.is_zero()) return p;
    p.c_.assign(k, FieldElem::zero(c.descriptor()));
    p.c_.push_back(c);
    return p;
}

Poly Poly::from_coeffs(const FieldDescriptor& d, std::vector<FieldElem> coeffs) {
    Poly p(d);
    for (const auto& c : coeffs) require_same_descriptor(d, c.descriptor());
    p.c_ = std::move(coeffs);
    p.trim();
    return p;
}

FieldElem Poly::leading() const {
    return c_.empty() ? FieldElem::zero(desc_) : c_.back();
}

std::optional<std::size_t> Poly::order() const {
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (!c_[i].is_zero()) return i;
    return std::nullopt;
}

Poly Poly::operator+(const Poly& o) const {
    require_same_descriptor(desc_, o.desc_);
    Poly r(desc_);
    r.c_.resize(std::max(c_.size(), o.c_.size()), FieldElem::zero(desc_));
    for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = coeff(i) + o.coeff(i);
    r.trim();
    return r;
}

Poly Poly::operator-() const {
    Poly r(desc_);
    r.c_.reserve(c_.size());
    for (const auto& c : c_) r.c_.push_back(-c);
    return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
    require_same_descriptor(desc_, o.desc_);
    if (is_zero() || o.is_zero()) return Poly(desc_);
    Poly r(desc_);
    r.c_.assign(c_.size() + o.c_.size() - 1, FieldElem::zero(desc_));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j)
            r.c_[i + j] = r.c_[i + j] + c_[i] * o.c_[j];
    }
    r.trim();
    return r;
}

Poly Poly::operator*(const FieldElem& s) const {
    if (s.is_zero()) return Poly(desc_);
    Poly r(desc_);
    r.c_.reserve(c_.size());
    for (const auto& c : c_) r.c_.push_back(c * s);
    r.trim();
    return r;
}

FieldElem Poly::eval(const FieldElem& y) const {
    require_same_descriptor(desc_, y.descriptor());
    FieldElem acc = FieldElem::zero(desc_);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * y + c_[i];
    return acc;
}

Poly Poly::derivative() const {
    Poly r(desc_);
    for (std::size_t i = 1; i < c_.size(); ++i)
        r.c_.push_back(c_[i] * FieldElem::from_integer(desc_, static_cast<long>(i)));
    r.trim();
    return r;
}

Poly Poly::pow(unsigned long n) const {
    Poly r = Poly::one(desc_);
    Poly b = *this;
    while (n) {
        if (n & 1) r = r * b;
        b = b * b;
        n >>= 1;
    }
    return r;
}

std::pair<Poly, Poly> Poly::divrem(const Poly& a, const Poly& b) {
    require_same_descriptor(a.desc_, b.desc_);
    if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
    Poly q(a.desc_);
    Poly r = a;
    const long db = *b.degree();
    const FieldElem lb_inv = b.leading().inv();
    while (!r.is_zero() && *r.degree() >= db) {
        const long k = *r.degree() - db;
        FieldElem c = r.leading() * lb_inv;
        Poly m = Poly::monomial(c, static_cast<std::size_t>(k));
        q = q + m;
        r = r - m * b;
    }
    return {q, r};
}

Poly Poly::gcd(const Poly& a, const Poly& b) {
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly r = divrem(x, y).second;
        x = y;
        y = r;
    }
    return x.is_zero() ? x : x.monic();
}

Poly Poly::monic() const {
    if (is_zero() || leading().is_one()) return *this;
    return *this * leading().inv();
}

Poly Poly::shift_down(std::size_t k) const {
    if (k == 0) return *this;
    Poly r(desc_);
    if (c_.size() > k) r.c_.assign(c_.begin() + static_cast<long>(k), c_.end());
    return r;
}

Poly Poly::shift_up(std::size_t k) const {
    if (is_zero() || k == 0) return *this;
    Poly r(desc_);
    r.c_.assign(k, FieldElem::zero(desc_));
    r.c_.insert(r.c_.end(), c_.begin(), c_.end());
    return r;
}

Poly Poly::inflate(std::size_t g) const {
    if (g <= 1 || is_zero()) return *this;
    Poly r(desc_);
    r.c_.assign((c_.size() - 1) * g + 1, FieldElem::zero(desc_));
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i * g] = c_[i];
    return r;
}

Poly Poly::compress(std::size_t g) const {
    if (g <= 1 || is_zero()) return *this;
    Poly r(desc_);
    r.c_.assign((c_.size() - 1) / g + 1, FieldElem::zero(desc_));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        r.c_[i / g] = c_[i];  // caller guarantees i % g == 0
    }
    r.trim();
    return r;
}

std::string Poly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (c_[i].is_zero()) continue;
        std::string cs = c_[i].to_string();
        // a joined " - " negates the whole coefficient, so re-render -c
        bool neg = !cs.empty() && cs[0] == '-';
        if (neg) cs = (-c_[i]).to_string();
        if (out.empty()) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        bool compound = cs.find('+') != std::string::npos || cs.find('-') != std::string::npos;
        if (compound) cs = "(" + cs + ")";
        if (i == 0) {
            out += cs;
        } else {
            if (cs != "1") out += cs + "*";
            out += var;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

}  // namespace resfield
