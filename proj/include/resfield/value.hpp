#ifndef RESFIELD_VALUE_HPP
#define RESFIELD_VALUE_HPP

#include <string>

#include <gmpxx.h>

#include "resfield/errors.hpp"

namespace resfield {

/// Element of Gamma ∪ {∞}: an exact rational, or the valuation of 0.
/// Infinity is greatest and absorbing under addition.
class ValueQ {
public:
    ValueQ() : inf_(false), q_(0) {}
    ValueQ(const mpq_class& q) : inf_(false), q_(q) { q_.canonicalize(); }
    ValueQ(long n) : inf_(false), q_(n) {}
    static ValueQ infinity() {
        ValueQ v;
        v.inf_ = true;
        return v;
    }

    bool is_infinity() const { return inf_; }
    const mpq_class& value() const {
        if (inf_) throw Error("infinite valuation has no rational value");
        return q_;
    }

    ValueQ operator+(const ValueQ& o) const {
        if (inf_ || o.inf_) return infinity();
        return ValueQ(q_ + o.q_);
    }
    ValueQ operator-() const {
        if (inf_) return infinity();  // absorbing, as for addition
        return ValueQ(-q_);
    }
    ValueQ operator-(const ValueQ& o) const { return *this + (-o); }

    bool operator==(const ValueQ& o) const {
        if (inf_ || o.inf_) return inf_ == o.inf_;
        return q_ == o.q_;
    }
    bool operator!=(const ValueQ& o) const { return !(*this == o); }
    bool operator<(const ValueQ& o) const {
        if (inf_) return false;
        if (o.inf_) return true;
        return q_ < o.q_;
    }
    bool operator<=(const ValueQ& o) const { return *this < o || *this == o; }
    bool operator>(const ValueQ& o) const { return o < *this; }
    bool operator>=(const ValueQ& o) const { return o <= *this; }

    std::string to_string() const { return inf_ ? "infty" : q_.get_str(); }

private:
    bool inf_;
    mpq_class q_;
};

inline ValueQ min(const ValueQ& a, const ValueQ& b) { return a < b ? a : b; }

}  // namespace resfield

#endif
