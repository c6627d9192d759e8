#include "resfield/series.hpp"

#include <numeric>

namespace resfield {

namespace {

long long gcd_ll(long long a, long long b) { return std::gcd(a, b); }

mpq_class exponent_of(long long shift, long long ram, long long i) {
    mpq_class q(static_cast<long>(shift + i), static_cast<long>(ram));
    q.canonicalize();
    return q;
}

}  // namespace

SeriesElem SeriesElem::constant(const FieldElem& c) {
    if (c.is_zero()) return SeriesElem(c.descriptor());
    return canonical(c.descriptor(), 1, 0, Poly::constant(c), Poly::one(c.descriptor()));
}

SeriesElem SeriesElem::t_power(const FieldDescriptor& d, const mpq_class& q) {
    mpq_class r = q;
    r.canonicalize();
    if (!r.get_num().fits_slong_p() || !r.get_den().fits_slong_p())
        throw Error("t-exponent out of range");
    long long e = r.get_den().get_si();
    long long m = r.get_num().get_si();
    return canonical(d, e, m, Poly::one(d), Poly::one(d));
}

SeriesElem SeriesElem::monomial(const FieldElem& c, const mpq_class& q) {
    return constant(c) * t_power(c.descriptor(), q);
}

SeriesElem SeriesElem::make(const FieldDescriptor& d, long long ram, long long shift,
                            const Poly& u, const Poly& w) {
    if (ram <= 0) throw Error("ramification index must be positive");
    return canonical(d, ram, shift, u, w);
}

SeriesElem SeriesElem::canonical(const FieldDescriptor& d, long long ram, long long shift,
                                 Poly u, Poly w) {
    if (w.is_zero()) throw DivisionByZero("series denominator is zero");
    if (u.is_zero()) return SeriesElem(d);

    // pull powers of s into the exponent so that u(0), w(0) != 0
    std::size_t ou = *u.order();
    if (ou > 0) {
        shift += static_cast<long long>(ou);
        u = u.shift_down(ou);
    }
    std::size_t ow = *w.order();
    if (ow > 0) {
        shift -= static_cast<long long>(ow);
        w = w.shift_down(ow);
    }

    Poly g = Poly::gcd(u, w);
    if (!g.is_constant()) {
        u = Poly::divrem(u, g).first;
        w = Poly::divrem(w, g).first;
    }
    // normalize the denominator as a power-series unit: w(0) = 1
    FieldElem c0 = w.coeff(0);
    if (!c0.is_one()) {
        FieldElem s = c0.inv();
        u = u * s;
        w = w * s;
    }

    // minimal ramification: strip any factor common to all exponents
    long long d0 = 0;
    for (std::size_t i = 0; i < u.coeffs().size(); ++i)
        if (!u.coeffs()[i].is_zero()) d0 = gcd_ll(d0, static_cast<long long>(i));
    for (std::size_t i = 0; i < w.coeffs().size(); ++i)
        if (!w.coeffs()[i].is_zero()) d0 = gcd_ll(d0, static_cast<long long>(i));
    long long g2 = gcd_ll(gcd_ll(d0, shift < 0 ? -shift : shift), ram);
    if (g2 > 1) {
        ram /= g2;
        shift /= g2;
        u = u.compress(static_cast<std::size_t>(g2));
        w = w.compress(static_cast<std::size_t>(g2));
    }

    SeriesElem r(d);
    r.zero_ = false;
    r.ram_ = ram;
    r.shift_ = shift;
    r.num_ = std::move(u);
    r.den_ = std::move(w);
    return r;
}

bool SeriesElem::is_constant() const {
    if (zero_) return true;
    return shift_ == 0 && ram_ == 1 && num_.is_constant() && den_.is_one();
}

namespace {

struct Merged {
    long long ram;
    long long m1, m2;
    Poly u1, w1, u2, w2;
};

Merged merge_ramification(const SeriesElem& a, const SeriesElem& b) {
    long long e = std::lcm(a.ram(), b.ram());
    long long f1 = e / a.ram(), f2 = e / b.ram();
    return Merged{
        e,
        a.shift() * f1,
        b.shift() * f2,
        a.unit_num().inflate(static_cast<std::size_t>(f1)),
        a.unit_den().inflate(static_cast<std::size_t>(f1)),
        b.unit_num().inflate(static_cast<std::size_t>(f2)),
        b.unit_den().inflate(static_cast<std::size_t>(f2)),
    };
}

}  // namespace

SeriesElem SeriesElem::operator*(const SeriesElem& o) const {
    require_same_descriptor(desc_, o.desc_);
    if (zero_ || o.zero_) return SeriesElem(desc_);
    Merged m = merge_ramification(*this, o);
    return canonical(desc_, m.ram, m.m1 + m.m2, m.u1 * m.u2, m.w1 * m.w2);
}

SeriesElem SeriesElem::inverse() const {
    if (zero_) throw DivisionByZero("inverse of the zero series");
    return canonical(desc_, ram_, -shift_, den_, num_);
}

SeriesElem SeriesElem::operator/(const SeriesElem& o) const { return *this * o.inverse(); }

SeriesElem SeriesElem::operator+(const SeriesElem& o) const {
    require_same_descriptor(desc_, o.desc_);
    if (zero_) return o;
    if (o.zero_) return *this;
    Merged m = merge_ramification(*this, o);
    long long m0 = std::min(m.m1, m.m2);
    Poly num1 = (m.u1 * m.w2).shift_up(static_cast<std::size_t>(m.m1 - m0));
    Poly num2 = (m.u2 * m.w1).shift_up(static_cast<std::size_t>(m.m2 - m0));
    return canonical(desc_, m.ram, m0, num1 + num2, m.w1 * m.w2);
}

SeriesElem SeriesElem::operator-() const {
    if (zero_) return *this;
    SeriesElem r = *this;
    r.num_ = -r.num_;
    return r;
}

SeriesElem SeriesElem::operator-(const SeriesElem& o) const { return *this + (-o); }

bool SeriesElem::operator==(const SeriesElem& o) const {
    if (desc_ != o.desc_) return false;
    if (zero_ || o.zero_) return zero_ == o.zero_;
    return ram_ == o.ram_ && shift_ == o.shift_ && num_ == o.num_ && den_ == o.den_;
}

ValueQ SeriesElem::val() const {
    if (zero_) return ValueQ::infinity();
    mpq_class q(static_cast<long>(shift_), static_cast<long>(ram_));
    q.canonicalize();
    return ValueQ(q);
}

std::vector<FieldElem> SeriesElem::expand_unit(std::size_t n) const {
    std::vector<FieldElem> h;
    h.reserve(n + 1);
    const FieldElem inv0 = den_.coeff(0).inv();
    const std::size_t dw = den_.coeffs().size();
    for (std::size_t k = 0; k <= n; ++k) {
        FieldElem acc = num_.coeff(k);
        for (std::size_t j = 1; j < dw && j <= k; ++j)
            acc = acc - den_.coeff(j) * h[k - j];
        h.push_back(acc * inv0);
    }
    return h;
}

FieldElem SeriesElem::coeff_at(const mpq_class& q) const {
    if (zero_) return FieldElem::zero(desc_);
    mpq_class idx = q * static_cast<long>(ram_) - static_cast<long>(shift_);
    idx.canonicalize();
    if (idx.get_den() != 1 || idx < 0) return FieldElem::zero(desc_);
    if (!idx.get_num().fits_ulong_p()) throw Error("coefficient index out of range");
    std::size_t n = idx.get_num().get_ui();
    return expand_unit(n)[n];
}

FieldElem SeriesElem::residue_pi() const {
    if (val() < ValueQ(0))
        throw NotInValuationRing("residue of an element with negative valuation");
    return total_res();
}

FieldElem SeriesElem::total_res() const { return coeff_at(mpq_class(0)); }

FieldElem SeriesElem::res0() const { return (SeriesElem::t(desc_) * *this).total_res(); }

Poly SeriesElem::extract_pa() const {
    if (zero_) return Poly(desc_);
    long long n_max = 0;
    if (shift_ < 0) n_max = (-shift_ + ram_ - 1) / ram_;  // ceil(-v(a))
    std::vector<FieldElem> cs;
    cs.reserve(static_cast<std::size_t>(n_max) + 1);
    for (long long n = 0; n <= n_max; ++n)
        cs.push_back(coeff_at(mpq_class(static_cast<long>(-n))));
    return Poly::from_coeffs(desc_, std::move(cs));
}

std::vector<std::pair<mpq_class, FieldElem>> SeriesElem::truncated_expansion(
    const mpq_class& up_to) const {
    std::vector<std::pair<mpq_class, FieldElem>> out;
    if (zero_) return out;
    mpq_class idx = up_to * static_cast<long>(ram_) - static_cast<long>(shift_);
    mpz_class n_end;
    mpz_fdiv_q(n_end.get_mpz_t(), idx.get_num_mpz_t(), idx.get_den_mpz_t());
    if (n_end < 0) return out;
    if (!n_end.fits_ulong_p()) throw Error("expansion bound out of range");
    std::size_t n = n_end.get_ui();
    std::vector<FieldElem> h = expand_unit(n);
    for (std::size_t i = 0; i <= n; ++i) {
        if (h[i].is_zero()) continue;
        out.emplace_back(exponent_of(shift_, ram_, static_cast<long long>(i)), h[i]);
    }
    return out;
}

namespace {

std::string t_power_str(const mpq_class& q) {
    if (q == 1) return "t";
    if (q.get_den() == 1) return "t^" + q.get_str();
    return "t^(" + q.get_str() + ")";
}

std::string render_terms(const Poly& p, long long shift, long long ram) {
    std::string out;
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
        const FieldElem& c = p.coeffs()[i];
        if (c.is_zero()) continue;
        mpq_class q = exponent_of(shift, ram, static_cast<long long>(i));
        std::string cs = c.to_string();
        // a joined " - " must negate the whole coefficient, so re-render -c
        bool neg = !cs.empty() && cs[0] == '-';
        std::string mag = neg ? (-c).to_string() : cs;
        std::string body;
        if (q == 0) {
            body = mag;
            bool compound = body.find('+') != std::string::npos ||
                            body.find('-') != std::string::npos;
            if (compound) body = "(" + body + ")";
        } else {
            std::string tp = t_power_str(q);
            if (c.is_one()) {
                body = tp;
            } else if ((-c).is_one()) {
                neg = true;
                body = tp;
            } else {
                std::string factor = mag;
                bool compound = factor.find('+') != std::string::npos ||
                                factor.find('-') != std::string::npos;
                if (compound) factor = "(" + factor + ")";
                body = factor + "*" + tp;
            }
        }
        if (out.empty())
            out = (neg ? "-" : "") + body;
        else
            out += (neg ? " - " : " + ") + body;
    }
    return out;
}

}  // namespace

std::string SeriesElem::to_string() const {
    if (zero_) return "0";
    std::string num = render_terms(num_, shift_, ram_);
    if (den_.is_one()) return num;
    if (num.find(" + ") != std::string::npos || num.find(" - ") != std::string::npos)
        num = "(" + num + ")";
    return num + "/(" + render_terms(den_, 0, ram_) + ")";
}

bool SeriesElem::prints_atomically() const {
    if (zero_) return true;
    if (!den_.is_one()) return false;
    std::string s = to_string();
    return s.find_first_of("+-*/") == std::string::npos;
}

}  // namespace resfield
