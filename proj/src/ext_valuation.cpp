#include "resfield/ext_valuation.hpp"

#include "resfield/expr.hpp"

namespace resfield {

RatFuncK RatFuncK::make(const Poly& num, const Poly& den) {
    require_same_descriptor(num.descriptor(), den.descriptor());
    if (den.is_zero()) throw DivisionByZero("rational function with zero denominator");
    RatFuncK r(num.descriptor());
    if (num.is_zero()) return r;
    Poly n = num, d = den;
    Poly g = Poly::gcd(n, d);
    if (!g.is_constant()) {
        n = Poly::divrem(n, g).first;
        d = Poly::divrem(d, g).first;
    }
    FieldElem lc = d.leading();
    if (!lc.is_one()) {
        FieldElem s = lc.inv();
        n = n * s;
        d = d * s;
    }
    r.num_ = n;
    r.den_ = d;
    return r;
}

RatFuncK RatFuncK::operator*(const RatFuncK& o) const {
    return make(num_ * o.num_, den_ * o.den_);
}

RatFuncK RatFuncK::operator+(const RatFuncK& o) const {
    return make(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

std::string RatFuncK::to_string(const std::string& var) const {
    if (den_.is_one()) return num_.to_string(var);
    std::string n = num_.to_string(var);
    if (n.find(' ') != std::string::npos) n = "(" + n + ")";
    return n + "/(" + den_.to_string(var) + ")";
}

ExtRatFunc::ExtRatFunc(const FieldDescriptor& d) : desc_(d) {
    den_.emplace(0, SeriesElem::one(d));
}

void ExtRatFunc::canonicalize() {
    for (auto it = num_.begin(); it != num_.end();)
        it = it->second.is_zero() ? num_.erase(it) : std::next(it);
    for (auto it = den_.begin(); it != den_.end();)
        it = it->second.is_zero() ? den_.erase(it) : std::next(it);
    if (den_.empty()) throw DivisionByZero("rational function with zero denominator");
    long long min_exp = den_.begin()->first;
    if (!num_.empty()) min_exp = std::min(min_exp, num_.begin()->first);
    if (min_exp != 0) {
        Coeffs n2, d2;
        for (auto& [e, c] : num_) n2.emplace(e - min_exp, std::move(c));
        for (auto& [e, c] : den_) d2.emplace(e - min_exp, std::move(c));
        num_ = std::move(n2);
        den_ = std::move(d2);
    }
}

ExtRatFunc ExtRatFunc::make(const FieldDescriptor& d, const Coeffs& num, const Coeffs& den) {
    ExtRatFunc f(d);
    f.num_ = num;
    f.den_ = den;
    for (const auto& [e, c] : f.num_) require_same_descriptor(d, c.descriptor());
    for (const auto& [e, c] : f.den_) require_same_descriptor(d, c.descriptor());
    f.canonicalize();
    return f;
}

ExtRatFunc ExtRatFunc::from_series(const SeriesElem& c) {
    ExtRatFunc f(c.descriptor());
    if (!c.is_zero()) f.num_.emplace(0, c);
    return f;
}

ExtRatFunc ExtRatFunc::x_power(const FieldDescriptor& d, long long e) {
    ExtRatFunc f(d);
    f.num_.emplace(e, SeriesElem::one(d));
    f.canonicalize();
    return f;
}

bool ExtRatFunc::den_is_one() const {
    return den_.size() == 1 && den_.begin()->first == 0 &&
           den_.begin()->second == SeriesElem::one(desc_);
}

namespace {

using Coeffs = ExtRatFunc::Coeffs;

Coeffs coeffs_mul(const Coeffs& a, const Coeffs& b) {
    Coeffs r;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) {
            SeriesElem prod = ca * cb;
            auto it = r.find(ea + eb);
            if (it == r.end())
                r.emplace(ea + eb, prod);
            else
                it->second = it->second + prod;
        }
    return r;
}

Coeffs coeffs_add(const Coeffs& a, const Coeffs& b) {
    Coeffs r = a;
    for (const auto& [e, c] : b) {
        auto it = r.find(e);
        if (it == r.end())
            r.emplace(e, c);
        else
            it->second = it->second + c;
    }
    return r;
}

}  // namespace

ExtRatFunc ExtRatFunc::operator*(const ExtRatFunc& o) const {
    require_same_descriptor(desc_, o.desc_);
    return make(desc_, coeffs_mul(num_, o.num_), coeffs_mul(den_, o.den_));
}

ExtRatFunc ExtRatFunc::operator+(const ExtRatFunc& o) const {
    require_same_descriptor(desc_, o.desc_);
    return make(desc_, coeffs_add(coeffs_mul(num_, o.den_), coeffs_mul(o.num_, den_)),
                coeffs_mul(den_, o.den_));
}

ExtRatFunc ExtRatFunc::operator-() const {
    ExtRatFunc f(desc_);
    f.den_ = den_;
    for (const auto& [e, c] : num_) f.num_.emplace(e, -c);
    return f;
}

ExtRatFunc ExtRatFunc::operator-(const ExtRatFunc& o) const { return *this + (-o); }

ExtRatFunc ExtRatFunc::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of the zero rational function");
    return make(desc_, den_, num_);
}

ExtRatFunc ExtRatFunc::operator/(const ExtRatFunc& o) const { return *this * o.inverse(); }

std::string ExtRatFunc::to_string() const {
    auto render = [this](const Coeffs& cs) -> std::string {
        if (cs.empty()) return "0";
        std::string out;
        for (const auto& [e, c] : cs) {
            std::string term;
            std::string coeff = c.to_string();
            if (e == 0) {
                term = c.prints_atomically() ? coeff : "(" + coeff + ")";
            } else {
                std::string xp = e == 1 ? "X" : "X^" + std::to_string(e);
                if (c == SeriesElem::one(desc_))
                    term = xp;
                else
                    term = (c.prints_atomically() ? coeff : "(" + coeff + ")") + "*" + xp;
            }
            out += out.empty() ? term : " + " + term;
        }
        return out;
    };
    std::string n = render(num_);
    if (den_is_one()) return n;
    if (n.find(' ') != std::string::npos) n = "(" + n + ")";
    return n + "/(" + render(den_) + ")";
}

namespace {

ValueQ min_coeff_val(const ExtRatFunc::Coeffs& cs) {
    ValueQ m = ValueQ::infinity();
    for (const auto& [e, c] : cs) m = min(m, c.val());
    return m;
}

LexValue min_lex_val(const ExtRatFunc::Coeffs& cs) {
    bool first = true;
    LexValue m;
    for (const auto& [e, c] : cs) {
        LexValue v{e, c.val()};
        if (first || v < m) m = v;
        first = false;
    }
    return m;
}

}  // namespace

ValueQ gauss_val(const ExtRatFunc& f) {
    if (f.is_zero()) throw DivisionByZero("Gauss valuation of 0");
    return min_coeff_val(f.num()) - min_coeff_val(f.den());
}

RatFuncK gauss_residue(const ExtRatFunc& f) {
    if (f.is_zero()) throw DivisionByZero("Gauss residue of 0");
    ValueQ w = gauss_val(f);
    if (w != ValueQ(0))
        throw NotInValuationRing("Gauss residue requires valuation 0, got " + w.to_string());
    const FieldDescriptor& d = f.descriptor();

    // scale both parts to valuation 0, take pi coefficient-wise
    auto reduce = [&d](const ExtRatFunc::Coeffs& cs) -> std::map<long long, FieldElem> {
        SeriesElem scale = SeriesElem::t_power(d, -min_coeff_val(cs).value());
        std::map<long long, FieldElem> out;
        for (const auto& [e, c] : cs) {
            FieldElem r = (c * scale).residue_pi();
            if (!r.is_zero()) out.emplace(e, r);
        }
        return out;
    };
    auto rnum = reduce(f.num());
    auto rden = reduce(f.den());
    // a coefficient of minimal valuation always survives pi
    if (rden.empty()) throw Error("internal: indeterminate Gauss residue");
    if (rnum.empty()) return RatFuncK(d);

    // clear negative X-exponents by a common x^j shift
    long long shift = std::min(rnum.begin()->first, rden.begin()->first);
    auto to_poly = [&d, shift](const std::map<long long, FieldElem>& cs) {
        std::vector<FieldElem> v;
        for (const auto& [e, c] : cs) {
            std::size_t idx = static_cast<std::size_t>(e - shift);
            if (v.size() <= idx) v.resize(idx + 1, FieldElem::zero(d));
            v[idx] = c;
        }
        return Poly::from_coeffs(d, v);
    };
    return RatFuncK::make(to_poly(rnum), to_poly(rden));
}

LexValue infinitesimal_val(const ExtRatFunc& f) {
    if (f.is_zero()) throw DivisionByZero("infinitesimal valuation of 0");
    return min_lex_val(f.num()) - min_lex_val(f.den());
}

namespace {

ExtRatFunc eval_ext(const expr::NodePtr& n, const FieldDescriptor& d) {
    using expr::Kind;
    switch (n->kind) {
        case Kind::Integer:
            return ExtRatFunc::from_series(
                SeriesElem::constant(FieldElem::from_integer(d, n->int_val)));
        case Kind::Imag:
            return ExtRatFunc::from_series(
                SeriesElem::constant(FieldElem::gaussian(d, 0, mpq_class(n->int_val))));
        case Kind::TConst: return ExtRatFunc::from_series(SeriesElem::t(d));
        case Kind::Var:
            if (n->name == "X") return ExtRatFunc::x_power(d, 1);
            throw SyntaxError("unknown variable '" + n->name + "' (the transcendental is X)",
                              n->pos);
        case Kind::Add: return eval_ext(n->kids[0], d) + eval_ext(n->kids[1], d);
        case Kind::Sub: return eval_ext(n->kids[0], d) - eval_ext(n->kids[1], d);
        case Kind::Neg: return -eval_ext(n->kids[0], d);
        case Kind::Mul: return eval_ext(n->kids[0], d) * eval_ext(n->kids[1], d);
        case Kind::Div: return eval_ext(n->kids[0], d) / eval_ext(n->kids[1], d);
        case Kind::Pow: {
            if (n->exp_den != 1) {
                if (n->kids[0]->kind != Kind::TConst)
                    throw SyntaxError("fractional exponents apply to t only", n->pos);
                mpq_class q(n->exp_num, n->exp_den);
                q.canonicalize();
                return ExtRatFunc::from_series(SeriesElem::t_power(d, q));
            }
            if (!n->exp_num.fits_slong_p()) throw SyntaxError("exponent out of range", n->pos);
            long e = n->exp_num.get_si();
            if (n->kids[0]->kind == Kind::Var && n->kids[0]->name == "X")
                return ExtRatFunc::x_power(d, e);
            ExtRatFunc base = eval_ext(n->kids[0], d);
            ExtRatFunc acc = ExtRatFunc::from_series(SeriesElem::one(d));
            for (long j = 0; j < (e < 0 ? -e : e); ++j) acc = acc * base;
            return e < 0 ? acc.inverse() : acc;
        }
        default:
            throw SyntaxError("expected a rational-function expression", n->pos);
    }
}

}  // namespace

ExtRatFunc parse_ext_ratfunc(const std::string& text, const FieldDescriptor& d) {
    return eval_ext(expr::parse(text), d);
}

}  // namespace resfield
