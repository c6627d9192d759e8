#include "resfield/encoders.hpp"

#include <algorithm>
#include <sstream>

#include "resfield/expr.hpp"

namespace resfield {

using logic::Formula;
using logic::Sort;
using logic::Term;

void DiophPoly::add_monomial(Exponents exps, const mpz_class& c) {
    if (exps.size() != m_ + 1)
        throw ArityMismatch("monomial exponent vector has length " +
                            std::to_string(exps.size()) + ", expected " +
                            std::to_string(m_ + 1));
    if (c == 0) return;
    auto it = mono_.find(exps);
    if (it == mono_.end()) {
        mono_.emplace(std::move(exps), c);
    } else {
        it->second += c;
        if (it->second == 0) mono_.erase(it);
    }
}

Poly DiophPoly::compose(const std::vector<Poly>& args, const FieldDescriptor& d) const {
    if (args.size() != m_)
        throw ArityMismatch("expected " + std::to_string(m_) + " argument polynomials, got " +
                            std::to_string(args.size()));
    Poly acc(d);
    for (const auto& [exps, c] : mono_) {
        Poly term = Poly::constant(FieldElem::from_integer(d, c));
        for (unsigned i = 0; i < m_; ++i)
            if (exps[i] > 0) term = term * args[i].pow(exps[i]);
        if (exps[m_] > 0) term = term.shift_up(exps[m_]);
        acc = acc + term;
    }
    return acc;
}

std::string DiophPoly::to_string() const {
    if (mono_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [exps, c] : mono_) {
        std::string factors;
        for (unsigned i = 0; i < m_; ++i) {
            if (exps[i] == 0) continue;
            factors += (factors.empty() ? "" : "*") + std::string("X") + std::to_string(i + 1);
            if (exps[i] > 1) factors += "^" + std::to_string(exps[i]);
        }
        if (exps[m_] > 0) {
            factors += (factors.empty() ? "" : "*") + std::string("T");
            if (exps[m_] > 1) factors += "^" + std::to_string(exps[m_]);
        }
        mpz_class a = abs(c);
        std::string coeff = (a == 1 && !factors.empty()) ? "" : a.get_str();
        std::string body = coeff.empty() ? factors
                          : factors.empty() ? coeff
                                            : coeff + "*" + factors;
        if (first) {
            os << (c < 0 ? "-" : "") << body;
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ") << body;
        }
    }
    return os.str();
}

// ---- file formats ----------------------------------------------------------

namespace {

std::vector<std::string> content_lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::size_t a = line.find_first_not_of(" \t\r");
        if (a == std::string::npos) continue;
        std::size_t b = line.find_last_not_of(" \t\r");
        out.push_back(line.substr(a, b - a + 1));
    }
    return out;
}

// Z[X1..Xm,T] evaluation of the untyped tree
struct ZPoly {
    std::map<DiophPoly::Exponents, mpz_class> mono;

    static ZPoly constant(unsigned m, const mpz_class& c) {
        ZPoly p;
        if (c != 0) p.mono.emplace(DiophPoly::Exponents(m + 1, 0), c);
        return p;
    }
    static ZPoly variable(unsigned m, unsigned idx) {  // idx in [0, m]; m = T
        ZPoly p;
        DiophPoly::Exponents e(m + 1, 0);
        e[idx] = 1;
        p.mono.emplace(std::move(e), 1);
        return p;
    }
};

ZPoly zadd(const ZPoly& a, const ZPoly& b) {
    ZPoly r = a;
    for (const auto& [e, c] : b.mono) {
        auto it = r.mono.find(e);
        if (it == r.mono.end()) {
            r.mono.emplace(e, c);
        } else {
            it->second += c;
            if (it->second == 0) r.mono.erase(it);
        }
    }
    return r;
}

ZPoly zneg(const ZPoly& a) {
    ZPoly r;
    for (const auto& [e, c] : a.mono) r.mono.emplace(e, -c);
    return r;
}

ZPoly zmul(const ZPoly& a, const ZPoly& b) {
    ZPoly r;
    for (const auto& [ea, ca] : a.mono)
        for (const auto& [eb, cb] : b.mono) {
            DiophPoly::Exponents e(ea.size());
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            auto it = r.mono.find(e);
            if (it == r.mono.end()) {
                r.mono.emplace(std::move(e), ca * cb);
            } else {
                it->second += ca * cb;
                if (it->second == 0) r.mono.erase(it);
            }
        }
    return r;
}

// Variable name -> index (X1.. -> 0.., T -> m); returns max X-index seen.
unsigned scan_unknowns(const expr::NodePtr& n, unsigned acc) {
    if (n->kind == expr::Kind::Var) {
        const std::string& v = n->name;
        if (v == "T") return acc;
        if (v.size() >= 2 && v[0] == 'X') {
            bool digits = true;
            for (std::size_t i = 1; i < v.size(); ++i)
                if (!std::isdigit(static_cast<unsigned char>(v[i]))) digits = false;
            if (digits && v[1] != '0') return std::max(acc, (unsigned)std::stoul(v.substr(1)));
        }
        throw SyntaxError("unknown variable '" + v + "' (expected X1..Xm or T)", n->pos);
    }
    for (const auto& k : n->kids) acc = scan_unknowns(k, acc);
    return acc;
}

ZPoly eval_zpoly(const expr::NodePtr& n, unsigned m) {
    using expr::Kind;
    switch (n->kind) {
        case Kind::Integer: return ZPoly::constant(m, n->int_val);
        case Kind::Var: {
            if (n->name == "T") return ZPoly::variable(m, m);
            unsigned idx = (unsigned)std::stoul(n->name.substr(1));
            return ZPoly::variable(m, idx - 1);
        }
        case Kind::Add: return zadd(eval_zpoly(n->kids[0], m), eval_zpoly(n->kids[1], m));
        case Kind::Sub:
            return zadd(eval_zpoly(n->kids[0], m), zneg(eval_zpoly(n->kids[1], m)));
        case Kind::Neg: return zneg(eval_zpoly(n->kids[0], m));
        case Kind::Mul: return zmul(eval_zpoly(n->kids[0], m), eval_zpoly(n->kids[1], m));
        case Kind::Pow: {
            if (n->exp_den != 1 || n->exp_num < 0)
                throw SyntaxError("exponents must be non-negative integers", n->pos);
            ZPoly base = eval_zpoly(n->kids[0], m);
            ZPoly acc = ZPoly::constant(m, 1);
            for (mpz_class j = 0; j < n->exp_num; ++j) acc = zmul(acc, base);
            return acc;
        }
        default:
            throw SyntaxError("only +, -, * and integer powers are allowed here", n->pos);
    }
}

}  // namespace

DiophSystem parse_dioph_system(const std::string& text) {
    std::vector<std::string> lines = content_lines(text);
    if (lines.empty()) throw SyntaxError("empty system: no polynomials found", 0);
    std::vector<expr::NodePtr> trees;
    unsigned m = 0;
    for (const auto& line : lines) {
        expr::NodePtr n = expr::parse(line);
        m = scan_unknowns(n, m);
        trees.push_back(std::move(n));
    }
    DiophSystem sys;
    sys.unknowns = m;
    for (const auto& n : trees) {
        ZPoly z = eval_zpoly(n, m);
        DiophPoly p(m);
        for (const auto& [e, c] : z.mono) p.add_monomial(e, c);
        sys.polys.push_back(std::move(p));
    }
    return sys;
}

std::vector<SeriesElem> parse_witness_lines(const std::string& text, const FieldDescriptor& d) {
    std::vector<SeriesElem> out;
    for (const auto& line : content_lines(text)) {
        Term t = logic::parse_term(line, d, Sort::K);
        out.push_back(std::get<SeriesElem>(logic::eval_term(t, logic::Assignment(d))));
    }
    return out;
}

// ---- the Hilbert-10 reduction ----------------------------------------------

namespace {

std::string unknown_name(unsigned i) { return "a" + std::to_string(i + 1); }

}  // namespace

Formula encode_h10(const DiophSystem& sys, const FieldDescriptor& d) {
    if (sys.polys.empty()) throw Error("empty system");
    const std::string y = "y";

    // res(a_i / (1 - t*iota(y)))
    auto res_factor = [&](unsigned i) {
        Term denom = Term::sub(Term::lit(SeriesElem::one(d)),
                               Term::mul(Term::lit(SeriesElem::t(d)),
                                         Term::iota(Term::var(Sort::Res, y))));
        return Term::res(Term::div(Term::var(Sort::K, unknown_name(i)), denom));
    };

    Term zero = Term::lit(FieldElem::zero(d));
    std::vector<Formula> eqs;
    for (const DiophPoly& f : sys.polys) {
        Term sum = zero;
        bool have_sum = false;
        for (const auto& [exps, c] : f.monomials()) {
            std::vector<Term> factors;
            for (unsigned i = 0; i < sys.unknowns; ++i)
                for (unsigned rep = 0; rep < exps[i]; ++rep) factors.push_back(res_factor(i));
            for (unsigned rep = 0; rep < exps[sys.unknowns]; ++rep)
                factors.push_back(Term::var(Sort::Res, y));

            // |c|, with the sign carried by the join; coefficient 1 is dropped
            bool negative = c < 0;
            mpz_class a = abs(c);
            std::size_t start = 0;
            Term prod = (a == 1 && !factors.empty())
                            ? (start = 1, factors[0])
                            : Term::lit(FieldElem::from_integer(d, a));
            for (std::size_t j = start; j < factors.size(); ++j)
                prod = Term::mul(prod, factors[j]);
            if (!have_sum)
                sum = negative ? Term::neg(prod) : prod;
            else
                sum = negative ? Term::sub(sum, prod) : Term::add(sum, prod);
            have_sum = true;
        }
        eqs.push_back(Formula::eq(sum, zero));
    }
    Formula body = eqs.front();
    for (std::size_t j = 1; j < eqs.size(); ++j) body = Formula::conj(body, eqs[j]);
    Formula out = Formula::forall(y, Sort::Res, body);
    for (unsigned i = sys.unknowns; i-- > 0;)
        out = Formula::exists(unknown_name(i), Sort::K, out);
    return out;
}

H10CheckResult check_h10_witness(const DiophSystem& sys,
                                 const std::vector<SeriesElem>& witnesses,
                                 const FieldDescriptor& d) {
    if (witnesses.size() != sys.unknowns)
        throw ArityMismatch("system has " + std::to_string(sys.unknowns) + " unknowns, got " +
                            std::to_string(witnesses.size()) + " witnesses");
    std::vector<Poly> pa;
    pa.reserve(witnesses.size());
    for (const SeriesElem& w : witnesses) {
        require_same_descriptor(d, w.descriptor());
        pa.push_back(w.extract_pa());
    }
    H10CheckResult out;
    out.accepted = true;
    for (const DiophPoly& f : sys.polys) {
        Poly comp = f.compose(pa, d);
        if (d.is_finite()) {
            FieldEnumeration en(d);
            while (!en.done())
                if (!comp.eval(en.next()).is_zero()) {
                    out.accepted = false;
                    break;
                }
        } else if (!comp.is_zero()) {
            out.accepted = false;
        }
        out.composed.push_back(std::move(comp));
    }
    return out;
}

std::vector<SeriesElem> witness_from_polynomial_solution(const std::vector<Poly>& sol) {
    std::vector<SeriesElem> out;
    out.reserve(sol.size());
    for (const Poly& p : sol) {
        const FieldDescriptor& d = p.descriptor();
        SeriesElem w = SeriesElem::zero(d);
        for (std::size_t j = 0; j < p.coeffs().size(); ++j) {
            if (p.coeffs()[j].is_zero()) continue;
            w = w + SeriesElem::monomial(p.coeffs()[j], mpq_class(-static_cast<long>(j)));
        }
        out.push_back(std::move(w));
    }
    return out;
}

// ---- S_{a,b} ---------------------------------------------------------------

FiniteSubset FiniteSubset::of(const FieldDescriptor& d, std::vector<FieldElem> elems) {
    FiniteSubset s(d);
    for (const auto& e : elems) require_same_descriptor(d, e.descriptor());
    std::sort(elems.begin(), elems.end(), FieldElem::canonical_less);
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    s.elements = std::move(elems);
    return s;
}

SabResult compute_Sab(const SeriesElem& a, const SeriesElem& b) {
    require_same_descriptor(a.descriptor(), b.descriptor());
    const FieldDescriptor& d = a.descriptor();
    if (b.is_zero() || !(b.val() > ValueQ(0)))
        throw NotInfinitesimal("second argument must lie in the maximal ideal, v(b) = " +
                               b.val().to_string());
    SabResult out(d);
    // minimal n with v(a) + n v(b) > 0
    if (a.val().is_infinity()) {
        out.n = 0;
    } else {
        mpq_class r = -a.val().value() / b.val().value();
        if (r < 0) {
            out.n = 0;
        } else {
            mpz_class fl;
            mpz_fdiv_q(fl.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
            out.n = fl.get_ui() + 1;
        }
    }
    std::vector<FieldElem> cs;
    SeriesElem abi = a;
    for (unsigned long i = 0; i < out.n; ++i) {
        cs.push_back(abi.total_res());
        abi = abi * b;
    }
    out.pab = Poly::from_coeffs(d, std::move(cs));
    if (out.pab.is_zero()) {
        out.all_of_k = true;
    } else {
        out.elements = poly_roots_in_k(out.pab).roots;
    }
    return out;
}

std::pair<SeriesElem, SeriesElem> encode_finite_set(const FiniteSubset& s) {
    const FieldDescriptor& d = s.desc;
    SeriesElem a = SeriesElem::one(d);
    SeriesElem tinv = SeriesElem::t_power(d, mpq_class(-1));
    for (const FieldElem& e : s.elements) a = a * (tinv - lift_iota(e));
    return {a, SeriesElem::t(d)};
}

// ---- definability of k -----------------------------------------------------

DefkResult defk_check(const SeriesElem& x) {
    const FieldDescriptor& d = x.descriptor();
    DefkResult out(d);
    if (x.is_constant()) {
        out.in_k = true;
        out.alpha = x.total_res();
        return out;
    }
    SeriesElem xp = x - lift_iota(x.total_res());
    // res(x') = 0 and x' != 0, so v(x') != 0
    out.witness_exponent = xp.val().value();
    out.witness = SeriesElem::t_power(d, -out.witness_exponent);
    out.res_xy = (x * out.witness).total_res();
    out.res_x_res_y = x.total_res() * out.witness.total_res();
    if (out.res_xy == out.res_x_res_y)
        throw Error("internal: multiplicativity witness failed");
    return out;
}

bool modelcomp_identity_check(unsigned long n, const FieldElem& beta) {
    const FieldDescriptor& d = beta.descriptor();
    SeriesElem num = SeriesElem::t_power(d, mpq_class(-static_cast<long>(n)));
    SeriesElem den = SeriesElem::one(d) - SeriesElem::t(d) * lift_iota(beta);
    return (num / den).total_res() == beta.pow(static_cast<long>(n));
}

}  // namespace resfield
