#include <cctype>
#include <functional>

#include "resfield/expr.hpp"
#include "resfield/logic.hpp"

namespace resfield::expr {

bool is_formula_kind(Kind k) {
    switch (k) {
        case Kind::Eq:
        case Kind::Less:
        case Kind::Not:
        case Kind::And:
        case Kind::Or:
        case Kind::Implies:
        case Kind::Quant: return true;
        default: return false;
    }
}

namespace {

enum class Tok {
    End, Int, ImagInt, Ident, Forall, Exists, Not, And, Or,
    LParen, RParen, Plus, Minus, Star, Slash, Caret, Eq, Less, Dot, Colon, Arrow,
};

struct Lexer {
    const std::string& text;
    std::size_t pos = 0;
    Tok tok = Tok::End;
    std::size_t tok_pos = 0;
    mpz_class int_val;
    std::string ident;

    explicit Lexer(const std::string& s) : text(s) { advance(); }

    [[noreturn]] void fail(const std::string& msg, std::size_t at) const {
        throw SyntaxError(msg, at);
    }

    void advance() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
        tok_pos = pos;
        if (pos >= text.size()) {
            tok = Tok::End;
            return;
        }
        char c = text[pos];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
            int_val = mpz_class(text.substr(start, pos - start));
            // fused imaginary literal: digits immediately followed by `i`
            if (pos < text.size() && text[pos] == 'i' &&
                (pos + 1 >= text.size() ||
                 (!std::isalnum(static_cast<unsigned char>(text[pos + 1])) &&
                  text[pos + 1] != '_'))) {
                ++pos;
                tok = Tok::ImagInt;
            } else {
                tok = Tok::Int;
            }
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos;
            while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) ||
                                         text[pos] == '_'))
                ++pos;
            ident = text.substr(start, pos - start);
            if (ident == "forall") tok = Tok::Forall;
            else if (ident == "exists") tok = Tok::Exists;
            else if (ident == "not") tok = Tok::Not;
            else if (ident == "and") tok = Tok::And;
            else if (ident == "or") tok = Tok::Or;
            else tok = Tok::Ident;
            return;
        }
        ++pos;
        switch (c) {
            case '(': tok = Tok::LParen; return;
            case ')': tok = Tok::RParen; return;
            case '+': tok = Tok::Plus; return;
            case '-':
                if (pos < text.size() && text[pos] == '>') {
                    ++pos;
                    tok = Tok::Arrow;
                } else {
                    tok = Tok::Minus;
                }
                return;
            case '*': tok = Tok::Star; return;
            case '/': tok = Tok::Slash; return;
            case '^': tok = Tok::Caret; return;
            case '=': tok = Tok::Eq; return;
            case '<': tok = Tok::Less; return;
            case '.': tok = Tok::Dot; return;
            case ':': tok = Tok::Colon; return;
            default: fail(std::string("unexpected character '") + c + "'", tok_pos);
        }
    }
};

struct Parser {
    Lexer lx;

    explicit Parser(const std::string& s) : lx(s) {}

    std::shared_ptr<Node> node(Kind k, std::size_t pos) {
        auto n = std::make_shared<Node>();
        n->kind = k;
        n->pos = pos;
        return n;
    }

    NodePtr mk2(Kind k, std::size_t pos, NodePtr a, NodePtr b) {
        auto n = node(k, pos);
        n->kids = {std::move(a), std::move(b)};
        return n;
    }

    void expect(Tok t, const char* what) {
        if (lx.tok != t) lx.fail(std::string("expected ") + what, lx.tok_pos);
        lx.advance();
    }

    NodePtr parse_all() {
        NodePtr n = formula();
        if (lx.tok != Tok::End) lx.fail("trailing input", lx.tok_pos);
        return n;
    }

    NodePtr formula() {
        if (lx.tok == Tok::Forall || lx.tok == Tok::Exists) return quantified();
        return implication();
    }

    NodePtr quantified() {
        std::size_t pos = lx.tok_pos;
        bool fa = lx.tok == Tok::Forall;
        lx.advance();
        if (lx.tok != Tok::Ident) lx.fail("expected a variable after the quantifier", lx.tok_pos);
        std::string var = lx.ident;
        lx.advance();
        expect(Tok::Colon, "':' with a sort annotation");
        if (lx.tok != Tok::Ident || (lx.ident != "K" && lx.ident != "k" && lx.ident != "G"))
            lx.fail("expected a sort (K, k or G)", lx.tok_pos);
        char sort = lx.ident[0];
        lx.advance();
        expect(Tok::Dot, "'.' before the quantifier body");
        auto n = node(Kind::Quant, pos);
        n->quant_forall = fa;
        n->name = var;
        n->quant_sort = sort;
        n->kids = {formula()};
        return n;
    }

    NodePtr implication() {
        NodePtr a = disjunction();
        if (lx.tok == Tok::Arrow) {
            std::size_t pos = lx.tok_pos;
            lx.advance();
            return mk2(Kind::Implies, pos, std::move(a), formula());  // right associative
        }
        return a;
    }

    NodePtr disjunction() {
        NodePtr a = conjunction();
        while (lx.tok == Tok::Or) {
            std::size_t pos = lx.tok_pos;
            lx.advance();
            a = mk2(Kind::Or, pos, std::move(a), conjunction());
        }
        return a;
    }

    NodePtr conjunction() {
        NodePtr a = negation();
        while (lx.tok == Tok::And) {
            std::size_t pos = lx.tok_pos;
            lx.advance();
            a = mk2(Kind::And, pos, std::move(a), negation());
        }
        return a;
    }

    NodePtr negation() {
        if (lx.tok == Tok::Not) {
            std::size_t pos = lx.tok_pos;
            lx.advance();
            auto n = node(Kind::Not, pos);
            n->kids = {negation()};
            return n;
        }
        if (lx.tok == Tok::Forall || lx.tok == Tok::Exists) return quantified();
        return comparison();
    }

    NodePtr comparison() {
        NodePtr a = additive();
        if (lx.tok == Tok::Eq || lx.tok == Tok::Less) {
            Kind k = lx.tok == Tok::Eq ? Kind::Eq : Kind::Less;
            std::size_t pos = lx.tok_pos;
            lx.advance();
            return mk2(k, pos, std::move(a), additive());
        }
        return a;
    }

    NodePtr additive() {
        NodePtr a = multiplicative();
        while (lx.tok == Tok::Plus || lx.tok == Tok::Minus) {
            Kind k = lx.tok == Tok::Plus ? Kind::Add : Kind::Sub;
            std::size_t pos = lx.tok_pos;
            lx.advance();
            a = mk2(k, pos, std::move(a), multiplicative());
        }
        return a;
    }

    NodePtr multiplicative() {
        NodePtr a = unary();
        while (lx.tok == Tok::Star || lx.tok == Tok::Slash) {
            Kind k = lx.tok == Tok::Star ? Kind::Mul : Kind::Div;
            std::size_t pos = lx.tok_pos;
            lx.advance();
            a = mk2(k, pos, std::move(a), unary());
        }
        return a;
    }

    NodePtr unary() {
        if (lx.tok == Tok::Minus) {
            std::size_t pos = lx.tok_pos;
            lx.advance();
            auto n = node(Kind::Neg, pos);
            n->kids = {unary()};
            return n;
        }
        return power();
    }

    NodePtr power() {
        NodePtr base = primary();
        if (lx.tok != Tok::Caret) return base;
        std::size_t pos = lx.tok_pos;
        lx.advance();
        auto [num, den] = exponent();
        auto n = node(Kind::Pow, pos);
        n->exp_num = num;
        n->exp_den = den;
        n->kids = {std::move(base)};
        return n;
    }

    // integer, -integer, or a parenthesized (possibly signed) fraction
    std::pair<mpz_class, mpz_class> exponent() {
        auto signed_int = [this]() -> mpz_class {
            bool neg = false;
            if (lx.tok == Tok::Minus) {
                neg = true;
                lx.advance();
            }
            if (lx.tok != Tok::Int) lx.fail("expected an integer exponent", lx.tok_pos);
            mpz_class v = lx.int_val;
            lx.advance();
            return neg ? mpz_class(-v) : v;
        };
        if (lx.tok == Tok::LParen) {
            lx.advance();
            mpz_class num = signed_int();
            mpz_class den = 1;
            if (lx.tok == Tok::Slash) {
                lx.advance();
                den = signed_int();
                if (den == 0) lx.fail("zero exponent denominator", lx.tok_pos);
            }
            expect(Tok::RParen, "')'");
            return {num, den};
        }
        return {signed_int(), 1};
    }

    NodePtr primary() {
        std::size_t pos = lx.tok_pos;
        switch (lx.tok) {
            case Tok::Int: {
                auto n = node(Kind::Integer, pos);
                n->int_val = lx.int_val;
                lx.advance();
                return n;
            }
            case Tok::ImagInt: {
                auto n = node(Kind::Imag, pos);
                n->int_val = lx.int_val;
                lx.advance();
                return n;
            }
            case Tok::LParen: {
                lx.advance();
                NodePtr inner = formula();
                expect(Tok::RParen, "')'");
                return inner;
            }
            case Tok::Forall:
            case Tok::Exists:
                return quantified();
            case Tok::Ident: {
                std::string name = lx.ident;
                if (name == "t") {
                    lx.advance();
                    return node(Kind::TConst, pos);
                }
                if (name == "i") {
                    lx.advance();
                    auto n = node(Kind::Imag, pos);
                    n->int_val = 1;
                    return n;
                }
                if (name == "res" || name == "iota" || name == "v") {
                    lx.advance();
                    expect(Tok::LParen, "'(' after the function symbol");
                    NodePtr arg = formula();
                    expect(Tok::RParen, "')'");
                    auto n = node(Kind::Call, pos);
                    n->name = name;
                    n->kids = {std::move(arg)};
                    return n;
                }
                lx.advance();
                auto n = node(Kind::Var, pos);
                n->name = name;
                return n;
            }
            default:
                lx.fail("expected a term", pos);
        }
    }
};

}  // namespace

NodePtr parse(const std::string& text) { return Parser(text).parse_all(); }

}  // namespace resfield::expr

// ===========================================================================
// Sort inference and elaboration into the typed AST
// ===========================================================================

namespace resfield::logic {

namespace {

using expr::Kind;
using expr::Node;
using expr::NodePtr;

enum class STag { Unknown, K, Res, Gamma };

STag to_tag(Sort s) {
    switch (s) {
        case Sort::K: return STag::K;
        case Sort::Res: return STag::Res;
        case Sort::Gamma: return STag::Gamma;
    }
    return STag::Unknown;
}

Sort to_sort(STag t) {
    switch (t) {
        case STag::K: return Sort::K;
        case STag::Res: return Sort::Res;
        case STag::Gamma: return Sort::Gamma;
        default: throw SortError("unresolved sort");
    }
}

std::string tag_name(STag t) {
    return t == STag::Unknown ? "?" : sort_name(to_sort(t));
}

Sort sort_of_annot(char c, std::size_t pos) {
    switch (c) {
        case 'K': return Sort::K;
        case 'k': return Sort::Res;
        case 'G': return Sort::Gamma;
    }
    throw SyntaxError("unknown sort annotation", pos);
}

struct Inference {
    std::map<std::string, STag> free;  // inferred sorts of free variables
    bool changed = false;

    // bound: innermost scopes win
    STag lookup(const std::vector<std::pair<std::string, Sort>>& bound,
                const std::string& name) const {
        for (auto it = bound.rbegin(); it != bound.rend(); ++it)
            if (it->first == name) return to_tag(it->second);
        auto f = free.find(name);
        return f == free.end() ? STag::Unknown : f->second;
    }

    bool is_bound(const std::vector<std::pair<std::string, Sort>>& bound,
                  const std::string& name) const {
        for (const auto& [v, s] : bound)
            if (v == name) return true;
        return false;
    }

    STag term(const NodePtr& n, STag demand, std::vector<std::pair<std::string, Sort>>& bound) {
        switch (n->kind) {
            case Kind::Integer:
                return demand;  // numeric literals are polymorphic over all sorts
            case Kind::Imag:
                if (demand == STag::Gamma)
                    throw SortError("imaginary literal on the value group");
                return demand;
            case Kind::TConst:
                if (demand == STag::Gamma || demand == STag::Res)
                    throw SortError("t is a K-sort constant");
                return STag::K;
            case Kind::Var: {
                STag cur = lookup(bound, n->name);
                if (demand != STag::Unknown) {
                    if (cur == STag::Unknown) {
                        if (is_bound(bound, n->name))
                            throw SortError("variable " + n->name + " used at sort " +
                                            tag_name(demand) + " but bound otherwise");
                        free[n->name] = demand;
                        changed = true;
                        return demand;
                    }
                    if (cur != demand)
                        throw SortError("variable " + n->name + " used at sorts " +
                                        tag_name(cur) + " and " + tag_name(demand));
                }
                return cur;
            }
            case Kind::Add:
            case Kind::Sub: {
                STag a = term(n->kids[0], demand, bound);
                STag b = term(n->kids[1], a == STag::Unknown ? demand : a, bound);
                if (a == STag::Unknown && b != STag::Unknown) a = term(n->kids[0], b, bound);
                return a != STag::Unknown ? a : b;
            }
            case Kind::Neg:
                return term(n->kids[0], demand, bound);
            case Kind::Mul:
            case Kind::Div: {
                // Gamma admits no multiplication; a Gamma-demanded Div is the
                // rational-literal syntax, policed at elaboration
                if (demand == STag::Gamma && n->kind == Kind::Mul)
                    throw SortError("no multiplication on the value group");
                STag a = term(n->kids[0], demand, bound);
                STag b = term(n->kids[1], a == STag::Unknown ? demand : a, bound);
                if (a == STag::Unknown && b != STag::Unknown) a = term(n->kids[0], b, bound);
                return a != STag::Unknown ? a : b;
            }
            case Kind::Pow: {
                if (n->exp_den != 1) {
                    // fractional exponents are series monomials t^(m/e)
                    if (n->kids[0]->kind != Kind::TConst)
                        throw SortError("fractional exponents apply to t only");
                    if (demand == STag::Gamma || demand == STag::Res)
                        throw SortError("t is a K-sort constant");
                    return STag::K;
                }
                return term(n->kids[0], demand, bound);
            }
            case Kind::Call: {
                if (n->name == "res") {
                    if (demand == STag::K || demand == STag::Gamma)
                        throw SortError("res produces a residue-field value");
                    term(n->kids[0], STag::K, bound);
                    return STag::Res;
                }
                if (n->name == "iota") {
                    if (demand == STag::Res || demand == STag::Gamma)
                        throw SortError("iota produces a K-sort value");
                    term(n->kids[0], STag::Res, bound);
                    return STag::K;
                }
                // v
                if (demand == STag::K || demand == STag::Res)
                    throw SortError("v produces a value-group element");
                term(n->kids[0], STag::K, bound);
                return STag::Gamma;
            }
            default:
                throw SortError("formula in term position");
        }
    }

    void formula(const NodePtr& n, std::vector<std::pair<std::string, Sort>>& bound,
                 bool defaulting) {
        switch (n->kind) {
            case Kind::Eq: {
                STag a = term(n->kids[0], STag::Unknown, bound);
                STag b = term(n->kids[1], a, bound);
                if (a == STag::Unknown && b != STag::Unknown) term(n->kids[0], b, bound);
                if (defaulting && a == STag::Unknown && b == STag::Unknown) {
                    // equation with no sort anchor: default to the residue field
                    term(n->kids[0], STag::Res, bound);
                    term(n->kids[1], STag::Res, bound);
                }
                return;
            }
            case Kind::Less:
                term(n->kids[0], STag::Gamma, bound);
                term(n->kids[1], STag::Gamma, bound);
                return;
            case Kind::Not:
                formula(n->kids[0], bound, defaulting);
                return;
            case Kind::And:
            case Kind::Or:
            case Kind::Implies:
                formula(n->kids[0], bound, defaulting);
                formula(n->kids[1], bound, defaulting);
                return;
            case Kind::Quant: {
                bound.emplace_back(n->name, sort_of_annot(n->quant_sort, n->pos));
                formula(n->kids[0], bound, defaulting);
                bound.pop_back();
                return;
            }
            default:
                throw SortError("term in formula position");
        }
    }
};

// ---- elaboration with constant folding ------------------------------------

struct Elaborator {
    const FieldDescriptor& desc;
    const std::map<std::string, STag>& free_sorts;

    bool is_lit(const Term& t) const { return t.op() == Term::Op::Lit; }

    Term fold_or(Term::Op op, Sort s, const Term& a, const Term& b) const {
        if (is_lit(a) && is_lit(b)) {
            switch (s) {
                case Sort::K: {
                    const SeriesElem& x = a.series_lit();
                    const SeriesElem& y = b.series_lit();
                    switch (op) {
                        case Term::Op::Add: return Term::lit(x + y);
                        case Term::Op::Sub: return Term::lit(x - y);
                        case Term::Op::Mul: return Term::lit(x * y);
                        case Term::Op::Div: return Term::lit(x / y);
                        default: break;
                    }
                    break;
                }
                case Sort::Res: {
                    const FieldElem& x = a.field_lit();
                    const FieldElem& y = b.field_lit();
                    switch (op) {
                        case Term::Op::Add: return Term::lit(x + y);
                        case Term::Op::Sub: return Term::lit(x - y);
                        case Term::Op::Mul: return Term::lit(x * y);
                        case Term::Op::Div: return Term::lit(x / y);
                        default: break;
                    }
                    break;
                }
                case Sort::Gamma: {
                    const ValueQ& x = a.gamma_lit();
                    const ValueQ& y = b.gamma_lit();
                    switch (op) {
                        case Term::Op::Add: return Term::lit(x + y);
                        case Term::Op::Sub: return Term::lit(x - y);
                        case Term::Op::Div:
                            // rational literal written as a fraction
                            return Term::lit(ValueQ(x.value() / y.value()));
                        default: break;
                    }
                    break;
                }
            }
        }
        switch (op) {
            case Term::Op::Add: return Term::add(a, b);
            case Term::Op::Sub: return Term::sub(a, b);
            case Term::Op::Mul: return Term::mul(a, b);
            case Term::Op::Div:
                if (s == Sort::Res) {
                    // k has no inverse operation; only constant divisors fold
                    if (is_lit(b)) return Term::mul(a, Term::lit(b.field_lit().inv()));
                    throw SortError("division on the residue sort requires a constant divisor");
                }
                if (s == Sort::Gamma)
                    throw SortError("division on the value group requires constant operands");
                return Term::div(a, b);
            default: throw SortError("unreachable");
        }
    }

    Term literal(const mpz_class& n, Sort s) const {
        switch (s) {
            case Sort::K:
                return Term::lit(SeriesElem::constant(FieldElem::from_integer(desc, n)));
            case Sort::Res: return Term::lit(FieldElem::from_integer(desc, n));
            case Sort::Gamma: return Term::lit(ValueQ(mpq_class(n)));
        }
        throw SortError("unreachable");
    }

    STag tag_of(const NodePtr& n, std::vector<std::pair<std::string, Sort>>& bound) const {
        Inference inf;
        inf.free = free_sorts;
        return inf.term(n, STag::Unknown, bound);
    }

    Sort resolved(const NodePtr& n, std::vector<std::pair<std::string, Sort>>& bound,
                  STag fallback) const {
        STag got = tag_of(n, bound);
        if (got == STag::Unknown) got = fallback;
        return to_sort(got);
    }

    Term term(const NodePtr& n, Sort demand,
              std::vector<std::pair<std::string, Sort>>& bound) const {
        switch (n->kind) {
            case Kind::Integer:
                return literal(n->int_val, demand);
            case Kind::Imag: {
                if (demand == Sort::Gamma) throw SortError("imaginary literal on the value group");
                FieldElem v = FieldElem::gaussian(desc, 0, mpq_class(n->int_val));
                return demand == Sort::K ? Term::lit(SeriesElem::constant(v)) : Term::lit(v);
            }
            case Kind::TConst:
                if (demand != Sort::K) throw SortError("t is a K-sort constant");
                return Term::lit(SeriesElem::t(desc));
            case Kind::Var: {
                // the sort comes from inference; check against the demand
                STag tag = STag::Unknown;
                for (auto it = bound.rbegin(); it != bound.rend(); ++it)
                    if (it->first == n->name) {
                        tag = to_tag(it->second);
                        break;
                    }
                if (tag == STag::Unknown) {
                    auto f = free_sorts.find(n->name);
                    if (f != free_sorts.end()) tag = f->second;
                }
                if (tag == STag::Unknown) tag = to_tag(demand);
                Sort s = to_sort(tag);
                if (s != demand)
                    throw SortError("variable " + n->name + " has sort " + sort_name(s) +
                                    ", expected " + sort_name(demand));
                return Term::var(s, n->name);
            }
            case Kind::Add:
            case Kind::Sub:
            case Kind::Mul:
            case Kind::Div: {
                Term a = term(n->kids[0], demand, bound);
                Term b = term(n->kids[1], demand, bound);
                Term::Op op = n->kind == Kind::Add   ? Term::Op::Add
                              : n->kind == Kind::Sub ? Term::Op::Sub
                              : n->kind == Kind::Mul ? Term::Op::Mul
                                                     : Term::Op::Div;
                return fold_or(op, demand, a, b);
            }
            case Kind::Neg: {
                Term a = term(n->kids[0], demand, bound);
                if (is_lit(a)) {
                    switch (demand) {
                        case Sort::K: return Term::lit(-a.series_lit());
                        case Sort::Res: return Term::lit(-a.field_lit());
                        case Sort::Gamma: return Term::lit(-a.gamma_lit());
                    }
                }
                return Term::neg(a);
            }
            case Kind::Pow: {
                if (n->exp_den != 1) {
                    if (n->kids[0]->kind != Kind::TConst)
                        throw SortError("fractional exponents apply to t only");
                    if (demand != Sort::K) throw SortError("t is a K-sort constant");
                    mpq_class q(n->exp_num, n->exp_den);
                    q.canonicalize();
                    return Term::lit(SeriesElem::t_power(desc, q));
                }
                if (!n->exp_num.fits_slong_p())
                    throw SyntaxError("exponent out of range", n->pos);
                long e = n->exp_num.get_si();
                Term base = term(n->kids[0], demand, bound);
                if (is_lit(base)) {
                    switch (demand) {
                        case Sort::K: {
                            SeriesElem b = base.series_lit();
                            SeriesElem r = SeriesElem::one(desc);
                            long a = e < 0 ? -e : e;
                            for (long j = 0; j < a; ++j) r = r * b;
                            if (e < 0) r = r.inverse();
                            return Term::lit(r);
                        }
                        case Sort::Res: return Term::lit(base.field_lit().pow(e));
                        case Sort::Gamma: throw SortError("no powers on the value group");
                    }
                }
                if (e < 0) {
                    if (demand != Sort::K)
                        throw SortError("negative powers require the K sort");
                    Term acc = base;
                    for (long j = 1; j < -e; ++j) acc = Term::mul(acc, base);
                    return Term::div(Term::lit(SeriesElem::one(desc)), acc);
                }
                if (e == 0) {
                    switch (demand) {
                        case Sort::K: return Term::lit(SeriesElem::one(desc));
                        case Sort::Res: return Term::lit(FieldElem::one(desc));
                        case Sort::Gamma: throw SortError("no powers on the value group");
                    }
                }
                Term acc = base;
                for (long j = 1; j < e; ++j) acc = fold_or(Term::Op::Mul, demand, acc, base);
                return acc;
            }
            case Kind::Call: {
                if (n->name == "res") {
                    if (demand != Sort::Res) throw SortError("res produces a residue-field value");
                    return Term::res(term(n->kids[0], Sort::K, bound));
                }
                if (n->name == "iota") {
                    if (demand != Sort::K) throw SortError("iota produces a K-sort value");
                    return Term::iota(term(n->kids[0], Sort::Res, bound));
                }
                if (demand != Sort::Gamma) throw SortError("v produces a value-group element");
                return Term::val(term(n->kids[0], Sort::K, bound));
            }
            default:
                throw SortError("formula in term position");
        }
    }

    Formula formula(const NodePtr& n, std::vector<std::pair<std::string, Sort>>& bound) const {
        switch (n->kind) {
            case Kind::Eq: {
                STag a = tag_of(n->kids[0], bound);
                if (a == STag::Unknown) a = tag_of(n->kids[1], bound);
                if (a == STag::Unknown) a = STag::Res;  // literal-only equation
                Sort s = to_sort(a);
                return Formula::eq(term(n->kids[0], s, bound), term(n->kids[1], s, bound));
            }
            case Kind::Less:
                return Formula::less(term(n->kids[0], Sort::Gamma, bound),
                                     term(n->kids[1], Sort::Gamma, bound));
            case Kind::Not: return Formula::negation(formula(n->kids[0], bound));
            case Kind::And:
                return Formula::conj(formula(n->kids[0], bound), formula(n->kids[1], bound));
            case Kind::Or:
                return Formula::disj(formula(n->kids[0], bound), formula(n->kids[1], bound));
            case Kind::Implies:
                return Formula::implies(formula(n->kids[0], bound), formula(n->kids[1], bound));
            case Kind::Quant: {
                Sort s = sort_of_annot(n->quant_sort, n->pos);
                bound.emplace_back(n->name, s);
                Formula body = formula(n->kids[0], bound);
                bound.pop_back();
                return n->quant_forall ? Formula::forall(n->name, s, body)
                                       : Formula::exists(n->name, s, body);
            }
            default:
                throw SortError("term in formula position (expected = or <)");
        }
    }
};

std::map<std::string, STag> infer_sorts(const NodePtr& root, bool as_formula,
                                        STag top_demand) {
    Inference inf;
    std::vector<std::pair<std::string, Sort>> bound;
    for (int pass = 0; pass < 8; ++pass) {
        inf.changed = false;
        if (as_formula)
            inf.formula(root, bound, false);
        else
            inf.term(root, top_demand, bound);
        if (!inf.changed) break;
    }
    if (as_formula) {
        // resolve sort-anchorless equations, then settle any new variables
        for (int pass = 0; pass < 8; ++pass) {
            inf.changed = false;
            inf.formula(root, bound, true);
            if (!inf.changed) break;
        }
    }
    return inf.free;
}

}  // namespace

Term parse_term(const std::string& text, const FieldDescriptor& d, std::optional<Sort> demand) {
    NodePtr root = expr::parse(text);
    if (expr::is_formula_kind(root->kind))
        throw SortError("expected a term, found a formula");
    STag top = demand ? to_tag(*demand) : STag::Unknown;
    auto sorts = infer_sorts(root, false, top);
    Elaborator el{d, sorts};
    std::vector<std::pair<std::string, Sort>> bound;
    Sort s = demand ? *demand : el.resolved(root, bound, STag::Unknown);
    return el.term(root, s, bound);
}

Formula parse_formula(const std::string& text, const FieldDescriptor& d) {
    NodePtr root = expr::parse(text);
    if (!expr::is_formula_kind(root->kind))
        throw SortError("expected a formula (an equation, inequality or quantified sentence)");
    auto sorts = infer_sorts(root, true, STag::Unknown);
    Elaborator el{d, sorts};
    std::vector<std::pair<std::string, Sort>> bound;
    return el.formula(root, bound);
}

}  // namespace resfield::logic
