#include <optional>

#include "resfield/logic.hpp"

namespace resfield::logic {

std::string sort_name(Sort s) {
    switch (s) {
        case Sort::K: return "K";
        case Sort::Res: return "k";
        case Sort::Gamma: return "G";
    }
    return "?";
}

struct Term::Node {
    Op op;
    Sort sort;
    std::string name;
    std::optional<SeriesElem> klit;
    std::optional<FieldElem> flit;
    std::optional<ValueQ> glit;
    std::vector<Term> kids;
};

namespace {

void require_sort(const Term& t, Sort s, const char* what) {
    if (t.sort() != s)
        throw SortError(std::string(what) + " requires a " + sort_name(s) +
                        "-sort argument, got " + sort_name(t.sort()));
}

Sort common_sort(const Term& a, const Term& b, const char* what) {
    if (a.sort() != b.sort())
        throw SortError(std::string(what) + " applied across sorts " + sort_name(a.sort()) +
                        " and " + sort_name(b.sort()));
    return a.sort();
}

}  // namespace

Term Term::make_node(Op op, Sort sort, std::vector<Term> kids) {
    auto n = std::make_shared<Node>();
    n->op = op;
    n->sort = sort;
    n->kids = std::move(kids);
    return Term(std::move(n));
}

Term Term::var(Sort s, const std::string& name) {
    auto n = std::make_shared<Node>();
    n->op = Op::Var;
    n->sort = s;
    n->name = name;
    return Term(std::move(n));
}

Term Term::lit(const SeriesElem& v) {
    auto n = std::make_shared<Node>();
    n->op = Op::Lit;
    n->sort = Sort::K;
    n->klit = v;
    return Term(std::move(n));
}

Term Term::lit(const FieldElem& v) {
    auto n = std::make_shared<Node>();
    n->op = Op::Lit;
    n->sort = Sort::Res;
    n->flit = v;
    return Term(std::move(n));
}

Term Term::lit(const ValueQ& v) {
    auto n = std::make_shared<Node>();
    n->op = Op::Lit;
    n->sort = Sort::Gamma;
    n->glit = v;
    return Term(std::move(n));
}

Term Term::add(const Term& a, const Term& b) {
    return make_node(Op::Add, common_sort(a, b, "+"), {a, b});
}

Term Term::sub(const Term& a, const Term& b) {
    return make_node(Op::Sub, common_sort(a, b, "-"), {a, b});
}

Term Term::neg(const Term& a) { return make_node(Op::Neg, a.sort(), {a}); }

Term Term::mul(const Term& a, const Term& b) {
    Sort s = common_sort(a, b, "*");
    if (s == Sort::Gamma) throw SortError("no multiplication on the value group");
    return make_node(Op::Mul, s, {a, b});
}

Term Term::div(const Term& a, const Term& b) {
    Sort s = common_sort(a, b, "/");
    if (s != Sort::K) throw SortError("division is a K-sort operation");
    return make_node(Op::Div, s, {a, b});
}

Term Term::iota(const Term& a) {
    require_sort(a, Sort::Res, "iota");
    return make_node(Op::Iota, Sort::K, {a});
}

Term Term::res(const Term& a) {
    require_sort(a, Sort::K, "res");
    return make_node(Op::Res, Sort::Res, {a});
}

Term Term::val(const Term& a) {
    require_sort(a, Sort::K, "v");
    return make_node(Op::Val, Sort::Gamma, {a});
}

Term::Op Term::op() const { return n_->op; }
Sort Term::sort() const { return n_->sort; }
const std::string& Term::var_name() const { return n_->name; }
const SeriesElem& Term::series_lit() const { return *n_->klit; }
const FieldElem& Term::field_lit() const { return *n_->flit; }
const ValueQ& Term::gamma_lit() const { return *n_->glit; }
std::size_t Term::arity() const { return n_->kids.size(); }
const Term& Term::child(std::size_t i) const { return n_->kids[i]; }

bool Term::operator==(const Term& o) const {
    if (n_ == o.n_) return true;
    if (n_->op != o.n_->op || n_->sort != o.n_->sort) return false;
    switch (n_->op) {
        case Op::Var: return n_->name == o.n_->name;
        case Op::Lit:
            switch (n_->sort) {
                case Sort::K: return *n_->klit == *o.n_->klit;
                case Sort::Res: return *n_->flit == *o.n_->flit;
                case Sort::Gamma: return *n_->glit == *o.n_->glit;
            }
            return false;
        default:
            if (n_->kids.size() != o.n_->kids.size()) return false;
            for (std::size_t i = 0; i < n_->kids.size(); ++i)
                if (!(n_->kids[i] == o.n_->kids[i])) return false;
            return true;
    }
}

void Term::collect_free_vars(std::map<std::string, Sort>& out) const {
    if (n_->op == Op::Var) {
        out.emplace(n_->name, n_->sort);
        return;
    }
    for (const auto& k : n_->kids) k.collect_free_vars(out);
}

bool Term::contains_var(const std::string& name) const {
    if (n_->op == Op::Var) return n_->name == name;
    for (const auto& k : n_->kids)
        if (k.contains_var(name)) return true;
    return false;
}

// --------------------------------------------------------------------------

struct Formula::Node {
    Kind kind;
    std::vector<Formula> fkids;
    std::optional<Term> lhs, rhs;
    std::string var;
    Sort qsort = Sort::Res;
    std::map<std::string, Sort> free;
};

Formula Formula::eq(const Term& a, const Term& b) {
    common_sort(a, b, "=");
    auto n = std::make_shared<Node>();
    n->kind = Kind::Eq;
    n->lhs = a;
    n->rhs = b;
    a.collect_free_vars(n->free);
    b.collect_free_vars(n->free);
    return Formula(std::move(n));
}

Formula Formula::less(const Term& a, const Term& b) {
    require_sort(a, Sort::Gamma, "<");
    require_sort(b, Sort::Gamma, "<");
    auto n = std::make_shared<Node>();
    n->kind = Kind::Less;
    n->lhs = a;
    n->rhs = b;
    a.collect_free_vars(n->free);
    b.collect_free_vars(n->free);
    return Formula(std::move(n));
}

Formula Formula::negation(const Formula& a) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Not;
    n->fkids = {a};
    n->free = a.free_vars();
    return Formula(std::move(n));
}

namespace {

std::map<std::string, Sort> merged_free(const Formula& a, const Formula& b) {
    std::map<std::string, Sort> m = a.free_vars();
    for (const auto& [v, s] : b.free_vars()) m.emplace(v, s);
    return m;
}

}  // namespace

Formula Formula::conj(const Formula& a, const Formula& b) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::And;
    n->fkids = {a, b};
    n->free = merged_free(a, b);
    return Formula(std::move(n));
}

Formula Formula::disj(const Formula& a, const Formula& b) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Or;
    n->fkids = {a, b};
    n->free = merged_free(a, b);
    return Formula(std::move(n));
}

Formula Formula::implies(const Formula& a, const Formula& b) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Implies;
    n->fkids = {a, b};
    n->free = merged_free(a, b);
    return Formula(std::move(n));
}

Formula Formula::forall(const std::string& var, Sort s, const Formula& body) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Forall;
    n->var = var;
    n->qsort = s;
    n->fkids = {body};
    n->free = body.free_vars();
    n->free.erase(var);
    return Formula(std::move(n));
}

Formula Formula::exists(const std::string& var, Sort s, const Formula& body) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Exists;
    n->var = var;
    n->qsort = s;
    n->fkids = {body};
    n->free = body.free_vars();
    n->free.erase(var);
    return Formula(std::move(n));
}

Formula::Kind Formula::kind() const { return n_->kind; }
const Term& Formula::lhs() const { return *n_->lhs; }
const Term& Formula::rhs() const { return *n_->rhs; }
std::size_t Formula::arity() const { return n_->fkids.size(); }
const Formula& Formula::child(std::size_t i) const { return n_->fkids[i]; }
const std::string& Formula::quant_var() const { return n_->var; }
Sort Formula::quant_sort() const { return n_->qsort; }
const std::map<std::string, Sort>& Formula::free_vars() const { return n_->free; }

bool Formula::operator==(const Formula& o) const {
    if (n_ == o.n_) return true;
    if (n_->kind != o.n_->kind) return false;
    switch (n_->kind) {
        case Kind::Eq:
        case Kind::Less:
            return lhs() == o.lhs() && rhs() == o.rhs();
        case Kind::Forall:
        case Kind::Exists:
            if (n_->var != o.n_->var || n_->qsort != o.n_->qsort) return false;
            return n_->fkids[0] == o.n_->fkids[0];
        default:
            if (n_->fkids.size() != o.n_->fkids.size()) return false;
            for (std::size_t i = 0; i < n_->fkids.size(); ++i)
                if (!(n_->fkids[i] == o.n_->fkids[i])) return false;
            return true;
    }
}

// ---- printing ------------------------------------------------------------

namespace {

// term precedence: additive 6, multiplicative 7, unary 8, atoms 9
int term_prec(const Term& t) {
    switch (t.op()) {
        case Term::Op::Add:
        case Term::Op::Sub: return 6;
        case Term::Op::Mul:
        case Term::Op::Div: return 7;
        case Term::Op::Neg: return 8;
        default: return 9;
    }
}

std::string print_term(const Term& t, int ctx);

// Non-atomic literals are always parenthesized; the parser folds the
// parenthesized constant expression back into the identical literal.
std::string lit_str(const Term& t) {
    std::string s;
    switch (t.sort()) {
        case Sort::K: {
            const SeriesElem& v = t.series_lit();
            return v.prints_atomically() ? v.to_string() : "(" + v.to_string() + ")";
        }
        case Sort::Res: s = t.field_lit().to_string(); break;
        case Sort::Gamma: s = t.gamma_lit().to_string(); break;
    }
    bool atomic = s.find_first_of("+-*/") == std::string::npos;
    return atomic ? s : "(" + s + ")";
}

std::string print_term_node(const Term& t) {
    switch (t.op()) {
        case Term::Op::Var: return t.var_name();
        case Term::Op::Lit: return lit_str(t);
        case Term::Op::Add:
            return print_term(t.child(0), 6) + " + " + print_term(t.child(1), 7);
        case Term::Op::Sub:
            return print_term(t.child(0), 6) + " - " + print_term(t.child(1), 7);
        case Term::Op::Mul:
            return print_term(t.child(0), 7) + "*" + print_term(t.child(1), 8);
        case Term::Op::Div:
            return print_term(t.child(0), 7) + "/" + print_term(t.child(1), 8);
        case Term::Op::Neg: return "-" + print_term(t.child(0), 8);
        case Term::Op::Iota: return "iota(" + print_term(t.child(0), 0) + ")";
        case Term::Op::Res: return "res(" + print_term(t.child(0), 0) + ")";
        case Term::Op::Val: return "v(" + print_term(t.child(0), 0) + ")";
    }
    return "?";
}

std::string print_term(const Term& t, int ctx) {
    std::string s = print_term_node(t);
    if (term_prec(t) < ctx) return "(" + s + ")";
    return s;
}

// formula precedence: quantifier 0, -> 1, or 2, and 3, not 4, atoms 5
int formula_prec(const Formula& f) {
    switch (f.kind()) {
        case Formula::Kind::Forall:
        case Formula::Kind::Exists: return 0;
        case Formula::Kind::Implies: return 1;
        case Formula::Kind::Or: return 2;
        case Formula::Kind::And: return 3;
        case Formula::Kind::Not: return 4;
        default: return 5;
    }
}

std::string print_formula(const Formula& f, int ctx) {
    std::string s;
    switch (f.kind()) {
        case Formula::Kind::Eq:
            s = print_term(f.lhs(), 6) + " = " + print_term(f.rhs(), 6);
            break;
        case Formula::Kind::Less:
            s = print_term(f.lhs(), 6) + " < " + print_term(f.rhs(), 6);
            break;
        case Formula::Kind::Not:
            s = "not " + print_formula(f.child(0), 4);
            break;
        case Formula::Kind::And:
            s = print_formula(f.child(0), 3) + " and " + print_formula(f.child(1), 4);
            break;
        case Formula::Kind::Or:
            s = print_formula(f.child(0), 2) + " or " + print_formula(f.child(1), 3);
            break;
        case Formula::Kind::Implies:
            s = print_formula(f.child(0), 2) + " -> " + print_formula(f.child(1), 1);
            break;
        case Formula::Kind::Forall:
        case Formula::Kind::Exists:
            s = std::string(f.kind() == Formula::Kind::Forall ? "forall " : "exists ") +
                f.quant_var() + ":" + sort_name(f.quant_sort()) + " . " +
                print_formula(f.child(0), 0);
            break;
    }
    if (formula_prec(f) < ctx) return "(" + s + ")";
    return s;
}

}  // namespace

std::string print(const Term& t) { return print_term(t, 0); }
std::string print(const Formula& f) { return print_formula(f, 0); }

}  // namespace resfield::logic
