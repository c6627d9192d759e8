#include "resfield/logic.hpp"

namespace resfield::logic {

namespace {

SeriesElem as_series(const Value& v, const std::string& name) {
    if (const SeriesElem* s = std::get_if<SeriesElem>(&v)) return *s;
    throw SortError("binding for " + name + " is not a K-sort value");
}

FieldElem as_field(const Value& v, const std::string& name) {
    if (const FieldElem* s = std::get_if<FieldElem>(&v)) return *s;
    throw SortError("binding for " + name + " is not a k-sort value");
}

ValueQ as_gamma(const Value& v, const std::string& name) {
    if (const ValueQ* s = std::get_if<ValueQ>(&v)) return *s;
    throw SortError("binding for " + name + " is not a value-group element");
}

}  // namespace

Value eval_term(const Term& t, const Assignment& sigma) {
    switch (t.op()) {
        case Term::Op::Var: {
            auto it = sigma.vals.find(t.var_name());
            if (it == sigma.vals.end()) throw UnboundVariable(t.var_name());
            switch (t.sort()) {
                case Sort::K: return as_series(it->second, t.var_name());
                case Sort::Res: return as_field(it->second, t.var_name());
                case Sort::Gamma: return as_gamma(it->second, t.var_name());
            }
            throw Error("unreachable");
        }
        case Term::Op::Lit:
            switch (t.sort()) {
                case Sort::K: return t.series_lit();
                case Sort::Res: return t.field_lit();
                case Sort::Gamma: return t.gamma_lit();
            }
            throw Error("unreachable");
        case Term::Op::Iota:
            return lift_iota(std::get<FieldElem>(eval_term(t.child(0), sigma)));
        case Term::Op::Res:
            return std::get<SeriesElem>(eval_term(t.child(0), sigma)).total_res();
        case Term::Op::Val:
            return std::get<SeriesElem>(eval_term(t.child(0), sigma)).val();
        default: break;
    }

    // sorted arithmetic
    switch (t.sort()) {
        case Sort::K: {
            SeriesElem a = std::get<SeriesElem>(eval_term(t.child(0), sigma));
            if (t.op() == Term::Op::Neg) return -a;
            SeriesElem b = std::get<SeriesElem>(eval_term(t.child(1), sigma));
            switch (t.op()) {
                case Term::Op::Add: return a + b;
                case Term::Op::Sub: return a - b;
                case Term::Op::Mul: return a * b;
                case Term::Op::Div: return a / b;  // throws DivisionByZero on b = 0
                default: break;
            }
            break;
        }
        case Sort::Res: {
            FieldElem a = std::get<FieldElem>(eval_term(t.child(0), sigma));
            if (t.op() == Term::Op::Neg) return -a;
            FieldElem b = std::get<FieldElem>(eval_term(t.child(1), sigma));
            switch (t.op()) {
                case Term::Op::Add: return a + b;
                case Term::Op::Sub: return a - b;
                case Term::Op::Mul: return a * b;
                default: break;
            }
            break;
        }
        case Sort::Gamma: {
            ValueQ a = std::get<ValueQ>(eval_term(t.child(0), sigma));
            if (t.op() == Term::Op::Neg) return -a;
            ValueQ b = std::get<ValueQ>(eval_term(t.child(1), sigma));
            switch (t.op()) {
                case Term::Op::Add: return a + b;
                case Term::Op::Sub: return a - b;
                default: break;
            }
            break;
        }
    }
    throw Error("malformed term");
}

// ---- normalize_forall_k ----------------------------------------------------

namespace {

bool is_series_lit(const Term& t, const SeriesElem& v) {
    return t.op() == Term::Op::Lit && t.sort() == Sort::K && t.series_lit() == v;
}

// matches 1 - t*iota(y) (either factor order in the product)
bool matches_one_minus_t_iota(const Term& d, const std::string& var,
                              const FieldDescriptor& desc) {
    if (d.op() != Term::Op::Sub) return false;
    if (!is_series_lit(d.child(0), SeriesElem::one(desc))) return false;
    const Term& prod = d.child(1);
    if (prod.op() != Term::Op::Mul) return false;
    const Term& a = prod.child(0);
    const Term& b = prod.child(1);
    auto is_t = [&desc](const Term& x) { return is_series_lit(x, SeriesElem::t(desc)); };
    auto is_iota_var = [&var](const Term& x) {
        return x.op() == Term::Op::Iota && x.child(0).op() == Term::Op::Var &&
               x.child(0).var_name() == var;
    };
    return (is_t(a) && is_iota_var(b)) || (is_t(b) && is_iota_var(a));
}

std::optional<Poly> poly_of(const Term& t, const std::string& var, const Assignment& sigma) {
    const FieldDescriptor& d = sigma.desc;
    switch (t.op()) {
        case Term::Op::Var:
            if (t.var_name() == var) return Poly::x(d);
            return Poly::constant(as_field(eval_term(t, sigma), t.var_name()));
        case Term::Op::Lit:
            return Poly::constant(t.field_lit());
        case Term::Op::Add: {
            auto a = poly_of(t.child(0), var, sigma);
            auto b = poly_of(t.child(1), var, sigma);
            if (!a || !b) return std::nullopt;
            return *a + *b;
        }
        case Term::Op::Sub: {
            auto a = poly_of(t.child(0), var, sigma);
            auto b = poly_of(t.child(1), var, sigma);
            if (!a || !b) return std::nullopt;
            return *a - *b;
        }
        case Term::Op::Neg: {
            auto a = poly_of(t.child(0), var, sigma);
            if (!a) return std::nullopt;
            return -*a;
        }
        case Term::Op::Mul: {
            auto a = poly_of(t.child(0), var, sigma);
            auto b = poly_of(t.child(1), var, sigma);
            if (!a || !b) return std::nullopt;
            return *a * *b;
        }
        case Term::Op::Res: {
            const Term& e = t.child(0);
            if (!e.contains_var(var)) {
                SeriesElem v = std::get<SeriesElem>(eval_term(e, sigma));
                return Poly::constant(v.total_res());
            }
            // res(E / (1 - t*iota(var))) with var-free E -> p_E
            if (e.op() == Term::Op::Div && !e.child(0).contains_var(var) &&
                matches_one_minus_t_iota(e.child(1), var, d)) {
                SeriesElem a = std::get<SeriesElem>(eval_term(e.child(0), sigma));
                return a.extract_pa();
            }
            return std::nullopt;
        }
        default:
            return std::nullopt;
    }
}

bool collect_equations(const Formula& f, std::vector<const Formula*>& out) {
    switch (f.kind()) {
        case Formula::Kind::And:
            return collect_equations(f.child(0), out) && collect_equations(f.child(1), out);
        case Formula::Kind::Eq:
            out.push_back(&f);
            return true;
        default:
            return false;
    }
}

}  // namespace

std::optional<Poly> term_as_poly(const Term& t, const std::string& var,
                                 const Assignment& sigma) {
    if (t.sort() != Sort::Res) throw SortError("expected a k-sort term");
    return poly_of(t, var, sigma);
}

std::optional<std::vector<Poly>> normalize_forall_k(const Formula& body,
                                                    const std::string& var,
                                                    const Assignment& sigma) {
    std::vector<const Formula*> eqs;
    if (!collect_equations(body, eqs)) return std::nullopt;
    std::vector<Poly> polys;
    polys.reserve(eqs.size());
    for (const Formula* eq : eqs) {
        if (eq->lhs().sort() != Sort::Res) return std::nullopt;
        auto l = poly_of(eq->lhs(), var, sigma);
        auto r = poly_of(eq->rhs(), var, sigma);
        if (!l || !r) return std::nullopt;
        polys.push_back(*l - *r);
    }
    return polys;
}

// ---- eval_formula ----------------------------------------------------------

namespace {

// negation normal form step: rewrite not(f) pushing the negation inward
Formula push_not(const Formula& f) {
    switch (f.kind()) {
        case Formula::Kind::Not: return f.child(0);
        case Formula::Kind::And:
            return Formula::disj(push_not(f.child(0)), push_not(f.child(1)));
        case Formula::Kind::Or:
            return Formula::conj(push_not(f.child(0)), push_not(f.child(1)));
        case Formula::Kind::Implies:
            return Formula::conj(f.child(0), push_not(f.child(1)));
        case Formula::Kind::Forall:
            return Formula::exists(f.quant_var(), f.quant_sort(), push_not(f.child(0)));
        case Formula::Kind::Exists:
            return Formula::forall(f.quant_var(), f.quant_sort(), push_not(f.child(0)));
        default:
            return Formula::negation(f);
    }
}

bool eval_quant(const Formula& f, const Assignment& sigma) {
    const bool is_forall = f.kind() == Formula::Kind::Forall;
    if (f.quant_sort() != Sort::Res)
        throw UnsupportedQuantifier("quantification over sort " + sort_name(f.quant_sort()) +
                                    " is outside the decidable fragment");
    if (sigma.desc.is_finite()) {
        FieldEnumeration en(sigma.desc);
        while (!en.done()) {
            Assignment s2 = sigma.with(f.quant_var(), en.next());
            bool v = eval_formula(f.child(0), s2);
            if (is_forall && !v) return false;
            if (!is_forall && v) return true;
        }
        return is_forall;
    }
    // infinite k: forall via polynomial identities; exists via the dual
    Formula body = is_forall ? f.child(0) : push_not(f.child(0));
    auto polys = normalize_forall_k(body, f.quant_var(), sigma);
    if (!polys)
        throw UnsupportedQuantifier(
            "quantifier body over infinite k does not normalize to polynomial equations");
    bool all_zero = true;
    for (const Poly& p : *polys)
        if (!p.is_zero()) all_zero = false;
    return is_forall ? all_zero : !all_zero;
}

}  // namespace

bool eval_formula(const Formula& f, const Assignment& sigma) {
    switch (f.kind()) {
        case Formula::Kind::Eq: {
            Value a = eval_term(f.lhs(), sigma);
            Value b = eval_term(f.rhs(), sigma);
            return a == b;
        }
        case Formula::Kind::Less: {
            ValueQ a = std::get<ValueQ>(eval_term(f.lhs(), sigma));
            ValueQ b = std::get<ValueQ>(eval_term(f.rhs(), sigma));
            return a < b;
        }
        case Formula::Kind::Not: return !eval_formula(f.child(0), sigma);
        case Formula::Kind::And:
            return eval_formula(f.child(0), sigma) && eval_formula(f.child(1), sigma);
        case Formula::Kind::Or:
            return eval_formula(f.child(0), sigma) || eval_formula(f.child(1), sigma);
        case Formula::Kind::Implies:
            return !eval_formula(f.child(0), sigma) || eval_formula(f.child(1), sigma);
        case Formula::Kind::Forall:
        case Formula::Kind::Exists:
            return eval_quant(f, sigma);
    }
    throw Error("unreachable");
}

}  // namespace resfield::logic
