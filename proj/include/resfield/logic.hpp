#ifndef RESFIELD_LOGIC_HPP
#define RESFIELD_LOGIC_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "resfield/series.hpp"

namespace resfield::logic {

/// The three sorts of L_res,t: the valued field K, the residue field k,
/// and the value group Gamma.
enum class Sort { K, Res, Gamma };

std::string sort_name(Sort s);  // "K", "k", "G"

/// Sorted term, sort-correct by construction. Immutable, cheaply copyable.
///
/// K-sort: variables, literals (series; the constants 0, 1 and t are
/// literals), +, -, negation, *, division (multiplicative inverse),
/// iota(k-term). k-sort: variables, literals, +, -, negation, *,
/// res(K-term). Gamma-sort: variables, literals (ValueQ), +, -, negation,
/// v(K-term).
class Term {
public:
    enum class Op { Var, Lit, Add, Sub, Neg, Mul, Div, Iota, Res, Val };

    static Term var(Sort s, const std::string& name);
    static Term lit(const SeriesElem& v);
    static Term lit(const FieldElem& v);
    static Term lit(const ValueQ& v);
    static Term add(const Term& a, const Term& b);
    static Term sub(const Term& a, const Term& b);
    static Term neg(const Term& a);
    static Term mul(const Term& a, const Term& b);   // K or k
    static Term div(const Term& a, const Term& b);   // K only
    static Term iota(const Term& a);                 // k -> K
    static Term res(const Term& a);                  // K -> k
    static Term val(const Term& a);                  // K -> Gamma

    Op op() const;
    Sort sort() const;
    const std::string& var_name() const;
    const SeriesElem& series_lit() const;
    const FieldElem& field_lit() const;
    const ValueQ& gamma_lit() const;
    std::size_t arity() const;
    const Term& child(std::size_t i) const;

    bool operator==(const Term& o) const;
    bool operator!=(const Term& o) const { return !(*this == o); }

    void collect_free_vars(std::map<std::string, Sort>& out) const;
    bool contains_var(const std::string& name) const;

private:
    struct Node;
    explicit Term(std::shared_ptr<const Node> n) : n_(std::move(n)) {}
    static Term make_node(Op op, Sort sort, std::vector<Term> kids);
    std::shared_ptr<const Node> n_;
};

/// Formula of L_res,t: sorted equalities, < on Gamma, the propositional
/// connectives, and sort-annotated quantifiers. The free-variable map is
/// computed structurally at construction.
class Formula {
public:
    enum class Kind { Eq, Less, Not, And, Or, Implies, Forall, Exists };

    static Formula eq(const Term& a, const Term& b);     // same sort
    static Formula less(const Term& a, const Term& b);   // Gamma
    static Formula negation(const Formula& a);
    static Formula conj(const Formula& a, const Formula& b);
    static Formula disj(const Formula& a, const Formula& b);
    static Formula implies(const Formula& a, const Formula& b);
    static Formula forall(const std::string& var, Sort s, const Formula& body);
    static Formula exists(const std::string& var, Sort s, const Formula& body);

    Kind kind() const;
    const Term& lhs() const;
    const Term& rhs() const;
    std::size_t arity() const;
    const Formula& child(std::size_t i) const;
    const std::string& quant_var() const;
    Sort quant_sort() const;

    const std::map<std::string, Sort>& free_vars() const;
    bool is_closed() const { return free_vars().empty(); }

    bool operator==(const Formula& o) const;
    bool operator!=(const Formula& o) const { return !(*this == o); }

private:
    struct Node;
    explicit Formula(std::shared_ptr<const Node> n) : n_(std::move(n)) {}
    std::shared_ptr<const Node> n_;
};

using Value = std::variant<SeriesElem, FieldElem, ValueQ>;

struct Assignment {
    explicit Assignment(const FieldDescriptor& d) : desc(d) {}
    FieldDescriptor desc;
    std::map<std::string, Value> vals;

    Assignment with(const std::string& name, Value v) const {
        Assignment a = *this;
        a.vals.insert_or_assign(name, std::move(v));
        return a;
    }
};

// -- concrete syntax -------------------------------------------------------

/// Parses a term; sorts of free variables are inferred from context, with
/// `demand` (when given) imposed on the whole term. Errors: SyntaxError,
/// SortError.
Term parse_term(const std::string& text, const FieldDescriptor& d,
                std::optional<Sort> demand = std::nullopt);
Formula parse_formula(const std::string& text, const FieldDescriptor& d);

std::string print(const Term& t);
std::string print(const Formula& f);

// -- semantics in the implemented series field -----------------------------

Value eval_term(const Term& t, const Assignment& sigma);

/// Truth in the standard model over sigma's descriptor. Supported
/// quantifier fragments: k-sort over a prime field (exhaustive), forall-k
/// over an infinite field when the body normalizes to polynomial equations,
/// and De Morgan duals. K-sort and Gamma-sort quantifiers, and
/// non-normalizable infinite-k bodies, raise UnsupportedQuantifier.
bool eval_formula(const Formula& f, const Assignment& sigma);

/// Rewrites a conjunction of k-sort equations in the variable `var` into
/// polynomials over k (res(E/(1 - t*iota(var))) with var-free E becomes
/// p_E, via the polynomial-part identity). Returns nullopt when the body
/// falls outside this fragment.
std::optional<std::vector<Poly>> normalize_forall_k(const Formula& body,
                                                    const std::string& var,
                                                    const Assignment& sigma);

/// Symbolic reading of a k-sort term as a polynomial in `var`; other free
/// variables are evaluated from sigma. Returns nullopt when `var` occurs
/// outside polynomial positions.
std::optional<Poly> term_as_poly(const Term& t, const std::string& var,
                                 const Assignment& sigma);

}  // namespace resfield::logic

#endif
