#ifndef RESFIELD_ENCODERS_HPP
#define RESFIELD_ENCODERS_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "resfield/logic.hpp"
#include "resfield/poly.hpp"
#include "resfield/series.hpp"

namespace resfield {

/// Integer-coefficient polynomial in X_1..X_m and T.
class DiophPoly {
public:
    using Exponents = std::vector<unsigned>;  // length m+1; the last entry is T's
    // descending lexicographic order: X-monomials print before T-monomials
    using Monomials = std::map<Exponents, mpz_class, std::greater<Exponents>>;

    explicit DiophPoly(unsigned unknowns) : m_(unknowns) {}
    unsigned unknowns() const { return m_; }
    void add_monomial(Exponents exps, const mpz_class& c);
    const Monomials& monomials() const { return mono_; }
    bool is_zero() const { return mono_.empty(); }

    /// Substitutes X_i -> args[i] and T -> the output variable, mapping the
    /// integer coefficients into k.
    Poly compose(const std::vector<Poly>& args, const FieldDescriptor& d) const;

    std::string to_string() const;

private:
    unsigned m_;
    Monomials mono_;
};

/// A finite system f_1 = ... = f_n = 0 over Z[X_1..X_m, T].
struct DiophSystem {
    unsigned unknowns = 0;
    std::vector<DiophPoly> polys;
};

/// One polynomial per line in variables X1..Xm, T; `#` comments. The number
/// of unknowns is the largest X-index appearing.
DiophSystem parse_dioph_system(const std::string& text);

/// One series expression per line; `#` comments.
std::vector<SeriesElem> parse_witness_lines(const std::string& text, const FieldDescriptor& d);

/// The sentence  exists a_1..a_m : K . forall y : k .
///   /\_j f_j(res(a_1/(1 - t*iota(y))), ..., res(a_m/(1 - t*iota(y))), y) = 0.
logic::Formula encode_h10(const DiophSystem& sys, const FieldDescriptor& d);

struct H10CheckResult {
    bool accepted = false;
    std::vector<Poly> composed;  // certificate: f_j(p_{a_1}(T), ..., T)
};

/// Substitutes the p_a of each witness into the system and checks that every
/// composition is the zero polynomial (infinite k) or vanishes on all of k
/// (prime field). Throws ArityMismatch when the witness count is wrong.
H10CheckResult check_h10_witness(const DiophSystem& sys,
                                 const std::vector<SeriesElem>& witnesses,
                                 const FieldDescriptor& d);

/// The forward direction of the reduction: T -> t^-1.
std::vector<SeriesElem> witness_from_polynomial_solution(const std::vector<Poly>& sol);

struct FiniteSubset {
    explicit FiniteSubset(const FieldDescriptor& d) : desc(d) {}
    static FiniteSubset of(const FieldDescriptor& d, std::vector<FieldElem> elems);
    FieldDescriptor desc;
    std::vector<FieldElem> elements;  // canonical order, distinct
};

struct SabResult {
    bool all_of_k = false;
    std::vector<FieldElem> elements;  // empty when all_of_k
    Poly pab;                         // p_{a,b}(X) = sum res(a b^i) X^i, i < n
    unsigned long n = 0;              // minimal with v(a) + n v(b) > 0

    explicit SabResult(const FieldDescriptor& d) : pab(d) {}
};

/// S_{a,b} = {beta : res(a/(1 - b beta)) = 0}; requires v(b) > 0 (else
/// NotInfinitesimal). Either finite (the roots of p_{a,b} in k) or all of k.
SabResult compute_Sab(const SeriesElem& a, const SeriesElem& b);

/// a = prod_{s in S} (t^-1 - iota(s)), b = t; compute_Sab returns exactly S.
std::pair<SeriesElem, SeriesElem> encode_finite_set(const FiniteSubset& s);

struct DefkResult {
    bool in_k = false;
    FieldElem alpha;            // when in_k
    mpq_class witness_exponent; // q = v(x - iota(res x)), when not in_k
    SeriesElem witness;         // y = t^-q
    FieldElem res_xy;           // res(x y)   (differs from the product below)
    FieldElem res_x_res_y;      // res(x) res(y)

    explicit DefkResult(const FieldDescriptor& d)
        : alpha(FieldElem::zero(d)),
          witness(SeriesElem::zero(d)),
          res_xy(FieldElem::zero(d)),
          res_x_res_y(FieldElem::zero(d)) {}
};

/// Membership test for iota(k) with an explicit multiplicativity-failure
/// witness in the negative case.
DefkResult defk_check(const SeriesElem& x);

/// res(t^-n / (1 - t iota(beta))) == beta^n; holds identically.
bool modelcomp_identity_check(unsigned long n, const FieldElem& beta);

}  // namespace resfield

#endif
