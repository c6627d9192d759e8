#ifndef RESFIELD_EXPR_HPP
#define RESFIELD_EXPR_HPP

#include <memory>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace resfield::expr {

/// Untyped syntax tree shared by the formula elaborator, the rational
/// function evaluator and the integer-polynomial reader.
struct Node;
using NodePtr = std::shared_ptr<const Node>;

enum class Kind {
    Integer,  // int_val
    Imag,     // int_val * i (fused literal: `i`, `2i`)
    TConst,   // the distinguished uniformizer t
    Var,      // name
    Add,
    Sub,
    Neg,
    Mul,
    Div,
    Pow,   // kids[0] ^ (exp_num / exp_den)
    Call,  // name in {res, iota, v}, kids[0]
    Eq,
    Less,
    Not,
    And,
    Or,
    Implies,
    Quant,  // quant_forall, name, quant_sort in {'K','k','G'}, kids[0]
};

struct Node {
    Kind kind;
    std::size_t pos = 0;  // byte offset for diagnostics
    mpz_class int_val;
    std::string name;
    bool quant_forall = false;
    char quant_sort = 0;
    mpz_class exp_num, exp_den;  // Pow exponent
    std::vector<NodePtr> kids;
};

/// Full grammar, formulas included. Throws SyntaxError.
NodePtr parse(const std::string& text);

bool is_formula_kind(Kind k);

}  // namespace resfield::expr

#endif
