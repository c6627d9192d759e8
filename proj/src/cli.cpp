#include "resfield/cli.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "resfield/encoders.hpp"
#include "resfield/ext_valuation.hpp"
#include "resfield/logic.hpp"

namespace resfield::cli {

namespace {

using logic::Assignment;
using logic::Formula;
using logic::Sort;
using logic::Term;

FieldDescriptor parse_field_flag(const std::string& s) {
    if (s == "Q") return FieldDescriptor::rationals();
    if (s == "Qi") return FieldDescriptor::gaussian_rationals();
    if (s.rfind("Fp:", 0) == 0) {
        const std::string digits = s.substr(3);
        if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
            throw Error("bad --field value '" + s + "' (expected Q, Fp:<p> or Qi)");
        unsigned long p = std::stoul(digits);
        if (p >= (1ull << 31)) throw Error("prime modulus must be below 2^31");
        return FieldDescriptor::prime_field(static_cast<std::uint32_t>(p));
    }
    throw Error("bad --field value '" + s + "' (expected Q, Fp:<p> or Qi)");
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot read file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

// comment-stripped content, joined with spaces (one formula per file)
std::string strip_comments(const std::string& text) {
    std::istringstream is(text);
    std::string line, out;
    while (std::getline(is, line)) {
        std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        if (!out.empty()) out += " ";
        out += line;
    }
    return out;
}

mpq_class parse_rational_arg(const std::string& s) {
    if (s.empty() || s.find_first_not_of("-0123456789/") != std::string::npos)
        throw Error("bad rational argument '" + s + "'");
    try {
        mpq_class q(s);
        if (q.get_den() == 0) throw DivisionByZero("zero denominator in '" + s + "'");
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        throw Error("bad rational argument '" + s + "'");
    }
}

SeriesElem eval_series_arg(const std::string& text, const FieldDescriptor& d) {
    Term t = logic::parse_term(text, d, Sort::K);
    return std::get<SeriesElem>(logic::eval_term(t, Assignment(d)));
}

FieldElem eval_field_arg(const std::string& text, const FieldDescriptor& d) {
    Term t = logic::parse_term(text, d, Sort::Res);
    return std::get<FieldElem>(logic::eval_term(t, Assignment(d)));
}

std::string set_to_string(const std::vector<FieldElem>& elems) {
    std::string out = "{";
    for (std::size_t i = 0; i < elems.size(); ++i) {
        if (i) out += ", ";
        out += elems[i].to_string();
    }
    return out + "}";
}

struct Options {
    std::string field;
    std::string output;
    std::uint64_t seed = 0;
    std::string arg1, arg2;
    std::vector<std::string> binds;
};

int dispatch(const std::string& cmd, const Options& opt, std::ostream& out) {
    const FieldDescriptor d = parse_field_flag(opt.field);

    if (cmd == "sample") {
        out << field_sample(d, opt.seed).to_string() << "\n";
        return 0;
    }
    if (cmd == "res") {
        out << eval_series_arg(opt.arg1, d).total_res().to_string() << "\n";
        return 0;
    }
    if (cmd == "res0") {
        out << eval_series_arg(opt.arg1, d).res0().to_string() << "\n";
        return 0;
    }
    if (cmd == "val") {
        out << eval_series_arg(opt.arg1, d).val().to_string() << "\n";
        return 0;
    }
    if (cmd == "coeff") {
        out << eval_series_arg(opt.arg1, d).coeff_at(parse_rational_arg(opt.arg2)).to_string()
            << "\n";
        return 0;
    }
    if (cmd == "pa") {
        out << eval_series_arg(opt.arg1, d).extract_pa().to_string("X") << "\n";
        return 0;
    }
    if (cmd == "expand") {
        auto terms = eval_series_arg(opt.arg1, d).truncated_expansion(
            parse_rational_arg(opt.arg2));
        for (const auto& [q, c] : terms)
            out << "(" << q.get_str() << ", " << c.to_string() << ")\n";
        return 0;
    }
    if (cmd == "sab") {
        SabResult r = compute_Sab(eval_series_arg(opt.arg1, d), eval_series_arg(opt.arg2, d));
        out << "n = " << r.n << "\n";
        out << "p_ab = " << r.pab.to_string("X") << "\n";
        out << "S = " << (r.all_of_k ? "k" : set_to_string(r.elements)) << "\n";
        return 0;
    }
    if (cmd == "encode-set") {
        std::vector<FieldElem> elems;
        std::string list = opt.arg1;
        std::size_t pos = 0;
        while (pos <= list.size()) {
            std::size_t comma = list.find(',', pos);
            std::string item = list.substr(pos, comma == std::string::npos ? comma : comma - pos);
            std::size_t a = item.find_first_not_of(" \t");
            if (a != std::string::npos) {
                std::size_t b = item.find_last_not_of(" \t");
                elems.push_back(eval_field_arg(item.substr(a, b - a + 1), d));
            }
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
        auto [a, b] = encode_finite_set(FiniteSubset::of(d, std::move(elems)));
        out << "a = " << a.to_string() << "\n";
        out << "b = " << b.to_string() << "\n";
        return 0;
    }
    if (cmd == "defk") {
        DefkResult r = defk_check(eval_series_arg(opt.arg1, d));
        if (r.in_k) {
            out << "InK alpha = " << r.alpha.to_string() << "\n";
            return 0;
        }
        out << "NotInK q = " << r.witness_exponent.get_str() << "\n";
        out << "witness y = " << r.witness.to_string() << "\n";
        out << "res(x*y) = " << r.res_xy.to_string() << "\n";
        out << "res(x)*res(y) = " << r.res_x_res_y.to_string() << "\n";
        return 1;
    }
    if (cmd == "gauss-val") {
        out << gauss_val(parse_ext_ratfunc(opt.arg1, d)).to_string() << "\n";
        return 0;
    }
    if (cmd == "gauss-res") {
        out << gauss_residue(parse_ext_ratfunc(opt.arg1, d)).to_string("x") << "\n";
        return 0;
    }
    if (cmd == "inf-val") {
        out << infinitesimal_val(parse_ext_ratfunc(opt.arg1, d)).to_string() << "\n";
        return 0;
    }
    if (cmd == "roots") {
        Term t = logic::parse_term(opt.arg1, d, Sort::Res);
        auto p = logic::term_as_poly(t, "X", Assignment(d));
        if (!p) throw Error("not a polynomial in X");
        RootsInK r = poly_roots_in_k(*p);
        out << (r.all_of_k ? "k" : set_to_string(r.roots)) << "\n";
        return 0;
    }
    if (cmd == "encode-h10") {
        DiophSystem sys = parse_dioph_system(read_file(opt.arg1));
        out << logic::print(encode_h10(sys, d)) << "\n";
        return 0;
    }
    if (cmd == "check-witness") {
        DiophSystem sys = parse_dioph_system(read_file(opt.arg1));
        std::vector<SeriesElem> w = parse_witness_lines(read_file(opt.arg2), d);
        H10CheckResult r = check_h10_witness(sys, w, d);
        for (std::size_t j = 0; j < r.composed.size(); ++j)
            out << "f" << (j + 1) << " -> " << r.composed[j].to_string("T") << "\n";
        out << (r.accepted ? "accepted" : "rejected") << "\n";
        return r.accepted ? 0 : 1;
    }
    if (cmd == "witness-from-sol") {
        std::istringstream is(read_file(opt.arg1));
        std::string line;
        std::vector<Poly> sol;
        while (std::getline(is, line)) {
            std::size_t hash = line.find('#');
            if (hash != std::string::npos) line.erase(hash);
            if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
            Term t = logic::parse_term(line, d, Sort::Res);
            auto p = logic::term_as_poly(t, "T", Assignment(d));
            if (!p) throw Error("not a polynomial in T: " + line);
            sol.push_back(*p);
        }
        for (const SeriesElem& w : witness_from_polynomial_solution(sol))
            out << w.to_string() << "\n";
        return 0;
    }
    if (cmd == "eval") {
        Formula f = logic::parse_formula(strip_comments(read_file(opt.arg1)), d);
        Assignment sigma(d);
        for (const std::string& b : opt.binds) {
            std::size_t eq = b.find('=');
            if (eq == std::string::npos)
                throw Error("bad --bind '" + b + "' (expected var=EXPR)");
            std::string var = b.substr(0, eq);
            std::string expr_text = b.substr(eq + 1);
            auto it = f.free_vars().find(var);
            if (it == f.free_vars().end())
                throw Error("--bind " + var + ": no such free variable in the formula");
            Term t = logic::parse_term(expr_text, d, it->second);
            sigma.vals.insert_or_assign(var, logic::eval_term(t, Assignment(d)));
        }
        bool v = logic::eval_formula(f, sigma);
        out << (v ? "true" : "false") << "\n";
        return v ? 0 : 1;
    }
    if (cmd == "modelcomp-check") {
        const std::string& ns = opt.arg1;
        if (ns.empty() || ns.find_first_not_of("0123456789") != std::string::npos)
            throw Error("bad n '" + ns + "' (expected a natural number)");
        unsigned long n = std::stoul(ns);
        bool v = modelcomp_identity_check(n, eval_field_arg(opt.arg2, d));
        out << (v ? "true" : "false") << "\n";
        return v ? 0 : 1;
    }
    throw Error("unknown command " + cmd);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact arithmetic with a total residue map on Laurent/Puiseux series fields"};
    app.require_subcommand(1);
    app.fallthrough();

    Options opt;
    app.add_option("--field", opt.field, "coefficient field: Q, Fp:<p> or Qi");
    app.add_option("--seed", opt.seed, "seed for sampling commands");
    app.add_option("--output", opt.output, "write the report to a file instead of stdout");

    struct Spec {
        const char* name;
        const char* help;
        int args;  // positional count
        const char* a1;
        const char* a2;
    };
    const Spec specs[] = {
        {"res", "total residue of a series expression", 1, "EXPR", ""},
        {"res0", "complex-style residue Res0 (coefficient of t^-1)", 1, "EXPR", ""},
        {"val", "valuation", 1, "EXPR", ""},
        {"coeff", "coefficient of t^Q", 2, "EXPR", "Q"},
        {"pa", "polynomial part p_a collecting c_{-n} X^n", 1, "EXPR", ""},
        {"expand", "all nonzero coefficients up to exponent Q", 2, "EXPR", "Q"},
        {"sab", "the set S_{a,b} with its polynomial p_ab", 2, "A_EXPR", "B_EXPR"},
        {"encode-set", "encode a finite subset of k as (a, b)", 1, "S_LIST", ""},
        {"defk", "membership in iota(k), with witness when outside", 1, "EXPR", ""},
        {"gauss-val", "Gauss valuation on K(X)", 1, "EXPR", ""},
        {"gauss-res", "Gauss residue in k(x)", 1, "EXPR", ""},
        {"inf-val", "valuation with X infinitesimal beyond the value group", 1, "EXPR", ""},
        {"roots", "roots in k of a polynomial in X", 1, "POLY", ""},
        {"encode-h10", "compile a polynomial system over k[T] to a sentence", 1, "FILE", ""},
        {"check-witness", "check witnesses for a polynomial system", 2, "FILE", "WITNESS_FILE"},
        {"witness-from-sol", "witnesses from a k[T] solution (T -> t^-1)", 1, "FILE", ""},
        {"eval", "evaluate a sentence file", 1, "FORMULA_FILE", ""},
        {"modelcomp-check", "res(t^-n/(1 - t iota(beta))) = beta^n", 2, "N", "BETA"},
    };
    for (const Spec& s : specs) {
        CLI::App* sub = app.add_subcommand(s.name, s.help);
        sub->add_option(s.a1, opt.arg1, "")->required();
        if (s.args > 1) sub->add_option(s.a2, opt.arg2, "")->required();
        if (std::string(s.name) == "eval")
            sub->add_option("--bind", opt.binds, "bind a free variable: var=EXPR");
    }
    app.add_subcommand("sample", "a deterministic sample from k (uses --seed)");

    std::vector<std::string> argv = args;
    try {
        std::reverse(argv.begin(), argv.end());
        app.parse(argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    const std::string cmd = app.get_subcommands().front()->get_name();
    try {
        if (opt.field.empty()) throw Error("--field is required (Q, Fp:<p> or Qi)");
        if (!opt.output.empty()) {
            std::ofstream f(opt.output, std::ios::binary);
            if (!f) throw Error("cannot open output file: " + opt.output);
            return dispatch(cmd, opt, f);
        }
        return dispatch(cmd, opt, out);
    } catch (const UnsupportedQuantifier& e) {
        err << "unsupported: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace resfield::cli
