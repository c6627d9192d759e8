#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "resfield/cli.hpp"

using resfield::cli::run;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    REQUIRE(f.good());
    f << content;
}

}  // namespace

TEST_CASE("golden: res") {
    Result r = cli({"res", "t^-2/(1-3*t)", "--field", "Q"});
    CHECK(r.code == 0);
    CHECK(r.out == "9\n");
    CHECK(r.err.empty());
}

TEST_CASE("golden: encode-set") {
    Result r = cli({"encode-set", "1,2", "--field", "Q"});
    CHECK(r.code == 0);
    CHECK(r.out == "a = t^-2 - 3*t^-1 + 2\nb = t\n");

    Result empty = cli({"encode-set", "", "--field", "Q"});
    CHECK(empty.code == 0);
    CHECK(empty.out == "a = 1\nb = t\n");
}

TEST_CASE("golden: eval rejects a K-sort quantifier with exit 3") {
    write_file("tmp_sentence.lres", "# an unsupported sentence\nexists x:K . v(x) < 0\n");
    Result r = cli({"eval", "tmp_sentence.lres", "--field", "Q"});
    CHECK(r.code == 3);
    CHECK(r.out.empty());
    CHECK(r.err.find("unsupported") != std::string::npos);
}

TEST_CASE("golden: field arithmetic through res") {
    CHECK(cli({"res", "1/2 + 1/3", "--field", "Q"}).out == "5/6\n");
    CHECK(cli({"res", "1/3", "--field", "Fp:7"}).out == "5\n");
    CHECK(cli({"res", "(1+i)*(1-i)", "--field", "Qi"}).out == "2\n");
}

TEST_CASE("golden: res0 / val / coeff / pa / expand") {
    CHECK(cli({"res0", "t^-2/(1-3*t)", "--field", "Q"}).out == "3\n");
    CHECK(cli({"res0", "t^-1", "--field", "Q"}).out == "1\n");
    CHECK(cli({"res0", "1/(1-t)", "--field", "Q"}).out == "0\n");
    CHECK(cli({"val", "0", "--field", "Q"}).out == "infty\n");
    CHECK(cli({"val", "(t^-1 - 1)*(t^-1 - 2)", "--field", "Q"}).out == "-2\n");
    CHECK(cli({"val", "t^(1/2)/(1-t)", "--field", "Q"}).out == "1/2\n");
    CHECK(cli({"coeff", "1/(1-2*t)", "3", "--field", "Q"}).out == "8\n");
    CHECK(cli({"coeff", "(t^-1 - 1)*(t^-1 - 2)", "-1", "--field", "Q"}).out == "-3\n");
    CHECK(cli({"pa", "t^-2 + 5 + 7*t", "--field", "Q"}).out == "X^2 + 5\n");
    CHECK(cli({"pa", "(t^-1 - 1)*(t^-1 - 2)", "--field", "Q"}).out == "X^2 - 3*X + 2\n");
    CHECK(cli({"pa", "t^3", "--field", "Q"}).out == "0\n");
    // geometric tail: (t^-2 - 3t^-1 + 2)(1 + t + ...) has c_0 = 2 - 3 + 1 = 0
    CHECK(cli({"pa", "(t^-1 - 1)*(t^-1 - 2)/(1 - t)", "--field", "Q"}).out ==
          "X^2 - 2*X\n");
    CHECK(cli({"expand", "t^-2/(1-3*t)", "0", "--field", "Q"}).out ==
          "(-2, 1)\n(-1, 3)\n(0, 9)\n");
    CHECK(cli({"expand", "0", "5", "--field", "Q"}).out == "");
}

TEST_CASE("known closed-form coefficients") {
    // Fibonacci: 1/(1 - t - t^2) = sum F_{n+1} t^n
    CHECK(cli({"coeff", "1/(1-t-t^2)", "10", "--field", "Q"}).out == "89\n");
    CHECK(cli({"coeff", "1/(1-t-t^2)", "20", "--field", "Q"}).out == "10946\n");
    // binomial coefficients
    CHECK(cli({"coeff", "(1+t)^5", "3", "--field", "Q"}).out == "10\n");
    CHECK(cli({"coeff", "(1+t)^7", "0", "--field", "Q"}).out == "1\n");
    // 1/(1-t)^2 = sum (n+1) t^n
    CHECK(cli({"coeff", "1/((1-t)*(1-t))", "5", "--field", "Q"}).out == "6\n");
    // ramified geometric series
    CHECK(cli({"coeff", "1/(1-t^(1/2))", "7/2", "--field", "Q"}).out == "1\n");
    CHECK(cli({"coeff", "1/(1-t^(1/2))", "1/3", "--field", "Q"}).out == "0\n");
}

TEST_CASE("golden: sab and roots") {
    Result r = cli({"sab", "(t^-1 - 1)*(t^-1 - 2)", "t", "--field", "Q"});
    CHECK(r.code == 0);
    CHECK(r.out == "n = 3\np_ab = X^2 - 3*X + 2\nS = {1, 2}\n");

    Result allk = cli({"sab", "t", "t", "--field", "Q"});
    CHECK(allk.out == "n = 0\np_ab = 0\nS = k\n");

    CHECK(cli({"roots", "X^2 - 3*X + 2", "--field", "Q"}).out == "{1, 2}\n");
    CHECK(cli({"roots", "X^2 - 2", "--field", "Q"}).out == "{}\n");
    CHECK(cli({"roots", "0", "--field", "Fp:3"}).out == "k\n");
    CHECK(cli({"roots", "X^2 + 1", "--field", "Qi"}).out == "{-i, i}\n");
}

TEST_CASE("golden: defk") {
    Result in = cli({"defk", "7", "--field", "Q"});
    CHECK(in.code == 0);
    CHECK(in.out == "InK alpha = 7\n");

    Result out = cli({"defk", "5 + t", "--field", "Q"});
    CHECK(out.code == 1);
    CHECK(out.out ==
          "NotInK q = 1\nwitness y = t^-1\nres(x*y) = 1\nres(x)*res(y) = 0\n");

    Result tinv = cli({"defk", "t^-1", "--field", "Q"});
    CHECK(tinv.code == 1);
    CHECK(tinv.out ==
          "NotInK q = -1\nwitness y = t\nres(x*y) = 1\nres(x)*res(y) = 0\n");
}

TEST_CASE("golden: valuations on K(X)") {
    CHECK(cli({"gauss-val", "t^2*X + t^-1", "--field", "Q"}).out == "-1\n");
    CHECK(cli({"gauss-val", "(t*X + t)/(t^2)", "--field", "Q"}).out == "-1\n");
    CHECK(cli({"gauss-res", "1 - t*X", "--field", "Q"}).out == "1\n");
    CHECK(cli({"gauss-res", "X + 2 + t", "--field", "Q"}).out == "x + 2\n");
    CHECK(cli({"gauss-res", "(X^2 - t)/(1 + t*X)", "--field", "Q"}).out == "x^2\n");
    CHECK(cli({"inf-val", "X", "--field", "Q"}).out == "(1, 0)\n");
    CHECK(cli({"inf-val", "t*X + t^3", "--field", "Q"}).out == "(0, 3)\n");
    CHECK(cli({"inf-val", "2*X^-1 + 3*X^-2 + t^-5", "--field", "Q"}).out == "(-2, 0)\n");
}

TEST_CASE("golden: the h10 pipeline") {
    write_file("tmp_sys.txt", "# one unknown\nX1 - T^2\n");
    Result enc = cli({"encode-h10", "tmp_sys.txt", "--field", "Q"});
    CHECK(enc.code == 0);
    CHECK(enc.out == "exists a1:K . forall y:k . res(a1/(1 - t*iota(y))) - y*y = 0\n");

    write_file("tmp_wit.txt", "t^-2\n");
    Result ok = cli({"check-witness", "tmp_sys.txt", "tmp_wit.txt", "--field", "Q"});
    CHECK(ok.code == 0);
    CHECK(ok.out == "f1 -> 0\naccepted\n");

    write_file("tmp_wit_bad.txt", "t^-2 + 1\n");
    Result bad = cli({"check-witness", "tmp_sys.txt", "tmp_wit_bad.txt", "--field", "Q"});
    CHECK(bad.code == 1);
    CHECK(bad.out == "f1 -> 1\nrejected\n");

    write_file("tmp_sol.txt", "T^2 + 5\n");
    Result wit = cli({"witness-from-sol", "tmp_sol.txt", "--field", "Q"});
    CHECK(wit.code == 0);
    CHECK(wit.out == "t^-2 + 5\n");

    // degenerate m = 0
    write_file("tmp_sys0.txt", "T\n");
    CHECK(cli({"encode-h10", "tmp_sys0.txt", "--field", "Q"}).out ==
          "forall y:k . y = 0\n");
}

TEST_CASE("golden: eval with bindings") {
    write_file("tmp_f1.lres", "forall y:k . res(a/(1 - t*iota(y)))*0 = 0\n");
    Result t1 = cli({"eval", "tmp_f1.lres", "--field", "Q", "--bind", "a=t^-1"});
    CHECK(t1.code == 0);
    CHECK(t1.out == "true\n");

    write_file("tmp_f2.lres", "forall y:k . res(a/(1 - t*iota(y))) = 0\n");
    Result t2 = cli({"eval", "tmp_f2.lres", "--field", "Fp:5", "--bind",
                     "a=(t^-1 - 1)*(t^-1 - 2)"});
    CHECK(t2.code == 1);
    CHECK(t2.out == "false\n");

    Result t3 = cli({"eval", "tmp_f2.lres", "--field", "Q", "--bind",
                     "a=(t^-1 - 1)*(t^-1 - 2)"});
    CHECK(t3.code == 1);

    // closed sentence needing no bindings
    write_file("tmp_f3.lres", "res(t^-2/(1 - t*iota(3))) = 9\n");
    CHECK(cli({"eval", "tmp_f3.lres", "--field", "Q"}).out == "true\n");

    // value-group atoms with bindings of all three sorts
    write_file("tmp_f4.lres", "v(x) < g and res(x) = al\n");
    Result t4 = cli({"eval", "tmp_f4.lres", "--field", "Q", "--bind", "x=2 + t",
                     "--bind", "g=1/2", "--bind", "al=2"});
    CHECK(t4.code == 0);
    CHECK(t4.out == "true\n");

    // an unbound variable is an input error
    Result ub = cli({"eval", "tmp_f2.lres", "--field", "Q"});
    CHECK(ub.code == 2);
    // binding a variable that is not free is an input error
    Result extra = cli({"eval", "tmp_f3.lres", "--field", "Q", "--bind", "z=t"});
    CHECK(extra.code == 2);
}

TEST_CASE("golden: modelcomp-check") {
    CHECK(cli({"modelcomp-check", "2", "3", "--field", "Q"}).out == "true\n");
    CHECK(cli({"modelcomp-check", "2", "3", "--field", "Q"}).code == 0);
    CHECK(cli({"modelcomp-check", "0", "-5", "--field", "Q"}).out == "true\n");
    CHECK(cli({"modelcomp-check", "3", "2", "--field", "Fp:5"}).out == "true\n");
}

TEST_CASE("exit codes for errors") {
    CHECK(cli({"res", "t^-1", "--field", "Zp"}).code == 2);       // bad field
    CHECK(cli({"res", "t^-1"}).code == 2);                        // missing field
    CHECK(cli({"res", "1/(t-t)", "--field", "Q"}).code == 2);     // division by zero
    CHECK(cli({"res", "(((", "--field", "Q"}).code == 2);         // parse error
    CHECK(cli({"frobnicate", "x", "--field", "Q"}).code == 2);    // unknown command
    CHECK(cli({"sab", "t^-1", "1", "--field", "Q"}).code == 2);   // NotInfinitesimal
    CHECK(cli({"encode-h10", "no_such_file.txt", "--field", "Q"}).code == 2);
    CHECK(cli({"res", "1/5", "--field", "Fp:5"}).code == 2);      // inverse of 0 in F5
    CHECK(cli({}).code == 2);                                     // no command
    CHECK(cli({"coeff", "t", "1/0", "--field", "Q"}).code == 2);  // zero denominator
    CHECK(cli({"coeff", "t", "x", "--field", "Q"}).code == 2);
}

TEST_CASE("sample is deterministic in the seed") {
    Result a = cli({"sample", "--seed", "42", "--field", "Q"});
    Result b = cli({"sample", "--seed", "42", "--field", "Q"});
    CHECK(a.code == 0);
    CHECK(!a.out.empty());
    CHECK(a.out == b.out);
    Result c = cli({"sample", "--seed", "43", "--field", "Qi"});
    CHECK(c.code == 0);
    CHECK(cli({"sample", "--field", "Fp:101"}).out ==
          cli({"sample", "--field", "Fp:101"}).out);
}

TEST_CASE("byte determinism") {
    for (int i = 0; i < 3; ++i) {
        CHECK(cli({"sab", "(t^-1 - 1)*(t^-1 - 2)", "t", "--field", "Q"}).out ==
              "n = 3\np_ab = X^2 - 3*X + 2\nS = {1, 2}\n");
        CHECK(cli({"encode-set", "2,1,2", "--field", "Q"}).out ==
              "a = t^-2 - 3*t^-1 + 2\nb = t\n");
    }
}

TEST_CASE("--output writes the report to a file") {
    Result r = cli({"res", "t^-2/(1-3*t)", "--field", "Q", "--output", "tmp_out.txt"});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream f("tmp_out.txt", std::ios::binary);
    std::ostringstream data;
    data << f.rdbuf();
    CHECK(data.str() == "9\n");
}

TEST_CASE("help exits zero") {
    Result r = cli({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("res") != std::string::npos);
}

#ifdef RESFIELD_CLI_PATH
TEST_CASE("real binary: witness-from-sol feeds check-witness") {
    write_file("tmp_pipe_sys.txt", "X1 - T^2\n");
    write_file("tmp_pipe_sol.txt", "T^2\n");
    const std::string bin = RESFIELD_CLI_PATH;
    int rc1 = std::system(
        (bin + " witness-from-sol tmp_pipe_sol.txt --field Q --output tmp_pipe_wit.txt")
            .c_str());
    REQUIRE(rc1 == 0);
    int rc2 = std::system((bin + " check-witness tmp_pipe_sys.txt tmp_pipe_wit.txt"
                                 " --field Q --output tmp_pipe_res.txt")
                              .c_str());
    CHECK(rc2 == 0);
    std::ifstream f("tmp_pipe_res.txt", std::ios::binary);
    std::ostringstream data;
    data << f.rdbuf();
    CHECK(data.str() == "f1 -> 0\naccepted\n");
}
#endif
