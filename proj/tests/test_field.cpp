#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "resfield/field.hpp"
#include "resfield/sampler.hpp"

using namespace resfield;

namespace {
const FieldDescriptor Q = FieldDescriptor::rationals();
const FieldDescriptor Qi = FieldDescriptor::gaussian_rationals();

FieldElem q(long num, long den = 1) {
    mpq_class v(num, den);
    v.canonicalize();
    return FieldElem::from_rational(Q, v);
}
}  // namespace

TEST_CASE("descriptor construction and validation") {
    CHECK(FieldDescriptor::prime_field(2).modulus() == 2);
    CHECK(FieldDescriptor::prime_field(2147483647).modulus() == 2147483647u);  // 2^31-1
    CHECK_THROWS_AS(FieldDescriptor::prime_field(4), Error);
    CHECK_THROWS_AS(FieldDescriptor::prime_field(1), Error);
    CHECK_THROWS_AS(FieldDescriptor::prime_field(2147483649u), Error);
    CHECK(Q.to_string() == "Q");
    CHECK(Qi.to_string() == "Qi");
    CHECK(FieldDescriptor::prime_field(7).to_string() == "Fp:7");
}

TEST_CASE("rational arithmetic is exact") {
    CHECK(q(1, 2) + q(1, 3) == q(5, 6));
    CHECK(q(1, 2) * q(2, 3) == q(1, 3));
    CHECK(q(3).inv() == q(1, 3));
    CHECK((q(5) - q(5)).is_zero());
    CHECK(q(-7, 2).to_string() == "-7/2");
    CHECK_THROWS_AS(q(0).inv(), DivisionByZero);
}

TEST_CASE("prime field arithmetic") {
    auto F7 = FieldDescriptor::prime_field(7);
    auto f = [&](long n) { return FieldElem::from_integer(F7, n); };
    CHECK(f(3).inv() == f(5));  // 3*5 = 15 = 1 mod 7
    CHECK(f(4) + f(5) == f(2));
    CHECK(f(-1) == f(6));
    CHECK(f(3).pow(6) == f(1));
    CHECK_THROWS_AS(f(0).inv(), DivisionByZero);
    // fractions land via the canonical map
    CHECK(FieldElem::from_rational(F7, mpq_class(1, 3)) == f(5));
    CHECK_THROWS_AS(FieldElem::from_rational(F7, mpq_class(1, 7)), DivisionByZero);
}

TEST_CASE("gaussian rationals") {
    auto g = [&](long re, long im) { return FieldElem::gaussian(Qi, re, im); };
    CHECK(g(1, 1) * g(1, -1) == g(2, 0));  // norm identity
    CHECK(g(0, 1) * g(0, 1) == g(-1, 0));
    CHECK(g(1, 2).inv() * g(1, 2) == g(1, 0));
    CHECK_THROWS_AS(FieldElem::gaussian(Q, 1, 2), Error);
    CHECK(g(1, 2).to_string() == "1+2i");
    CHECK(g(1, -2).to_string() == "1-2i");
    CHECK(g(0, -1).to_string() == "-i");
    CHECK(FieldElem::gaussian(Qi, mpq_class(1, 2), mpq_class(3, 4)).to_string() ==
          "1/2+(3/4)*i");
}

TEST_CASE("mixed descriptors are rejected") {
    CHECK_THROWS_AS(q(1) + FieldElem::one(Qi), DescriptorMismatch);
}

TEST_CASE("enumeration") {
    auto F3 = FieldDescriptor::prime_field(3);
    FieldEnumeration en(F3);
    std::vector<FieldElem> all;
    while (!en.done()) all.push_back(en.next());
    REQUIRE(all.size() == 3);
    CHECK(all[0].is_zero());
    CHECK(all[1].is_one());
    CHECK(all[2] == FieldElem::from_integer(F3, 2));
    CHECK_THROWS_AS(FieldEnumeration{Q}, InfiniteEnumeration);
    CHECK_THROWS_AS(FieldEnumeration{Qi}, InfiniteEnumeration);
}

TEST_CASE("sampling is deterministic") {
    for (std::uint64_t seed : {0ull, 1ull, 42ull, 777ull}) {
        CHECK(field_sample(Q, seed) == field_sample(Q, seed));
        CHECK(field_sample(Qi, seed) == field_sample(Qi, seed));
    }
}

TEST_CASE("field axioms hold on sampled triples") {
    std::vector<FieldDescriptor> descs{Q, Qi, FieldDescriptor::prime_field(101)};
    for (const auto& d : descs) {
        Sampler s(2024);
        for (int i = 0; i < 200; ++i) {
            FieldElem a = s.field(d), b = s.field(d), c = s.field(d);
            CHECK(a + b == b + a);
            CHECK((a + b) + c == a + (b + c));
            CHECK(a * b == b * a);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a + FieldElem::zero(d) == a);
            CHECK(a * FieldElem::one(d) == a);
            CHECK((a + (-a)).is_zero());
            FieldElem x = s.field_nonzero(d);
            CHECK(x * x.inv() == FieldElem::one(d));
            CHECK((a / x) * x == a);
        }
    }
}

TEST_CASE("canonical form uniqueness: association order is invisible") {
    for (const auto& d : {Q, Qi}) {
        Sampler s(7);
        for (int i = 0; i < 100; ++i) {
            FieldElem a = s.field(d), b = s.field(d), c = s.field(d);
            CHECK((a + b) + c == (c + b) + a);
            CHECK(a * b * c == c * (b * a));
        }
    }
}
