#include "bmetric/sampling.hpp"
#include "bmetric/scalar.hpp"
#include "bmetric/verification.hpp"

#include <doctest.h>

using namespace bmetric;

namespace {
Scalar S(const char* s) { return parse_scalar(s); }
}  // namespace

TEST_CASE("add") {
  CHECK((S("m1") + S("-m1")).is_zero());
  CHECK(S("l1^2 + m2") + S("m2") == S("l1^2 + 2*m2"));
  CHECK(S("3/2") + S("1/2") == Scalar(2));
}

TEST_CASE("mul") {
  CHECK(S("m1 + m2") * S("m1 - m2") == S("m1^2 - m2^2"));
  CHECK((Scalar() * S("l3^4")).is_zero());
  CHECK(S("l1*l2") * S("l2") == S("l1*l2^2"));
}

TEST_CASE("neg and sub") {
  CHECK(neg(Scalar()).is_zero());
  CHECK(sub(S("l1"), S("l1")).is_zero());
  CHECK(neg(S("2*m1*m2 - 1")) == S("-2*m1*m2 + 1"));
}

TEST_CASE("evaluate") {
  CHECK(S("l1^2 + l2^2 - l3^2 - l4^2").evaluate({1, 2, 3, 4, 0, 0}) == -20);
  CHECK(S("m1^2 - m2^2").evaluate({0, 0, 0, 0, 5, 5}) == 0);
  CHECK(S("16*(m1^2 - m2^2)").evaluate({0, 0, 0, 0, 1, 0}) == 16);
}

TEST_CASE("is_zero") {
  CHECK(is_zero(mul(S("l1"), S("l2")) - mul(S("l2"), S("l1"))));
  CHECK_FALSE(is_zero(S("m1")));
  CHECK(is_zero(S("(m1 + m2)^2 - m1^2 - 2*m1*m2 - m2^2")));
}

TEST_CASE("canonical form is unique") {
  const Scalar a = S("l1^2*m2 - 3/4*l2 + 7");
  CHECK((a + neg(a)).terms().empty());
  CHECK(S("m2 + l1") == S("l1 + m2"));
  CHECK(S("2/4*l1").terms().front().second == Rational(1, 2));
}

TEST_CASE("graded lexicographic order and rendering") {
  CHECK(S("l1^2 + l2^2 - l3^2 - l4^2 + 3*m1^2").to_string() ==
        "l1^2 + l2^2 - l3^2 - l4^2 + 3*m1^2");
  CHECK(S("l1 + m2^2").to_string() == "m2^2 + l1");
  CHECK(S("m2 + m1 + l4 + l3 + l2 + l1").to_string() == "l1 + l2 + l3 + l4 + m1 + m2");
  CHECK(S("l1/2").to_string() == "1/2*l1");
  CHECK(Scalar().to_string() == "0");
  CHECK(S("-1").to_string() == "-1");
}

TEST_CASE("parse errors carry position and token") {
  try {
    parse_scalar("1 + x");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 4);
    CHECK(e.token() == "x");
  }
  CHECK_THROWS_AS(parse_scalar("l1 / m1"), ParseError);
  CHECK_THROWS_AS(parse_scalar("(l1"), ParseError);
  CHECK_THROWS_AS(parse_scalar(""), ParseError);
  CHECK_THROWS_AS(parse_scalar("l7"), ParseError);
}

TEST_CASE("constant_value") {
  CHECK(S("-3/7").constant_value() == Rational(-3, 7));
  CHECK(Scalar().constant_value() == 0);
  CHECK_THROWS_AS(S("l1").constant_value(), std::domain_error);
}

TEST_CASE("aliasing in compound assignment") {
  Scalar a = S("l1 - 2*m2");
  a += a;
  CHECK(a == S("2*l1 - 4*m2"));
  a -= a;
  CHECK(a.is_zero());
  Scalar b = S("l1 + 1");
  b *= b;
  CHECK(b == S("l1^2 + 2*l1 + 1"));
}

TEST_CASE("substitute specializes") {
  const auto gens = generators();
  std::array<Scalar, kParameterCount> values = gens;
  values[4] = S("l1 + 1");
  CHECK(S("m1^2 - l1").substitute(values) == S("l1^2 + l1 + 1"));
}

TEST_CASE("property: ring axioms on 1000 random triples") {
  const auto r = ring_axioms_property(12345, 1000);
  INFO(r.witness);
  CHECK(r.pass);
  CHECK(r.cases == 1000);
}

TEST_CASE("property: evaluation is a ring homomorphism on 500 cases") {
  const auto r = evaluation_homomorphism_property(777, 500);
  INFO(r.witness);
  CHECK(r.pass);
}

TEST_CASE("property: substitution is a ring homomorphism") {
  Rng rng(99);
  for (int i = 0; i < 200; ++i) {
    const Scalar a = random_scalar(rng, 3, 2), b = random_scalar(rng, 3, 2);
    std::array<Scalar, kParameterCount> values;
    for (auto& v : values) v = random_scalar(rng, 2, 1);
    CHECK((a * b + b).substitute(values) == a.substitute(values) * b.substitute(values) + b.substitute(values));
  }
}

TEST_CASE("property: parse(to_string(a)) == a") {
  Rng rng(5);
  for (int i = 0; i < 300; ++i) {
    const Scalar a = random_scalar(rng);
    CHECK(parse_scalar(a.to_string()) == a);
  }
}
