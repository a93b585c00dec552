#include "bmetric/algebra_model.hpp"

#include <doctest.h>

#include <json.hpp>

#include <string>

using namespace bmetric;

namespace {

Scalar S(const char* s) { return parse_scalar(s); }

std::string data(const char* name) { return std::string(BMETRIC_TEST_DATA) + "/" + name; }

}  // namespace

TEST_CASE("symbolic family brackets") {
  const auto m = symbolic_family();
  const auto e = [](std::size_t i) { return basis_vector(5, i - 1); };
  const Vector b12 = m.frame.bracket(e(1), e(2));
  CHECK(b12 == Vector{S("-l1"), S("-l2"), S("l3"), S("l4"), S("2*m1")});
  const Vector b34 = m.frame.bracket(e(3), e(4));
  for (std::size_t k = 0; k < 5; ++k) CHECK(b34[k] == -b12[k]);
  const Vector b14 = m.frame.bracket(e(1), e(4));
  CHECK(b14 == Vector{S("-l3"), S("-l4"), S("-l1"), S("-l2"), S("2*m2")});
  const Vector b23 = m.frame.bracket(e(2), e(3));
  for (std::size_t k = 0; k < 5; ++k) CHECK(b23[k] == -b14[k]);
  for (std::size_t k = 0; k < 5; ++k) {
    CHECK(m.frame.bracket(e(1), e(3))[k].is_zero());
    CHECK(m.frame.bracket(e(5), e(2))[k].is_zero());
  }
}

TEST_CASE("symbolic family structure") {
  const auto m = symbolic_family();
  const auto& s = m.structure;
  CHECK(s.apply_phi(basis_vector(5, 0)) == basis_vector(5, 2));
  CHECK(s.apply_phi(basis_vector(5, 1)) == basis_vector(5, 3));
  CHECK(s.apply_phi(basis_vector(5, 2)) == Vector{-1, 0, 0, 0, 0});
  CHECK(s.apply_phi(basis_vector(5, 4)) == Vector(5));
  CHECK(s.xi == basis_vector(5, 4));
  CHECK(s.eta == basis_vector(5, 4));
  const int diag[] = {1, 1, -1, -1, 1};
  for (std::size_t i = 0; i < 5; ++i) CHECK(s.g(i, i) == Scalar(diag[i]));
  CHECK(s.g(0, 2).is_zero());
  REQUIRE(m.family.has_value());
}

TEST_CASE("every axiom holds on the symbolic family") {
  const auto r = validate(symbolic_family());
  for (const auto& c : r.checks) {
    INFO(c.axiom);
    CHECK(c.passed);
  }
  CHECK(r.checks.size() == 10);
}

TEST_CASE("associated metric") {
  const auto m = symbolic_family();
  const Tensor gt = associated_metric(m);
  // g~(x, y) = g(x, phi y) + eta(x) eta(y)
  CHECK(gt(0, 2) == Scalar(-1L));
  CHECK(gt(2, 0) == Scalar(-1L));
  CHECK(gt(1, 3) == Scalar(-1L));
  CHECK(gt(4, 4) == Scalar(1L));
  CHECK(gt(0, 0).is_zero());
  CHECK(gt == m.structure.g_tilde);
}

TEST_CASE("specialized family") {
  const auto m = new_family(1, 0, 0, 0, Rational(1, 2), 0);
  CHECK(validate(m).all_passed());
  CHECK(m.frame.bracket(basis_vector(5, 0), basis_vector(5, 1)) == Vector{-1, 0, 0, 0, 1});
}

TEST_CASE("breaking compatibility on g55 is reported") {
  auto m = symbolic_family();
  m.structure.g(4, 4) = Scalar(-1L);
  const auto r = validate(m);
  const auto* c = r.find("b_metric_compatibility");
  REQUIRE(c != nullptr);
  CHECK_FALSE(c->passed);
  REQUIRE_FALSE(c->failures.empty());
  CHECK(c->failures.front() == MultiIndex{4, 4});
  CHECK(r.find("jacobi")->passed);
}

TEST_CASE("Jacobi failure is reported with indices") {
  auto m = symbolic_family();
  // [e1,e5] = e1 breaks the Jacobi identity on (1,2,5).
  m.frame.structure_constants(0, 0, 4) = Scalar(1L);
  m.frame.structure_constants(0, 4, 0) = Scalar(-1L);
  const auto r = validate(m);
  CHECK_FALSE(r.find("jacobi")->passed);
  CHECK(r.find("antisymmetry")->passed);
}

TEST_CASE("load the family document") {
  const auto m = load_model_file(data("family.json"));
  CHECK(m == symbolic_family());
  CHECK(m.family.has_value());
}

TEST_CASE("model_to_json round trip") {
  const auto m = symbolic_family();
  const auto doc = model_to_json(m);
  CHECK(load_model(doc) == m);
  const auto specialized = new_family(1, 2, 3, 4, 5, 6);
  CHECK(load_model(model_to_json(specialized)) == specialized);
}

TEST_CASE("even dimension is rejected") {
  CHECK_THROWS_WITH_AS(load_model_file(data("dim4.json")), "dimension must be odd", SchemaError);
}

TEST_CASE("non-antisymmetric brackets are rejected with indices") {
  try {
    load_model_file(data("not_antisymmetric.json"));
    FAIL("expected AxiomError");
  } catch (const AxiomError& e) {
    const auto* c = e.report().find("antisymmetry");
    REQUIRE(c != nullptr);
    CHECK_FALSE(c->passed);
    REQUIRE_FALSE(c->failures.empty());
    const auto& idx = c->failures.front();
    CHECK(idx[0] == 0);
    CHECK(idx[1] == 1);
  }
}

TEST_CASE("schema errors") {
  nlohmann::json doc = model_to_json(symbolic_family());
  SUBCASE("missing field") {
    doc.erase("g");
    CHECK_THROWS_AS(load_model(doc), SchemaError);
  }
  SUBCASE("duplicate bracket") {
    doc["brackets"].push_back(doc["brackets"][0]);
    CHECK_THROWS_WITH_AS(load_model(doc), doctest::Contains("listed twice"), SchemaError);
  }
  SUBCASE("bad coefficient") {
    doc["brackets"][0]["coeffs"][0] = "l1 +";
    CHECK_THROWS(load_model(doc));
  }
  SUBCASE("index out of range") {
    doc["brackets"][0]["i"] = 6;
    CHECK_THROWS_AS(load_model(doc), SchemaError);
  }
}

TEST_CASE("degenerate metric") {
  Tensor g(3, {0, 2});
  g(0, 0) = Scalar(1L);
  g(1, 1) = Scalar(1L);
  CHECK_FALSE(invert_constant_metric(g).has_value());
  g(2, 2) = Scalar(-2L);
  const auto inv = invert_constant_metric(g);
  REQUIRE(inv.has_value());
  CHECK((*inv)(2, 2) == Scalar(Rational(-1, 2)));
}
