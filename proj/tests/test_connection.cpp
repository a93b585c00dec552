#include "bmetric/connection.hpp"
#include "bmetric/reference_tables.hpp"

#include <doctest.h>

using namespace bmetric;

namespace {

Scalar S(const char* s) { return parse_scalar(s); }

Vector column(const Tensor& gamma, std::size_t i, std::size_t j) {
  Vector v(gamma.dim());
  for (std::size_t k = 0; k < v.size(); ++k) v[k] = gamma(k, i, j);
  return v;
}

const ModelInstance& family() {
  static const ModelInstance m = symbolic_family();
  return m;
}

}  // namespace

TEST_CASE("Levi-Civita coefficients") {
  const auto nabla = levi_civita(family());
  CHECK(column(nabla.gamma(), 0, 1) == Vector{S("-l1"), 0, S("l3"), 0, S("m1")});
  CHECK(column(nabla.gamma(), 0, 4) == Vector{0, S("-m1"), 0, S("m2"), 0});
  CHECK(nabla.coefficient(0, 1, 4) == S("m1"));
}

TEST_CASE("Levi-Civita is torsion free and metric") {
  const auto& m = family();
  const auto nabla = levi_civita(m);
  CHECK(nabla.torsion_vector().is_zero());
  CHECK(covariant_derivative(nabla, m.structure.g).is_zero());
}

TEST_CASE("Levi-Civita matches the full table") {
  const auto nabla = levi_civita(family());
  const auto mismatch = compare(reference::levi_civita(), nabla.gamma());
  INFO((mismatch ? mismatch->describe() : std::string()));
  CHECK_FALSE(mismatch.has_value());
}

TEST_CASE("a flipped Koszul sign is caught by the table") {
  const auto wrong = detail::koszul_connection(family(), {1, 1, 1});
  CHECK(compare(reference::levi_civita(), wrong.gamma()).has_value());
}

TEST_CASE("nabla phi, F and N") {
  const auto& m = family();
  const auto nabla = levi_civita(m);
  const Tensor dphi = covariant_derivative(nabla, m.structure.phi);
  // (nabla_{e1} phi) e2 = m2 e5
  for (std::size_t a = 0; a < 4; ++a) CHECK(dphi(a, 0, 1).is_zero());
  CHECK(dphi(4, 0, 1) == S("m2"));
  const Tensor F = fundamental_F(m, nabla);
  CHECK(F(0, 1, 4) == S("m2"));
  const auto N = nijenhuis(m, nabla);
  CHECK(N.N(0, 1, 4) == S("-4*m1"));
  CHECK(N.N_hat.is_zero());
  CHECK_FALSE(compare(reference::nijenhuis(), N.N).has_value());
}

TEST_CASE("covariant derivative valences") {
  const auto& m = family();
  const auto nabla = levi_civita(m);
  CHECK(covariant_derivative(nabla, vector_tensor(m.structure.xi)).valence() == Valence{1, 1});
  CHECK(covariant_derivative(nabla, covector_tensor(m.structure.eta)).valence() == Valence{0, 2});
  CHECK(covariant_derivative(nabla, m.structure.phi).valence() == Valence{1, 2});
  CHECK_THROWS_AS(covariant_derivative(nabla, Tensor(5, {2, 1})), UnsupportedValenceError);
}

TEST_CASE("classes of the family") {
  const auto& m = family();
  const auto c = class_membership(m, levi_civita(m));
  CHECK_FALSE(c.is_F0);
  CHECK(c.is_F7);
  CHECK(c.is_F3_plus_F7);
  const auto zero = new_family(0, 0, 0, 0, 0, 0);
  CHECK(class_membership(zero, levi_civita(zero)).is_F0);
}

TEST_CASE("phiB and phiKT coefficients") {
  const auto& m = family();
  const auto set = build_connections(m);
  REQUIRE(set.phiKT.has_value());
  REQUIRE(set.phi_canonical.has_value());
  // D_{e5} e1
  CHECK(column(set.phiB.gamma(), 4, 0) == Vector{0, S("-m1"), 0, S("m2"), 0});
  CHECK(column(set.phiKT->gamma(), 4, 0) == Vector{0, S("-2*m1"), 0, S("2*m2"), 0});
  CHECK_FALSE(compare(reference::phiB(), set.phiB.gamma()).has_value());
  CHECK_FALSE(compare(reference::phiKT(), set.phiKT->gamma()).has_value());
  CHECK_FALSE(compare(reference::phi_canonical(), set.phi_canonical->gamma()).has_value());
}

TEST_CASE("torsions") {
  const auto& m = family();
  const auto set = build_connections(m);
  const Tensor Tkt = torsion(m, *set.phiKT);
  const Tensor Tb = torsion(m, set.phiB);
  CHECK(Tkt(0, 1, 4) == S("-2*m1"));
  CHECK(Tb(1, 4, 0) == S("-m1"));
  CHECK_FALSE(totally_skew_violation(Tkt).has_value());
  CHECK(totally_skew_violation(Tb).has_value());
  const Tensor Tc = torsion(m, *set.phi_canonical);
  CHECK_FALSE(canonical_torsion_identity_violation(m, Tc).has_value());
}

TEST_CASE("natural connections") {
  const auto& m = family();
  const auto set = build_connections(m);
  for (const auto* D : {&set.phiB, &*set.phiKT, &*set.phi_canonical}) {
    const auto r = naturality_check(m, *D);
    for (const auto& item : r.items) {
      INFO(item.name);
      CHECK(item.holds);
    }
  }
  const auto lc = naturality_check(m, set.nabla);
  CHECK_FALSE(lc.natural());
  CHECK(lc.find("D g")->holds);
  CHECK_FALSE(lc.find("D phi")->holds);
}

TEST_CASE("Levi-Civita needs a nondegenerate metric") {
  const auto& m = family();
  Tensor g = m.structure.g;
  g(4, 4) = Scalar();
  const auto bad = assemble_model(m.frame, m.structure.phi, m.structure.xi, m.structure.eta, g);
  CHECK_THROWS(levi_civita(bad));
}
