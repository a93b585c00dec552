#include "bmetric/curvature.hpp"
#include "bmetric/reference_tables.hpp"

#include <doctest.h>

using namespace bmetric;

namespace {

Scalar S(const char* s) { return parse_scalar(s); }

const ModelAnalysis& analysis() {
  static const ModelAnalysis a = analyze(symbolic_family());
  return a;
}

Vector e(std::size_t i) { return basis_vector(5, i - 1); }

}  // namespace

TEST_CASE("analysis builds all four connections") {
  const auto& a = analysis();
  CHECK(a.connections.size() == 4);
  CHECK(a.find(kNabla) != nullptr);
  CHECK(a.find(kPhiB) != nullptr);
  CHECK(a.find(kPhiKT) != nullptr);
  CHECK(a.find(kPhiCanonical) != nullptr);
  CHECK(a.find("bogus") == nullptr);
  CHECK_THROWS(a.require("bogus"));
}

TEST_CASE("Levi-Civita curvature") {
  const auto& R = analysis().require(kNabla).curvature.R;
  CHECK(R(0, 1, 0, 1) == S("l1^2 + l2^2 - l3^2 - l4^2 + 3*m1^2"));
  CHECK(R(1, 0, 0, 1) == -R(0, 1, 0, 1));
  CHECK_FALSE(compare(reference::curvature_nabla(), R).has_value());
  CHECK(curvature_like_check(analysis().require(kNabla).curvature));
}

TEST_CASE("phiB curvature") {
  const auto& R = analysis().require(kPhiB).curvature.R;
  CHECK(R(0, 1, 0, 1) == S("l1^2 + l2^2 - l3^2 - l4^2 + 2*m1^2"));
}

TEST_CASE("traces") {
  const auto& a = analysis();
  const auto& nabla = a.require(kNabla).summary;
  CHECK(nabla.rho(4, 4) == S("4*m1^2 - 4*m2^2"));
  CHECK(nabla.tau == reference::tau_nabla());
  CHECK(a.require(kPhiKT).summary.tau == S("-8*l1^2 - 8*l2^2 + 8*l3^2 + 8*l4^2 - 16*m1^2 + 16*m2^2"));
  CHECK_FALSE(compare(reference::ricci_nabla(), nabla.rho).has_value());
  CHECK_FALSE(compare(reference::ricci_phiKT(), a.require(kPhiKT).summary.rho).has_value());
  CHECK_FALSE(compare(reference::ricci_phiB(), a.require(kPhiB).summary.rho).has_value());
}

TEST_CASE("Ricci tensors are symmetric") {
  for (const auto& c : analysis().connections) {
    INFO(c.name);
    for (std::size_t i = 0; i < 5; ++i)
      for (std::size_t j = 0; j < 5; ++j) CHECK(c.summary.rho(i, j) == c.summary.rho(j, i));
  }
}

TEST_CASE("sectional curvatures") {
  const auto& a = analysis();
  const auto& m = a.model;
  CHECK(sectional_curvature(m, a.require(kNabla).curvature, e(1), e(2)) ==
        S("-l1^2 - l2^2 + l3^2 + l4^2 - 3*m1^2"));
  CHECK(sectional_curvature(m, a.require(kPhiKT).curvature, e(5), e(1)).is_zero());
  CHECK_THROWS_AS(sectional_curvature(m, a.require(kNabla).curvature, e(1), e(1)),
                  DegeneratePlaneError);
  Vector x = e(1);
  x[0] = S("l1");
  CHECK_THROWS_AS(sectional_curvature(m, a.require(kNabla).curvature, x, e(2)), std::domain_error);
}

TEST_CASE("plane classes") {
  const auto& m = analysis().model;
  CHECK(classify_plane(m, e(1), e(2)) == PlaneClass::totally_real);
  CHECK(classify_plane(m, e(1), e(3)) == PlaneClass::phi_holomorphic);
  CHECK(classify_plane(m, e(2), e(4)) == PlaneClass::phi_holomorphic);
  CHECK(classify_plane(m, e(5), e(1)) == PlaneClass::xi_section);
  Vector x = e(1);
  x[1] = Scalar(1L);
  CHECK(classify_plane(m, x, e(3)) == PlaneClass::generic);
  CHECK_THROWS_AS(classify_plane(m, e(2), e(2)), DegeneratePlaneError);
  CHECK(to_string(PlaneClass::xi_section) == "xi_section");
}

TEST_CASE("square norms") {
  const auto& a = analysis();
  CHECK(a.norm_nabla_phi == S("-8*m1^2 + 8*m2^2"));
  CHECK(square_norm(a.model, a.nijenhuis.N) == reference::norm_nijenhuis());
  CHECK(square_norm(a.model, a.require(kNabla).torsion).is_zero());
  CHECK_THROWS(square_norm(a.model, a.model.structure.g));
}

TEST_CASE("Einstein check") {
  const auto m = new_family(1, 0, 0, 0, 1, 0);
  const auto a = analyze(m);
  const auto r = einstein_check(m, a.require(kNabla).summary);
  CHECK_FALSE(r.is_einstein);
  CHECK_FALSE(r.residual.empty());
  const auto flat = new_family(0, 0, 0, 0, 0, 0);
  CHECK(einstein_check(flat, analyze(flat).require(kNabla).summary).is_einstein);
}

TEST_CASE("isotropic-F0 equivalences") {
  for (const auto& [m1, m2, expected] :
       std::vector<std::tuple<int, int, bool>>{{3, 3, true}, {1, 0, false}, {2, -2, true}}) {
    const auto m = new_family(1, 2, 0, 1, m1, m2);
    const auto r = isotropic_F0_equivalences(m);
    CHECK(r.conditions.size() == 7);
    for (const auto& c : r.conditions) {
      INFO(c.name, " at m = (", m1, ", ", m2, ")");
      CHECK(c.holds == expected);
    }
    const auto kt = isotropic_F0_kt_equivalences(m);
    CHECK(kt.conditions.size() == 4);
    CHECK(kt.all_agree());
  }
}

TEST_CASE("equivalences need a family instance") {
  auto m = symbolic_family();
  m.family.reset();
  CHECK_THROWS(isotropic_F0_equivalences(m));
}

TEST_CASE("curvature-like violation names the identity") {
  CurvatureTensor R{Tensor(5, {0, 4})};
  R.R(0, 1, 2, 3) = Scalar(1L);
  const auto v = curvature_like_violation(R);
  REQUIRE(v.has_value());
  CHECK_FALSE(v->identity.empty());
  CHECK_FALSE(curvature_like_check(R));
}
