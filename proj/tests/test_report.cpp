#include "bmetric/reference_tables.hpp"
#include "bmetric/report.hpp"
#include "bmetric/sampling.hpp"
#include "bmetric/verification.hpp"

#include <doctest.h>

using namespace bmetric;
using nlohmann::ordered_json;

namespace {

Scalar S(const char* s) { return parse_scalar(s); }

const Report& symbolic_report() {
  static const Report r = cmd_report(symbolic_family(), ordered_json{{"family", "symbolic"}}, {});
  return r;
}

Scalar scalar_at(const Report& r, const char* section, const char* key) {
  const auto* v = r.value(section, key);
  REQUIRE(v != nullptr);
  REQUIRE(std::holds_alternative<Scalar>(*v));
  return std::get<Scalar>(*v);
}

}  // namespace

TEST_CASE("format_vector") {
  CHECK(format_vector({S("-l1"), S("-l2"), 0, 0, S("2*m1")}) == "-l1*e1 - l2*e2 + 2*m1*e5");
  CHECK(format_vector(Vector(5)) == "0");
  CHECK(format_vector({S("l1 + m1"), 0, 0, 0, 1}) == "(l1 + m1)*e1 + e5");
}

TEST_CASE("family report") {
  const auto r = cmd_family(symbolic_family(), ordered_json{{"family", "symbolic"}});
  CHECK(r.find("brackets") != nullptr);
  CHECK(r.find("structure") != nullptr);
  CHECK(r.all_verdicts_pass() == false);  // class F0 fails symbolically
  bool saw_axiom = false;
  for (const auto& v : r.verdicts)
    if (v.name.rfind("axiom: ", 0) == 0) {
      saw_axiom = true;
      CHECK(v.pass);
      CHECK(v.provenance == kExactSymbolic);
    }
  CHECK(saw_axiom);
}

TEST_CASE("report sections") {
  const auto& r = symbolic_report();
  for (const auto& name : report_section_names()) CHECK(r.find(name) != nullptr);
  CHECK(scalar_at(r, "torsions", "phiKT: T_125") == S("-2*m1"));
  CHECK(scalar_at(r, "ricci", "nabla: rho_55") == S("4*m1^2 - 4*m2^2"));
  CHECK(scalar_at(r, "norms", "||nabla phi||") == reference::norm_nabla_phi());
  CHECK_THROWS_WITH_AS(cmd_report(symbolic_family(), {}, {"bogus"}), "unknown section: bogus",
                       std::invalid_argument);
  const auto only = cmd_report(symbolic_family(), {}, {"norms"});
  CHECK(only.sections.size() == 1);
}

TEST_CASE("JSON round trip") {
  const auto& r = symbolic_report();
  const auto j = to_json(r);
  CHECK(report_from_json(j) == r);
  CHECK(to_json(report_from_json(j)) == j);
  CHECK(report_round_trip_property().pass);
}

TEST_CASE("malformed report JSON") {
  CHECK_THROWS(report_from_json(ordered_json::array()));
  auto j = to_json(symbolic_report());
  j["sections"]["norms"]["||N||"] = "l1 +";
  CHECK_THROWS(report_from_json(j));
}

TEST_CASE("eval agrees with evaluating the symbolic report") {
  const ParameterPoint p = {1, 0, 0, 0, 1, 0};
  const auto r = cmd_eval(symbolic_family(), {}, p, {"ricci", "sectional"});
  CHECK(scalar_at(r, "ricci", "nabla: tau") == Scalar(-12L));
  const auto zero = cmd_eval(symbolic_family(), {}, ParameterPoint{}, {"ricci"});
  CHECK(scalar_at(zero, "ricci", "nabla: tau").is_zero());
}

TEST_CASE("property: evaluating the report commutes with evaluating entries") {
  Rng rng(2024);
  const auto& r = symbolic_report();
  for (int n = 0; n < 5; ++n) {
    const ParameterPoint p = random_point(rng);
    const Report ev = evaluate_report(r, p);
    for (std::size_t s = 0; s < r.sections.size(); ++s)
      for (std::size_t k = 0; k < r.sections[s].entries.size(); ++k) {
        const auto& a = r.sections[s].entries[k].value;
        const auto& b = ev.sections[s].entries[k].value;
        if (const auto* x = std::get_if<Scalar>(&a)) CHECK(std::get<Scalar>(b) == Scalar(x->evaluate(p)));
      }
  }
}

TEST_CASE("render_text contains verdict lines") {
  const auto r = cmd_family(new_family(0, 0, 0, 0, 0, 0), {});
  const auto text = render_text(r);
  CHECK(text.find("PASS  class: F0") != std::string::npos);
}

TEST_CASE("sampled provenance") {
  CHECK(sampled_provenance(100, 7) == "sampled at 100 points, seed 7");
}

TEST_CASE("sample strata") {
  const auto pts = sample_points(7, 24);
  CHECK(pts.size() == 24);
  for (const auto& sp : pts) CHECK(validate(new_family(sp.point[0], sp.point[1], sp.point[2], sp.point[3],
                                                       sp.point[4], sp.point[5]))
                                       .all_passed());
}

TEST_CASE("Gaussian-rational slice hits A and L exactly") {
  Rng rng(3);
  for (int n = 0; n < 50; ++n) {
    const Rational A = random_rational(rng), L = random_rational(rng);
    const auto l = lambdas_with(A, L, rng);
    CHECK(l[0] * l[0] + l[1] * l[1] - l[2] * l[2] - l[3] * l[3] == A);
    CHECK(l[0] * l[2] + l[1] * l[3] == L);
  }
}

TEST_CASE("suite rejects zero samples") {
  SuiteOptions o;
  o.samples = 0;
  CHECK_THROWS_AS(run_suite(o), std::invalid_argument);
}
