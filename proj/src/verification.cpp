#include "bmetric/verification.hpp"

#include "bmetric/curvature.hpp"
#include "bmetric/reference_tables.hpp"
#include "bmetric/sampling.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace bmetric {

namespace {

struct PointContext {
  SamplePoint sample;
  ModelInstance model;
  ModelAnalysis analysis;
};

std::string describe_point(const SamplePoint& s) {
  std::string out = "l=(";
  for (std::size_t i = 0; i < 4; ++i) out += (i ? "," : "") + to_string(s.point[i]);
  out += "), m=(" + to_string(s.point[4]) + "," + to_string(s.point[5]) + ") [" + s.stratum + "]";
  return out;
}

ModelInstance specialize(const ParameterPoint& p) {
  std::array<Scalar, kParameterCount> values;
  for (std::size_t i = 0; i < kParameterCount; ++i) values[i] = Scalar(p[i]);
  return new_family(values);
}

Rational coefficient(const Scalar& s, const Monomial& mono) {
  for (const auto& [m, c] : s.terms())
    if (m == mono) return c;
  return 0;
}

Monomial square(Parameter p) { return Monomial::variable(p) * Monomial::variable(p); }

bool all_zero(const Tensor& t) { return t.is_zero(); }

class Suite {
 public:
  explicit Suite(const SuiteOptions& options) : options_(options) {}

  SuiteResult run();

 private:
  void add(int criterion, std::string name, bool pass, std::string witness = {},
           std::string provenance = kExactSymbolic) {
    result_.checks.push_back(
        {criterion, {std::move(name), pass, std::move(provenance), pass ? "" : std::move(witness)}});
  }
  void table(int criterion, std::string name, const ReferenceTable& t, const Tensor& actual) {
    const auto bad = compare(t, actual);
    add(criterion, std::move(name), !bad, bad ? bad->describe() : "");
  }
  void value(int criterion, std::string name, const Scalar& expected, const Scalar& actual) {
    add(criterion, std::move(name), expected == actual,
        "expected " + expected.to_string() + ", computed " + actual.to_string());
  }

  /// Checks pred at every sampled point; the witness names the first failure.
  void sampled(int criterion, std::string name,
               const std::function<std::optional<std::string>(const PointContext&)>& failure) {
    for (const auto& ctx : points_)
      if (auto why = failure(ctx)) {
        add(criterion, std::move(name), false, "at " + describe_point(ctx.sample) + ": " + *why,
            sampled_provenance(points_.size(), options_.seed));
        return;
      }
    add(criterion, std::move(name), true, "", sampled_provenance(points_.size(), options_.seed));
  }

  Tensor sectional_table(const ModelInstance& m, const CurvatureTensor& R) const {
    const std::size_t n = m.dim();
    Tensor k(n, {0, 2});
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j) k(i, j) = sectional_curvature(m, R, basis_vector(n, i), basis_vector(n, j));
    return k;
  }

  void connections();
  void naturality();
  void torsions();
  void curvatures();
  void traces();
  void sectional();
  void propositions();
  void einstein();
  void properties();
  void nabla_phi();
  void characteristics();
  void extras();

  SuiteOptions options_;
  SuiteResult result_;
  ModelInstance m_ = symbolic_family();
  ModelAnalysis a_ = analyze(m_);
  std::vector<PointContext> points_;
};

SuiteResult Suite::run() {
  if (options_.samples == 0) throw std::invalid_argument("--samples must be at least 1");
  result_.seed = options_.seed;
  result_.samples = options_.samples;
  for (auto& s : sample_points(options_.seed, options_.samples)) {
    ModelInstance m = specialize(s.point);
    ModelAnalysis a = analyze(m);
    points_.push_back({std::move(s), std::move(m), std::move(a)});
  }

  connections();
  naturality();
  torsions();
  curvatures();
  traces();
  sectional();
  propositions();
  einstein();
  if (options_.run_properties) properties();
  nabla_phi();
  characteristics();
  extras();
  return std::move(result_);
}

void Suite::connections() {
  const Connection nabla = options_.inject_koszul_fault
                               ? detail::koszul_connection(m_, {1, 1, 1})
                               : levi_civita(m_);
  table(1, "Levi-Civita components vs reference table", reference::levi_civita(), nabla.gamma());
  const bool torsion_free = nabla.torsion_vector().is_zero();
  const bool metric = covariant_derivative(nabla, m_.structure.g).is_zero();
  add(1, "Levi-Civita connection is torsion-free and metric", torsion_free && metric,
      torsion_free ? "nabla g != 0" : "torsion != 0");

  const auto& kt = a_.require(kPhiKT).D;
  const auto& b = a_.require(kPhiB).D;
  const auto& can = a_.require(kPhiCanonical).D;
  table(2, "phiKT components vs reference table", reference::phiKT(), kt.gamma());
  table(2, "phiB components vs reference table", reference::phiB(), b.gamma());
  table(2, "phi-canonical components vs reference table", reference::phi_canonical(), can.gamma());
  const Tensor residual = Scalar(2) * b.gamma() - kt.gamma() - can.gamma();
  const auto where = residual.first_nonzero();
  add(2, "averaging relation 2 phiB = phiKT + phi-canonical", !where,
      where ? "residual at " + format_index(*where) : "");
}

void Suite::naturality() {
  for (auto name : {kPhiB, kPhiKT, kPhiCanonical}) {
    const NaturalityReport r = naturality_check(m_, a_.require(name).D);
    std::string first_failure;
    bool derivatives = true, potential = true;
    for (std::size_t i = 0; i < r.items.size(); ++i) {
      const auto& item = r.items[i];
      if (item.holds) continue;
      (i < 5 ? derivatives : potential) = false;
      if (first_failure.empty())
        first_failure = item.name + (item.witness ? " at " + format_index(*item.witness) : "");
    }
    add(3, std::string(name) + ": D phi, D xi, D eta, D g, D g~ vanish", derivatives, first_failure);
    add(3, std::string(name) + ": potential conditions on Q", potential, first_failure);
  }
  sampled(3, "Levi-Civita connection is natural exactly on F0",
          [](const PointContext& c) -> std::optional<std::string> {
            const bool f0 = c.sample.point[4] == 0 && c.sample.point[5] == 0;
            const bool natural = naturality_check(c.model, c.analysis.require(kNabla).D).natural();
            if (natural == f0) return std::nullopt;
            return std::string(natural ? "natural off F0" : "not natural on F0");
          });
}

void Suite::torsions() {
  value(4, "norm of phiKT torsion = 16(m1^2 - m2^2)", reference::norm_torsion_phiKT(),
        square_norm(m_, a_.require(kPhiKT).torsion));
  value(4, "norm of phiB torsion = 20(m1^2 - m2^2)", reference::norm_torsion_phiB(),
        square_norm(m_, a_.require(kPhiB).torsion));
  value(4, "norm of phi-canonical torsion = 32(m1^2 - m2^2)",
        reference::norm_torsion_phi_canonical(), square_norm(m_, a_.require(kPhiCanonical).torsion));
  value(4, "norm of Nijenhuis tensor = 64(m1^2 - m2^2)", reference::norm_nijenhuis(),
        square_norm(m_, a_.nijenhuis.N));
  const auto skew = totally_skew_violation(a_.require(kPhiKT).torsion);
  add(4, "phiKT torsion is totally skew-symmetric", !skew,
      skew ? "not alternating at " + format_index(*skew) : "");
  const auto can = canonical_torsion_identity_violation(m_, a_.require(kPhiCanonical).torsion);
  add(4, "phi-canonical torsion identity over all basis triples", !can,
      can ? "fails at " + format_index(*can) : "");
}

void Suite::curvatures() {
  table(5, "Levi-Civita curvature vs reference table", reference::curvature_nabla(),
        a_.require(kNabla).curvature.R);
  table(5, "phiKT curvature vs reference table", reference::curvature_phiKT(),
        a_.require(kPhiKT).curvature.R);
  table(5, "phiB curvature vs reference table", reference::curvature_phiB(),
        a_.require(kPhiB).curvature.R);

  const Tensor diff = a_.require(kPhiB).curvature.R - a_.require(kPhiCanonical).curvature.R;
  const auto where = diff.first_nonzero();
  add(5, "phiB and phi-canonical curvature tensors are equal", !where,
      where ? "differ at " + format_index(*where) + ": phiB " +
                  a_.require(kPhiB).curvature.R.at(*where).to_string() + ", phi-canonical " +
                  a_.require(kPhiCanonical).curvature.R.at(*where).to_string()
            : "");

  for (auto name : {kNabla, kPhiKT, kPhiB}) {
    const auto bad = curvature_like_violation(a_.require(name).curvature);
    add(5, std::string(name) + " curvature is curvature-like", !bad,
        bad ? bad->identity + " fails at " + format_index(bad->index) : "");
  }
}

void Suite::traces() {
  const auto& n = a_.require(kNabla).summary;
  const auto& kt = a_.require(kPhiKT).summary;
  const auto& b = a_.require(kPhiB).summary;
  table(6, "Levi-Civita Ricci tensor vs reference table", reference::ricci_nabla(), n.rho);
  value(6, "Levi-Civita scalar curvature", reference::tau_nabla(), n.tau);
  table(6, "phiKT Ricci tensor vs reference table", reference::ricci_phiKT(), kt.rho);
  value(6, "phiKT scalar curvature", reference::tau_phiKT(), kt.tau);
  table(6, "Levi-Civita associated Ricci tensor vs reference table", reference::ricci_star_nabla(),
        n.rho_star);
  value(6, "Levi-Civita associated scalar curvature", reference::tau_star_nabla(), n.tau_star);
  table(6, "phiKT associated Ricci tensor vs reference table", reference::ricci_star_phiKT(),
        kt.rho_star);
  value(6, "phiKT associated scalar curvature", reference::tau_star_phiKT(), kt.tau_star);
  table(6, "phiB Ricci tensor vs reference table", reference::ricci_phiB(), b.rho);
  table(6, "phiB associated Ricci tensor vs reference table", reference::ricci_star_phiB(),
        b.rho_star);
  value(6, "phiB scalar curvature", reference::tau_phiB(), b.tau);
  value(6, "phiB associated scalar curvature", reference::tau_star_phiB(), b.tau_star);
}

void Suite::sectional() {
  table(7, "Levi-Civita sectional curvatures vs reference table", reference::sectional_nabla(),
        sectional_table(m_, a_.require(kNabla).curvature));
  table(7, "phiKT sectional curvatures vs reference table", reference::sectional_phiKT(),
        sectional_table(m_, a_.require(kPhiKT).curvature));
  table(7, "phiB sectional curvatures vs reference table", reference::sectional_phiB(),
        sectional_table(m_, a_.require(kPhiB).curvature));

  const auto planes = reference::basic_planes();
  std::string witness;
  std::size_t count = 0;
  auto expect = [&](const auto& list, PlaneClass cls) {
    for (const auto& [i, j] : list) {
      ++count;
      const PlaneClass got = classify_plane(m_, basis_vector(5, i), basis_vector(5, j));
      if (got != cls && witness.empty())
        witness = "alpha_" + std::to_string(i + 1) + std::to_string(j + 1) + " classified as " +
                  std::string(to_string(got)) + ", expected " + std::string(to_string(cls));
    }
  };
  expect(planes.totally_real, PlaneClass::totally_real);
  expect(planes.phi_holomorphic, PlaneClass::phi_holomorphic);
  expect(planes.xi_section, PlaneClass::xi_section);
  if (count != 10 && witness.empty()) witness = "reference lists " + std::to_string(count) + " planes";
  add(7, "classification of the ten basic planes", witness.empty(), witness);
}

void Suite::propositions() {
  auto agree = [](const EquivalenceReport& r) -> std::optional<std::string> {
    if (r.all_agree()) return std::nullopt;
    std::string s;
    for (const auto& c : r.conditions) s += (s.empty() ? "" : "; ") + c.name + (c.holds ? " yes" : " no");
    return s;
  };
  sampled(8, "isotropic-F0 equivalences (four conditions)",
          [&](const PointContext& c) { return agree(isotropic_F0_kt_equivalences(c.model)); });
  sampled(8, "isotropic-F0 equivalences (seven conditions)",
          [&](const PointContext& c) { return agree(isotropic_F0_equivalences(c.model)); });

  std::vector<std::string> strata = {"generic", "m1 = m2", "m1 = -m2", "F0"};
  std::string missing;
  for (const auto& s : strata)
    if (std::none_of(points_.begin(), points_.end(),
                     [&](const PointContext& c) { return c.sample.stratum == s; }))
      missing += (missing.empty() ? "" : ", ") + s;
  add(8, "samples cover generic, m1 = m2, m1 = -m2 and F0 strata", missing.empty(),
      "missing " + missing, sampled_provenance(points_.size(), options_.seed));
}

void Suite::einstein() {
  sampled(9, "Einstein condition vs its closed form",
          [](const PointContext& c) -> std::optional<std::string> {
            const auto& p = c.sample.point;
            const bool closed = reference::P().evaluate(p) == -reference::L().evaluate(p) &&
                                reference::B().evaluate(p) == -reference::A().evaluate(p) / 3;
            const bool computed =
                einstein_check(c.model, c.analysis.require(kNabla).summary).is_einstein;
            if (closed == computed) return std::nullopt;
            return std::string(computed ? "Einstein, closed form false" : "not Einstein, closed form true");
          });
  const ModelInstance m = new_family(1, 0, 1, 0, 1, -1);
  const ModelAnalysis a = analyze(m);
  const auto where = a.require(kNabla).summary.rho.first_nonzero();
  add(9, "l=(1,0,1,0), m=(1,-1) is Ricci-flat", !where,
      where ? "rho" + format_index(*where) + " != 0" : "");
}

void Suite::properties() {
  const auto ring = ring_axioms_property(options_.seed, options_.ring_cases);
  add(10, "ring axioms on " + std::to_string(ring.cases) + " random triples", ring.pass, ring.witness);
  const auto hom = evaluation_homomorphism_property(options_.seed, options_.homomorphism_cases);
  add(10, "evaluation homomorphism on " + std::to_string(hom.cases) + " random cases", hom.pass,
      hom.witness);
  const auto trip = report_round_trip_property();
  add(10, "JSON round-trip of " + std::to_string(trip.cases) + " emitted reports", trip.pass,
      trip.witness);

  SuiteOptions mutated = options_;
  mutated.inject_koszul_fault = true;
  mutated.run_properties = false;
  const SuiteResult r = run_suite(mutated);
  const Check* lc = r.find("Levi-Civita components vs reference table");
  const Check* clean = result_.find("Levi-Civita components vs reference table");
  const bool caught = lc && !lc->verdict.pass && !r.all_passed() && clean && clean->verdict.pass;
  add(10, "Koszul sign flip is detected by the suite", caught,
      lc ? "mutated Levi-Civita check: " + std::string(lc->verdict.pass ? "passed" : "failed") +
               (clean && !clean->verdict.pass ? "; unmutated check already failing" : "")
         : "Levi-Civita check missing");
}

void Suite::nabla_phi() {
  const Scalar& norm = a_.norm_nabla_phi;
  value(11, "||nabla phi|| frozen fixture", reference::norm_nabla_phi(), norm);
  const Rational c = coefficient(norm, square(Parameter::m1));
  const bool factored = c != 0 && norm == Scalar(c) * reference::B();
  add(11, "||nabla phi|| = c(m1^2 - m2^2) with c != 0", factored,
      "computed " + norm.to_string());
}

void Suite::characteristics() {
  const std::size_t n = m_.dim();
  auto e = [&](std::size_t i) { return basis_vector(n, i); };

  // (1) phi-holomorphic sectional curvatures vanish.
  std::string witness;
  for (const auto& c : a_.connections)
    for (auto [i, j] : {std::pair{0, 2}, std::pair{1, 3}}) {
      const Scalar k = sectional_curvature(m_, c.curvature, e(i), e(j));
      if (!k.is_zero() && witness.empty())
        witness = c.name + ": k_" + std::to_string(i + 1) + std::to_string(j + 1) + " = " + k.to_string();
    }
  add(0, "phi-holomorphic sectional curvatures vanish for all four connections", witness.empty(),
      witness);

  // (2) xi-sectional curvatures vanish for the natural connections.
  witness.clear();
  for (auto name : {kPhiB, kPhiKT, kPhiCanonical})
    for (std::size_t i = 0; i < 4; ++i) {
      const Scalar k = sectional_curvature(m_, a_.require(name).curvature, e(4), e(i));
      if (!k.is_zero() && witness.empty())
        witness = std::string(name) + ": k_5" + std::to_string(i + 1) + " = " + k.to_string();
    }
  add(0, "xi-sectional curvatures vanish for phiB, phiKT, phi-canonical", witness.empty(), witness);

  // (3) rho* of nabla proportional to g iff A = B = m1 m2 + 2/5 L = 0.
  sampled(0, "associated Ricci tensor of nabla proportional to g iff A = B = m1m2 + 2/5 L = 0",
          [](const PointContext& c) -> std::optional<std::string> {
            const auto& p = c.sample.point;
            const auto& rs = c.analysis.require(kNabla).summary.rho_star;
            const auto& g = c.model.structure.g;
            const Scalar factor = rs(0, 0) / g(0, 0).constant_value();
            const bool proportional = (rs - factor * g).is_zero();
            const bool closed = reference::A().evaluate(p) == 0 && reference::B().evaluate(p) == 0 &&
                                reference::P().evaluate(p) + Rational(2, 5) * reference::L().evaluate(p) == 0;
            if (proportional == closed) return std::nullopt;
            return std::string(proportional ? "proportional, conditions false"
                                            : "not proportional, conditions true");
          });

  // (4) each tau is a combination of A and B, and together they span both.
  {
    std::vector<std::pair<Rational, Rational>> rows;
    std::string bad;
    for (const auto& c : a_.connections) {
      const Scalar& tau = c.summary.tau;
      const Rational a = coefficient(tau, square(Parameter::l1));
      const Rational b = coefficient(tau, square(Parameter::m1));
      if (tau != Scalar(a) * reference::A() + Scalar(b) * reference::B() && bad.empty())
        bad = c.name + ": tau = " + tau.to_string() + " is not in span(A, B)";
      rows.emplace_back(a, b);
    }
    bool rank_two = false;
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = i + 1; j < rows.size(); ++j)
        rank_two |= rows[i].first * rows[j].second - rows[i].second * rows[j].first != 0;
    if (bad.empty() && !rank_two) bad = "scalar curvatures do not determine both A and B";
    add(0, "scalar-flat for all four connections iff A = m1^2 - m2^2 = 0", bad.empty(), bad);
  }

  // (5) tau* vanishes iff m1 m2 = nu L.
  const std::pair<std::string_view, Rational> nus[] = {
      {kNabla, Rational(-4, 5)}, {kPhiB, Rational(-1)}, {kPhiKT, Rational(-1, 2)}, {kPhiCanonical, Rational(-1)}};
  for (const auto& [name, nu] : nus) {
    const Scalar& ts = a_.require(name).summary.tau_star;
    const Rational c = coefficient(ts, Monomial::variable(Parameter::m1) * Monomial::variable(Parameter::m2));
    const Scalar target = Scalar(c) * (reference::P() - Scalar(nu) * reference::L());
    add(0, std::string(name) + ": tau* = 0 iff m1m2 = " + to_string(nu) + " L", c != 0 && ts == target,
        "tau* = " + ts.to_string());
  }

  // (6) natural connections coincide with nabla iff F0.
  for (auto name : {kPhiB, kPhiKT, kPhiCanonical})
    sampled(0, std::string(name) + " coincides with nabla iff F0",
            [name](const PointContext& c) -> std::optional<std::string> {
              const bool f0 = c.sample.point[4] == 0 && c.sample.point[5] == 0;
              const bool same = c.analysis.require(name).D == c.analysis.require(kNabla).D;
              if (same == f0) return std::nullopt;
              return std::string(same ? "coincides off F0" : "differs on F0");
            });

  // (7) flat iff F0 and A = L = 0.
  for (const auto& conn : a_.connections) {
    const std::string name = conn.name;
    sampled(0, name + " flat iff F0 and A = L = 0",
            [name](const PointContext& c) -> std::optional<std::string> {
              const auto& p = c.sample.point;
              const bool closed = p[4] == 0 && p[5] == 0 && reference::A().evaluate(p) == 0 &&
                                  reference::L().evaluate(p) == 0;
              const bool flat = c.analysis.require(name).curvature.R.is_zero();
              if (flat == closed) return std::nullopt;
              return std::string(flat ? "flat, conditions false" : "not flat, conditions true");
            });
  }

  // (8) each Ricci-type tensor vanishes iff R(nabla) = 0.
  for (const auto& conn : a_.connections)
    for (bool star : {false, true}) {
      const std::string name = conn.name;
      sampled(0, name + (star ? " associated Ricci tensor" : " Ricci tensor") + " vanishes iff R = 0",
              [name, star](const PointContext& c) -> std::optional<std::string> {
                const auto& s = c.analysis.require(name).summary;
                const bool vanishes = all_zero(star ? s.rho_star : s.rho);
                const bool flat = c.analysis.require(kNabla).curvature.R.is_zero();
                if (vanishes == flat) return std::nullopt;
                return std::string(vanishes ? "vanishes but R != 0" : "R = 0 but does not vanish");
              });
    }
}

void Suite::extras() {
  const ValidationReport v = validate(m_);
  const auto msgs = v.failure_messages();
  add(0, "family satisfies every structure axiom", v.all_passed(), msgs.empty() ? "" : msgs.front());
  add(0, "family is in F7 and F3+F7 but not F0",
      a_.classes.is_F7 && a_.classes.is_F3_plus_F7 && !a_.classes.is_F0, "class flags differ");
  sampled(0, "F0 iff m1 = m2 = 0", [](const PointContext& c) -> std::optional<std::string> {
    const bool f0 = c.sample.point[4] == 0 && c.sample.point[5] == 0;
    if (c.analysis.classes.is_F0 == f0) return std::nullopt;
    return std::string("F0 flag ") + (c.analysis.classes.is_F0 ? "set" : "unset");
  });

  table(0, "phiKT torsion components vs reference table", reference::torsion_phiKT(),
        a_.require(kPhiKT).torsion);
  table(0, "phiB torsion components vs reference table", reference::torsion_phiB(),
        a_.require(kPhiB).torsion);
  table(0, "phi-canonical torsion components vs reference table",
        reference::torsion_phi_canonical(), a_.require(kPhiCanonical).torsion);
  table(0, "Nijenhuis components vs reference table", reference::nijenhuis(), a_.nijenhuis.N);
  const auto nh = a_.nijenhuis.N_hat.first_nonzero();
  add(0, "associated Nijenhuis tensor vanishes", !nh, nh ? "nonzero at " + format_index(*nh) : "");

  // N(x, y) = 4 (nabla_x eta)(y) xi on F7.
  const Tensor deta = covariant_derivative(a_.require(kNabla).D, covector_tensor(m_.structure.eta));
  Tensor expected(5, {0, 3});
  for_each_index(5, 3, [&](const MultiIndex& ix) {
    expected.at(ix) = Scalar(4) * deta(ix[0], ix[1]) * m_.structure.metric(m_.structure.xi, basis_vector(5, ix[2]));
  });
  const auto nd = (a_.nijenhuis.N - expected).first_nonzero();
  add(0, "N(x,y) = 4 (nabla_x eta)(y) xi", !nd, nd ? "differs at " + format_index(*nd) : "");
}

}  // namespace

bool SuiteResult::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.verdict.pass; });
}

bool SuiteResult::criterion_passed(int criterion) const {
  const auto cs = for_criterion(criterion);
  return !cs.empty() &&
         std::all_of(cs.begin(), cs.end(), [](const Check* c) { return c->verdict.pass; });
}

std::vector<const Check*> SuiteResult::for_criterion(int criterion) const {
  std::vector<const Check*> out;
  for (const auto& c : checks)
    if (c.criterion == criterion) out.push_back(&c);
  return out;
}

const Check* SuiteResult::find(std::string_view name) const {
  for (const auto& c : checks)
    if (c.verdict.name == name) return &c;
  return nullptr;
}

SuiteResult run_suite(const SuiteOptions& options) { return Suite(options).run(); }

std::string criterion_title(int criterion) {
  static const char* titles[] = {
      "additional reference checks",
      "Levi-Civita components",
      "natural connection components and averaging",
      "naturality and potential conditions",
      "torsion norms, skew torsion, canonical torsion identity",
      "curvature tables, equal phiB/phi-canonical curvature, curvature-like",
      "Ricci and scalar curvature tables",
      "sectional curvatures and plane classes",
      "isotropic-F0 equivalences at sampled points",
      "Einstein condition",
      "property suites and mutation test",
      "||nabla phi|| fixture",
  };
  if (criterion < 0 || criterion > kCriterionCount) return "unknown";
  return titles[criterion];
}

Report verification_report(const SuiteResult& result) {
  Report r;
  r.model = {{"family", "symbolic"}, {"seed", result.seed}, {"samples", result.samples}};
  const auto passed = static_cast<long>(
      std::count_if(result.checks.begin(), result.checks.end(), [](const Check& c) { return c.verdict.pass; }));
  const auto total = static_cast<long>(result.checks.size());
  r.sections.push_back({"summary", {{"checks", Scalar(total)}, {"passed", Scalar(passed)}, {"failed", Scalar(total - passed)}}});
  for (const auto& c : result.checks) r.verdicts.push_back(c.verdict);
  return r;
}

PropertyOutcome ring_axioms_property(std::uint64_t seed, std::size_t cases) {
  Rng rng(seed);
  PropertyOutcome out{true, cases, ""};
  const Scalar zero, one(1);
  for (std::size_t i = 0; i < cases && out.pass; ++i) {
    const Scalar a = random_scalar(rng), b = random_scalar(rng), c = random_scalar(rng);
    const std::pair<const char*, bool> laws[] = {
        {"associativity of +", (a + b) + c == a + (b + c)},
        {"associativity of *", (a * b) * c == a * (b * c)},
        {"commutativity of +", a + b == b + a},
        {"commutativity of *", a * b == b * a},
        {"distributivity", a * (b + c) == a * b + a * c},
        {"additive identity", a + zero == a},
        {"multiplicative identity", a * one == a},
        {"additive inverse", (a + (-a)).terms().empty()},
    };
    for (const auto& [law, holds] : laws)
      if (!holds) {
        out = {false, cases, std::string(law) + " fails for a=" + a.to_string() + ", b=" +
                                 b.to_string() + ", c=" + c.to_string()};
        break;
      }
  }
  return out;
}

PropertyOutcome evaluation_homomorphism_property(std::uint64_t seed, std::size_t cases) {
  Rng rng(seed + 1);
  for (std::size_t i = 0; i < cases; ++i) {
    const Scalar a = random_scalar(rng), b = random_scalar(rng), c = random_scalar(rng);
    const ParameterPoint p = random_point(rng);
    if ((a * b + c).evaluate(p) != a.evaluate(p) * b.evaluate(p) + c.evaluate(p))
      return {false, cases, "fails for a=" + a.to_string() + ", b=" + b.to_string() + ", c=" + c.to_string()};
  }
  return {true, cases, ""};
}

PropertyOutcome report_round_trip_property() {
  const ModelInstance symbolic = symbolic_family();
  const ParameterPoint point{1, 0, 1, 0, 1, -1};
  std::vector<std::pair<std::string, Report>> reports;
  reports.emplace_back("family --symbolic", cmd_family(symbolic, {{"family", "symbolic"}}));
  reports.emplace_back("family --params 0,0,0,0,0,0",
                       cmd_family(new_family(0, 0, 0, 0, 0, 0), {{"family", "0,0,0,0,0,0"}}));
  reports.emplace_back("report --symbolic", cmd_report(symbolic, {{"family", "symbolic"}}, {}));
  reports.emplace_back("report --params 1,0,1,0,1,-1",
                       cmd_report(new_family(1, 0, 1, 0, 1, -1), {{"family", "1,0,1,0,1,-1"}}, {}));
  reports.emplace_back("eval", cmd_eval(symbolic, {{"family", "symbolic"}}, point, {}));
  for (const auto& [name, r] : reports) {
    const auto text = to_json(r).dump();
    if (report_from_json(nlohmann::ordered_json::parse(text)) != r)
      return {false, reports.size(), name + " does not round-trip"};
  }
  return {true, reports.size(), ""};
}

}  // namespace bmetric
