#include "bmetric/curvature.hpp"

namespace bmetric {

namespace {

Scalar eval4(const Tensor& t, const Vector& x, const Vector& y, const Vector& z, const Vector& w) {
  const std::size_t n = t.dim();
  Scalar s;
  for_each_index(n, 4, [&](const MultiIndex& ix) {
    if (x[ix[0]].is_zero() || y[ix[1]].is_zero() || z[ix[2]].is_zero() || w[ix[3]].is_zero())
      return;
    const Scalar& c = t.at(ix);
    if (!c.is_zero()) s += x[ix[0]] * y[ix[1]] * z[ix[2]] * w[ix[3]] * c;
  });
  return s;
}

Scalar det3(const Vector& a, const Vector& b, const Vector& c, std::size_t i, std::size_t j,
            std::size_t k) {
  return a[i] * (b[j] * c[k] - b[k] * c[j]) - a[j] * (b[i] * c[k] - b[k] * c[i]) +
         a[k] * (b[i] * c[j] - b[j] * c[i]);
}

// True when c lies in span(a, b), given a and b independent.
bool in_span(const Vector& a, const Vector& b, const Vector& c) {
  const std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k)
        if (!det3(a, b, c, i, j, k).is_zero()) return false;
  return true;
}

Scalar gram_determinant(const StructureTensors& s, const Vector& x, const Vector& y) {
  const Scalar xy = s.metric(x, y);
  return s.metric(x, x) * s.metric(y, y) - xy * xy;
}

Scalar family_isotropy(const ModelInstance& m) {
  if (!m.family) throw PreconditionError("this check needs an instance of the five-dimensional family");
  const auto& p = *m.family;
  return (p[4] - p[5]) * (p[4] + p[5]);
}

}  // namespace

std::string_view to_string(PlaneClass c) {
  switch (c) {
    case PlaneClass::totally_real: return "totally_real";
    case PlaneClass::phi_holomorphic: return "phi_holomorphic";
    case PlaneClass::xi_section: return "xi_section";
    case PlaneClass::generic: return "generic";
  }
  return "generic";
}

CurvatureTensor curvature(const ModelInstance& m, const Connection& D) {
  const std::size_t n = m.dim();
  const Tensor& G = D.gamma();
  const Tensor& C = m.frame.structure_constants;
  const Tensor& g = m.structure.g;

  // (1,3) endomorphism components: Rv(b, i, j, k) = e_b-component of R(e_i, e_j) e_k.
  Tensor Rv(n, {1, 3});
  for_each_index(n, 3, [&](const MultiIndex& ijk) {
    const auto i = ijk[0], j = ijk[1], k = ijk[2];
    for (std::size_t b = 0; b < n; ++b) {
      Scalar v;
      for (std::size_t a = 0; a < n; ++a) {
        if (!G(a, j, k).is_zero() && !G(b, i, a).is_zero()) v += G(a, j, k) * G(b, i, a);
        if (!G(a, i, k).is_zero() && !G(b, j, a).is_zero()) v -= G(a, i, k) * G(b, j, a);
        if (!C(a, i, j).is_zero() && !G(b, a, k).is_zero()) v -= C(a, i, j) * G(b, a, k);
      }
      Rv(b, i, j, k) = std::move(v);
    }
  });

  CurvatureTensor out{Tensor(n, {0, 4})};
  for_each_index(n, 4, [&](const MultiIndex& ijkl) {
    Scalar v;
    for (std::size_t b = 0; b < n; ++b)
      if (!g(b, ijkl[3]).is_zero() && !Rv(b, ijkl[0], ijkl[1], ijkl[2]).is_zero())
        v += Rv(b, ijkl[0], ijkl[1], ijkl[2]) * g(b, ijkl[3]);
    out.R.at(ijkl) = std::move(v);
  });
  return out;
}

std::optional<CurvatureLikeViolation> curvature_like_violation(const CurvatureTensor& curv) {
  const Tensor& R = curv.R;
  std::optional<CurvatureLikeViolation> bad;
  for_each_index(R.dim(), 4, [&](const MultiIndex& ix) {
    if (bad) return;
    const auto x = ix[0], y = ix[1], z = ix[2], w = ix[3];
    const Scalar& r = R(x, y, z, w);
    if (r != -R(y, x, z, w))
      bad = CurvatureLikeViolation{"L(x,y,z,w) = -L(y,x,z,w)", ix};
    else if (r != -R(x, y, w, z))
      bad = CurvatureLikeViolation{"L(x,y,z,w) = -L(x,y,w,z)", ix};
    else if (!(r + R(y, z, x, w) + R(z, x, y, w)).is_zero())
      bad = CurvatureLikeViolation{"first Bianchi sum", ix};
  });
  return bad;
}

bool curvature_like_check(const CurvatureTensor& R) { return !curvature_like_violation(R); }

CurvatureSummary summarize(const ModelInstance& m, const CurvatureTensor& curv) {
  const std::size_t n = m.dim();
  const auto& s = m.structure;
  const Tensor& R = curv.R;
  if (s.g_inv.dim() != n) throw PreconditionError("traces need an invertible metric");

  CurvatureSummary out{Tensor(n, {0, 2}), Scalar(), Tensor(n, {0, 2}), Scalar()};
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      Scalar rho, rho_star;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          const Scalar& gij = s.g_inv(i, j);
          if (gij.is_zero()) continue;
          rho += gij * R(i, x, y, j);
          Scalar phi_ej;  // R(e_i, x, y, phi e_j)
          for (std::size_t a = 0; a < n; ++a)
            if (!s.phi(a, j).is_zero()) phi_ej += s.phi(a, j) * R(i, x, y, a);
          rho_star += gij * phi_ej;
        }
      out.rho(x, y) = std::move(rho);
      out.rho_star(x, y) = std::move(rho_star);
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (s.g_inv(i, j).is_zero()) continue;
      out.tau += s.g_inv(i, j) * out.rho(i, j);
      out.tau_star += s.g_inv(i, j) * out.rho_star(i, j);
    }
  return out;
}

Scalar sectional_curvature(const ModelInstance& m, const CurvatureTensor& R, const Vector& x,
                           const Vector& y) {
  const Scalar denom = gram_determinant(m.structure, x, y);
  if (denom.is_zero()) throw DegeneratePlaneError("degenerate plane: zero Gram determinant");
  if (!denom.is_constant())
    throw std::domain_error("sectional curvature with a polynomial Gram determinant (" +
                            denom.to_string() + ") is not supported");
  return eval4(R.R, x, y, y, x) / denom.constant_value();
}

PlaneClass classify_plane(const ModelInstance& m, const Vector& x, const Vector& y) {
  const auto& s = m.structure;
  if (gram_determinant(s, x, y).is_zero())
    throw DegeneratePlaneError("degenerate plane: zero Gram determinant");
  const Vector px = s.apply_phi(x), py = s.apply_phi(y);
  if (in_span(x, y, px) && in_span(x, y, py)) return PlaneClass::phi_holomorphic;
  if (in_span(x, y, s.xi)) return PlaneClass::xi_section;
  const bool orthogonal_to_phi = s.metric(x, px).is_zero() && s.metric(x, py).is_zero() &&
                                 s.metric(y, px).is_zero() && s.metric(y, py).is_zero();
  const bool orthogonal_to_xi = s.metric(x, s.xi).is_zero() && s.metric(y, s.xi).is_zero();
  if (orthogonal_to_phi && orthogonal_to_xi) return PlaneClass::totally_real;
  return PlaneClass::generic;
}

Scalar square_norm_nabla_phi(const ModelInstance& m, const Connection& nabla) {
  const std::size_t n = m.dim();
  const auto& s = m.structure;
  const Tensor dphi = covariant_derivative(nabla, s.phi);  // (a; i, k)
  Scalar total;
  for_each_index(n, 4, [&](const MultiIndex& ijks) {
    const auto i = ijks[0], j = ijks[1], k = ijks[2], sl = ijks[3];
    const Scalar& gij = s.g_inv(i, j);
    const Scalar& gks = s.g_inv(k, sl);
    if (gij.is_zero() || gks.is_zero()) return;
    Scalar inner;  // g((nabla_i phi) e_k, (nabla_j phi) e_s)
    for (std::size_t a = 0; a < n; ++a) {
      if (dphi(a, i, k).is_zero()) continue;
      for (std::size_t b = 0; b < n; ++b)
        if (!s.g(a, b).is_zero() && !dphi(b, j, sl).is_zero())
          inner += dphi(a, i, k) * s.g(a, b) * dphi(b, j, sl);
    }
    if (!inner.is_zero()) total += gij * gks * inner;
  });
  return total;
}

Scalar square_norm(const ModelInstance& m, const Tensor& t) {
  const std::size_t n = m.dim();
  const auto& s = m.structure;
  Tensor lowered;
  if (t.valence() == Valence{0, 3}) {
    lowered = t;
  } else if (t.valence() == Valence{1, 2}) {
    lowered = Tensor(n, {0, 3});
    for_each_index(n, 3, [&](const MultiIndex& ijl) {
      Scalar v;
      for (std::size_t k = 0; k < n; ++k)
        if (!s.g(k, ijl[2]).is_zero()) v += s.g(k, ijl[2]) * t(k, ijl[0], ijl[1]);
      lowered.at(ijl) = v;
    });
  } else {
    throw UnsupportedValenceError("square norm supports (0,3) and (1,2) tensors");
  }

  // Raise one slot at a time, then contract with the lowered tensor.
  Tensor raised = lowered;
  for (std::size_t slot = 0; slot < 3; ++slot) {
    Tensor next(n, {0, 3});
    for_each_index(n, 3, [&](const MultiIndex& ix) {
      Scalar v;
      MultiIndex src = ix;
      for (std::size_t a = 0; a < n; ++a) {
        if (s.g_inv(ix[slot], a).is_zero()) continue;
        src[slot] = a;
        v += s.g_inv(ix[slot], a) * raised.at(src);
      }
      next.at(ix) = v;
    });
    raised = std::move(next);
  }
  Scalar total;
  for (std::size_t f = 0; f < lowered.size(); ++f)
    if (!lowered.components()[f].is_zero())
      total += lowered.components()[f] * raised.components()[f];
  return total;
}

EinsteinReport einstein_check(const ModelInstance& m, const CurvatureSummary& summary) {
  const std::size_t n = m.dim();
  EinsteinReport report;
  const Scalar scale = summary.tau / Rational(static_cast<long>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Scalar r = summary.rho(i, j) - scale * m.structure.g(i, j);
      if (!r.is_zero()) report.residual.emplace_back(MultiIndex{i, j}, std::move(r));
    }
  report.is_einstein = report.residual.empty();
  return report;
}

bool EquivalenceReport::all_agree() const {
  for (const auto& c : conditions)
    if (c.holds != conditions.front().holds) return false;
  return true;
}

namespace {

bool nabla_xi_isotropic(const ModelInstance& m, const Connection& nabla) {
  const std::size_t n = m.dim();
  const auto& s = m.structure;
  for (std::size_t i = 0; i < n; ++i) {
    const auto ei = basis_vector(n, i);
    if (!s.eta_of(ei).is_zero()) continue;  // e_1..e_4 on the family
    const Vector v = nabla.apply(ei, s.xi);
    if (!s.metric(v, v).is_zero()) return false;
  }
  return true;
}

}  // namespace

EquivalenceReport isotropic_F0_kt_equivalences(const ModelInstance& m) {
  const Scalar isotropy = family_isotropy(m);
  const auto a = analyze(m);
  const auto& nabla = a.require(kNabla);
  const auto& kt = a.require(kPhiKT);
  EquivalenceReport r;
  r.conditions.push_back({"isotropic-F0 (||nabla phi|| = 0)", a.norm_nabla_phi.is_zero()});
  r.conditions.push_back({"tau = tau(phiKT)", nabla.summary.tau == kt.summary.tau});
  r.conditions.push_back({"nabla_{e_i} xi isotropic", nabla_xi_isotropic(m, nabla.D)});
  r.conditions.push_back({"m1 = +-m2", isotropy.is_zero()});
  return r;
}

EquivalenceReport isotropic_F0_equivalences(const ModelInstance& m) {
  const Scalar isotropy = family_isotropy(m);
  const auto a = analyze(m);
  const std::size_t n = m.dim();
  const auto& nabla = a.require(kNabla);
  const auto& phiB = a.require(kPhiB);
  const auto& kt = a.require(kPhiKT);
  const auto& can = a.require(kPhiCanonical);

  EquivalenceReport r;
  r.conditions.push_back({"isotropic-F0 (||nabla phi|| = 0)", a.norm_nabla_phi.is_zero()});
  const Scalar& tau = nabla.summary.tau;
  r.conditions.push_back({"tau = tau(phiB) = tau(phiKT) = tau(phi-canonical)",
                          tau == phiB.summary.tau && tau == kt.summary.tau &&
                              tau == can.summary.tau});
  r.conditions.push_back({"nabla_{e_i} xi isotropic", nabla_xi_isotropic(m, nabla.D)});
  r.conditions.push_back({"N isotropic", square_norm(m, a.nijenhuis.N).is_zero()});
  r.conditions.push_back({"torsions of phiB, phiKT, phi-canonical isotropic",
                          square_norm(m, phiB.torsion).is_zero() &&
                              square_norm(m, kt.torsion).is_zero() &&
                              square_norm(m, can.torsion).is_zero()});
  bool xi_flat = true;
  for (std::size_t i = 0; i < n; ++i) {
    const auto ei = basis_vector(n, i);
    if (!m.structure.eta_of(ei).is_zero()) continue;
    xi_flat &= sectional_curvature(m, nabla.curvature, m.structure.xi, ei).is_zero();
  }
  r.conditions.push_back({"xi-sectional curvatures of nabla vanish", xi_flat});
  r.conditions.push_back({"m1 = +-m2", isotropy.is_zero()});
  return r;
}

const ConnectionAnalysis* ModelAnalysis::find(std::string_view name) const {
  for (const auto& c : connections)
    if (c.name == name) return &c;
  return nullptr;
}

const ConnectionAnalysis& ModelAnalysis::require(std::string_view name) const {
  if (const auto* c = find(name)) return *c;
  throw PreconditionError("connection " + std::string(name) + " does not exist on this model");
}

ModelAnalysis analyze(const ModelInstance& m) {
  ConnectionSet set = build_connections(m);
  ModelAnalysis a{m, fundamental_F(m, set.nabla), nijenhuis(m, set.nabla), {}, {}, {}};
  a.classes = class_membership(m, a.F, a.nijenhuis.N_hat);
  a.norm_nabla_phi = square_norm_nabla_phi(m, set.nabla);

  auto add = [&](std::string_view name, const Connection& D) {
    CurvatureTensor R = curvature(m, D);
    CurvatureSummary summary = summarize(m, R);
    a.connections.push_back(
        {std::string(name), D, torsion(m, D), std::move(R), std::move(summary)});
  };
  add(kNabla, set.nabla);
  add(kPhiB, set.phiB);
  if (set.phiKT) add(kPhiKT, *set.phiKT);
  if (set.phi_canonical) add(kPhiCanonical, *set.phi_canonical);
  return a;
}

}  // namespace bmetric
