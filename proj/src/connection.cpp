#include "bmetric/connection.hpp"

namespace bmetric {

namespace {

// Trilinear evaluation of a (0,3) tensor on vectors.
Scalar eval3(const Tensor& t, const Vector& x, const Vector& y, const Vector& z) {
  const std::size_t n = t.dim();
  Scalar s;
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j].is_zero()) continue;
      const Scalar xy = x[i] * y[j];
      for (std::size_t k = 0; k < n; ++k)
        if (!z[k].is_zero() && !t(i, j, k).is_zero()) s += xy * z[k] * t(i, j, k);
    }
  }
  return s;
}

// (1,2) -> (0,3): out(i, j, l) = sum_k g(k, l) t(k, i, j).
Tensor lower_last(const StructureTensors& s, const Tensor& t) {
  const std::size_t n = t.dim();
  Tensor out(n, {0, 3});
  for_each_index(n, 3, [&](const MultiIndex& ijl) {
    Scalar v;
    for (std::size_t k = 0; k < n; ++k)
      if (!s.g(k, ijl[2]).is_zero() && !t(k, ijl[0], ijl[1]).is_zero())
        v += s.g(k, ijl[2]) * t(k, ijl[0], ijl[1]);
    out.at(ijl) = v;
  });
  return out;
}

// Derived quantities of the Levi-Civita connection used by several
// constructions: nabla phi, nabla eta, nabla xi.
struct NablaStructure {
  Tensor dphi;  // (1,2) (a; i, b)
  Tensor deta;  // (0,2) (i, b)
  Tensor dxi;   // (1,1) (a; i)

  NablaStructure(const ModelInstance& m, const Connection& nabla)
      : dphi(covariant_derivative(nabla, m.structure.phi)),
        deta(covariant_derivative(nabla, covector_tensor(m.structure.eta))),
        dxi(covariant_derivative(nabla, vector_tensor(m.structure.xi))) {}

  // (nabla_x phi) y
  Vector phi_derivative(const Vector& x, const Vector& y) const {
    const std::size_t n = x.size();
    Vector out(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (x[i].is_zero()) continue;
      for (std::size_t b = 0; b < n; ++b) {
        if (y[b].is_zero()) continue;
        const Scalar xy = x[i] * y[b];
        for (std::size_t a = 0; a < n; ++a)
          if (!dphi(a, i, b).is_zero()) out[a] += xy * dphi(a, i, b);
      }
    }
    return out;
  }

  // (nabla_x eta) y
  Scalar eta_derivative(const Vector& x, const Vector& y) const {
    Scalar s;
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i].is_zero()) continue;
      for (std::size_t b = 0; b < y.size(); ++b)
        if (!y[b].is_zero() && !deta(i, b).is_zero()) s += x[i] * y[b] * deta(i, b);
    }
    return s;
  }

  // nabla_x xi
  Vector xi_derivative(const Vector& x) const {
    const std::size_t n = x.size();
    Vector out(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (x[i].is_zero()) continue;
      for (std::size_t a = 0; a < n; ++a)
        if (!dxi(a, i).is_zero()) out[a] += x[i] * dxi(a, i);
    }
    return out;
  }
};

Vector scaled(const Vector& v, const Scalar& s) {
  Vector out(v.size());
  if (s.is_zero()) return out;
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] * s;
  return out;
}

void accumulate(Vector& into, const Vector& v) {
  for (std::size_t i = 0; i < v.size(); ++i) into[i] += v[i];
}

// Builds a connection from D_{e_i} e_j given as a function of (i, j).
template <class F>
Connection connection_from(const ModelInstance& m, F&& d) {
  const std::size_t n = m.dim();
  Tensor gamma(n, {1, 2});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vector v = d(i, j);
      for (std::size_t k = 0; k < n; ++k) gamma(k, i, j) = v[k];
    }
  return Connection(m.frame, std::move(gamma));
}

}  // namespace

Connection::Connection(const AlgebraFrame& frame, Tensor gamma)
    : gamma_(std::move(gamma)), torsion_(frame.dim, {1, 2}) {
  if (gamma_.dim() != frame.dim || !(gamma_.valence() == Valence{1, 2}))
    throw std::invalid_argument("connection coefficients must be a (1,2) array over the frame");
  const auto& C = frame.structure_constants;
  for_each_index(frame.dim, 3, [&](const MultiIndex& kij) {
    const auto k = kij[0], i = kij[1], j = kij[2];
    torsion_(k, i, j) = gamma_(k, i, j) - gamma_(k, j, i) - C(k, i, j);
  });
}

Vector Connection::apply(const Vector& x, const Vector& y) const {
  const std::size_t n = dim();
  Vector out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j].is_zero()) continue;
      const Scalar xy = x[i] * y[j];
      for (std::size_t k = 0; k < n; ++k)
        if (!gamma_(k, i, j).is_zero()) out[k] += xy * gamma_(k, i, j);
    }
  }
  return out;
}

Connection detail::koszul_connection(const ModelInstance& m, const std::array<int, 3>& signs) {
  const std::size_t n = m.dim();
  const auto& s = m.structure;
  if (s.g_inv.dim() != n)
    throw PreconditionError("Levi-Civita connection needs an invertible constant metric");
  const auto& C = m.frame.structure_constants;

  // Lowered brackets: B(i, j, l) = g([e_i, e_j], e_l).
  Tensor B(n, {0, 3});
  for_each_index(n, 3, [&](const MultiIndex& ijl) {
    Scalar v;
    for (std::size_t a = 0; a < n; ++a)
      if (!C(a, ijl[0], ijl[1]).is_zero() && !s.g(a, ijl[2]).is_zero())
        v += C(a, ijl[0], ijl[1]) * s.g(a, ijl[2]);
    B.at(ijl) = v;
  });

  const Rational half(1, 2);
  Tensor gamma(n, {1, 2});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vector lowered(n);
      for (std::size_t l = 0; l < n; ++l) {
        Scalar v = Scalar(static_cast<long>(signs[0])) * B(i, j, l) +
                   Scalar(static_cast<long>(signs[1])) * B(j, l, i) +
                   Scalar(static_cast<long>(signs[2])) * B(l, i, j);
        lowered[l] = v * Scalar(half);
      }
      const Vector raised = s.raise(lowered);
      for (std::size_t k = 0; k < n; ++k) gamma(k, i, j) = raised[k];
    }
  return Connection(m.frame, std::move(gamma));
}

Connection levi_civita(const ModelInstance& m) { return detail::koszul_connection(m, {1, -1, 1}); }

Tensor vector_tensor(const Vector& v) {
  Tensor t(v.size(), {1, 0});
  for (std::size_t i = 0; i < v.size(); ++i) t(i) = v[i];
  return t;
}

Tensor covector_tensor(const Vector& w) {
  Tensor t(w.size(), {0, 1});
  for (std::size_t i = 0; i < w.size(); ++i) t(i) = w[i];
  return t;
}

Tensor covariant_derivative(const Connection& D, const Tensor& t) {
  const std::size_t n = D.dim();
  const Tensor& G = D.gamma();
  if (t.dim() != n) throw std::invalid_argument("tensor and connection dimensions differ");
  const Valence v = t.valence();

  if (v == Valence{1, 0}) {
    Tensor out(n, {1, 1});
    for_each_index(n, 2, [&](const MultiIndex& ai) {
      Scalar s;
      for (std::size_t c = 0; c < n; ++c)
        if (!t(c).is_zero()) s += G(ai[0], ai[1], c) * t(c);
      out.at(ai) = s;
    });
    return out;
  }
  if (v == Valence{0, 1}) {
    Tensor out(n, {0, 2});
    for_each_index(n, 2, [&](const MultiIndex& ib) {
      Scalar s;
      for (std::size_t c = 0; c < n; ++c)
        if (!t(c).is_zero()) s -= t(c) * G(c, ib[0], ib[1]);
      out.at(ib) = s;
    });
    return out;
  }
  if (v == Valence{1, 1}) {
    Tensor out(n, {1, 2});
    for_each_index(n, 3, [&](const MultiIndex& aib) {
      const auto a = aib[0], i = aib[1], b = aib[2];
      Scalar s;
      for (std::size_t c = 0; c < n; ++c) {
        if (!t(c, b).is_zero()) s += G(a, i, c) * t(c, b);
        if (!t(a, c).is_zero()) s -= t(a, c) * G(c, i, b);
      }
      out.at(aib) = s;
    });
    return out;
  }
  if (v == Valence{0, 2}) {
    Tensor out(n, {0, 3});
    for_each_index(n, 3, [&](const MultiIndex& iab) {
      const auto i = iab[0], a = iab[1], b = iab[2];
      Scalar s;
      for (std::size_t c = 0; c < n; ++c) {
        if (!t(c, b).is_zero()) s -= G(c, i, a) * t(c, b);
        if (!t(a, c).is_zero()) s -= t(a, c) * G(c, i, b);
      }
      out.at(iab) = s;
    });
    return out;
  }
  throw UnsupportedValenceError("covariant derivative supports valences (1,0), (0,1), (1,1), (0,2); got (" +
                                std::to_string(v.contravariant) + "," +
                                std::to_string(v.covariant) + ")");
}

Tensor fundamental_F(const ModelInstance& m, const Connection& nabla) {
  const std::size_t n = m.dim();
  const Tensor dphi = covariant_derivative(nabla, m.structure.phi);
  Tensor F(n, {0, 3});
  for_each_index(n, 3, [&](const MultiIndex& xyz) {
    Scalar s;
    for (std::size_t a = 0; a < n; ++a)
      if (!dphi(a, xyz[0], xyz[1]).is_zero() && !m.structure.g(a, xyz[2]).is_zero())
        s += dphi(a, xyz[0], xyz[1]) * m.structure.g(a, xyz[2]);
    F.at(xyz) = s;
  });
  return F;
}

NijenhuisTensors nijenhuis(const ModelInstance& m, const Connection& nabla) {
  const std::size_t n = m.dim();
  const auto& s = m.structure;
  const NablaStructure ns(m, nabla);

  // Shared half: (nabla_{phi x} phi) y - phi (nabla_x phi) y + (nabla_x eta)(y) xi.
  auto half = [&](const Vector& x, const Vector& y) {
    Vector v = ns.phi_derivative(s.apply_phi(x), y);
    const Vector w = s.apply_phi(ns.phi_derivative(x, y));
    for (std::size_t k = 0; k < n; ++k) v[k] -= w[k];
    accumulate(v, scaled(s.xi, ns.eta_derivative(x, y)));
    return v;
  };

  Tensor N1(n, {1, 2}), N2(n, {1, 2});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const auto ei = basis_vector(n, i), ej = basis_vector(n, j);
      const Vector a = half(ei, ej);
      const Vector b = half(ej, ei);
      for (std::size_t k = 0; k < n; ++k) {
        N1(k, i, j) = a[k] - b[k];
        N2(k, i, j) = a[k] + b[k];
      }
    }
  return {lower_last(s, N1), lower_last(s, N2)};
}

ClassMembership class_membership(const ModelInstance& m, const Tensor& F, const Tensor& N_hat) {
  const std::size_t n = m.dim();
  const auto& s = m.structure;
  ClassMembership out;
  out.is_F0 = F.is_zero();
  out.is_F3_plus_F7 = N_hat.is_zero();

  bool f7 = true;
  for (std::size_t i = 0; i < n && f7; ++i)
    for (std::size_t j = 0; j < n && f7; ++j) {
      const auto x = basis_vector(n, i), y = basis_vector(n, j);
      const Scalar fxy_xi = eval3(F, x, y, s.xi);
      // F(x,y,xi) = -F(y,x,xi) = -F(phi x, phi y, xi)
      if (!(fxy_xi + eval3(F, y, x, s.xi)).is_zero()) f7 = false;
      if (!(fxy_xi + eval3(F, s.apply_phi(x), s.apply_phi(y), s.xi)).is_zero()) f7 = false;
      for (std::size_t k = 0; k < n && f7; ++k) {
        const auto z = basis_vector(n, k);
        // F(x,y,z) = F(x,y,xi) eta(z) + F(x,z,xi) eta(y)
        const Scalar rhs = fxy_xi * s.eta[k] + eval3(F, x, z, s.xi) * s.eta[j];
        if (F(i, j, k) != rhs) f7 = false;
      }
    }
  out.is_F7 = f7;
  return out;
}

ClassMembership class_membership(const ModelInstance& m, const Connection& nabla) {
  return class_membership(m, fundamental_F(m, nabla), nijenhuis(m, nabla).N_hat);
}

Connection phiB_connection(const ModelInstance& m, const Connection& nabla) {
  const std::size_t n = m.dim();
  const auto& s = m.structure;
  const NablaStructure ns(m, nabla);
  const Scalar half(Rational(1, 2));
  return connection_from(m, [&](std::size_t i, std::size_t j) {
    const auto x = basis_vector(n, i), y = basis_vector(n, j);
    Vector v = nabla.apply(x, y);
    Vector bracket = ns.phi_derivative(x, s.apply_phi(y));
    accumulate(bracket, scaled(s.xi, ns.eta_derivative(x, y)));
    accumulate(v, scaled(bracket, half));
    accumulate(v, scaled(ns.xi_derivative(x), -s.eta_of(y)));
    return v;
  });
}

Connection phiKT_connection(const ModelInstance& m, const Connection& nabla) {
  const std::size_t n = m.dim();
  const auto& s = m.structure;
  if (!nijenhuis(m, nabla).N_hat.is_zero())
    throw PreconditionError(
        "the phiKT-connection exists only in the class F3+F7 (associated Nijenhuis tensor "
        "must vanish)");
  const NablaStructure ns(m, nabla);
  return connection_from(m, [&](std::size_t i, std::size_t j) {
    const auto x = basis_vector(n, i), y = basis_vector(n, j);
    // nabla_x y + T(x, y) / 2 with T(x,y)/2 = eta(x) nabla_y xi - eta(y) nabla_x xi + (nabla_x eta)(y) xi
    Vector v = nabla.apply(x, y);
    accumulate(v, scaled(ns.xi_derivative(y), s.eta_of(x)));
    accumulate(v, scaled(ns.xi_derivative(x), -s.eta_of(y)));
    accumulate(v, scaled(s.xi, ns.eta_derivative(x, y)));
    return v;
  });
}

Connection phi_canonical_connection(const ModelInstance& m, const Connection& phiB,
                                    const Connection& phiKT) {
  if (!class_membership(m, levi_civita(m)).is_F7)
    throw PreconditionError("the averaging construction of the phi-canonical connection needs an F7 instance");
  Tensor gamma = phiB.gamma();
  gamma *= Scalar(2L);
  gamma -= phiKT.gamma();
  return Connection(m.frame, std::move(gamma));
}

Tensor torsion(const ModelInstance& m, const Connection& D) {
  return lower_last(m.structure, D.torsion_vector());
}

Potential potential(const ModelInstance& m, const Connection& D, const Connection& nabla) {
  return {lower_last(m.structure, D.gamma() - nabla.gamma())};
}

bool NaturalityReport::natural() const {
  for (const auto& item : items)
    if (!item.holds) return false;
  return true;
}

const NaturalityReport::Item* NaturalityReport::find(std::string_view name) const {
  for (const auto& item : items)
    if (item.name == name) return &item;
  return nullptr;
}

NaturalityReport naturality_check(const ModelInstance& m, const Connection& D) {
  const std::size_t n = m.dim();
  const auto& s = m.structure;
  NaturalityReport report;
  auto add = [&report](std::string name, const Tensor& t) {
    const auto nz = t.first_nonzero();
    report.items.push_back({std::move(name), !nz.has_value(), nz});
  };
  add("D phi", covariant_derivative(D, s.phi));
  add("D xi", covariant_derivative(D, vector_tensor(s.xi)));
  add("D eta", covariant_derivative(D, covector_tensor(s.eta)));
  add("D g", covariant_derivative(D, s.g));
  add("D g~", covariant_derivative(D, s.g_tilde));

  const Connection nabla = levi_civita(m);
  const Tensor Q = potential(m, D, nabla).Q;
  const Tensor F = fundamental_F(m, nabla);
  Tensor phi_condition(n, {0, 3});
  Tensor skew_condition(n, {0, 3});
  for_each_index(n, 3, [&](const MultiIndex& xyz) {
    const auto x = basis_vector(n, xyz[0]), y = basis_vector(n, xyz[1]),
               z = basis_vector(n, xyz[2]);
    phi_condition.at(xyz) = eval3(Q, x, y, s.apply_phi(z)) - eval3(Q, x, s.apply_phi(y), z) -
                            F.at(xyz);
    skew_condition.at(xyz) = Q(xyz[0], xyz[1], xyz[2]) + Q(xyz[0], xyz[2], xyz[1]);
  });
  add("Q(x,y,phi z) - Q(x,phi y,z) = F(x,y,z)", phi_condition);
  add("Q(x,y,z) = -Q(x,z,y)", skew_condition);
  return report;
}

std::optional<MultiIndex> totally_skew_violation(const Tensor& T) {
  const std::size_t n = T.dim();
  std::optional<MultiIndex> bad;
  for_each_index(n, 3, [&](const MultiIndex& ijk) {
    if (bad) return;
    const auto i = ijk[0], j = ijk[1], k = ijk[2];
    const Scalar& t = T(i, j, k);
    if (t != -T(j, i, k) || t != -T(i, k, j) || t != -T(k, j, i) || t != T(j, k, i) ||
        t != T(k, i, j))
      bad = ijk;
  });
  return bad;
}

std::optional<MultiIndex> canonical_torsion_identity_violation(const ModelInstance& m,
                                                               const Tensor& T) {
  const std::size_t n = m.dim();
  const auto& s = m.structure;
  const Vector& xi = s.xi;
  auto alt = [&](const Vector& x, const Vector& y, const Vector& z) {
    return eval3(T, x, y, z) - eval3(T, x, z, y) - eval3(T, x, s.apply_phi(y), s.apply_phi(z)) +
           eval3(T, x, s.apply_phi(z), s.apply_phi(y));
  };
  std::optional<MultiIndex> bad;
  for_each_index(n, 3, [&](const MultiIndex& ijk) {
    if (bad) return;
    const auto x = basis_vector(n, ijk[0]), y = basis_vector(n, ijk[1]),
               z = basis_vector(n, ijk[2]);
    const Scalar ex = s.eta_of(x), ey = s.eta_of(y), ez = s.eta_of(z);
    const Scalar lhs = alt(x, y, z);
    Scalar rhs = ex * alt(xi, y, z);
    rhs += ey * (eval3(T, x, xi, z) - eval3(T, x, z, xi) - ex * eval3(T, z, xi, xi));
    rhs -= ez * (eval3(T, x, xi, y) - eval3(T, x, y, xi) - ex * eval3(T, y, xi, xi));
    if (lhs != rhs) bad = ijk;
  });
  return bad;
}

ConnectionSet build_connections(const ModelInstance& m) {
  Connection nabla = levi_civita(m);
  Connection phiB = phiB_connection(m, nabla);
  ConnectionSet set{nabla, phiB, std::nullopt, std::nullopt};
  const auto classes = class_membership(m, nabla);
  if (classes.is_F3_plus_F7) {
    set.phiKT = phiKT_connection(m, nabla);
    if (classes.is_F7) set.phi_canonical = phi_canonical_connection(m, phiB, *set.phiKT);
  }
  return set;
}

}  // namespace bmetric
