#pragma once

#include "bmetric/algebra_model.hpp"
#include "bmetric/tensor.hpp"

#include <array>
#include <optional>
#include <stdexcept>
#include <string>

namespace bmetric {

/// A left-invariant linear connection D_{e_i} e_j = sum_k Gamma(k, i, j) e_k
/// together with its torsion T(e_i, e_j) = D_{e_i} e_j - D_{e_j} e_i - [e_i, e_j].
class Connection {
 public:
  Connection(const AlgebraFrame& frame, Tensor gamma);

  const Tensor& gamma() const { return gamma_; }
  /// Gamma^k_{ij} (zero-based), the e_k-component of D_{e_i} e_j.
  const Scalar& coefficient(std::size_t i, std::size_t j, std::size_t k) const {
    return gamma_(k, i, j);
  }
  /// (1,2) torsion, T(k, i, j) = e_k-component of T(e_i, e_j).
  const Tensor& torsion_vector() const { return torsion_; }
  std::size_t dim() const { return gamma_.dim(); }

  /// D_x y for constant-coefficient (left-invariant) vectors.
  Vector apply(const Vector& x, const Vector& y) const;

  friend bool operator==(const Connection& a, const Connection& b) {
    return a.gamma_ == b.gamma_;
  }

 private:
  Tensor gamma_;
  Tensor torsion_;
};

/// Q(x, y, z) = g(D_x y - nabla_x y, z).
struct Potential {
  Tensor Q;  // (0,3)
};

class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnsupportedValenceError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Levi-Civita connection via the Koszul formula for left-invariant fields,
///   2 g(nabla_x y, z) = g([x,y], z) - g([y,z], x) + g([z,x], y).
/// Requires an invertible constant metric.
Connection levi_civita(const ModelInstance& m);

namespace detail {
/// Koszul formula with explicit signs for its three bracket terms; the
/// Levi-Civita connection uses {+1, -1, +1}. Exists for fault-injection
/// tests of the verification suite.
Connection koszul_connection(const ModelInstance& m, const std::array<int, 3>& signs);
}  // namespace detail

/// Componentwise covariant derivative adding one covariant slot, placed
/// directly after the contravariant slots:
///   (1,0) v     -> (1,1) (a; i)        = (D_{e_i} v)^a
///   (0,1) w     -> (0,2) (i, b)        = (D_{e_i} w)(e_b)
///   (1,1) A     -> (1,2) (a; i, b)     = ((D_{e_i} A) e_b)^a
///   (0,2) h     -> (0,3) (i, a, b)     = (D_{e_i} h)(e_a, e_b)
/// Throws UnsupportedValenceError for anything else.
Tensor covariant_derivative(const Connection& D, const Tensor& t);

Tensor vector_tensor(const Vector& v);
Tensor covector_tensor(const Vector& w);

/// F(x, y, z) = g((nabla_x phi) y, z).
Tensor fundamental_F(const ModelInstance& m, const Connection& nabla);

struct NijenhuisTensors {
  Tensor N;      // (0,3), N(x, y, z) = g(N(x, y), z)
  Tensor N_hat;  // (0,3)
};

/// N and N^ from their expressions through nabla phi and nabla eta.
NijenhuisTensors nijenhuis(const ModelInstance& m, const Connection& nabla);

struct ClassMembership {
  bool is_F0 = false;
  bool is_F7 = false;
  bool is_F3_plus_F7 = false;
};

/// Exact class tests over all basis tuples; raw flags, no implications.
ClassMembership class_membership(const ModelInstance& m, const Tensor& F, const Tensor& N_hat);
ClassMembership class_membership(const ModelInstance& m, const Connection& nabla);

/// D_x y = nabla_x y + 1/2 {(nabla_x phi) phi y + (nabla_x eta)(y) xi} - eta(y) nabla_x xi.
Connection phiB_connection(const ModelInstance& m, const Connection& nabla);

/// Metric connection with totally skew torsion
///   T(x, y) = 2 {eta(x) nabla_y xi - eta(y) nabla_x xi + (nabla_x eta)(y) xi},
/// built as nabla + T/2. Throws PreconditionError unless N^ = 0.
Connection phiKT_connection(const ModelInstance& m, const Connection& nabla);

/// 2 D_phiB - D_phiKT. Throws PreconditionError unless the instance is in F7.
Connection phi_canonical_connection(const ModelInstance& m, const Connection& phiB,
                                    const Connection& phiKT);

/// (0,3) torsion T(x, y, z) = g(T(x, y), z).
Tensor torsion(const ModelInstance& m, const Connection& D);

Potential potential(const ModelInstance& m, const Connection& D, const Connection& nabla);

struct NaturalityReport {
  struct Item {
    std::string name;
    bool holds = true;
    std::optional<MultiIndex> witness;  // first failing index
  };
  std::vector<Item> items;  // D phi, D xi, D eta, D g, D g~, two potential conditions

  bool natural() const;
  const Item* find(std::string_view name) const;
};

/// Evaluates D phi, D xi, D eta, D g and D g~ and the two potential
/// conditions Q(x,y,phi z) - Q(x,phi y,z) = F(x,y,z), Q(x,y,z) = -Q(x,z,y).
NaturalityReport naturality_check(const ModelInstance& m, const Connection& D);

/// First index where the (0,3) tensor is not alternating, if any.
std::optional<MultiIndex> totally_skew_violation(const Tensor& T);

/// First (x, y, z) basis tuple where the torsion identity characterizing
/// the phi-canonical connection fails, if any.
std::optional<MultiIndex> canonical_torsion_identity_violation(const ModelInstance& m,
                                                               const Tensor& T);

/// The Levi-Civita connection and whichever natural connections exist on m.
struct ConnectionSet {
  Connection nabla;
  Connection phiB;
  std::optional<Connection> phiKT;
  std::optional<Connection> phi_canonical;
};

ConnectionSet build_connections(const ModelInstance& m);

}  // namespace bmetric
