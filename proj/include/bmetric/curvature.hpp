#pragma once

#include "bmetric/algebra_model.hpp"
#include "bmetric/connection.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace bmetric {

/// (0,4) curvature R(x, y, z, w) = g(R(x, y) z, w) with
/// R(x, y) z = D_x D_y z - D_y D_x z - D_[x,y] z.
struct CurvatureTensor {
  Tensor R;
};

struct CurvatureSummary {
  Tensor rho;       // rho(x, y) = g^{ij} R(e_i, x, y, e_j)
  Scalar tau;       // g^{ij} rho(e_i, e_j)
  Tensor rho_star;  // rho*(x, y) = g^{ij} R(e_i, x, y, phi e_j)
  Scalar tau_star;  // g^{ij} rho*(e_i, e_j)
};

enum class PlaneClass { totally_real, phi_holomorphic, xi_section, generic };

std::string_view to_string(PlaneClass c);

class DegeneratePlaneError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

CurvatureTensor curvature(const ModelInstance& m, const Connection& D);

/// Which curvature-like identity fails first, if any.
struct CurvatureLikeViolation {
  std::string identity;
  MultiIndex index;
};
std::optional<CurvatureLikeViolation> curvature_like_violation(const CurvatureTensor& R);
/// Both antisymmetries and the first Bianchi sum over all basis tuples.
bool curvature_like_check(const CurvatureTensor& R);

CurvatureSummary summarize(const ModelInstance& m, const CurvatureTensor& R);

/// k = R(x, y, y, x) / (g(x, x) g(y, y) - g(x, y)^2).
/// Throws DegeneratePlaneError when the Gram determinant is zero and
/// std::domain_error when it is a non-constant polynomial.
Scalar sectional_curvature(const ModelInstance& m, const CurvatureTensor& R, const Vector& x,
                           const Vector& y);

PlaneClass classify_plane(const ModelInstance& m, const Vector& x, const Vector& y);

/// g^{ij} g^{ks} g((nabla_{e_i} phi) e_k, (nabla_{e_j} phi) e_s).
Scalar square_norm_nabla_phi(const ModelInstance& m, const Connection& nabla);

/// Full contraction with g^{-1} on every slot. Accepts (0,3) tensors and
/// vector-valued (1,2) tensors such as N(x, y), which are lowered first.
Scalar square_norm(const ModelInstance& m, const Tensor& t);

struct EinsteinReport {
  bool is_einstein = false;
  /// Nonzero components of rho - (tau / dim) g; all must vanish.
  std::vector<std::pair<MultiIndex, Scalar>> residual;
};

EinsteinReport einstein_check(const ModelInstance& m, const CurvatureSummary& summary);

struct EquivalenceCondition {
  std::string name;
  bool holds = false;
};

struct EquivalenceReport {
  std::vector<EquivalenceCondition> conditions;
  /// True when every condition has the same truth value.
  bool all_agree() const;
};

/// The seven conditions equivalent to isotropic-F0 on the family:
/// ||nabla phi|| = 0; equal scalar curvatures of the four connections;
/// isotropic nabla_{e_i} xi; isotropic N; isotropic torsions of the three
/// natural connections; vanishing xi-sectional curvatures of nabla;
/// m1 = +-m2. Requires a family instance.
EquivalenceReport isotropic_F0_equivalences(const ModelInstance& m);

/// The shorter list: ||nabla phi|| = 0; tau = tau of phiKT; isotropic
/// nabla_{e_i} xi; m1 = +-m2.
EquivalenceReport isotropic_F0_kt_equivalences(const ModelInstance& m);

/// Everything computed for one connection.
struct ConnectionAnalysis {
  std::string name;
  Connection D;
  Tensor torsion;  // (0,3)
  CurvatureTensor curvature;
  CurvatureSummary summary;
};

/// All connections and derived quantities of one model.
struct ModelAnalysis {
  ModelInstance model;
  Tensor F;
  NijenhuisTensors nijenhuis;
  ClassMembership classes;
  std::vector<ConnectionAnalysis> connections;  // nabla, phiB, then phiKT and phi-canonical if they exist
  Scalar norm_nabla_phi;

  const ConnectionAnalysis* find(std::string_view name) const;
  const ConnectionAnalysis& require(std::string_view name) const;
};

inline constexpr std::string_view kNabla = "nabla";
inline constexpr std::string_view kPhiB = "phiB";
inline constexpr std::string_view kPhiKT = "phiKT";
inline constexpr std::string_view kPhiCanonical = "phi-canonical";

ModelAnalysis analyze(const ModelInstance& m);

}  // namespace bmetric
