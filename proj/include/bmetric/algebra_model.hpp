#pragma once

#include "bmetric/scalar.hpp"
#include "bmetric/tensor.hpp"

#include <json.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace bmetric {

/// Lie algebra in a fixed basis: [e_i, e_j] = sum_k C(k, i, j) e_k.
struct AlgebraFrame {
  std::size_t dim = 0;
  Tensor structure_constants;  // valence (1,2)

  Vector bracket(const Vector& x, const Vector& y) const;
  friend bool operator==(const AlgebraFrame&, const AlgebraFrame&) = default;
};

/// Almost contact B-metric structure (phi, xi, eta, g) with the derived
/// inverse metric and associated metric. g must have constant entries so
/// that its inverse stays polynomial.
struct StructureTensors {
  Tensor phi;  // (1,1), phi(k, i) = (phi e_i)^k
  Vector xi;
  Vector eta;
  Tensor g;        // (0,2)
  Tensor g_inv;    // (2,0); empty when g is degenerate or non-constant
  Tensor g_tilde;  // (0,2)

  Vector apply_phi(const Vector& v) const;
  Scalar eta_of(const Vector& v) const;
  Scalar metric(const Vector& x, const Vector& y) const;
  /// Index-raising: the vector g^{-1}(w, .) for a covector w.
  Vector raise(const Vector& covector) const;

  friend bool operator==(const StructureTensors&, const StructureTensors&) = default;
};

struct ModelInstance {
  AlgebraFrame frame;
  StructureTensors structure;
  /// Parameter values (l1, l2, l3, l4, m1, m2) when the instance is a member
  /// of the five-dimensional family, possibly specialized.
  std::optional<std::array<Scalar, kParameterCount>> family;

  std::size_t dim() const { return frame.dim; }
  /// Equality of the geometric data; the family tag is not compared.
  friend bool operator==(const ModelInstance& a, const ModelInstance& b) {
    return a.frame == b.frame && a.structure == b.structure;
  }
};

struct AxiomCheck {
  std::string axiom;
  bool passed = true;
  /// Zero-based index tuples where the axiom fails.
  std::vector<MultiIndex> failures;
};

struct ValidationReport {
  std::vector<AxiomCheck> checks;

  bool all_passed() const;
  const AxiomCheck* find(std::string_view axiom) const;
  /// One line per failing axiom, indices printed 1-based.
  std::vector<std::string> failure_messages() const;
};

class ModelError : public std::runtime_error {
 public:
  explicit ModelError(const std::string& message) : std::runtime_error(message) {}
};

/// Raised for malformed input documents (missing fields, wrong shapes).
class SchemaError : public ModelError {
 public:
  using ModelError::ModelError;
};

/// Raised when a document or constructor produces a structure that fails
/// one or more axioms.
class AxiomError : public ModelError {
 public:
  AxiomError(const std::string& message, ValidationReport report)
      : ModelError(message), report_(std::move(report)) {}
  const ValidationReport& report() const { return report_; }

 private:
  ValidationReport report_;
};

/// Builds a model without checking any axiom. g_inv is filled only when g
/// is constant and invertible; g_tilde is always filled.
ModelInstance assemble_model(AlgebraFrame frame, Tensor phi, Vector xi, Vector eta, Tensor g);

/// The five-dimensional family with brackets
///   [e1,e2] = -[e3,e4] = -l1 e1 - l2 e2 + l3 e3 + l4 e4 + 2 m1 e5,
///   [e1,e4] = -[e2,e3] = -l3 e1 - l4 e2 - l1 e3 - l2 e4 + 2 m2 e5,
/// all other brackets zero, phi e1 = e3, phi e2 = e4, xi = e5 and
/// g = diag(1, 1, -1, -1, 1). Throws AxiomError if validation fails.
ModelInstance new_family(const Scalar& l1, const Scalar& l2, const Scalar& l3, const Scalar& l4,
                         const Scalar& m1, const Scalar& m2);
ModelInstance new_family(const std::array<Scalar, kParameterCount>& parameters);
/// The family over the generator Scalars.
ModelInstance symbolic_family();

ValidationReport validate(const ModelInstance& m);

/// g~(x, y) = g(x, phi y) + eta(x) eta(y).
Tensor associated_metric(const ModelInstance& m);

/// Reads the JSON input document; throws SchemaError or AxiomError.
ModelInstance load_model(const nlohmann::json& document);
ModelInstance load_model_file(const std::string& path);

/// Writes a model in the input-document format.
nlohmann::json model_to_json(const ModelInstance& m);

/// Inverse of a square matrix of constant Scalars; nullopt if singular.
std::optional<Tensor> invert_constant_metric(const Tensor& g);

}  // namespace bmetric
