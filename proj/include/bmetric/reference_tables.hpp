#pragma once

#include "bmetric/scalar.hpp"
#include "bmetric/tensor.hpp"

#include <optional>
#include <string>
#include <vector>

namespace bmetric {

/// How components that a table does not list are determined.
enum class Closure {
  listed_only,  // only listed components are claimed
  complete,     // unlisted components are zero
  symmetric,    // 2-tensor: (j,i) inherits (i,j), everything else zero
  curvature,    // (0,4): closed under both antisymmetries and pair symmetry, rest zero
};

/// One row "f1*I1 f2*I2 ... : value" meaning f_k * T[I_k] = value.
struct TableRow {
  std::vector<std::pair<Rational, MultiIndex>> slots;  // zero-based indices
  std::vector<Scalar> values;                          // one value, or dim values for vector rows
};

/// Reference component table of a tensor on the five-dimensional family.
struct ReferenceTable {
  std::string name;
  Valence valence;
  Closure closure = Closure::complete;
  std::vector<TableRow> rows;
  /// Vector rows "ij : v1, ..., v5" fill Gamma(k, i, j) = v_k / f; used for connections.
  bool vector_rows = false;
};

struct TableMismatch {
  MultiIndex index;
  Scalar expected;
  Scalar actual;
  std::string describe() const;
};

/// Row grammar: whitespace-separated slots "[-][q*]digits" then ':' then
/// comma-separated Scalar-grammar values. Digits are 1-based basis indices.
TableRow parse_table_row(std::string_view text, std::size_t rank, bool vector_row);

/// First component where `actual` disagrees with the table under its closure rule.
std::optional<TableMismatch> compare(const ReferenceTable& table, const Tensor& actual);

/// Scalar reference values.
struct ReferenceValue {
  std::string name;
  Scalar value;
};

namespace reference {

ReferenceTable levi_civita();
ReferenceTable phiKT();
ReferenceTable phiB();
ReferenceTable phi_canonical();

ReferenceTable torsion_phiKT();
ReferenceTable torsion_phiB();
ReferenceTable torsion_phi_canonical();
ReferenceTable nijenhuis();

ReferenceTable curvature_nabla();
ReferenceTable curvature_phiKT();
ReferenceTable curvature_phiB();

ReferenceTable ricci_nabla();
ReferenceTable ricci_phiKT();
ReferenceTable ricci_phiB();
ReferenceTable ricci_star_nabla();
ReferenceTable ricci_star_phiKT();
ReferenceTable ricci_star_phiB();

Scalar tau_nabla();
Scalar tau_phiKT();
Scalar tau_phiB();
Scalar tau_star_nabla();
Scalar tau_star_phiKT();
Scalar tau_star_phiB();

/// Sectional curvatures of basic planes, stored as a listed-only (0,2) table k(i, j).
ReferenceTable sectional_nabla();
ReferenceTable sectional_phiKT();
ReferenceTable sectional_phiB();

/// Basic planes (zero-based pairs) of each class.
struct PlaneList {
  std::vector<std::pair<std::size_t, std::size_t>> totally_real, phi_holomorphic, xi_section;
};
PlaneList basic_planes();

Scalar norm_torsion_phiKT();
Scalar norm_torsion_phiB();
Scalar norm_torsion_phi_canonical();
Scalar norm_nijenhuis();

/// Frozen value of ||nabla phi|| on the symbolic family.
Scalar norm_nabla_phi();

/// Shorthands l1^2 + l2^2 - l3^2 - l4^2, m1^2 - m2^2, l1*l3 + l2*l4, m1*m2.
Scalar A();
Scalar B();
Scalar L();
Scalar P();

}  // namespace reference

}  // namespace bmetric
