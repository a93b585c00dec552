#pragma once

#include "bmetric/algebra_model.hpp"
#include "bmetric/scalar.hpp"
#include "bmetric/tensor.hpp"

#include <json.hpp>

#include <string>
#include <variant>
#include <vector>

namespace bmetric {

struct Label {
  std::string text;
  friend bool operator==(const Label&, const Label&) = default;
};

using EntryValue = std::variant<Scalar, bool, Label, Vector>;

struct Entry {
  std::string key;
  EntryValue value;
  friend bool operator==(const Entry&, const Entry&) = default;
};

struct Section {
  std::string title;
  std::vector<Entry> entries;
  friend bool operator==(const Section&, const Section&) = default;
};

inline const std::string kExactSymbolic = "exact symbolic";
std::string sampled_provenance(std::size_t points, std::uint64_t seed);

struct Verdict {
  std::string name;
  bool pass = false;
  std::string provenance;  // kExactSymbolic or sampled_provenance(...)
  std::string witness;     // empty when there is nothing to show
  friend bool operator==(const Verdict&, const Verdict&) = default;
};

struct Report {
  nlohmann::ordered_json model;
  std::vector<Section> sections;
  std::vector<Verdict> verdicts;

  const Section* find(std::string_view title) const;
  /// Value of `key` in section `title`, or nullptr.
  const EntryValue* value(std::string_view title, std::string_view key) const;
  bool all_verdicts_pass() const;

  friend bool operator==(const Report&, const Report&) = default;
};

/// `{"model": ..., "sections": {title: {key: value}}, "verdicts": [...]}`. Scalars are
/// Scalar-grammar strings, vectors arrays of them, labels `{"label": text}`.
nlohmann::ordered_json to_json(const Report& r);
/// Inverse of to_json; throws SchemaError or ParseError on malformed input.
Report report_from_json(const nlohmann::ordered_json& j);

std::string render_text(const Report& r);

/// Linear combination such as `-l1*e1 - l2*e2 + 2*m1*e5`.
std::string format_vector(const Vector& v);

/// Brackets, structure tensors, axiom verdicts and class verdicts.
Report cmd_family(const ModelInstance& m, nlohmann::ordered_json echo);

/// connections, torsions, curvature, ricci, sectional, norms, classes.
const std::vector<std::string>& report_section_names();

/// Throws std::invalid_argument("unknown section: <name>").
Report cmd_report(const ModelInstance& m, nlohmann::ordered_json echo,
                  const std::vector<std::string>& sections);

/// Replaces every Scalar of a report by its value at `point`.
Report evaluate_report(const Report& r, const ParameterPoint& point);

/// Symbolic report of `m` evaluated at `point`.
Report cmd_eval(const ModelInstance& m, nlohmann::ordered_json echo, const ParameterPoint& point,
                const std::vector<std::string>& sections);

}  // namespace bmetric
