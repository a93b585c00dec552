#include "bmetric/report.hpp"

#include "bmetric/curvature.hpp"

#include <algorithm>
#include <sstream>

namespace bmetric {

using nlohmann::ordered_json;

namespace {

std::string e(std::size_t i) { return "e" + std::to_string(i + 1); }

std::string digits(std::initializer_list<std::size_t> ix) {
  std::string s;
  for (auto i : ix) s += std::to_string(i + 1);
  return s;
}

ordered_json entry_to_json(const EntryValue& v) {
  return std::visit(
      [](const auto& x) -> ordered_json {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Scalar>) {
          return x.to_string();
        } else if constexpr (std::is_same_v<T, bool>) {
          return x;
        } else if constexpr (std::is_same_v<T, Label>) {
          return ordered_json{{"label", x.text}};
        } else {
          ordered_json a = ordered_json::array();
          for (const auto& c : x) a.push_back(c.to_string());
          return a;
        }
      },
      v);
}

EntryValue entry_from_json(const ordered_json& j, const std::string& where) {
  if (j.is_boolean()) return j.get<bool>();
  if (j.is_string()) return parse_scalar(j.get<std::string>());
  if (j.is_array()) {
    Vector v;
    for (const auto& c : j) {
      if (!c.is_string()) throw SchemaError(where + ": vector components must be strings");
      v.push_back(parse_scalar(c.get<std::string>()));
    }
    return v;
  }
  if (j.is_object() && j.size() == 1 && j.contains("label") && j["label"].is_string())
    return Label{j["label"].get<std::string>()};
  throw SchemaError(where + ": unsupported entry value");
}

std::string entry_text(const EntryValue& v) {
  return std::visit(
      [](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Scalar>) {
          return x.to_string();
        } else if constexpr (std::is_same_v<T, bool>) {
          return x ? "true" : "false";
        } else if constexpr (std::is_same_v<T, Label>) {
          return x.text;
        } else {
          return format_vector(x);
        }
      },
      v);
}

Vector column(const Tensor& t, std::size_t i, std::size_t j) {
  Vector v(t.dim());
  for (std::size_t k = 0; k < t.dim(); ++k) v[k] = t(k, i, j);
  return v;
}

bool is_zero_vector(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

Section connections_section(const ModelAnalysis& a) {
  Section s{"connections", {}};
  const std::size_t n = a.model.dim();
  for (const auto& c : a.connections)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Vector v = column(c.D.gamma(), i, j);
        if (!is_zero_vector(v)) s.entries.push_back({c.name + ": D_" + e(i) + " " + e(j), v});
      }
  return s;
}

Section torsions_section(const ModelAnalysis& a) {
  Section s{"torsions", {}};
  const std::size_t n = a.model.dim();
  for (const auto& c : a.connections)
    for_each_index(n, 3, [&](const MultiIndex& ix) {
      const Scalar& v = c.torsion.at(ix);
      if (!v.is_zero()) s.entries.push_back({c.name + ": T_" + digits({ix[0], ix[1], ix[2]}), v});
    });
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vector v(n);
      for (std::size_t k = 0; k < n; ++k) v[k] = a.nijenhuis.N(i, j, k);
      // N is stored lowered; report N(e_i, e_j) as a vector.
      Vector raised = a.model.structure.g_inv.dim() ? a.model.structure.raise(v) : v;
      if (!is_zero_vector(raised))
        s.entries.push_back({"N(" + e(i) + "," + e(j) + ")", std::move(raised)});
    }
  return s;
}

Section curvature_section(const ModelAnalysis& a) {
  Section s{"curvature", {}};
  const std::size_t n = a.model.dim();
  for (const auto& c : a.connections)
    for_each_index(n, 4, [&](const MultiIndex& ix) {
      if (ix[0] >= ix[1] || ix[2] >= ix[3]) return;
      const Scalar& v = c.curvature.R.at(ix);
      if (!v.is_zero())
        s.entries.push_back({c.name + ": R_" + digits({ix[0], ix[1], ix[2], ix[3]}), v});
    });
  return s;
}

Section ricci_section(const ModelAnalysis& a) {
  Section s{"ricci", {}};
  const std::size_t n = a.model.dim();
  for (const auto& c : a.connections) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (!c.summary.rho(i, j).is_zero())
          s.entries.push_back({c.name + ": rho_" + digits({i, j}), c.summary.rho(i, j)});
    s.entries.push_back({c.name + ": tau", c.summary.tau});
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (!c.summary.rho_star(i, j).is_zero())
          s.entries.push_back({c.name + ": rho*_" + digits({i, j}), c.summary.rho_star(i, j)});
    s.entries.push_back({c.name + ": tau*", c.summary.tau_star});
  }
  return s;
}

Section sectional_section(const ModelAnalysis& a) {
  Section s{"sectional", {}};
  const auto& m = a.model;
  const std::size_t n = m.dim();
  struct Plane {
    std::size_t i, j;
    PlaneClass cls;
  };
  std::vector<Plane> planes;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto x = basis_vector(n, i), y = basis_vector(n, j);
      std::string name;
      try {
        const PlaneClass cls = classify_plane(m, x, y);
        // xi-sections are written with xi first.
        const bool swap = cls == PlaneClass::xi_section && y == m.structure.xi;
        planes.push_back({swap ? j : i, swap ? i : j, cls});
      } catch (const DegeneratePlaneError&) {
        s.entries.push_back({"alpha_" + digits({i, j}), Label{"degenerate"}});
      }
    }
  for (const auto& p : planes)
    s.entries.push_back({"alpha_" + digits({p.i, p.j}), Label{std::string(to_string(p.cls))}});
  for (const auto& c : a.connections)
    for (const auto& p : planes) {
      try {
        s.entries.push_back({c.name + ": k_" + digits({p.i, p.j}),
                             sectional_curvature(m, c.curvature, basis_vector(n, p.i),
                                                 basis_vector(n, p.j))});
      } catch (const std::domain_error&) {
        s.entries.push_back({c.name + ": k_" + digits({p.i, p.j}), Label{"undefined"}});
      }
    }
  return s;
}

Section norms_section(const ModelAnalysis& a) {
  Section s{"norms", {}};
  for (const auto& c : a.connections)
    if (c.name != kNabla)
      s.entries.push_back({"||T(" + c.name + ")||", square_norm(a.model, c.torsion)});
  s.entries.push_back({"||N||", square_norm(a.model, a.nijenhuis.N)});
  s.entries.push_back({"||nabla phi||", a.norm_nabla_phi});
  return s;
}

Section classes_section(const ModelAnalysis& a) {
  return {"classes",
          {{"F0", a.classes.is_F0}, {"F7", a.classes.is_F7}, {"F3+F7", a.classes.is_F3_plus_F7}}};
}

void add_class_verdicts(Report& r, const ClassMembership& c) {
  r.verdicts.push_back({"class: F0", c.is_F0, kExactSymbolic, ""});
  r.verdicts.push_back({"class: F7", c.is_F7, kExactSymbolic, ""});
  r.verdicts.push_back({"class: F3+F7", c.is_F3_plus_F7, kExactSymbolic, ""});
}

}  // namespace

std::string sampled_provenance(std::size_t points, std::uint64_t seed) {
  return "sampled at " + std::to_string(points) + " points, seed " + std::to_string(seed);
}

const Section* Report::find(std::string_view title) const {
  for (const auto& s : sections)
    if (s.title == title) return &s;
  return nullptr;
}

const EntryValue* Report::value(std::string_view title, std::string_view key) const {
  const Section* s = find(title);
  if (!s) return nullptr;
  for (const auto& en : s->entries)
    if (en.key == key) return &en.value;
  return nullptr;
}

bool Report::all_verdicts_pass() const {
  return std::all_of(verdicts.begin(), verdicts.end(), [](const Verdict& v) { return v.pass; });
}

ordered_json to_json(const Report& r) {
  ordered_json sections = ordered_json::object();
  for (const auto& s : r.sections) {
    ordered_json entries = ordered_json::object();
    for (const auto& en : s.entries) entries[en.key] = entry_to_json(en.value);
    sections[s.title] = std::move(entries);
  }
  ordered_json verdicts = ordered_json::array();
  for (const auto& v : r.verdicts)
    verdicts.push_back({{"name", v.name},
                        {"pass", v.pass},
                        {"provenance", v.provenance},
                        {"witness", v.witness.empty() ? ordered_json() : ordered_json(v.witness)}});
  return {{"model", r.model}, {"sections", std::move(sections)}, {"verdicts", std::move(verdicts)}};
}

Report report_from_json(const ordered_json& j) {
  if (!j.is_object() || !j.contains("model") || !j.contains("sections") || !j.contains("verdicts"))
    throw SchemaError("report needs model, sections and verdicts");
  Report r;
  r.model = j["model"];
  if (!j["sections"].is_object()) throw SchemaError("sections must be an object");
  for (const auto& [title, entries] : j["sections"].items()) {
    if (!entries.is_object()) throw SchemaError("section " + title + " must be an object");
    Section s{title, {}};
    for (const auto& [key, value] : entries.items())
      s.entries.push_back({key, entry_from_json(value, title + "/" + key)});
    r.sections.push_back(std::move(s));
  }
  if (!j["verdicts"].is_array()) throw SchemaError("verdicts must be an array");
  for (const auto& v : j["verdicts"]) {
    if (!v.is_object() || !v.contains("name") || !v.contains("pass") || !v.contains("provenance"))
      throw SchemaError("verdict needs name, pass and provenance");
    Verdict out{v["name"].get<std::string>(), v["pass"].get<bool>(),
                v["provenance"].get<std::string>(), ""};
    if (v.contains("witness") && v["witness"].is_string()) out.witness = v["witness"].get<std::string>();
    r.verdicts.push_back(std::move(out));
  }
  return r;
}

std::string render_text(const Report& r) {
  std::ostringstream out;
  out << "model: " << r.model.dump() << "\n";
  for (const auto& s : r.sections) {
    out << "\n[" << s.title << "]\n";
    for (const auto& en : s.entries) out << "  " << en.key << " = " << entry_text(en.value) << "\n";
  }
  if (!r.verdicts.empty()) {
    out << "\nverdicts:\n";
    for (const auto& v : r.verdicts) {
      out << "  " << (v.pass ? "PASS" : "FAIL") << "  " << v.name << "  (" << v.provenance << ")";
      if (!v.witness.empty()) out << "  " << v.witness;
      out << "\n";
    }
  }
  return out.str();
}

std::string format_vector(const Vector& v) {
  std::string out;
  for (std::size_t k = 0; k < v.size(); ++k) {
    const Scalar& c = v[k];
    if (c.is_zero()) continue;
    bool negative = false;
    std::string coeff;
    if (c.terms().size() == 1) {
      negative = c.terms().front().second < 0;
      const Scalar magnitude = negative ? -c : c;
      coeff = magnitude == Scalar(1) ? "" : magnitude.to_string() + "*";
    } else {
      coeff = "(" + c.to_string() + ")*";
    }
    if (out.empty())
      out = negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    out += coeff + e(k);
  }
  return out.empty() ? "0" : out;
}

Report cmd_family(const ModelInstance& m, ordered_json echo) {
  Report r;
  r.model = std::move(echo);
  const std::size_t n = m.dim();
  const auto& s = m.structure;

  Section brackets{"brackets", {}};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Vector v = column(m.frame.structure_constants, i, j);
      if (!is_zero_vector(v))
        brackets.entries.push_back({"[" + e(i) + "," + e(j) + "]", std::move(v)});
    }
  r.sections.push_back(std::move(brackets));

  Section structure{"structure", {}};
  for (std::size_t i = 0; i < n; ++i)
    structure.entries.push_back({"phi " + e(i), s.apply_phi(basis_vector(n, i))});
  structure.entries.push_back({"xi", s.xi});
  structure.entries.push_back({"eta", s.eta});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!s.g(i, j).is_zero()) structure.entries.push_back({"g_" + digits({i, j}), s.g(i, j)});
  r.sections.push_back(std::move(structure));

  const ValidationReport v = validate(m);
  Section validation{"validation", {}};
  for (const auto& c : v.checks) {
    validation.entries.push_back({c.axiom, c.passed});
    std::string witness;
    if (!c.failures.empty()) witness = "fails at " + format_index(c.failures.front());
    r.verdicts.push_back({"axiom: " + c.axiom, c.passed, kExactSymbolic, witness});
  }
  r.sections.push_back(std::move(validation));

  if (v.all_passed() && s.g_inv.dim() == n) {
    const Connection nabla = levi_civita(m);
    add_class_verdicts(r, class_membership(m, nabla));
  }
  return r;
}

const std::vector<std::string>& report_section_names() {
  static const std::vector<std::string> names = {"connections", "torsions",  "curvature", "ricci",
                                                 "sectional",   "norms",     "classes"};
  return names;
}

Report cmd_report(const ModelInstance& m, ordered_json echo, const std::vector<std::string>& sections) {
  const auto& known = report_section_names();
  for (const auto& s : sections)
    if (std::find(known.begin(), known.end(), s) == known.end())
      throw std::invalid_argument("unknown section: " + s);
  const std::vector<std::string>& wanted = sections.empty() ? known : sections;

  const ModelAnalysis a = analyze(m);
  Report r;
  r.model = std::move(echo);
  for (const auto& name : known) {
    if (std::find(wanted.begin(), wanted.end(), name) == wanted.end()) continue;
    if (name == "connections") r.sections.push_back(connections_section(a));
    if (name == "torsions") r.sections.push_back(torsions_section(a));
    if (name == "curvature") r.sections.push_back(curvature_section(a));
    if (name == "ricci") r.sections.push_back(ricci_section(a));
    if (name == "sectional") r.sections.push_back(sectional_section(a));
    if (name == "norms") r.sections.push_back(norms_section(a));
    if (name == "classes") {
      r.sections.push_back(classes_section(a));
      add_class_verdicts(r, a.classes);
    }
  }
  return r;
}

Report evaluate_report(const Report& r, const ParameterPoint& point) {
  Report out = r;
  for (auto& s : out.sections)
    for (auto& en : s.entries) {
      if (auto* sc = std::get_if<Scalar>(&en.value)) {
        *sc = Scalar(sc->evaluate(point));
      } else if (auto* v = std::get_if<Vector>(&en.value)) {
        for (auto& c : *v) c = Scalar(c.evaluate(point));
      }
    }
  return out;
}

Report cmd_eval(const ModelInstance& m, ordered_json echo, const ParameterPoint& point,
                const std::vector<std::string>& sections) {
  ordered_json at = ordered_json::object();
  for (std::size_t p = 0; p < kParameterCount; ++p)
    at[std::string(kParameterNames[p])] = to_string(point[p]);
  echo["point"] = std::move(at);
  return evaluate_report(cmd_report(m, std::move(echo), sections), point);
}

}  // namespace bmetric
