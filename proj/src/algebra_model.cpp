#include "bmetric/algebra_model.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace bmetric {

Vector AlgebraFrame::bracket(const Vector& x, const Vector& y) const {
  Vector out(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim; ++j) {
      if (y[j].is_zero()) continue;
      const Scalar xy = x[i] * y[j];
      for (std::size_t k = 0; k < dim; ++k)
        if (!structure_constants(k, i, j).is_zero()) out[k] += xy * structure_constants(k, i, j);
    }
  }
  return out;
}

Vector StructureTensors::apply_phi(const Vector& v) const {
  const std::size_t n = v.size();
  Vector out(n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (!phi(k, i).is_zero() && !v[i].is_zero()) out[k] += phi(k, i) * v[i];
  return out;
}

Scalar StructureTensors::eta_of(const Vector& v) const {
  Scalar s;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!eta[i].is_zero() && !v[i].is_zero()) s += eta[i] * v[i];
  return s;
}

Scalar StructureTensors::metric(const Vector& x, const Vector& y) const {
  Scalar s;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < y.size(); ++j)
      if (!y[j].is_zero() && !g(i, j).is_zero()) s += x[i] * g(i, j) * y[j];
  }
  return s;
}

Vector StructureTensors::raise(const Vector& covector) const {
  const std::size_t n = covector.size();
  Vector out(n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (!g_inv(k, i).is_zero() && !covector[i].is_zero()) out[k] += g_inv(k, i) * covector[i];
  return out;
}

bool ValidationReport::all_passed() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

const AxiomCheck* ValidationReport::find(std::string_view axiom) const {
  for (const auto& c : checks)
    if (c.axiom == axiom) return &c;
  return nullptr;
}

std::vector<std::string> ValidationReport::failure_messages() const {
  std::vector<std::string> out;
  for (const auto& c : checks) {
    if (c.passed) continue;
    std::ostringstream msg;
    msg << c.axiom << " fails at";
    const std::size_t shown = std::min<std::size_t>(c.failures.size(), 5);
    for (std::size_t i = 0; i < shown; ++i) msg << ' ' << format_index(c.failures[i]);
    if (c.failures.size() > shown) msg << " ... (" << c.failures.size() << " total)";
    out.push_back(msg.str());
  }
  return out;
}

std::optional<Tensor> invert_constant_metric(const Tensor& g) {
  const std::size_t n = g.dim();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!g(i, j).is_constant()) return std::nullopt;
      a[i][j] = g(i, j).constant_value();
    }
    a[i][n + i] = 1;
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(a[pivot], a[col]);
    const Rational inv = 1 / a[col][col];
    for (auto& v : a[col]) v *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const Rational f = a[r][col];
      for (std::size_t c = 0; c < 2 * n; ++c) a[r][c] -= f * a[col][c];
    }
  }
  Tensor inv(n, {2, 0});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = Scalar(a[i][n + j]);
  return inv;
}

namespace {

Tensor compute_associated_metric(const StructureTensors& s, std::size_t n) {
  Tensor gt(n, {0, 2});
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Scalar v = s.eta[i] * s.eta[j];
      for (std::size_t k = 0; k < n; ++k)
        if (!s.g(i, k).is_zero() && !s.phi(k, j).is_zero()) v += s.g(i, k) * s.phi(k, j);
      gt(i, j) = v;
    }
  }
  return gt;
}

}  // namespace

ModelInstance assemble_model(AlgebraFrame frame, Tensor phi, Vector xi, Vector eta, Tensor g) {
  const std::size_t n = frame.dim;
  if (frame.structure_constants.dim() != n || phi.dim() != n || xi.size() != n ||
      eta.size() != n || g.dim() != n)
    throw SchemaError("structure tensors do not match the algebra dimension");
  if (!(frame.structure_constants.valence() == Valence{1, 2}) || !(phi.valence() == Valence{1, 1}) ||
      !(g.valence() == Valence{0, 2}))
    throw SchemaError("structure tensors have the wrong valence");

  ModelInstance m;
  m.frame = std::move(frame);
  m.structure.phi = std::move(phi);
  m.structure.xi = std::move(xi);
  m.structure.eta = std::move(eta);
  m.structure.g = std::move(g);
  if (auto inv = invert_constant_metric(m.structure.g)) m.structure.g_inv = std::move(*inv);
  m.structure.g_tilde = compute_associated_metric(m.structure, n);
  return m;
}

ValidationReport validate(const ModelInstance& m) {
  const std::size_t n = m.dim();
  const auto& C = m.frame.structure_constants;
  const auto& s = m.structure;
  ValidationReport report;

  auto check = [&report](std::string name) -> AxiomCheck& {
    report.checks.push_back(AxiomCheck{std::move(name), true, {}});
    return report.checks.back();
  };
  auto fail = [](AxiomCheck& c, MultiIndex idx) {
    c.passed = false;
    c.failures.push_back(std::move(idx));
  };

  {
    auto& c = check("odd_dimension");
    if (n % 2 == 0) fail(c, {});
  }
  {
    auto& c = check("antisymmetry");
    for_each_index(n, 3, [&](const MultiIndex& ijk) {
      const auto i = ijk[0], j = ijk[1], k = ijk[2];
      if (i > j) return;
      if (!(C(k, i, j) + C(k, j, i)).is_zero()) fail(c, {i, j, k});
    });
  }
  {
    // sum over cyclic (i,j,k) of [[e_i,e_j],e_k] = 0, for i < j < k.
    auto& c = check("jacobi");
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        for (std::size_t k = j + 1; k < n; ++k) {
          const auto ei = basis_vector(n, i), ej = basis_vector(n, j), ek = basis_vector(n, k);
          const auto a = m.frame.bracket(m.frame.bracket(ei, ej), ek);
          const auto b = m.frame.bracket(m.frame.bracket(ej, ek), ei);
          const auto d = m.frame.bracket(m.frame.bracket(ek, ei), ej);
          for (std::size_t l = 0; l < n; ++l)
            if (!(a[l] + b[l] + d[l]).is_zero()) {
              fail(c, {i, j, k});
              break;
            }
        }
  }
  {
    auto& c = check("phi_xi_zero");
    const auto v = s.apply_phi(s.xi);
    for (std::size_t k = 0; k < n; ++k)
      if (!v[k].is_zero()) fail(c, {k});
  }
  {
    // phi^2 = -Id + eta (x) xi
    auto& c = check("phi_squared");
    for (std::size_t i = 0; i < n; ++i) {
      const auto v = s.apply_phi(s.apply_phi(basis_vector(n, i)));
      for (std::size_t k = 0; k < n; ++k) {
        Scalar expected = s.eta[i] * s.xi[k];
        if (i == k) expected -= Scalar(1L);
        if (v[k] != expected) fail(c, {i, k});
      }
    }
  }
  {
    auto& c = check("eta_phi_zero");
    for (std::size_t i = 0; i < n; ++i)
      if (!s.eta_of(s.apply_phi(basis_vector(n, i))).is_zero()) fail(c, {i});
  }
  {
    auto& c = check("eta_xi_one");
    if (s.eta_of(s.xi) != Scalar(1L)) fail(c, {});
  }
  {
    auto& c = check("metric_symmetric");
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (s.g(i, j) != s.g(j, i)) fail(c, {i, j});
  }
  {
    // g(phi x, phi y) = -g(x, y) + eta(x) eta(y)
    auto& c = check("b_metric_compatibility");
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const auto x = basis_vector(n, i), y = basis_vector(n, j);
        const Scalar lhs = s.metric(s.apply_phi(x), s.apply_phi(y));
        const Scalar rhs = -s.g(i, j) + s.eta[i] * s.eta[j];
        if (lhs != rhs) fail(c, {i, j});
      }
  }
  {
    auto& c = check("metric_nondegenerate");
    if (s.g_inv.dim() != n) fail(c, {});
  }
  return report;
}

Tensor associated_metric(const ModelInstance& m) {
  return compute_associated_metric(m.structure, m.dim());
}

ModelInstance new_family(const std::array<Scalar, kParameterCount>& p) {
  constexpr std::size_t n = 5;
  const auto& [l1, l2, l3, l4, m1, m2] = p;
  Tensor C(n, {1, 2});
  auto set = [&C](std::size_t i, std::size_t j, const std::array<Scalar, n>& v) {
    for (std::size_t k = 0; k < n; ++k) {
      C(k, i, j) = v[k];
      C(k, j, i) = -v[k];
    }
  };
  const std::array<Scalar, n> b12 = {-l1, -l2, l3, l4, Scalar(2L) * m1};
  const std::array<Scalar, n> b14 = {-l3, -l4, -l1, -l2, Scalar(2L) * m2};
  std::array<Scalar, n> minus_b12, minus_b14;
  for (std::size_t k = 0; k < n; ++k) {
    minus_b12[k] = -b12[k];
    minus_b14[k] = -b14[k];
  }
  set(0, 1, b12);
  set(2, 3, minus_b12);
  set(0, 3, b14);
  set(1, 2, minus_b14);

  Tensor phi(n, {1, 1});
  phi(2, 0) = Scalar(1L);   // phi e1 = e3
  phi(3, 1) = Scalar(1L);   // phi e2 = e4
  phi(0, 2) = Scalar(-1L);  // phi e3 = -e1
  phi(1, 3) = Scalar(-1L);  // phi e4 = -e2

  Tensor g(n, {0, 2});
  const long diag[n] = {1, 1, -1, -1, 1};
  for (std::size_t i = 0; i < n; ++i) g(i, i) = Scalar(diag[i]);

  ModelInstance m = assemble_model(AlgebraFrame{n, std::move(C)}, std::move(phi),
                                   basis_vector(n, 4), basis_vector(n, 4), std::move(g));
  m.family = p;
  auto report = validate(m);
  if (!report.all_passed()) {
    const auto msgs = report.failure_messages();
    throw AxiomError("family instance violates axioms: " + msgs.front(), std::move(report));
  }
  return m;
}

ModelInstance new_family(const Scalar& l1, const Scalar& l2, const Scalar& l3, const Scalar& l4,
                         const Scalar& m1, const Scalar& m2) {
  return new_family(std::array<Scalar, kParameterCount>{l1, l2, l3, l4, m1, m2});
}

ModelInstance symbolic_family() { return new_family(generators()); }

// ---------------------------------------------------------------------------
// JSON input documents

namespace {

using nlohmann::json;

class DocumentReader {
 public:
  explicit DocumentReader(const json& doc) : doc_(doc) {}

  ModelInstance read() {
    if (!doc_.is_object()) throw SchemaError("model document must be a JSON object");
    read_parameters();

    const json& dim_field = require("dim");
    if (!dim_field.is_number_integer() || dim_field.get<long long>() <= 0)
      throw SchemaError("dim must be a positive integer");
    n_ = static_cast<std::size_t>(dim_field.get<long long>());
    if (n_ % 2 == 0) throw SchemaError("dimension must be odd");

    Tensor C = read_brackets();
    Tensor phi = read_matrix("phi", {1, 1});
    Vector xi = read_vector("xi");
    Vector eta = read_vector("eta");
    Tensor g = read_matrix("g", {0, 2});
    return assemble_model(AlgebraFrame{n_, std::move(C)}, std::move(phi), std::move(xi),
                          std::move(eta), std::move(g));
  }

 private:
  const json& doc_;
  std::size_t n_ = 0;
  std::set<std::string> declared_;

  const json& require(const char* key) const {
    if (!doc_.contains(key)) throw SchemaError(std::string("missing field: ") + key);
    return doc_.at(key);
  }

  void read_parameters() {
    if (!doc_.contains("parameters")) return;
    const json& p = doc_.at("parameters");
    if (!p.is_array()) throw SchemaError("parameters must be an array of names");
    for (const auto& name : p) {
      if (!name.is_string()) throw SchemaError("parameters must be an array of names");
      const auto s = name.get<std::string>();
      bool known = false;
      for (const auto& k : kParameterNames) known |= (k == s);
      if (!known) throw SchemaError("unknown parameter name: " + s);
      declared_.insert(s);
    }
  }

  Scalar read_scalar(const json& v, const std::string& where) const {
    Scalar s;
    if (v.is_number_integer()) {
      s = Scalar(Rational(std::to_string(v.get<long long>())));
    } else if (v.is_string()) {
      try {
        s = parse_scalar(v.get<std::string>());
      } catch (const ParseError& e) {
        throw SchemaError(where + ": " + e.what());
      }
    } else {
      throw SchemaError(where + ": entries must be integers or Scalar strings");
    }
    for (const auto& [mono, coeff] : s.terms())
      for (std::size_t i = 0; i < kParameterCount; ++i)
        if (mono.exponents()[i] != 0 && !declared_.count(std::string(kParameterNames[i])))
          throw SchemaError(where + ": undeclared parameter " +
                            std::string(kParameterNames[i]));
    return s;
  }

  Vector read_vector(const char* key) const {
    const json& v = require(key);
    if (!v.is_array() || v.size() != n_)
      throw SchemaError(std::string(key) + " must have " + std::to_string(n_) + " entries");
    Vector out(n_);
    for (std::size_t i = 0; i < n_; ++i)
      out[i] = read_scalar(v[i], std::string(key) + "[" + std::to_string(i + 1) + "]");
    return out;
  }

  Tensor read_matrix(const char* key, Valence valence) const {
    const json& v = require(key);
    if (!v.is_array() || v.size() != n_)
      throw SchemaError(std::string(key) + " must be a " + std::to_string(n_) + "x" +
                        std::to_string(n_) + " matrix");
    Tensor t(n_, valence);
    for (std::size_t r = 0; r < n_; ++r) {
      if (!v[r].is_array() || v[r].size() != n_)
        throw SchemaError(std::string(key) + " must be a " + std::to_string(n_) + "x" +
                          std::to_string(n_) + " matrix");
      for (std::size_t c = 0; c < n_; ++c)
        t(r, c) = read_scalar(v[r][c], std::string(key) + "[" + std::to_string(r + 1) + "][" +
                                           std::to_string(c + 1) + "]");
    }
    return t;
  }

  // Listed brackets set C(., i, j). The mirror (j, i) is filled by
  // antisymmetry unless the document lists it too, in which case both are
  // kept as written and validation decides.
  Tensor read_brackets() const {
    Tensor C(n_, {1, 2});
    if (!doc_.contains("brackets")) return C;
    const json& list = doc_.at("brackets");
    if (!list.is_array()) throw SchemaError("brackets must be an array");
    std::set<std::pair<std::size_t, std::size_t>> listed;
    std::vector<std::tuple<std::size_t, std::size_t, Vector>> entries;
    for (const auto& b : list) {
      if (!b.is_object() || !b.contains("i") || !b.contains("j") || !b.contains("coeffs"))
        throw SchemaError("each bracket needs i, j and coeffs");
      if (!b.at("i").is_number_integer() || !b.at("j").is_number_integer())
        throw SchemaError("bracket indices must be integers");
      const auto i = b.at("i").get<long long>();
      const auto j = b.at("j").get<long long>();
      if (i < 1 || j < 1 || static_cast<std::size_t>(i) > n_ || static_cast<std::size_t>(j) > n_)
        throw SchemaError("bracket index out of range 1.." + std::to_string(n_));
      const json& coeffs = b.at("coeffs");
      if (!coeffs.is_array() || coeffs.size() != n_)
        throw SchemaError("bracket coeffs must have " + std::to_string(n_) + " entries");
      const auto where = "bracket [e" + std::to_string(i) + ",e" + std::to_string(j) + "]";
      Vector v(n_);
      for (std::size_t k = 0; k < n_; ++k) v[k] = read_scalar(coeffs[k], where);
      const auto ii = static_cast<std::size_t>(i - 1), jj = static_cast<std::size_t>(j - 1);
      if (!listed.insert({ii, jj}).second) throw SchemaError(where + " listed twice");
      entries.emplace_back(ii, jj, std::move(v));
    }
    for (const auto& [i, j, v] : entries) {
      for (std::size_t k = 0; k < n_; ++k) {
        C(k, i, j) = v[k];
        if (i != j && !listed.count({j, i})) C(k, j, i) = -v[k];
      }
    }
    return C;
  }
};

}  // namespace

ModelInstance load_model(const nlohmann::json& document) {
  ModelInstance m = DocumentReader(document).read();
  auto report = validate(m);
  if (!report.all_passed()) {
    const auto msgs = report.failure_messages();
    std::string joined;
    for (const auto& s : msgs) joined += (joined.empty() ? "" : "; ") + s;
    throw AxiomError("model violates axioms: " + joined, std::move(report));
  }
  if (m.dim() == 5) {
    const auto family = symbolic_family();
    if (m == family) m.family = family.family;
  }
  return m;
}

ModelInstance load_model_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot open model file: " + path);
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::parse_error& e) {
    throw SchemaError(std::string("invalid JSON in ") + path + ": " + e.what());
  }
  return load_model(doc);
}

nlohmann::json model_to_json(const ModelInstance& m) {
  using nlohmann::json;
  const std::size_t n = m.dim();
  json doc = json::object();
  doc["dim"] = n;

  std::set<std::size_t> used;
  auto note = [&used](const Scalar& s) {
    for (const auto& [mono, c] : s.terms())
      for (std::size_t i = 0; i < kParameterCount; ++i)
        if (mono.exponents()[i] != 0) used.insert(i);
    return s.to_string();
  };

  json brackets = json::array();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      bool nonzero = false;
      json coeffs = json::array();
      for (std::size_t k = 0; k < n; ++k) {
        nonzero |= !m.frame.structure_constants(k, i, j).is_zero();
        coeffs.push_back(note(m.frame.structure_constants(k, i, j)));
      }
      if (nonzero) brackets.push_back({{"i", i + 1}, {"j", j + 1}, {"coeffs", coeffs}});
    }
  auto matrix = [&](const Tensor& t) {
    json rows = json::array();
    for (std::size_t r = 0; r < n; ++r) {
      json row = json::array();
      for (std::size_t c = 0; c < n; ++c) row.push_back(note(t(r, c)));
      rows.push_back(row);
    }
    return rows;
  };
  auto vec = [&](const Vector& v) {
    json out = json::array();
    for (const auto& s : v) out.push_back(note(s));
    return out;
  };
  doc["brackets"] = brackets;
  doc["phi"] = matrix(m.structure.phi);
  doc["xi"] = vec(m.structure.xi);
  doc["eta"] = vec(m.structure.eta);
  doc["g"] = matrix(m.structure.g);

  json params = json::array();
  for (const auto i : used) params.push_back(std::string(kParameterNames[i]));
  doc["parameters"] = params;
  return doc;
}

}  // namespace bmetric
