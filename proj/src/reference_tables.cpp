#include "bmetric/reference_tables.hpp"

#include <sstream>

namespace bmetric {

namespace {

const std::string kA = "(l1^2 + l2^2 - l3^2 - l4^2)";
const std::string kB = "(m1^2 - m2^2)";
const std::string kL = "(l1*l3 + l2*l4)";
const std::string kP = "(m1*m2)";

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t");
  return std::string(s.substr(b, e - b + 1));
}

std::size_t flat_index(const MultiIndex& ix, std::size_t dim) {
  std::size_t f = 0;
  for (auto i : ix) f = f * dim + i;
  return f;
}

ReferenceTable make(std::string name, Valence valence, Closure closure,
                    std::initializer_list<std::string> rows, bool vector_rows = false) {
  ReferenceTable t{std::move(name), valence, closure, {}, vector_rows};
  const std::size_t slot_rank = vector_rows ? 2 : static_cast<std::size_t>(valence.rank());
  for (const auto& r : rows) t.rows.push_back(parse_table_row(r, slot_rank, vector_rows));
  return t;
}

std::string row(const std::string& slots, const std::string& value) { return slots + " : " + value; }

Scalar parse(const std::string& s) { return parse_scalar(s); }

}  // namespace

std::string TableMismatch::describe() const {
  return "first mismatch at " + format_index(index) + ": expected " + expected.to_string() +
         ", computed " + actual.to_string();
}

TableRow parse_table_row(std::string_view text, std::size_t rank, bool vector_row) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos)
    throw std::invalid_argument("table row without ':' in \"" + std::string(text) + "\"");
  TableRow out;

  std::istringstream left{std::string(text.substr(0, colon))};
  std::string token;
  while (left >> token) {
    Rational factor = 1;
    std::string_view t = token;
    if (!t.empty() && t.front() == '-') {
      factor = -1;
      t.remove_prefix(1);
    }
    if (const auto star = t.find('*'); star != std::string_view::npos) {
      factor *= parse_rational(std::string(t.substr(0, star)));
      t.remove_prefix(star + 1);
    }
    if (t.size() != rank)
      throw std::invalid_argument("table slot \"" + token + "\" does not have " +
                                  std::to_string(rank) + " digits");
    MultiIndex ix;
    for (char c : t) {
      if (c < '1' || c > '9') throw std::invalid_argument("bad table slot \"" + token + "\"");
      ix.push_back(static_cast<std::size_t>(c - '1'));
    }
    out.slots.emplace_back(factor, std::move(ix));
  }

  std::string rest{text.substr(colon + 1)};
  if (vector_row) {
    std::istringstream right(rest);
    std::string piece;
    while (std::getline(right, piece, ',')) out.values.push_back(parse_scalar(trim(piece)));
  } else {
    out.values.push_back(parse_scalar(trim(rest)));
  }
  return out;
}

std::optional<TableMismatch> compare(const ReferenceTable& table, const Tensor& actual) {
  const std::size_t n = actual.dim();
  const std::size_t rank = actual.rank();
  if (actual.valence() != table.valence)
    throw std::invalid_argument("table " + table.name + " has a different valence");

  Tensor expected(n, table.valence);
  std::vector<char> known(expected.size(), 0);
  auto set = [&](const MultiIndex& ix, const Scalar& v) {
    expected.at(ix) = v;
    known[flat_index(ix, n)] = 1;
  };

  for (const auto& r : table.rows)
    for (const auto& [factor, slot] : r.slots) {
      if (table.vector_rows) {
        for (std::size_t k = 0; k < r.values.size(); ++k) {
          MultiIndex ix{k};
          ix.insert(ix.end(), slot.begin(), slot.end());
          set(ix, r.values[k] / factor);
        }
      } else {
        set(slot, r.values.front() / factor);
      }
    }

  if (table.closure == Closure::symmetric) {
    for_each_index(n, 2, [&](const MultiIndex& ix) {
      const MultiIndex swapped{ix[1], ix[0]};
      if (!known[flat_index(ix, n)] && known[flat_index(swapped, n)])
        set(ix, expected.at(swapped));
    });
  } else if (table.closure == Closure::curvature) {
    bool changed = true;
    while (changed) {
      changed = false;
      for_each_index(n, 4, [&](const MultiIndex& ix) {
        if (!known[flat_index(ix, n)]) return;
        const Scalar v = expected.at(ix);
        const std::pair<MultiIndex, int> images[] = {
            {{ix[1], ix[0], ix[2], ix[3]}, -1},
            {{ix[0], ix[1], ix[3], ix[2]}, -1},
            {{ix[2], ix[3], ix[0], ix[1]}, 1},
        };
        for (const auto& [image, sign] : images)
          if (!known[flat_index(image, n)]) {
            set(image, sign < 0 ? -v : v);
            changed = true;
          }
      });
    }
  }

  std::optional<TableMismatch> bad;
  for_each_index(n, rank, [&](const MultiIndex& ix) {
    if (bad) return;
    const bool listed = known[flat_index(ix, n)];
    if (!listed && table.closure == Closure::listed_only) return;
    const Scalar want = listed ? expected.at(ix) : Scalar();
    if (want != actual.at(ix)) bad = TableMismatch{ix, want, actual.at(ix)};
  });
  return bad;
}

namespace reference {

Scalar A() { return parse(kA); }
Scalar B() { return parse(kB); }
Scalar L() { return parse(kL); }
Scalar P() { return parse(kP); }

ReferenceTable levi_civita() {
  return make("Levi-Civita connection", {1, 2}, Closure::complete,
              {
                  "11 -33 : 0, l1, 0, -l3, 0",
                  "12 -34 : -l1, 0, l3, 0, m1",
                  "13 31 : 0, l3, 0, l1, 0",
                  "14 32 : -l3, 0, -l1, 0, m2",
                  "21 -43 : 0, l2, 0, -l4, -m1",
                  "22 -44 : -l2, 0, l4, 0, 0",
                  "23 41 : 0, l4, 0, l2, -m2",
                  "24 42 : -l4, 0, -l2, 0, 0",
                  "15 51 : 0, -m1, 0, m2, 0",
                  "25 52 : m1, 0, -m2, 0, 0",
                  "35 53 : 0, -m2, 0, -m1, 0",
                  "45 54 : m2, 0, m1, 0, 0",
                  "55 : 0, 0, 0, 0, 0",
              },
              true);
}

ReferenceTable phiKT() {
  return make("phiKT connection", {1, 2}, Closure::complete,
              {
                  "11 -33 : 0, l1, 0, -l3, 0",
                  "12 -34 : -l1, 0, l3, 0, 0",
                  "13 31 : 0, l3, 0, l1, 0",
                  "14 32 : -l3, 0, -l1, 0, 0",
                  "21 -43 : 0, l2, 0, -l4, 0",
                  "22 -44 : -l2, 0, l4, 0, 0",
                  "23 41 : 0, l4, 0, l2, 0",
                  "24 42 : -l4, 0, -l2, 0, 0",
                  "1/2*51 : 0, -m1, 0, m2, 0",
                  "1/2*52 : m1, 0, -m2, 0, 0",
                  "1/2*53 : 0, -m2, 0, -m1, 0",
                  "1/2*54 : m2, 0, m1, 0, 0",
                  "15 25 35 45 55 : 0, 0, 0, 0, 0",
              },
              true);
}

ReferenceTable phiB() {
  return make("phiB connection", {1, 2}, Closure::complete,
              {
                  "11 -33 : 0, l1, 0, -l3, 0",
                  "12 -34 : -l1, 0, l3, 0, 0",
                  "13 31 : 0, l3, 0, l1, 0",
                  "14 32 : -l3, 0, -l1, 0, 0",
                  "21 -43 : 0, l2, 0, -l4, 0",
                  "22 -44 : -l2, 0, l4, 0, 0",
                  "23 41 : 0, l4, 0, l2, 0",
                  "24 42 : -l4, 0, -l2, 0, 0",
                  "51 : 0, -m1, 0, m2, 0",
                  "52 : m1, 0, -m2, 0, 0",
                  "53 : 0, -m2, 0, -m1, 0",
                  "54 : m2, 0, m1, 0, 0",
                  "15 25 35 45 55 : 0, 0, 0, 0, 0",
              },
              true);
}

ReferenceTable phi_canonical() {
  return make("phi-canonical connection", {1, 2}, Closure::complete,
              {
                  "11 -33 : 0, l1, 0, -l3, 0",
                  "12 -34 : -l1, 0, l3, 0, 0",
                  "13 31 : 0, l3, 0, l1, 0",
                  "14 32 : -l3, 0, -l1, 0, 0",
                  "21 -43 : 0, l2, 0, -l4, 0",
                  "22 -44 : -l2, 0, l4, 0, 0",
                  "23 41 : 0, l4, 0, l2, 0",
                  "24 42 : -l4, 0, -l2, 0, 0",
                  "15 25 35 45 55 51 52 53 54 : 0, 0, 0, 0, 0",
              },
              true);
}

ReferenceTable torsion_phiKT() {
  return make("phiKT torsion", {0, 3}, Closure::listed_only,
              {
                  "125 -215 -345 435 : -2*m1",
                  "145 -235 325 -415 : -2*m2",
              });
}

ReferenceTable torsion_phiB() {
  return make("phiB torsion", {0, 3}, Closure::listed_only,
              {
                  "125 -215 2*251 -345 2*354 435 -2*521 -2*534 : -2*m1",
                  "145 -235 2*253 325 -415 2*451 -2*523 -2*541 : -2*m2",
              });
}

ReferenceTable torsion_phi_canonical() {
  return make("phi-canonical torsion", {0, 3}, Closure::listed_only,
              {
                  "125 -215 251 -345 354 435 -521 -534 : -2*m1",
                  "145 -235 253 325 -415 451 -523 -541 : -2*m2",
              });
}

ReferenceTable nijenhuis() {
  // N(e_i, e_j) = c xi with g(xi, xi) = 1, so N(i, j, 5) = c.
  return make("Nijenhuis tensor", {0, 3}, Closure::complete,
              {
                  "125 -215 -345 435 : -4*m1",
                  "145 -235 325 -415 : -4*m2",
              });
}

ReferenceTable curvature_nabla() {
  return make("Levi-Civita curvature", {0, 4}, Closure::curvature,
              {
                  row("1212 3434", kA + " + 3*m1^2"),
                  row("1234", "-" + kA + " - 2*m1^2 + m2^2"),
                  row("1414 2323", "-" + kA + " + 3*m2^2"),
                  row("1423", kA + " + m1^2 - 2*m2^2"),
                  row("1214 -1223 2334 -1434", "2*" + kL + " + 3*m1*m2"),
                  row("1324", "-(m1^2 + m2^2)"),
                  row("1535 2545", "-2*m1*m2"),
                  row("1515 2525 -3535 -4545", "-m1^2 + m2^2"),
              });
}

ReferenceTable curvature_phiKT() {
  return make("phiKT curvature", {0, 4}, Closure::curvature,
              {
                  row("1212 -1234 3434", kA + " + 4*m1^2"),
                  row("1414 -1423 2323", "-" + kA + " + 4*m2^2"),
                  row("1214 -1223 2334 -1434", "2*" + kL + " + 4*m1*m2"),
              });
}

ReferenceTable curvature_phiB() {
  return make("phiB curvature", {0, 4}, Closure::curvature,
              {
                  row("1212 -1234 -3412 3434", kA + " + 2*m1^2"),
                  row("1414 -1423 -2314 2323", "-" + kA + " + 2*m2^2"),
                  row("1214 1412 -1223 -1434 -2312 2334 -3414 3423", "2*" + kL + " + 2*m1*m2"),
              });
}

ReferenceTable ricci_nabla() {
  return make("Levi-Civita Ricci tensor", {0, 2}, Closure::symmetric,
              {
                  row("11 22 -33 -44", "-2*" + kA + " - 2*" + kB),
                  row("13 24", "-4*" + kL + " - 4*" + kP),
                  row("55", "4*" + kB),
              });
}

ReferenceTable ricci_phiKT() {
  return make("phiKT Ricci tensor", {0, 2}, Closure::symmetric,
              {
                  row("11 22 -33 -44", "-2*" + kA + " - 4*" + kB),
                  row("13 24", "-4*" + kL + " - 8*" + kP),
              });
}

ReferenceTable ricci_phiB() {
  return make("phiB Ricci tensor", {0, 2}, Closure::symmetric,
              {
                  row("11 22 -33 -44", "-2*" + kA + " - 2*" + kB),
                  row("13 24 31 42", "-4*" + kL + " - 4*" + kP),
              });
}

ReferenceTable ricci_star_nabla() {
  return make("Levi-Civita associated Ricci tensor", {0, 2}, Closure::symmetric,
              {
                  row("11 22 -33 -44", "-4*" + kL + " - 6*" + kP),
                  row("55", "4*" + kP),
                  row("13 24 31 42", "2*" + kA + " + 3*" + kB),
              });
}

ReferenceTable ricci_star_phiKT() {
  return make("phiKT associated Ricci tensor", {0, 2}, Closure::symmetric,
              {
                  row("11 22 -33 -44", "-4*" + kL + " - 8*" + kP),
                  row("13 24 31 42", "2*" + kA + " + 4*" + kB),
              });
}

ReferenceTable ricci_star_phiB() {
  return make("phiB associated Ricci tensor", {0, 2}, Closure::symmetric,
              {
                  row("-13 -24 -31 -42", "-2*" + kA + " - 2*" + kB),
                  row("11 22 -33 -44", "-4*" + kL + " - 4*" + kP),
              });
}

Scalar tau_nabla() { return parse("-8*" + kA + " - 4*" + kB); }
Scalar tau_phiKT() { return parse("-8*" + kA + " - 16*" + kB); }
Scalar tau_phiB() { return parse("-8*" + kA + " - 8*" + kB); }
Scalar tau_star_nabla() { return parse("-16*" + kL + " - 20*" + kP); }
Scalar tau_star_phiKT() { return parse("-16*" + kL + " - 32*" + kP); }
Scalar tau_star_phiB() { return parse("-16*" + kL + " - 16*" + kP); }

ReferenceTable sectional_nabla() {
  return make("Levi-Civita sectional curvatures", {0, 2}, Closure::listed_only,
              {
                  row("12 34", "-" + kA + " - 3*m1^2"),
                  row("14 23", "-" + kA + " + 3*m2^2"),
                  row("13 24", "0"),
                  row("51 52 53 54", kB),
              });
}

ReferenceTable sectional_phiKT() {
  return make("phiKT sectional curvatures", {0, 2}, Closure::listed_only,
              {
                  row("12 34", "-" + kA + " - 4*m1^2"),
                  row("14 23", "-" + kA + " + 4*m2^2"),
                  row("13 24 51 52 53 54", "0"),
              });
}

ReferenceTable sectional_phiB() {
  return make("phiB sectional curvatures", {0, 2}, Closure::listed_only,
              {
                  row("12 34", "-" + kA + " - 2*m1^2"),
                  row("14 23", "-" + kA + " + 2*m2^2"),
                  row("13 24 51 52 53 54", "0"),
              });
}

PlaneList basic_planes() {
  return {{{0, 1}, {0, 3}, {1, 2}, {2, 3}}, {{0, 2}, {1, 3}}, {{4, 0}, {4, 1}, {4, 2}, {4, 3}}};
}

Scalar norm_torsion_phiKT() { return parse("16*" + kB); }
Scalar norm_torsion_phiB() { return parse("20*" + kB); }
Scalar norm_torsion_phi_canonical() { return parse("32*" + kB); }
Scalar norm_nijenhuis() { return parse("64*" + kB); }
Scalar norm_nabla_phi() { return parse("-8*" + kB); }

}  // namespace reference

}  // namespace bmetric
