#include "bmetric/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <ostream>
#include <sstream>

namespace bmetric {

// ---------------------------------------------------------------------------
// Monomial

Monomial Monomial::variable(Parameter p) {
  Exponents e{};
  e[static_cast<std::size_t>(p)] = 1;
  return Monomial(e);
}

std::uint32_t Monomial::degree() const {
  return std::accumulate(exponents_.begin(), exponents_.end(), std::uint32_t{0});
}

Monomial Monomial::operator*(const Monomial& other) const {
  Exponents e;
  for (std::size_t i = 0; i < kParameterCount; ++i) e[i] = exponents_[i] + other.exponents_[i];
  return Monomial(e);
}

bool operator<(const Monomial& a, const Monomial& b) {
  const auto da = a.degree();
  const auto db = b.degree();
  if (da != db) return da < db;
  // Same degree: the monomial with the larger exponent at the first
  // differing parameter is the larger one.
  return a.exponents_ < b.exponents_;
}

// ---------------------------------------------------------------------------
// Scalar

namespace {

bool term_greater(const Scalar::Term& a, const Scalar::Term& b) { return a.first > b.first; }

// Sorts descending and merges equal monomials, dropping zeros.
std::vector<Scalar::Term> canonicalize(std::vector<Scalar::Term> terms) {
  std::sort(terms.begin(), terms.end(), term_greater);
  std::vector<Scalar::Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().first == t.first) {
      out.back().second += t.second;
    } else {
      if (!out.empty() && out.back().second == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().second == 0) out.pop_back();
  return out;
}

}  // namespace

Scalar::Scalar(long value) {
  if (value != 0) terms_.emplace_back(Monomial{}, Rational(value));
}

Scalar::Scalar(const Rational& value) {
  if (value != 0) terms_.emplace_back(Monomial{}, value);
}

Scalar Scalar::variable(Parameter p) {
  Scalar s;
  s.terms_.emplace_back(Monomial::variable(p), Rational(1));
  return s;
}

Scalar Scalar::from_terms(std::vector<Term> terms) {
  Scalar s;
  s.terms_ = canonicalize(std::move(terms));
  return s;
}

bool Scalar::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.front().first.is_constant());
}

Rational Scalar::constant_value() const {
  if (!is_constant()) throw std::domain_error("not a constant: " + to_string());
  return terms_.empty() ? Rational(0) : terms_.front().second;
}

std::uint32_t Scalar::degree() const {
  // Terms are graded-descending, so the leading term has the top degree.
  return terms_.empty() ? 0 : terms_.front().first.degree();
}

Scalar Scalar::operator-() const {
  Scalar s = *this;
  for (auto& t : s.terms_) t.second = -t.second;
  return s;
}

Scalar& Scalar::operator+=(const Scalar& other) {
  if (&other == this) return *this *= Scalar(2L);
  std::vector<Term> merged;
  merged.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  while (a != terms_.end() || b != other.terms_.end()) {
    if (b == other.terms_.end() || (a != terms_.end() && a->first > b->first)) {
      merged.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->first > a->first) {
      merged.push_back(*b++);
    } else {
      Rational c = a->second + b->second;
      if (c != 0) merged.emplace_back(a->first, std::move(c));
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& other) { return *this += -other; }

Scalar operator*(const Scalar& a, const Scalar& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Scalar::Term> products;
  products.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) products.emplace_back(ma * mb, ca * cb);
  return Scalar::from_terms(std::move(products));
}

Scalar& Scalar::operator*=(const Scalar& other) {
  *this = *this * other;
  return *this;
}

Scalar& Scalar::operator/=(const Rational& divisor) {
  if (divisor == 0) throw std::domain_error("division of a Scalar by zero");
  for (auto& t : terms_) t.second /= divisor;
  return *this;
}

bool operator==(const Scalar& a, const Scalar& b) {
  return a.terms_.size() == b.terms_.size() &&
         std::equal(a.terms_.begin(), a.terms_.end(), b.terms_.begin(),
                    [](const Scalar::Term& x, const Scalar::Term& y) {
                      return x.first == y.first && x.second == y.second;
                    });
}

namespace {

Rational power(const Rational& base, std::uint32_t exponent) {
  Rational result(1);
  for (std::uint32_t i = 0; i < exponent; ++i) result *= base;
  return result;
}

Scalar power(const Scalar& base, std::uint32_t exponent) {
  Scalar result(1L);
  for (std::uint32_t i = 0; i < exponent; ++i) result *= base;
  return result;
}

}  // namespace

Rational Scalar::evaluate(const ParameterPoint& point) const {
  Rational total(0);
  for (const auto& [m, c] : terms_) {
    Rational v = c;
    for (std::size_t i = 0; i < kParameterCount; ++i)
      if (m.exponents()[i] != 0) v *= power(point[i], m.exponents()[i]);
    total += v;
  }
  return total;
}

Scalar Scalar::substitute(const std::array<Scalar, kParameterCount>& values) const {
  Scalar total;
  for (const auto& [m, c] : terms_) {
    Scalar v(c);
    for (std::size_t i = 0; i < kParameterCount; ++i)
      if (m.exponents()[i] != 0) v *= power(values[i], m.exponents()[i]);
    total += v;
  }
  return total;
}

std::string to_string(const Rational& value) { return value.get_str(); }

std::string Scalar::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const bool negative = c < 0;
    const Rational magnitude = negative ? Rational(-c) : c;
    if (first) {
      if (negative) out << '-';
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;

    bool wrote = false;
    if (m.is_constant() || magnitude != 1) {
      out << magnitude.get_str();
      wrote = true;
    }
    for (std::size_t i = 0; i < kParameterCount; ++i) {
      const auto e = m.exponents()[i];
      if (e == 0) continue;
      if (wrote) out << '*';
      out << kParameterNames[i];
      if (e > 1) out << '^' << e;
      wrote = true;
    }
  }
  return out.str();
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

Scalar add(const Scalar& a, const Scalar& b) { return a + b; }
Scalar sub(const Scalar& a, const Scalar& b) { return a - b; }
Scalar mul(const Scalar& a, const Scalar& b) { return a * b; }
Scalar neg(const Scalar& a) { return -a; }
Rational evaluate(const Scalar& a, const ParameterPoint& point) { return a.evaluate(point); }

std::array<Scalar, kParameterCount> generators() {
  std::array<Scalar, kParameterCount> g;
  for (std::size_t i = 0; i < kParameterCount; ++i)
    g[i] = Scalar::variable(static_cast<Parameter>(i));
  return g;
}

// ---------------------------------------------------------------------------
// Parsing

ParseError::ParseError(const std::string& message, std::size_t position, std::string token)
    : std::runtime_error(message + " at position " + std::to_string(position) +
                         (token.empty() ? std::string(" (end of input)")
                                        : " (token `" + token + "`)")),
      position_(position),
      token_(std::move(token)) {}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Scalar parse_all() {
    skip_space();
    if (pos_ >= text_.size()) fail("empty expression");
    Scalar s = expression();
    skip_space();
    if (pos_ < text_.size()) fail("unexpected input");
    return s;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  std::string current_token() {
    skip_space();
    if (pos_ >= text_.size()) return {};
    std::size_t end = pos_;
    if (std::isalnum(static_cast<unsigned char>(text_[end])) || text_[end] == '_') {
      while (end < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[end])) || text_[end] == '_'))
        ++end;
    } else {
      ++end;
    }
    return std::string(text_.substr(pos_, end - pos_));
  }

  [[noreturn]] void fail(const std::string& message) {
    throw ParseError(message, pos_, current_token());
  }

  Scalar expression() {
    Scalar s = term();
    for (;;) {
      const char c = peek();
      if (c == '+') {
        ++pos_;
        s += term();
      } else if (c == '-') {
        ++pos_;
        s -= term();
      } else {
        return s;
      }
    }
  }

  Scalar term() {
    Scalar s = unary();
    for (;;) {
      const char c = peek();
      if (c == '*') {
        ++pos_;
        s *= unary();
      } else if (c == '/') {
        ++pos_;
        const std::size_t at = pos_;
        Scalar d = unary();
        if (!d.is_constant() || d.is_zero()) {
          pos_ = at;
          fail("division is only allowed by a nonzero constant");
        }
        s /= d.constant_value();
      } else {
        return s;
      }
    }
  }

  Scalar unary() {
    const char c = peek();
    if (c == '-') {
      ++pos_;
      return -unary();
    }
    if (c == '+') {
      ++pos_;
      return unary();
    }
    return power_expr();
  }

  Scalar power_expr() {
    Scalar base = atom();
    if (peek() == '^') {
      ++pos_;
      skip_space();
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected a non-negative integer exponent");
      const auto digits = text_.substr(start, pos_ - start);
      if (digits.size() > 4) {
        pos_ = start;
        fail("exponent too large");
      }
      return power(base, static_cast<std::uint32_t>(std::stoul(std::string(digits))));
    }
    return base;
  }

  Scalar atom() {
    const char c = peek();
    if (c == '(') {
      ++pos_;
      Scalar inner = expression();
      if (peek() != ')') fail("expected `)`");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (pos_ < text_.size() &&
          (std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.')) {
        pos_ = start;
        fail("malformed number");
      }
      return Scalar(Rational(mpz_class(std::string(text_.substr(start, pos_ - start)))));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::string name = current_token();
      for (std::size_t i = 0; i < kParameterCount; ++i) {
        if (name == kParameterNames[i]) {
          pos_ += name.size();
          return Scalar::variable(static_cast<Parameter>(i));
        }
      }
      fail("unknown parameter");
    }
    if (c == '\0') fail("unexpected end of expression");
    fail("unexpected character");
  }
};

}  // namespace

Scalar parse_scalar(std::string_view text) { return Parser(text).parse_all(); }

Rational parse_rational(std::string_view text) {
  const Scalar s = parse_scalar(text);
  if (!s.is_constant()) throw ParseError("expected a rational constant", 0, std::string(text));
  return s.constant_value();
}

}  // namespace bmetric
