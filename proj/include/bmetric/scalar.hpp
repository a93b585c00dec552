#pragma once

#include <gmpxx.h>

#include <array>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace bmetric {

/// Exact rational coefficient. gmpxx keeps values canonical after every
/// arithmetic operation (reduced, positive denominator, zero is 0/1).
using Rational = mpq_class;

/// The six parameters of the five-dimensional family, in the fixed global
/// order used by every Monomial.
enum class Parameter : std::uint8_t { l1 = 0, l2, l3, l4, m1, m2 };

inline constexpr std::size_t kParameterCount = 6;

/// Printed names, indexed by Parameter.
inline constexpr std::array<std::string_view, kParameterCount> kParameterNames = {
    "l1", "l2", "l3", "l4", "m1", "m2"};

/// A point in parameter space.
using ParameterPoint = std::array<Rational, kParameterCount>;

class Monomial {
 public:
  using Exponents = std::array<std::uint32_t, kParameterCount>;

  Monomial() = default;
  explicit Monomial(const Exponents& exponents) : exponents_(exponents) {}

  static Monomial variable(Parameter p);

  std::uint32_t exponent(Parameter p) const {
    return exponents_[static_cast<std::size_t>(p)];
  }
  const Exponents& exponents() const { return exponents_; }
  std::uint32_t degree() const;
  bool is_constant() const { return degree() == 0; }

  Monomial operator*(const Monomial& other) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;

  /// Graded lexicographic order with l1 > l2 > l3 > l4 > m1 > m2.
  friend bool operator<(const Monomial& a, const Monomial& b);
  friend bool operator>(const Monomial& a, const Monomial& b) { return b < a; }

 private:
  Exponents exponents_{};
};

/// Element of Q[l1,l2,l3,l4,m1,m2] in canonical form: terms strictly
/// descending in the monomial order, no zero coefficients. The empty term
/// list is zero, so equality of Scalars is equality of polynomials.
class Scalar {
 public:
  using Term = std::pair<Monomial, Rational>;

  Scalar() = default;
  Scalar(long value);  // NOLINT(google-explicit-constructor)
  Scalar(const Rational& value);  // NOLINT(google-explicit-constructor)

  static Scalar variable(Parameter p);
  static Scalar from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Value of a constant Scalar; throws std::domain_error otherwise.
  Rational constant_value() const;
  std::uint32_t degree() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& other);
  Scalar& operator-=(const Scalar& other);
  Scalar& operator*=(const Scalar& other);
  /// Division by a nonzero rational constant.
  Scalar& operator/=(const Rational& divisor);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(Scalar a, const Rational& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  Rational evaluate(const ParameterPoint& point) const;
  /// Substitutes a Scalar for every parameter (specialization).
  Scalar substitute(const std::array<Scalar, kParameterCount>& values) const;

  /// Canonical textual form, e.g. `l1^2 + l2^2 - l3^2 - l4^2 + 3*m1^2`.
  std::string to_string() const;

 private:
  std::vector<Term> terms_;
};

Scalar add(const Scalar& a, const Scalar& b);
Scalar sub(const Scalar& a, const Scalar& b);
Scalar mul(const Scalar& a, const Scalar& b);
Scalar neg(const Scalar& a);
Rational evaluate(const Scalar& a, const ParameterPoint& point);
inline bool is_zero(const Scalar& a) { return a.is_zero(); }

/// The six generator Scalars l1..m2.
std::array<Scalar, kParameterCount> generators();

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position, std::string token);

  /// Zero-based character offset of the offending token.
  std::size_t position() const { return position_; }
  const std::string& token() const { return token_; }

 private:
  std::size_t position_;
  std::string token_;
};

/// Parses the Scalar grammar: sums and differences of products of integer
/// literals, parameters l1..m2, parenthesised subexpressions and `^` with a
/// non-negative integer exponent. Division is accepted only by nonzero
/// constants, which is how fractions such as `3/2*m1` are written.
Scalar parse_scalar(std::string_view text);

/// Parses a single rational literal such as `-3/4`.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& value);

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace bmetric
