#include "bmetric/sampling.hpp"

namespace bmetric {

namespace {

struct Gaussian {
  Rational re, im;
};

Gaussian operator+(const Gaussian& a, const Gaussian& b) { return {a.re + b.re, a.im + b.im}; }
Gaussian operator-(const Gaussian& a, const Gaussian& b) { return {a.re - b.re, a.im - b.im}; }

Gaussian divide(const Gaussian& a, const Gaussian& b) {
  const Rational n = b.re * b.re + b.im * b.im;
  return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
}

long uniform(Rng& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

}  // namespace

Rational random_rational(Rng& rng) {
  Rational r(uniform(rng, -9, 9), uniform(rng, 1, 5));
  r.canonicalize();
  return r;
}

Rational random_nonzero_rational(Rng& rng) {
  for (;;) {
    Rational r = random_rational(rng);
    if (r != 0) return r;
  }
}

ParameterPoint random_point(Rng& rng) {
  ParameterPoint p;
  for (auto& v : p) v = random_rational(rng);
  return p;
}

Scalar random_scalar(Rng& rng, int max_terms, int max_degree) {
  std::vector<Scalar::Term> terms;
  const long count = uniform(rng, 0, max_terms);
  for (long t = 0; t < count; ++t) {
    Monomial mono;
    const long degree = uniform(rng, 0, max_degree);
    for (long d = 0; d < degree; ++d)
      mono = mono * Monomial::variable(static_cast<Parameter>(uniform(rng, 0, kParameterCount - 1)));
    terms.emplace_back(mono, random_rational(rng));
  }
  return Scalar::from_terms(std::move(terms));
}

std::array<Rational, 4> lambdas_with(const Rational& A, const Rational& L, Rng& rng) {
  const Gaussian c{A, 2 * L};
  Gaussian a;
  do {
    a = {random_rational(rng), random_rational(rng)};
  } while (a.re == 0 && a.im == 0);
  const Gaussian b = divide(c, a);
  const Gaussian s = a + b, d = a - b;
  // z1 = (a + b) / 2, z2 = (a - b) / (2i)
  const Gaussian z1{s.re / 2, s.im / 2};
  const Gaussian z2{d.im / 2, -d.re / 2};
  return {z1.re, z2.re, z1.im, z2.im};
}

std::vector<SamplePoint> sample_points(std::uint64_t seed, std::size_t count) {
  Rng rng(seed);
  std::vector<SamplePoint> out;
  out.reserve(count);

  auto with = [](const std::array<Rational, 4>& l, const Rational& m1, const Rational& m2) {
    return ParameterPoint{l[0], l[1], l[2], l[3], m1, m2};
  };
  auto plus_minus = [&](const Rational& t) { return uniform(rng, 0, 1) ? t : Rational(-t); };

  for (std::size_t k = 0; out.size() < count; ++k) {
    SamplePoint s;
    switch (k % 12) {
      case 0:
        s = {random_point(rng), "generic"};
        break;
      case 1: {
        s = {random_point(rng), "m1 = m2"};
        s.point[5] = s.point[4];
        break;
      }
      case 2: {
        s = {random_point(rng), "m1 = -m2"};
        s.point[5] = -s.point[4];
        break;
      }
      case 3: {
        s = {random_point(rng), "F0"};
        s.point[4] = s.point[5] = 0;
        break;
      }
      case 4: {
        const Rational m1 = random_rational(rng), m2 = random_rational(rng);
        const Rational A = -3 * (m1 * m1 - m2 * m2), L = -(m1 * m2);
        s = {with(lambdas_with(A, L, rng), m1, m2), "Einstein"};
        break;
      }
      case 5: {
        const Rational m1 = random_nonzero_rational(rng), m2 = plus_minus(m1);
        s = {with(lambdas_with(0, -(m1 * m2), rng), m1, m2), "Ricci-flat candidate"};
        break;
      }
      case 6:
        s = {with(lambdas_with(0, 0, rng), 0, 0), "flat"};
        break;
      case 7:
        s = {with(lambdas_with(0, 0, rng), random_nonzero_rational(rng), random_rational(rng)),
             "A = L = 0 off F0"};
        break;
      case 8: {
        const Rational m1 = random_nonzero_rational(rng), m2 = plus_minus(m1);
        const Rational L = -Rational(5, 2) * m1 * m2;
        s = {with(lambdas_with(0, L, rng), m1, m2), "associated Ricci slice"};
        break;
      }
      default: {
        static const Rational nus[] = {Rational(-4, 5), Rational(-1), Rational(-1, 2)};
        const Rational& nu = nus[k % 12 - 9];
        const Rational m1 = random_nonzero_rational(rng), m2 = random_nonzero_rational(rng);
        s = {with(lambdas_with(random_rational(rng), m1 * m2 / nu, rng), m1, m2),
             "m1 m2 = " + to_string(nu) + " L"};
        break;
      }
    }
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace bmetric
