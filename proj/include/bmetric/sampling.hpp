#pragma once

#include "bmetric/scalar.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace bmetric {

using Rng = std::mt19937_64;

/// Numerator in [-9, 9], denominator in [1, 5].
Rational random_rational(Rng& rng);
Rational random_nonzero_rational(Rng& rng);
ParameterPoint random_point(Rng& rng);

/// Up to `max_terms` terms of total degree <= `max_degree`.
Scalar random_scalar(Rng& rng, int max_terms = 4, int max_degree = 3);

/// Parameter tuple on a named stratum of the family.
struct SamplePoint {
  ParameterPoint point;
  std::string stratum;
};

/// Strata, visited round-robin:
///   generic, m1 = m2, m1 = -m2, F0 (m1 = m2 = 0),
///   Einstein slice (m1 m2 = -L, m1^2 - m2^2 = -A/3),
///   Ricci-flat candidates (A = 0, m1 = +-m2, m1 m2 = -L),
///   flat lambda with F0 (A = L = 0, m = 0), flat lambda off F0 (A = L = 0),
///   associated-Ricci slice (A = 0, m1 = +-m2, m1 m2 = -2/5 L),
///   associated-scalar slices m1 m2 = nu L for nu in {-4/5, -1, -1/2}.
/// Here A = l1^2 + l2^2 - l3^2 - l4^2 and L = l1 l3 + l2 l4.
std::vector<SamplePoint> sample_points(std::uint64_t seed, std::size_t count);

/// Lambdas with the requested A and L, via (l1 + i l3)^2 + (l2 + i l4)^2 = A + 2iL
/// solved over the Gaussian rationals.
std::array<Rational, 4> lambdas_with(const Rational& A, const Rational& L, Rng& rng);

}  // namespace bmetric
