#pragma once

#include <vector>

#include "cactus/bigint.hpp"
#include "cactus/poly.hpp"

namespace cactus {

/// num/den with den(0, y) identically 1.
struct RationalGF {
  BivarPoly num;
  BivarPoly den;
};

/// Validates den(0, y) == 1; throws std::invalid_argument otherwise.
RationalGF make_rational_gf(BivarPoly num, BivarPoly den);

/// Univariate num/den with den[0] == 1.
struct UnivarRational {
  UnivarPoly num;
  UnivarPoly den;

  friend bool operator==(const UnivarRational&, const UnivarRational&) = default;
};

UnivarRational make_univar_rational(UnivarPoly num, UnivarPoly den);

/// Coefficients c_0..c_{n_max} of x^n in num/den, each a polynomial in y.
std::vector<UnivarPoly> series_in_x(const RationalGF& gf, int n_max);

/// Coefficients a_0..a_{n_max} of the power series of num/den.
std::vector<BigInt> series(const UnivarRational& r, int n_max);

/// Substitutes y = 1. Throws std::invalid_argument if den(0, 1) != 1.
UnivarRational specialize_y1(const RationalGF& gf);

/// Cancels the polynomial gcd of numerator and denominator, keeping den[0] == 1.
UnivarRational reduced(const UnivarRational& r);

/// a_n = sum_i lags[i] * a_{n-1-i} for all n >= valid_from.
struct LinearRecurrence {
  std::vector<BigInt> lags;
  int valid_from = 0;

  int order() const { return static_cast<int>(lags.size()); }
  friend bool operator==(const LinearRecurrence&, const LinearRecurrence&) = default;
};

/// lags = -den[1..], valid_from = deg(num) + 1.
LinearRecurrence recurrence_from_gf(const UnivarRational& r);

/// A recurrence together with the values a_{first_index}, a_{first_index+1}, ...
/// that seed it. Values at negative indices are taken as 0.
struct SeededRecurrence {
  LinearRecurrence rec;
  int first_index = 0;
  std::vector<BigInt> initial;
};

/// a_n, exact. Throws std::invalid_argument when the seed values cannot cover
/// the recurrence, std::out_of_range for n below first_index.
BigInt eval_recurrence(const SeededRecurrence& s, int n);

/// a_{first_index}..a_{n_max}.
std::vector<BigInt> eval_recurrence_range(const SeededRecurrence& s, int n_max);

/// The rational function whose series is a0, a_1, a_2, ... for a recurrence
/// seeded from index 1.
UnivarRational rational_from_recurrence(const SeededRecurrence& s, const BigInt& a0);

}  // namespace cactus
