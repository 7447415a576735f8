#pragma once

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cactus/bigint.hpp"

namespace cactus {

/// Dense univariate integer polynomial; coefficient i multiplies t^i.
/// Trailing zeros are trimmed, so the zero polynomial has no coefficients.
class UnivarPoly {
 public:
  UnivarPoly() = default;
  UnivarPoly(std::vector<BigInt> coefficients);
  UnivarPoly(std::initializer_list<long long> coefficients);
  static UnivarPoly constant(const BigInt& c);
  static UnivarPoly monomial(const BigInt& c, int degree);

  const std::vector<BigInt>& coefficients() const { return c_; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  BigInt operator[](int i) const;
  BigInt leading() const;
  BigInt evaluate(const BigInt& t) const;

  UnivarPoly derivative() const;
  UnivarPoly operator-() const;
  UnivarPoly& operator+=(const UnivarPoly& other);
  UnivarPoly& operator-=(const UnivarPoly& other);
  friend UnivarPoly operator+(UnivarPoly a, const UnivarPoly& b) { return a += b; }
  friend UnivarPoly operator-(UnivarPoly a, const UnivarPoly& b) { return a -= b; }
  friend UnivarPoly operator*(const UnivarPoly& a, const UnivarPoly& b);
  UnivarPoly scaled(const BigInt& factor) const;

  /// Compact form such as "1-x-x^2"; "0" for the zero polynomial.
  std::string to_string(char var = 'x') const;

  friend bool operator==(const UnivarPoly&, const UnivarPoly&) = default;

 private:
  void trim();
  std::vector<BigInt> c_;
};

/// Non-negative gcd of the coefficients; 0 for the zero polynomial.
BigInt content(const UnivarPoly& p);
/// p divided by its content, with positive leading coefficient.
UnivarPoly primitive_part(const UnivarPoly& p);
/// Pseudo-remainder of a by b (b non-zero).
UnivarPoly pseudo_remainder(const UnivarPoly& a, const UnivarPoly& b);
/// Greatest common divisor over the integers, positive leading coefficient.
UnivarPoly gcd(const UnivarPoly& a, const UnivarPoly& b);
/// Quotient a / b; throws std::domain_error unless b divides a in Z[t].
UnivarPoly exact_divide(const UnivarPoly& a, const UnivarPoly& b);

/// Sparse bivariate integer polynomial in x and y. Keys are (x-degree, y-degree).
class BivarPoly {
 public:
  using Key = std::pair<int, int>;
  using Terms = std::map<Key, BigInt>;

  BivarPoly() = default;
  explicit BivarPoly(Terms terms);
  static BivarPoly constant(const BigInt& c);
  static BivarPoly monomial(const BigInt& c, int i, int j);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  BigInt coefficient(int i, int j) const;
  int degree_x() const;
  int degree_y() const;

  /// Coefficient of x^i as a polynomial in y.
  UnivarPoly coefficient_x(int i) const;
  /// Substitutes y = 1.
  UnivarPoly at_y1() const;

  BivarPoly derivative_x() const;
  BivarPoly operator-() const;
  BivarPoly& operator+=(const BivarPoly& other);
  BivarPoly& operator-=(const BivarPoly& other);
  friend BivarPoly operator+(BivarPoly a, const BivarPoly& b) { return a += b; }
  friend BivarPoly operator-(BivarPoly a, const BivarPoly& b) { return a -= b; }
  friend BivarPoly operator*(const BivarPoly& a, const BivarPoly& b);

  /// Compact form ordered by x-degree then y-degree, e.g. "1+2xy+x^2y^2".
  std::string to_string() const;

  friend bool operator==(const BivarPoly&, const BivarPoly&) = default;

 private:
  void add_term(Key key, const BigInt& c);
  Terms terms_;
};

/// Parses an integer polynomial in x and y. Accepts signed sums of terms
/// "c*x^i*y^j" where the coefficient, the '*' separators and exponents of 1
/// are optional, exponents may be braced ("x^{2}"), factors may repeat, and
/// whitespace is ignored. Throws std::invalid_argument on malformed input.
BivarPoly parse_bivar(std::string_view text);

/// As parse_bivar but in the single variable x; a y factor is an error.
UnivarPoly parse_univar(std::string_view text);

}  // namespace cactus
