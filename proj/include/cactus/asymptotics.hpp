#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "cactus/catalog.hpp"
#include "cactus/poly.hpp"
#include "cactus/series.hpp"

namespace cactus {

/// Every floating-point tolerance used for singularity analysis.
struct AsymptoticConfig {
  double scan_step = 1e-3;
  double root_tolerance = 1e-12;
  /// |p'(rho)| below this marks a suspected multiple root.
  double derivative_tolerance = 1e-9;
  /// Ratio test: |a_{n+1}/a_n - 1/rho| must fall below this for n in 30..60.
  double ratio_tolerance = 1e-6;
  /// Relative error bound of the estimate for n >= 15.
  double relative_error_bound = 1e-2;
};

class AsymptoticError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

double evaluate(const UnivarPoly& p, double x);

/// Smallest root in (0, 1] found by a fixed-step sign scan and bisection.
/// Throws AsymptoticError if p(0) != 1, no sign change exists, or the root
/// looks multiple.
double smallest_positive_root(const UnivarPoly& p, const AsymptoticConfig& config = {});

/// C = -num(rho) / den'(rho), so that a_n ~ C / rho^(n+1).
double leading_constant(const UnivarRational& r, double rho, const AsymptoticConfig& config = {});

struct AsymptoticEstimate {
  double rho = 0.0;
  double constant = 0.0;
  std::string source;
};

/// Singularity analysis of an arbitrary rational.
AsymptoticEstimate analyse(const UnivarRational& r, std::string source,
                           const AsymptoticConfig& config = {});

/// Analysis of the family's counting series, built from its recurrence and
/// initial values with a(0) = 1.
AsymptoticEstimate family_estimate(const FamilyRecord& record, const AsymptoticConfig& config = {});

/// C / rho^(n+1), computed in log space.
double estimate_value(const AsymptoticEstimate& e, int n);

double estimate_count(FamilyId family, int n);

/// |C/rho^(n+1) / a_n - 1| for n in [n_from, n_to], computed with 50
/// significant digits so that the values stay meaningful far below double
/// precision. rho is refined by Newton steps from `estimate`.
std::vector<double> precise_relative_errors(const UnivarRational& r, const AsymptoticEstimate& estimate,
                                            const std::vector<BigInt>& exact, int n_from, int n_to);

/// BigInt to double, saturating at infinity.
double to_double(const BigInt& value);

}  // namespace cactus
