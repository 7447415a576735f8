#include "cactus/asymptotics.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include <boost/multiprecision/cpp_bin_float.hpp>

namespace cactus {

double to_double(const BigInt& value) { return value.convert_to<double>(); }

double evaluate(const UnivarPoly& p, double x) {
  double acc = 0.0;
  const auto& c = p.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + to_double(*it);
  return acc;
}

double smallest_positive_root(const UnivarPoly& p, const AsymptoticConfig& config) {
  if (p[0] != 1) throw AsymptoticError("polynomial " + p.to_string() + " has p(0) != 1");
  double lo = 0.0;
  double f_lo = 1.0;
  const int steps = static_cast<int>(std::ceil(1.0 / config.scan_step));
  for (int i = 1; i <= steps; ++i) {
    const double hi = std::min(1.0, i * config.scan_step);
    const double f_hi = evaluate(p, hi);
    if (f_hi == 0.0 || (f_hi < 0.0) != (f_lo < 0.0)) {
      double a = lo;
      double b = hi;
      if (f_hi != 0.0) {
        while (b - a >= config.root_tolerance) {
          const double mid = 0.5 * (a + b);
          const double f_mid = evaluate(p, mid);
          if (f_mid == 0.0) {
            a = b = mid;
            break;
          }
          if ((f_mid < 0.0) == (f_lo < 0.0)) {
            a = mid;
          } else {
            b = mid;
          }
        }
      } else {
        a = hi;
      }
      const double root = f_hi == 0.0 ? hi : 0.5 * (a + b);
      if (std::abs(evaluate(p.derivative(), root)) < config.derivative_tolerance) {
        std::ostringstream msg;
        msg << "suspected multiple root of " << p.to_string() << " near " << root;
        throw AsymptoticError(msg.str());
      }
      return root;
    }
    lo = hi;
    f_lo = f_hi;
  }
  throw AsymptoticError("no sign change of " + p.to_string() + " in (0, 1]");
}

double leading_constant(const UnivarRational& r, double rho, const AsymptoticConfig& config) {
  const double slope = evaluate(r.den.derivative(), rho);
  if (std::abs(slope) < config.derivative_tolerance) {
    throw AsymptoticError("denominator derivative vanishes at rho; pole is not simple");
  }
  return -evaluate(r.num, rho) / slope;
}

AsymptoticEstimate analyse(const UnivarRational& r, std::string source,
                           const AsymptoticConfig& config) {
  const double rho = smallest_positive_root(r.den, config);
  return {rho, leading_constant(r, rho, config), std::move(source)};
}

AsymptoticEstimate family_estimate(const FamilyRecord& record, const AsymptoticConfig& config) {
  const UnivarRational r = reduced(rational_from_recurrence(record.recurrence.seeded, 1));
  return analyse(r, record.recurrence.anchor + " with a(0) = 1", config);
}

double estimate_value(const AsymptoticEstimate& e, int n) {
  return std::exp(std::log(e.constant) - (n + 1.0) * std::log(e.rho));
}

std::vector<double> precise_relative_errors(const UnivarRational& r, const AsymptoticEstimate& estimate,
                                            const std::vector<BigInt>& exact, int n_from, int n_to) {
  using Real = boost::multiprecision::cpp_bin_float_50;
  auto eval = [](const UnivarPoly& p, const Real& x) {
    Real acc = 0;
    for (int i = p.degree(); i >= 0; --i) acc = acc * x + Real(p[i]);
    return acc;
  };
  const UnivarPoly dden = r.den.derivative();
  Real rho = estimate.rho;
  for (int step = 0; step < 8; ++step) rho -= eval(r.den, rho) / eval(dden, rho);
  const Real constant = -eval(r.num, rho) / eval(dden, rho);
  std::vector<double> out;
  for (int n = n_from; n <= n_to; ++n) {
    const Real value = constant / boost::multiprecision::pow(rho, n + 1);
    out.push_back(static_cast<double>(boost::multiprecision::abs(value / Real(exact.at(static_cast<std::size_t>(n))) - 1)));
  }
  return out;
}

double estimate_count(FamilyId family, int n) {
  return estimate_value(family_estimate(load_catalog().family(family)), n);
}

}  // namespace cactus
