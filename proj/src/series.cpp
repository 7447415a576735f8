#include "cactus/series.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace cactus {

RationalGF make_rational_gf(BivarPoly num, BivarPoly den) {
  if (den.coefficient_x(0) != UnivarPoly{1}) {
    throw std::invalid_argument("denominator constant term in x must be 1, got " +
                                den.coefficient_x(0).to_string('y'));
  }
  return {std::move(num), std::move(den)};
}

UnivarRational make_univar_rational(UnivarPoly num, UnivarPoly den) {
  if (den[0] != 1) {
    throw std::invalid_argument("denominator constant term must be 1 in " + den.to_string());
  }
  return {std::move(num), std::move(den)};
}

std::vector<UnivarPoly> series_in_x(const RationalGF& gf, int n_max) {
  if (gf.den.coefficient_x(0) != UnivarPoly{1}) {
    throw std::invalid_argument("denominator constant term in x must be 1");
  }
  std::vector<UnivarPoly> d;
  for (int j = 0; j <= gf.den.degree_x(); ++j) d.push_back(gf.den.coefficient_x(j));
  std::vector<UnivarPoly> c;
  for (int n = 0; n <= n_max; ++n) {
    UnivarPoly cn = gf.num.coefficient_x(n);
    for (int j = 1; j < static_cast<int>(d.size()) && j <= n; ++j) {
      if (!d[static_cast<std::size_t>(j)].is_zero()) {
        cn -= d[static_cast<std::size_t>(j)] * c[static_cast<std::size_t>(n - j)];
      }
    }
    c.push_back(std::move(cn));
  }
  return c;
}

std::vector<BigInt> series(const UnivarRational& r, int n_max) {
  if (r.den[0] != 1) throw std::invalid_argument("denominator constant term must be 1");
  std::vector<BigInt> a;
  for (int n = 0; n <= n_max; ++n) {
    BigInt an = r.num[n];
    for (int j = 1; j <= r.den.degree() && j <= n; ++j) {
      an -= r.den[j] * a[static_cast<std::size_t>(n - j)];
    }
    a.push_back(std::move(an));
  }
  return a;
}

UnivarRational specialize_y1(const RationalGF& gf) {
  UnivarPoly den = gf.den.at_y1();
  if (den[0] != 1) {
    throw std::invalid_argument("denominator at x=0, y=1 is " + den[0].str() + ", not 1");
  }
  return {gf.num.at_y1(), std::move(den)};
}

UnivarRational reduced(const UnivarRational& r) {
  if (r.num.is_zero()) return {UnivarPoly{}, UnivarPoly{1}};
  const UnivarPoly g = gcd(r.num, r.den);
  UnivarPoly num = exact_divide(r.num, g);
  UnivarPoly den = exact_divide(r.den, g);
  const BigInt d0 = den[0];
  if (d0 == -1) {
    num = -num;
    den = -den;
  } else if (d0 != 1) {
    return r;
  }
  return {std::move(num), std::move(den)};
}

LinearRecurrence recurrence_from_gf(const UnivarRational& r) {
  if (r.den[0] != 1) throw std::invalid_argument("denominator constant term must be 1");
  LinearRecurrence out;
  for (int i = 1; i <= r.den.degree(); ++i) out.lags.push_back(-r.den[i]);
  out.valid_from = r.num.degree() + 1;
  return out;
}

namespace {

void check_seed(const SeededRecurrence& s) {
  const int order = s.rec.order();
  const int covered = s.first_index + static_cast<int>(s.initial.size());
  if (covered < s.rec.valid_from) {
    throw std::invalid_argument("initial values end at index " + std::to_string(covered - 1) +
                                " but the recurrence only holds from " +
                                std::to_string(s.rec.valid_from));
  }
  if (std::max(0, covered - order) < s.first_index) {
    throw std::invalid_argument("recurrence of order " + std::to_string(order) +
                                " needs values below the first seeded index");
  }
}

}  // namespace

std::vector<BigInt> eval_recurrence_range(const SeededRecurrence& s, int n_max) {
  check_seed(s);
  std::vector<BigInt> a = s.initial;
  const int first = s.first_index;
  auto value = [&](int idx) -> BigInt {
    if (idx < 0) return 0;
    return a[static_cast<std::size_t>(idx - first)];
  };
  for (int n = first + static_cast<int>(a.size()); n <= n_max; ++n) {
    BigInt an = 0;
    for (int i = 0; i < s.rec.order(); ++i) an += s.rec.lags[static_cast<std::size_t>(i)] * value(n - 1 - i);
    a.push_back(std::move(an));
  }
  if (n_max < first) return {};
  a.resize(static_cast<std::size_t>(n_max - first + 1));
  return a;
}

BigInt eval_recurrence(const SeededRecurrence& s, int n) {
  if (n < s.first_index) {
    throw std::out_of_range("index " + std::to_string(n) + " precedes the first seeded index " +
                            std::to_string(s.first_index));
  }
  return eval_recurrence_range(s, n).back();
}

UnivarRational rational_from_recurrence(const SeededRecurrence& s, const BigInt& a0) {
  if (s.first_index != 1) throw std::invalid_argument("expected a recurrence seeded from index 1");
  const int covered = 1 + static_cast<int>(s.initial.size());
  std::vector<BigInt> a{a0};
  for (const auto& v : eval_recurrence_range(s, covered - 1)) a.push_back(v);
  std::vector<BigInt> den{1};
  for (const auto& lag : s.rec.lags) den.push_back(-lag);
  const UnivarPoly d(den);
  const UnivarPoly product = d * UnivarPoly(a);
  std::vector<BigInt> num;
  for (int i = 0; i < covered; ++i) num.push_back(product[i]);
  return {UnivarPoly(std::move(num)), d};
}

}  // namespace cactus
