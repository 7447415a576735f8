#include "cactus/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

#include <boost/integer/common_factor_rt.hpp>

namespace cactus {

namespace {

void append_term(std::ostringstream& out, bool& first, const BigInt& c,
                 const std::string& monomial) {
  if (c < 0) {
    out << '-';
  } else if (!first) {
    out << '+';
  }
  const BigInt mag = c < 0 ? BigInt(-c) : c;
  if (monomial.empty() || mag != 1) out << mag;
  out << monomial;
  first = false;
}

std::string power(char var, int e) {
  if (e == 0) return {};
  if (e == 1) return std::string(1, var);
  return std::string(1, var) + "^" + std::to_string(e);
}

}  // namespace

UnivarPoly::UnivarPoly(std::vector<BigInt> coefficients) : c_(std::move(coefficients)) { trim(); }

UnivarPoly::UnivarPoly(std::initializer_list<long long> coefficients) {
  for (long long c : coefficients) c_.emplace_back(c);
  trim();
}

UnivarPoly UnivarPoly::constant(const BigInt& c) { return UnivarPoly(std::vector<BigInt>{c}); }

UnivarPoly UnivarPoly::monomial(const BigInt& c, int degree) {
  std::vector<BigInt> coeffs(static_cast<std::size_t>(degree) + 1, 0);
  coeffs.back() = c;
  return UnivarPoly(std::move(coeffs));
}

void UnivarPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

BigInt UnivarPoly::operator[](int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
  return c_[static_cast<std::size_t>(i)];
}

BigInt UnivarPoly::leading() const { return c_.empty() ? BigInt(0) : c_.back(); }

BigInt UnivarPoly::evaluate(const BigInt& t) const {
  BigInt acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

UnivarPoly UnivarPoly::derivative() const {
  std::vector<BigInt> out;
  for (std::size_t i = 1; i < c_.size(); ++i) out.push_back(c_[i] * static_cast<long long>(i));
  return UnivarPoly(std::move(out));
}

UnivarPoly UnivarPoly::operator-() const {
  UnivarPoly out = *this;
  for (auto& c : out.c_) c = -c;
  return out;
}

UnivarPoly& UnivarPoly::operator+=(const UnivarPoly& other) {
  if (other.c_.size() > c_.size()) c_.resize(other.c_.size(), 0);
  for (std::size_t i = 0; i < other.c_.size(); ++i) c_[i] += other.c_[i];
  trim();
  return *this;
}

UnivarPoly& UnivarPoly::operator-=(const UnivarPoly& other) {
  if (other.c_.size() > c_.size()) c_.resize(other.c_.size(), 0);
  for (std::size_t i = 0; i < other.c_.size(); ++i) c_[i] -= other.c_[i];
  trim();
  return *this;
}

UnivarPoly operator*(const UnivarPoly& a, const UnivarPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> out(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  }
  return UnivarPoly(std::move(out));
}

UnivarPoly UnivarPoly::scaled(const BigInt& factor) const {
  std::vector<BigInt> out = c_;
  for (auto& c : out) c *= factor;
  return UnivarPoly(std::move(out));
}

std::string UnivarPoly::to_string(char var) const {
  if (c_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] != 0) append_term(out, first, c_[i], power(var, static_cast<int>(i)));
  }
  return out.str();
}

BigInt content(const UnivarPoly& p) {
  BigInt g = 0;
  for (const auto& c : p.coefficients()) g = boost::integer::gcd(g, BigInt(abs(c)));
  return g;
}

UnivarPoly primitive_part(const UnivarPoly& p) {
  if (p.is_zero()) return p;
  BigInt g = content(p);
  if (p.leading() < 0) g = -g;
  std::vector<BigInt> out = p.coefficients();
  for (auto& c : out) c /= g;
  return UnivarPoly(std::move(out));
}

UnivarPoly pseudo_remainder(const UnivarPoly& a, const UnivarPoly& b) {
  if (b.is_zero()) throw std::domain_error("pseudo-remainder by zero polynomial");
  UnivarPoly r = a;
  const BigInt lb = b.leading();
  const int db = b.degree();
  int steps = std::max(a.degree() - db + 1, 0);
  while (!r.is_zero() && r.degree() >= db) {
    const int shift = r.degree() - db;
    const BigInt lr = r.leading();
    r = r.scaled(lb) - (b * UnivarPoly::monomial(lr, shift));
    --steps;
  }
  for (; steps > 0; --steps) r = r.scaled(lb);
  return r;
}

UnivarPoly gcd(const UnivarPoly& a, const UnivarPoly& b) {
  if (a.is_zero()) return primitive_part(b).scaled(content(b));
  if (b.is_zero()) return primitive_part(a).scaled(content(a));
  const BigInt c = boost::integer::gcd(content(a), content(b));
  UnivarPoly x = primitive_part(a);
  UnivarPoly y = primitive_part(b);
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    UnivarPoly r = pseudo_remainder(x, y);
    x = std::move(y);
    y = primitive_part(r);
  }
  return primitive_part(x).scaled(c);
}

UnivarPoly exact_divide(const UnivarPoly& a, const UnivarPoly& b) {
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  if (a.is_zero()) return {};
  if (a.degree() < b.degree()) throw std::domain_error("inexact polynomial division");
  std::vector<BigInt> q(static_cast<std::size_t>(a.degree() - b.degree()) + 1, 0);
  UnivarPoly r = a;
  const BigInt lb = b.leading();
  while (!r.is_zero() && r.degree() >= b.degree()) {
    const int shift = r.degree() - b.degree();
    const BigInt lr = r.leading();
    if (lr % lb != 0) throw std::domain_error("inexact polynomial division");
    const BigInt factor = lr / lb;
    q[static_cast<std::size_t>(shift)] = factor;
    r -= b * UnivarPoly::monomial(factor, shift);
  }
  if (!r.is_zero()) throw std::domain_error("inexact polynomial division");
  return UnivarPoly(std::move(q));
}

BivarPoly::BivarPoly(Terms terms) {
  for (const auto& [key, c] : terms) add_term(key, c);
}

BivarPoly BivarPoly::constant(const BigInt& c) { return monomial(c, 0, 0); }

BivarPoly BivarPoly::monomial(const BigInt& c, int i, int j) {
  if (i < 0 || j < 0) throw std::invalid_argument("negative exponent");
  BivarPoly p;
  p.add_term({i, j}, c);
  return p;
}

void BivarPoly::add_term(Key key, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

BigInt BivarPoly::coefficient(int i, int j) const {
  auto it = terms_.find({i, j});
  return it == terms_.end() ? BigInt(0) : it->second;
}

int BivarPoly::degree_x() const { return terms_.empty() ? -1 : terms_.rbegin()->first.first; }

int BivarPoly::degree_y() const {
  int d = -1;
  for (const auto& [key, c] : terms_) d = std::max(d, key.second);
  return d;
}

UnivarPoly BivarPoly::coefficient_x(int i) const {
  std::vector<BigInt> out;
  for (auto it = terms_.lower_bound({i, 0}); it != terms_.end() && it->first.first == i; ++it) {
    const auto j = static_cast<std::size_t>(it->first.second);
    if (out.size() <= j) out.resize(j + 1, 0);
    out[j] = it->second;
  }
  return UnivarPoly(std::move(out));
}

UnivarPoly BivarPoly::at_y1() const {
  std::vector<BigInt> out;
  for (const auto& [key, c] : terms_) {
    const auto i = static_cast<std::size_t>(key.first);
    if (out.size() <= i) out.resize(i + 1, 0);
    out[i] += c;
  }
  return UnivarPoly(std::move(out));
}

BivarPoly BivarPoly::derivative_x() const {
  BivarPoly out;
  for (const auto& [key, c] : terms_) {
    if (key.first > 0) out.add_term({key.first - 1, key.second}, c * key.first);
  }
  return out;
}

BivarPoly BivarPoly::operator-() const {
  BivarPoly out = *this;
  for (auto& [key, c] : out.terms_) c = -c;
  return out;
}

BivarPoly& BivarPoly::operator+=(const BivarPoly& other) {
  for (const auto& [key, c] : other.terms_) add_term(key, c);
  return *this;
}

BivarPoly& BivarPoly::operator-=(const BivarPoly& other) {
  for (const auto& [key, c] : other.terms_) add_term(key, -c);
  return *this;
}

BivarPoly operator*(const BivarPoly& a, const BivarPoly& b) {
  BivarPoly out;
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) {
      out.add_term({ka.first + kb.first, ka.second + kb.second}, ca * cb);
    }
  }
  return out;
}

std::string BivarPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [key, c] : terms_) {
    append_term(out, first, c, power('x', key.first) + power('y', key.second));
  }
  return out.str();
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) {
    bool gap = false;
    for (char ch : text) {
      const auto c = static_cast<unsigned char>(ch);
      if (std::isspace(c)) {
        gap = !s_.empty();
        continue;
      }
      if (gap && std::isdigit(c) && std::isdigit(static_cast<unsigned char>(s_.back()))) {
        s_.push_back(ch);
        pos_ = s_.size() - 1;
        fail("digits separated by whitespace");
      }
      gap = false;
      s_.push_back(ch);
    }
  }

  BivarPoly parse() {
    if (s_.empty()) fail("empty polynomial");
    BivarPoly out;
    bool first = true;
    while (pos_ < s_.size()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = get() == '-' ? -1 : 1;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      out += term(sign);
      first = false;
    }
    return out;
  }

 private:
  BivarPoly term(int sign) {
    BigInt coefficient = sign;
    bool any = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coefficient *= number();
      any = true;
    }
    int i = 0;
    int j = 0;
    while (pos_ < s_.size()) {
      if (peek() == '*') {
        if (!any) fail("term starts with '*'");
        ++pos_;
        if (peek() != 'x' && peek() != 'y') fail("expected variable after '*'");
      }
      if (peek() == 'x' || peek() == 'y') {
        const char var = get();
        int e = 1;
        if (peek() == '^') {
          ++pos_;
          if (peek() == '{') {
            ++pos_;
            e = small_number();
            if (get() != '}') fail("unbalanced brace in exponent");
          } else {
            e = small_number();
          }
        }
        (var == 'x' ? i : j) += e;
        any = true;
      } else {
        break;
      }
    }
    if (!any) fail("empty term");
    return BivarPoly::monomial(coefficient, i, j);
  }

  BigInt number() {
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected digits");
    return BigInt(s_.substr(start, pos_ - start));
  }

  int small_number() {
    const BigInt n = number();
    if (n > 10000) fail("exponent too large");
    return n.convert_to<int>();
  }

  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  char get() { return pos_ < s_.size() ? s_[pos_++] : '\0'; }

  [[noreturn]] void fail(const std::string& why) const {
    throw std::invalid_argument("polynomial parse error at offset " + std::to_string(pos_) +
                                " in \"" + s_ + "\": " + why);
  }

  std::string s_;
  std::size_t pos_ = 0;
};

}  // namespace

BivarPoly parse_bivar(std::string_view text) { return Parser(text).parse(); }

UnivarPoly parse_univar(std::string_view text) {
  const BivarPoly p = parse_bivar(text);
  if (p.degree_y() > 0) {
    throw std::invalid_argument("univariate polynomial contains y: " + std::string(text));
  }
  return p.at_y1();
}

}  // namespace cactus
