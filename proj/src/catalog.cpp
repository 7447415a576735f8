#include "cactus/catalog.hpp"

#include <algorithm>
#include <cmath>
#include <regex>
#include <stdexcept>

#include <json.hpp>
#include <yaml-cpp/yaml.h>

namespace cactus {

namespace detail {
std::string_view embedded_catalog_text();
std::string_view embedded_baseline_text();
}  // namespace detail

std::string_view embedded_catalog_text() { return detail::embedded_catalog_text(); }
std::string_view embedded_baseline_text() { return detail::embedded_baseline_text(); }

namespace {

std::string strip_spaces(std::string_view text) {
  std::string out;
  for (char c : text) {
    if (c != ' ' && c != '\t') out.push_back(c);
  }
  return out;
}

GraphKind kind_from_suffix(const std::string& suffix) {
  if (suffix.empty()) return GraphKind::Family;
  if (suffix == "bar") return GraphKind::Bar;
  return GraphKind::Tilde;
}

IndexRange parse_range(const std::string& text, char var, std::string_view context) {
  static const std::regex pattern(R"(^([nk])(>=|<=)(\d+)$)");
  std::smatch m;
  if (std::all_of(text.begin(), text.end(), ::isdigit) && !text.empty()) {
    const int v = std::stoi(text);
    return {v, v};
  }
  if (text.size() == 1 && text[0] == var) return {0, std::nullopt};
  if (std::regex_match(text, m, pattern) && m[1].str()[0] == var) {
    const int v = std::stoi(m[3]);
    if (m[2] == ">=") return {v, std::nullopt};
    return {0, v};
  }
  throw std::invalid_argument("bad index '" + text + "' in " + std::string(context));
}

std::pair<int, double> decimal_tolerance(const std::string& text) {
  const auto dot = text.find('.');
  const int digits = dot == std::string::npos ? 0 : static_cast<int>(text.size() - dot - 1);
  return {digits, 0.5 * std::pow(10.0, -digits)};
}

template <typename T>
T required(const YAML::Node& node, const char* key, std::string_view where) {
  if (!node[key]) {
    throw std::invalid_argument("missing '" + std::string(key) + "' in " + std::string(where));
  }
  return node[key].as<T>();
}

RationalGF parse_gf(const GfCandidate& c) {
  BivarPoly num;
  for (const auto& part : c.numerator_texts) num += parse_bivar(part);
  if (!c.offset_text.empty()) {
    const BivarPoly den = parse_bivar(c.denominator_text);
    num += parse_bivar(c.offset_text) * den;
    return make_rational_gf(std::move(num), den);
  }
  return make_rational_gf(std::move(num), parse_bivar(c.denominator_text));
}

FamilyRecord parse_family_record(const YAML::Node& node) {
  const auto id_text = required<std::string>(node, "id", "family stanza");
  const auto id = parse_family(id_text);
  if (!id) throw std::invalid_argument("unknown family id '" + id_text + "'");
  FamilyRecord rec;
  rec.spec = family_spec(*id);
  const std::string where = "family " + id_text;
  rec.letter = required<std::string>(node, "letter", where).at(0);
  rec.symbol = required<std::string>(node, "symbol", where).at(0);
  if (rec.letter != family_letter(*id) || rec.symbol != count_symbol(*id)) {
    throw std::invalid_argument("notation mismatch in " + where);
  }
  if (required<int>(node, "cycle_length", where) != rec.spec.cycle_length ||
      required<int>(node, "attach_distance", where) != rec.spec.attach_distance) {
    throw std::invalid_argument("construction parameters mismatch in " + where);
  }

  for (const auto& g : node["gf_candidates"]) {
    GfCandidate c;
    c.anchor = required<std::string>(g, "anchor", where);
    c.numerator_texts = required<std::vector<std::string>>(g, "numerators", c.anchor);
    c.denominator_text = required<std::string>(g, "denominator", c.anchor);
    if (g["offset"]) c.offset_text = g["offset"].as<std::string>();
    c.gf = parse_gf(c);
    rec.gf_candidates.push_back(std::move(c));
  }
  if (rec.gf_candidates.empty()) throw std::invalid_argument("no GF candidates in " + where);

  const auto u = node["univariate"];
  rec.univariate.anchor = required<std::string>(u, "anchor", where);
  rec.univariate.numerator_text = required<std::string>(u, "numerator", rec.univariate.anchor);
  rec.univariate.denominator_text = required<std::string>(u, "denominator", rec.univariate.anchor);
  rec.univariate.rational = make_univar_rational(parse_univar(rec.univariate.numerator_text),
                                                 parse_univar(rec.univariate.denominator_text));

  const auto r = node["recurrence"];
  rec.recurrence.anchor = required<std::string>(r, "anchor", where);
  auto& seeded = rec.recurrence.seeded;
  for (long long lag : required<std::vector<long long>>(r, "lags", rec.recurrence.anchor)) {
    seeded.rec.lags.emplace_back(lag);
  }
  seeded.rec.valid_from = required<int>(r, "valid_from", rec.recurrence.anchor);
  seeded.first_index = 1;
  for (long long v : required<std::vector<long long>>(r, "initial", rec.recurrence.anchor)) {
    seeded.initial.emplace_back(v);
  }
  if (seeded.initial.size() < seeded.rec.lags.size()) {
    throw std::invalid_argument("fewer initial values than the order in " + rec.recurrence.anchor);
  }
  eval_recurrence_range(seeded, 1);

  const auto a = node["asymptotic"];
  auto& asym = rec.asymptotic;
  asym.anchor = required<std::string>(a, "anchor", where);
  asym.stated = required<bool>(a, "stated", asym.anchor);
  if (asym.stated) {
    asym.rho_text = required<std::string>(a, "rho", asym.anchor);
    asym.constant_text = required<std::string>(a, "constant", asym.anchor);
    asym.rho = std::stod(asym.rho_text);
    asym.constant = std::stod(asym.constant_text);
    asym.rho_tolerance = decimal_tolerance(asym.rho_text).second;
    asym.constant_tolerance = decimal_tolerance(asym.constant_text).second;
    if (!(asym.rho > 0.0 && asym.rho < 1.0)) {
      throw std::invalid_argument("rho outside (0,1) in " + asym.anchor);
    }
  }

  for (const auto& b : node["boundary"]) {
    BoundaryBlock block;
    block.anchor = required<std::string>(b, "anchor", where);
    for (const auto& text : required<std::vector<std::string>>(b, "claims", block.anchor)) {
      block.claims.push_back(parse_boundary_claim(text, rec.symbol));
      if (block.claims.back().kind == GraphKind::Tilde && !supports_tilde(*id)) {
        throw std::invalid_argument("tilde claim for family without tilde graph: " + text);
      }
    }
    rec.boundary.push_back(std::move(block));
  }
  return rec;
}

}  // namespace

BoundaryClaim parse_boundary_claim(std::string_view text, char symbol) {
  static const std::regex pattern(R"(^([a-z])(bar|tilde)?\(([^,]+),([^)]+)\)=(\d+)$)");
  const std::string s = strip_spaces(text);
  std::smatch m;
  if (!std::regex_match(s, m, pattern) || m[1].str()[0] != symbol) {
    throw std::invalid_argument("bad boundary claim '" + std::string(text) + "'");
  }
  BoundaryClaim c;
  c.text = std::string(text);
  c.kind = kind_from_suffix(m[2]);
  c.n = parse_range(m[3], 'n', text);
  c.k = parse_range(m[4], 'k', text);
  c.value = BigInt(m[5].str());
  return c;
}

TransferIdentity parse_relation(std::string_view text, char symbol) {
  static const std::regex lhs_pattern(R"(^([a-z])(bar|tilde)?\(n,k\)$)");
  static const std::regex term_pattern(R"(^(\d*)([a-z])(bar|tilde)?\(n(?:-(\d+))?,k(?:-(\d+))?\)$)");
  const std::string s = strip_spaces(text);
  const auto eq = s.find('=');
  if (eq == std::string::npos) throw std::invalid_argument("relation without '=': " + s);
  TransferIdentity out;
  out.relation = std::string(text);
  std::smatch m;
  const std::string lhs = s.substr(0, eq);
  if (!std::regex_match(lhs, m, lhs_pattern) || m[1].str()[0] != symbol) {
    throw std::invalid_argument("bad relation left-hand side: " + lhs);
  }
  out.lhs = kind_from_suffix(m[2]);
  std::string rest = s.substr(eq + 1);
  std::size_t start = 0;
  while (start <= rest.size()) {
    const auto plus = rest.find('+', start);
    const std::string term = rest.substr(start, plus == std::string::npos ? std::string::npos : plus - start);
    if (!std::regex_match(term, m, term_pattern) || m[2].str()[0] != symbol) {
      throw std::invalid_argument("bad relation term '" + term + "' in " + s);
    }
    IdentityTerm t;
    t.multiplier = m[1].length() ? std::stoi(m[1]) : 1;
    t.kind = kind_from_suffix(m[3]);
    t.dn = m[4].matched ? std::stoi(m[4]) : 0;
    t.dk = m[5].matched ? std::stoi(m[5]) : 0;
    if (t.multiplier < 1 || t.multiplier > 4) {
      throw std::invalid_argument("multiplier outside 1..4 in " + s);
    }
    out.rhs.push_back(t);
    if (plus == std::string::npos) break;
    start = plus + 1;
  }
  return out;
}

Catalog parse_catalog(std::string_view yaml_text) {
  YAML::Node root;
  try {
    root = YAML::Load(std::string(yaml_text));
  } catch (const YAML::Exception& e) {
    throw std::invalid_argument(std::string("catalog YAML error: ") + e.what());
  }
  Catalog cat;
  try {
    for (const auto& f : root["families"]) cat.families.push_back(parse_family_record(f));
    for (const auto& i : root["identities"]) {
      const auto anchor = required<std::string>(i, "anchor", "identity");
      const auto family_text = required<std::string>(i, "family", anchor);
      const auto family = parse_family(family_text);
      if (!family) throw std::invalid_argument("unknown family in " + anchor);
      TransferIdentity t = parse_relation(required<std::string>(i, "relation", anchor),
                                          count_symbol(*family));
      t.anchor = anchor;
      t.family = *family;
      t.valid_n_from = required<int>(i, "valid_n_from", anchor);
      t.valid_k_from = required<int>(i, "valid_k_from", anchor);
      cat.identities.push_back(std::move(t));
    }
  } catch (const YAML::Exception& e) {
    throw std::invalid_argument(std::string("catalog schema error: ") + e.what());
  }
  for (FamilyId id : kAllFamilies) cat.family(id);
  return cat;
}

const FamilyRecord& Catalog::family(FamilyId id) const {
  for (const auto& f : families) {
    if (f.spec.id == id) return f;
  }
  throw std::invalid_argument("catalog has no record for " + std::string(family_name(id)));
}

std::set<std::string> refuted_claims(std::string_view report_json) {
  std::set<std::string> out;
  const auto j = nlohmann::json::parse(report_json, nullptr, false);
  if (j.is_discarded() || !j.contains("claims")) return out;
  for (const auto& c : j["claims"]) {
    if (c.value("verdict", "") == "REFUTED") out.insert(c.value("id", ""));
  }
  return out;
}

const Catalog& load_catalog() {
  static const Catalog catalog = [] {
    Catalog c = parse_catalog(embedded_catalog_text());
    c.disputed = refuted_claims(embedded_baseline_text());
    return c;
  }();
  return catalog;
}

std::string boundary_claim_id(const BoundaryBlock& block, const BoundaryClaim& claim) {
  return block.anchor + ": " + claim.text;
}

std::string consistency_claim_id(const GfCandidate& candidate) {
  return "Consistency of " + candidate.anchor + " with the stated recurrence";
}

}  // namespace cactus
