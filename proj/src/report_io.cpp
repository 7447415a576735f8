#include <iomanip>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "cactus/verify.hpp"

namespace cactus {

namespace {

using Json = nlohmann::ordered_json;

Json big(const BigInt& v) {
  if (v >= 0 && v <= std::numeric_limits<std::uint64_t>::max()) {
    return v.convert_to<std::uint64_t>();
  }
  if (v < 0 && v >= std::numeric_limits<std::int64_t>::min()) return v.convert_to<std::int64_t>();
  return v.str();
}

Json distribution(const SizeDistribution& d) {
  Json out = Json::object();
  for (const auto& [k, v] : d.counts()) out[std::to_string(k)] = big(v);
  return out;
}

Json witness(const Witness& w) {
  Json out;
  out["family"] = std::string(family_name(w.family));
  out["graph"] = std::string(kind_name(w.kind));
  out["n"] = w.n ? Json(*w.n) : Json(nullptr);
  out["k"] = w.k ? Json(*w.k) : Json(nullptr);
  out["quantity"] = w.quantity;
  out["observed"] = w.observed;
  out["claimed"] = w.claimed;
  return out;
}

}  // namespace

std::string to_json(const VerificationReport& report) {
  Json root;
  std::size_t counts[3] = {0, 0, 0};
  Json claims = Json::array();
  for (const auto& c : report.claims) {
    ++counts[static_cast<int>(c.status)];
    Json j;
    j["id"] = c.id;
    j["kind"] = std::string(claim_kind_name(c.kind));
    j["family"] = std::string(family_name(c.family));
    j["verdict"] = std::string(status_name(c.status));
    j["witness"] = c.witness ? witness(*c.witness) : Json(nullptr);
    j["note"] = c.note;
    claims.push_back(std::move(j));
  }
  root["summary"] = {{"claims", report.claims.size()},
                     {"confirmed", counts[0]},
                     {"refuted", counts[1]},
                     {"skipped", counts[2]}};
  root["claims"] = std::move(claims);

  Json entries = Json::array();
  for (const auto& e : report.entries) {
    Json j;
    j["claim"] = e.claim;
    j["family"] = std::string(family_name(e.family));
    j["graph"] = std::string(kind_name(e.kind));
    j["n"] = e.n;
    j["status"] = std::string(status_name(e.status));
    if (e.oracle) j["oracle"] = distribution(*e.oracle);
    if (e.gf_coefficient) j["gf_coefficient"] = e.gf_coefficient->to_string('y');
    if (e.gf_total) j["gf_total"] = big(*e.gf_total);
    if (e.recurrence_total) j["recurrence_total"] = big(*e.recurrence_total);
    if (e.claimed_distribution) j["claimed"] = distribution(*e.claimed_distribution);
    if (e.first_mismatch) j["first_mismatch"] = witness(*e.first_mismatch);
    if (!e.note.empty()) j["note"] = e.note;
    entries.push_back(std::move(j));
  }
  root["entries"] = std::move(entries);
  return root.dump(2) + "\n";
}

std::string to_table(const VerificationReport& report) {
  std::ostringstream out;
  std::size_t counts[3] = {0, 0, 0};
  for (const auto& c : report.claims) {
    ++counts[static_cast<int>(c.status)];
    out << std::left << std::setw(10) << status_name(c.status) << ' ' << c.id;
    if (c.witness) out << "\n           first mismatch: " << c.witness->describe();
    if (!c.note.empty()) out << "\n           " << c.note;
    out << '\n';
  }
  out << "\n" << report.claims.size() << " claims: " << counts[0] << " confirmed, " << counts[1]
      << " refuted, " << counts[2] << " skipped\n";
  return out.str();
}

}  // namespace cactus
