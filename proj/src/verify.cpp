#include "cactus/verify.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <set>
#include <sstream>

namespace cactus {

std::string_view status_name(Status status) {
  switch (status) {
    case Status::Confirmed: return "CONFIRMED";
    case Status::Refuted: return "REFUTED";
    case Status::Skipped: return "SKIPPED";
  }
  return "SKIPPED";
}

std::string_view claim_kind_name(ClaimKind kind) {
  switch (kind) {
    case ClaimKind::BivariateGf: return "bivariate-gf";
    case ClaimKind::GfRecurrenceConsistency: return "gf-recurrence-consistency";
    case ClaimKind::UnivariateGf: return "univariate-gf";
    case ClaimKind::Recurrence: return "recurrence";
    case ClaimKind::Asymptotic: return "asymptotic";
    case ClaimKind::Growth: return "growth";
    case ClaimKind::Boundary: return "boundary";
    case ClaimKind::Identity: return "identity";
  }
  return "boundary";
}

std::string Witness::describe() const {
  std::ostringstream out;
  if (n) out << cactus::describe(GraphKey{family, kind, *n}) << ' ';
  if (k) out << "k=" << *k << ' ';
  out << quantity << ": observed " << observed << ", claimed " << claimed;
  return out.str();
}

bool VerificationReport::any_refuted() const {
  return std::any_of(claims.begin(), claims.end(),
                     [](const ClaimVerdict& c) { return c.status == Status::Refuted; });
}

const ClaimVerdict* VerificationReport::find(std::string_view id) const {
  for (const auto& c : claims) {
    if (c.id == id) return &c;
  }
  return nullptr;
}

void VerificationReport::append(VerificationReport other) {
  for (auto& e : other.entries) entries.push_back(std::move(e));
  for (auto& c : other.claims) claims.push_back(std::move(c));
}

int default_n_max(FamilyId family) {
  switch (family) {
    case FamilyId::Triangular: return 15;
    case FamilyId::Diamond:
    case FamilyId::Square: return 12;
    case FamilyId::Pentagonal:
    case FamilyId::MetaPentagonal: return 10;
    case FamilyId::MetaHexagonal:
    case FamilyId::ParaHexagonal:
    case FamilyId::OrthoHexagonal: return 8;
  }
  return 8;
}

namespace {

std::string fixed(double v, int digits = 6) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(digits) << v;
  return out.str();
}

ReportEntry make_entry(std::string claim, FamilyId family, GraphKind kind, int n) {
  ReportEntry e;
  e.claim = std::move(claim);
  e.family = family;
  e.kind = kind;
  e.n = n;
  return e;
}

std::string sci(double v) {
  std::ostringstream out;
  out << std::scientific << std::setprecision(2) << v;
  return out.str();
}

// Smallest k >= k_from where the two count functions disagree.
template <typename Left, typename Right>
std::optional<int> first_k_mismatch(const std::set<int>& ks, int k_from, Left left, Right right) {
  for (int k : ks) {
    if (k >= k_from && left(k) != right(k)) return k;
  }
  return std::nullopt;
}

std::set<int> keys_of(const SizeDistribution& d) {
  std::set<int> ks;
  for (const auto& [k, v] : d.counts()) ks.insert(k);
  return ks;
}

std::set<int> keys_of(const UnivarPoly& p) {
  std::set<int> ks;
  for (int k = 0; k <= p.degree(); ++k) {
    if (p[k] != 0) ks.insert(k);
  }
  return ks;
}

// Verdict of a claim from its entries: refuted by the first refuted entry,
// confirmed when at least one comparison was made and none failed.
ClaimVerdict aggregate(std::string id, ClaimKind kind, FamilyId family,
                       const std::vector<ReportEntry>& entries) {
  ClaimVerdict v{std::move(id), kind, family, Status::Skipped, std::nullopt, {}};
  std::optional<int> lo;
  std::optional<int> hi;
  std::string skipped;
  for (const auto& e : entries) {
    if (e.status == Status::Refuted && v.status != Status::Refuted) {
      v.status = Status::Refuted;
      v.witness = e.first_mismatch;
    }
    if (e.status == Status::Confirmed && v.status == Status::Skipped) v.status = Status::Confirmed;
    if (e.status != Status::Skipped) {
      lo = lo ? std::min(*lo, e.n) : e.n;
      hi = hi ? std::max(*hi, e.n) : e.n;
    } else if (skipped.empty()) {
      skipped = e.note;
    }
  }
  std::ostringstream note;
  if (lo) note << "checked n=" << *lo << ".." << *hi;
  if (!skipped.empty()) note << (lo ? "; " : "") << skipped;
  if (entries.empty()) note << "no applicable n";
  v.note = note.str();
  return v;
}

}  // namespace

Verifier::Verifier(const Catalog& catalog, VerifyOptions options)
    : catalog_(catalog), options_(std::move(options)), cache_(options_.oracle, options_.workers) {}

int Verifier::family_n_max(FamilyId family) const {
  return options_.n_max.value_or(default_n_max(family));
}

void Verifier::prefetch_family(FamilyId family, int n_max) {
  std::vector<GraphKey> keys;
  for (int n = 0; n <= std::max(n_max, options_.boundary_n_max); ++n) {
    keys.push_back({family, GraphKind::Family, n});
  }
  for (int n = 0; n <= options_.boundary_n_max; ++n) {
    keys.push_back({family, GraphKind::Bar, n});
    if (supports_tilde(family)) keys.push_back({family, GraphKind::Tilde, n});
  }
  // Largest graphs first keeps the pool busy until the end.
  std::reverse(keys.begin(), keys.end());
  cache_.prefetch(keys);
}

void Verifier::prefetch_identity(const TransferIdentity& identity, std::optional<int> n_max) {
  std::set<GraphKey> keys;
  for (int n = identity.valid_n_from; !n_max || n <= *n_max; ++n) {
    const GraphKey lhs{identity.family, identity.lhs, n};
    if (build_graph(lhs).vertex_count() > options_.identity_vertex_cap) break;
    keys.insert(lhs);
    for (const auto& t : identity.rhs) {
      if (n - t.dn >= 0) keys.insert({identity.family, t.kind, n - t.dn});
    }
  }
  std::vector<GraphKey> ordered(keys.rbegin(), keys.rend());
  cache_.prefetch(ordered);
}

VerificationReport Verifier::verify_family(FamilyId family, int n_max) {
  const FamilyRecord& rec = catalog_.family(family);
  prefetch_family(family, n_max);
  VerificationReport report;

  // Oracle distribution of the family graph, or the reason it is missing.
  auto oracle_at = [&](GraphKind kind, int n, std::string& why) -> const SizeDistribution* {
    try {
      return &cache_.get({family, kind, n});
    } catch (const VertexLimitExceeded& e) {
      why = std::string("skipped from n=") + std::to_string(n) + ": " + e.what();
      return nullptr;
    }
  };

  for (const auto& cand : rec.gf_candidates) {
    std::vector<ReportEntry> entries;
    const auto coeffs = series_in_x(cand.gf, n_max);
    for (int n = 0; n <= n_max; ++n) {
      ReportEntry e = make_entry(cand.anchor, family, GraphKind::Family, n);
      e.gf_coefficient = coeffs[static_cast<std::size_t>(n)];
      const SizeDistribution* oracle = oracle_at(GraphKind::Family, n, e.note);
      if (oracle) {
        e.oracle = *oracle;
        const auto& c = *e.gf_coefficient;
        std::set<int> ks = keys_of(*oracle);
        for (int k : keys_of(c)) ks.insert(k);
        const auto k = first_k_mismatch(ks, 0, [&](int i) { return oracle->at(i); },
                                        [&](int i) { return c[i]; });
        e.status = k ? Status::Refuted : Status::Confirmed;
        if (k) {
          e.first_mismatch = Witness{family, GraphKind::Family, n, *k, "count",
                                     oracle->at(*k).str(), c[*k].str()};
        }
      }
      entries.push_back(std::move(e));
    }
    report.claims.push_back(aggregate(cand.anchor, ClaimKind::BivariateGf, family, entries));
    for (auto& e : entries) report.entries.push_back(std::move(e));
  }

  const auto& seeded = rec.recurrence.seeded;
  const auto rec_values = eval_recurrence_range(seeded, std::max(n_max, options_.consistency_n_max));
  auto rec_total = [&](int n) { return rec_values[static_cast<std::size_t>(n - seeded.first_index)]; };

  for (const auto& cand : rec.gf_candidates) {
    const UnivarRational spec = specialize_y1(cand.gf);
    const UnivarRational red = reduced(spec);
    const LinearRecurrence derived = recurrence_from_gf(red);
    const auto totals = series(spec, options_.consistency_n_max);
    ClaimVerdict v{consistency_claim_id(cand), ClaimKind::GfRecurrenceConsistency, family,
                   Status::Confirmed, std::nullopt, {}};
    for (int n = 1; n <= options_.consistency_n_max; ++n) {
      const BigInt& gf_value = totals[static_cast<std::size_t>(n)];
      if (gf_value != rec_total(n)) {
        std::string why;
        const SizeDistribution* oracle = n <= n_max ? oracle_at(GraphKind::Family, n, why) : nullptr;
        const BigInt reference = oracle ? oracle->total() : rec_total(n);
        v.status = Status::Refuted;
        v.witness = Witness{family, GraphKind::Family, n, std::nullopt,
                            oracle ? "total (oracle)" : "total (stated recurrence)",
                            reference.str(), gf_value.str()};
        break;
      }
    }
    std::ostringstream note;
    note << "y=1 form " << red.num.to_string() << " / " << red.den.to_string() << "; lags (";
    for (std::size_t i = 0; i < derived.lags.size(); ++i) {
      note << (i ? ", " : "") << derived.lags[i];
    }
    note << ") valid from n=" << derived.valid_from;
    if (derived.lags != seeded.rec.lags) {
      note << "; stated lags differ";
      if (v.status == Status::Confirmed) note << " but totals agree for n<=" << options_.consistency_n_max;
    } else {
      note << "; stated lags reproduced";
    }
    v.note = note.str();
    report.claims.push_back(std::move(v));
  }

  {
    const auto& uni = rec.univariate;
    const auto totals = series(uni.rational, n_max);
    std::vector<ReportEntry> entries;
    for (int n = 0; n <= n_max; ++n) {
      ReportEntry e = make_entry(uni.anchor, family, GraphKind::Family, n);
      e.gf_total = totals[static_cast<std::size_t>(n)];
      if (const SizeDistribution* oracle = oracle_at(GraphKind::Family, n, e.note)) {
        e.oracle = *oracle;
        const BigInt observed = oracle->total();
        e.status = observed == *e.gf_total ? Status::Confirmed : Status::Refuted;
        if (e.status == Status::Refuted) {
          e.first_mismatch = Witness{family, GraphKind::Family, n, std::nullopt, "total",
                                     observed.str(), e.gf_total->str()};
        }
      }
      entries.push_back(std::move(e));
    }
    report.claims.push_back(aggregate(uni.anchor, ClaimKind::UnivariateGf, family, entries));
    for (auto& e : entries) report.entries.push_back(std::move(e));
  }

  {
    std::vector<ReportEntry> entries;
    for (int n = seeded.first_index; n <= n_max; ++n) {
      ReportEntry e = make_entry(rec.recurrence.anchor, family, GraphKind::Family, n);
      e.recurrence_total = rec_total(n);
      if (const SizeDistribution* oracle = oracle_at(GraphKind::Family, n, e.note)) {
        e.oracle = *oracle;
        const BigInt observed = oracle->total();
        e.status = observed == *e.recurrence_total ? Status::Confirmed : Status::Refuted;
        if (e.status == Status::Refuted) {
          e.first_mismatch = Witness{family, GraphKind::Family, n, std::nullopt, "total",
                                     observed.str(), e.recurrence_total->str()};
        }
      }
      entries.push_back(std::move(e));
    }
    report.claims.push_back(
        aggregate(rec.recurrence.anchor, ClaimKind::Recurrence, family, entries));
    for (auto& e : entries) report.entries.push_back(std::move(e));
  }

  for (const auto& block : rec.boundary) {
    std::set<std::string> seen;
    for (const auto& claim : block.claims) {
      const std::string id = boundary_claim_id(block, claim);
      if (!seen.insert(id).second) continue;
      ClaimVerdict v{id, ClaimKind::Boundary, family, Status::Skipped, std::nullopt, {}};
      const int n_hi = claim.n.hi ? *claim.n.hi : std::max(claim.n.lo, options_.boundary_n_max);
      std::string why;
      for (int n = claim.n.lo; n <= n_hi && v.status != Status::Refuted; ++n) {
        const SizeDistribution* oracle = oracle_at(claim.kind, n, why);
        if (!oracle) break;
        const int k_hi = claim.k.hi ? *claim.k.hi
                                    : std::max<int>(claim.k.lo, static_cast<int>(build_graph({family, claim.kind, n}).vertex_count()));
        for (int k = claim.k.lo; k <= k_hi; ++k) {
          if (oracle->at(k) != claim.value) {
            v.status = Status::Refuted;
            v.witness = Witness{family, claim.kind, n, k, "count", oracle->at(k).str(),
                                claim.value.str()};
            break;
          }
        }
        if (v.status == Status::Skipped) v.status = Status::Confirmed;
      }
      if (!claim.n.hi && v.status != Status::Refuted) {
        v.note = "checked n=" + std::to_string(claim.n.lo) + ".." + std::to_string(n_hi);
      }
      if (!why.empty()) v.note += (v.note.empty() ? "" : "; ") + why;
      report.claims.push_back(std::move(v));
    }
  }
  return report;
}

VerificationReport Verifier::verify_transfer(const TransferIdentity& identity,
                                             std::optional<int> n_max) {
  prefetch_identity(identity, n_max);
  std::vector<ReportEntry> entries;
  for (int n = identity.valid_n_from; !n_max || n <= *n_max; ++n) {
    const GraphKey lhs{identity.family, identity.lhs, n};
    if (build_graph(lhs).vertex_count() > options_.identity_vertex_cap) break;
    ReportEntry e = make_entry(identity.anchor, identity.family, identity.lhs, n);
    try {
      const SizeDistribution& left = cache_.get(lhs);
      SizeDistribution right;
      for (const auto& t : identity.rhs) {
        if (n - t.dn < 0) continue;
        right += cache_.get({identity.family, t.kind, n - t.dn}).shifted(t.dk).scaled(t.multiplier);
      }
      std::set<int> ks = keys_of(left);
      for (int k : keys_of(right)) ks.insert(k);
      const auto k = first_k_mismatch(ks, identity.valid_k_from, [&](int i) { return left.at(i); },
                                      [&](int i) { return right.at(i); });
      e.oracle = left;
      e.claimed_distribution = right;
      e.status = k ? Status::Refuted : Status::Confirmed;
      if (k) {
        e.first_mismatch = Witness{identity.family, identity.lhs, n, *k, "count",
                                   left.at(*k).str(), right.at(*k).str()};
      }
    } catch (const VertexLimitExceeded& ex) {
      e.note = std::string("skipped from n=") + std::to_string(n) + ": " + ex.what();
      entries.push_back(std::move(e));
      break;
    }
    entries.push_back(std::move(e));
  }
  VerificationReport report;
  ClaimVerdict v = aggregate(identity.anchor, ClaimKind::Identity, identity.family, entries);
  v.note += (v.note.empty() ? "" : "; ") + std::string("k>=") + std::to_string(identity.valid_k_from);
  report.claims.push_back(std::move(v));
  report.entries = std::move(entries);
  return report;
}

VerificationReport Verifier::verify_asymptotics(FamilyId family) {
  const FamilyRecord& rec = catalog_.family(family);
  VerificationReport report;
  const AsymptoticEstimate est = family_estimate(rec, options_.asymptotic);

  {
    const auto& claim = rec.asymptotic;
    ClaimVerdict v{claim.anchor, ClaimKind::Asymptotic, family, Status::Skipped, std::nullopt, {}};
    std::ostringstream note;
    note << "counts give rho=" << fixed(est.rho) << ", C=" << fixed(est.constant);
    if (!claim.stated) {
      note << "; exact form 2^n, no asymptotic statement to check";
    } else {
      const bool rho_ok = std::abs(est.rho - claim.rho) <= claim.rho_tolerance;
      const bool c_ok = std::abs(est.constant - claim.constant) <= claim.constant_tolerance;
      v.status = rho_ok && c_ok ? Status::Confirmed : Status::Refuted;
      if (!rho_ok) {
        v.witness = Witness{family, GraphKind::Family, std::nullopt, std::nullopt, "rho",
                            fixed(est.rho), claim.rho_text};
      } else if (!c_ok) {
        v.witness = Witness{family, GraphKind::Family, std::nullopt, std::nullopt,
                            "leading constant C", fixed(est.constant), claim.constant_text};
      }
      try {
        const AsymptoticEstimate printed = analyse(rec.univariate.rational, rec.univariate.anchor,
                                                   options_.asymptotic);
        note << "; the printed y=1 form gives rho=" << fixed(printed.rho)
             << ", C=" << fixed(printed.constant);
      } catch (const AsymptoticError& e) {
        note << "; the printed y=1 form has no usable singularity: " << e.what();
      }
      note << "; tolerance " << claim.rho_tolerance << " on rho, " << claim.constant_tolerance
           << " on C";
    }
    v.note = note.str();
    report.claims.push_back(std::move(v));
  }

  {
    ClaimVerdict v{"Growth check for " + std::string(family_name(family)), ClaimKind::Growth,
                   family, Status::Confirmed, std::nullopt, {}};
    const auto values = eval_recurrence_range(rec.recurrence.seeded, options_.ratio_n_to + 1);
    auto value = [&](int n) { return values[static_cast<std::size_t>(n - 1)]; };
    for (int n = options_.ratio_n_from; n <= options_.ratio_n_to && !v.witness; ++n) {
      const double ratio = to_double(value(n + 1)) / to_double(value(n));
      if (std::abs(ratio - 1.0 / est.rho) >= options_.asymptotic.ratio_tolerance) {
        v.witness = Witness{family, GraphKind::Family, n, std::nullopt, "ratio a(n+1)/a(n)",
                            fixed(ratio, 9), fixed(1.0 / est.rho, 9)};
      }
    }
    double worst = 0.0;
    std::vector<BigInt> exact{BigInt(1)};
    exact.insert(exact.end(), values.begin(), values.end());
    const UnivarRational r = reduced(rational_from_recurrence(rec.recurrence.seeded, 1));
    const std::vector<double> errors = precise_relative_errors(
        r, est, exact, options_.relative_n_from, options_.relative_n_to);
    for (int n = options_.relative_n_from; n <= options_.relative_n_to; ++n) {
      const double err = errors[static_cast<std::size_t>(n - options_.relative_n_from)];
      worst = std::max(worst, err);
      if (!v.witness && err >= options_.asymptotic.relative_error_bound) {
        v.witness = Witness{family, GraphKind::Family, n, std::nullopt, "relative error",
                            fixed(err, 9), "< " + fixed(options_.asymptotic.relative_error_bound, 2)};
      }
    }
    if (v.witness) v.status = Status::Refuted;
    std::ostringstream note;
    note << "ratio test n=" << options_.ratio_n_from << ".." << options_.ratio_n_to
         << ", relative error n=" << options_.relative_n_from << ".." << options_.relative_n_to
         << " (max " << std::scientific << std::setprecision(2) << worst << ")";
    v.note = note.str();
    report.claims.push_back(std::move(v));

    ClaimVerdict d{"Error decrease for " + std::string(family_name(family)), ClaimKind::Growth,
                   family, Status::Confirmed, std::nullopt, {}};
    if (family == FamilyId::Square) {
      d.status = Status::Skipped;
      d.note = "estimate is exact for every n";
    } else {
      for (std::size_t i = 1; i < errors.size() && !d.witness; ++i) {
        const int n = options_.relative_n_from + static_cast<int>(i);
        if (errors[i] > errors[i - 1]) {
          d.witness = Witness{family, GraphKind::Family, n, std::nullopt, "relative error increase",
                              sci(errors[i]), "<= " + sci(errors[i - 1])};
          d.status = Status::Refuted;
        }
      }
      std::ostringstream dn;
      dn << "|estimate/exact - 1| from " << sci(errors.front()) << " at n="
         << options_.relative_n_from << " to " << sci(errors.back()) << " at n="
         << options_.relative_n_to;
      d.note = dn.str();
    }
    report.claims.push_back(std::move(d));
  }
  return report;
}

VerificationReport Verifier::verify_identities(std::optional<int> n_max) {
  VerificationReport report;
  for (const auto& identity : catalog_.identities) report.append(verify_transfer(identity, n_max));
  return report;
}

VerificationReport Verifier::verify_all() {
  VerificationReport report;
  for (FamilyId family : kAllFamilies) {
    report.append(verify_family(family, family_n_max(family)));
    report.append(verify_asymptotics(family));
  }
  report.append(verify_identities());
  return report;
}

}  // namespace cactus
