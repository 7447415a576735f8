#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cactus/asymptotics.hpp"
#include "cactus/catalog.hpp"
#include "cactus/mis.hpp"
#include "cactus/oracle_cache.hpp"
#include "cactus/poly.hpp"

namespace cactus {

enum class Status { Confirmed, Refuted, Skipped };
std::string_view status_name(Status status);

enum class ClaimKind {
  BivariateGf,
  GfRecurrenceConsistency,
  UnivariateGf,
  Recurrence,
  Asymptotic,
  Growth,
  Boundary,
  Identity,
};
std::string_view claim_kind_name(ClaimKind kind);

/// The first disagreement found for a claim. Values are decimal strings so
/// that exact integers and printed decimals share one representation.
struct Witness {
  FamilyId family = FamilyId::Triangular;
  GraphKind kind = GraphKind::Family;
  std::optional<int> n;
  std::optional<int> k;
  std::string quantity;
  std::string observed;
  std::string claimed;

  std::string describe() const;
  friend bool operator==(const Witness&, const Witness&) = default;
};

/// One comparison of a claim against the oracle at a single graph.
struct ReportEntry {
  std::string claim;
  FamilyId family = FamilyId::Triangular;
  GraphKind kind = GraphKind::Family;
  int n = 0;
  std::optional<SizeDistribution> oracle;
  std::optional<UnivarPoly> gf_coefficient;
  std::optional<BigInt> gf_total;
  std::optional<BigInt> recurrence_total;
  std::optional<SizeDistribution> claimed_distribution;
  Status status = Status::Skipped;
  std::optional<Witness> first_mismatch;
  std::string note;
};

struct ClaimVerdict {
  std::string id;
  ClaimKind kind = ClaimKind::Boundary;
  FamilyId family = FamilyId::Triangular;
  Status status = Status::Skipped;
  std::optional<Witness> witness;
  std::string note;
};

struct VerificationReport {
  std::vector<ReportEntry> entries;
  std::vector<ClaimVerdict> claims;

  bool any_refuted() const;
  const ClaimVerdict* find(std::string_view id) const;
  void append(VerificationReport other);
};

struct VerifyOptions {
  OracleOptions oracle;
  unsigned workers = 1;
  /// Overrides the per-family default n_max for family checks.
  std::optional<int> n_max;
  /// Identity checks stop once the left-hand graph exceeds this many vertices.
  std::size_t identity_vertex_cap = 45;
  /// Upper n for GF/recurrence consistency of totals.
  int consistency_n_max = 30;
  /// Upper n for boundary statements that range over n.
  int boundary_n_max = 6;
  /// Growth checks: ratio window and relative-error window.
  int ratio_n_from = 30;
  int ratio_n_to = 60;
  int relative_n_from = 15;
  int relative_n_to = 40;
  AsymptoticConfig asymptotic;
};

/// Default n_max per family: the largest family graph stays within 45 vertices.
int default_n_max(FamilyId family);

class Verifier {
 public:
  Verifier(const Catalog& catalog, VerifyOptions options);

  /// Bivariate GF candidates, GF/recurrence consistency, the univariate form,
  /// the recurrence and the boundary statements of one family.
  VerificationReport verify_family(FamilyId family, int n_max);

  /// Exact check of an identity for every valid n whose left-hand graph fits
  /// the vertex cap, optionally also capped at n_max.
  VerificationReport verify_transfer(const TransferIdentity& identity,
                                     std::optional<int> n_max = std::nullopt);

  /// Printed (rho, C) against the analysis of the oracle-confirmed counts,
  /// plus the ratio and relative-error growth checks.
  VerificationReport verify_asymptotics(FamilyId family);

  VerificationReport verify_identities(std::optional<int> n_max = std::nullopt);
  VerificationReport verify_all();

  OracleCache& cache() { return cache_; }
  const VerifyOptions& options() const { return options_; }

 private:
  int family_n_max(FamilyId family) const;
  void prefetch_family(FamilyId family, int n_max);
  void prefetch_identity(const TransferIdentity& identity, std::optional<int> n_max);

  const Catalog& catalog_;
  VerifyOptions options_;
  OracleCache cache_;
};

/// Deterministic JSON serialisation. Integers that fit 64 bits are JSON
/// numbers, larger ones strings.
std::string to_json(const VerificationReport& report);

/// One line per claim verdict followed by totals.
std::string to_table(const VerificationReport& report);

}  // namespace cactus
