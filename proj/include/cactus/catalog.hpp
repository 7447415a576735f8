#pragma once

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "cactus/bigint.hpp"
#include "cactus/graph.hpp"
#include "cactus/series.hpp"

namespace cactus {

/// A printed bivariate generating function: the sum of the numerators plus
/// the offset, over the denominator. The offset is folded into the numerator.
struct GfCandidate {
  std::string anchor;
  std::vector<std::string> numerator_texts;
  std::string denominator_text;
  std::string offset_text;
  RationalGF gf;
};

/// A printed univariate form T(x) = T(x, 1).
struct UnivariateClaim {
  std::string anchor;
  std::string numerator_text;
  std::string denominator_text;
  UnivarRational rational;
};

/// A printed recurrence with its initial values, seeded from n = 1.
struct RecurrenceClaim {
  std::string anchor;
  SeededRecurrence seeded;
};

/// Printed a(n) ~ C / rho^(n+1). Tolerances are half a unit in the last
/// printed digit. `stated` is false for a family without such a statement.
struct AsymptoticClaim {
  std::string anchor;
  bool stated = false;
  std::string rho_text;
  std::string constant_text;
  double rho = 0.0;
  double constant = 0.0;
  double rho_tolerance = 0.0;
  double constant_tolerance = 0.0;
};

/// Inclusive range of a count index; an absent upper bound means unbounded.
struct IndexRange {
  int lo = 0;
  std::optional<int> hi;

  bool contains(int v) const { return v >= lo && (!hi || v <= *hi); }
};

/// A single "x(n, k) = value" statement, possibly ranging over n or k.
struct BoundaryClaim {
  std::string text;
  GraphKind kind = GraphKind::Family;
  IndexRange n;
  IndexRange k;
  BigInt value;
};

struct BoundaryBlock {
  std::string anchor;
  std::vector<BoundaryClaim> claims;
};

struct FamilyRecord {
  FamilySpec spec;
  char letter = '?';
  char symbol = '?';
  std::vector<GfCandidate> gf_candidates;
  UnivariateClaim univariate;
  RecurrenceClaim recurrence;
  AsymptoticClaim asymptotic;
  std::vector<BoundaryBlock> boundary;

  std::string_view name() const { return family_name(spec.id); }
};

/// One term multiplier * x(n - dn, k - dk) of an identity.
struct IdentityTerm {
  int multiplier = 1;
  GraphKind kind = GraphKind::Family;
  int dn = 0;
  int dk = 0;
};

/// lhs(n, k) = sum of rhs terms, claimed for n >= valid_n_from, k >= valid_k_from.
struct TransferIdentity {
  std::string anchor;
  FamilyId family = FamilyId::Triangular;
  std::string relation;
  GraphKind lhs = GraphKind::Family;
  std::vector<IdentityTerm> rhs;
  int valid_n_from = 0;
  int valid_k_from = 0;
};

struct Catalog {
  std::vector<FamilyRecord> families;
  std::vector<TransferIdentity> identities;
  /// Claim ids refuted in the committed baseline report.
  std::set<std::string> disputed;

  const FamilyRecord& family(FamilyId id) const;
  bool is_disputed(const std::string& claim_id) const { return disputed.count(claim_id) != 0; }
};

/// Parses catalog YAML. Throws std::invalid_argument with the offending
/// entry on any schema or polynomial error.
Catalog parse_catalog(std::string_view yaml_text);

/// The catalog compiled into the library, with disputed claims taken from
/// the compiled baseline report. Parsed once; safe to share.
const Catalog& load_catalog();

/// Claim ids with verdict REFUTED in a serialized verification report.
std::set<std::string> refuted_claims(std::string_view report_json);

std::string_view embedded_catalog_text();
std::string_view embedded_baseline_text();

/// Parses "tbar(1,k>=3)=0" style statements for the given family symbol.
BoundaryClaim parse_boundary_claim(std::string_view text, char symbol);

/// Parses "t(n,k) = tbar(n-3,k-1) + 2tbar(n-2,k-1)" for the given family symbol.
TransferIdentity parse_relation(std::string_view text, char symbol);

/// Claim id of a boundary statement inside a block.
std::string boundary_claim_id(const BoundaryBlock& block, const BoundaryClaim& claim);

/// Claim id of the consistency check between a GF candidate and the recurrence.
std::string consistency_claim_id(const GfCandidate& candidate);

}  // namespace cactus
