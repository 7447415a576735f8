#include <map>
#include <regex>

#include <gtest/gtest.h>

#include "cactus/catalog.hpp"

namespace cactus {
namespace {

std::vector<BigInt> ints(std::initializer_list<long long> v) { return {v.begin(), v.end()}; }

TEST(CatalogTest, LoadsEveryFamily) {
  const Catalog& c = load_catalog();
  ASSERT_EQ(c.families.size(), 8u);
  for (std::size_t i = 0; i < c.families.size(); ++i) {
    const FamilyRecord& r = c.families[i];
    EXPECT_EQ(r.spec.id, kAllFamilies[i]);
    FamilySpec spec = family_spec(r.spec.id);
    EXPECT_EQ(r.spec.cycle_length, spec.cycle_length);
    EXPECT_EQ(r.spec.attach_distance, spec.attach_distance);
    EXPECT_EQ(r.letter, family_letter(r.spec.id));
    EXPECT_EQ(r.symbol, count_symbol(r.spec.id));
    EXPECT_FALSE(r.gf_candidates.empty());
    EXPECT_FALSE(r.boundary.empty());
    EXPECT_EQ(&c.family(r.spec.id), &r);
  }
  EXPECT_EQ(c.identities.size(), 20u);
}

TEST(CatalogTest, TheoremAnchorsAppearOnce) {
  const Catalog& c = load_catalog();
  std::map<std::string, int> seen;
  const std::regex thm(R"(^Thm (2\.\d+)\b)");
  auto note = [&](const std::string& anchor) {
    std::smatch m;
    if (std::regex_search(anchor, m, thm)) ++seen[m[1]];
  };
  for (const auto& r : c.families) {
    for (const auto& g : r.gf_candidates) note(g.anchor);
    note(r.recurrence.anchor);
    note(r.asymptotic.anchor);
  }
  for (int i = 1; i <= 24; ++i) EXPECT_EQ(seen["2." + std::to_string(i)], 1) << "Thm 2." << i;
  EXPECT_EQ(seen.size(), 24u);
}

TEST(CatalogTest, InitialValuesAsPrinted) {
  const Catalog& c = load_catalog();
  const std::map<FamilyId, std::vector<BigInt>> expected = {
      {FamilyId::Triangular, ints({3, 5})},
      {FamilyId::Diamond, ints({2, 4, 7})},
      {FamilyId::Square, ints({2})},
      {FamilyId::Pentagonal, ints({5, 13, 42, 127})},
      {FamilyId::MetaPentagonal, ints({5, 13})},
      {FamilyId::MetaHexagonal, ints({5, 19, 64, 221, 765})},
      {FamilyId::ParaHexagonal, ints({5, 19, 76})},
      {FamilyId::OrthoHexagonal, ints({5, 19, 72})},
  };
  for (const auto& [id, values] : expected) {
    const auto& seeded = c.family(id).recurrence.seeded;
    EXPECT_EQ(seeded.first_index, 1);
    EXPECT_EQ(seeded.initial, values) << family_name(id);
  }
}

TEST(CatalogTest, AsymptoticTolerancesFollowPrintedDigits) {
  const Catalog& c = load_catalog();
  const auto& t = c.family(FamilyId::Triangular).asymptotic;
  EXPECT_TRUE(t.stated);
  EXPECT_DOUBLE_EQ(t.rho, 0.618);
  EXPECT_DOUBLE_EQ(t.rho_tolerance, 0.0005);
  EXPECT_DOUBLE_EQ(t.constant, 1.1708);
  EXPECT_DOUBLE_EQ(t.constant_tolerance, 0.00005);
  EXPECT_FALSE(c.family(FamilyId::Square).asymptotic.stated);
}

TEST(CatalogTest, OffsetIsFoldedIntoNumerator) {
  const Catalog& c = load_catalog();
  const auto& m = c.family(FamilyId::MetaPentagonal).gf_candidates.front();
  EXPECT_FALSE(m.offset_text.empty());
  // Constant term of the series is m(0,0) = 1 once the offset is included.
  EXPECT_EQ(m.gf.num.coefficient(0, 0) , m.gf.den.coefficient(0, 0));
}

TEST(CatalogTest, ParaHexagonalHasTwoCandidates) {
  const auto& g = load_catalog().family(FamilyId::ParaHexagonal);
  ASSERT_EQ(g.gf_candidates.size(), 2u);
  EXPECT_EQ(g.gf_candidates[0].anchor.rfind("Thm 2.19", 0), 0u);
  EXPECT_EQ(g.gf_candidates[1].anchor.rfind("Proof of Thm 2.19", 0), 0u);
}

TEST(CatalogTest, DisputedClaimsComeFromBaseline) {
  const Catalog& c = load_catalog();
  EXPECT_EQ(c.disputed, refuted_claims(embedded_baseline_text()));
  EXPECT_FALSE(c.is_disputed("Thm 2.1 [bivariate-t]"));
}

TEST(BoundaryParseTest, Forms) {
  BoundaryClaim a = parse_boundary_claim("tbar(1,k>=3)=0", 't');
  EXPECT_EQ(a.kind, GraphKind::Bar);
  EXPECT_EQ(a.n.lo, 1);
  EXPECT_EQ(a.n.hi, 1);
  EXPECT_EQ(a.k.lo, 3);
  EXPECT_FALSE(a.k.hi);
  EXPECT_EQ(a.value, 0);

  BoundaryClaim b = parse_boundary_claim("q(2,4)=10", 'q');
  EXPECT_EQ(b.kind, GraphKind::Family);
  EXPECT_TRUE(b.n.contains(2));
  EXPECT_FALSE(b.n.contains(3));
  EXPECT_EQ(b.value, 10);

  BoundaryClaim c = parse_boundary_claim("pbar(n>=2,k<=2)=0", 'p');
  EXPECT_EQ(c.n.lo, 2);
  EXPECT_FALSE(c.n.hi);
  EXPECT_EQ(c.k.lo, 0);
  EXPECT_EQ(c.k.hi, 2);

  BoundaryClaim d = parse_boundary_claim(" htilde( 1 , 5 ) = 4 ", 'h');
  EXPECT_EQ(d.kind, GraphKind::Tilde);
  EXPECT_EQ(d.value, 4);

  for (const char* bad : {"t(1,1)", "x(1,1)=3", "t(1)=3", "tbar(1,k>)=0", "ttilde(0,1)=x"}) {
    EXPECT_THROW(parse_boundary_claim(bad, 't'), std::invalid_argument) << bad;
  }
}

TEST(RelationParseTest, Forms) {
  TransferIdentity t = parse_relation("t(n,k) = tbar(n-3,k-1) + 2tbar(n-2,k-1)", 't');
  EXPECT_EQ(t.lhs, GraphKind::Family);
  ASSERT_EQ(t.rhs.size(), 2u);
  EXPECT_EQ(t.rhs[0].multiplier, 1);
  EXPECT_EQ(t.rhs[0].kind, GraphKind::Bar);
  EXPECT_EQ(t.rhs[0].dn, 3);
  EXPECT_EQ(t.rhs[0].dk, 1);
  EXPECT_EQ(t.rhs[1].multiplier, 2);
  EXPECT_EQ(t.rhs[1].dn, 2);

  TransferIdentity m = parse_relation("mtilde(n,k) = m(n,k-1) + mbar(n,k-2)", 'm');
  EXPECT_EQ(m.lhs, GraphKind::Tilde);
  EXPECT_EQ(m.rhs[0].dn, 0);
  EXPECT_EQ(m.rhs[1].dk, 2);

  EXPECT_THROW(parse_relation("t(n,k) = ", 't'), std::invalid_argument);
  EXPECT_THROW(parse_relation("t(n,k) = q(n-1,k)", 't'), std::invalid_argument);
  EXPECT_THROW(parse_relation("t(n+1,k) = t(n,k)", 't'), std::invalid_argument);
}

TEST(ParseCatalogTest, RejectsBrokenEntries) {
  EXPECT_THROW(parse_catalog("families: 3"), std::invalid_argument);
  EXPECT_THROW(parse_catalog("families: [{id: octagonal}]\nidentities: []"), std::invalid_argument);
  std::string text(embedded_catalog_text());
  std::string broken = std::regex_replace(text, std::regex("1 - xy - x\\^\\{2\\}y"), "1 - xy - x^^y",
                                          std::regex_constants::format_first_only);
  ASSERT_NE(broken, text);
  EXPECT_THROW(parse_catalog(broken), std::invalid_argument);
  EXPECT_NO_THROW(parse_catalog(text));
}

TEST(RefutedClaimsTest, ReadsVerdicts) {
  const char* report = R"({"claims": [
    {"id": "a", "verdict": "REFUTED"},
    {"id": "b", "verdict": "CONFIRMED"},
    {"id": "c", "verdict": "REFUTED"}]})";
  EXPECT_EQ(refuted_claims(report), (std::set<std::string>{"a", "c"}));
  EXPECT_TRUE(refuted_claims("{}").empty());
}

TEST(ClaimIdTest, Formats) {
  BoundaryBlock block{"Check list before Eq. (t3)", {}};
  BoundaryClaim claim = parse_boundary_claim("t(2,2)=4", 't');
  EXPECT_EQ(boundary_claim_id(block, claim), "Check list before Eq. (t3): t(2,2)=4");
  GfCandidate g;
  g.anchor = "Thm 2.4 [bivariate-d]";
  EXPECT_EQ(consistency_claim_id(g), "Consistency of Thm 2.4 [bivariate-d] with the stated recurrence");
}

}  // namespace
}  // namespace cactus
