#include "commap/catalog.hpp"

#include <gtest/gtest.h>

#include <fstream>
#include <map>
#include <set>
#include <sstream>

using namespace commap;

namespace {

std::map<std::string, std::string> read_golden() {
  std::ifstream in(std::string(COMMAP_GOLDEN_DIR) + "/status.txt");
  std::map<std::string, std::string> out;
  std::string name, verdict;
  while (in >> name >> verdict) out[name] = verdict;
  return out;
}

}  // namespace

TEST(Catalog, LoadsAndValidates) {
  const Catalog& cat = load_catalog();
  EXPECT_EQ(cat.families().size(), 13u);
  EXPECT_EQ(cat.exceptional().size(), 22u);
}

TEST(Catalog, RejectsMalformedDocument) {
  EXPECT_THROW(Catalog(json::parse(R"({"schema": "commap.catalog", "version": 2})")), Error);
  EXPECT_THROW(Catalog(json::parse(R"({"schema": "commap.catalog", "version": 1})")), Error);
}

TEST(Catalog, NormalizesSpellings) {
  EXPECT_EQ(Catalog::normalize_name(" sl_2(H) "), "sl(2,H)");
  EXPECT_EQ(Catalog::normalize_name("u*(3,H)"), "so*(6)");
  EXPECT_EQ(Catalog::normalize_name("u*_5(H)"), "so*(10)");
  EXPECT_EQ(Catalog::normalize_name("su(1, 2)"), "su(1,2)");
}

TEST(Catalog, AliasesResolveToCanonical) {
  const Catalog& cat = load_catalog();
  const RealFormRecord r = cat.lookup("so(1,3)");
  EXPECT_EQ(r.name, "sl(2,C)");
  ASSERT_TRUE(r.canonical.has_value());
  EXPECT_TRUE(r.flags.complex);
  EXPECT_EQ(cat.lookup("sp(2,R)").name, "sl(2,R)");
  // so(3,3) is a family instance with its own diagram; it carries the alias.
  const RealFormRecord s = cat.lookup("so(3,3)");
  EXPECT_EQ(s.name, "so(3,3)");
  EXPECT_EQ(s.canonical.value_or(""), "sl(4,R)");
}

TEST(Catalog, AliasesAgreeWithCanonicalVerdicts) {
  const Catalog& cat = load_catalog();
  for (const auto& [alias, canonical] : cat.aliases()) {
    const SurjectivityReport a = surjectivity_status(cat.lookup(alias));
    const SurjectivityReport c = surjectivity_status(cat.lookup(canonical));
    EXPECT_EQ(a.verdict, c.verdict) << alias << " vs " << canonical;
    EXPECT_EQ(a.arrow_count, c.arrow_count) << alias << " vs " << canonical;
  }
}

TEST(Catalog, TypedErrors) {
  const Catalog& cat = load_catalog();
  try {
    cat.lookup("so(2,2)");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotSimple);
  }
  try {
    cat.lookup("su(pq)");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnknownAlgebra);
    EXPECT_NE(std::string(e.what()).find("su(p,q)"), std::string::npos);
  }
  EXPECT_THROW(cat.lookup("sp(3,R)"), Error);
  EXPECT_THROW(cat.lookup("so(1,2,3)"), Error);
}

TEST(Catalog, FlagsMatchStandardFacts) {
  const Catalog& cat = load_catalog();
  EXPECT_TRUE(cat.lookup("sl(5,R)").flags.split);
  EXPECT_TRUE(cat.lookup("so(3,4)").flags.split);
  EXPECT_TRUE(cat.lookup("so(4,4)").flags.split);
  EXPECT_FALSE(cat.lookup("so(3,5)").flags.split);
  EXPECT_TRUE(cat.lookup("su(5)").flags.compact);
  EXPECT_TRUE(cat.lookup("su(2,3)").flags.hermitian);
  EXPECT_TRUE(cat.lookup("so(2,7)").flags.hermitian);
  EXPECT_FALSE(cat.lookup("so(3,5)").flags.inner_type);
  EXPECT_TRUE(cat.lookup("so(4,6)").flags.inner_type);
  EXPECT_FALSE(cat.lookup("so(4,6)").flags.hermitian);
  EXPECT_FALSE(cat.lookup("EIV").flags.inner_type);
  EXPECT_TRUE(cat.lookup("EIII").flags.hermitian);
}

TEST(Catalog, JustificationPrecedence) {
  const Catalog& cat = load_catalog();
  EXPECT_EQ(surjectivity_status(cat.lookup("sl(3,C)")).justification, Justification::Complex);
  EXPECT_EQ(surjectivity_status(cat.lookup("sl(3,R)")).justification, Justification::SplitOrCompact);
  EXPECT_EQ(surjectivity_status(cat.lookup("sp(1,2)")).justification, Justification::ClassicalList);
  EXPECT_EQ(surjectivity_status(cat.lookup("EIV")).justification, Justification::MSemisimple);
  EXPECT_EQ(surjectivity_status(cat.lookup("so(4,6)")).justification, Justification::InnerNonHermitian);
  EXPECT_EQ(surjectivity_status(cat.lookup("EII")).justification, Justification::InnerNonHermitian);
  EXPECT_EQ(surjectivity_status(cat.lookup("su(1,2)")).verdict, Verdict::Open);
}

TEST(Catalog, StatusMatchesGoldenFile) {
  const auto golden = read_golden();
  ASSERT_GT(golden.size(), 150u);
  std::set<std::string> seen;
  int mismatches = 0;
  for (const auto& rec : load_catalog().enumerate(8)) {
    seen.insert(rec.name);
    const auto it = golden.find(rec.name);
    if (it == golden.end()) {
      ADD_FAILURE() << rec.name << " missing from golden file";
      ++mismatches;
      continue;
    }
    if (it->second != to_string(surjectivity_status(rec).verdict)) {
      ADD_FAILURE() << rec.name << ": golden " << it->second;
      ++mismatches;
    }
  }
  for (const auto& [name, verdict] : golden)
    if (!seen.count(name)) ADD_FAILURE() << name << " in golden file but not enumerated";
  EXPECT_EQ(mismatches, 0);
}

TEST(Catalog, StatusJsonSchema) {
  const json j = to_json(surjectivity_status(load_catalog().lookup("EIII")));
  EXPECT_EQ(j["schema"], "commap.status/1");
  EXPECT_EQ(j["verdict"], "Open");
  EXPECT_EQ(j["arrow_count"], 1);
}
