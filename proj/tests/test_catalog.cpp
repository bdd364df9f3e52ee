#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "fanorr/catalog_io.hpp"

using namespace fanorr;

namespace {

std::int64_t monomials(const std::vector<int>& w, std::size_t from, int n) {
  if (n < 0) return 0;
  if (from == w.size()) return n == 0 ? 1 : 0;
  std::int64_t total = 0;
  for (int used = 0; used <= n; used += w[from]) total += monomials(w, from + 1, n - used);
  return total;
}

// Complete intersection: alternating sum over subsets of the equations.
std::int64_t ci_dimension(const Family& f, int n) {
  const auto& d = f.degrees();
  std::int64_t c = 0;
  for (unsigned mask = 0; mask < (1u << d.size()); ++mask) {
    int shift = 0, sign = 1;
    for (std::size_t i = 0; i < d.size(); ++i)
      if (mask & (1u << i)) shift += d[i], sign = -sign;
    c += sign * monomials(f.weights(), 0, n - shift);
  }
  return c;
}

std::string temp_path(const char* name) {
  return (std::filesystem::temp_directory_path() / (std::string("fanorr_") + name)).string();
}

Json builtin_json() { return to_json(builtin_catalog()); }

}  // namespace

TEST(Catalog, Lookups) {
  const auto c = builtin_catalog();
  const auto* y = c.find_as<FamilyEntry>("Y34");
  ASSERT_NE(y, nullptr);
  EXPECT_EQ(y->family.weights(), (std::vector<int>{1, 1, 1, 1, 2, 2}));
  EXPECT_EQ(y->family.degrees(), (std::vector<int>{3, 4}));
  const auto* z = c.find_as<FamilyEntry>("Z10");
  ASSERT_NE(z, nullptr);
  EXPECT_EQ(c.find("no-such-entry"), nullptr);
  EXPECT_EQ(c.find_as<LinkEntry>("Y34"), nullptr);
  EXPECT_EQ(c.find("X4")->provenance.source, Source::paper);
}

TEST(Catalog, BuiltinChecksPass) {
  const auto r = check_catalog(builtin_catalog());
  for (const auto& ch : r.checks) EXPECT_TRUE(ch.pass) << ch.entry << " " << ch.name << ": " << ch.detail;
  EXPECT_TRUE(r.passed());
}

TEST(Catalog, NumericsMatchMonomialCounts) {
  const auto c = builtin_catalog();
  int pairs = 0;
  for (const auto& e : c.entries) {
    const auto* f = std::get_if<FamilyEntry>(&e.payload);
    if (!f || !f->numerics) continue;
    const auto* x = c.find_as<FanoNumerics>(*f->numerics);
    ASSERT_NE(x, nullptr) << e.id;
    const auto seq = rr_hilbert_sequence(*x, 30);
    for (int n = 0; n <= 30; ++n) EXPECT_EQ(seq.values[n], Rational(ci_dimension(f->family, n))) << e.id << " n=" << n;
    ++pairs;
  }
  EXPECT_GE(pairs, 9);
}

TEST(Catalog, EveryExclusionCaseReplays) {
  int cases = 0;
  for (const auto& e : builtin_catalog().entries)
    if (const auto* x = std::get_if<ExclusionCase>(&e.payload)) {
      const auto r = replay(*x);
      EXPECT_TRUE(r.passed()) << e.id << ": " << r.verdict;
      ++cases;
    }
  EXPECT_GT(cases, 10);
}

TEST(Catalog, ProvenanceRequiresCitation) {
  for (const auto& e : builtin_catalog().entries) {
    if (e.provenance.source != Source::derived) {
      EXPECT_FALSE(e.provenance.citation.empty()) << e.id;
    }
  }
}

TEST(CatalogIo, RoundTripThroughFile) {
  const auto c = builtin_catalog();
  const auto path = temp_path("roundtrip.json");
  save_catalog(c, path);
  const auto back = load_catalog(path);
  EXPECT_EQ(back, c);
  EXPECT_EQ(dump_catalog(back), dump_catalog(c));
  std::filesystem::remove(path);
}

TEST(CatalogIo, EmptyCatalogIsValid) {
  const auto c = parse_catalog(R"({"schema_version": 1, "entries": []})");
  EXPECT_TRUE(c.entries.empty());
  EXPECT_TRUE(check_catalog(c).passed());
}

TEST(CatalogIo, DanglingReferenceNamesEntry) {
  auto j = builtin_json();
  for (auto& e : j["entries"])
    if (e["id"] == "X4-Y34") e["payload"]["right"]["extraction"] = "kawamata.99";
  try {
    parse_catalog(j.dump());
    FAIL() << "expected CatalogError";
  } catch (const CatalogError& e) {
    EXPECT_EQ(e.entry_id(), "X4-Y34");
    EXPECT_NE(std::string(e.what()).find("kawamata.99"), std::string::npos);
  }
}

TEST(CatalogIo, DuplicateId) {
  auto j = builtin_json();
  j["entries"].push_back(j["entries"][0]);
  EXPECT_THROW(parse_catalog(j.dump()), CatalogError);
}

TEST(CatalogIo, BadSchemaVersion) {
  auto j = builtin_json();
  j["schema_version"] = 99;
  EXPECT_THROW(parse_catalog(j.dump()), CatalogError);
}

TEST(CatalogIo, MalformedFieldReportsPath) {
  auto j = builtin_json();
  for (auto& e : j["entries"])
    if (e["id"] == "X4") e["payload"]["weights"][0] = "one";
  try {
    parse_catalog(j.dump());
    FAIL() << "expected CatalogError";
  } catch (const CatalogError& e) {
    EXPECT_EQ(e.entry_id(), "X4");
    EXPECT_NE(std::string(e.what()).find("weights[0]"), std::string::npos) << e.what();
  }
}

TEST(CatalogIo, MissingCitationRejected) {
  auto j = builtin_json();
  for (auto& e : j["entries"])
    if (e["id"] == "X4") e["provenance"]["citation"] = "";
  EXPECT_THROW(parse_catalog(j.dump()), CatalogError);
}

TEST(CatalogIo, NotJson) {
  EXPECT_THROW(parse_catalog("{not json"), CatalogError);
  EXPECT_THROW(load_catalog(temp_path("does_not_exist.json")), CatalogError);
}
