#include <gtest/gtest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>

#include "wordprop/catalog.hpp"
#include "wordprop/word.hpp"

using namespace wordprop;

namespace {

bool contains(const std::vector<CatalogEntry>& catalog, const std::string& name) {
  return std::any_of(catalog.begin(), catalog.end(), [&](const CatalogEntry& e) { return e.name == name; });
}

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("wordprop_catalog_test_" + name);
}

void write_text(const std::filesystem::path& p, const std::string& text) {
  std::ofstream(p) << text;
}

}  // namespace

TEST(CatalogTest, BuiltinOrders) {
  EXPECT_EQ(builtin(Family::kCyclic, {1}).order(), 1u);
  EXPECT_EQ(builtin(Family::kSymmetric, {3}).order(), 6u);
  EXPECT_EQ(builtin(Family::kSymmetric, {5}).order(), 120u);
  EXPECT_EQ(builtin(Family::kSymmetric, {1}).order(), 1u);
  EXPECT_EQ(builtin(Family::kAlternating, {4}).order(), 12u);
  EXPECT_EQ(builtin(Family::kAlternating, {5}).order(), 60u);
  EXPECT_EQ(builtin(Family::kDihedral, {4}).order(), 8u);
  EXPECT_EQ(builtin(Family::kQuaternion8).order(), 8u);
  EXPECT_EQ(builtin(Family::kElementaryAbelian, {2, 3}).order(), 8u);
  EXPECT_TRUE(builtin(Family::kElementaryAbelian, {3, 2}).is_abelian());
}

TEST(CatalogTest, HeisenbergIsTwoEngel) {
  const Group h = builtin(Family::kHeisenberg, {3});
  EXPECT_EQ(h.order(), 27u);
  EXPECT_FALSE(h.is_abelian());
  EXPECT_EQ(h.center().size(), 3u);
  EXPECT_TRUE(is_identity_in(named_word("engel2"), h));
}

TEST(CatalogTest, UnsupportedParams) {
  const auto kind = [](Family f, std::vector<std::uint32_t> params) {
    try {
      builtin(f, std::move(params));
    } catch (const GroupError& e) {
      return e.kind();
    }
    return GroupError::Kind::kBadElement;
  };
  EXPECT_EQ(kind(Family::kSymmetric, {8}), GroupError::Kind::kUnsupportedParams);
  EXPECT_EQ(kind(Family::kDihedral, {2}), GroupError::Kind::kUnsupportedParams);
  EXPECT_EQ(kind(Family::kCyclic, {0}), GroupError::Kind::kUnsupportedParams);
  EXPECT_EQ(kind(Family::kCyclic, {}), GroupError::Kind::kUnsupportedParams);
  EXPECT_EQ(kind(Family::kHeisenberg, {4}), GroupError::Kind::kUnsupportedParams);
  EXPECT_EQ(kind(Family::kElementaryAbelian, {6, 2}), GroupError::Kind::kUnsupportedParams);
  EXPECT_THROW(parse_family("mathieu"), GroupError);
  EXPECT_EQ(parse_family("elementary-abelian"), Family::kElementaryAbelian);
}

TEST(CatalogTest, DefaultCatalogContents) {
  const auto six = default_catalog(6);
  for (int n = 1; n <= 6; ++n) EXPECT_TRUE(contains(six, "Z" + std::to_string(n)));
  EXPECT_TRUE(contains(six, "S3"));
  EXPECT_TRUE(contains(six, "D3"));
  EXPECT_FALSE(contains(six, "Q8"));

  const auto eight = default_catalog(8);
  EXPECT_TRUE(contains(eight, "Q8"));
  EXPECT_TRUE(contains(eight, "D4"));

  const auto big = default_catalog(128);
  for (const char* name : {"S4", "S5", "A4", "A5", "Heis3", "Heis5", "Q8 x Z2", "D4 x Z2"}) {
    EXPECT_TRUE(contains(big, name)) << name;
  }
  for (const auto& entry : big) EXPECT_LE(entry.order(), 128u) << entry.name;

  std::vector<std::string> names;
  for (const auto& e : big) names.push_back(e.name);
  std::sort(names.begin(), names.end());
  EXPECT_EQ(std::adjacent_find(names.begin(), names.end()), names.end());
}

TEST(CatalogTest, EveryEntryValidatesWithFormulaOrder) {
  for (const auto& entry : default_catalog(64)) {
    const Group g = build(entry);
    EXPECT_EQ(g.order(), entry.order()) << entry.name;
    EXPECT_EQ(g.name(), entry.name);
  }
}

TEST(CatalogTest, NonAbelianMembers) {
  // Fixture: every non-abelian member of default_catalog(16).
  const std::vector<std::string> expected{"A4", "D3", "D4", "D5", "D6", "D7", "D8", "S3", "Q8",
                                          "D3 x Z2", "D4 x Z2", "S3 x Z2", "Q8 x Z2"};
  std::vector<std::string> actual;
  for (const auto& entry : default_catalog(16))
    if (!build(entry).is_abelian()) actual.push_back(entry.name);
  std::vector<std::string> sorted_expected = expected;
  std::sort(sorted_expected.begin(), sorted_expected.end());
  std::sort(actual.begin(), actual.end());
  EXPECT_EQ(actual, sorted_expected);
}

TEST(CatalogTest, ConstructionIsDeterministic) {
  for (const auto& entry : default_catalog(30)) {
    EXPECT_EQ(cayley_file_text(build(entry)), cayley_file_text(build(entry))) << entry.name;
  }
}

TEST(CatalogTest, CayleyFileRoundTrip) {
  const auto path = temp_path("roundtrip.json");
  const Group g = builtin(Family::kAlternating, {4});
  save_group(g, path);
  const Group loaded = load_group(path);
  EXPECT_EQ(loaded.table(), g.table());
  EXPECT_EQ(loaded.name(), "A4");
  EXPECT_FALSE(std::filesystem::exists(path.string() + ".tmp"));
  std::filesystem::remove(path);
}

TEST(CatalogTest, PermutationFile) {
  const Group g = parse_group_file(R"({"name": "S3", "points": 3, "generators": [[1,0,2],[1,2,0]]})");
  EXPECT_EQ(g.order(), 6u);
  EXPECT_EQ(g.name(), "S3");
}

TEST(CatalogTest, MalformedTableNamesRow) {
  try {
    parse_group_file(R"({"name": "bad", "order": 2, "table": [[0,1],[1,1]]})");
    FAIL();
  } catch (const GroupError& e) {
    EXPECT_EQ(e.kind(), GroupError::Kind::kNotLatinSquare);
    EXPECT_NE(std::string(e.what()).find("row 1"), std::string::npos);
  }
}

TEST(CatalogTest, ParseErrorsArePositioned) {
  try {
    parse_group_file("{\"name\": \"x\", \"table\": [[0]", "f.json");
    FAIL();
  } catch (const FileFormatError& e) {
    EXPECT_GT(e.offset(), 0u);
    EXPECT_NE(std::string(e.what()).find("f.json"), std::string::npos);
  }
  EXPECT_THROW(parse_group_file(R"({"name": "x", "order": 3, "table": [[0]]})"), FileFormatError);
  EXPECT_THROW(parse_group_file(R"({"name": "x", "table": "nope"})"), FileFormatError);
  EXPECT_THROW(parse_group_file(R"({"name": "x"})"), FileFormatError);
  EXPECT_THROW(parse_group_file(R"([1, 2])"), FileFormatError);
  EXPECT_THROW(parse_group_file(R"({"generators": [[0]]})"), FileFormatError);
}

TEST(CatalogTest, LoadMissingFile) {
  EXPECT_THROW(load_group(temp_path("does_not_exist.json")), std::runtime_error);
}

TEST(CatalogTest, AtomicWriteReplacesContents) {
  const auto path = temp_path("atomic.txt");
  write_text(path, "old");
  write_file_atomic(path, "new contents");
  std::ifstream in(path);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "new contents");
  std::filesystem::remove(path);
}
