#include <gtest/gtest.h>

#include <map>
#include <random>

#include "support/oracles.hpp"
#include "wordprop/catalog.hpp"
#include "wordprop/word.hpp"

using namespace wordprop;

namespace {

WordError::Kind parse_error_kind(const std::string& text, std::size_t* offset = nullptr) {
  try {
    parse_word(text);
  } catch (const WordError& e) {
    if (offset) *offset = e.offset();
    return e.kind();
  }
  ADD_FAILURE() << "'" << text << "' parsed";
  return WordError::Kind::kUnknownName;
}

// All elements of the group generated by `gens`, as permutations.
std::vector<oracle::Perm> perm_closure(const std::vector<oracle::Perm>& gens) {
  std::vector<oracle::Perm> out{oracle::identity(static_cast<int>(gens.front().size()))};
  std::map<oracle::Perm, int> seen{{out[0], 0}};
  for (std::size_t i = 0; i < out.size(); ++i)
    for (const auto& g : gens) {
      auto next = oracle::compose(out[i], g);
      if (seen.emplace(next, 0).second) out.push_back(next);
    }
  return out;
}

// Repeatedly deletes the first cancelling pair until none is left.
std::vector<Letter> reduce_by_passes(std::vector<Letter> w) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      if (w[i + 1] == w[i].inverted()) {
        w.erase(w.begin() + static_cast<std::ptrdiff_t>(i), w.begin() + static_cast<std::ptrdiff_t>(i) + 2);
        changed = true;
        break;
      }
    }
  }
  return w;
}

std::vector<Letter> random_letters(std::mt19937_64& rng, std::size_t len) {
  std::uniform_int_distribution<int> pick(0, 3);
  std::vector<Letter> out;
  for (std::size_t i = 0; i < len; ++i) {
    const int v = pick(rng);
    out.push_back({v < 2 ? Var::kX : Var::kY, v % 2 == 1});
  }
  return out;
}

std::string random_expression(std::mt19937_64& rng, int depth) {
  std::uniform_int_distribution<int> pick(0, depth > 0 ? 6 : 3);
  switch (pick(rng)) {
    case 0: return "x";
    case 1: return "Y";
    case 2: return "y^-1";
    case 3: return "X";
    case 4: return "(" + random_expression(rng, depth - 1) + random_expression(rng, depth - 1) + ")^" +
                   std::to_string(std::uniform_int_distribution<int>(-2, 3)(rng));
    case 5: return "[" + random_expression(rng, depth - 1) + "," + random_expression(rng, depth - 1) + "]";
    default:
      return "[" + random_expression(rng, depth - 1) + ", " + random_expression(rng, depth - 1) + ", " +
             random_expression(rng, depth - 1) + "]";
  }
}

}  // namespace

TEST(WordTest, ParsesCommutator) {
  const Word w = parse_word("[x,y]");
  EXPECT_EQ(w.length(), 4u);
  EXPECT_EQ(w.to_string(), "XYxy");
}

TEST(WordTest, FreeReductionCancels) {
  EXPECT_TRUE(parse_word("x x^-1").empty());
  EXPECT_TRUE(parse_word("yxXY").empty());
  EXPECT_EQ(parse_word("x^0").to_string(), "1");
  EXPECT_TRUE(parse_word("1").empty());
}

TEST(WordTest, ParsesEngelWord) {
  // [[x,y],y] = (XYxy)^-1 Y (XYxy) y = YXyx Y XYxy y, already reduced.
  const Word w = parse_word("[x,y,y]");
  EXPECT_EQ(w.length(), 10u);
  EXPECT_EQ(w.to_string(), "YXyxYXYxyy");
  EXPECT_EQ(w, parse_word("[[x,y],y]"));
}

TEST(WordTest, PowersAndInverses) {
  EXPECT_EQ(parse_word("x^3").to_string(), "xxx");
  EXPECT_EQ(parse_word("(xy)^-2").to_string(), "YXYX");
  EXPECT_EQ(parse_word("X^-1").to_string(), "x");
  EXPECT_EQ(parse_word("x^2^3").length(), 6u);
  EXPECT_EQ(parse_word("[x,y]^-1"), parse_word("[y,x]"));
  EXPECT_EQ(parse_word(" [ x , y ] "), parse_word("[x,y]"));
  EXPECT_EQ(parse_word("x^-1").inverse(), parse_word("x"));
}

TEST(WordTest, SyntaxErrorsCarryOffsets) {
  std::size_t offset = 99;
  EXPECT_EQ(parse_error_kind("", &offset), WordError::Kind::kSyntaxError);
  EXPECT_EQ(offset, 0u);
  EXPECT_EQ(parse_error_kind("x^", &offset), WordError::Kind::kSyntaxError);
  EXPECT_EQ(offset, 2u);
  EXPECT_EQ(parse_error_kind("(x", &offset), WordError::Kind::kSyntaxError);
  EXPECT_EQ(offset, 2u);
  EXPECT_EQ(parse_error_kind("[x]", &offset), WordError::Kind::kSyntaxError);
  EXPECT_EQ(offset, 2u);
  EXPECT_EQ(parse_error_kind("x,y", &offset), WordError::Kind::kSyntaxError);
  EXPECT_EQ(offset, 1u);
  EXPECT_EQ(parse_error_kind("x^99999999999999999999"), WordError::Kind::kSyntaxError);
  EXPECT_EQ(parse_error_kind("(xy)^1000000"), WordError::Kind::kSyntaxError);
}

TEST(WordTest, UnknownVariable) {
  std::size_t offset = 99;
  EXPECT_EQ(parse_error_kind("z", &offset), WordError::Kind::kUnknownVariable);
  EXPECT_EQ(offset, 0u);
  EXPECT_EQ(parse_error_kind("x[y,a]", &offset), WordError::Kind::kUnknownVariable);
  EXPECT_EQ(offset, 4u);
}

TEST(WordTest, NamedWords) {
  EXPECT_EQ(named_word("commutator"), parse_word("[x,y]"));
  EXPECT_EQ(named_word("engel2"), parse_word("[x,y,y]"));
  EXPECT_EQ(named_word("engel1"), parse_word("[x,y]"));
  EXPECT_EQ(named_word("engel3"), parse_word("[[[x,y],y],y]"));
  EXPECT_EQ(named_word("power3"), parse_word("xxx"));
  for (const char* bad : {"engel0", "engel", "enge12x", "power", "power-1", "square", ""}) {
    try {
      named_word(bad);
      ADD_FAILURE() << bad;
    } catch (const WordError& e) {
      EXPECT_EQ(e.kind(), WordError::Kind::kUnknownName) << bad;
    }
  }
}

TEST(WordTest, PrintParseRoundTrip) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 500; ++i) {
    const std::string expr = random_expression(rng, 3);
    const Word w = parse_word(expr);
    EXPECT_EQ(parse_word(w.to_string()), w) << expr;
  }
}

TEST(WordTest, FreeReductionIsConfluent) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 2000; ++i) {
    const auto letters = random_letters(rng, rng() % 30);
    EXPECT_EQ(free_reduce(letters), reduce_by_passes(letters));
  }
}

TEST(WordTest, EvaluateRespectsReduction) {
  std::mt19937_64 rng(13);
  const std::vector<Group> groups{builtin(Family::kSymmetric, {4}), builtin(Family::kQuaternion8),
                                  builtin(Family::kHeisenberg, {3})};
  for (int i = 0; i < 300; ++i) {
    const Group& g = groups[i % groups.size()];
    const auto letters = random_letters(rng, rng() % 25);
    const Assignment a{static_cast<Element>(rng() % g.order()), static_cast<Element>(rng() % g.order())};
    Element acc = g.identity();
    for (const Letter& l : letters) {
      const Element v = l.var == Var::kX ? a.x : a.y;
      acc = g.multiply(acc, l.inverse ? g.inverse(v) : v);
    }
    EXPECT_EQ(evaluate(Word::from_letters(letters), g, a), acc);
  }
}

TEST(WordTest, EvaluateExamples) {
  const Group s3 = builtin(Family::kSymmetric, {3});
  const Group z6 = cyclic_group(6);
  EXPECT_EQ(evaluate(Word{}, s3, {1, 2}), s3.identity());
  for (Element a = 0; a < 6; ++a)
    for (Element b = 0; b < 6; ++b) EXPECT_EQ(evaluate(named_word("commutator"), z6, {a, b}), 0u);
  EXPECT_THROW(evaluate(Word{}, s3, {6, 0}), GroupError);
}

TEST(WordTest, CommutatorOfTranspositionsIsThreeCycle) {
  const oracle::Perm t01{1, 0, 2};
  const oracle::Perm t12{0, 2, 1};
  const oracle::Perm c = oracle::eval("XYxy", t01, t12);
  // A 3-cycle has no fixed points on 3 points.
  EXPECT_TRUE(c[0] != 0 && c[1] != 1 && c[2] != 2);

  // Same computation through the library: S3 generated by (01) and (012),
  // element 1 is (01); find (12) by its action.
  const Group s3 = Group::from_permutation_generators(3, {{1, 0, 2}, {1, 2, 0}}, "S3");
  const Word comm = parse_word("[x,y]");
  Element found = 0;
  int three_cycles = 0;
  for (Element y = 0; y < 6; ++y) {
    const Element r = evaluate(comm, s3, {1, y});
    if (r != s3.identity()) {
      ++three_cycles;
      found = r;
      EXPECT_EQ(s3.multiply(s3.multiply(r, r), r), s3.identity());
    }
  }
  EXPECT_EQ(three_cycles, 4);  // (01) fails to commute with 4 elements
  EXPECT_NE(found, s3.identity());
}

TEST(WordTest, IdentityChecks) {
  EXPECT_TRUE(is_identity_in(named_word("commutator"), cyclic_group(4)));
  EXPECT_FALSE(is_identity_in(named_word("commutator"), builtin(Family::kSymmetric, {3})));
  EXPECT_TRUE(is_identity_in(named_word("engel2"), builtin(Family::kDihedral, {4})));
  EXPECT_TRUE(is_identity_in(Word{}, builtin(Family::kSymmetric, {3})));
}

TEST(WordTest, EngelIdentityAgreesWithPermutationOracle) {
  const std::string engel2 = parse_word("[x,y,y]").to_string();
  const auto d4 = perm_closure({{1, 2, 3, 0}, {0, 3, 2, 1}});
  ASSERT_EQ(d4.size(), 8u);
  EXPECT_EQ(oracle::count_satisfying(d4, engel2), 64u);

  const auto s3 = oracle::all_perms(3);
  const auto s4 = oracle::all_perms(4);
  EXPECT_LT(oracle::count_satisfying(s3, engel2), 36u);
  EXPECT_LT(oracle::count_satisfying(s4, engel2), 576u);
  EXPECT_FALSE(is_identity_in(named_word("engel2"), builtin(Family::kSymmetric, {3})));
  EXPECT_FALSE(is_identity_in(named_word("engel2"), builtin(Family::kSymmetric, {4})));
}

TEST(WordTest, CommutatorVanishesExactlyOnCommutingPairs) {
  const Word comm = named_word("commutator");
  for (const auto& entry : default_catalog(24)) {
    const Group g = build(entry);
    for (Element a = 0; a < g.order(); ++a)
      for (Element b = 0; b < g.order(); ++b)
        ASSERT_EQ(evaluate(comm, g, {a, b}) == g.identity(), g.multiply(a, b) == g.multiply(b, a))
            << g.name();
  }
}
