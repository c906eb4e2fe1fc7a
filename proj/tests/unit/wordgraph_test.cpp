#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "support/oracles.hpp"
#include "wordprop/catalog.hpp"
#include "wordprop/wordgraph.hpp"

using namespace wordprop;

namespace {

std::size_t count_lines_containing(const std::string& text, const std::string& needle) {
  std::istringstream in(text);
  std::size_t count = 0;
  for (std::string line; std::getline(in, line);) count += line.find(needle) != std::string::npos;
  return count;
}

}  // namespace

TEST(WordGraphTest, AbelianCommutatorGraphIsEmpty) {
  const WordGraph g = WordGraph::build(cyclic_group(12), named_word("commutator"));
  EXPECT_EQ(g.vertex_count(), 12u);
  EXPECT_EQ(g.arc_count(), 0u);
  EXPECT_EQ(satisfaction_probability(g), Rational(1));
  EXPECT_EQ(g.out_neighborhood(5).count(), 0u);
}

TEST(WordGraphTest, SymmetricGroupCommutatorGraph) {
  // Commuting pairs of S3 counted on explicit permutations.
  const std::size_t commuting = oracle::count_satisfying(oracle::all_perms(3), "XYxy");
  ASSERT_EQ(commuting, 18u);

  const Group s3 = builtin(Family::kSymmetric, {3});
  const WordGraph g = WordGraph::build(s3, named_word("commutator"));
  EXPECT_EQ(g.arc_count(), 36u - commuting);
  EXPECT_EQ(satisfaction_probability(g), Rational(1, 2));
  EXPECT_EQ(g.out_neighborhood(s3.identity()).count(), 0u);
  // Element 1 is the transposition (0 1); its centralizer has order 2.
  EXPECT_EQ(g.out_neighborhood(1).count(), 4u);
  EXPECT_THROW(g.out_neighborhood(6), std::out_of_range);
}

TEST(WordGraphTest, QuaternionCommutatorProbability) {
  std::size_t commuting = 0;
  for (auto a : oracle::quaternion_units())
    for (auto b : oracle::quaternion_units()) commuting += oracle::qmul(a, b) == oracle::qmul(b, a);
  ASSERT_EQ(commuting, 40u);
  const WordGraph g = WordGraph::build(builtin(Family::kQuaternion8), named_word("commutator"));
  EXPECT_EQ(satisfaction_probability(g), Rational(commuting, 64));
  EXPECT_EQ(satisfaction_probability(g), Rational(5, 8));
}

TEST(WordGraphTest, TrivialGroup) {
  const WordGraph g = WordGraph::build(cyclic_group(1), parse_word("x^2y"));
  EXPECT_EQ(g.vertex_count(), 1u);
  EXPECT_EQ(g.arc_count(), 0u);
}

TEST(WordGraphTest, LoopsAreCounted) {
  // x^2 != 1 for the two generators of Z3, for every y: arcs 1->*, 2->*.
  const WordGraph g = WordGraph::build(cyclic_group(3), named_word("power2"));
  EXPECT_EQ(g.arc_count(), 6u);
  EXPECT_FALSE(g.is_loop_free());
  EXPECT_EQ(satisfaction_probability(g), Rational(1, 3));
}

TEST(WordGraphTest, ArcsMatchDirectEvaluation) {
  std::mt19937_64 rng(3);
  const Word w = parse_word("[x,y,y]x^2");
  for (const auto& entry : default_catalog(40)) {
    const Group g = build(entry);
    const WordGraph graph = WordGraph::build(g, w);
    std::size_t popcount = 0;
    for (Element a = 0; a < g.order(); ++a) popcount += graph.out_neighborhood(a).count();
    EXPECT_EQ(popcount, graph.arc_count());
    for (int i = 0; i < 50; ++i) {
      const Element a = static_cast<Element>(rng() % g.order());
      const Element b = static_cast<Element>(rng() % g.order());
      EXPECT_EQ(graph.has_arc(a, b), evaluate(w, g, {a, b}) != g.identity());
    }
  }
}

TEST(WordGraphTest, CatalogInvariants) {
  for (const auto& entry : default_catalog(64)) {
    const Group g = build(entry);
    const WordGraph comm = WordGraph::build(g, named_word("commutator"));
    EXPECT_TRUE(comm.is_symmetric()) << g.name();
    EXPECT_TRUE(comm.is_loop_free()) << g.name();
    EXPECT_EQ(comm.arc_count() == 0, is_identity_in(named_word("commutator"), g)) << g.name();
    EXPECT_EQ(satisfaction_probability(comm) == 1, comm.arc_count() == 0);

    const WordGraph engel = WordGraph::build(g, named_word("engel2"));
    EXPECT_TRUE(engel.is_loop_free()) << g.name();
    EXPECT_EQ(engel.arc_count() == 0, is_identity_in(named_word("engel2"), g)) << g.name();
  }
}

TEST(WordGraphTest, LargeGroupsUseParallelRowsConsistently) {
  // Order 384 takes the threaded path when cores are available.
  const Group g = direct_product(builtin(Family::kSymmetric, {4}), builtin(Family::kQuaternion8));
  const Group h = direct_product(g, cyclic_group(2));
  const WordGraph graph = WordGraph::build(h, named_word("commutator"));
  std::size_t commuting = 0;
  for (Element a = 0; a < h.order(); ++a)
    for (Element b = 0; b < h.order(); ++b) commuting += h.multiply(a, b) == h.multiply(b, a);
  EXPECT_EQ(graph.arc_count(), h.order() * h.order() - commuting);
}

TEST(WordGraphTest, DotExport) {
  const WordGraph single = WordGraph::from_arcs(1, {});
  EXPECT_EQ(export_dot(single), "digraph \"digraph\" {\n  0;\n}\n");

  const WordGraph two = WordGraph::from_arcs(2, {{0, 1}});
  const std::string dot = export_dot(two);
  EXPECT_EQ(count_lines_containing(dot, "->"), 1u);
  EXPECT_EQ(count_lines_containing(dot, "  0 -> 1;"), 1u);

  const WordGraph s3 = WordGraph::build(builtin(Family::kSymmetric, {3}), named_word("commutator"));
  EXPECT_EQ(count_lines_containing(export_dot(s3), "->"), 18u);
  EXPECT_EQ(export_dot(s3), export_dot(s3));
}

TEST(WordGraphTest, FromArcsRejectsOutOfRange) {
  EXPECT_THROW(WordGraph::from_arcs(2, {{0, 2}}), std::out_of_range);
}

TEST(WordGraphTest, Summary) {
  const GraphSummary s =
      summarize(WordGraph::build(builtin(Family::kSymmetric, {3}), named_word("commutator")));
  EXPECT_EQ(s.group_name, "S3");
  EXPECT_EQ(s.word, "[x,y]");
  EXPECT_EQ(s.vertex_count, 6u);
  EXPECT_EQ(s.arc_count, 18u);
  EXPECT_EQ(s.probability, "1/2");
}
