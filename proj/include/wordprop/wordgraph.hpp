#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "wordprop/group.hpp"
#include "wordprop/rational.hpp"
#include "wordprop/word.hpp"

namespace wordprop {

/// Read-only view of one adjacency row; bit b set means arc a -> b.
struct BitRowView {
  std::span<const std::uint64_t> words;
  std::size_t size = 0;

  bool test(std::size_t b) const { return (words[b >> 6] >> (b & 63)) & 1u; }

  std::size_t count() const {
    std::size_t c = 0;
    for (std::uint64_t w : words) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
};

/// Directed graph on the elements of a group with an arc a -> b exactly when
/// w(a, b) != 1. Loops are included. Also usable as a plain digraph through
/// from_arcs().
class WordGraph {
 public:
  static WordGraph build(const Group& g, const Word& w);

  static WordGraph from_arcs(std::size_t vertex_count,
                             const std::vector<std::pair<Element, Element>>& arcs,
                             std::string name = "digraph");

  std::size_t vertex_count() const noexcept { return vertices_; }
  /// Number of arcs, loops included.
  std::size_t arc_count() const noexcept { return arcs_; }
  std::size_t words_per_row() const noexcept { return stride_; }

  bool has_arc(Element a, Element b) const { return out_neighborhood(a).test(b); }

  BitRowView out_neighborhood(Element a) const;

  const std::string& group_name() const noexcept { return group_name_; }
  const std::string& word_source() const noexcept { return word_source_; }

  bool is_loop_free() const;
  bool is_symmetric() const;

 private:
  WordGraph(std::size_t vertices, std::string group_name, std::string word_source);
  std::uint64_t* row_data(std::size_t a) { return bits_.data() + a * stride_; }
  void recount();

  std::size_t vertices_ = 0;
  std::size_t stride_ = 0;
  std::size_t arcs_ = 0;
  std::vector<std::uint64_t> bits_;
  std::string group_name_;
  std::string word_source_;
};

/// Fraction of ordered pairs (a, b) with w(a, b) = 1, i.e. (t^2 - arcs) / t^2.
Rational satisfaction_probability(const WordGraph& graph);

/// Graphviz description: every vertex on its own line, then one "a -> b;"
/// line per arc in row-major order.
std::string export_dot(const WordGraph& graph);

struct GraphSummary {
  std::string group_name;
  std::string word;
  std::size_t vertex_count = 0;
  std::size_t arc_count = 0;
  std::string probability;
};

GraphSummary summarize(const WordGraph& graph);

}  // namespace wordprop
