#include "wordprop/wordgraph.hpp"

#include <sstream>
#include <stdexcept>

#include "wordprop/parallel.hpp"

namespace wordprop {

namespace {

// Rows below this size are not worth a thread.
constexpr std::size_t kParallelRowThreshold = 256;

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

}  // namespace

WordGraph::WordGraph(std::size_t vertices, std::string group_name, std::string word_source)
    : vertices_(vertices),
      stride_((vertices + 63) / 64),
      bits_(vertices * ((vertices + 63) / 64), 0),
      group_name_(std::move(group_name)),
      word_source_(std::move(word_source)) {}

WordGraph WordGraph::build(const Group& g, const Word& w) {
  const std::size_t t = g.order();
  WordGraph graph(t, g.name(), w.source().empty() ? w.to_string() : w.source());
  const auto inv = g.inverses();
  const Element e = g.identity();
  const auto& letters = w.letters();

  auto fill_row = [&](std::size_t a) {
    std::uint64_t* row = graph.row_data(a);
    const Element x = static_cast<Element>(a);
    for (std::size_t b = 0; b < t; ++b) {
      const Element y = static_cast<Element>(b);
      const Element values[2][2] = {{x, inv[x]}, {y, inv[y]}};
      Element acc = e;
      for (const Letter& l : letters) {
        acc = g.row(acc)[values[static_cast<int>(l.var)][l.inverse ? 1 : 0]];
      }
      if (acc != e) row[b >> 6] |= std::uint64_t{1} << (b & 63);
    }
  };
  detail::parallel_for(t, fill_row, t < kParallelRowThreshold ? 1 : 0);
  graph.recount();
  return graph;
}

WordGraph WordGraph::from_arcs(std::size_t vertex_count,
                               const std::vector<std::pair<Element, Element>>& arcs,
                               std::string name) {
  WordGraph graph(vertex_count, std::move(name), "");
  for (const auto& [a, b] : arcs) {
    if (a >= vertex_count || b >= vertex_count) {
      throw std::out_of_range("arc endpoint outside the vertex range");
    }
    graph.row_data(a)[b >> 6] |= std::uint64_t{1} << (b & 63);
  }
  graph.recount();
  return graph;
}

void WordGraph::recount() {
  arcs_ = 0;
  for (std::uint64_t word : bits_) arcs_ += static_cast<std::size_t>(std::popcount(word));
}

BitRowView WordGraph::out_neighborhood(Element a) const {
  if (a >= vertices_) throw std::out_of_range("vertex index outside the graph");
  return {std::span<const std::uint64_t>(bits_.data() + a * stride_, stride_), vertices_};
}

bool WordGraph::is_loop_free() const {
  for (std::size_t a = 0; a < vertices_; ++a)
    if (has_arc(static_cast<Element>(a), static_cast<Element>(a))) return false;
  return true;
}

bool WordGraph::is_symmetric() const {
  for (std::size_t a = 0; a < vertices_; ++a)
    for (std::size_t b = a + 1; b < vertices_; ++b)
      if (has_arc(static_cast<Element>(a), static_cast<Element>(b)) !=
          has_arc(static_cast<Element>(b), static_cast<Element>(a)))
        return false;
  return true;
}

Rational satisfaction_probability(const WordGraph& graph) {
  const Integer t = graph.vertex_count();
  const Integer pairs = t * t;
  return Rational(pairs - Integer(graph.arc_count()), pairs);
}

std::string export_dot(const WordGraph& graph) {
  std::ostringstream out;
  std::string title = graph.word_source().empty() ? graph.group_name()
                                                  : graph.word_source() + " on " + graph.group_name();
  out << "digraph " << quote(title) << " {\n";
  for (std::size_t a = 0; a < graph.vertex_count(); ++a) out << "  " << a << ";\n";
  for (std::size_t a = 0; a < graph.vertex_count(); ++a) {
    const BitRowView row = graph.out_neighborhood(static_cast<Element>(a));
    for (std::size_t b = 0; b < row.size; ++b)
      if (row.test(b)) out << "  " << a << " -> " << b << ";\n";
  }
  out << "}\n";
  return out.str();
}

GraphSummary summarize(const WordGraph& graph) {
  return {graph.group_name(), graph.word_source(), graph.vertex_count(), graph.arc_count(),
          format_rational(satisfaction_probability(graph))};
}

}  // namespace wordprop
