#include "wordprop/property.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <string>

namespace wordprop {

const char* to_string(OverlapPolicy policy) {
  return policy == OverlapPolicy::kAllowOverlap ? "allow_overlap" : "require_disjoint";
}

OverlapPolicy parse_overlap_policy(std::string_view text) {
  if (text == "allow_overlap" || text == "allow") return OverlapPolicy::kAllowOverlap;
  if (text == "require_disjoint" || text == "disjoint") return OverlapPolicy::kRequireDisjoint;
  throw std::invalid_argument("unknown overlap policy '" + std::string(text) + "'");
}

const char* to_string(TheoremRow::Branch branch) {
  switch (branch) {
    case TheoremRow::Branch::kIdentity: return "identity-branch";
    case TheoremRow::Branch::kChecked: return "checked";
    case TheoremRow::Branch::kNotApplicable: return "not-applicable";
  }
  return "unknown";
}

namespace {

using Bits = std::vector<std::uint64_t>;

void check_query(std::size_t m, std::size_t n) {
  if (m < 1 || n < 1) throw std::invalid_argument("property query needs m >= 1 and n >= 1");
}

// Depth-first search over m-subsets of vertices in lexicographic order.
class SubsetSearch {
 public:
  SubsetSearch(const WordGraph& graph, std::size_t m, OverlapPolicy policy)
      : graph_(graph),
        t_(graph.vertex_count()),
        stride_(graph.words_per_row()),
        m_(m),
        disjoint_(policy == OverlapPolicy::kRequireDisjoint),
        levels_(m + 1, Bits(stride_, 0)),
        stamp_(m, std::vector<std::uint64_t>(t_, 0)) {
    classify_twins();
    // The empty intersection is every vertex.
    for (std::size_t b = 0; b < t_; ++b) levels_[0][b >> 6] |= std::uint64_t{1} << (b & 63);
  }

  // First M (lexicographically) whose admissible targets number >= n.
  bool find(std::size_t n) {
    threshold_ = n;
    maximise_ = false;
    found_ = false;
    if (m_ <= t_) dfs(0, 0);
    return found_;
  }

  std::size_t frontier() {
    maximise_ = true;
    best_ = 0;
    threshold_ = 1;
    if (m_ <= t_) dfs(0, 0);
    return best_;
  }

  std::vector<Element> witness_m() const { return witness_; }

  std::vector<Element> witness_n(std::size_t n) const {
    std::vector<Element> out;
    for (std::size_t b = 0; b < t_ && out.size() < n; ++b) {
      if (!((witness_targets_[b >> 6] >> (b & 63)) & 1u)) continue;
      out.push_back(static_cast<Element>(b));
    }
    return out;
  }

  std::uint64_t examined() const { return examined_; }

 private:
  void classify_twins() {
    std::map<Bits, std::uint32_t> ids;
    twin_.resize(t_);
    for (std::size_t a = 0; a < t_; ++a) {
      const BitRowView row = graph_.out_neighborhood(static_cast<Element>(a));
      Bits key(row.words.begin(), row.words.end());
      if (disjoint_) {
        Bits column(stride_, 0);
        for (std::size_t x = 0; x < t_; ++x)
          if (graph_.has_arc(static_cast<Element>(x), static_cast<Element>(a)))
            column[x >> 6] |= std::uint64_t{1} << (x & 63);
        key.insert(key.end(), column.begin(), column.end());
      }
      twin_[a] = ids.try_emplace(std::move(key), static_cast<std::uint32_t>(ids.size())).first->second;
    }
  }

  // Targets still admissible given the chosen prefix.
  std::size_t admissible(const Bits& bits) const {
    std::size_t c = 0;
    for (std::size_t i = 0; i < stride_; ++i) {
      std::uint64_t w = bits[i];
      if (disjoint_) w &= ~chosen_mask_[i];
      c += static_cast<std::size_t>(std::popcount(w));
    }
    return c;
  }

  bool cut(std::size_t bound) const { return maximise_ ? bound <= best_ : bound < threshold_; }

  void dfs(std::size_t depth, std::size_t start) {
    const Bits& current = levels_[depth];
    if (depth == m_) {
      ++examined_;
      const std::size_t c = admissible(current);
      if (maximise_) {
        best_ = std::max(best_, c);
      } else if (c >= threshold_) {
        found_ = true;
        witness_ = chosen_;
        witness_targets_ = current;
        if (disjoint_)
          for (std::size_t i = 0; i < stride_; ++i) witness_targets_[i] &= ~chosen_mask_[i];
      }
      return;
    }

    const std::uint64_t visit = ++visit_counter_;
    Bits& next = levels_[depth + 1];
    for (std::size_t v = start; v + (m_ - depth) <= t_; ++v) {
      if (stamp_[depth][twin_[v]] == visit) continue;
      stamp_[depth][twin_[v]] = visit;

      const BitRowView row = graph_.out_neighborhood(static_cast<Element>(v));
      for (std::size_t i = 0; i < stride_; ++i) next[i] = current[i] & row.words[i];
      chosen_.push_back(static_cast<Element>(v));
      chosen_mask_[v >> 6] |= std::uint64_t{1} << (v & 63);

      // Intersections only shrink and chosen sets only grow below this node.
      if (!cut(admissible(next))) dfs(depth + 1, v + 1);

      chosen_mask_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
      chosen_.pop_back();
      if (found_) return;
    }
  }

  const WordGraph& graph_;
  std::size_t t_;
  std::size_t stride_;
  std::size_t m_;
  bool disjoint_;
  std::vector<Bits> levels_;
  std::vector<std::vector<std::uint64_t>> stamp_;
  std::vector<std::uint32_t> twin_;
  std::uint64_t visit_counter_ = 0;

  Bits chosen_mask_ = Bits(stride_, 0);
  std::vector<Element> chosen_;
  std::size_t threshold_ = 1;
  bool maximise_ = false;
  bool found_ = false;
  std::size_t best_ = 0;
  std::vector<Element> witness_;
  Bits witness_targets_;
  std::uint64_t examined_ = 0;
};

// Advances `c` to the next k-subset of [0, t) in lexicographic order.
bool next_combination(std::vector<Element>& c, std::size_t t) {
  const std::size_t k = c.size();
  for (std::size_t i = k; i-- > 0;) {
    if (c[i] < t - k + i) {
      ++c[i];
      for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

std::vector<Element> first_combination(std::size_t k) {
  std::vector<Element> c(k);
  for (std::size_t i = 0; i < k; ++i) c[i] = static_cast<Element>(i);
  return c;
}

}  // namespace

PropertyResult has_wmn_property(const WordGraph& graph, const PropertyQuery& q) {
  check_query(q.m, q.n);
  SubsetSearch search(graph, q.m, q.policy);
  PropertyResult result;
  if (search.find(q.n)) {
    result.has_property = false;
    result.witness_m = search.witness_m();
    result.witness_n = search.witness_n(q.n);
  }
  result.subsets_examined = search.examined();
  return result;
}

std::size_t property_frontier(const WordGraph& graph, std::size_t m, OverlapPolicy policy) {
  check_query(m, 1);
  SubsetSearch search(graph, m, policy);
  return search.frontier();
}

PropertyResult naive_oracle(const WordGraph& graph, const PropertyQuery& q,
                            const NaiveLimits& limits) {
  check_query(q.m, q.n);
  const std::size_t t = graph.vertex_count();
  if (t > limits.max_vertices || q.m > limits.max_m || q.n > limits.max_n) {
    throw InfeasibleEnumeration("naive oracle limited to " + std::to_string(limits.max_vertices) +
                                " vertices and m, n <= " + std::to_string(limits.max_m) + ", " +
                                std::to_string(limits.max_n));
  }
  PropertyResult result;
  if (q.m > t || q.n > t) return result;

  const bool disjoint = q.policy == OverlapPolicy::kRequireDisjoint;
  std::vector<Element> ms = first_combination(q.m);
  do {
    std::vector<Element> ns = first_combination(q.n);
    do {
      ++result.subsets_examined;
      bool ok = true;
      for (Element x : ms) {
        for (Element y : ns) {
          if ((disjoint && std::find(ms.begin(), ms.end(), y) != ms.end()) || !graph.has_arc(x, y)) {
            ok = false;
            break;
          }
        }
        if (!ok) break;
      }
      if (ok) {
        result.has_property = false;
        result.witness_m = ms;
        result.witness_n = ns;
        return result;
      }
    } while (next_combination(ns, t));
  } while (next_combination(ms, t));
  return result;
}

bool witness_is_valid(const Group& g, const Word& w, const PropertyQuery& q,
                      const PropertyResult& result) {
  if (result.has_property || !result.witness_m || !result.witness_n) return false;
  const auto& ms = *result.witness_m;
  const auto& ns = *result.witness_n;
  if (ms.size() != q.m || ns.size() != q.n) return false;
  const auto distinct = [&](const std::vector<Element>& s) {
    std::vector<Element> copy = s;
    std::sort(copy.begin(), copy.end());
    return std::adjacent_find(copy.begin(), copy.end()) == copy.end() &&
           (copy.empty() || copy.back() < g.order());
  };
  if (!distinct(ms) || !distinct(ns)) return false;
  for (Element x : ms) {
    for (Element y : ns) {
      if (q.policy == OverlapPolicy::kRequireDisjoint && x == y) return false;
      if (evaluate(w, g, {x, y}) == g.identity()) return false;
    }
  }
  return true;
}

std::vector<TheoremRow> verify_theorem_on(const WordGraph& graph, const GapConstant& gamma,
                                          std::size_t m_max, std::size_t n_max,
                                          OverlapPolicy policy) {
  const std::size_t order = graph.vertex_count();
  const bool identity = graph.arc_count() == 0;
  std::vector<TheoremRow> rows;
  for (std::size_t m = 1; m <= m_max; ++m) {
    for (std::size_t n = m; n <= n_max; ++n) {
      TheoremRow row;
      row.m = m;
      row.n = n;
      row.policy = policy;
      row.bound = main_bound_holds(order, gamma, m, n);
      if (identity) {
        row.branch = TheoremRow::Branch::kIdentity;
        row.property_holds = true;
      } else {
        row.property_holds = has_wmn_property(graph, {m, n, policy}).has_property;
        row.branch = row.property_holds ? TheoremRow::Branch::kChecked
                                        : TheoremRow::Branch::kNotApplicable;
      }
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

std::vector<TheoremRow> verify_theorem_on(const Group& g, const Word& w, const GapConstant& gamma,
                                          std::size_t m_max, std::size_t n_max,
                                          OverlapPolicy policy) {
  if (is_identity_in(w, g)) {
    return verify_theorem_on(WordGraph::from_arcs(g.order(), {}, g.name()), gamma, m_max, n_max,
                             policy);
  }
  return verify_theorem_on(WordGraph::build(g, w), gamma, m_max, n_max, policy);
}

}  // namespace wordprop
