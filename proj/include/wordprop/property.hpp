#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "wordprop/bounds.hpp"
#include "wordprop/group.hpp"
#include "wordprop/word.hpp"
#include "wordprop/wordgraph.hpp"

namespace wordprop {

enum class OverlapPolicy { kAllowOverlap, kRequireDisjoint };

const char* to_string(OverlapPolicy policy);
/// Accepts "allow_overlap"/"allow" and "require_disjoint"/"disjoint".
OverlapPolicy parse_overlap_policy(std::string_view text);

/// Sizes of the two sets in the w_{m,n}-property. m <= n is not required.
struct PropertyQuery {
  std::size_t m = 1;
  std::size_t n = 1;
  OverlapPolicy policy = OverlapPolicy::kAllowOverlap;
};

/// When the property fails, the witnesses are sets M, N (sorted ascending)
/// with an arc x -> y for every x in M and y in N.
struct PropertyResult {
  bool has_property = true;
  std::optional<std::vector<Element>> witness_m;
  std::optional<std::vector<Element>> witness_n;
  std::uint64_t subsets_examined = 0;
};

/// Decides the w_{m,n}-property on `graph`: it holds iff the graph has no
/// complete bipartite configuration M => N with |M| = m, |N| = n.
///
/// m-subsets are enumerated in lexicographic order with the running
/// intersection of out-rows; a branch is cut as soon as the intersection
/// (minus the chosen vertices under kRequireDisjoint) drops below n, and
/// sibling vertices that are twins of an already explored sibling are
/// skipped. Twins share an out-row (and, under kRequireDisjoint, an
/// in-column). The witness is the first failing M in lexicographic order
/// paired with the n smallest admissible targets.
PropertyResult has_wmn_property(const WordGraph& graph, const PropertyQuery& q);

class InfeasibleEnumeration : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct NaiveLimits {
  std::size_t max_vertices = 24;
  std::size_t max_m = 3;
  std::size_t max_n = 3;
};

/// Brute force over every (M, N) pair, for cross-checking has_wmn_property.
PropertyResult naive_oracle(const WordGraph& graph, const PropertyQuery& q,
                            const NaiveLimits& limits = {});

/// Largest n for which the property fails at this m (0 if it never fails):
/// the maximum over m-subsets M of the common out-neighbourhood size.
std::size_t property_frontier(const WordGraph& graph, std::size_t m,
                              OverlapPolicy policy = OverlapPolicy::kAllowOverlap);

/// Re-checks a failing result by evaluating the word directly.
bool witness_is_valid(const Group& g, const Word& w, const PropertyQuery& q,
                      const PropertyResult& result);

struct TheoremRow {
  enum class Branch { kIdentity, kChecked, kNotApplicable };

  std::size_t m = 0;
  std::size_t n = 0;
  OverlapPolicy policy = OverlapPolicy::kAllowOverlap;
  Branch branch = Branch::kNotApplicable;
  bool property_holds = false;
  /// Always computed; only a kChecked row with !bound.holds is a violation.
  BoundReport bound;

  bool is_violation() const { return branch == Branch::kChecked && !bound.holds; }
};

const char* to_string(TheoremRow::Branch branch);

/// Every 1 <= m <= n with m <= m_max, n <= n_max: identity rows when w is an
/// identity in g, otherwise the order bound for each (m, n) at which the
/// property holds.
std::vector<TheoremRow> verify_theorem_on(const Group& g, const Word& w, const GapConstant& gamma,
                                          std::size_t m_max, std::size_t n_max,
                                          OverlapPolicy policy = OverlapPolicy::kAllowOverlap);

/// Same, on a graph already built from the group (identity iff no arcs).
std::vector<TheoremRow> verify_theorem_on(const WordGraph& graph, const GapConstant& gamma,
                                          std::size_t m_max, std::size_t n_max,
                                          OverlapPolicy policy = OverlapPolicy::kAllowOverlap);

}  // namespace wordprop
