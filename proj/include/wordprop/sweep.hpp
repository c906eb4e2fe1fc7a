#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "wordprop/bounds.hpp"
#include "wordprop/group.hpp"
#include "wordprop/property.hpp"
#include "wordprop/word.hpp"

namespace wordprop {

/// Sweep caps. Exceeding them is an error, never a silent truncation.
inline constexpr std::size_t kSweepMaxM = 4;
inline constexpr std::size_t kSweepMaxOrder = 512;

struct SweepConfig {
  Word word;
  std::string word_label;
  GapConstant gamma = GapConstant::gustafson();
  std::size_t m_max = 3;
  std::size_t n_max = 16;
  std::vector<OverlapPolicy> policies{OverlapPolicy::kAllowOverlap, OverlapPolicy::kRequireDisjoint};
};

/// One report line; numeric fields are exact integers or "p/q" strings.
struct SweepRow {
  std::string group;
  std::size_t order = 0;
  std::string word;
  std::size_t m = 0;
  std::size_t n = 0;
  OverlapPolicy policy = OverlapPolicy::kAllowOverlap;
  bool property_holds = false;
  std::size_t frontier = 0;
  std::size_t eta = 0;
  std::string probability;
  std::string bound_lhs;
  std::string bound_rhs;
  /// "true"/"false" for checked rows, otherwise the branch name.
  std::string bound_holds;
  bool violation = false;
};

struct GroupSummary {
  std::string group;
  std::size_t order = 0;
  std::size_t eta = 0;
  std::string probability;
  bool identity = false;
  std::size_t checked = 0;
  std::size_t violations = 0;
};

struct SweepReport {
  std::string word;
  std::string gamma;
  std::string gamma_source;
  std::size_t m_max = 0;
  std::size_t n_max = 0;
  std::size_t max_order = 0;
  std::string timestamp;
  std::vector<GroupSummary> groups;
  /// Sorted by (order, group, m, n, policy).
  std::vector<SweepRow> rows;

  std::size_t violations() const;
  std::size_t checked_rows() const;
  /// (group, m, n) triples whose property outcome differs between the two
  /// overlap policies; 0 when only one policy was swept.
  std::size_t policy_divergences() const;
};

SweepReport run_sweep(const std::vector<Group>& groups, const SweepConfig& config);

/// Supremum of the satisfaction probability over the groups in which `w` is
/// not an identity; nullopt when it is an identity in all of them.
std::optional<Rational> empirical_gamma(const std::vector<Group>& groups, const Word& w);

enum class ReportFormat { kCsv, kJson };

ReportFormat parse_report_format(std::string_view text);

inline constexpr const char* kCsvHeader =
    "group,order,word,m,n,policy,property_holds,frontier,eta,probability,bound_lhs,bound_rhs,"
    "bound_holds";

std::string report_csv(const SweepReport& report);
std::string report_json(const SweepReport& report);
void write_report(const SweepReport& report, const std::filesystem::path& path, ReportFormat format);

}  // namespace wordprop
