#include "wordprop/sweep.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "wordprop/catalog.hpp"
#include "wordprop/parallel.hpp"
#include "wordprop/wordgraph.hpp"

namespace wordprop {

std::size_t SweepReport::violations() const {
  return static_cast<std::size_t>(
      std::count_if(rows.begin(), rows.end(), [](const SweepRow& r) { return r.violation; }));
}

std::size_t SweepReport::checked_rows() const {
  return static_cast<std::size_t>(std::count_if(
      rows.begin(), rows.end(), [](const SweepRow& r) { return r.bound_holds == "true" || r.bound_holds == "false"; }));
}

std::size_t SweepReport::policy_divergences() const {
  std::map<std::tuple<std::string, std::size_t, std::size_t>, std::set<bool>> outcomes;
  for (const SweepRow& r : rows) outcomes[{r.group, r.m, r.n}].insert(r.property_holds);
  return static_cast<std::size_t>(
      std::count_if(outcomes.begin(), outcomes.end(), [](const auto& kv) { return kv.second.size() > 1; }));
}

namespace {

struct GroupResult {
  GroupSummary summary;
  std::vector<SweepRow> rows;
};

GroupResult sweep_group(const Group& g, const SweepConfig& config) {
  const WordGraph graph = WordGraph::build(g, config.word);
  GroupResult out;
  out.summary.group = g.name();
  out.summary.order = g.order();
  out.summary.eta = graph.arc_count();
  out.summary.probability = format_rational(satisfaction_probability(graph));
  out.summary.identity = graph.arc_count() == 0;

  for (OverlapPolicy policy : config.policies) {
    std::vector<std::size_t> frontier(config.m_max + 1, 0);
    if (!out.summary.identity) {
      for (std::size_t m = 1; m <= config.m_max; ++m) frontier[m] = property_frontier(graph, m, policy);
    }
    for (const TheoremRow& t : verify_theorem_on(graph, config.gamma, config.m_max, config.n_max, policy)) {
      SweepRow row;
      row.group = g.name();
      row.order = g.order();
      row.word = config.word_label;
      row.m = t.m;
      row.n = t.n;
      row.policy = policy;
      row.property_holds = t.property_holds;
      row.frontier = frontier[t.m];
      row.eta = graph.arc_count();
      row.probability = out.summary.probability;
      row.bound_lhs = format_rational(t.bound.lhs);
      row.bound_rhs = format_rational(t.bound.rhs);
      if (t.branch == TheoremRow::Branch::kChecked) {
        row.bound_holds = t.bound.holds ? "true" : "false";
        ++out.summary.checked;
      } else {
        row.bound_holds = to_string(t.branch);
      }
      row.violation = t.is_violation();
      if (row.violation) ++out.summary.violations;
      out.rows.push_back(std::move(row));
    }
  }
  return out;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  return out + "\"";
}

}  // namespace

SweepReport run_sweep(const std::vector<Group>& groups, const SweepConfig& config) {
  if (config.m_max < 1 || config.m_max > kSweepMaxM) {
    throw std::invalid_argument("m_max must be in [1, " + std::to_string(kSweepMaxM) + "]");
  }
  if (config.n_max < 1) throw std::invalid_argument("n_max must be >= 1");
  for (const Group& g : groups) {
    if (g.order() > kSweepMaxOrder) {
      throw std::invalid_argument("group " + g.name() + " of order " + std::to_string(g.order()) +
                                  " exceeds the sweep cap " + std::to_string(kSweepMaxOrder));
    }
  }

  std::vector<GroupResult> results(groups.size());
  detail::parallel_for(groups.size(), [&](std::size_t i) { results[i] = sweep_group(groups[i], config); });

  SweepReport report;
  report.word = config.word_label;
  report.gamma = format_rational(config.gamma.gamma());
  report.gamma_source = to_string(config.gamma.source());
  report.m_max = config.m_max;
  report.n_max = config.n_max;
  for (const Group& g : groups) report.max_order = std::max(report.max_order, g.order());
  for (auto& r : results) {
    report.groups.push_back(std::move(r.summary));
    for (auto& row : r.rows) report.rows.push_back(std::move(row));
  }
  const auto key = [](const auto& r) { return std::tie(r.order, r.group); };
  std::stable_sort(report.groups.begin(), report.groups.end(),
                   [&](const GroupSummary& a, const GroupSummary& b) { return key(a) < key(b); });
  std::stable_sort(report.rows.begin(), report.rows.end(), [](const SweepRow& a, const SweepRow& b) {
    return std::tie(a.order, a.group, a.m, a.n, a.policy) < std::tie(b.order, b.group, b.m, b.n, b.policy);
  });
  return report;
}

std::optional<Rational> empirical_gamma(const std::vector<Group>& groups, const Word& w) {
  std::vector<std::optional<Rational>> probs(groups.size());
  detail::parallel_for(groups.size(), [&](std::size_t i) {
    const WordGraph graph = WordGraph::build(groups[i], w);
    if (graph.arc_count() > 0) probs[i] = satisfaction_probability(graph);
  });
  std::optional<Rational> best;
  for (const auto& p : probs)
    if (p && (!best || *p > *best)) best = p;
  return best;
}

ReportFormat parse_report_format(std::string_view text) {
  if (text == "csv") return ReportFormat::kCsv;
  if (text == "json") return ReportFormat::kJson;
  throw std::invalid_argument("unknown report format '" + std::string(text) + "'");
}

std::string report_csv(const SweepReport& report) {
  std::ostringstream out;
  out << kCsvHeader << "\n";
  for (const SweepRow& r : report.rows) {
    out << csv_field(r.group) << ',' << r.order << ',' << csv_field(r.word) << ',' << r.m << ','
        << r.n << ',' << to_string(r.policy) << ',' << (r.property_holds ? "true" : "false") << ','
        << r.frontier << ',' << r.eta << ',' << r.probability << ',' << r.bound_lhs << ','
        << r.bound_rhs << ',' << r.bound_holds << "\n";
  }
  return out.str();
}

std::string report_json(const SweepReport& report) {
  nlohmann::ordered_json doc;
  doc["metadata"] = {{"word", report.word},
                     {"gamma", report.gamma},
                     {"gamma_source", report.gamma_source},
                     {"m_max", report.m_max},
                     {"n_max", report.n_max},
                     {"max_order", report.max_order},
                     {"timestamp", report.timestamp},
                     {"policy_divergences", report.policy_divergences()}};
  auto rows = nlohmann::ordered_json::array();
  for (const SweepRow& r : report.rows) {
    rows.push_back({{"group", r.group},
                    {"order", r.order},
                    {"word", r.word},
                    {"m", r.m},
                    {"n", r.n},
                    {"policy", to_string(r.policy)},
                    {"property_holds", r.property_holds},
                    {"frontier", r.frontier},
                    {"eta", r.eta},
                    {"probability", r.probability},
                    {"bound_lhs", r.bound_lhs},
                    {"bound_rhs", r.bound_rhs},
                    {"bound_holds", r.bound_holds}});
  }
  doc["rows"] = std::move(rows);
  return doc.dump(2) + "\n";
}

void write_report(const SweepReport& report, const std::filesystem::path& path, ReportFormat format) {
  write_file_atomic(path, format == ReportFormat::kCsv ? report_csv(report) : report_json(report));
}

}  // namespace wordprop
