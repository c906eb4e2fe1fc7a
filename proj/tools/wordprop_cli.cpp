// Command-line front end: group inspection, word probabilities, property
// checks, theorem sweeps and DOT export.
//
// Exit codes: 0 success, 1 a check found a violation (or the property
// fails), 2 usage or input error.

#include <CLI11.hpp>

#include <chrono>
#include <ctime>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "wordprop/bounds.hpp"
#include "wordprop/catalog.hpp"
#include "wordprop/group.hpp"
#include "wordprop/property.hpp"
#include "wordprop/sweep.hpp"
#include "wordprop/word.hpp"
#include "wordprop/wordgraph.hpp"

namespace {

using namespace wordprop;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

struct GroupOptions {
  std::string family;
  std::vector<std::uint32_t> params;
  std::string file;

  void attach(CLI::App* app) {
    auto* fam = app->add_option("--family", family, "Built-in family (cyclic, dihedral, symmetric, "
                                                    "alternating, quaternion8, heisenberg, "
                                                    "elementary-abelian)");
    app->add_option("--param", params, "Family parameter (repeat for several)")->needs(fam);
    auto* f = app->add_option("--file", file, "Cayley table or permutation generator file");
    fam->excludes(f);
  }

  Group load() const {
    if (!file.empty()) return load_group(file);
    if (family.empty()) throw std::invalid_argument("one of --family or --file is required");
    return builtin(parse_family(family), params);
  }
};

struct WordOptions {
  std::string text;
  std::string named;

  void attach(CLI::App* app) {
    auto* w = app->add_option("--word", text, "Word over x, y, e.g. \"[x,y,y]\"");
    auto* n = app->add_option("--named", named, "Built-in word: commutator, engelK, powerK");
    w->excludes(n);
  }

  Word load() const {
    if (!text.empty()) return parse_word(text);
    return named_word(named.empty() ? "commutator" : named);
  }

  std::string label() const {
    if (!text.empty()) return text;
    return named.empty() ? "commutator" : named;
  }
};

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string join(const std::vector<Element>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(v[i]);
  }
  return out;
}

int cmd_group_info(const GroupOptions& go) {
  const Group g = go.load();
  std::cout << "group: " << g.name() << "\n"
            << "order: " << g.order() << "\n"
            << "abelian: " << (g.is_abelian() ? "true" : "false") << "\n"
            << "center: " << g.center().size() << "\n";
  return kExitOk;
}

int cmd_prob(const GroupOptions& go, const WordOptions& wo) {
  const Group g = go.load();
  const WordGraph graph = WordGraph::build(g, wo.load());
  std::cout << format_rational(satisfaction_probability(graph)) << "\n";
  return kExitOk;
}

int cmd_check_property(const GroupOptions& go, const WordOptions& wo, std::size_t m, std::size_t n,
                       const std::string& policy_text) {
  const Group g = go.load();
  const Word w = wo.load();
  const PropertyQuery q{m, n, parse_overlap_policy(policy_text)};
  const WordGraph graph = WordGraph::build(g, w);
  const PropertyResult r = has_wmn_property(graph, q);
  std::cout << "group=" << g.name() << " order=" << g.order() << " word=" << wo.label()
            << " m=" << m << " n=" << n << " policy=" << to_string(q.policy)
            << " property=" << (r.has_property ? "holds" : "fails")
            << " subsets_examined=" << r.subsets_examined << "\n";
  if (!r.has_property) {
    std::cout << "witness_M: " << join(*r.witness_m) << "\n"
              << "witness_N: " << join(*r.witness_n) << "\n";
    return kExitViolation;
  }
  return kExitOk;
}

struct VerifyOptions {
  std::string gamma = "5/8";
  std::size_t gamma_max_order = 64;
  std::size_t max_order = 128;
  std::size_t m_max = 3;
  std::size_t n_max = 16;
  std::string policy = "both";
  std::string report;
  std::string format = "csv";
  std::vector<std::string> group_files;
};

int cmd_verify(const WordOptions& wo, const VerifyOptions& vo) {
  const Word w = wo.load();
  if (vo.max_order > kSweepMaxOrder) {
    throw std::invalid_argument("--max-order is capped at " + std::to_string(kSweepMaxOrder));
  }
  const ReportFormat format = parse_report_format(vo.format);

  std::vector<Group> groups;
  for (const auto& entry : default_catalog(vo.max_order)) groups.push_back(build(entry));
  for (const auto& path : vo.group_files) groups.push_back(load_group(path));

  std::optional<GapConstant> gamma;
  if (vo.gamma == "empirical") {
    std::vector<Group> sample;
    for (const auto& entry : default_catalog(vo.gamma_max_order)) sample.push_back(build(entry));
    const auto sup = empirical_gamma(sample, w);
    if (!sup) throw DomainError("word is an identity on every catalog group; no empirical gap");
    gamma.emplace(*sup, GapConstant::Source::kEmpiricalCatalogSupremum);
  } else {
    const Rational value = parse_rational(vo.gamma);
    gamma.emplace(value, value == Rational(5, 8) && wo.label() == "commutator"
                             ? GapConstant::Source::kGustafson
                             : GapConstant::Source::kUserSupplied);
  }

  SweepConfig config{w, wo.label(), *gamma, vo.m_max, vo.n_max, {}};
  if (vo.policy == "both") {
    config.policies = {OverlapPolicy::kAllowOverlap, OverlapPolicy::kRequireDisjoint};
  } else {
    config.policies = {parse_overlap_policy(vo.policy)};
  }

  SweepReport report = run_sweep(groups, config);
  report.max_order = vo.max_order;
  report.timestamp = utc_timestamp();

  std::cout << "word=" << report.word << " gamma=" << report.gamma
            << " gamma_source=" << report.gamma_source
            << " base=" << format_rational(gamma->base()) << " m_max=" << vo.m_max
            << " n_max=" << vo.n_max << " max_order=" << vo.max_order
            << " groups=" << report.groups.size() << "\n";
  for (const GroupSummary& s : report.groups) {
    std::cout << "group=" << s.group << " order=" << s.order << " eta=" << s.eta
              << " probability=" << s.probability << " identity=" << (s.identity ? "true" : "false")
              << " checked=" << s.checked << " violations=" << s.violations << "\n";
  }
  for (const SweepRow& r : report.rows) {
    if (r.violation) {
      std::cout << "VIOLATION group=" << r.group << " m=" << r.m << " n=" << r.n
                << " policy=" << to_string(r.policy) << " lhs=" << r.bound_lhs
                << " rhs=" << r.bound_rhs << "\n";
    }
  }
  const std::size_t violations = report.violations();
  std::cout << "rows=" << report.rows.size() << " checked=" << report.checked_rows()
            << " violations=" << violations << " policy_divergences=" << report.policy_divergences() << "\n";

  if (!vo.report.empty()) write_report(report, vo.report, format);
  return violations == 0 ? kExitOk : kExitViolation;
}

int cmd_graph_export(const GroupOptions& go, const WordOptions& wo, const std::string& dot_path) {
  const Group g = go.load();
  const WordGraph graph = WordGraph::build(g, wo.load());
  const std::string dot = export_dot(graph);
  if (dot_path == "-") {
    std::cout << dot;
  } else {
    write_file_atomic(dot_path, dot);
    std::cout << "vertices=" << graph.vertex_count() << " arcs=" << graph.arc_count()
              << " dot=" << dot_path << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Word maps on finite groups: satisfaction probabilities, w_{m,n}-property, bounds"};
  app.require_subcommand(1);

  GroupOptions group_opts;
  WordOptions word_opts;

  auto* group_cmd = app.add_subcommand("group", "Group inspection");
  group_cmd->require_subcommand(1);
  auto* info_cmd = group_cmd->add_subcommand("info", "Order, abelianness and center size");
  group_opts.attach(info_cmd);

  auto* prob_cmd = app.add_subcommand("prob", "Exact probability that w(x, y) = 1");
  group_opts.attach(prob_cmd);
  word_opts.attach(prob_cmd);

  std::size_t m = 1;
  std::size_t n = 1;
  std::string policy = "allow_overlap";
  auto* check_cmd = app.add_subcommand("check-property", "Decide the w_{m,n}-property");
  group_opts.attach(check_cmd);
  word_opts.attach(check_cmd);
  check_cmd->add_option("-m", m, "Size of M")->required()->check(CLI::PositiveNumber);
  check_cmd->add_option("-n", n, "Size of N")->required()->check(CLI::PositiveNumber);
  check_cmd->add_option("--policy", policy, "allow_overlap or require_disjoint");

  VerifyOptions verify_opts;
  auto* verify_cmd = app.add_subcommand("verify", "Sweep the catalog and check the order bound");
  word_opts.attach(verify_cmd);
  verify_cmd->add_option("--gamma", verify_opts.gamma, "Gap constant p/q, or 'empirical'");
  verify_cmd->add_option("--gamma-max-order", verify_opts.gamma_max_order,
                         "Catalog order limit for --gamma empirical");
  verify_cmd->add_option("--max-order", verify_opts.max_order, "Catalog order limit");
  verify_cmd->add_option("--m-max", verify_opts.m_max, "Largest m");
  verify_cmd->add_option("--n-max", verify_opts.n_max, "Largest n");
  verify_cmd->add_option("--policy", verify_opts.policy, "both, allow_overlap or require_disjoint");
  verify_cmd->add_option("--report", verify_opts.report, "Write the sweep report here");
  verify_cmd->add_option("--format", verify_opts.format, "csv or json");
  verify_cmd->add_option("--group-file", verify_opts.group_files, "Extra group file (repeatable)");

  std::string dot_path;
  auto* graph_cmd = app.add_subcommand("graph", "Word graph tools");
  graph_cmd->require_subcommand(1);
  auto* export_cmd = graph_cmd->add_subcommand("export", "Write the word graph as DOT");
  group_opts.attach(export_cmd);
  word_opts.attach(export_cmd);
  export_cmd->add_option("--dot", dot_path, "Output path, '-' for stdout")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*info_cmd) return cmd_group_info(group_opts);
    if (*prob_cmd) return cmd_prob(group_opts, word_opts);
    if (*check_cmd) return cmd_check_property(group_opts, word_opts, m, n, policy);
    if (*verify_cmd) return cmd_verify(word_opts, verify_opts);
    if (*export_cmd) return cmd_graph_export(group_opts, word_opts, dot_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
