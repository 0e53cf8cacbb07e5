#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "wdq/directory_io.hpp"
#include "wdq/metrics.hpp"
#include "wdq/semantics.hpp"
#include "wdq/session_io.hpp"
#include "wdq/simulator.hpp"

// Exit codes: 0 success, 1 findings (violations, failed audit, unreachable
// targets), 2 usage or input error. Data goes to stdout or --out;
// diagnostics go to stderr.

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr int kFindings = 1;
constexpr int kUsage = 2;

wdq::ContentMode parse_mode(const std::string& name) {
  if (name == "resources") return wdq::ContentMode::resources;
  if (name == "children") return wdq::ContentMode::children;
  return wdq::ContentMode::automatic;
}

// Parses without validating; commands that need a well-formed directory
// validate separately so they can report every violation.
wdq::WebDirectory load_valid(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw wdq::Error("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return wdq::load_directory_from_string(buffer.str());
}

struct AuditOptions {
  std::string directory;
  std::size_t epsilon = 0;
  std::string mode = "auto";
  std::vector<int> skip_levels;
};

struct ScoreOptions {
  std::string directory;
  std::string sessions;
  double dist_cap = 1000.0;
  std::size_t epsilon = 0;
  std::string mode = "auto";
  bool strict_edges = false;
  bool allow_up = false;
  std::string out;
  std::string format = "json";
};

struct SimulateOptions {
  std::string directory;
  std::string policy = "optimal";
  double noise = 0.0;
  bool noise_given = false;
  std::string targets = "all";
  std::size_t count = 1;
  std::uint64_t seed = 0;
  bool allow_up = false;
  std::string start;
  std::size_t max_steps = 0;
  double dist_cap = 1000.0;
  std::string mode = "auto";
  std::string out;
};

int cmd_validate(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw wdq::Error("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  wdq::WebDirectory wd = wdq::parse_directory(buffer.str());
  auto violations = wdq::validate(wd);
  for (const auto& v : violations)
    std::cout << "VIOLATION: " << v.message << "\n";
  return violations.empty() ? 0 : kFindings;
}

int cmd_audit(const AuditOptions& opt) {
  wdq::WebDirectory wd = load_valid(opt.directory);

  // highest level first, so lower flags keep their original numbering
  std::vector<int> levels = opt.skip_levels;
  std::sort(levels.rbegin(), levels.rend());
  for (int level : levels) wd = wdq::skip_level(wd, level);

  wdq::SemanticsConfig cfg;
  cfg.mode = parse_mode(opt.mode);
  cfg.epsilon = opt.epsilon;
  wdq::IdealityReport report = wdq::audit_ideality(wd, cfg);

  std::vector<const wdq::CategoryGap*> flagged;
  for (const auto& gap : report.gaps)
    if (!gap.vacuous) flagged.push_back(&gap);
  std::stable_sort(flagged.begin(), flagged.end(),
                   [](const wdq::CategoryGap* a, const wdq::CategoryGap* b) {
                     return a->size > b->size;
                   });
  for (const auto* gap : flagged)
    std::cout << "GAP: " << gap->id << " size=" << gap->size
              << " normalized=" << gap->normalized << "\n";
  for (const auto& gap : report.gaps) {
    if (!gap.vacuous) continue;
    const wdq::Category& c = wd.category(gap.id);
    const char* why = c.resources.empty() && c.children.empty()
                          ? "no resources, no children"
                          : (c.resources.empty() ? "no resources"
                                                 : "no children");
    std::cout << "VACUOUS: " << gap.id << " size=" << gap.size << " (" << why
              << ")\n";
  }
  std::cout << "RESULT: ideal=" << (report.ideal ? "yes" : "no") << "\n";
  std::cout << "RESULT: realistically_ideal="
            << (report.realistically_ideal ? "yes" : "no")
            << " epsilon=" << report.epsilon << "\n";
  return report.realistically_ideal ? 0 : kFindings;
}

ordered_json stats_json(const wdq::Stats& s) {
  ordered_json out;
  out["count"] = s.count;
  out["mean"] = s.mean;
  out["median"] = s.median;
  out["stddev"] = s.stddev;
  out["min"] = s.min;
  out["max"] = s.max;
  return out;
}

void print_aggregate(const wdq::AggregateReport& report,
                     const std::string& format) {
  if (format == "csv") {
    auto num = [](double v) { return nlohmann::json(v).dump(); };
    std::cout << "key,value\n";
    std::cout << "count," << report.count << "\n";
    if (report.count == 0) return;
    auto stats_rows = [&](const char* name, const wdq::Stats& s) {
      std::cout << name << "_mean," << num(s.mean) << "\n";
      std::cout << name << "_median," << num(s.median) << "\n";
      std::cout << name << "_stddev," << num(s.stddev) << "\n";
      std::cout << name << "_min," << num(s.min) << "\n";
      std::cout << name << "_max," << num(s.max) << "\n";
    };
    stats_rows("pr", report.pr);
    stats_rows("mr", report.mr);
    stats_rows("ddp_total", report.ddp_total);
    std::cout << "pr_zero_fraction," << num(report.pr_zero_fraction) << "\n";
    std::cout << "mr_zero_fraction," << num(report.mr_zero_fraction) << "\n";
    std::cout << "monotone_fraction," << num(report.monotone_fraction) << "\n";
    return;
  }
  ordered_json doc;
  doc["count"] = report.count;
  if (report.count > 0) {
    doc["pr"] = stats_json(report.pr);
    doc["mr"] = stats_json(report.mr);
    doc["ddp_total"] = stats_json(report.ddp_total);
    doc["pr_zero_fraction"] = report.pr_zero_fraction;
    doc["mr_zero_fraction"] = report.mr_zero_fraction;
    doc["monotone_fraction"] = report.monotone_fraction;
  }
  std::cout << doc.dump() << "\n";
}

int cmd_score(const ScoreOptions& opt) {
  wdq::WebDirectory wd = load_valid(opt.directory);
  std::ifstream in(opt.sessions, std::ios::binary);
  if (!in) throw wdq::Error("cannot open '" + opt.sessions + "'");
  auto sessions = wdq::read_sessions(in, wd);

  wdq::SemanticsConfig cfg;
  cfg.mode = parse_mode(opt.mode);
  cfg.dist_cap = opt.dist_cap;
  cfg.epsilon = opt.epsilon;
  wdq::NavConfig nav{opt.allow_up};

  std::ofstream out_file;
  if (!opt.out.empty()) {
    out_file.open(opt.out, std::ios::binary);
    if (!out_file) throw wdq::Error("cannot write '" + opt.out + "'");
  }
  std::ostream& data = opt.out.empty() ? std::cout : out_file;

  wdq::SessionScorer scorer(wd, cfg, nav);
  std::vector<wdq::SessionMetrics> all;
  all.reserve(sessions.size());
  for (const auto& ns : sessions) {
    if (opt.strict_edges) {
      for (std::size_t i : wdq::non_edge_transitions(wd, ns.session, nav))
        std::cerr << "WARNING: line " << ns.line << ": transition '"
                  << ns.session.visits[i] << "' -> '"
                  << ns.session.visits[i + 1]
                  << "' is not a navigable edge\n";
    }
    wdq::SessionMetrics m;
    try {
      m = scorer.score(ns.session);
    } catch (const wdq::Error& e) {
      std::cerr << "error: line " << ns.line << ": " << e.what() << "\n";
      return kUsage;
    }
    ordered_json doc;
    doc["session"] = ns.line;
    doc["pr"] = m.pr;
    doc["mr"] = m.mr;
    doc["ddp_steps"] = m.ddp_steps;
    doc["ddp_partial_sums"] = m.ddp_partial_sums;
    doc["ddp_total"] = m.ddp_total;
    doc["monotone"] = m.monotone;
    data << doc.dump() << "\n";
    all.push_back(std::move(m));
  }
  print_aggregate(wdq::aggregate(all), opt.format);
  return 0;
}

int cmd_simulate(const SimulateOptions& opt) {
  wdq::WebDirectory wd = load_valid(opt.directory);

  auto kind = wdq::parse_policy(opt.policy);
  if (!kind) throw wdq::Error("unknown policy '" + opt.policy + "'");
  wdq::Policy policy;
  policy.kind = *kind;
  policy.noise = opt.noise;
  policy.max_steps = opt.max_steps;

  std::vector<wdq::ResourceId> targets;
  if (opt.targets == "all") {
    for (const auto& r : wd.resources()) targets.push_back(r.id);
  } else {
    std::stringstream ss(opt.targets);
    std::string token;
    while (std::getline(ss, token, ','))
      if (!token.empty()) targets.push_back(token);
    for (const auto& t : targets)
      if (!wd.has_resource(t)) throw wdq::Error("unknown resource '" + t + "'");
  }

  wdq::SimConfig cfg;
  cfg.seed = opt.seed;
  cfg.nav.allow_up = opt.allow_up;
  cfg.semantics.mode = parse_mode(opt.mode);
  cfg.semantics.dist_cap = opt.dist_cap;
  if (!opt.start.empty()) {
    if (!wd.has_category(opt.start))
      throw wdq::Error("unknown category '" + opt.start + "'");
    cfg.start = opt.start;
  }

  wdq::BatchResult result =
      wdq::batch_simulate(wd, targets, policy, cfg, opt.count);

  std::ofstream out_file;
  if (!opt.out.empty()) {
    out_file.open(opt.out, std::ios::binary);
    if (!out_file) throw wdq::Error("cannot write '" + opt.out + "'");
  }
  std::ostream& data = opt.out.empty() ? std::cout : out_file;
  wdq::write_sessions(result.sessions, data);

  for (const auto& failure : result.failures)
    std::cerr << "UNREACHABLE: " << failure.target << ": " << failure.message
              << "\n";
  return result.failures.empty() ? 0 : kFindings;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Structural and semantic quality measures for web directories"};
  app.require_subcommand(1);

  std::string validate_path;
  auto* validate_cmd =
      app.add_subcommand("validate", "Check a directory dump's structure");
  validate_cmd->add_option("directory", validate_path, "directory dump (JSON)")
      ->required();

  AuditOptions audit;
  auto* audit_cmd =
      app.add_subcommand("audit", "Audit semantic ideality per category");
  audit_cmd->add_option("directory", audit.directory, "directory dump (JSON)")
      ->required();
  audit_cmd->add_option("--epsilon", audit.epsilon,
                        "max tolerated gap size (default 0)");
  audit_cmd->add_option("--mode", audit.mode, "content definition")
      ->check(CLI::IsMember({"auto", "resources", "children"}));
  audit_cmd->add_option("--skip-level", audit.skip_levels,
                        "skip this tier before auditing (repeatable)");

  ScoreOptions score;
  auto* score_cmd =
      app.add_subcommand("score", "Score browsing sessions against a directory");
  score_cmd->add_option("directory", score.directory, "directory dump (JSON)")
      ->required();
  score_cmd->add_option("--sessions", score.sessions, "session log (JSON Lines)")
      ->required();
  score_cmd->add_option("--dist-cap", score.dist_cap,
                        "distance when similarity is 0 (default 1000)")
      ->check(CLI::Range(1.0, 1e18));
  score_cmd->add_option("--epsilon", score.epsilon, "audit threshold");
  score_cmd->add_option("--mode", score.mode, "content definition")
      ->check(CLI::IsMember({"auto", "resources", "children"}));
  score_cmd->add_flag("--strict-edges", score.strict_edges,
                      "warn on transitions that do not follow an edge");
  score_cmd->add_flag("--allow-up", score.allow_up,
                      "treat child->parent edges as navigable");
  score_cmd->add_option("--out", score.out,
                        "write per-session metrics here instead of stdout");
  score_cmd->add_option("--format", score.format, "aggregate format")
      ->check(CLI::IsMember({"json", "csv"}));

  SimulateOptions sim;
  auto* sim_cmd =
      app.add_subcommand("simulate", "Generate browsing sessions");
  sim_cmd->add_option("directory", sim.directory, "directory dump (JSON)")
      ->required();
  sim_cmd->add_option("--policy", sim.policy, "browsing policy")
      ->check(CLI::IsMember(
          {"optimal", "greedy_semantic", "random_walk", "noisy_greedy"}));
  auto* noise_opt =
      sim_cmd->add_option("--noise", sim.noise,
                          "random-move probability (noisy_greedy only)")
          ->check(CLI::Range(0.0, 1.0));
  sim_cmd->add_option("--targets", sim.targets,
                      "'all' or comma-separated resource ids");
  sim_cmd->add_option("--count", sim.count, "sessions per target (default 1)");
  sim_cmd->add_option("--seed", sim.seed, "RNG seed (default 0)");
  sim_cmd->add_flag("--allow-up", sim.allow_up,
                    "treat child->parent edges as navigable");
  sim_cmd->add_option("--start", sim.start, "start category (default root)");
  sim_cmd->add_option("--max-steps", sim.max_steps,
                      "step bound before optimal completion "
                      "(default 10 x categories)");
  sim_cmd->add_option("--dist-cap", sim.dist_cap,
                      "distance when similarity is 0 (default 1000)")
      ->check(CLI::Range(1.0, 1e18));
  sim_cmd->add_option("--mode", sim.mode, "content definition")
      ->check(CLI::IsMember({"auto", "resources", "children"}));
  sim_cmd->add_option("--out", sim.out,
                      "write the session log here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }
  sim.noise_given = noise_opt->count() > 0;

  try {
    if (*validate_cmd) return cmd_validate(validate_path);
    if (*audit_cmd) return cmd_audit(audit);
    if (*score_cmd) return cmd_score(score);
    if (*sim_cmd) {
      if (sim.policy == "noisy_greedy" && !sim.noise_given)
        throw wdq::Error("--noise is required with --policy noisy_greedy");
      if (sim.policy != "noisy_greedy" && sim.noise_given)
        throw wdq::Error("--noise only applies to --policy noisy_greedy");
      return cmd_simulate(sim);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const wdq::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
