#include "wdq/metrics.hpp"

#include <algorithm>
#include <cmath>

namespace wdq {

void check_session(const WebDirectory& wd, const BrowseSession& s) {
  if (s.visits.empty()) throw Error("session has no visits");
  for (const auto& id : s.visits)
    if (!wd.has_category(id)) throw Error("unknown category '" + id + "'");
  if (!wd.has_resource(s.target_resource))
    throw Error("unknown resource '" + s.target_resource + "'");
  if (!wd.has_category(s.target_category))
    throw Error("unknown category '" + s.target_category + "'");
  if (s.visits.back() != s.target_category)
    throw Error("last visit '" + s.visits.back() +
                "' is not the target category '" + s.target_category + "'");
  const Category& target = wd.category(s.target_category);
  if (std::find(target.resources.begin(), target.resources.end(),
                s.target_resource) == target.resources.end())
    throw Error("target category '" + s.target_category +
                "' does not hold resource '" + s.target_resource + "'");
}

double path_ratio(const WebDirectory& wd, const BrowseSession& s,
                  NavConfig nav) {
  std::size_t min_len =
      shortest_path_length(wd, s.visits.front(), s.target_category, nav);
  std::size_t len = s.visits.size();
  if (len < min_len)
    throw InconsistentSessionError(
        "session of length " + std::to_string(len) +
        " is shorter than the minimum walk (" + std::to_string(min_len) +
        ") from '" + s.visits.front() + "' to '" + s.target_category + "'");
  return 1.0 - static_cast<double>(min_len) / static_cast<double>(len);
}

std::size_t max_revisit(const BrowseSession& s) {
  std::unordered_map<std::string, std::size_t> occurrences;
  std::size_t most = 0;
  for (const auto& id : s.visits)
    most = std::max(most, ++occurrences[id]);
  return most == 0 ? 0 : most - 1;
}

namespace {

DdpResult ddp_from_distances(const std::vector<double>& dist_to_target) {
  DdpResult out;
  std::size_t n = dist_to_target.size();
  if (n < 2) return out;  // single visit: empty series, total 0
  out.steps.reserve(n - 1);
  out.partial_sums.reserve(n - 1);
  double running = 0.0;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    double step = dist_to_target[i] - dist_to_target[i + 1];
    out.steps.push_back(step);
    running += step;
    out.partial_sums.push_back(running);
    if (step < 0.0) out.monotone = false;
  }
  out.total = out.partial_sums.back();
  return out;
}

}  // namespace

DdpResult ddp(const WebDirectory& wd, const BrowseSession& s,
              const SemanticsConfig& cfg) {
  ContentIndex index(wd, cfg);
  std::size_t target = wd.category_index(s.target_category);
  std::vector<double> dist;
  dist.reserve(s.visits.size());
  for (const auto& id : s.visits)
    dist.push_back(index.distance(wd.category_index(id), target));
  return ddp_from_distances(dist);
}

SessionMetrics score_session(const WebDirectory& wd, const BrowseSession& s,
                             const SemanticsConfig& cfg, NavConfig nav) {
  SessionScorer scorer(wd, cfg, nav);
  return scorer.score(s);
}

SessionScorer::SessionScorer(const WebDirectory& wd, SemanticsConfig cfg,
                             NavConfig nav)
    : wd_(wd), nav_(nav), content_(wd, cfg) {}

std::size_t SessionScorer::min_walk(std::size_t from, std::size_t to) {
  auto it = walk_cache_.find(from);
  if (it == walk_cache_.end()) {
    it = walk_cache_
             .emplace(from, shortest_path_lengths_from(
                                wd_, wd_.categories()[from].id, nav_))
             .first;
  }
  std::size_t len = it->second[to];
  if (len == 0)
    throw UnreachableError("no navigable walk from '" +
                           wd_.categories()[from].id + "' to '" +
                           wd_.categories()[to].id + "'");
  return len;
}

double SessionScorer::cached_distance(std::size_t a, std::size_t b) {
  std::uint64_t key =
      (static_cast<std::uint64_t>(std::min(a, b)) << 32) | std::max(a, b);
  auto it = dist_cache_.find(key);
  if (it != dist_cache_.end()) return it->second;
  double d = content_.distance(a, b);
  dist_cache_.emplace(key, d);
  return d;
}

SessionMetrics SessionScorer::score(const BrowseSession& s) {
  SessionMetrics out;
  std::size_t target = wd_.category_index(s.target_category);
  std::size_t first = wd_.category_index(s.visits.front());

  std::size_t min_len = min_walk(first, target);
  if (s.visits.size() < min_len)
    throw InconsistentSessionError(
        "session of length " + std::to_string(s.visits.size()) +
        " is shorter than the minimum walk (" + std::to_string(min_len) +
        ") from '" + s.visits.front() + "' to '" + s.target_category + "'");
  out.pr = 1.0 - static_cast<double>(min_len) /
                     static_cast<double>(s.visits.size());

  out.mr = max_revisit(s);

  std::vector<double> dist;
  dist.reserve(s.visits.size());
  for (const auto& id : s.visits)
    dist.push_back(cached_distance(wd_.category_index(id), target));
  DdpResult d = ddp_from_distances(dist);
  out.ddp_steps = std::move(d.steps);
  out.ddp_partial_sums = std::move(d.partial_sums);
  out.ddp_total = d.total;
  out.monotone = d.monotone;
  return out;
}

Stats describe(std::vector<double> values) {
  Stats out;
  out.count = values.size();
  if (values.empty()) return out;
  std::sort(values.begin(), values.end());
  out.min = values.front();
  out.max = values.back();
  double sum = 0.0;
  for (double v : values) sum += v;
  out.mean = sum / static_cast<double>(values.size());
  std::size_t mid = values.size() / 2;
  out.median = values.size() % 2 == 1
                   ? values[mid]
                   : (values[mid - 1] + values[mid]) / 2.0;
  double sq = 0.0;
  for (double v : values) sq += (v - out.mean) * (v - out.mean);
  out.stddev = std::sqrt(sq / static_cast<double>(values.size()));
  return out;
}

AggregateReport aggregate(const std::vector<SessionMetrics>& results) {
  AggregateReport report;
  report.count = results.size();
  if (results.empty()) return report;

  std::vector<double> pr, mr, total;
  pr.reserve(results.size());
  mr.reserve(results.size());
  total.reserve(results.size());
  std::size_t pr_zero = 0, mr_zero = 0, monotone = 0;
  for (const auto& m : results) {
    pr.push_back(m.pr);
    mr.push_back(static_cast<double>(m.mr));
    total.push_back(m.ddp_total);
    if (m.pr == 0.0) ++pr_zero;
    if (m.mr == 0) ++mr_zero;
    if (m.monotone) ++monotone;
  }
  report.pr = describe(std::move(pr));
  report.mr = describe(std::move(mr));
  report.ddp_total = describe(std::move(total));
  double n = static_cast<double>(results.size());
  report.pr_zero_fraction = static_cast<double>(pr_zero) / n;
  report.mr_zero_fraction = static_cast<double>(mr_zero) / n;
  report.monotone_fraction = static_cast<double>(monotone) / n;
  return report;
}

std::vector<std::size_t> non_edge_transitions(const WebDirectory& wd,
                                              const BrowseSession& s,
                                              NavConfig nav) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i + 1 < s.visits.size(); ++i)
    if (!is_navigable_edge(wd, s.visits[i], s.visits[i + 1], nav))
      out.push_back(i);
  return out;
}

}  // namespace wdq
