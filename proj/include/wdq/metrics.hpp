#pragma once

#include <cstddef>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "wdq/directory.hpp"
#include "wdq/semantics.hpp"

namespace wdq {

/// One observed browse: the ordered category visits and the resource the
/// user was after. The last visit must be the category holding the target.
struct BrowseSession {
  ResourceId target_resource;
  CategoryId target_category;
  std::vector<CategoryId> visits;
  /// Set by the simulator when the walk hit its step bound and was
  /// completed with a shortest suffix.
  bool truncated = false;
};

/// Throws Error when the session breaks its invariants against wd.
void check_session(const WebDirectory& wd, const BrowseSession& s);

struct SessionMetrics {
  double pr = 0.0;
  std::size_t mr = 0;
  std::vector<double> ddp_steps;
  std::vector<double> ddp_partial_sums;
  double ddp_total = 0.0;
  bool monotone = true;
};

/// 1 - min|b| / |b|: zero iff the session walk is minimum-length.
/// Throws InconsistentSessionError when the session claims a walk shorter
/// than the graph allows, UnreachableError when no walk exists at all.
double path_ratio(const WebDirectory& wd, const BrowseSession& s,
                  NavConfig nav = {});

/// Largest number of repeat visits to any single category; 0 iff all
/// visits are distinct.
std::size_t max_revisit(const BrowseSession& s);

struct DdpResult {
  std::vector<double> steps;         // dist(c_i, c_T) - dist(c_{i+1}, c_T)
  std::vector<double> partial_sums;  // running sums of steps
  double total = 0.0;
  bool monotone = true;  // no step increased the distance to the target
};

DdpResult ddp(const WebDirectory& wd, const BrowseSession& s,
              const SemanticsConfig& cfg = {});

SessionMetrics score_session(const WebDirectory& wd, const BrowseSession& s,
                             const SemanticsConfig& cfg = {},
                             NavConfig nav = {});

/// Descriptive statistics; stddev is the population form.
struct Stats {
  std::size_t count = 0;
  double mean = 0.0;
  double median = 0.0;
  double stddev = 0.0;
  double min = 0.0;
  double max = 0.0;
};

Stats describe(std::vector<double> values);

struct AggregateReport {
  std::size_t count = 0;
  Stats pr;
  Stats mr;
  Stats ddp_total;
  // fractions are meaningful only when count > 0
  double pr_zero_fraction = 0.0;
  double mr_zero_fraction = 0.0;
  double monotone_fraction = 0.0;
};

AggregateReport aggregate(const std::vector<SessionMetrics>& results);

/// Batch scorer sharing the content index and shortest-path results across
/// sessions. Not for concurrent use; create one per thread.
class SessionScorer {
 public:
  SessionScorer(const WebDirectory& wd, SemanticsConfig cfg = {},
                NavConfig nav = {});

  SessionMetrics score(const BrowseSession& s);

  const ContentIndex& content() const { return content_; }

 private:
  const WebDirectory& wd_;
  NavConfig nav_;
  ContentIndex content_;
  std::unordered_map<std::size_t, std::vector<std::size_t>> walk_cache_;
  std::unordered_map<std::uint64_t, double> dist_cache_;

  std::size_t min_walk(std::size_t from, std::size_t to);
  double cached_distance(std::size_t a, std::size_t b);
};

/// Positions i whose transition visits[i] -> visits[i+1] is not a
/// navigable edge (bookmark jumps and the like).
std::vector<std::size_t> non_edge_transitions(const WebDirectory& wd,
                                              const BrowseSession& s,
                                              NavConfig nav = {});

}  // namespace wdq
