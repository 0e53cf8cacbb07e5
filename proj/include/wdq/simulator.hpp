#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wdq/directory.hpp"
#include "wdq/metrics.hpp"
#include "wdq/semantics.hpp"

namespace wdq {

/// How the simulated browser picks its next category.
///
/// `optimal`         : a shortest walk to the target's category (ties by
///                     input child order, then cross-link order).
/// `greedy_semantic` : the neighbor closest to the target in semantic
///                     distance, ties by input order.
/// `random_walk`     : a uniformly random neighbor.
/// `noisy_greedy`    : the random step with probability `noise`, else the
///                     greedy step.
///
/// The non-optimal policies only step to neighbors from which the target
/// stays reachable, so every walk can be completed. When `max_steps`
/// moves pass without arrival the walk is finished with the optimal
/// suffix and the session is flagged truncated.
struct Policy {
  enum class Kind { optimal, greedy_semantic, random_walk, noisy_greedy };

  Kind kind = Kind::optimal;
  double noise = 0.0;        // probability of a random move (noisy_greedy)
  std::size_t max_steps = 0; // 0 = 10 x category count
};

const char* policy_name(Policy::Kind kind);
std::optional<Policy::Kind> parse_policy(const std::string& name);

struct SimConfig {
  std::uint64_t seed = 0;  // fully determines all randomness
  NavConfig nav;
  SemanticsConfig semantics;
  std::optional<CategoryId> start;  // default: the root
};

/// Simulates one browse for `target`. The target category is the first
/// category in input order that holds the resource and is reachable from
/// the start; throws UnreachableError when there is none.
BrowseSession simulate(const WebDirectory& wd, const ResourceId& target,
                       const Policy& policy, const SimConfig& cfg);

struct BatchFailure {
  ResourceId target;
  std::string message;
};

struct BatchResult {
  std::vector<BrowseSession> sessions;  // (target order, repetition) order
  std::vector<BatchFailure> failures;   // one per unreachable target
};

/// count_per_target sessions per target; session i for target j runs on a
/// sub-seed derived from (cfg.seed, j, i), so output is reproducible and
/// independent of scheduling.
BatchResult batch_simulate(const WebDirectory& wd,
                           const std::vector<ResourceId>& targets,
                           const Policy& policy, const SimConfig& cfg,
                           std::size_t count_per_target);

}  // namespace wdq
