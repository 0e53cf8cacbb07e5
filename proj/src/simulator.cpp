#include "wdq/simulator.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <unordered_map>

#include "wdq/rng.hpp"

namespace wdq {

const char* policy_name(Policy::Kind kind) {
  switch (kind) {
    case Policy::Kind::optimal: return "optimal";
    case Policy::Kind::greedy_semantic: return "greedy_semantic";
    case Policy::Kind::random_walk: return "random_walk";
    case Policy::Kind::noisy_greedy: return "noisy_greedy";
  }
  return "unknown";
}

std::optional<Policy::Kind> parse_policy(const std::string& name) {
  if (name == "optimal") return Policy::Kind::optimal;
  if (name == "greedy_semantic") return Policy::Kind::greedy_semantic;
  if (name == "random_walk") return Policy::Kind::random_walk;
  if (name == "noisy_greedy") return Policy::Kind::noisy_greedy;
  return std::nullopt;
}

namespace {

class Simulator {
 public:
  Simulator(const WebDirectory& wd, const Policy& policy, const SimConfig& cfg)
      : wd_(wd), policy_(policy), cfg_(cfg) {
    if (policy.kind == Policy::Kind::noisy_greedy &&
        (policy.noise < 0.0 || policy.noise > 1.0))
      throw std::invalid_argument("noise must be in [0, 1]");
    if (policy.kind == Policy::Kind::greedy_semantic ||
        policy.kind == Policy::Kind::noisy_greedy)
      content_.emplace(wd, cfg.semantics);

    start_ = wd.category_index(cfg.start.value_or(wd.root()));
    max_steps_ = policy.max_steps > 0 ? policy.max_steps
                                      : 10 * wd.category_count();

    // neighbor lists in tie-break order, by category index
    std::size_t n = wd.category_count();
    neighbors_.resize(n);
    for (std::size_t i = 0; i < n; ++i)
      for (const auto& id :
           navigable_neighbors(wd, wd.categories()[i].id, cfg.nav))
        neighbors_[i].push_back(wd.category_index(id));

    // forward reachability from the start
    from_start_.assign(n, 0);
    from_start_[start_] = 1;
    std::deque<std::size_t> queue{start_};
    while (!queue.empty()) {
      std::size_t cur = queue.front();
      queue.pop_front();
      for (std::size_t next : neighbors_[cur])
        if (!from_start_[next]) {
          from_start_[next] = 1;
          queue.push_back(next);
        }
    }

    for (std::size_t i = 0; i < n; ++i)
      for (const auto& rid : wd.categories()[i].resources)
        holders_[rid].push_back(i);
  }

  BrowseSession run(const ResourceId& target, std::uint64_t seed) {
    std::size_t target_cat = resolve_target(target);
    BrowseSession session;
    session.target_resource = target;
    session.target_category = wd_.categories()[target_cat].id;

    std::vector<std::size_t> walk;
    if (policy_.kind == Policy::Kind::optimal) {
      walk = shortest_walk(start_, target_cat);
    } else {
      const std::vector<char>& reach = reaches_target(target_cat);
      SplitMix64 rng(seed);
      walk.push_back(start_);
      std::size_t cur = start_;
      std::size_t moves = 0;
      std::vector<std::size_t> candidates;
      while (cur != target_cat && moves < max_steps_) {
        candidates.clear();
        for (std::size_t next : neighbors_[cur])
          if (reach[next]) candidates.push_back(next);
        cur = pick(candidates, target_cat, rng);
        walk.push_back(cur);
        ++moves;
      }
      if (cur != target_cat) {
        session.truncated = true;
        std::vector<std::size_t> suffix = shortest_walk(cur, target_cat);
        walk.insert(walk.end(), suffix.begin() + 1, suffix.end());
      }
    }

    session.visits.reserve(walk.size());
    for (std::size_t i : walk) session.visits.push_back(wd_.categories()[i].id);
    return session;
  }

 private:
  const WebDirectory& wd_;
  const Policy& policy_;
  const SimConfig& cfg_;
  std::optional<ContentIndex> content_;
  std::size_t start_ = 0;
  std::size_t max_steps_ = 0;
  std::vector<std::vector<std::size_t>> neighbors_;
  std::vector<char> from_start_;
  std::unordered_map<std::string, std::vector<std::size_t>> holders_;
  std::unordered_map<std::size_t, std::vector<char>> reach_cache_;

  std::size_t resolve_target(const ResourceId& target) {
    if (!wd_.has_resource(target))
      throw Error("unknown resource '" + target + "'");
    auto it = holders_.find(target);
    if (it != holders_.end())
      for (std::size_t cat : it->second)
        if (from_start_[cat]) return cat;
    throw UnreachableError("resource '" + target +
                           "' is not held by any category reachable from '" +
                           wd_.categories()[start_].id + "'");
  }

  // categories that can still reach `target` (reverse reachability)
  const std::vector<char>& reaches_target(std::size_t target) {
    auto it = reach_cache_.find(target);
    if (it != reach_cache_.end()) return it->second;

    std::size_t n = wd_.category_count();
    std::vector<std::vector<std::size_t>> reversed(n);
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v : neighbors_[u]) reversed[v].push_back(u);
    std::vector<char> reach(n, 0);
    reach[target] = 1;
    std::deque<std::size_t> queue{target};
    while (!queue.empty()) {
      std::size_t cur = queue.front();
      queue.pop_front();
      for (std::size_t prev : reversed[cur])
        if (!reach[prev]) {
          reach[prev] = 1;
          queue.push_back(prev);
        }
    }
    return reach_cache_.emplace(target, std::move(reach)).first->second;
  }

  std::size_t pick(const std::vector<std::size_t>& candidates,
                   std::size_t target, SplitMix64& rng) {
    switch (policy_.kind) {
      case Policy::Kind::random_walk:
        return candidates[rng.next_below(candidates.size())];
      case Policy::Kind::greedy_semantic:
        return greedy_pick(candidates, target);
      case Policy::Kind::noisy_greedy:
        if (rng.next_unit() < policy_.noise)
          return candidates[rng.next_below(candidates.size())];
        return greedy_pick(candidates, target);
      case Policy::Kind::optimal: break;  // handled in run()
    }
    return candidates.front();
  }

  std::size_t greedy_pick(const std::vector<std::size_t>& candidates,
                          std::size_t target) {
    std::size_t best = candidates.front();
    double best_dist = content_->distance(best, target);
    for (std::size_t i = 1; i < candidates.size(); ++i) {
      double d = content_->distance(candidates[i], target);
      if (d < best_dist) {
        best = candidates[i];
        best_dist = d;
      }
    }
    return best;
  }

  // BFS walk from `from` to `to`, endpoints included; discovery order
  // follows neighbor order, so ties resolve to the earliest listed edge
  std::vector<std::size_t> shortest_walk(std::size_t from, std::size_t to) {
    std::size_t n = wd_.category_count();
    std::vector<std::ptrdiff_t> pred(n, -2);
    pred[from] = -1;
    std::deque<std::size_t> queue{from};
    while (!queue.empty() && pred[to] == -2) {
      std::size_t cur = queue.front();
      queue.pop_front();
      for (std::size_t next : neighbors_[cur])
        if (pred[next] == -2) {
          pred[next] = static_cast<std::ptrdiff_t>(cur);
          queue.push_back(next);
        }
    }
    if (pred[to] == -2)
      throw UnreachableError("no navigable walk from '" +
                             wd_.categories()[from].id + "' to '" +
                             wd_.categories()[to].id + "'");
    std::vector<std::size_t> walk;
    for (std::ptrdiff_t cur = static_cast<std::ptrdiff_t>(to); cur != -1;
         cur = pred[static_cast<std::size_t>(cur)])
      walk.push_back(static_cast<std::size_t>(cur));
    std::reverse(walk.begin(), walk.end());
    return walk;
  }
};

}  // namespace

BrowseSession simulate(const WebDirectory& wd, const ResourceId& target,
                       const Policy& policy, const SimConfig& cfg) {
  return Simulator(wd, policy, cfg).run(target, cfg.seed);
}

BatchResult batch_simulate(const WebDirectory& wd,
                           const std::vector<ResourceId>& targets,
                           const Policy& policy, const SimConfig& cfg,
                           std::size_t count_per_target) {
  Simulator simulator(wd, policy, cfg);
  BatchResult result;
  result.sessions.reserve(targets.size() * count_per_target);
  for (std::size_t j = 0; j < targets.size(); ++j) {
    for (std::size_t i = 0; i < count_per_target; ++i) {
      try {
        result.sessions.push_back(
            simulator.run(targets[j], derive_seed(cfg.seed, j, i)));
      } catch (const UnreachableError& e) {
        result.failures.push_back({targets[j], e.what()});
        break;  // every repetition of this target fails the same way
      }
    }
  }
  return result;
}

}  // namespace wdq
