#pragma once

// Shared fixture loading plus the random generators used by the property
// suites. Generators are fully driven by SplitMix64 so failures replay
// from a seed.

#include <cstddef>
#include <filesystem>
#include <string>
#include <vector>

#include "wdq/directory.hpp"
#include "wdq/directory_io.hpp"
#include "wdq/metrics.hpp"
#include "wdq/rng.hpp"

namespace wdq_test {

inline std::filesystem::path fixture_dir() {
  return std::filesystem::path(WDQ_FIXTURE_DIR);
}

inline wdq::WebDirectory load_fixture(const std::string& name) {
  return wdq::load_directory_from_file((fixture_dir() / name).string());
}

inline std::string fixture_path(const std::string& name) {
  return (fixture_dir() / name).string();
}

inline std::vector<std::string> valid_fixture_names() {
  return {"alphabet.json",   "chain3.json", "deep_ideal.json",
          "detour.json",       "loopback.json",   "sem1.json",
          "sem1_ideal.json", "sem1_perturbed.json"};
}

/// A random valid directory: a tree of 2..max_cats categories with a few
/// upward or sideways cross-links and randomly annotated resources.
inline wdq::WebDirectory random_directory(wdq::SplitMix64& rng,
                                          std::size_t max_cats = 12) {
  const std::size_t n = 2 + rng.next_below(max_cats - 1);
  std::vector<wdq::Category> cats(n);
  std::vector<std::size_t> parent(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    cats[i].id = "c" + std::to_string(i);
    cats[i].url = "https://rand.example/c" + std::to_string(i);
    if (i == 0) {
      cats[i].level = 1;
    } else {
      parent[i] = rng.next_below(i);
      cats[i].level = cats[parent[i]].level + 1;
      cats[parent[i]].children.push_back(cats[i].id);
    }
  }

  const std::size_t tries = rng.next_below(n + 1);
  for (std::size_t t = 0; t < tries; ++t) {
    std::size_t a = rng.next_below(n);
    std::size_t b = rng.next_below(n);
    if (a == b) continue;
    bool taken = false;
    for (const auto& c : cats[a].children) taken = taken || c == cats[b].id;
    for (const auto& c : cats[a].cross_links) taken = taken || c == cats[b].id;
    if (!taken) cats[a].cross_links.push_back(cats[b].id);
  }

  const char* pool[] = {"t0", "t1", "t2", "t3", "t4",
                        "t5", "t6", "t7", "t8", "t9"};
  const std::size_t m = 1 + rng.next_below(2 * n);
  std::vector<wdq::Resource> ress(m);
  for (std::size_t i = 0; i < m; ++i) {
    ress[i].id = "r" + std::to_string(i);
    ress[i].url = "https://rand.example/r" + std::to_string(i);
    const std::size_t terms = rng.next_below(4);  // 0 = unannotated
    for (std::size_t k = 0; k < terms; ++k)
      ress[i].concepts.add(pool[rng.next_below(10)]);
    cats[rng.next_below(n)].resources.push_back(ress[i].id);
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (rng.next_below(5) == 0) {
      wdq::ConceptBag bag;
      bag.add(pool[rng.next_below(10)]);
      cats[i].constant_bag = bag;
    }
  }
  return wdq::WebDirectory("c0", std::move(cats), std::move(ress));
}

/// A random edge-following walk; the final visit doubles as the target
/// category. target_resource is a placeholder, PR/MR/DDP never read it.
inline wdq::BrowseSession random_session(const wdq::WebDirectory& wd,
                                         wdq::SplitMix64& rng,
                                         wdq::NavConfig nav = {},
                                         std::size_t max_len = 12) {
  const auto& cats = wd.categories();
  std::size_t cur = rng.next_below(cats.size());
  wdq::BrowseSession s;
  s.visits.push_back(cats[cur].id);
  const std::size_t len = 1 + rng.next_below(max_len);
  while (s.visits.size() < len) {
    auto next = wdq::navigable_neighbors(wd, cats[cur].id, nav);
    if (next.empty()) break;
    const auto& pick = next[rng.next_below(next.size())];
    s.visits.push_back(pick);
    cur = wd.category_index(pick);
  }
  s.target_category = s.visits.back();
  s.target_resource = "r-unused";
  return s;
}

/// A session of arbitrary category ids (jumps allowed) against an
/// arbitrary target category; only DDP consumes these.
inline wdq::BrowseSession random_jump_session(const wdq::WebDirectory& wd,
                                              wdq::SplitMix64& rng,
                                              std::size_t max_len = 30) {
  const auto& cats = wd.categories();
  wdq::BrowseSession s;
  const std::size_t len = 1 + rng.next_below(max_len);
  for (std::size_t i = 0; i < len; ++i)
    s.visits.push_back(cats[rng.next_below(cats.size())].id);
  s.target_category = cats[rng.next_below(cats.size())].id;
  s.target_resource = "r-unused";
  return s;
}

/// The synthetic load fixture: 753 categories over five tiers and 25,185
/// round-robin resources drawn from a 200-term pool.
inline wdq::WebDirectory scale_directory() {
  constexpr std::size_t kTierSizes[] = {1, 8, 64, 512, 168};
  std::vector<wdq::Category> cats;
  cats.reserve(753);
  std::vector<std::size_t> tier_start;
  std::size_t next_id = 0;
  for (int tier = 0; tier < 5; ++tier) {
    tier_start.push_back(next_id);
    for (std::size_t i = 0; i < kTierSizes[tier]; ++i, ++next_id) {
      wdq::Category c;
      c.id = "n" + std::to_string(next_id);
      c.level = tier + 1;
      c.url = "https://scale.example/n" + std::to_string(next_id);
      cats.push_back(std::move(c));
      if (tier == 0) continue;
      std::size_t parent;
      if (tier < 4) {
        parent = tier_start[tier - 1] + i / 8;
      } else {
        parent = tier_start[3] + i;  // one leaf under each early tier-4 node
      }
      cats[parent].children.push_back(cats.back().id);
    }
  }

  std::vector<wdq::Resource> ress;
  ress.reserve(25185);
  for (std::size_t i = 0; i < 25185; ++i) {
    wdq::Resource r;
    r.id = "r" + std::to_string(i);
    r.url = "https://scale.example/r" + std::to_string(i);
    const std::size_t terms = 1 + i % 3;
    for (std::size_t j = 0; j < terms; ++j)
      r.concepts.add("k" + std::to_string((i * 7 + j * 13) % 200));
    cats[i % 753].resources.push_back(r.id);
    ress.push_back(std::move(r));
  }
  return wdq::WebDirectory("n0", std::move(cats), std::move(ress));
}

}  // namespace wdq_test
