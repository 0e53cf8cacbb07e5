// Acceptance gate: nine checks, one PASS/FAIL line each, exit 0 only when
// every one holds. Tolerances are pinned next to each check.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <set>
#include <string>
#include <vector>

#include "../support/fixtures.hpp"
#include "../support/oracle.hpp"
#include "wdq/directory_io.hpp"
#include "wdq/metrics.hpp"
#include "wdq/semantics.hpp"
#include "wdq/session_io.hpp"
#include "wdq/simulator.hpp"

namespace {

int g_failures = 0;

void report(int n, const char* what, bool ok, const std::string& detail = "") {
  std::printf("%s: criterion %d: %s%s%s\n", ok ? "PASS" : "FAIL", n, what,
              detail.empty() ? "" : " ", detail.c_str());
  if (!ok) ++g_failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

wdq::BrowseSession make_session(std::vector<wdq::CategoryId> visits) {
  wdq::BrowseSession s;
  s.visits = std::move(visits);
  s.target_category = s.visits.back();
  s.target_resource = "r1";
  return s;
}

// 1. Known walk ratios on the detour fixture, exact, in under a second.
void criterion_1() {
  const auto t0 = std::chrono::steady_clock::now();
  auto wd = wdq_test::load_fixture("detour.json");
  const double short_walk =
      wdq::path_ratio(wd, make_session({"c1", "c2", "c3"}));
  const double long_walk = wdq::path_ratio(
      wd, make_session({"c1", "c4", "c5", "c6", "c7", "c3"}));
  const double elapsed = seconds_since(t0);
  const bool ok = short_walk == 0.0 && long_walk == 0.5 && elapsed < 1.0;
  report(1, "detour path ratios 0 and 1/2", ok,
         "(pr1=" + std::to_string(short_walk) +
             ", pr2=" + std::to_string(long_walk) +
             ", t=" + std::to_string(elapsed) + "s)");
}

// 2. Known revisit counts on the loopback fixture, exact.
void criterion_2() {
  auto wd = wdq_test::load_fixture("loopback.json");
  const std::size_t none =
      wdq::max_revisit(make_session({"c1", "c2", "c3"}));
  const std::size_t one = wdq::max_revisit(
      make_session({"c1", "c2", "c4", "c5", "c1", "c2", "c3"}));
  (void)wd;
  report(2, "loopback max revisits 0 and 1", none == 0 && one == 1,
         "(mr1=" + std::to_string(none) + ", mr2=" + std::to_string(one) + ")");
}

// 3. DDP telescopes: |total - (d_first - d_last)| <= 1e-9 over 1,000
//    random directory/session pairs.
void criterion_3() {
  wdq::SplitMix64 rng(0x7e1e5c09ULL);
  double worst = 0.0;
  int checked = 0;
  for (; checked < 1000; ++checked) {
    auto wd = wdq_test::random_directory(rng, 12);
    auto s = wdq_test::random_jump_session(wd, rng, 30);
    auto res = wdq::ddp(wd, s);
    const double first =
        wdq::distance(wd, s.visits.front(), s.target_category);
    const double last = wdq::distance(wd, s.visits.back(), s.target_category);
    worst = std::max(worst, std::abs(res.total - (first - last)));
  }
  report(3, "ddp telescoping over 1000 random cases", worst <= 1e-9,
         "(worst=" + std::to_string(worst) + ")");
}

// 4. Ideal fixture audits clean; every single-resource perturbation trips
//    the audit and epsilon equal to the gap absorbs it.
void criterion_4() {
  auto wd = wdq_test::load_fixture("deep_ideal.json");
  bool ok = wdq::is_ideal(wd);
  std::string detail = ok ? "" : "(base fixture not ideal)";
  for (std::size_t i = 0; ok && i < wd.resources().size(); ++i) {
    auto cats = wd.categories();
    auto ress = wd.resources();
    ress[i].concepts.add("stray-term");
    wdq::WebDirectory mutated(wd.root(), std::move(cats), std::move(ress));
    auto audit = wdq::audit_ideality(mutated);
    wdq::SemanticsConfig tolerant;
    tolerant.epsilon = audit.max_gap;
    const bool flipped = !audit.ideal && audit.max_gap >= 1 &&
                         wdq::is_realistically_ideal(mutated, tolerant);
    if (!flipped) {
      ok = false;
      detail = "(missed perturbation of " + wd.resources()[i].id + ")";
    }
  }
  report(4, "ideality audit detects every perturbation", ok, detail);
}

// 5. Library shortest path, PR and MR agree exactly with brute force on
//    every fixture of at most 6 categories, over 1,000 random sessions.
void criterion_5() {
  wdq::SplitMix64 rng(0x0a0c1eULL);
  std::vector<wdq::WebDirectory> dirs;
  for (const auto& name : wdq_test::valid_fixture_names()) {
    auto wd = wdq_test::load_fixture(name);
    if (wd.categories().size() <= 6) dirs.push_back(std::move(wd));
  }
  bool ok = !dirs.empty();
  std::string detail;
  int sessions = 0;
  while (ok && sessions < 1000) {
    const auto& wd = dirs[rng.next_below(dirs.size())];
    const wdq::NavConfig nav{rng.next_below(2) == 1};
    auto s = wdq_test::random_session(wd, rng, nav);
    const std::size_t want =
        wdq_test::oracle_shortest(wd, s.visits.front(), s.target_category, nav);
    std::size_t got = 0;
    try {
      got = wdq::shortest_path_length(wd, s.visits.front(), s.target_category,
                                      nav);
    } catch (const wdq::UnreachableError&) {
      got = 0;
    }
    if (got != want) {
      ok = false;
      detail = "(shortest mismatch: got " + std::to_string(got) + " want " +
               std::to_string(want) + ")";
      break;
    }
    if (want != 0) {
      const double pr = wdq::path_ratio(wd, s, nav);
      if (pr != wdq_test::oracle_pr(wd, s, nav)) {
        ok = false;
        detail = "(pr mismatch)";
        break;
      }
    }
    if (wdq::max_revisit(s) != wdq_test::oracle_mr(s)) {
      ok = false;
      detail = "(mr mismatch)";
      break;
    }
    ++sessions;
  }
  report(5, "oracle equivalence on small fixtures", ok,
         ok ? "(" + std::to_string(sessions) + " sessions over " +
                  std::to_string(dirs.size()) + " directories)"
            : detail);
}

// 6. Optimal sessions are perfect on the tree fixtures, and batches are
//    byte-identical across runs.
void criterion_6() {
  bool ok = true;
  std::string detail;
  for (const char* name :
       {"sem1.json", "sem1_ideal.json", "deep_ideal.json", "chain3.json",
        "alphabet.json"}) {
    auto wd = wdq_test::load_fixture(name);
    std::vector<wdq::ResourceId> targets;
    for (const auto& r : wd.resources()) targets.push_back(r.id);
    auto batch = wdq::batch_simulate(wd, targets, {}, {}, 1);
    if (!batch.failures.empty()) {
      ok = false;
      detail = std::string("(unreachable target in ") + name + ")";
      break;
    }
    for (const auto& s : batch.sessions) {
      auto m = wdq::score_session(wd, s);
      if (m.pr != 0.0 || m.mr != 0) {
        ok = false;
        detail = std::string("(non-optimal session in ") + name + ")";
        break;
      }
    }
    if (!ok) break;
  }

  if (ok) {
    auto wd = wdq_test::load_fixture("alphabet.json");
    std::vector<wdq::ResourceId> targets;
    for (const auto& r : wd.resources()) targets.push_back(r.id);
    wdq::Policy noisy;
    noisy.kind = wdq::Policy::Kind::noisy_greedy;
    noisy.noise = 0.4;
    wdq::SimConfig cfg;
    cfg.seed = 424242;
    cfg.nav.allow_up = true;
    const auto a = wdq::sessions_to_jsonl(
        wdq::batch_simulate(wd, targets, noisy, cfg, 5).sessions);
    const auto b = wdq::sessions_to_jsonl(
        wdq::batch_simulate(wd, targets, noisy, cfg, 5).sessions);
    if (a != b || a.empty()) {
      ok = false;
      detail = "(batch output not reproducible)";
    }
  }
  report(6, "optimal sessions perfect, batches reproducible", ok, detail);
}

// 7. skip_level(2) on the alphabet fixture: tier removed, resources
//    reattached, still valid, and the former level-3 categories end up
//    strictly closer together, both by hops and by bag distance across
//    the level-2 tier.
void criterion_7() {
  auto wd = wdq_test::load_fixture("alphabet.json");
  auto out = wdq::skip_level(wd, 2);
  const std::vector<wdq::CategoryId> topics{"apples", "bananas", "citrus"};

  bool ok = !out.has_category("A") && !out.has_category("B") &&
            !out.has_category("C") && out.depth() == 2;
  std::string detail = ok ? "" : "(letter tier still present)";

  if (ok) {
    auto root_res = out.category("root").resources;
    std::set<wdq::ResourceId> res_set(root_res.begin(), root_res.end());
    ok = res_set.count("ra") && res_set.count("rb") && res_set.count("rc");
    if (!ok) detail = "(letter resources not reattached to the root)";
  }
  if (ok) {
    ok = wdq::validate(out).empty();
    if (!ok) detail = "(skip result fails validation)";
  }

  if (ok) {
    const wdq::NavConfig up{true};
    std::size_t hops_before = 0;
    std::size_t hops_after = 0;
    double bag_before = 0.0;
    double bag_after = 0.0;
    const std::vector<wdq::CategoryId> letters{"A", "B", "C"};
    for (std::size_t i = 0; i < topics.size(); ++i)
      for (std::size_t j = i + 1; j < topics.size(); ++j) {
        hops_before = std::max(
            hops_before,
            wdq::shortest_path_length(wd, topics[i], topics[j], up));
        hops_after = std::max(
            hops_after,
            wdq::shortest_path_length(out, topics[i], topics[j], up));
        bag_before =
            std::max(bag_before, wdq::distance(wd, letters[i], letters[j]));
        bag_after =
            std::max(bag_after, wdq::distance(out, topics[i], topics[j]));
      }
    ok = hops_after < hops_before && bag_after < bag_before;
    detail = "(hops " + std::to_string(hops_before) + " -> " +
             std::to_string(hops_after) + ", tier distance " +
             std::to_string(bag_before) + " -> " + std::to_string(bag_after) +
             ")";
  }
  report(7, "level skip tightens the surviving tier", ok, detail);
}

// 8. The 753-category / 25,185-resource directory loads, validates,
//    audits, and scores 10,000 simulated sessions inside 60 s.
void criterion_8() {
  const auto t0 = std::chrono::steady_clock::now();
  auto built = wdq_test::scale_directory();
  auto wd = wdq::load_directory_from_string(wdq::write_directory(built));
  bool ok = wd.categories().size() == 753 && wd.resources().size() == 25185;
  std::string detail = ok ? "" : "(wrong shape)";

  if (ok) {
    auto audit = wdq::audit_ideality(wd);
    ok = audit.gaps.size() == 753;
    if (!ok) detail = "(audit incomplete)";
  }

  std::size_t scored = 0;
  bool all_arrived = true;
  if (ok) {
    std::vector<wdq::ResourceId> targets;
    targets.reserve(10000);
    for (std::size_t i = 0; i < 10000; ++i)
      targets.push_back(wd.resources()[(i * 2) % 25185].id);
    wdq::Policy noisy;
    noisy.kind = wdq::Policy::Kind::noisy_greedy;
    noisy.noise = 0.25;
    noisy.max_steps = 60;
    wdq::SimConfig cfg;
    cfg.seed = 8;
    cfg.nav.allow_up = true;
    auto batch = wdq::batch_simulate(wd, targets, noisy, cfg, 1);
    all_arrived = batch.failures.empty();

    wdq::SessionScorer scorer(wd, {}, cfg.nav);
    std::vector<wdq::SessionMetrics> metrics;
    metrics.reserve(batch.sessions.size());
    for (const auto& s : batch.sessions) metrics.push_back(scorer.score(s));
    scored = metrics.size();
    auto agg = wdq::aggregate(metrics);
    ok = all_arrived && scored == 10000 && agg.count == 10000;
    if (!ok) detail = "(scored " + std::to_string(scored) + ")";
  }

  const double elapsed = seconds_since(t0);
  ok = ok && elapsed < 60.0;
  report(8, "753 categories / 25185 resources inside 60 s", ok,
         "(t=" + std::to_string(elapsed) + "s, sessions=" +
             std::to_string(scored) + ")");
}

// 9. simulate -> serialize -> parse -> score, strict edge checking on,
//    zero warnings for every edge-following policy.
void criterion_9() {
  bool ok = true;
  std::string detail;
  auto wd = wdq_test::load_fixture("alphabet.json");
  std::vector<wdq::ResourceId> targets;
  for (const auto& r : wd.resources()) targets.push_back(r.id);

  std::vector<wdq::Policy> policies(3);
  policies[0].kind = wdq::Policy::Kind::optimal;
  policies[1].kind = wdq::Policy::Kind::greedy_semantic;
  policies[2].kind = wdq::Policy::Kind::noisy_greedy;
  policies[2].noise = 0.5;

  for (const auto& p : policies) {
    wdq::SimConfig cfg;
    cfg.seed = 90;
    cfg.nav.allow_up = true;
    auto batch = wdq::batch_simulate(wd, targets, p, cfg, 3);
    const std::string jsonl = wdq::sessions_to_jsonl(batch.sessions);
    auto parsed = wdq::read_sessions_from_string(jsonl, wd);
    if (parsed.size() != batch.sessions.size()) {
      ok = false;
      detail = "(round trip lost sessions)";
      break;
    }
    std::vector<wdq::BrowseSession> back;
    for (auto& ns : parsed) back.push_back(ns.session);
    if (wdq::sessions_to_jsonl(back) != jsonl) {
      ok = false;
      detail = "(round trip not byte stable)";
      break;
    }
    wdq::SessionScorer scorer(wd, {}, cfg.nav);
    for (const auto& ns : parsed) {
      if (!wdq::non_edge_transitions(wd, ns.session, cfg.nav).empty()) {
        ok = false;
        detail = std::string("(non-edge transition under ") +
                 wdq::policy_name(p.kind) + ")";
        break;
      }
      (void)scorer.score(ns.session);
    }
    if (!ok) break;
  }
  report(9, "strict-edge round trip is warning free", ok, detail);
}

}  // namespace

int main() {
  using Criterion = void (*)();
  const Criterion criteria[] = {criterion_1, criterion_2, criterion_3,
                                criterion_4, criterion_5, criterion_6,
                                criterion_7, criterion_8, criterion_9};
  int n = 0;
  for (Criterion c : criteria) {
    ++n;
    try {
      c();
    } catch (const std::exception& e) {
      report(n, "unhandled exception", false,
             std::string("(") + e.what() + ")");
    }
  }
  if (g_failures == 0) {
    std::printf("all 9 criteria passed\n");
    return 0;
  }
  std::printf("%d criteria failed\n", g_failures);
  return 1;
}
