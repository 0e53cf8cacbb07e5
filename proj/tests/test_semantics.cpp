#include <doctest.h>

#include "support/fixtures.hpp"
#include "wdq/semantics.hpp"

using wdq::ConceptBag;
using wdq::ContentMode;
using wdq::SemanticsConfig;
using wdq_test::load_fixture;

namespace {

SemanticsConfig with_mode(ContentMode mode) {
  SemanticsConfig cfg;
  cfg.mode = mode;
  return cfg;
}

}  // namespace

TEST_CASE("content modes on sem1") {
  auto wd = load_fixture("sem1.json");

  CHECK(wdq::semantic_content(wd, "cA", with_mode(ContentMode::resources)) ==
        ConceptBag{"apple", "fruit"});
  CHECK(wdq::semantic_content(wd, "root", with_mode(ContentMode::resources))
            .empty());

  CHECK(wdq::semantic_content(wd, "root", with_mode(ContentMode::children)) ==
        ConceptBag{"apple", "fruit", "banana"});
  CHECK(wdq::semantic_content(wd, "cA", with_mode(ContentMode::children))
            .empty());

  // automatic: own resources first, then children
  CHECK(wdq::semantic_content(wd, "cA") == ConceptBag{"apple", "fruit"});
  CHECK(wdq::semantic_content(wd, "root") ==
        ConceptBag{"apple", "fruit", "banana"});
}

TEST_CASE("automatic mode falls back to the constant bag") {
  auto wd = wdq::load_directory_from_string(R"({
    "root": "c1",
    "categories": [
      {"id": "c1", "level": 1, "url": "u", "children": ["c2", "c3"]},
      {"id": "c2", "level": 2, "url": "u", "const_bag": ["placeholder"]},
      {"id": "c3", "level": 2, "url": "u"}
    ],
    "resources": []
  })");
  CHECK(wdq::semantic_content(wd, "c2") == ConceptBag{"placeholder"});
  CHECK(wdq::semantic_content(wd, "c3").empty());
  // the children aggregate sees the fallback
  CHECK(wdq::semantic_content(wd, "c1") == ConceptBag{"placeholder"});
}

TEST_CASE("children mode aggregates multiplicities") {
  auto wd = load_fixture("deep_ideal.json");
  // cA1 {apple} + cA2 {fruit} + own resources ignored in children mode
  CHECK(wdq::semantic_content(wd, "cA", with_mode(ContentMode::children)) ==
        ConceptBag{"apple", "fruit"});
  // root children: cA resolves to its resources {apple, fruit}
  CHECK(wdq::semantic_content(wd, "root", with_mode(ContentMode::children)) ==
        ConceptBag{"apple", "fruit", "banana"});
}

TEST_CASE("similarity and distance on sem1") {
  auto wd = load_fixture("sem1.json");
  CHECK(wdq::similarity(wd, "root", "cA") == doctest::Approx(2.0 / 3.0));
  CHECK(wdq::distance(wd, "root", "cA") == doctest::Approx(1.5));
  CHECK(wdq::similarity(wd, "cA", "cA") == 1.0);
  CHECK(wdq::distance(wd, "cA", "cA") == 1.0);
  CHECK(wdq::similarity(wd, "cA", "cB") == 0.0);
  CHECK(wdq::distance(wd, "cA", "cB") == 1000.0);

  SemanticsConfig capped;
  capped.dist_cap = 7.5;
  CHECK(wdq::distance(wd, "cA", "cB", capped) == 7.5);
}

TEST_CASE("distance is symmetric and reciprocal to similarity") {
  wdq::SplitMix64 rng(0xd15ca11);
  for (int iter = 0; iter < 50; ++iter) {
    auto wd = wdq_test::random_directory(rng);
    wdq::ContentIndex index(wd);
    const auto& cats = wd.categories();
    for (std::size_t a = 0; a < cats.size(); ++a)
      for (std::size_t b = a; b < cats.size(); ++b) {
        const double sim = index.similarity(a, b);
        CHECK(sim == index.similarity(b, a));
        CHECK(sim >= 0.0);
        CHECK(sim <= 1.0);
        const double dist = index.distance(a, b);
        if (sim == 0.0)
          CHECK(dist == index.config().dist_cap);
        else
          CHECK(dist == doctest::Approx(1.0 / sim));
      }
  }
}

TEST_CASE("audit marks structurally empty comparisons vacuous") {
  auto wd = load_fixture("sem1.json");
  auto report = wdq::audit_ideality(wd);
  REQUIRE(report.gaps.size() == 3);
  for (const auto& gap : report.gaps) CHECK(gap.vacuous);
  CHECK(report.ideal);
  CHECK(report.realistically_ideal);
  CHECK(report.max_gap == 0);
}

TEST_CASE("ideal fixture passes with a non-vacuous root") {
  auto wd = load_fixture("sem1_ideal.json");
  auto report = wdq::audit_ideality(wd);
  CHECK(report.ideal);
  const auto& root_gap = report.gaps[0];
  CHECK(root_gap.id == "root");
  CHECK_FALSE(root_gap.vacuous);
  CHECK(root_gap.size == 0);
  CHECK(root_gap.normalized == 0.0);
}

TEST_CASE("perturbed fixture fails with gap size 1") {
  auto wd = load_fixture("sem1_perturbed.json");
  auto report = wdq::audit_ideality(wd);
  CHECK_FALSE(report.ideal);
  CHECK_FALSE(report.realistically_ideal);
  CHECK(report.max_gap == 1);
  const auto& root_gap = report.gaps[0];
  CHECK(root_gap.gap == ConceptBag{"citrus"});
  // one stray term over a summed union of 4 + 3
  CHECK(root_gap.normalized == doctest::Approx(1.0 / 7.0));

  SemanticsConfig tolerant;
  tolerant.epsilon = 1;
  CHECK(wdq::is_realistically_ideal(wd, tolerant));
  CHECK_FALSE(wdq::is_ideal(wd, tolerant));
}

TEST_CASE("nested ideal fixture and per-resource perturbations") {
  auto wd = load_fixture("deep_ideal.json");
  REQUIRE(wdq::is_ideal(wd));

  for (std::size_t i = 0; i < wd.resources().size(); ++i) {
    auto cats = wd.categories();
    auto ress = wd.resources();
    ress[i].concepts.add("smuggled");
    wdq::WebDirectory mutated(wd.root(), std::move(cats), std::move(ress));
    CAPTURE(wd.resources()[i].id);
    auto report = wdq::audit_ideality(mutated);
    CHECK_FALSE(report.ideal);
    CHECK(report.max_gap >= 1);

    wdq::SemanticsConfig tolerant;
    tolerant.epsilon = report.max_gap;
    CHECK(wdq::is_realistically_ideal(mutated, tolerant));
  }
}

TEST_CASE("content index agrees with the free functions") {
  auto wd = load_fixture("alphabet.json");
  wdq::ContentIndex index(wd);
  for (const auto& c : wd.categories()) {
    CHECK(index.content(c.id) == wdq::semantic_content(wd, c.id));
    CHECK(index.content(c.id, ContentMode::resources) ==
          wdq::semantic_content(wd, c.id, with_mode(ContentMode::resources)));
  }
  CHECK(index.distance("A", "B") == wdq::distance(wd, "A", "B"));
}
