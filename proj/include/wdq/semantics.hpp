#pragma once

#include <cstddef>
#include <vector>

#include "wdq/concept_bag.hpp"
#include "wdq/directory.hpp"

namespace wdq {

/// Which definition of category semantic content to use.
///
/// `resources`  : aggregate of the category's own resource annotations.
/// `children`   : aggregate of the children's content, each child resolved
///                by the `automatic` rule below.
/// `automatic`  : resources if the category has any; otherwise the
///                children aggregate; otherwise the constant bag; else {}.
enum class ContentMode { resources, children, automatic };

enum class SimilarityKind { jaccard };

struct SemanticsConfig {
  ContentMode mode = ContentMode::automatic;
  SimilarityKind similarity = SimilarityKind::jaccard;
  /// Distance reported when similarity is exactly zero; must be >= 1.
  double dist_cap = 1000.0;
  /// Gap-size threshold of the relaxed ideality audit.
  std::size_t epsilon = 0;
};

/// Per-category semantic content over one directory, all three modes
/// computed eagerly at construction. Lookups afterwards are const and safe
/// to share across threads.
///
/// Requires a directory that passes validate(); content of the children
/// aggregate follows tree edges only, never cross-links.
class ContentIndex {
 public:
  ContentIndex(const WebDirectory& wd, SemanticsConfig cfg = {});

  const ConceptBag& content(std::size_t cat_index, ContentMode mode) const;
  const ConceptBag& content(const CategoryId& id, ContentMode mode) const;
  /// Content under the configured mode.
  const ConceptBag& content(const CategoryId& id) const;

  double similarity(std::size_t a, std::size_t b) const;
  double similarity(const CategoryId& a, const CategoryId& b) const;
  double distance(std::size_t a, std::size_t b) const;
  double distance(const CategoryId& a, const CategoryId& b) const;

  const WebDirectory& directory() const { return wd_; }
  const SemanticsConfig& config() const { return cfg_; }

 private:
  const WebDirectory& wd_;
  SemanticsConfig cfg_;
  std::vector<ConceptBag> resources_;
  std::vector<ConceptBag> children_;
  std::vector<ConceptBag> automatic_;
};

/// One-shot content query (builds a throwaway index; use ContentIndex when
/// querying repeatedly).
ConceptBag semantic_content(const WebDirectory& wd, const CategoryId& id,
                            const SemanticsConfig& cfg = {});

/// The two-sided difference between a category's resource-derived and
/// child-derived content. A category missing one side (no resources or no
/// children) is vacuous: reported, but exempt from the boolean audits.
struct CategoryGap {
  CategoryId id;
  ConceptBag gap;
  std::size_t size = 0;
  bool vacuous = false;
  /// Gap size over the size of the union of both sides (0 when both are
  /// empty). Reported for cross-directory comparison only.
  double normalized = 0.0;
};

CategoryGap ideality_gap(const WebDirectory& wd, const CategoryId& id,
                         const SemanticsConfig& cfg = {});

struct IdealityReport {
  std::vector<CategoryGap> gaps;  // every category, input order
  std::size_t max_gap = 0;        // over non-vacuous categories
  bool ideal = false;
  bool realistically_ideal = false;
  std::size_t epsilon = 0;
};

IdealityReport audit_ideality(const WebDirectory& wd,
                              const SemanticsConfig& cfg = {});

/// True iff every non-vacuous category has an empty gap.
bool is_ideal(const WebDirectory& wd, const SemanticsConfig& cfg = {});

/// True iff every non-vacuous category has gap size <= cfg.epsilon.
bool is_realistically_ideal(const WebDirectory& wd,
                            const SemanticsConfig& cfg = {});

/// Similarity of two categories' content under cfg.mode, in [0, 1].
double similarity(const WebDirectory& wd, const CategoryId& a,
                  const CategoryId& b, const SemanticsConfig& cfg = {});

/// dist = 1 / sim, capped at cfg.dist_cap when sim = 0; always >= 1.
double distance(const WebDirectory& wd, const CategoryId& a,
                const CategoryId& b, const SemanticsConfig& cfg = {});

}  // namespace wdq
