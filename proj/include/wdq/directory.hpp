#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "wdq/concept_bag.hpp"
#include "wdq/error.hpp"

namespace wdq {

using CategoryId = std::string;
using ResourceId = std::string;

/// One node of the directory graph.
///
/// `children` are the structural (tree) edges and `cross_links` the ad hoc
/// directed edges; both preserve input order, which stabilizes every
/// tie-break and output ordering downstream.
struct Category {
  CategoryId id;
  int level = 1;  // root tier is 1
  std::string url;
  std::vector<CategoryId> children;
  std::vector<CategoryId> cross_links;
  std::vector<ResourceId> resources;
  /// Administrator-assigned fallback semantics for categories that have
  /// neither resources nor children.
  std::optional<ConceptBag> constant_bag;
};

struct Resource {
  ResourceId id;
  std::string url;
  ConceptBag concepts;  // may be empty (unannotated resource)
};

/// Which edges a browser may traverse. Parent->child edges and cross-links
/// are always navigable; child->parent only when `allow_up` is set (models
/// the Back button).
struct NavConfig {
  bool allow_up = false;
};

/// One broken structural rule, with the offending ids.
struct Violation {
  enum class Rule {
    root_missing,        // root id not among the categories
    root_level,          // the root category is not at level 1
    multiple_roots,      // more than one category at level 1
    duplicate_category,  // two categories share an id
    duplicate_resource_entry,  // two resources share an id
    empty_id,            // empty category or resource id
    bad_level,           // level < 1
    self_loop,
    duplicate_child,
    duplicate_cross_link,
    duplicate_resource,  // same resource listed twice in one category
    child_cross_overlap,  // an edge is both structural and ad hoc
    level_mismatch,      // child not exactly one level below its parent
    orphan,              // non-root category with no parent
    multiple_parents,
    disconnected,
    unknown_category,    // edge points to a category that does not exist
    unknown_resource,
  };

  Rule rule;
  std::vector<std::string> ids;
  std::string message;
};

const char* rule_name(Violation::Rule rule);

/// Raised by load_directory when the parsed structure breaks invariants;
/// carries every violation found, not just the first.
struct ValidationError : Error {
  explicit ValidationError(std::vector<Violation> violations);
  std::vector<Violation> violations;
};

/// The rooted directory graph plus its resource pool.
///
/// Instances are built once (by load_directory or the constructor) and are
/// immutable afterwards; every operation over them is a pure function.
/// Categories and resources keep their input order.
class WebDirectory {
 public:
  WebDirectory() = default;
  WebDirectory(CategoryId root, std::vector<Category> categories,
               std::vector<Resource> resources);

  const CategoryId& root() const { return root_; }
  int depth() const { return depth_; }

  const std::vector<Category>& categories() const { return categories_; }
  const std::vector<Resource>& resources() const { return resources_; }
  std::size_t category_count() const { return categories_.size(); }
  std::size_t resource_count() const { return resources_.size(); }

  bool has_category(const CategoryId& id) const;
  bool has_resource(const ResourceId& id) const;

  /// Lookup by id; throws Error when absent.
  const Category& category(const CategoryId& id) const;
  const Resource& resource(const ResourceId& id) const;

  const Category* find_category(const CategoryId& id) const;
  const Resource* find_resource(const ResourceId& id) const;

  /// Position in the input order; throws Error when absent.
  std::size_t category_index(const CategoryId& id) const;
  std::size_t resource_index(const ResourceId& id) const;

  /// Parent category, or nullptr for the root. Meaningful only on
  /// directories that pass validate().
  const Category* parent_of(const CategoryId& id) const;

 private:
  CategoryId root_;
  std::vector<Category> categories_;
  std::vector<Resource> resources_;
  std::unordered_map<std::string, std::size_t> cat_index_;
  std::unordered_map<std::string, std::size_t> res_index_;
  std::vector<std::ptrdiff_t> parent_;  // -1 when none
  int depth_ = 0;

  void rebuild();
};

/// Checks every structural invariant and returns all violations found.
/// An empty result means the directory is well formed.
std::vector<Violation> validate(const WebDirectory& wd);

/// Navigable successors of `from` in deterministic order: children first,
/// then cross-links, then the parent when nav.allow_up. Duplicates keep
/// their first occurrence.
std::vector<CategoryId> navigable_neighbors(const WebDirectory& wd,
                                            const CategoryId& from,
                                            NavConfig nav = {});

bool is_navigable_edge(const WebDirectory& wd, const CategoryId& from,
                       const CategoryId& to, NavConfig nav = {});

/// Number of categories on a minimum-length navigable walk from `from` to
/// `to`, counting both endpoints (so from == to gives 1).
/// Throws UnreachableError when no walk exists.
std::size_t shortest_path_length(const WebDirectory& wd, const CategoryId& from,
                                 const CategoryId& to, NavConfig nav = {});

/// Walk lengths from `from` to every category, indexed by category input
/// position; 0 marks unreachable.
std::vector<std::size_t> shortest_path_lengths_from(const WebDirectory& wd,
                                                    const CategoryId& from,
                                                    NavConfig nav = {});

/// Removes every category at `level` and splices the tiers above and below
/// together: children of a removed category become children of its parent
/// (in place of the removed entry), its resources are reattached to the
/// parent, cross-links to it are redirected to the parent and cross-links
/// from it are dropped. Levels above shift down by one.
/// Throws std::invalid_argument unless 1 < level <= wd.depth().
WebDirectory skip_level(const WebDirectory& wd, int level);

}  // namespace wdq
