#include "wdq/directory.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace wdq {

namespace {

std::string join_ids(const std::vector<std::string>& ids) {
  std::string out;
  for (const auto& id : ids) {
    if (!out.empty()) out += ", ";
    out += id;
  }
  return out;
}

Violation make_violation(Violation::Rule rule, std::vector<std::string> ids,
                         std::string message) {
  return Violation{rule, std::move(ids), std::move(message)};
}

}  // namespace

const char* rule_name(Violation::Rule rule) {
  switch (rule) {
    case Violation::Rule::root_missing: return "root-missing";
    case Violation::Rule::root_level: return "root-level";
    case Violation::Rule::multiple_roots: return "multiple-roots";
    case Violation::Rule::duplicate_category: return "duplicate-category";
    case Violation::Rule::duplicate_resource_entry:
      return "duplicate-resource-entry";
    case Violation::Rule::empty_id: return "empty-id";
    case Violation::Rule::bad_level: return "bad-level";
    case Violation::Rule::self_loop: return "self-loop";
    case Violation::Rule::duplicate_child: return "duplicate-child";
    case Violation::Rule::duplicate_cross_link: return "duplicate-cross-link";
    case Violation::Rule::duplicate_resource: return "duplicate-resource";
    case Violation::Rule::child_cross_overlap: return "child-cross-overlap";
    case Violation::Rule::level_mismatch: return "level-mismatch";
    case Violation::Rule::orphan: return "orphan";
    case Violation::Rule::multiple_parents: return "multiple-parents";
    case Violation::Rule::disconnected: return "disconnected";
    case Violation::Rule::unknown_category: return "unknown-category";
    case Violation::Rule::unknown_resource: return "unknown-resource";
  }
  return "unknown";
}

ValidationError::ValidationError(std::vector<Violation> v)
    : Error([&v] {
        std::string what = "directory validation failed:";
        for (const auto& violation : v) what += "\n  " + violation.message;
        return what;
      }()),
      violations(std::move(v)) {}

WebDirectory::WebDirectory(CategoryId root, std::vector<Category> categories,
                           std::vector<Resource> resources)
    : root_(std::move(root)),
      categories_(std::move(categories)),
      resources_(std::move(resources)) {
  rebuild();
}

void WebDirectory::rebuild() {
  cat_index_.clear();
  res_index_.clear();
  depth_ = 0;
  for (std::size_t i = 0; i < categories_.size(); ++i) {
    cat_index_.emplace(categories_[i].id, i);  // first occurrence wins
    depth_ = std::max(depth_, categories_[i].level);
  }
  for (std::size_t i = 0; i < resources_.size(); ++i)
    res_index_.emplace(resources_[i].id, i);

  parent_.assign(categories_.size(), -1);
  for (std::size_t i = 0; i < categories_.size(); ++i) {
    for (const auto& child : categories_[i].children) {
      auto it = cat_index_.find(child);
      if (it != cat_index_.end() && parent_[it->second] < 0)
        parent_[it->second] = static_cast<std::ptrdiff_t>(i);
    }
  }
}

bool WebDirectory::has_category(const CategoryId& id) const {
  return cat_index_.count(id) > 0;
}

bool WebDirectory::has_resource(const ResourceId& id) const {
  return res_index_.count(id) > 0;
}

const Category* WebDirectory::find_category(const CategoryId& id) const {
  auto it = cat_index_.find(id);
  return it == cat_index_.end() ? nullptr : &categories_[it->second];
}

const Resource* WebDirectory::find_resource(const ResourceId& id) const {
  auto it = res_index_.find(id);
  return it == res_index_.end() ? nullptr : &resources_[it->second];
}

const Category& WebDirectory::category(const CategoryId& id) const {
  const Category* c = find_category(id);
  if (!c) throw Error("unknown category '" + id + "'");
  return *c;
}

const Resource& WebDirectory::resource(const ResourceId& id) const {
  const Resource* r = find_resource(id);
  if (!r) throw Error("unknown resource '" + id + "'");
  return *r;
}

std::size_t WebDirectory::category_index(const CategoryId& id) const {
  auto it = cat_index_.find(id);
  if (it == cat_index_.end()) throw Error("unknown category '" + id + "'");
  return it->second;
}

std::size_t WebDirectory::resource_index(const ResourceId& id) const {
  auto it = res_index_.find(id);
  if (it == res_index_.end()) throw Error("unknown resource '" + id + "'");
  return it->second;
}

const Category* WebDirectory::parent_of(const CategoryId& id) const {
  auto it = cat_index_.find(id);
  if (it == cat_index_.end()) return nullptr;
  std::ptrdiff_t p = parent_[it->second];
  return p < 0 ? nullptr : &categories_[static_cast<std::size_t>(p)];
}

std::vector<Violation> validate(const WebDirectory& wd) {
  std::vector<Violation> out;
  const auto& cats = wd.categories();

  // id uniqueness and well-formedness
  {
    std::unordered_set<std::string> seen;
    for (const auto& c : cats) {
      if (c.id.empty())
        out.push_back(make_violation(Violation::Rule::empty_id, {c.id},
                                     "empty category id"));
      else if (!seen.insert(c.id).second)
        out.push_back(make_violation(Violation::Rule::duplicate_category,
                                     {c.id}, "duplicate category id " + c.id));
      if (c.level < 1)
        out.push_back(make_violation(
            Violation::Rule::bad_level, {c.id},
            "category " + c.id + " has level " + std::to_string(c.level)));
    }
  }
  {
    std::unordered_set<std::string> seen;
    for (const auto& r : wd.resources()) {
      if (r.id.empty())
        out.push_back(make_violation(Violation::Rule::empty_id, {r.id},
                                     "empty resource id"));
      else if (!seen.insert(r.id).second)
        out.push_back(make_violation(Violation::Rule::duplicate_resource_entry,
                                     {r.id}, "duplicate resource id " + r.id));
    }
  }

  // root: present, level 1, and the only level-1 category
  std::vector<std::string> level_one;
  for (const auto& c : cats)
    if (c.level == 1) level_one.push_back(c.id);
  if (!wd.has_category(wd.root()))
    out.push_back(make_violation(Violation::Rule::root_missing, {wd.root()},
                                 "root category '" + wd.root() +
                                     "' not found"));
  else if (wd.category(wd.root()).level != 1)
    out.push_back(make_violation(
        Violation::Rule::root_level, {wd.root()},
        "root " + wd.root() + " has level " +
            std::to_string(wd.category(wd.root()).level) + ", expected 1"));
  if (level_one.size() > 1)
    out.push_back(make_violation(Violation::Rule::multiple_roots, level_one,
                                 "multiple roots: " + join_ids(level_one)));

  // per-category edge rules
  for (const auto& c : cats) {
    std::unordered_set<std::string> child_set;
    for (const auto& child : c.children) {
      if (child == c.id)
        out.push_back(make_violation(Violation::Rule::self_loop, {c.id},
                                     "self-loop at " + c.id));
      if (!child_set.insert(child).second)
        out.push_back(make_violation(Violation::Rule::duplicate_child,
                                     {c.id, child},
                                     "duplicate child " + child + " in " +
                                         c.id));
      if (!wd.has_category(child))
        out.push_back(make_violation(Violation::Rule::unknown_category,
                                     {c.id, child},
                                     "child " + child + " of " + c.id +
                                         " not found"));
    }
    std::unordered_set<std::string> cross_set;
    for (const auto& link : c.cross_links) {
      if (link == c.id)
        out.push_back(make_violation(Violation::Rule::self_loop, {c.id},
                                     "self-loop at " + c.id));
      if (!cross_set.insert(link).second)
        out.push_back(make_violation(Violation::Rule::duplicate_cross_link,
                                     {c.id, link},
                                     "duplicate cross-link " + link + " in " +
                                         c.id));
      if (child_set.count(link))
        out.push_back(make_violation(
            Violation::Rule::child_cross_overlap, {c.id, link},
            "edge " + c.id + " -> " + link + " is both child and cross-link"));
      if (!wd.has_category(link))
        out.push_back(make_violation(Violation::Rule::unknown_category,
                                     {c.id, link},
                                     "cross-link " + link + " of " + c.id +
                                         " not found"));
    }
    std::unordered_set<std::string> res_set;
    for (const auto& r : c.resources) {
      if (!res_set.insert(r).second)
        out.push_back(make_violation(Violation::Rule::duplicate_resource,
                                     {c.id, r},
                                     "duplicate resource " + r + " in " +
                                         c.id));
      if (!wd.has_resource(r))
        out.push_back(make_violation(Violation::Rule::unknown_resource,
                                     {c.id, r},
                                     "resource " + r + " in " + c.id +
                                         " not found"));
    }
  }

  // parent structure: every non-root category has exactly one parent, and
  // each child edge descends exactly one level
  {
    std::unordered_map<std::string, std::vector<std::string>> parents;
    for (const auto& c : cats) {
      for (const auto& child : c.children) {
        if (!wd.has_category(child) || child == c.id) continue;
        parents[child].push_back(c.id);
        const Category& cc = wd.category(child);
        if (cc.level != c.level + 1)
          out.push_back(make_violation(
              Violation::Rule::level_mismatch, {c.id, child},
              "level mismatch: " + child + " (level " +
                  std::to_string(cc.level) + ") is a child of " + c.id +
                  " (level " + std::to_string(c.level) + ")"));
      }
    }
    for (const auto& c : cats) {
      auto it = parents.find(c.id);
      std::size_t n = it == parents.end() ? 0 : it->second.size();
      if (c.id == wd.root()) {
        if (n > 0)
          out.push_back(make_violation(
              Violation::Rule::multiple_parents, {c.id},
              "root " + c.id + " is listed as a child of " +
                  join_ids(it->second)));
        continue;
      }
      if (n == 0)
        out.push_back(make_violation(Violation::Rule::orphan, {c.id},
                                     "orphan category " + c.id +
                                         " (no parent)"));
      else if (n > 1)
        out.push_back(make_violation(
            Violation::Rule::multiple_parents, {c.id},
            "multiple parents for " + c.id + ": " + join_ids(it->second)));
    }
  }

  // connectivity of the undirected view of all edges
  if (!cats.empty() && wd.has_category(wd.root())) {
    std::unordered_map<std::string, std::vector<std::string>> undirected;
    for (const auto& c : cats) {
      for (const auto& child : c.children) {
        if (!wd.has_category(child)) continue;
        undirected[c.id].push_back(child);
        undirected[child].push_back(c.id);
      }
      for (const auto& link : c.cross_links) {
        if (!wd.has_category(link)) continue;
        undirected[c.id].push_back(link);
        undirected[link].push_back(c.id);
      }
    }
    std::unordered_set<std::string> seen{wd.root()};
    std::deque<std::string> queue{wd.root()};
    while (!queue.empty()) {
      std::string cur = queue.front();
      queue.pop_front();
      for (const auto& next : undirected[cur])
        if (seen.insert(next).second) queue.push_back(next);
    }
    std::vector<std::string> unreachable;
    for (const auto& c : cats)
      if (!seen.count(c.id)) unreachable.push_back(c.id);
    if (!unreachable.empty())
      out.push_back(make_violation(
          Violation::Rule::disconnected, unreachable,
          "disconnected categories: " + join_ids(unreachable)));
  }

  return out;
}

std::vector<CategoryId> navigable_neighbors(const WebDirectory& wd,
                                            const CategoryId& from,
                                            NavConfig nav) {
  const Category& c = wd.category(from);
  std::vector<CategoryId> out;
  std::unordered_set<std::string> seen;
  auto push = [&](const CategoryId& id) {
    if (wd.has_category(id) && seen.insert(id).second) out.push_back(id);
  };
  for (const auto& child : c.children) push(child);
  for (const auto& link : c.cross_links) push(link);
  if (nav.allow_up) {
    if (const Category* p = wd.parent_of(from)) push(p->id);
  }
  return out;
}

bool is_navigable_edge(const WebDirectory& wd, const CategoryId& from,
                       const CategoryId& to, NavConfig nav) {
  const Category* c = wd.find_category(from);
  if (!c || !wd.has_category(to)) return false;
  if (std::find(c->children.begin(), c->children.end(), to) !=
      c->children.end())
    return true;
  if (std::find(c->cross_links.begin(), c->cross_links.end(), to) !=
      c->cross_links.end())
    return true;
  if (nav.allow_up) {
    const Category* p = wd.parent_of(from);
    if (p && p->id == to) return true;
  }
  return false;
}

std::vector<std::size_t> shortest_path_lengths_from(const WebDirectory& wd,
                                                    const CategoryId& from,
                                                    NavConfig nav) {
  std::size_t n = wd.category_count();
  std::vector<std::size_t> lengths(n, 0);
  std::size_t start = wd.category_index(from);
  lengths[start] = 1;
  std::deque<std::size_t> queue{start};
  while (!queue.empty()) {
    std::size_t cur = queue.front();
    queue.pop_front();
    for (const auto& next : navigable_neighbors(
             wd, wd.categories()[cur].id, nav)) {
      std::size_t ni = wd.category_index(next);
      if (lengths[ni] == 0) {
        lengths[ni] = lengths[cur] + 1;
        queue.push_back(ni);
      }
    }
  }
  return lengths;
}

std::size_t shortest_path_length(const WebDirectory& wd, const CategoryId& from,
                                 const CategoryId& to, NavConfig nav) {
  std::size_t to_index = wd.category_index(to);
  auto lengths = shortest_path_lengths_from(wd, from, nav);
  if (lengths[to_index] == 0)
    throw UnreachableError("no navigable walk from '" + from + "' to '" + to +
                           "'" + (nav.allow_up ? "" : " (allow_up = false)"));
  return lengths[to_index];
}

WebDirectory skip_level(const WebDirectory& wd, int level) {
  if (level <= 1)
    throw std::invalid_argument("cannot skip level " + std::to_string(level) +
                                ": the root level is not skippable");
  if (level > wd.depth())
    throw std::invalid_argument("cannot skip level " + std::to_string(level) +
                                ": directory depth is " +
                                std::to_string(wd.depth()));

  // removed category -> its parent
  std::unordered_map<std::string, std::string> reattach;
  for (const auto& c : wd.categories()) {
    if (c.level != level) continue;
    const Category* p = wd.parent_of(c.id);
    if (!p) throw Error("skip_level requires a validated directory");
    reattach.emplace(c.id, p->id);
  }

  std::vector<Category> kept;
  kept.reserve(wd.category_count() - reattach.size());
  for (const auto& c : wd.categories()) {
    if (c.level == level) continue;
    Category nc = c;
    if (nc.level > level) --nc.level;

    // splice removed children in place, keep the rest
    std::vector<CategoryId> children;
    for (const auto& child : c.children) {
      auto it = reattach.find(child);
      if (it == reattach.end()) {
        children.push_back(child);
      } else {
        const Category& removed = wd.category(child);
        for (const auto& grandchild : removed.children)
          children.push_back(grandchild);
        for (const auto& r : removed.resources)
          if (std::find(nc.resources.begin(), nc.resources.end(), r) ==
              nc.resources.end())
            nc.resources.push_back(r);
      }
    }
    nc.children = std::move(children);

    // redirect cross-links to removed categories at their parent; drop
    // anything that would break the simple-graph rules
    std::vector<CategoryId> cross;
    std::unordered_set<std::string> cross_seen;
    std::unordered_set<std::string> child_set(nc.children.begin(),
                                              nc.children.end());
    for (const auto& link : c.cross_links) {
      auto it = reattach.find(link);
      CategoryId target = it == reattach.end() ? link : it->second;
      if (target == nc.id) continue;
      if (child_set.count(target)) continue;
      if (!cross_seen.insert(target).second) continue;
      cross.push_back(target);
    }
    nc.cross_links = std::move(cross);
    kept.push_back(std::move(nc));
  }

  return WebDirectory(wd.root(), std::move(kept),
                      std::vector<Resource>(wd.resources()));
}

}  // namespace wdq
