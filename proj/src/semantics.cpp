#include "wdq/semantics.hpp"

#include <algorithm>
#include <numeric>

namespace wdq {

ContentIndex::ContentIndex(const WebDirectory& wd, SemanticsConfig cfg)
    : wd_(wd), cfg_(cfg) {
  std::size_t n = wd.category_count();
  resources_.resize(n);
  children_.resize(n);
  automatic_.resize(n);

  for (std::size_t i = 0; i < n; ++i) {
    const Category& c = wd.categories()[i];
    ConceptBag bag;
    for (const auto& rid : c.resources)
      if (const Resource* r = wd.find_resource(rid))
        bag = bag_union(bag, r->concepts);
    resources_[i] = std::move(bag);
  }

  // bottom-up by level: children always sit one level below their parent,
  // so a descending sweep sees every child before its parent
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return wd.categories()[a].level > wd.categories()[b].level;
  });
  for (std::size_t i : order) {
    const Category& c = wd.categories()[i];
    ConceptBag from_children;
    for (const auto& child : c.children)
      if (wd.has_category(child))
        from_children =
            bag_union(from_children, automatic_[wd.category_index(child)]);
    if (!c.resources.empty())
      automatic_[i] = resources_[i];
    else if (!c.children.empty())
      automatic_[i] = from_children;
    else if (c.constant_bag)
      automatic_[i] = *c.constant_bag;
    children_[i] = std::move(from_children);
  }
}

const ConceptBag& ContentIndex::content(std::size_t cat_index,
                                        ContentMode mode) const {
  switch (mode) {
    case ContentMode::resources: return resources_[cat_index];
    case ContentMode::children: return children_[cat_index];
    case ContentMode::automatic: return automatic_[cat_index];
  }
  return automatic_[cat_index];
}

const ConceptBag& ContentIndex::content(const CategoryId& id,
                                        ContentMode mode) const {
  return content(wd_.category_index(id), mode);
}

const ConceptBag& ContentIndex::content(const CategoryId& id) const {
  return content(id, cfg_.mode);
}

double ContentIndex::similarity(std::size_t a, std::size_t b) const {
  return bag_jaccard(content(a, cfg_.mode), content(b, cfg_.mode));
}

double ContentIndex::similarity(const CategoryId& a,
                                const CategoryId& b) const {
  return similarity(wd_.category_index(a), wd_.category_index(b));
}

double ContentIndex::distance(std::size_t a, std::size_t b) const {
  double sim = similarity(a, b);
  return sim == 0.0 ? cfg_.dist_cap : 1.0 / sim;
}

double ContentIndex::distance(const CategoryId& a, const CategoryId& b) const {
  return distance(wd_.category_index(a), wd_.category_index(b));
}

ConceptBag semantic_content(const WebDirectory& wd, const CategoryId& id,
                            const SemanticsConfig& cfg) {
  return ContentIndex(wd, cfg).content(id, cfg.mode);
}

namespace {

CategoryGap gap_for(const ContentIndex& index, std::size_t i) {
  const WebDirectory& wd = index.directory();
  const Category& c = wd.categories()[i];
  CategoryGap out;
  out.id = c.id;
  const ConceptBag& from_resources = index.content(i, ContentMode::resources);
  const ConceptBag& from_children = index.content(i, ContentMode::children);
  out.gap = bag_gap(from_resources, from_children);
  out.size = out.gap.size();
  out.vacuous = c.resources.empty() || c.children.empty();
  std::size_t union_size = bag_union(from_resources, from_children).size();
  out.normalized =
      union_size == 0 ? 0.0
                      : static_cast<double>(out.size) /
                            static_cast<double>(union_size);
  return out;
}

}  // namespace

CategoryGap ideality_gap(const WebDirectory& wd, const CategoryId& id,
                         const SemanticsConfig& cfg) {
  ContentIndex index(wd, cfg);
  return gap_for(index, wd.category_index(id));
}

IdealityReport audit_ideality(const WebDirectory& wd,
                              const SemanticsConfig& cfg) {
  ContentIndex index(wd, cfg);
  IdealityReport report;
  report.epsilon = cfg.epsilon;
  report.gaps.reserve(wd.category_count());
  for (std::size_t i = 0; i < wd.category_count(); ++i) {
    CategoryGap gap = gap_for(index, i);
    if (!gap.vacuous) report.max_gap = std::max(report.max_gap, gap.size);
    report.gaps.push_back(std::move(gap));
  }
  report.ideal = report.max_gap == 0;
  report.realistically_ideal = report.max_gap <= cfg.epsilon;
  return report;
}

bool is_ideal(const WebDirectory& wd, const SemanticsConfig& cfg) {
  return audit_ideality(wd, cfg).ideal;
}

bool is_realistically_ideal(const WebDirectory& wd,
                            const SemanticsConfig& cfg) {
  return audit_ideality(wd, cfg).realistically_ideal;
}

double similarity(const WebDirectory& wd, const CategoryId& a,
                  const CategoryId& b, const SemanticsConfig& cfg) {
  return ContentIndex(wd, cfg).similarity(a, b);
}

double distance(const WebDirectory& wd, const CategoryId& a,
                const CategoryId& b, const SemanticsConfig& cfg) {
  return ContentIndex(wd, cfg).distance(a, b);
}

}  // namespace wdq
