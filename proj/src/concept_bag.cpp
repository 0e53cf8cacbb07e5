#include "wdq/concept_bag.hpp"

#include <algorithm>
#include <sstream>

namespace wdq {

ConceptBag::ConceptBag(std::initializer_list<std::string> terms) {
  for (const auto& t : terms) add(t);
}

ConceptBag ConceptBag::from_terms(const std::vector<std::string>& terms) {
  ConceptBag bag;
  for (const auto& t : terms) bag.add(t);
  return bag;
}

void ConceptBag::add(const std::string& term, std::size_t count) {
  if (count == 0) return;
  counts_[term] += count;
  total_ += count;
}

std::size_t ConceptBag::count(const std::string& term) const {
  auto it = counts_.find(term);
  return it == counts_.end() ? 0 : it->second;
}

std::vector<std::string> ConceptBag::to_terms() const {
  std::vector<std::string> out;
  out.reserve(total_);
  for (const auto& [term, n] : counts_)
    for (std::size_t i = 0; i < n; ++i) out.push_back(term);
  return out;
}

std::string ConceptBag::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const auto& [term, n] : counts_) {
    if (!first) os << ", ";
    first = false;
    os << term;
    if (n > 1) os << ':' << n;
  }
  os << '}';
  return os.str();
}

ConceptBag bag_union(const ConceptBag& a, const ConceptBag& b) {
  ConceptBag out = a;
  for (const auto& [term, n] : b.counts()) out.add(term, n);
  return out;
}

ConceptBag bag_difference(const ConceptBag& a, const ConceptBag& b) {
  ConceptBag out;
  for (const auto& [term, n] : a.counts()) {
    std::size_t sub = b.count(term);
    if (n > sub) out.add(term, n - sub);
  }
  return out;
}

ConceptBag bag_gap(const ConceptBag& a, const ConceptBag& b) {
  return bag_union(bag_difference(a, b), bag_difference(b, a));
}

double bag_jaccard(const ConceptBag& a, const ConceptBag& b) {
  if (a.empty() && b.empty()) return 1.0;
  std::size_t min_sum = 0;
  std::size_t max_sum = 0;
  auto ia = a.counts().begin();
  auto ib = b.counts().begin();
  while (ia != a.counts().end() || ib != b.counts().end()) {
    if (ib == b.counts().end() ||
        (ia != a.counts().end() && ia->first < ib->first)) {
      max_sum += ia->second;
      ++ia;
    } else if (ia == a.counts().end() || ib->first < ia->first) {
      max_sum += ib->second;
      ++ib;
    } else {
      min_sum += std::min(ia->second, ib->second);
      max_sum += std::max(ia->second, ib->second);
      ++ia;
      ++ib;
    }
  }
  return static_cast<double>(min_sum) / static_cast<double>(max_sum);
}

}  // namespace wdq
