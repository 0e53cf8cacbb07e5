#pragma once

#include <cstddef>
#include <initializer_list>
#include <map>
#include <string>
#include <vector>

namespace wdq {

/// A finite multiset of concept terms. Terms map to multiplicities >= 1;
/// a term that is absent has multiplicity zero.
class ConceptBag {
 public:
  ConceptBag() = default;

  /// Builds a bag from a term list; duplicates accumulate multiplicity.
  ConceptBag(std::initializer_list<std::string> terms);
  static ConceptBag from_terms(const std::vector<std::string>& terms);

  void add(const std::string& term, std::size_t count = 1);

  std::size_t count(const std::string& term) const;
  bool contains(const std::string& term) const { return count(term) > 0; }

  /// Sum of all multiplicities.
  std::size_t size() const { return total_; }
  bool empty() const { return total_ == 0; }
  std::size_t distinct() const { return counts_.size(); }

  const std::map<std::string, std::size_t>& counts() const { return counts_; }

  /// Sorted term list with each term repeated per its multiplicity.
  std::vector<std::string> to_terms() const;

  std::string to_string() const;

  bool operator==(const ConceptBag& other) const {
    return counts_ == other.counts_;
  }
  bool operator!=(const ConceptBag& other) const { return !(*this == other); }

 private:
  std::map<std::string, std::size_t> counts_;
  std::size_t total_ = 0;
};

/// Multiset sum: each term's multiplicity is a's plus b's.
ConceptBag bag_union(const ConceptBag& a, const ConceptBag& b);

/// Truncated multiset difference: per-term max(a - b, 0).
ConceptBag bag_difference(const ConceptBag& a, const ConceptBag& b);

/// Multiset symmetric difference: (a - b) + (b - a). Empty iff a == b.
ConceptBag bag_gap(const ConceptBag& a, const ConceptBag& b);

/// Multiset Jaccard similarity: sum of per-term min multiplicities over sum
/// of per-term max multiplicities, in [0, 1]. Two empty bags compare as 1.
double bag_jaccard(const ConceptBag& a, const ConceptBag& b);

}  // namespace wdq
