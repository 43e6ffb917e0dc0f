#pragma once

#include <string>
#include <vector>

#include "domtree/ext_weight.hpp"
#include "domtree/graph.hpp"

namespace domtree {

/// Weighted set cover instance: elements 0..universe_size-1 and an
/// ordered list of element sets with finite non-negative weights.
class SetCoverInstance {
 public:
  struct Set {
    VertexSet elements;  // sorted element indices
    ExtWeight weight;
    friend bool operator==(const Set&, const Set&) = default;
  };

  SetCoverInstance() = default;
  explicit SetCoverInstance(int universe_size);

  /// Rejects infinite weights and out-of-range elements. Empty sets are
  /// allowed.
  void add_set(VertexSet elements, ExtWeight weight);

  int universe_size() const { return universe_size_; }
  int set_count() const { return static_cast<int>(sets_.size()); }
  const Set& set(int i) const { return sets_.at(static_cast<size_t>(i)); }
  const std::vector<Set>& sets() const { return sets_; }

  friend bool operator==(const SetCoverInstance&, const SetCoverInstance&) = default;

 private:
  int universe_size_ = 0;
  std::vector<Set> sets_;
};

/// Sorted, duplicate-free set indices.
using CoverSelection = std::vector<int>;

struct CoverReport {
  bool ok = false;
  ExtWeight weight;
  std::string detail;  // names the first uncovered element on failure
};

/// Checks that the selected sets cover the universe and recomputes the
/// total weight.
CoverReport validate_cover(const SetCoverInstance& inst, const CoverSelection& cover);

}  // namespace domtree
