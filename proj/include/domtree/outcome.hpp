#pragma once

#include <optional>
#include <stdexcept>
#include <utility>

#include "domtree/ext_weight.hpp"

namespace domtree {

/// Result of a solver: either a feasible solution with finite weight or
/// an explicit infeasible outcome. Solutions whose only realizations
/// have infinite weight are reported infeasible.
template <typename S>
class SolveOutcome {
 public:
  static SolveOutcome feasible(S solution, ExtWeight weight) {
    if (weight.is_infinite())
      throw std::logic_error("feasible outcomes must have finite weight");
    SolveOutcome out;
    out.solution_ = std::move(solution);
    out.weight_ = weight;
    return out;
  }

  static SolveOutcome infeasible() { return SolveOutcome{}; }

  bool is_feasible() const { return solution_.has_value(); }

  const S& solution() const {
    if (!solution_) throw std::logic_error("solution() on infeasible outcome");
    return *solution_;
  }

  /// Finite for feasible outcomes; infinity stands in for infeasible
  /// ones, which makes value comparisons across outcomes uniform.
  ExtWeight weight() const {
    return solution_ ? weight_ : ExtWeight::infinity();
  }

  friend bool operator==(const SolveOutcome&, const SolveOutcome&) = default;

 private:
  std::optional<S> solution_;
  ExtWeight weight_;
};

}  // namespace domtree
