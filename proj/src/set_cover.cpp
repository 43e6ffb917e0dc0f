#include "domtree/set_cover.hpp"

#include <stdexcept>

namespace domtree {

SetCoverInstance::SetCoverInstance(int universe_size) : universe_size_(universe_size) {
  if (universe_size < 0)
    throw std::invalid_argument("universe size must be non-negative");
}

void SetCoverInstance::add_set(VertexSet elements, ExtWeight weight) {
  if (weight.is_infinite())
    throw std::invalid_argument("set weights must be finite");
  elements = normalize_vertex_set(std::move(elements));
  for (int e : elements)
    if (e < 0 || e >= universe_size_)
      throw std::out_of_range("element " + std::to_string(e) + " outside universe");
  sets_.push_back(Set{std::move(elements), weight});
}

CoverReport validate_cover(const SetCoverInstance& inst, const CoverSelection& cover) {
  std::vector<char> covered(static_cast<size_t>(inst.universe_size()), 0);
  ExtWeight total;
  for (int i : cover) {
    if (i < 0 || i >= inst.set_count())
      return CoverReport{false, ExtWeight::zero(),
                         "set index " + std::to_string(i) + " out of range"};
    total += inst.set(i).weight;
    for (int e : inst.set(i).elements) covered[static_cast<size_t>(e)] = 1;
  }
  for (int e = 0; e < inst.universe_size(); ++e)
    if (!covered[static_cast<size_t>(e)])
      return CoverReport{false, total, "element " + std::to_string(e) + " is uncovered"};
  return CoverReport{true, total, ""};
}

}  // namespace domtree
