#pragma once

#include <cstddef>
#include <vector>

#include "nlsup/set_ops.hpp"

namespace nlsup::cartesian {

// Family of maximal base sets A with A x A contained in E. Bases and their
// points are kept in lexicographic order so enumeration is reproducible.
struct CartesianFamily {
  int m = 1;
  std::vector<std::vector<setcore::Point>> bases;
};

// Maximum number of diagonal candidate vertices accepted for grid inputs.
inline constexpr std::size_t kMaxCliqueVertices = 4096;

// Enumerates the maximal Cartesian subsets of a finite or grid set: vertices
// are the diagonal points of E, neighbours are pairs whose four combinations
// lie in E, and bases are the maximal cliques (pivoting Bron–Kerbosch,
// deterministic lexicographic order). Singleton bases are reported.
CartesianFamily maximal_cartesian(const setcore::SetHandle& e);

// Union of A x A over the family; equals hat(E) and is returned in the same
// representation as the input (finite or grid).
setcore::SetHandle hat_via_cliques(const setcore::SetHandle& e);

// True iff hat(E) is nonempty, i.e. some function with values in E exists.
bool inclusion_feasible(const setcore::SetHandle& e);

}  // namespace nlsup::cartesian
