#ifndef CCHP_MOEA_SORTING_HPP
#define CCHP_MOEA_SORTING_HPP

#include "cchp/moea/types.hpp"

namespace cchp::moea {

// Fast non-dominated sorting under constraint domination. Writes ranks back
// to the individuals. Empty population yields an empty partition.
FrontPartition fast_nondominated_sort(Population& pop, double feasibility_tol);

// Crowding distances for the members listed in `front`, aligned with the
// order of `front`. Boundary members of each objective get +infinity;
// interior members accumulate normalized neighbor gaps. An objective with
// zero span contributes nothing.
std::vector<double> crowding_distances(const Population& pop,
                                       const std::vector<std::size_t>& front);

// Convenience overload treating the whole population as one front.
std::vector<double> crowding_distances(const Population& front);

// Reduce a population to exactly n members: whole fronts while they fit, the
// splitting front cut by descending crowding distance computed once (ties
// broken by lower population index). Ranks and crowding are written on the
// survivors. Throws std::invalid_argument if pop has fewer than n members.
Population environmental_truncate(Population pop, std::size_t n, double feasibility_tol);

} // namespace cchp::moea

#endif
