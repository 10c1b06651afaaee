#ifndef CCHP_MOEA_DOMINANCE_HPP
#define CCHP_MOEA_DOMINANCE_HPP

#include "cchp/moea/types.hpp"

namespace cchp::moea {

// Pareto dominance for minimization: a is no worse everywhere and strictly
// better somewhere. Throws std::invalid_argument on dimension mismatch.
bool pareto_dominates(const ObjectiveVector& a, const ObjectiveVector& b);

// Same order applied to violation magnitudes (smaller is better).
bool violation_dominates(const ViolationVector& a, const ViolationVector& b);

// Constraint domination: feasible beats infeasible; two infeasible compare in
// violation space; two feasible compare in objective space.
bool constrained_dominates(const Individual& a, const Individual& b, double feasibility_tol);

} // namespace cchp::moea

#endif
