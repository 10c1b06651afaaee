#ifndef CCHP_MOEA_EVOLVE_HPP
#define CCHP_MOEA_EVOLVE_HPP

#include <functional>

#include "cchp/moea/random.hpp"
#include "cchp/moea/types.hpp"

namespace cchp::moea {

// Component-wise clamp into [lower, upper].
DecisionVector repair_bounds(DecisionVector v, const Bounds& bounds);

// Difference-vector arithmetic of the mutation step: r3 + f * (r1 - r2).
// No bound repair is applied here.
DecisionVector de_mutant(const DecisionVector& r1, const DecisionVector& r2,
                         const DecisionVector& r3, double f);

// Draws three members distinct from each other and from `target`, then forms
// the mutant. Requires a population of at least four. Result is not repaired.
DecisionVector de_mutation(const Population& pop, std::size_t target, double f,
                           RandomStream& rng);

// Binomial crossover: gene j comes from the mutant iff rand_j < cr or
// j == j_rand, so at least one mutant gene always survives.
DecisionVector de_crossover(const DecisionVector& target, const DecisionVector& mutant,
                            double cr, RandomStream& rng);

// GDE3 pairwise survival rule. Infeasible pairs compare in violation space
// (ties keep the trial); mixed pairs keep the feasible one; feasible pairs
// keep the dominator, or both when mutually non-dominated.
SelectionOutcome gde3_survivor(const Individual& parent, const Individual& trial,
                               double feasibility_tol);

// Index of the front member closest to the origin in objective space.
// With `normalized`, objectives are min-max scaled over the front first.
// Ties resolve to the lowest index. Throws on an empty front; members are
// expected to be feasible.
std::size_t best_compromise_index(const Population& front, bool normalized = false);
const Individual& best_compromise(const Population& front, bool normalized = false);

// Invoked after every environmental selection with the generation counter
// (0 = initial population) and the current population of size N.
using GenerationObserver = std::function<void(int, const Population&)>;

// Constrained multi-objective differential evolution (GDE3 scheme): each
// parent breeds one trial, the pairwise rule fills an offspring pool of N to
// 2N, and non-dominated truncation brings it back to N. Deterministic for a
// given seed.
Population evolve(const Problem& problem, const AlgorithmParams& params,
                  const GenerationObserver& observer = {});

// Generational NSGA-II baseline sharing the DE variation operators and the
// constraint-domination machinery: binary tournament on (rank, crowding)
// picks the crossover target, parents and offspring merge, truncation keeps N.
Population nsga2_evolve(const Problem& problem, const AlgorithmParams& params,
                        const GenerationObserver& observer = {});

} // namespace cchp::moea

#endif
