#include "cchp/moea/evolve.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

#include "cchp/moea/dominance.hpp"
#include "cchp/moea/sorting.hpp"

namespace cchp::moea {

void AlgorithmParams::validate() const {
    if (population_size < 4) {
        throw std::invalid_argument("params: population size must be at least 4");
    }
    if (max_generations < 1) {
        throw std::invalid_argument("params: max generations must be positive");
    }
    if (!(scale_factor > 0.0) || scale_factor > 2.0) {
        throw std::invalid_argument("params: scale factor F must lie in (0, 2]");
    }
    if (crossover_rate < 0.0 || crossover_rate > 1.0) {
        throw std::invalid_argument("params: crossover rate CR must lie in [0, 1]");
    }
    if (bounds.lower.size() != bounds.upper.size() || bounds.lower.empty()) {
        throw std::invalid_argument("params: bounds must be non-empty and of equal length");
    }
    for (std::size_t j = 0; j < bounds.lower.size(); ++j) {
        if (!(bounds.lower[j] <= bounds.upper[j])) {
            throw std::invalid_argument("params: lower bound exceeds upper bound at variable " +
                                        std::to_string(j));
        }
    }
    if (feasibility_tol < 0.0) {
        throw std::invalid_argument("params: feasibility tolerance must be non-negative");
    }
}

DecisionVector repair_bounds(DecisionVector v, const Bounds& bounds) {
    for (std::size_t j = 0; j < v.size(); ++j) {
        v[j] = std::clamp(v[j], bounds.lower[j], bounds.upper[j]);
    }
    return v;
}

DecisionVector de_mutant(const DecisionVector& r1, const DecisionVector& r2,
                         const DecisionVector& r3, double f) {
    DecisionVector out(r3.size());
    for (std::size_t j = 0; j < out.size(); ++j) {
        out[j] = r3[j] + f * (r1[j] - r2[j]);
    }
    return out;
}

namespace {

// Three indices, pairwise distinct and distinct from `target`.
std::array<std::size_t, 3> draw_parents(std::size_t pop_size, std::size_t target,
                                        RandomStream& rng) {
    std::array<std::size_t, 3> r{};
    for (std::size_t k = 0; k < 3; ++k) {
        std::size_t candidate;
        bool fresh;
        do {
            candidate = rng.uniform_index(0, pop_size - 1);
            fresh = candidate != target;
            for (std::size_t m = 0; m < k; ++m) {
                fresh = fresh && candidate != r[m];
            }
        } while (!fresh);
        r[k] = candidate;
    }
    return r;
}

Individual evaluate(const Problem& problem, DecisionVector decision) {
    Individual ind;
    ind.decision = std::move(decision);
    problem.evaluate(ind.decision, ind.objectives, ind.violations);
    return ind;
}

Individual evaluate_in_context(const Problem& problem, DecisionVector decision,
                               int generation, std::size_t index) {
    try {
        return evaluate(problem, std::move(decision));
    } catch (const std::exception& e) {
        throw std::runtime_error("evaluation failed at generation " + std::to_string(generation) +
                                 ", individual " + std::to_string(index) + ": " + e.what());
    }
}

Population initial_population(const Problem& problem, const AlgorithmParams& params,
                              RandomStream& rng) {
    const std::size_t dim = params.bounds.size();
    Population pop;
    pop.reserve(static_cast<std::size_t>(params.population_size));
    for (int i = 0; i < params.population_size; ++i) {
        DecisionVector x(dim);
        for (std::size_t j = 0; j < dim; ++j) {
            x[j] = rng.uniform01() * (params.bounds.upper[j] - params.bounds.lower[j]) +
                   params.bounds.lower[j];
        }
        pop.push_back(evaluate_in_context(problem, std::move(x), 0, static_cast<std::size_t>(i)));
    }
    return pop;
}

// Tournament order: lower rank, then larger crowding, then lower index.
bool tournament_before(const Population& pop, std::size_t a, std::size_t b) {
    if (pop[a].rank != pop[b].rank) {
        return pop[a].rank < pop[b].rank;
    }
    if (pop[a].crowding != pop[b].crowding) {
        return pop[a].crowding > pop[b].crowding;
    }
    return a < b;
}

void annotate(Population& pop, double feasibility_tol) {
    const FrontPartition partition = fast_nondominated_sort(pop, feasibility_tol);
    for (const auto& front : partition.fronts) {
        const std::vector<double> crowd = crowding_distances(pop, front);
        for (std::size_t k = 0; k < front.size(); ++k) {
            pop[front[k]].crowding = crowd[k];
        }
    }
}

} // namespace

DecisionVector de_mutation(const Population& pop, std::size_t target, double f,
                           RandomStream& rng) {
    if (pop.size() < 4) {
        throw std::invalid_argument("de_mutation: population must hold at least 4 members");
    }
    if (target >= pop.size()) {
        throw std::invalid_argument("de_mutation: target index out of range");
    }
    const auto r = draw_parents(pop.size(), target, rng);
    return de_mutant(pop[r[0]].decision, pop[r[1]].decision, pop[r[2]].decision, f);
}

DecisionVector de_crossover(const DecisionVector& target, const DecisionVector& mutant,
                            double cr, RandomStream& rng) {
    if (target.size() != mutant.size()) {
        throw std::invalid_argument("de_crossover: vector length mismatch");
    }
    const std::size_t dim = target.size();
    const std::size_t forced = rng.uniform_index(0, dim - 1);
    DecisionVector child(dim);
    for (std::size_t j = 0; j < dim; ++j) {
        const bool take_mutant = rng.uniform01() < cr || j == forced;
        child[j] = take_mutant ? mutant[j] : target[j];
    }
    return child;
}

SelectionOutcome gde3_survivor(const Individual& parent, const Individual& trial,
                               double feasibility_tol) {
    const bool parent_ok = parent.feasible(feasibility_tol);
    const bool trial_ok = trial.feasible(feasibility_tol);
    if (!parent_ok && !trial_ok) {
        return violation_dominates(parent.violations, trial.violations)
                   ? SelectionOutcome::ParentOnly
                   : SelectionOutcome::TrialOnly;
    }
    if (parent_ok != trial_ok) {
        return parent_ok ? SelectionOutcome::ParentOnly : SelectionOutcome::TrialOnly;
    }
    if (pareto_dominates(parent.objectives, trial.objectives)) {
        return SelectionOutcome::ParentOnly;
    }
    if (pareto_dominates(trial.objectives, parent.objectives)) {
        return SelectionOutcome::TrialOnly;
    }
    return SelectionOutcome::Both;
}

std::size_t best_compromise_index(const Population& front, bool normalized) {
    if (front.empty()) {
        throw std::invalid_argument("best_compromise: empty front");
    }
    const std::size_t n_obj = front[0].objectives.size();

    std::vector<double> lo(n_obj, kInfinity), hi(n_obj, -kInfinity);
    if (normalized) {
        for (const Individual& ind : front) {
            for (std::size_t j = 0; j < n_obj; ++j) {
                lo[j] = std::min(lo[j], ind.objectives[j]);
                hi[j] = std::max(hi[j], ind.objectives[j]);
            }
        }
    }

    std::size_t best = 0;
    double best_dist = kInfinity;
    for (std::size_t i = 0; i < front.size(); ++i) {
        double sq = 0.0;
        for (std::size_t j = 0; j < n_obj; ++j) {
            double v = front[i].objectives[j];
            if (normalized) {
                const double span = hi[j] - lo[j];
                v = span > 0.0 ? (v - lo[j]) / span : 0.0;
            }
            sq += v * v;
        }
        const double dist = std::sqrt(sq);
        if (dist < best_dist) {
            best_dist = dist;
            best = i;
        }
    }
    return best;
}

const Individual& best_compromise(const Population& front, bool normalized) {
    return front[best_compromise_index(front, normalized)];
}

Population evolve(const Problem& problem, const AlgorithmParams& params,
                  const GenerationObserver& observer) {
    params.validate();
    RandomStream rng(params.seed);
    const std::size_t n = static_cast<std::size_t>(params.population_size);

    Population pop = initial_population(problem, params, rng);
    annotate(pop, params.feasibility_tol);
    if (observer) {
        observer(0, pop);
    }

    Population pool;
    pool.reserve(2 * n);
    for (int gen = 1; gen <= params.max_generations; ++gen) {
        pool.clear();
        for (std::size_t i = 0; i < n; ++i) {
            DecisionVector mutant = repair_bounds(
                de_mutation(pop, i, params.scale_factor, rng), params.bounds);
            DecisionVector trial_x =
                de_crossover(pop[i].decision, mutant, params.crossover_rate, rng);
            Individual trial = evaluate_in_context(problem, std::move(trial_x), gen, i);
            switch (gde3_survivor(pop[i], trial, params.feasibility_tol)) {
            case SelectionOutcome::ParentOnly:
                pool.push_back(pop[i]);
                break;
            case SelectionOutcome::TrialOnly:
                pool.push_back(std::move(trial));
                break;
            case SelectionOutcome::Both:
                pool.push_back(pop[i]);
                pool.push_back(std::move(trial));
                break;
            }
        }
        pop = environmental_truncate(std::move(pool), n, params.feasibility_tol);
        pool.reserve(2 * n);
        if (observer) {
            observer(gen, pop);
        }
    }
    return pop;
}

Population nsga2_evolve(const Problem& problem, const AlgorithmParams& params,
                        const GenerationObserver& observer) {
    params.validate();
    RandomStream rng(params.seed);
    const std::size_t n = static_cast<std::size_t>(params.population_size);

    Population pop = initial_population(problem, params, rng);
    annotate(pop, params.feasibility_tol);
    if (observer) {
        observer(0, pop);
    }

    for (int gen = 1; gen <= params.max_generations; ++gen) {
        Population combined = pop;
        combined.reserve(2 * n);
        for (std::size_t i = 0; i < n; ++i) {
            const std::size_t a = rng.uniform_index(0, n - 1);
            const std::size_t b = rng.uniform_index(0, n - 1);
            const std::size_t target = tournament_before(pop, a, b) ? a : b;
            DecisionVector mutant = repair_bounds(
                de_mutation(pop, target, params.scale_factor, rng), params.bounds);
            DecisionVector child_x =
                de_crossover(pop[target].decision, mutant, params.crossover_rate, rng);
            combined.push_back(evaluate_in_context(problem, std::move(child_x), gen, i));
        }
        pop = environmental_truncate(std::move(combined), n, params.feasibility_tol);
        if (observer) {
            observer(gen, pop);
        }
    }
    return pop;
}

} // namespace cchp::moea
