#ifndef CCHP_MOEA_TYPES_HPP
#define CCHP_MOEA_TYPES_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <vector>

namespace cchp::moea {

using DecisionVector = std::vector<double>;
using ObjectiveVector = std::vector<double>;
using ViolationVector = std::vector<double>;

constexpr double kInfinity = std::numeric_limits<double>::infinity();

// One candidate solution together with its evaluation and the sorting
// annotations written by the environmental-selection machinery.
struct Individual {
    DecisionVector decision;
    ObjectiveVector objectives;
    ViolationVector violations;
    int rank = 0;
    double crowding = 0.0;

    bool feasible(double tol) const {
        for (double v : violations) {
            if (v > tol) {
                return false;
            }
        }
        return true;
    }
};

using Population = std::vector<Individual>;

struct Bounds {
    std::vector<double> lower;
    std::vector<double> upper;

    std::size_t size() const { return lower.size(); }
};

struct AlgorithmParams {
    int population_size = 100;
    int max_generations = 250;
    double scale_factor = 0.5;   // F
    double crossover_rate = 0.5; // CR
    std::uint64_t seed = 1;
    Bounds bounds;
    // A violation component at or below this magnitude counts as satisfied.
    double feasibility_tol = 1e-6;

    void validate() const; // throws std::invalid_argument
};

// Non-dominated fronts as index sets over a population, best front first.
// Indices within a front are ascending.
struct FrontPartition {
    std::vector<std::vector<std::size_t>> fronts;
};

enum class SelectionOutcome { ParentOnly, TrialOnly, Both };

// A problem evaluates a decision vector into objective values (minimized)
// and non-negative constraint-violation magnitudes. Evaluation must be pure
// and total over the bound box.
struct Problem {
    std::size_t n_objectives = 0;
    std::size_t n_constraints = 0;
    std::function<void(const DecisionVector&, ObjectiveVector&, ViolationVector&)> evaluate;
};

} // namespace cchp::moea

#endif
