#include "cchp/moea/dominance.hpp"

#include <stdexcept>

namespace cchp::moea {

namespace {

bool componentwise_dominates(const std::vector<double>& a, const std::vector<double>& b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("dominance: dimension mismatch (" +
                                    std::to_string(a.size()) + " vs " +
                                    std::to_string(b.size()) + ")");
    }
    bool strictly_better = false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] > b[i]) {
            return false;
        }
        if (a[i] < b[i]) {
            strictly_better = true;
        }
    }
    return strictly_better;
}

} // namespace

bool pareto_dominates(const ObjectiveVector& a, const ObjectiveVector& b) {
    return componentwise_dominates(a, b);
}

bool violation_dominates(const ViolationVector& a, const ViolationVector& b) {
    return componentwise_dominates(a, b);
}

bool constrained_dominates(const Individual& a, const Individual& b, double feasibility_tol) {
    const bool a_ok = a.feasible(feasibility_tol);
    const bool b_ok = b.feasible(feasibility_tol);
    if (a_ok != b_ok) {
        return a_ok;
    }
    if (!a_ok) {
        return violation_dominates(a.violations, b.violations);
    }
    return pareto_dominates(a.objectives, b.objectives);
}

} // namespace cchp::moea
