#include "cchp/moea/sorting.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "cchp/moea/dominance.hpp"

namespace cchp::moea {

FrontPartition fast_nondominated_sort(Population& pop, double feasibility_tol) {
    FrontPartition partition;
    const std::size_t n = pop.size();
    if (n == 0) {
        return partition;
    }

    std::vector<std::vector<std::size_t>> dominated(n);
    std::vector<std::size_t> domination_count(n, 0);
    std::vector<std::size_t> current;

    for (std::size_t p = 0; p < n; ++p) {
        for (std::size_t q = p + 1; q < n; ++q) {
            if (constrained_dominates(pop[p], pop[q], feasibility_tol)) {
                dominated[p].push_back(q);
                ++domination_count[q];
            } else if (constrained_dominates(pop[q], pop[p], feasibility_tol)) {
                dominated[q].push_back(p);
                ++domination_count[p];
            }
        }
        if (domination_count[p] == 0) {
            current.push_back(p);
        }
    }

    int rank = 0;
    while (!current.empty()) {
        std::vector<std::size_t> next;
        for (std::size_t p : current) {
            pop[p].rank = rank;
            for (std::size_t q : dominated[p]) {
                if (--domination_count[q] == 0) {
                    next.push_back(q);
                }
            }
        }
        std::sort(current.begin(), current.end());
        partition.fronts.push_back(std::move(current));
        current = std::move(next);
        ++rank;
    }
    return partition;
}

std::vector<double> crowding_distances(const Population& pop,
                                       const std::vector<std::size_t>& front) {
    if (front.empty()) {
        throw std::invalid_argument("crowding_distances: empty front");
    }
    const std::size_t m = front.size();
    std::vector<double> distance(m, 0.0);
    if (m <= 2) {
        std::fill(distance.begin(), distance.end(), kInfinity);
        return distance;
    }

    const std::size_t n_obj = pop[front[0]].objectives.size();
    std::vector<std::size_t> order(m);
    for (std::size_t obj = 0; obj < n_obj; ++obj) {
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            return pop[front[a]].objectives[obj] < pop[front[b]].objectives[obj];
        });
        const double lo = pop[front[order.front()]].objectives[obj];
        const double hi = pop[front[order.back()]].objectives[obj];
        const double span = hi - lo;
        distance[order.front()] = kInfinity;
        distance[order.back()] = kInfinity;
        if (span <= 0.0) {
            continue; // degenerate objective adds nothing to interior members
        }
        for (std::size_t k = 1; k + 1 < m; ++k) {
            const double gap = pop[front[order[k + 1]]].objectives[obj] -
                               pop[front[order[k - 1]]].objectives[obj];
            distance[order[k]] += gap / span;
        }
    }
    return distance;
}

std::vector<double> crowding_distances(const Population& front) {
    std::vector<std::size_t> all(front.size());
    std::iota(all.begin(), all.end(), std::size_t{0});
    return crowding_distances(front, all);
}

Population environmental_truncate(Population pop, std::size_t n, double feasibility_tol) {
    if (pop.size() < n) {
        throw std::invalid_argument("environmental_truncate: population smaller than target size");
    }
    const FrontPartition partition = fast_nondominated_sort(pop, feasibility_tol);

    Population selected;
    selected.reserve(n);
    for (const auto& front : partition.fronts) {
        if (selected.size() == n) {
            break;
        }
        const std::vector<double> crowd = crowding_distances(pop, front);
        for (std::size_t k = 0; k < front.size(); ++k) {
            pop[front[k]].crowding = crowd[k];
        }
        const std::size_t remain = n - selected.size();
        if (front.size() <= remain) {
            for (std::size_t idx : front) {
                selected.push_back(pop[idx]);
            }
            continue;
        }
        // Splitting front: one-shot crowding, keep the most spread-out
        // members, ties resolved by lower population index.
        std::vector<std::size_t> order(front.size());
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            if (crowd[a] != crowd[b]) {
                return crowd[a] > crowd[b];
            }
            return front[a] < front[b];
        });
        std::vector<std::size_t> keep(order.begin(), order.begin() + remain);
        std::sort(keep.begin(), keep.end(),
                  [&](std::size_t a, std::size_t b) { return front[a] < front[b]; });
        for (std::size_t k : keep) {
            selected.push_back(pop[front[k]]);
        }
    }
    return selected;
}

} // namespace cchp::moea
