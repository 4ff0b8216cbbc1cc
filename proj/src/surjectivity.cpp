#include "treepack/surjectivity.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <random>
#include <string>

namespace treepack {

namespace {

// Tomita-style max clique: branch and bound with a greedy coloring bound.
struct CliqueSolver {
    const std::vector<std::uint64_t>& adj;
    std::uint64_t best_set = 0;
    int best = 0;

    void expand(std::uint64_t cand, std::uint64_t cur, int cur_size) {
        if (cand == 0) {
            if (cur_size > best) {
                best = cur_size;
                best_set = cur;
            }
            return;
        }

        // color classes are independent sets; a clique meets each at most once
        int color[64];
        int order[64];
        int count = 0;
        std::uint64_t uncolored = cand;
        int colors = 0;
        while (uncolored) {
            ++colors;
            std::uint64_t avail = uncolored;
            while (avail) {
                int v = std::countr_zero(avail);
                color[v] = colors;
                order[count++] = v;
                uncolored &= ~(1ULL << v);
                avail &= ~(1ULL << v);
                avail &= ~adj[v];
            }
        }

        for (int i = count - 1; i >= 0; --i) {
            int v = order[i];
            if (cur_size + color[v] <= best) return;
            std::uint64_t bit = 1ULL << v;
            if (cur_size + 1 > best) {
                best = cur_size + 1;
                best_set = cur | bit;
            }
            expand(cand & adj[v], cur | bit, cur_size + 1);
            cand &= ~bit;
        }
    }
};

// Adjacency bitmasks of the distance-t graph, plus the mask of vertices
// allowed in an avoiding set under the convention.
std::pair<std::vector<std::uint64_t>, std::uint64_t>
distance_graph(const DistanceSpace& space, Distance t, Convention convention) {
    const int n = space.size();
    std::vector<std::uint64_t> adj(n, 0);
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (space.distance(a, b) == t) {
                adj[a] |= 1ULL << b;
                adj[b] |= 1ULL << a;
            }
    std::uint64_t eligible =
        n == 64 ? ~0ULL : ((1ULL << n) - 1);
    if (convention == Convention::Diagonal)
        for (int a = 0; a < n; ++a)
            if (space.distance(a, a) == t) eligible &= ~(1ULL << a);
    return {std::move(adj), eligible};
}

std::vector<int> bits_to_list(std::uint64_t mask) {
    std::vector<int> out;
    while (mask) {
        int v = std::countr_zero(mask);
        out.push_back(v);
        mask &= mask - 1;
    }
    return out;
}

void check_cap(const DistanceSpace& space, int cap) {
    if (space.size() > cap)
        throw BudgetError("exact surjectivity solver: space has " +
                          std::to_string(space.size()) +
                          " points, above the exact cap " + std::to_string(cap) +
                          "; use estimate_k instead");
    if (space.size() > 64)
        throw BudgetError("exact surjectivity solver: cap cannot exceed 64");
}

} // namespace

std::vector<int> max_independent_set(const std::vector<std::uint64_t>& adjacency) {
    const int n = static_cast<int>(adjacency.size());
    if (n == 0) return {};
    std::uint64_t full = n == 64 ? ~0ULL : ((1ULL << n) - 1);
    // independent sets are cliques of the complement
    std::vector<std::uint64_t> cadj(n);
    for (int v = 0; v < n; ++v) cadj[v] = ~adjacency[v] & full & ~(1ULL << v);
    CliqueSolver solver{cadj};
    solver.expand(full, 0, 0);
    return bits_to_list(solver.best_set);
}

std::vector<PointId> max_distance_avoiding_set(const DistanceSpace& space,
                                               Distance t, Convention convention,
                                               int cap) {
    check_cap(space, cap);
    auto [adj, eligible] = distance_graph(space, t, convention);
    const int n = space.size();
    std::uint64_t full = n == 64 ? ~0ULL : ((1ULL << n) - 1);
    std::vector<std::uint64_t> cadj(n);
    for (int v = 0; v < n; ++v) cadj[v] = ~adj[v] & full & ~(1ULL << v);
    CliqueSolver solver{cadj};
    solver.expand(eligible, 0, 0);
    return bits_to_list(solver.best_set);
}

SurjectivityReport exact_k(const DistanceSpace& space, Convention convention,
                           int cap) {
    check_cap(space, cap);
    SurjectivityReport report;
    report.method = SurjectivityReport::Method::Exact;
    report.convention = convention;
    long long max_alpha = 0;
    for (Distance t : space.alphabet()) {
        auto witness = max_distance_avoiding_set(space, t, convention, cap);
        DistanceStat stat{t, static_cast<int>(witness.size()), witness};
        max_alpha = std::max(max_alpha, static_cast<long long>(stat.alpha));
        report.per_distance.push_back(std::move(stat));
    }
    report.exact_k = 1 + max_alpha;
    return report;
}

SurjectivityReport estimate_k(const DistanceSpace& space, int trials,
                              unsigned long long seed, Convention convention) {
    const int n = space.size();
    SurjectivityReport report;
    report.method = SurjectivityReport::Method::Randomized;
    report.convention = convention;
    std::mt19937_64 rng(seed);

    long long best_overall = 0;
    for (Distance t : space.alphabet()) {
        std::vector<std::vector<int>> adj(n);
        std::vector<char> eligible(n, 1);
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                if (space.distance(a, b) == t) {
                    adj[a].push_back(b);
                    adj[b].push_back(a);
                }
        if (convention == Convention::Diagonal)
            for (int a = 0; a < n; ++a)
                if (space.distance(a, a) == t) eligible[a] = 0;

        int best_t = 0;
        std::vector<PointId> best_set;
        for (int trial = 0; trial < trials; ++trial) {
            // greedy deletion: drop a random max-degree vertex until no
            // conflicting pair remains
            std::vector<char> alive = eligible;
            std::vector<int> degree(n, 0);
            int count = 0;
            for (int v = 0; v < n; ++v)
                if (alive[v]) ++count;
            for (int v = 0; v < n; ++v)
                if (alive[v])
                    for (int u : adj[v])
                        if (alive[u]) ++degree[v];
            while (true) {
                int max_deg = 0;
                for (int v = 0; v < n; ++v)
                    if (alive[v]) max_deg = std::max(max_deg, degree[v]);
                if (max_deg == 0) break;
                std::vector<int> worst;
                for (int v = 0; v < n; ++v)
                    if (alive[v] && degree[v] == max_deg) worst.push_back(v);
                int victim =
                    worst[std::uniform_int_distribution<size_t>(
                        0, worst.size() - 1)(rng)];
                alive[victim] = 0;
                --count;
                for (int u : adj[victim])
                    if (alive[u]) --degree[u];
            }
            if (count > best_t) {
                best_t = count;
                best_set.clear();
                for (int v = 0; v < n; ++v)
                    if (alive[v]) best_set.push_back(v);
            }
        }
        best_overall = std::max(best_overall, static_cast<long long>(best_t));
        report.per_distance.push_back({t, best_t, std::move(best_set)});
    }
    report.lower_bound_k = 1 + best_overall;
    return report;
}

std::vector<IrRow> ir_threshold_table(const std::vector<int>& qs,
                                      const std::vector<int>& dims, int exact_cap,
                                      int trials, unsigned long long seed,
                                      long long point_cap) {
    std::vector<IrRow> rows;
    for (int q : qs)
        for (int dim : dims) {
            auto space = DistanceSpace::finite_field(q, dim, point_cap);
            long long k;
            bool exact;
            if (space.size() <= exact_cap) {
                k = *exact_k(space, Convention::DistinctPair, exact_cap).exact_k;
                exact = true;
            } else {
                k = *estimate_k(space, trials, seed).lower_bound_k;
                exact = false;
            }
            double q_pow = std::pow(static_cast<double>(q), (dim + 1) / 2.0);
            rows.push_back({q, dim, k, exact, q_pow, k / q_pow});
        }
    return rows;
}

} // namespace treepack
