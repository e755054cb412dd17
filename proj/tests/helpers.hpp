#pragma once

// Shared test utilities. Everything here that restates a library result is
// coded independently of the library path it checks.

#include <algorithm>
#include <functional>
#include <numeric>
#include <vector>

#include "rng.hpp"
#include "udg.hpp"

namespace udgmcp::testing {

inline point_set make_ps(std::initializer_list<double> xy) {
    return point_set::from_coords(std::span<const double>(xy.begin(), xy.size()));
}

inline point_set uniform_points(int n, double w, double h, std::uint64_t seed) {
    splitmix64 rng(seed);
    std::vector<point> pts;
    pts.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        double x = rng.uniform(w);
        double y = rng.uniform(h);
        pts.push_back({x, y, i});
    }
    return point_set(std::move(pts));
}

// Independent exact MCP: enumerate set partitions (each vertex joins an
// existing block or opens a new one), keep clique blocks only, track the
// minimum block count. No subset DP, no memoization.
inline int mcp_by_enumeration(const unit_disk_graph& g) {
    int n = g.n();
    if (n == 0) return 0;
    int best = n;  // singletons always work
    std::vector<std::vector<int>> blocks;
    std::function<void(int)> rec = [&](int v) {
        if (v == n) {
            best = std::min(best, static_cast<int>(blocks.size()));
            return;
        }
        if (static_cast<int>(blocks.size()) >= best) return;
        // index-based: the recursion grows and shrinks blocks, which can move
        // the buffer and would invalidate range-for iterators
        for (std::size_t bi = 0; bi < blocks.size(); ++bi) {
            bool fits = true;
            for (int u : blocks[bi])
                if (!g.adjacent(u, v)) {
                    fits = false;
                    break;
                }
            if (fits) {
                blocks[bi].push_back(v);
                rec(v + 1);
                blocks[bi].pop_back();
            }
        }
        blocks.push_back({v});
        rec(v + 1);
        blocks.pop_back();
    };
    rec(0);
    return best;
}

// Independent hull: gift wrapping from the lexicographically smallest point,
// turning by plain sign-of-cross comparisons with a farthest-point tie rule.
inline std::vector<point> jarvis_hull(std::span<const point> pts) {
    std::vector<point> uniq(pts.begin(), pts.end());
    std::sort(uniq.begin(), uniq.end(), [](const point& a, const point& b) {
        return a.x < b.x || (a.x == b.x && a.y < b.y);
    });
    uniq.erase(std::unique(uniq.begin(), uniq.end(),
                           [](const point& a, const point& b) { return a.x == b.x && a.y == b.y; }),
               uniq.end());
    if (uniq.size() <= 2) return uniq;
    std::vector<point> hull;
    std::size_t start = 0, cur = 0;
    do {
        hull.push_back(uniq[cur]);
        std::size_t cand = (cur + 1) % uniq.size();
        for (std::size_t i = 0; i < uniq.size(); ++i) {
            if (i == cur) continue;
            double turn = orient(uniq[cur], uniq[cand], uniq[i]);
            if (turn < 0.0 ||
                (turn == 0.0 && sqdist(uniq[cur], uniq[i]) > sqdist(uniq[cur], uniq[cand])))
                cand = i;
        }
        cur = cand;
    } while (cur != start && hull.size() <= uniq.size());
    return hull;
}

inline double polygon_perimeter(std::span<const point> cycle) {
    if (cycle.size() < 2) return 0.0;
    if (cycle.size() == 2) return 2.0 * dist(cycle[0], cycle[1]);
    double sum = 0.0;
    for (std::size_t i = 0; i < cycle.size(); ++i)
        sum += dist(cycle[i], cycle[(i + 1) % cycle.size()]);
    return sum;
}

// hull-perimeter potential recomputed from scratch with the jarvis hull
inline double psi_by_jarvis(const clique_partition& cp, const point_set& ps) {
    double sum = 0.0;
    for (const auto& part : cp.parts) {
        std::vector<point> pts;
        for (int v : part) pts.push_back(ps[v]);
        auto hull = jarvis_hull(pts);
        sum += polygon_perimeter(hull);
    }
    return sum;
}

// Valid clique partition with heavily overlapping hulls: shuffle, deal
// round-robin into buckets, then first-fit split each bucket into cliques.
inline clique_partition adversarial_partition(const point_set& ps, int buckets,
                                              std::uint64_t seed) {
    int n = ps.n();
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    splitmix64 rng(seed);
    for (int i = n - 1; i > 0; --i) {
        auto j = static_cast<std::size_t>(rng.below(static_cast<std::uint64_t>(i + 1)));
        std::swap(order[static_cast<std::size_t>(i)], order[j]);
    }
    std::vector<std::vector<int>> bucketed(static_cast<std::size_t>(std::max(1, buckets)));
    for (int i = 0; i < n; ++i)
        bucketed[static_cast<std::size_t>(i % std::max(1, buckets))].push_back(order[static_cast<std::size_t>(i)]);
    clique_partition cp;
    for (const auto& bucket : bucketed) {
        std::vector<std::vector<int>> subparts;
        for (int v : bucket) {
            bool placed = false;
            for (auto& sub : subparts) {
                bool fits = true;
                for (int u : sub)
                    if (sqdist(ps[u], ps[v]) > 1.0) {
                        fits = false;
                        break;
                    }
                if (fits) {
                    sub.push_back(v);
                    placed = true;
                    break;
                }
            }
            if (!placed) subparts.push_back({v});
        }
        for (auto& sub : subparts) cp.parts.push_back(std::move(sub));
    }
    return cp;
}

}  // namespace udgmcp::testing
