#include "uncross.hpp"

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <limits>
#include <sstream>
#include <utility>

#include "errors.hpp"

namespace udgmcp {

namespace {

constexpr double descent_eps = 1e-12;

std::vector<point> gather(std::span<const int> part, const point_set& ps) {
    std::vector<point> pts;
    pts.reserve(part.size());
    for (int v : part) pts.push_back(ps[v]);
    return pts;
}

double part_perimeter(std::span<const int> part, const point_set& ps) {
    return convex_hull(gather(part, ps)).perimeter();
}

double pair_psi(std::span<const int> a, std::span<const int> b, const point_set& ps) {
    return part_perimeter(a, ps) + part_perimeter(b, ps);
}

bool pairwise_clique(std::span<const int> part, const point_set& ps) {
    for (std::size_t i = 0; i < part.size(); ++i)
        for (std::size_t j = i + 1; j < part.size(); ++j)
            if (sqdist(ps[part[i]], ps[part[j]]) > 1.0) return false;
    return true;
}

// petal holding pt: true containment first, nearest petal boundary as the
// fallback for points sitting on a chord within tolerance
int classify_petal(const point& pt, const std::vector<simple_polygon>& petals) {
    for (std::size_t i = 0; i < petals.size(); ++i)
        if (petals[i].contains(pt)) return static_cast<int>(i);
    double best = std::numeric_limits<double>::infinity();
    int arg = -1;
    for (std::size_t i = 0; i < petals.size(); ++i) {
        const auto& b = petals[i].boundary;
        for (std::size_t e = 0; e < b.size(); ++e) {
            double d = point_segment_sqdist(pt, b[e], b[(e + 1) % b.size()]);
            if (d < best) {
                best = d;
                arg = static_cast<int>(i);
            }
        }
    }
    return arg;
}

// Best strictly descending 2-split of the union of two overlapping parts.
// Exhaustive for small unions; line splits plus hull-vertex peels otherwise.
// A peel {union minus p, {p}} always descends when the union is one clique:
// the survivor's hull perimeter is at most the union hull's, the singleton
// contributes none, and the pair's psi before the move exceeds the union
// hull perimeter by the (positive) overlap perimeter.
uncross_move repartition_move(std::span<const int> part_p, std::span<const int> part_q,
                              const point_set& ps) {
    double before = pair_psi(part_p, part_q, ps);
    std::vector<int> all(part_p.begin(), part_p.end());
    all.insert(all.end(), part_q.begin(), part_q.end());
    std::size_t m = all.size();
    std::optional<uncross_move> best;
    auto consider = [&](std::vector<int> a, std::vector<int> b) {
        if (a.empty() || b.empty()) return;
        if (!pairwise_clique(a, ps) || !pairwise_clique(b, ps)) return;
        double after = pair_psi(a, b, ps);
        if (!(after < before - descent_eps)) return;
        if (best && best->psi_delta >= before - after) return;
        uncross_move mv;
        mv.first = std::move(a);
        mv.second = std::move(b);
        mv.psi_delta = before - after;
        mv.kind = "repartition";
        best = std::move(mv);
    };
    if (m <= 16) {
        // lowest element pinned to the first side; mask < full keeps the
        // second side nonempty
        std::uint32_t full = (1u << m) - 1u;
        for (std::uint32_t mask = 1; mask < full; mask += 2) {
            std::vector<int> a, b;
            for (std::size_t t = 0; t < m; ++t)
                ((mask >> t) & 1u ? a : b).push_back(all[t]);
            consider(std::move(a), std::move(b));
        }
    } else {
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) {
                if (i == j) continue;
                const point& a = ps[all[i]];
                const point& b = ps[all[j]];
                std::vector<int> left, right;
                for (int v : all) (orient_sign(a, b, ps[v]) >= 0 ? left : right).push_back(v);
                consider(std::move(left), std::move(right));
            }
        for (std::size_t i = 0; i < m; ++i) {
            std::vector<int> rest;
            rest.reserve(m - 1);
            for (std::size_t j = 0; j < m; ++j)
                if (j != i) rest.push_back(all[j]);
            consider(std::move(rest), std::vector<int>{all[i]});
        }
    }
    if (!best) raise(errc::solver, "no strictly improving repartition of two overlapping parts");
    return *best;
}

// one uncrossing move for a specific overlapping pair
uncross_move apply_pair_move(std::span<const int> part_p, std::span<const int> part_q,
                             const point_set& ps) {
    petal_decomposition_result decomp;
    try {
        decomp = petal_decomposition(hull_of_part(part_p, ps), hull_of_part(part_q, ps));
    } catch (const error& e) {
        // containment and tangential contact have no petal structure; both
        // still admit a direct repartition of the union
        if (e.code() == errc::containment || e.code() == errc::degenerate_geometry)
            return repartition_move(part_p, part_q, ps);
        throw;
    }
    incompatibility_graph graph = build_incompatibility_graph(part_p, part_q, ps, decomp);
    if (auto mv = isolated_petal_move(part_p, part_q, ps, decomp, graph)) return *mv;
    if (!graph.has_isolated_vertex() && !graph.is_perfect_crossing_matching())
        raise(errc::solver,
              "incompatibility graph without isolated vertices is not a crossing matching");
    try {
        return halving_cut_move(part_p, part_q, ps, decomp);
    } catch (const error& e) {
        if (e.code() != errc::solver) throw;
        return repartition_move(part_p, part_q, ps);
    }
}

}  // namespace

convex_polygon hull_of_part(std::span<const int> part, const point_set& ps) {
    return convex_hull(gather(part, ps));
}

double psi(const clique_partition& cp, const point_set& ps) {
    double sum = 0.0;
    for (const auto& part : cp.parts) sum += part_perimeter(part, ps);
    return sum;
}

std::optional<std::pair<int, int>> find_overlapping_pair(const clique_partition& cp,
                                                         const point_set& ps) {
    std::vector<convex_polygon> hulls;
    hulls.reserve(cp.parts.size());
    for (const auto& part : cp.parts) hulls.push_back(hull_of_part(part, ps));
    for (std::size_t i = 0; i < hulls.size(); ++i)
        for (std::size_t j = i + 1; j < hulls.size(); ++j)
            if (overlaps(hulls[i], hulls[j]))
                return std::make_pair(static_cast<int>(i), static_cast<int>(j));
    return std::nullopt;
}

bool incompatibility_graph::blue_isolated(int i) const {
    for (const auto& e : edges)
        if (e.first == i) return false;
    return true;
}

bool incompatibility_graph::red_isolated(int j) const {
    for (const auto& e : edges)
        if (e.second == j) return false;
    return true;
}

bool incompatibility_graph::has_isolated_vertex() const {
    for (int i = 0; i < k; ++i)
        if (blue_isolated(i) || red_isolated(i)) return true;
    return false;
}

bool incompatibility_graph::is_perfect_crossing_matching() const {
    if (k % 2 == 0) return false;
    if (static_cast<int>(edges.size()) != k) return false;
    std::vector<int> deg_blue(k, 0), deg_red(k, 0);
    for (const auto& e : edges) {
        ++deg_blue[e.first];
        ++deg_red[e.second];
    }
    for (int i = 0; i < k; ++i)
        if (deg_blue[i] != 1 || deg_red[i] != 1) return false;
    // chords between petal positions on the 2k-cycle must pairwise cross
    int m = 2 * k;
    auto strictly_between = [m](int a, int b, int x) {
        int d_ab = ((b - a) % m + m) % m;
        int d_ax = ((x - a) % m + m) % m;
        return d_ax > 0 && d_ax < d_ab;
    };
    for (std::size_t e = 0; e < edges.size(); ++e)
        for (std::size_t f = e + 1; f < edges.size(); ++f) {
            int a = 2 * edges[e].first;
            int b = 2 * edges[e].second + 1;
            int c = 2 * edges[f].first;
            int d = 2 * edges[f].second + 1;
            if (strictly_between(a, b, c) == strictly_between(a, b, d)) return false;
        }
    return true;
}

incompatibility_graph build_incompatibility_graph(std::span<const int> part_p,
                                                  std::span<const int> part_q, const point_set& ps,
                                                  const petal_decomposition_result& decomp) {
    incompatibility_graph g;
    g.k = decomp.k;
    g.petal_points_p.resize(decomp.petals_p.size());
    g.petal_points_q.resize(decomp.petals_q.size());
    for (int v : part_p) {
        const point& pt = ps[v];
        // lens points lie in both hulls, so they are within 1 of either
        // part and never witness an incompatibility
        if (decomp.intersection.contains(pt)) continue;
        int i = classify_petal(pt, decomp.petals_p);
        assert(i >= 0);
        g.petal_points_p[i].push_back(v);
    }
    for (int v : part_q) {
        const point& pt = ps[v];
        if (decomp.intersection.contains(pt)) continue;
        int j = classify_petal(pt, decomp.petals_q);
        assert(j >= 0);
        g.petal_points_q[j].push_back(v);
    }
    for (int i = 0; i < g.k; ++i)
        for (int j = 0; j < g.k; ++j) {
            bool incompatible = false;
            for (int u : g.petal_points_p[i]) {
                for (int v : g.petal_points_q[j])
                    if (sqdist(ps[u], ps[v]) > 1.0) {
                        incompatible = true;
                        break;
                    }
                if (incompatible) break;
            }
            if (incompatible) g.edges.emplace_back(i, j);
        }
    return g;
}

std::optional<uncross_move> isolated_petal_move(std::span<const int> part_p,
                                                std::span<const int> part_q, const point_set& ps,
                                                const petal_decomposition_result& decomp,
                                                const incompatibility_graph& graph) {
    (void)decomp;
    double before = pair_psi(part_p, part_q, ps);
    auto attempt = [&](const std::vector<int>& moved, std::span<const int> from,
                       std::span<const int> to, bool from_is_first) -> std::optional<uncross_move> {
        if (moved.empty() || moved.size() == from.size()) return std::nullopt;
        std::vector<int> rest;
        rest.reserve(from.size() - moved.size());
        for (int v : from)
            if (std::find(moved.begin(), moved.end(), v) == moved.end()) rest.push_back(v);
        std::vector<int> grown(to.begin(), to.end());
        grown.insert(grown.end(), moved.begin(), moved.end());
        if (!pairwise_clique(rest, ps) || !pairwise_clique(grown, ps)) return std::nullopt;
        double after = pair_psi(rest, grown, ps);
        if (!(after < before - descent_eps)) return std::nullopt;
        uncross_move mv;
        mv.first = from_is_first ? std::move(rest) : std::move(grown);
        mv.second = from_is_first ? std::move(grown) : std::move(rest);
        mv.psi_delta = before - after;
        mv.kind = "isolated-petal";
        return mv;
    };
    for (int i = 0; i < graph.k; ++i)
        if (graph.blue_isolated(i))
            if (auto mv = attempt(graph.petal_points_p[i], part_p, part_q, true)) return mv;
    for (int j = 0; j < graph.k; ++j)
        if (graph.red_isolated(j))
            if (auto mv = attempt(graph.petal_points_q[j], part_q, part_p, false)) return mv;
    return std::nullopt;
}

uncross_move halving_cut_move(std::span<const int> part_p, std::span<const int> part_q,
                              const point_set& ps, const petal_decomposition_result& decomp) {
    int k = decomp.k;
    double before = pair_psi(part_p, part_q, ps);
    std::vector<int> all(part_p.begin(), part_p.end());
    all.insert(all.end(), part_q.begin(), part_q.end());
    for (int m = 0; m < k; ++m) {
        const point& a = decomp.crossings[static_cast<std::size_t>(m)].pos;
        const point& b = decomp.crossings[static_cast<std::size_t>(m + k)].pos;
        std::vector<int> left, right;
        for (int v : all) (orient_sign(a, b, ps[v]) >= 0 ? left : right).push_back(v);
        if (left.empty() || right.empty()) continue;
        if (!pairwise_clique(left, ps) || !pairwise_clique(right, ps)) continue;
        double after = pair_psi(left, right, ps);
        if (!(after < before - descent_eps)) continue;
        uncross_move mv;
        mv.first = std::move(left);
        mv.second = std::move(right);
        mv.psi_delta = before - after;
        mv.kind = "halving-cut";
        return mv;
    }
    std::ostringstream os;
    os << "halving cut failed for all " << k << " chord rotations on parts of size "
       << part_p.size() << " and " << part_q.size();
    raise(errc::solver, os.str());
}

clique_partition uncross_partition(const clique_partition& cp, const point_set& ps,
                                   uncross_trace* trace) {
    unit_disk_graph g = build_graph(ps);
    partition_report report = validate_partition(g, cp);
    if (!report.valid())
        raise(errc::invalid_argument,
              "uncross input is not a clique partition: " + report.to_string());
    for (const auto& part : cp.parts)
        if (part.empty()) raise(errc::invalid_argument, "uncross input contains an empty part");
    clique_partition work = cp;
    work.canonicalize();
    if (trace) {
        trace->psi_values.clear();
        trace->moves = 0;
        trace->psi_values.push_back(psi(work, ps));
    }
    long cap = 1000 + 10L * static_cast<long>(work.size()) * static_cast<long>(work.size()) *
                          static_cast<long>(ps.n());
    for (long step = 0;; ++step) {
        auto pair = find_overlapping_pair(work, ps);
        if (!pair) break;
        if (step >= cap)
            raise(errc::solver, "uncrossing exceeded its move budget without clearing overlaps");
        uncross_move mv = apply_pair_move(work.parts[pair->first], work.parts[pair->second], ps);
        work.parts[static_cast<std::size_t>(pair->first)] = std::move(mv.first);
        work.parts[static_cast<std::size_t>(pair->second)] = std::move(mv.second);
        if (trace) {
            ++trace->moves;
            trace->psi_values.push_back(psi(work, ps));
        }
    }
    work.canonicalize();
    return work;
}

}  // namespace udgmcp
