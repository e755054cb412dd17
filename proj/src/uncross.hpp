#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "geometry.hpp"
#include "udg.hpp"

namespace udgmcp {

convex_polygon hull_of_part(std::span<const int> part, const point_set& ps);

// Sum of hull perimeters over all parts: the potential every uncrossing move
// strictly decreases.
double psi(const clique_partition& cp, const point_set& ps);

// first pair (i, j), i < j, whose hulls overlap with positive area
std::optional<std::pair<int, int>> find_overlapping_pair(const clique_partition& cp,
                                                         const point_set& ps);

// Petal incompatibility structure of two overlapping parts. Blue vertices are
// the petals of the first hull, red the petals of the second; an edge means
// the two petals hold a pair of points more than 1 apart. In the circle
// placement used for crossing tests, blue petal i sits at position 2i and red
// petal j at position 2j+1, matching the petal cycle of the decomposition.
// Points of a part inside the lens (the hull intersection) sit inside both
// hulls, whose diameters are at most 1, so they are within 1 of everything in
// either part and never witness an edge.
struct incompatibility_graph {
    int k = 0;
    std::vector<std::vector<int>> petal_points_p;  // first-part points per blue petal
    std::vector<std::vector<int>> petal_points_q;  // second-part points per red petal
    std::vector<std::pair<int, int>> edges;        // (blue petal, red petal)

    bool blue_isolated(int i) const;
    bool red_isolated(int j) const;
    bool has_isolated_vertex() const;

    // every vertex of degree exactly 1, k odd, and all edges pairwise
    // crossing in the circle placement
    bool is_perfect_crossing_matching() const;
};

incompatibility_graph build_incompatibility_graph(std::span<const int> part_p,
                                                  std::span<const int> part_q, const point_set& ps,
                                                  const petal_decomposition_result& decomp);

struct uncross_move {
    std::vector<int> first;
    std::vector<int> second;
    double psi_delta = 0.0;  // strictly positive decrease of the pair's hull perimeters
    const char* kind = "";
};

// An isolated petal is compatible with everything across the divide, so its
// points join the other part and both hulls can only shrink. Empty petals are
// skipped (moving nothing changes nothing), as are moves that would drain a
// part. Returns the first applicable move, or nullopt.
std::optional<uncross_move> isolated_petal_move(std::span<const int> part_p,
                                                std::span<const int> part_q, const point_set& ps,
                                                const petal_decomposition_result& decomp,
                                                const incompatibility_graph& graph);

// Splits the union of both parts by the line through two opposite boundary
// crossings. The canonical chord runs from the crossing before the first blue
// petal to the one before the opposite petal, which separates every matched
// petal pair when the incompatibility graph is the crossing matching; all k
// rotations of the chord are tried in case floating point spoils the first.
// Points exactly on the line go to the left side. Raises errc::solver when no
// rotation produces two nonempty cliques with a psi decrease.
uncross_move halving_cut_move(std::span<const int> part_p, std::span<const int> part_q,
                              const point_set& ps, const petal_decomposition_result& decomp);

struct uncross_trace {
    std::vector<double> psi_values;  // initial potential, then one value per move
    long moves = 0;
};

// Rewrites overlapping-hull pairs until all hulls are pairwise
// non-overlapping. Part count and the covered point set are preserved and
// every part stays a clique; psi strictly decreases with each move, which is
// what bounds the loop (a generous iteration cap guards against stalls).
clique_partition uncross_partition(const clique_partition& cp, const point_set& ps,
                                   uncross_trace* trace = nullptr);

}  // namespace udgmcp
