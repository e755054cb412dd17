#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>

#include "strips.hpp"
#include "udg.hpp"

namespace udgmcp {

// Axis-aligned k x k grid with a two-dimensional shift in [0, k)^2.
struct grid_system {
    int k = 1;
    double sx = 0.0;
    double sy = 0.0;

    std::pair<long, long> cell_of(const point& p) const;
};

// Upper bound on the optimal clique count inside one k x k cell: the cell is
// covered by ceil(k*sqrt(2))^2 <= 2k^2 + 3k squares of side 1/sqrt(2), and
// every such square has diameter 1, hence holds a clique.
int cell_qmax(int k);

// One candidate solution shape for a cell: q representatives, the proximity
// edges between representatives at distance <= 2, and per edge an ordered pair
// of cell points whose directed line separates the two parts.
struct cell_guess {
    int q = 0;
    std::vector<int> reps;                            // distinct cell point indices
    std::vector<std::pair<int, int>> proximity_edges; // index pairs into reps, i < j
    std::vector<std::pair<int, int>> separators;      // one ordered point pair per edge
};

// Validates a guess against the cell: part i may take points within distance
// 1 of representative i that sit on the representative's closed side of every
// separator for the edges at i (points exactly on a separating line are
// compatible with both sides, and a representative on the line constrains
// nothing). The guess is valid iff those candidate sets admit an assignment
// into disjoint cliques covering the whole cell; the witness partition is
// returned, or nullopt when none exists. Points near one representative and
// far from a non-adjacent one can never cross over, by the triangle
// inequality, so pruning non-edges needs no extra work.
std::optional<clique_partition> check_guess(const point_set& cell, const cell_guess& guess);

// Exhaustive guess-and-check for tiny cells: ascending q, then lexicographic
// representative tuples, then lexicographic separator assignments; the first
// valid guess wins, which makes the result exact. Blows up quickly -- the
// caps keep it at toy scale.
struct enumerative_caps {
    int max_n = 10;
    int max_q = 3;
};

std::optional<clique_partition> enumerative_cell_solve(const point_set& cell, int q_limit,
                                                       const enumerative_caps& caps = {});

enum class cell_solver_kind {
    oracle,       // exact subset dynamic program per cell
    enumerative,  // guess-and-check per cell
};

struct ptas_options {
    double eps = 0.5;
    double delta = 0.5;
    std::uint64_t seed = 0;
    std::optional<int> k_override;  // replaces k = ceil(16/eps)
    cell_solver_kind cell_solver = cell_solver_kind::oracle;
    std::optional<long> rounds_override;
    int oracle_cap = 18;
    enumerative_caps enum_caps;
};

// Randomly shifted grid with an exact solve per cell, best of O(ln(1/delta))
// rounds. A clique crosses a grid line in either direction with probability
// at most 2/k, so with k = ceil(16/eps) one round exceeds (1+eps) times the
// optimum with probability at most 3/8 by Markov; rounds are sized against
// that bound. A k override keeps the machinery runnable at toy sizes where
// the (1+eps) guarantee is not claimed.
clique_partition ptas_solve(const point_set& ps, const ptas_options& opt,
                            solve_stats* stats = nullptr);

struct cut_stats {
    double cut_probability = 0.0;        // clique meets more than one cell
    double both_axes_probability = 0.0;  // cut by a vertical and a horizontal line
    long trials = 0;
};

// Monte Carlo estimate over uniform shifts in [0, k)^2.
cut_stats clique_cut_probability(const point_set& ps, std::span<const int> clique, int k,
                                 long trials, std::uint64_t seed);

}  // namespace udgmcp
