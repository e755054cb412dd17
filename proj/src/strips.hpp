#pragma once

#include <cstdint>
#include <optional>
#include <span>

#include "strip.hpp"
#include "udg.hpp"
#include "widths.hpp"

namespace udgmcp {

enum class strip_variant {
    irrational,  // width sqrt(3)/2
    rational,    // width q/(p-q) from an odd convergent
};

// Horizontal strip system: strip m covers [shift + m*width, shift + (m+1)*width).
struct strip_system {
    double width = strip_width_limit;
    double shift = 0.0;
    std::optional<rational_width> rational;  // engaged for the rational variant

    int index_of(double y) const;
};

strip_system make_strip_system(strip_variant variant, double shift,
                               const std::optional<rational_width>& rw = std::nullopt);

// Number of rounds needed so that best-of-j beats the target count with
// probability 1 - delta. One round lands within (1 + eps) of the expectation
// bound with probability at least eps/3 / (1 + eps/3) by Markov, and
// ln(1 + eps/3) >= 0.3 eps holds for eps <= 0.3, giving the closed form
// j = ceil(ln(1/delta) / (0.3 eps)). The rational variant budgets eps/4
// against its slightly larger width ratio, giving 0.225 eps for eps <= 0.4.
// Outside those eps windows the exact logarithm form is used.
struct round_plan {
    long rounds = 1;
    double eps = 0.0;
    double delta = 0.0;
    strip_variant variant = strip_variant::irrational;
};

round_plan make_round_plan(double eps, double delta, strip_variant variant);

// One shifted-strip pass: group points into strips, solve each strip exactly,
// return the union of the per-strip partitions (global indices, canonical).
clique_partition one_round(const point_set& ps, const strip_system& sys);

struct solve_stats {
    long rounds_executed = 0;
    long best_round = 0;
    double best_shift = 0.0;
};

struct randomized_options {
    double eps = 0.3;
    double delta = 0.1;
    std::uint64_t seed = 0;
    strip_variant variant = strip_variant::irrational;
    std::optional<long> rational_t;       // force a specific odd convergent
    std::optional<long> rounds_override;  // replace the round plan
    int threads = 0;                      // 0: UDGMCP_THREADS env or hardware
};

// Best of j independently shifted rounds; round r draws its shift from the
// stream derived from (seed, r), so the result does not depend on how the
// rounds are scheduled. Ties keep the earliest round.
clique_partition randomized_solve(const point_set& ps, const randomized_options& opt,
                                  solve_stats* stats = nullptr);

// Single pass at shift 0 and width sqrt(3)/2; never worse than 3 times the
// optimum, since a clique meets at most 3 consecutive strips.
clique_partition deterministic_3approx(const point_set& ps);

// Monte Carlo distribution of the number of strips a clique is split into
// under a uniformly shifted system of the given width.
struct split_stats {
    double prob_three = 0.0;  // fraction of shifts splitting into 3 parts
    double mean_parts = 0.0;
    long trials = 0;
};

split_stats split_count_stats(const point_set& ps, std::span<const int> clique, double width,
                              long trials, std::uint64_t seed);

}  // namespace udgmcp
