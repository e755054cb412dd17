#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "grid.hpp"
#include "strips.hpp"
#include "udg.hpp"
#include "widths.hpp"

namespace udgmcp {

enum class distribution_kind {
    uniform,    // independent uniform points in the box
    clustered,  // ceil(n/5) uniform centers, Gaussian offsets (sigma 0.3)
};

struct instance_spec {
    int n = 0;
    double box_w = 10.0;
    double box_h = 10.0;
    std::uint64_t seed = 0;
    distribution_kind dist = distribution_kind::uniform;
};

// Seeded, reproducible point sets: the same spec always yields the same set.
point_set generate_instance(const instance_spec& spec);

// Point files: UTF-8 text, one point per line as two decimal numbers
// separated by whitespace; '#' starts a comment; blank lines are skipped;
// point index = order among data lines. Coordinates are written with 17
// significant digits, so a write/read round trip is bit-faithful.
point_set parse_points(const std::string& text);
point_set read_points(const std::string& path);
std::string format_points(const point_set& ps);
void write_points(const std::string& path, const point_set& ps);

enum class algorithm_id {
    exact,       // subset dynamic program, oracle-sized instances only
    strips3,     // deterministic shift-0 strips, factor 3
    strips_rand, // best-of-rounds randomized strips
    grid_ptas,   // best-of-rounds randomized k x k grid
};

std::string algorithm_name(algorithm_id id);
algorithm_id parse_algorithm(const std::string& name);

struct experiment_config {
    algorithm_id algo = algorithm_id::strips3;
    double eps = 0.3;
    double delta = 0.1;
    std::uint64_t seed = 0;
    strip_variant variant = strip_variant::irrational;
    std::optional<long> rational_t;       // strips-rand: force a specific odd convergent
    std::optional<long> rounds_override;  // strips-rand / grid-ptas
    std::optional<int> k_override;        // grid-ptas
    cell_solver_kind cell_solver = cell_solver_kind::oracle;
    int oracle_cap = 18;  // exact solves and ratio measurement both honor this
    int threads = 0;
    std::optional<enumerative_caps> enum_caps;  // grid-ptas enumerative solver
};

// Config as a JSON object: {"algorithm": "exact"|"strips3"|"strips-rand"|
// "grid-ptas", "eps", "delta", "seed", "variant": "irrational"|"rational",
// "rational_t", "rounds", "k", "cell_solver": "oracle"|"enum", "oracle_cap",
// "threads"}. Only "algorithm" is required.
experiment_config parse_config_json(const std::string& text);

struct run_result {
    algorithm_id algo = algorithm_id::strips3;
    int n = 0;
    clique_partition partition;
    std::optional<int> optimal;  // exact count when n is within the oracle cap
    std::optional<double> ratio;
    std::uint64_t seed = 0;
    long rounds = 1;
    std::optional<rational_width> width;  // engaged for rational strip widths
    bool sqrt3_width = false;             // strip width sqrt(3)/2 was used
    double elapsed_ms = 0.0;
};

// Dispatches to the named solver, validates the partition it returns, and
// measures the ratio against the exact count when n fits the oracle cap.
// Identical config and points reproduce everything but elapsed_ms.
run_result run_experiment(const point_set& ps, const experiment_config& cfg);

// {"algorithm", "n", "num_cliques", "cliques", "optimal", "ratio", "seed",
// "rounds", "width", "elapsed_ms"}; "cliques" is a list of lists of
// zero-based point indices, absent oracle fields are null, and "width" is
// "sqrt3/2", {"p": ..., "q": ...} as decimal strings of the exact width
// fraction, or null.
std::string run_result_to_json(const run_result& rr);

std::string partition_to_json(const clique_partition& cp);

// Accepts any JSON object with a "cliques" list of lists of zero-based
// indices, including run_result output.
clique_partition parse_partition_json(const std::string& text);

}  // namespace udgmcp
