#pragma once

#include "udg.hpp"

namespace udgmcp {

// largest strip width for which the label solver below is exact
inline constexpr double strip_width_limit = 0.8660254037844386;  // sqrt(3)/2

// Points inside one horizontal strip [y_base, y_base + width).
struct strip_instance {
    point_set points;
    double width = strip_width_limit;
    double y_base = 0.0;
};

// Exact minimum clique partition inside a strip of width at most sqrt(3)/2.
//
// Order points by (x, y, index) and put i before j ("i precedes j") when i
// comes earlier and their squared distance exceeds 1. Within such a strip,
// non-adjacency forces an x-gap above 1/2, which makes the precedence
// relation transitive; its antichains are exactly the cliques, so labelling
// every point with the length of the longest precedence chain ending at it
// partitions the strip into the minimum number of cliques.
//
// A wider strip still runs, but every label class is checked afterwards and
// a non-clique class raises errc::solver naming the class. Points outside
// the strip raise errc::invalid_argument.
clique_partition solve_strip(const strip_instance& inst);

// true iff the precedence relation of this instance is transitive; widths
// above sqrt(3)/2 admit counterexamples
bool check_transitive(const strip_instance& inst);

}  // namespace udgmcp
