#pragma once

#include "udg.hpp"

namespace udgmcp {

// Hard roof on the exact solver; the 2^n memo tables stop being reasonable
// beyond this point regardless of what cap the caller asks for.
inline constexpr int exact_mcp_hard_limit = 24;

// Minimum clique partition by dynamic programming over vertex subsets:
// f(empty) = 0 and f(S) = 1 + min over clique subsets T of S that contain
// the lowest-indexed vertex of S, of f(S \ T). Anchoring T at the lowest
// vertex makes each partition of S count once. Exponential but exact; the
// default cap of 18 keeps the worst case around a second.
//
// Raises errc::capacity when n exceeds the cap.
clique_partition exact_mcp(const unit_disk_graph& g, int max_n = 18);
int exact_mcp_count(const unit_disk_graph& g, int max_n = 18);

}  // namespace udgmcp
