#include "exact.hpp"

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "errors.hpp"

namespace udgmcp {

namespace {

struct dp_tables {
    std::vector<std::uint8_t> f;        // minimum parts covering exactly this mask
    std::vector<std::uint32_t> choice;  // clique removed first from this mask
};

dp_tables solve_masks(const unit_disk_graph& g, int n) {
    std::vector<std::uint32_t> adj(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (g.adjacent(i, j)) adj[static_cast<std::size_t>(i)] |= 1u << j;

    std::size_t total = std::size_t{1} << n;
    dp_tables t;
    t.f.assign(total, 0xFF);
    t.choice.assign(total, 0);
    t.f[0] = 0;

    auto is_clique_mask = [&](std::uint32_t mask) {
        std::uint32_t rest = mask;
        while (rest) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            if ((mask & ~(1u << v)) & ~adj[static_cast<std::size_t>(v)]) return false;
        }
        return true;
    };

    for (std::uint32_t mask = 1; mask < total; ++mask) {
        if (is_clique_mask(mask)) {
            t.f[mask] = 1;
            t.choice[mask] = mask;
            continue;
        }
        int v = std::countr_zero(mask);
        std::uint8_t best = 0xFF;
        std::uint32_t best_clique = 0;

        // walk every clique subset of mask that contains v
        struct frame {
            std::uint32_t clique;
            std::uint32_t cand;
        };
        std::vector<frame> stack;
        stack.push_back({1u << v, mask & adj[static_cast<std::size_t>(v)]});
        while (!stack.empty()) {
            frame fr = stack.back();
            stack.pop_back();
            std::uint8_t sub = t.f[mask & ~fr.clique];
            if (sub != 0xFF && static_cast<std::uint8_t>(sub + 1) < best) {
                best = static_cast<std::uint8_t>(sub + 1);
                best_clique = fr.clique;
            }
            std::uint32_t cand = fr.cand;
            while (cand) {
                int u = std::countr_zero(cand);
                cand &= cand - 1;
                stack.push_back({fr.clique | (1u << u),
                                 fr.cand & cand & adj[static_cast<std::size_t>(u)]});
            }
        }
        t.f[mask] = best;
        t.choice[mask] = best_clique;
    }
    return t;
}

int checked_n(const unit_disk_graph& g, int max_n) {
    if (max_n > exact_mcp_hard_limit) max_n = exact_mcp_hard_limit;
    if (g.n() > max_n)
        raise(errc::capacity, "exact_mcp: instance has " + std::to_string(g.n()) +
                                  " points, above the cap of " + std::to_string(max_n));
    return g.n();
}

}  // namespace

clique_partition exact_mcp(const unit_disk_graph& g, int max_n) {
    int n = checked_n(g, max_n);
    clique_partition out;
    if (n == 0) return out;

    dp_tables t = solve_masks(g, n);
    std::uint32_t mask = (n == 32) ? ~0u : ((1u << n) - 1);
    while (mask) {
        std::uint32_t clique = t.choice[mask];
        std::vector<int> part;
        std::uint32_t rest = clique;
        while (rest) {
            part.push_back(std::countr_zero(rest));
            rest &= rest - 1;
        }
        out.parts.push_back(std::move(part));
        mask &= ~clique;
    }
    out.canonicalize();
    return out;
}

int exact_mcp_count(const unit_disk_graph& g, int max_n) {
    int n = checked_n(g, max_n);
    if (n == 0) return 0;
    dp_tables t = solve_masks(g, n);
    return t.f[(std::size_t{1} << n) - 1];
}

}  // namespace udgmcp
