#include "grid.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <functional>
#include <map>
#include <set>
#include <string>

#include "errors.hpp"
#include "exact.hpp"
#include "rng.hpp"

namespace udgmcp {

std::pair<long, long> grid_system::cell_of(const point& p) const {
    double kk = static_cast<double>(k);
    return {static_cast<long>(std::floor((p.x - sx) / kk)),
            static_cast<long>(std::floor((p.y - sy) / kk))};
}

int cell_qmax(int k) {
    if (k < 1) raise(errc::invalid_argument, "cell_qmax: k must be positive");
    return 2 * k * k + 3 * k;
}

namespace {

void validate_guess_shape(const point_set& cell, const cell_guess& guess) {
    int n = cell.n();
    if (guess.q < 1 || static_cast<int>(guess.reps.size()) != guess.q)
        raise(errc::invalid_argument, "check_guess: representative count does not match q");
    std::set<int> distinct;
    for (int r : guess.reps) {
        if (r < 0 || r >= n) raise(errc::invalid_argument, "check_guess: representative out of range");
        if (!distinct.insert(r).second)
            raise(errc::invalid_argument, "check_guess: duplicate representative");
    }
    std::set<std::pair<int, int>> expected;
    for (int i = 0; i < guess.q; ++i)
        for (int j = i + 1; j < guess.q; ++j)
            if (sqdist(cell[guess.reps[static_cast<std::size_t>(i)]],
                       cell[guess.reps[static_cast<std::size_t>(j)]]) <= 4.0)
                expected.insert({i, j});
    std::set<std::pair<int, int>> given(guess.proximity_edges.begin(), guess.proximity_edges.end());
    if (given != expected)
        raise(errc::invalid_argument,
              "check_guess: proximity edges must connect exactly the representative pairs "
              "within distance 2");
    if (guess.separators.size() != guess.proximity_edges.size())
        raise(errc::invalid_argument, "check_guess: one separator is required per proximity edge");
    for (const auto& [a, b] : guess.separators) {
        if (a < 0 || a >= n || b < 0 || b >= n || a == b)
            raise(errc::invalid_argument, "check_guess: separator must be two distinct cell points");
    }
}

}  // namespace

std::optional<clique_partition> check_guess(const point_set& cell, const cell_guess& guess) {
    validate_guess_shape(cell, guess);
    int n = cell.n();
    int q = guess.q;

    std::vector<std::vector<int>> cand(static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x) {
        for (int i = 0; i < q; ++i) {
            const point& rep = cell[guess.reps[static_cast<std::size_t>(i)]];
            if (sqdist(cell[x], rep) > 1.0) continue;
            bool ok = true;
            for (std::size_t e = 0; e < guess.proximity_edges.size() && ok; ++e) {
                const auto& [ei, ej] = guess.proximity_edges[e];
                if (ei != i && ej != i) continue;
                const auto& [a, b] = guess.separators[e];
                const point& pa = cell[a];
                const point& pb = cell[b];
                int side_rep = orient_sign(pa, pb, rep);
                if (side_rep == 0) continue;  // representative on the line: no constraint
                int side_x = orient_sign(pa, pb, cell[x]);
                if (side_x != 0 && side_x != side_rep) ok = false;
            }
            if (ok) cand[static_cast<std::size_t>(x)].push_back(i);
        }
        if (cand[static_cast<std::size_t>(x)].empty()) return std::nullopt;
    }

#ifndef NDEBUG
    // non-adjacent representatives are more than 2 apart, so no point can sit
    // within 1 of both; candidate sets already respect that exclusion
    for (int i = 0; i < q; ++i)
        for (int j = i + 1; j < q; ++j) {
            if (sqdist(cell[guess.reps[static_cast<std::size_t>(i)]],
                       cell[guess.reps[static_cast<std::size_t>(j)]]) <= 4.0)
                continue;
            for (int x = 0; x < n; ++x) {
                const auto& cx = cand[static_cast<std::size_t>(x)];
                assert(!(std::count(cx.begin(), cx.end(), i) && std::count(cx.begin(), cx.end(), j)));
            }
        }
#endif

    // assign each point to one candidate part so that parts stay cliques;
    // scarce points first keeps the backtracking shallow
    std::vector<int> order(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        std::size_t ca = cand[static_cast<std::size_t>(a)].size();
        std::size_t cb = cand[static_cast<std::size_t>(b)].size();
        if (ca != cb) return ca < cb;
        return a < b;
    });

    std::vector<std::vector<int>> members(static_cast<std::size_t>(q));
    std::function<bool(std::size_t)> assign = [&](std::size_t pos) {
        if (pos == order.size()) return true;
        int x = order[pos];
        for (int i : cand[static_cast<std::size_t>(x)]) {
            auto& part = members[static_cast<std::size_t>(i)];
            bool fits = true;
            for (int y : part)
                if (sqdist(cell[x], cell[y]) > 1.0) {
                    fits = false;
                    break;
                }
            if (!fits) continue;
            part.push_back(x);
            if (assign(pos + 1)) return true;
            part.pop_back();
        }
        return false;
    };
    if (!assign(0)) return std::nullopt;

    clique_partition out;
    for (auto& part : members)
        if (!part.empty()) out.parts.push_back(std::move(part));
    out.canonicalize();
    return out;
}

std::optional<clique_partition> enumerative_cell_solve(const point_set& cell, int q_limit,
                                                       const enumerative_caps& caps) {
    int n = cell.n();
    if (n > caps.max_n)
        raise(errc::capacity, "enumerative_cell_solve: cell holds " + std::to_string(n) +
                                  " points, above the cap of " + std::to_string(caps.max_n));
    if (q_limit < 1) raise(errc::invalid_argument, "enumerative_cell_solve: q_limit must be positive");
    if (q_limit > caps.max_q)
        raise(errc::capacity, "enumerative_cell_solve: q_limit " + std::to_string(q_limit) +
                                  " above the cap of " + std::to_string(caps.max_q));
    if (n == 0) return clique_partition{};

    // all ordered pairs of distinct cell points, lexicographic
    std::vector<std::pair<int, int>> pair_pool;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (a != b) pair_pool.push_back({a, b});

    for (int q = 1; q <= std::min(q_limit, n); ++q) {
        std::vector<int> reps(static_cast<std::size_t>(q));
        for (int i = 0; i < q; ++i) reps[static_cast<std::size_t>(i)] = i;

        while (true) {
            cell_guess guess;
            guess.q = q;
            guess.reps = reps;
            for (int i = 0; i < q; ++i)
                for (int j = i + 1; j < q; ++j)
                    if (sqdist(cell[reps[static_cast<std::size_t>(i)]],
                               cell[reps[static_cast<std::size_t>(j)]]) <= 4.0)
                        guess.proximity_edges.push_back({i, j});

            std::size_t m = guess.proximity_edges.size();
            std::vector<std::size_t> odometer(m, 0);
            guess.separators.assign(m, {});
            while (true) {
                for (std::size_t e = 0; e < m; ++e) guess.separators[e] = pair_pool[odometer[e]];
                if (auto found = check_guess(cell, guess)) return found;
                // advance the last separator fastest
                bool wrapped = true;
                for (std::size_t e = m; e-- > 0;) {
                    if (++odometer[e] < pair_pool.size()) {
                        wrapped = false;
                        break;
                    }
                    odometer[e] = 0;
                }
                if (m == 0 || wrapped) break;
            }

            // next representative combination in lexicographic order
            int i = q - 1;
            while (i >= 0 && reps[static_cast<std::size_t>(i)] == n - q + i) --i;
            if (i < 0) break;
            ++reps[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < q; ++j)
                reps[static_cast<std::size_t>(j)] = reps[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
    return std::nullopt;
}

namespace {

clique_partition solve_cell(const point_set& cell_ps, long cx, long cy, const ptas_options& opt) {
    auto cell_name = [&] {
        return "cell (" + std::to_string(cx) + ", " + std::to_string(cy) + ")";
    };
    if (opt.cell_solver == cell_solver_kind::oracle) {
        if (cell_ps.n() > opt.oracle_cap)
            raise(errc::capacity, "ptas_solve: " + cell_name() + " holds " +
                                      std::to_string(cell_ps.n()) +
                                      " points, above the oracle cap of " +
                                      std::to_string(opt.oracle_cap));
        return exact_mcp(build_graph(cell_ps), opt.oracle_cap);
    }
    if (cell_ps.n() > opt.enum_caps.max_n)
        raise(errc::capacity, "ptas_solve: " + cell_name() + " holds " +
                                  std::to_string(cell_ps.n()) +
                                  " points, above the enumerative cap of " +
                                  std::to_string(opt.enum_caps.max_n));
    int q_limit = std::min(opt.enum_caps.max_q, std::max(1, cell_ps.n()));
    auto res = enumerative_cell_solve(cell_ps, q_limit, opt.enum_caps);
    if (!res)
        raise(errc::capacity, "ptas_solve: " + cell_name() + " needs more than " +
                                  std::to_string(q_limit) + " cliques");
    return *res;
}

}  // namespace

clique_partition ptas_solve(const point_set& ps, const ptas_options& opt, solve_stats* stats) {
    int k;
    if (opt.k_override) {
        k = *opt.k_override;
        if (k < 1) raise(errc::invalid_argument, "ptas_solve: k override must be positive");
    } else {
        if (!(opt.eps > 0.0) || !(opt.eps < 1.0))
            raise(errc::invalid_argument, "ptas_solve: eps must lie in (0, 1)");
        k = static_cast<int>(std::ceil(16.0 / opt.eps));
    }

    long rounds;
    if (opt.rounds_override) {
        rounds = *opt.rounds_override;
        if (rounds < 1) raise(errc::invalid_argument, "ptas_solve: round count must be positive");
    } else {
        if (!(opt.delta > 0.0) || !(opt.delta < 1.0))
            raise(errc::invalid_argument, "ptas_solve: delta must lie in (0, 1)");
        rounds = std::max<long>(
            1, static_cast<long>(std::ceil(std::log(1.0 / opt.delta) / std::log(8.0 / 3.0))));
    }

    clique_partition best;
    bool have_best = false;
    long best_round = 0;
    double best_sx = 0.0, best_sy = 0.0;

    for (long r = 0; r < rounds; ++r) {
        splitmix64 rng = derived_stream(opt.seed, static_cast<std::uint64_t>(r));
        grid_system sys;
        sys.k = k;
        sys.sx = rng.uniform(static_cast<double>(k));
        sys.sy = rng.uniform(static_cast<double>(k));

        std::map<std::pair<long, long>, std::vector<int>> cells;
        for (int i = 0; i < ps.n(); ++i) cells[sys.cell_of(ps[i])].push_back(i);

        clique_partition round_parts;
        for (const auto& [coords, members] : cells) {
            std::vector<point> local;
            local.reserve(members.size());
            for (int gi : members) local.push_back(ps[gi]);
            point_set cell_ps(std::move(local));

            clique_partition sub = solve_cell(cell_ps, coords.first, coords.second, opt);
            for (auto& part : sub.parts) {
                std::vector<int> global;
                global.reserve(part.size());
                for (int li : part) global.push_back(members[static_cast<std::size_t>(li)]);
                round_parts.parts.push_back(std::move(global));
            }
        }
        round_parts.canonicalize();

        if (!have_best || round_parts.size() < best.size()) {
            best = std::move(round_parts);
            have_best = true;
            best_round = r;
            best_sx = sys.sx;
            best_sy = sys.sy;
        }
    }

    if (stats) {
        stats->rounds_executed = rounds;
        stats->best_round = best_round;
        stats->best_shift = best_sx;
        (void)best_sy;
    }
    return best;
}

cut_stats clique_cut_probability(const point_set& ps, std::span<const int> clique, int k,
                                 long trials, std::uint64_t seed) {
    if (k < 1) raise(errc::invalid_argument, "clique_cut_probability: k must be positive");
    if (trials < 1) raise(errc::invalid_argument, "clique_cut_probability: trials must be positive");
    if (clique.empty()) raise(errc::invalid_argument, "clique_cut_probability: empty clique");
    for (std::size_t a = 0; a < clique.size(); ++a)
        for (std::size_t b = a + 1; b < clique.size(); ++b)
            if (sqdist(ps[clique[a]], ps[clique[b]]) > 1.0)
                raise(errc::invalid_argument, "clique_cut_probability: index set is not a clique");

    splitmix64 rng(seed);
    long cut = 0, both = 0;
    double kk = static_cast<double>(k);
    for (long t = 0; t < trials; ++t) {
        double sx = rng.uniform(kk);
        double sy = rng.uniform(kk);
        std::set<long> xs, ys;
        for (int idx : clique) {
            xs.insert(static_cast<long>(std::floor((ps[idx].x - sx) / kk)));
            ys.insert(static_cast<long>(std::floor((ps[idx].y - sy) / kk)));
        }
        bool cut_x = xs.size() > 1;
        bool cut_y = ys.size() > 1;
        if (cut_x || cut_y) ++cut;
        if (cut_x && cut_y) ++both;
    }
    cut_stats st;
    st.cut_probability = static_cast<double>(cut) / static_cast<double>(trials);
    st.both_axes_probability = static_cast<double>(both) / static_cast<double>(trials);
    st.trials = trials;
    return st;
}

}  // namespace udgmcp
