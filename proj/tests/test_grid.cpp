#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

#include <doctest.h>

#include "errors.hpp"
#include "exact.hpp"
#include "grid.hpp"
#include "helpers.hpp"
#include "uncross.hpp"

using namespace udgmcp;
using namespace udgmcp::testing;

namespace {

bool code_is(const std::function<void()>& body, errc expected) {
    try {
        body();
    } catch (const error& e) {
        return e.code() == expected;
    }
    return false;
}

// guess whose representatives, proximity edges, and separators are derived
// from an uncrossed exact partition; separators come from separating_line,
// whose returned vertices carry their cell indices
std::optional<cell_guess> guess_from_partition(const point_set& cell, const clique_partition& cp) {
    cell_guess guess;
    guess.q = static_cast<int>(cp.size());
    std::vector<convex_polygon> hulls;
    for (const auto& part : cp.parts) {
        guess.reps.push_back(part[0]);
        hulls.push_back(hull_of_part(part, cell));
    }
    for (int i = 0; i < guess.q; ++i)
        for (int j = i + 1; j < guess.q; ++j) {
            if (sqdist(cell[guess.reps[static_cast<std::size_t>(i)]],
                       cell[guess.reps[static_cast<std::size_t>(j)]]) > 4.0)
                continue;
            guess.proximity_edges.push_back({i, j});
            try {
                auto [a, b] = separating_line(hulls[static_cast<std::size_t>(i)],
                                              hulls[static_cast<std::size_t>(j)]);
                guess.separators.push_back({a.id, b.id});
            } catch (const error&) {
                return std::nullopt;  // touching or nested hulls: no line through vertices
            }
        }
    return guess;
}

}  // namespace

TEST_CASE("cell clique budget grows as 2k^2 + 3k") {
    CHECK(cell_qmax(1) == 5);
    CHECK(cell_qmax(2) == 14);
    CHECK(cell_qmax(3) == 27);
    CHECK(code_is([] { (void)cell_qmax(0); }, errc::invalid_argument));
}

TEST_CASE("grid cells are half-open boxes of side k") {
    grid_system sys;
    sys.k = 3;
    sys.sx = 0.5;
    sys.sy = 1.0;
    CHECK(sys.cell_of({0.5, 1.0, -1}) == std::pair<long, long>{0, 0});
    CHECK(sys.cell_of({3.4, 0.9, -1}) == std::pair<long, long>{0, -1});
    CHECK(sys.cell_of({-2.0, -2.0, -1}) == std::pair<long, long>{-1, -1});
    CHECK(sys.cell_of({3.6, 4.1, -1}) == std::pair<long, long>{1, 1});
}

TEST_CASE("check_guess honors separator sides and covers the cell") {
    // two representatives exactly 1 apart; the line through points 3 and 4
    // separates them while the midpoint and both line points stay free
    point_set cell = make_ps({0, 0, 1, 0, 0.5, 0.4, 0.5, 0.86, 0.5, -0.5});
    cell_guess guess;
    guess.q = 2;
    guess.reps = {0, 1};
    guess.proximity_edges = {{0, 1}};
    guess.separators = {{3, 4}};

    auto witness = check_guess(cell, guess);
    REQUIRE(witness.has_value());
    CHECK(witness->size() == 2);
    CHECK(validate_partition(build_graph(cell), *witness).valid());
    for (const auto& part : witness->parts) {
        bool has0 = std::count(part.begin(), part.end(), 0) > 0;
        bool has1 = std::count(part.begin(), part.end(), 1) > 0;
        CHECK(!(has0 && has1));  // the representatives stay on their own sides
    }
}

TEST_CASE("check_guess rejects malformed guesses") {
    point_set cell = make_ps({0, 0, 1, 0, 0.5, 0.4, 0.5, 0.86, 0.5, -0.5});

    cell_guess missing_edge;
    missing_edge.q = 2;
    missing_edge.reps = {0, 1};
    CHECK(code_is([&] { (void)check_guess(cell, missing_edge); }, errc::invalid_argument));

    cell_guess missing_separator;
    missing_separator.q = 2;
    missing_separator.reps = {0, 1};
    missing_separator.proximity_edges = {{0, 1}};
    CHECK(code_is([&] { (void)check_guess(cell, missing_separator); }, errc::invalid_argument));

    cell_guess dup_rep;
    dup_rep.q = 2;
    dup_rep.reps = {0, 0};
    dup_rep.proximity_edges = {{0, 1}};
    dup_rep.separators = {{3, 4}};
    CHECK(code_is([&] { (void)check_guess(cell, dup_rep); }, errc::invalid_argument));

    cell_guess bad_range;
    bad_range.q = 2;
    bad_range.reps = {0, 9};
    CHECK(code_is([&] { (void)check_guess(cell, bad_range); }, errc::invalid_argument));

    cell_guess self_separator;
    self_separator.q = 2;
    self_separator.reps = {0, 1};
    self_separator.proximity_edges = {{0, 1}};
    self_separator.separators = {{3, 3}};
    CHECK(code_is([&] { (void)check_guess(cell, self_separator); }, errc::invalid_argument));

    cell_guess no_reps;
    no_reps.q = 0;
    CHECK(code_is([&] { (void)check_guess(cell, no_reps); }, errc::invalid_argument));
}

TEST_CASE("check_guess reports unsatisfiable guesses as nullopt") {
    // point 1 is beyond reach of the only representative
    point_set orphan = make_ps({0, 0, 2, 0});
    cell_guess lone;
    lone.q = 1;
    lone.reps = {0};
    CHECK(!check_guess(orphan, lone).has_value());

    // all candidates funnel into one part that cannot stay a clique
    point_set wide = make_ps({0, 0, 0.9, 0, -0.9, 0});
    cell_guess squeeze;
    squeeze.q = 1;
    squeeze.reps = {0};
    CHECK(!check_guess(wide, squeeze).has_value());
}

TEST_CASE("enumerative cell solver agrees with the exact oracle on toy cells") {
    int found = 0, unsat = 0;
    for (int trial = 0; trial < 20; ++trial) {
        int n = 2 + trial % 6;
        point_set cell = uniform_points(n, 1.4, 1.4, 6200 + static_cast<std::uint64_t>(trial));
        int z = exact_mcp_count(build_graph(cell));
        enumerative_caps caps;
        caps.max_n = 8;
        caps.max_q = 2;
        auto res = enumerative_cell_solve(cell, std::min(2, n), caps);
        if (z <= 2) {
            REQUIRE(res.has_value());
            CHECK(static_cast<int>(res->size()) == z);
            CHECK(validate_partition(build_graph(cell), *res).valid());
            ++found;
        } else {
            CHECK(!res.has_value());
            ++unsat;
        }
    }
    CHECK(found >= 10);  // the sweep must actually exercise the solver
}

TEST_CASE("enumerative cell solver enforces its caps") {
    point_set big = uniform_points(11, 2.0, 2.0, 88);
    CHECK(code_is([&] { (void)enumerative_cell_solve(big, 2); }, errc::capacity));

    point_set small = uniform_points(4, 1.0, 1.0, 89);
    CHECK(code_is([&] { (void)enumerative_cell_solve(small, 4); }, errc::capacity));
    CHECK(code_is([&] { (void)enumerative_cell_solve(small, 0); }, errc::invalid_argument));
    CHECK(enumerative_cell_solve(point_set(std::vector<point>{}), 1).has_value());
}

TEST_CASE("guesses round-tripped from uncrossed exact partitions validate") {
    int done = 0;
    for (std::uint64_t seed = 0; done < 12 && seed < 60; ++seed) {
        point_set cell = uniform_points(5 + static_cast<int>(seed % 4), 1.8, 1.8, 9100 + seed);
        unit_disk_graph g = build_graph(cell);
        clique_partition exact = uncross_partition(exact_mcp(g), cell);
        auto guess = guess_from_partition(cell, exact);
        if (!guess) continue;  // hulls touch: no vertex-pair separator exists

        auto witness = check_guess(cell, *guess);
        REQUIRE(witness.has_value());
        CHECK(witness->size() == exact.size());
        CHECK(validate_partition(g, *witness).valid());

        // proximity degree stays far below its certified ceiling
        std::vector<int> deg(static_cast<std::size_t>(guess->q), 0);
        for (const auto& [i, j] : guess->proximity_edges) {
            ++deg[static_cast<std::size_t>(i)];
            ++deg[static_cast<std::size_t>(j)];
        }
        for (int d : deg) CHECK(d <= 79);
        CHECK(static_cast<double>(guess->proximity_edges.size()) <=
              39.5 * static_cast<double>(guess->q));
        ++done;
    }
    CHECK(done == 12);
}

TEST_CASE("ptas rounds follow the ceil(ln(1/delta)/ln(8/3)) schedule") {
    point_set ps = uniform_points(8, 2.0, 2.0, 501);
    ptas_options opt;
    opt.k_override = 3;
    solve_stats stats;

    opt.delta = 0.5;
    (void)ptas_solve(ps, opt, &stats);
    CHECK(stats.rounds_executed == 1);

    opt.delta = 0.05;
    (void)ptas_solve(ps, opt, &stats);
    CHECK(stats.rounds_executed == 4);

    opt.rounds_override = 7;
    (void)ptas_solve(ps, opt, &stats);
    CHECK(stats.rounds_executed == 7);
}

TEST_CASE("ptas output is a valid partition bounded below by the optimum") {
    for (int trial = 0; trial < 8; ++trial) {
        point_set ps = uniform_points(14, 5.0, 5.0, 7300 + static_cast<std::uint64_t>(trial));
        unit_disk_graph g = build_graph(ps);
        int z = exact_mcp_count(g);
        ptas_options opt;
        opt.k_override = 3;
        opt.delta = 0.5;
        opt.seed = static_cast<std::uint64_t>(trial);
        clique_partition cp = ptas_solve(ps, opt);
        REQUIRE(validate_partition(g, cp).valid());
        CHECK(static_cast<int>(cp.size()) >= z);
    }
}

TEST_CASE("ptas is deterministic in its seed") {
    point_set ps = uniform_points(16, 5.0, 5.0, 640);
    ptas_options opt;
    opt.k_override = 3;
    opt.delta = 0.1;
    opt.seed = 11;
    clique_partition a = ptas_solve(ps, opt);
    clique_partition b = ptas_solve(ps, opt);
    CHECK(a.parts == b.parts);
}

TEST_CASE("ptas with eps-derived k runs at tame sizes") {
    point_set ps = uniform_points(10, 4.0, 4.0, 991);
    ptas_options opt;
    opt.eps = 0.9;  // k = ceil(16/0.9) = 18
    opt.delta = 0.5;
    clique_partition cp = ptas_solve(ps, opt);
    CHECK(validate_partition(build_graph(ps), cp).valid());
}

TEST_CASE("ptas oracle cap raises capacity on dense cells") {
    // 25 points in a tight cluster: any grid split leaves a cell above cap 3
    std::vector<point> pts;
    for (int i = 0; i < 25; ++i)
        pts.push_back({2.0 + 0.001 * static_cast<double>(i), 2.0, i});
    point_set ps{std::move(pts)};
    ptas_options opt;
    opt.k_override = 5;
    opt.rounds_override = 1;
    opt.oracle_cap = 3;
    CHECK(code_is([&] { (void)ptas_solve(ps, opt); }, errc::capacity));
}

TEST_CASE("ptas rejects out-of-range parameters") {
    point_set ps = make_ps({0, 0});
    ptas_options opt;
    opt.k_override = 0;
    CHECK(code_is([&] { (void)ptas_solve(ps, opt); }, errc::invalid_argument));

    ptas_options bad_eps;
    bad_eps.eps = 0.0;
    CHECK(code_is([&] { (void)ptas_solve(ps, bad_eps); }, errc::invalid_argument));

    ptas_options bad_rounds;
    bad_rounds.k_override = 2;
    bad_rounds.rounds_override = 0;
    CHECK(code_is([&] { (void)ptas_solve(ps, bad_rounds); }, errc::invalid_argument));

    ptas_options bad_delta;
    bad_delta.k_override = 2;
    bad_delta.delta = 1.0;
    CHECK(code_is([&] { (void)ptas_solve(ps, bad_delta); }, errc::invalid_argument));
}

TEST_CASE("enumerative and oracle cell solvers give equal counts through the grid") {
    // two tiny far-apart triangles; with q <= 3 per cell both solvers are exact
    point_set ps = make_ps({0.10, 0.10, 0.30, 0.10, 0.20, 0.35,
                            1.50, 1.50, 1.70, 1.50, 1.60, 1.75});
    ptas_options oracle_opt;
    oracle_opt.k_override = 3;
    oracle_opt.rounds_override = 1;
    oracle_opt.seed = 3;
    ptas_options enum_opt = oracle_opt;
    enum_opt.cell_solver = cell_solver_kind::enumerative;

    clique_partition by_oracle = ptas_solve(ps, oracle_opt);
    clique_partition by_enum = ptas_solve(ps, enum_opt);
    CHECK(validate_partition(build_graph(ps), by_enum).valid());
    CHECK(by_enum.size() == by_oracle.size());
}

TEST_CASE("cut probabilities match geometry") {
    point_set ps = make_ps({0, 0, 0, 1, 0.7071, 0.7071, 3, 3});

    // a single point never meets a grid line
    cut_stats lone = clique_cut_probability(ps, std::vector<int>{0}, 4, 2000, 5);
    CHECK(lone.cut_probability == 0.0);
    CHECK(lone.both_axes_probability == 0.0);

    // vertical unit segment: cut iff a horizontal line lands inside it
    cut_stats vertical = clique_cut_probability(ps, std::vector<int>{0, 1}, 8, 40000, 6);
    CHECK(std::abs(vertical.cut_probability - 1.0 / 8.0) < 0.01);
    CHECK(vertical.both_axes_probability == 0.0);

    // unit diagonal: each axis cuts with probability (1/sqrt(2))/k, and the
    // two axes are independent
    cut_stats diagonal = clique_cut_probability(ps, std::vector<int>{0, 2}, 8, 60000, 7);
    double per_axis = 0.7071 / 8.0;
    CHECK(std::abs(diagonal.both_axes_probability - per_axis * per_axis) < 0.002);
    CHECK(diagonal.cut_probability <= 2.0 / 8.0);
    CHECK(std::abs(diagonal.cut_probability - (2.0 * per_axis - per_axis * per_axis)) < 0.01);

    CHECK(code_is([&] { (void)clique_cut_probability(ps, std::vector<int>{0, 3}, 4, 100, 1); },
                  errc::invalid_argument));
    CHECK(code_is([&] { (void)clique_cut_probability(ps, std::vector<int>{0}, 0, 100, 1); },
                  errc::invalid_argument));
    CHECK(code_is([&] { (void)clique_cut_probability(ps, std::vector<int>{0}, 4, 0, 1); },
                  errc::invalid_argument));
    CHECK(code_is([&] { (void)clique_cut_probability(ps, std::vector<int>{}, 4, 100, 1); },
                  errc::invalid_argument));
}
