#include "strips.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "errors.hpp"
#include "rng.hpp"

namespace udgmcp {

int strip_system::index_of(double y) const {
    return static_cast<int>(std::floor((y - shift) / width));
}

strip_system make_strip_system(strip_variant variant, double shift,
                               const std::optional<rational_width>& rw) {
    strip_system sys;
    if (variant == strip_variant::rational) {
        sys.rational = rw ? *rw : width_from_convergent(3);
        sys.width = sys.rational->value();
    } else {
        sys.width = strip_width_limit;
    }
    if (shift < 0.0 || shift >= sys.width)
        raise(errc::invalid_argument, "make_strip_system: shift must lie in [0, width)");
    sys.shift = shift;
    return sys;
}

round_plan make_round_plan(double eps, double delta, strip_variant variant) {
    if (!(eps > 0.0) || !(eps < 1.0))
        raise(errc::invalid_argument, "round plan: eps must lie in (0, 1)");
    if (!(delta > 0.0) || !(delta < 1.0))
        raise(errc::invalid_argument, "round plan: delta must lie in (0, 1)");

    double target = std::log(1.0 / delta);
    double denom;
    if (variant == strip_variant::irrational)
        denom = eps <= 0.3 ? 0.3 * eps : std::log(1.0 + eps / 3.0);
    else
        denom = eps <= 0.4 ? 0.225 * eps : std::log(1.0 + eps / 4.0);

    round_plan plan;
    plan.rounds = std::max<long>(1, static_cast<long>(std::ceil(target / denom)));
    plan.eps = eps;
    plan.delta = delta;
    plan.variant = variant;
    return plan;
}

clique_partition one_round(const point_set& ps, const strip_system& sys) {
    std::map<int, std::vector<int>> strips;  // strip index -> global point indices
    for (int i = 0; i < ps.n(); ++i) strips[sys.index_of(ps[i].y)].push_back(i);

    clique_partition out;
    for (const auto& [m, members] : strips) {
        strip_instance inst;
        inst.width = sys.width;
        inst.y_base = sys.shift + static_cast<double>(m) * sys.width;
        std::vector<point> local;
        local.reserve(members.size());
        for (int gi : members) local.push_back(ps[gi]);
        inst.points = point_set(std::move(local));

        clique_partition sub = solve_strip(inst);
        for (auto& part : sub.parts) {
            std::vector<int> global;
            global.reserve(part.size());
            for (int li : part) global.push_back(members[static_cast<std::size_t>(li)]);
            out.parts.push_back(std::move(global));
        }
    }
    out.canonicalize();
    return out;
}

namespace {

int resolve_threads(int requested, long rounds) {
    int t = requested;
    if (t <= 0) {
        if (const char* env = std::getenv("UDGMCP_THREADS")) t = std::atoi(env);
    }
    if (t <= 0) t = static_cast<int>(std::thread::hardware_concurrency());
    if (t <= 0) t = 1;
    return static_cast<int>(std::min<long>(t, std::max<long>(1, rounds)));
}

}  // namespace

clique_partition randomized_solve(const point_set& ps, const randomized_options& opt,
                                  solve_stats* stats) {
    round_plan plan = make_round_plan(opt.eps, opt.delta, opt.variant);
    long rounds = opt.rounds_override.value_or(plan.rounds);
    if (rounds < 1) raise(errc::invalid_argument, "randomized_solve: round count must be positive");

    std::optional<rational_width> rw;
    if (opt.variant == strip_variant::rational)
        rw = opt.rational_t ? width_from_convergent(*opt.rational_t) : select_width(opt.eps);
    double width = opt.variant == strip_variant::rational ? rw->value() : strip_width_limit;

    std::vector<clique_partition> results(static_cast<std::size_t>(rounds));
    std::vector<double> shifts(static_cast<std::size_t>(rounds));

    auto run_round = [&](long r) {
        splitmix64 rng = derived_stream(opt.seed, static_cast<std::uint64_t>(r));
        double shift = rng.uniform(width);
        strip_system sys = make_strip_system(opt.variant, shift, rw);
        shifts[static_cast<std::size_t>(r)] = shift;
        results[static_cast<std::size_t>(r)] = one_round(ps, sys);
    };

    int threads = resolve_threads(opt.threads, rounds);
    if (threads <= 1) {
        for (long r = 0; r < rounds; ++r) run_round(r);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(threads));
        for (int w = 0; w < threads; ++w)
            pool.emplace_back([&, w] {
                for (long r = w; r < rounds; r += threads) run_round(r);
            });
        for (auto& th : pool) th.join();
    }

    long best = 0;
    for (long r = 1; r < rounds; ++r)
        if (results[static_cast<std::size_t>(r)].size() < results[static_cast<std::size_t>(best)].size())
            best = r;  // strict improvement only, so ties keep the earliest round

    if (stats) {
        stats->rounds_executed = rounds;
        stats->best_round = best;
        stats->best_shift = shifts[static_cast<std::size_t>(best)];
    }
    return results[static_cast<std::size_t>(best)];
}

clique_partition deterministic_3approx(const point_set& ps) {
    strip_system sys = make_strip_system(strip_variant::irrational, 0.0);
    return one_round(ps, sys);
}

split_stats split_count_stats(const point_set& ps, std::span<const int> clique, double width,
                              long trials, std::uint64_t seed) {
    if (width <= 0.0) raise(errc::invalid_argument, "split_count_stats: width must be positive");
    if (trials < 1) raise(errc::invalid_argument, "split_count_stats: trials must be positive");
    if (clique.empty()) raise(errc::invalid_argument, "split_count_stats: empty clique");
    for (std::size_t a = 0; a < clique.size(); ++a)
        for (std::size_t b = a + 1; b < clique.size(); ++b)
            if (sqdist(ps[clique[a]], ps[clique[b]]) > 1.0)
                raise(errc::invalid_argument,
                      "split_count_stats: index set is not a clique (vertices " +
                          std::to_string(clique[a]) + ", " + std::to_string(clique[b]) + ")");

    splitmix64 rng(seed);
    long three = 0;
    long total_parts = 0;
    std::set<int> seen;
    for (long t = 0; t < trials; ++t) {
        double shift = rng.uniform(width);
        seen.clear();
        for (int idx : clique)
            seen.insert(static_cast<int>(std::floor((ps[idx].y - shift) / width)));
        int parts = static_cast<int>(seen.size());
        total_parts += parts;
        if (parts == 3) ++three;
    }
    split_stats st;
    st.prob_three = static_cast<double>(three) / static_cast<double>(trials);
    st.mean_parts = static_cast<double>(total_parts) / static_cast<double>(trials);
    st.trials = trials;
    return st;
}

}  // namespace udgmcp
