#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "udgmcp/udgmcp.h"

namespace {

using nlohmann::json;

int exit_code_for(udgmcp_status s) {
    switch (s) {
        case UDGMCP_OK: return 0;
        case UDGMCP_ERR_INVALID_ARGUMENT: return 1;
        case UDGMCP_ERR_IO:
        case UDGMCP_ERR_PARSE: return 2;
        default: return 3;
    }
}

void check(udgmcp_status s) {
    if (s != UDGMCP_OK) {
        std::cerr << "error: " << udgmcp_last_error() << "\n";
        std::exit(exit_code_for(s));
    }
}

struct points_deleter {
    void operator()(udgmcp_points* p) const { udgmcp_points_free(p); }
};
struct partition_deleter {
    void operator()(udgmcp_partition* p) const { udgmcp_partition_free(p); }
};
using points_handle = std::unique_ptr<udgmcp_points, points_deleter>;
using partition_handle = std::unique_ptr<udgmcp_partition, partition_deleter>;

std::string take_string(char* s) {
    std::string out = s ? s : "";
    udgmcp_string_free(s);
    return out;
}

points_handle load_points(const std::string& path) {
    udgmcp_points* pts = nullptr;
    check(udgmcp_points_read(path.c_str(), &pts));
    return points_handle(pts);
}

partition_handle load_partition(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        std::cerr << "error: cannot open partition file: " << path << "\n";
        std::exit(2);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    udgmcp_partition* part = nullptr;
    check(udgmcp_partition_parse(buf.str().c_str(), &part));
    return partition_handle(part);
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        if (text.empty() || text.back() != '\n') std::cout << "\n";
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot open output file: " << out_path << "\n";
        std::exit(2);
    }
    out << text;
    if (!text.empty() && text.back() != '\n') out << "\n";
}

// one table line per convergent: exact fractions plus the double width
void print_convergent_line(const std::string& doc) {
    json j = json::parse(doc);
    std::ostringstream os;
    os << "t=" << j.at("t").get<long>() << " p=" << j.at("p").get<std::string>()
       << " q=" << j.at("q").get<std::string>();
    if (j.at("width").is_null()) {
        os << " width=-";
    } else {
        os << " width=" << j.at("width").at("p").get<std::string>() << "/"
           << j.at("width").at("q").get<std::string>();
        char buf[40];
        std::snprintf(buf, sizeof buf, "%.15g", j.at("value").get<double>());
        os << " value=" << buf;
    }
    std::cout << os.str() << "\n";
}

struct solver_flags {
    std::string algo;
    double eps = 0.3;
    double delta = 0.1;
    std::uint64_t seed = 0;
    bool rational = false;
    bool irrational = false;
    long rational_t = 0;
    long rounds = 0;
    int k = 0;
    std::string cell_solver = "oracle";
    int oracle_cap = 18;
    int threads = 0;
};

void add_solver_options(CLI::App* cmd, solver_flags& f, CLI::Option** rational_t_opt,
                        CLI::Option** rounds_opt, CLI::Option** k_opt) {
    cmd->add_option("--algo", f.algo, "exact | strips3 | strips-rand | grid-ptas")->required();
    cmd->add_option("--eps", f.eps, "approximation slack")->capture_default_str();
    cmd->add_option("--delta", f.delta, "failure probability")->capture_default_str();
    cmd->add_option("--seed", f.seed, "rng seed")->capture_default_str();
    auto* rat = cmd->add_flag("--rational", f.rational, "use a rational strip width");
    cmd->add_flag("--irrational", f.irrational, "use strip width sqrt(3)/2 (default)")
        ->excludes(rat);
    *rational_t_opt =
        cmd->add_option("--rational-t", f.rational_t, "odd convergent index for the width");
    *rounds_opt = cmd->add_option("--rounds", f.rounds, "override the round count");
    *k_opt = cmd->add_option("--k", f.k, "override the grid parameter k");
    cmd->add_option("--cell-solver", f.cell_solver, "oracle | enum")->capture_default_str();
    cmd->add_option("--oracle-cap", f.oracle_cap, "max n for exact solves")
        ->capture_default_str();
    cmd->add_option("--threads", f.threads, "worker threads (0: auto)")->capture_default_str();
}

std::string build_config(const solver_flags& f, bool with_rational_t, bool with_rounds,
                         bool with_k, std::uint64_t seed) {
    json cfg;
    cfg["algorithm"] = f.algo;
    cfg["eps"] = f.eps;
    cfg["delta"] = f.delta;
    cfg["seed"] = seed;
    cfg["variant"] = f.rational ? "rational" : "irrational";
    if (with_rational_t) cfg["rational_t"] = f.rational_t;
    if (with_rounds) cfg["rounds"] = f.rounds;
    if (with_k) cfg["k"] = f.k;
    cfg["cell_solver"] = f.cell_solver;
    cfg["oracle_cap"] = f.oracle_cap;
    cfg["threads"] = f.threads;
    return cfg.dump();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"minimum clique partition solvers for unit disk graphs"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "generate a seeded random instance");
    int gen_n = 0;
    double gen_bw = 10.0, gen_bh = 10.0;
    std::uint64_t gen_seed = 0;
    std::string gen_dist = "uniform";
    std::string gen_out;
    gen->add_option("--n", gen_n, "number of points")->required();
    gen->add_option("--box-w", gen_bw, "box width")->capture_default_str();
    gen->add_option("--box-h", gen_bh, "box height")->capture_default_str();
    gen->add_option("--seed", gen_seed, "rng seed")->capture_default_str();
    gen->add_option("--dist", gen_dist, "uniform | clustered")->capture_default_str();
    gen->add_option("--out", gen_out, "output points file (default: stdout)");

    // solve
    auto* solve = app.add_subcommand("solve", "run a solver on a points file");
    solver_flags sf;
    std::string solve_in, solve_out;
    CLI::Option *sf_rt = nullptr, *sf_rounds = nullptr, *sf_k = nullptr;
    solve->add_option("--in", solve_in, "input points file")->required();
    solve->add_option("--out", solve_out, "result JSON file (default: stdout)");
    add_solver_options(solve, sf, &sf_rt, &sf_rounds, &sf_k);

    // verify
    auto* verify = app.add_subcommand("verify", "validate a partition against a points file");
    std::string ver_in, ver_part;
    verify->add_option("--in", ver_in, "input points file")->required();
    verify->add_option("--partition", ver_part, "partition JSON file")->required();

    // uncross
    auto* uncross = app.add_subcommand("uncross", "make part hulls pairwise non-overlapping");
    std::string unc_in, unc_part, unc_out;
    uncross->add_option("--in", unc_in, "input points file")->required();
    uncross->add_option("--partition", unc_part, "partition JSON file")->required();
    uncross->add_option("--out", unc_out, "output JSON file (default: stdout)");

    // convergents
    auto* conv = app.add_subcommand("convergents", "rational strip widths from convergents");
    long conv_t = 0, conv_upto = 0;
    double conv_eps = 0.0;
    auto* conv_t_opt = conv->add_option("--t", conv_t, "single convergent index");
    auto* conv_upto_opt = conv->add_option("--upto", conv_upto, "table for t = 0..N");
    auto* conv_eps_opt = conv->add_option("--eps", conv_eps, "select the width for eps");
    conv_t_opt->excludes(conv_upto_opt)->excludes(conv_eps_opt);
    conv_upto_opt->excludes(conv_eps_opt);

    // bench
    auto* bench = app.add_subcommand("bench", "sweep seeded instances through one solver");
    solver_flags bf;
    CLI::Option *bf_rt = nullptr, *bf_rounds = nullptr, *bf_k = nullptr;
    int bench_count = 10, bench_n = 0;
    double bench_bw = 10.0, bench_bh = 10.0;
    std::string bench_dist = "uniform", bench_out;
    bench->add_option("--count", bench_count, "number of instances")->capture_default_str();
    bench->add_option("--n", bench_n, "points per instance")->required();
    bench->add_option("--box-w", bench_bw, "box width")->capture_default_str();
    bench->add_option("--box-h", bench_bh, "box height")->capture_default_str();
    bench->add_option("--dist", bench_dist, "uniform | clustered")->capture_default_str();
    bench->add_option("--out", bench_out, "JSONL file for per-run results");
    add_solver_options(bench, bf, &bf_rt, &bf_rounds, &bf_k);
    bench->get_option("--seed")->description("base seed; instance i uses seed + i");

    CLI11_PARSE(app, argc, argv);

    if (*gen) {
        json spec;
        spec["n"] = gen_n;
        spec["box_w"] = gen_bw;
        spec["box_h"] = gen_bh;
        spec["seed"] = gen_seed;
        spec["dist"] = gen_dist;
        udgmcp_points* pts = nullptr;
        check(udgmcp_points_generate(spec.dump().c_str(), &pts));
        points_handle guard(pts);
        if (gen_out.empty()) {
            char* text = nullptr;
            check(udgmcp_points_format(pts, &text));
            std::cout << take_string(text);
        } else {
            check(udgmcp_points_write(pts, gen_out.c_str()));
        }
        return 0;
    }

    if (*solve) {
        points_handle pts = load_points(solve_in);
        std::string cfg = build_config(sf, sf_rt->count() > 0, sf_rounds->count() > 0,
                                       sf_k->count() > 0, sf.seed);
        udgmcp_partition* part = nullptr;
        char* result = nullptr;
        check(udgmcp_solve(pts.get(), cfg.c_str(), &part, &result));
        partition_handle guard(part);
        emit(take_string(result), solve_out);
        return 0;
    }

    if (*verify) {
        points_handle pts = load_points(ver_in);
        partition_handle part = load_partition(ver_part);
        int valid = 0;
        char* report = nullptr;
        check(udgmcp_partition_validate(pts.get(), part.get(), &valid, &report));
        std::string detail = take_string(report);
        if (valid) {
            std::cout << "valid: " << udgmcp_partition_count(part.get()) << " cliques\n";
            return 0;
        }
        std::cerr << "invalid partition: " << detail << "\n";
        return 2;
    }

    if (*uncross) {
        points_handle pts = load_points(unc_in);
        partition_handle part = load_partition(unc_part);
        udgmcp_partition* fixed = nullptr;
        char* trace = nullptr;
        check(udgmcp_uncross(pts.get(), part.get(), &fixed, &trace));
        partition_handle guard(fixed);
        char* fixed_json = nullptr;
        check(udgmcp_partition_to_json(fixed, &fixed_json));
        json merged = json::parse(take_string(fixed_json));
        merged.update(json::parse(take_string(trace)));
        emit(merged.dump(2), unc_out);
        return 0;
    }

    if (*conv) {
        if (conv_eps_opt->count() > 0) {
            char* doc = nullptr;
            check(udgmcp_select_width_json(conv_eps, &doc));
            print_convergent_line(take_string(doc));
            return 0;
        }
        if (conv_upto_opt->count() > 0) {
            for (long t = 0; t <= conv_upto; ++t) {
                char* doc = nullptr;
                check(udgmcp_convergent_json(t, &doc));
                print_convergent_line(take_string(doc));
            }
            return 0;
        }
        if (conv_t_opt->count() > 0) {
            char* doc = nullptr;
            check(udgmcp_convergent_json(conv_t, &doc));
            print_convergent_line(take_string(doc));
            return 0;
        }
        std::cerr << "error: convergents needs one of --t, --upto, --eps\n";
        return 1;
    }

    if (*bench) {
        std::ofstream jsonl;
        if (!bench_out.empty()) {
            jsonl.open(bench_out, std::ios::binary);
            if (!jsonl) {
                std::cerr << "error: cannot open output file: " << bench_out << "\n";
                return 2;
            }
        }
        double sum_parts = 0.0, sum_ratio = 0.0, max_ratio = 0.0, sum_ms = 0.0;
        int with_ratio = 0;
        for (int i = 0; i < bench_count; ++i) {
            std::uint64_t seed_i = bf.seed + static_cast<std::uint64_t>(i);
            json spec;
            spec["n"] = bench_n;
            spec["box_w"] = bench_bw;
            spec["box_h"] = bench_bh;
            spec["seed"] = seed_i;
            spec["dist"] = bench_dist;
            udgmcp_points* pts = nullptr;
            check(udgmcp_points_generate(spec.dump().c_str(), &pts));
            points_handle pguard(pts);
            std::string cfg = build_config(bf, bf_rt->count() > 0, bf_rounds->count() > 0,
                                           bf_k->count() > 0, seed_i);
            udgmcp_partition* part = nullptr;
            char* result = nullptr;
            check(udgmcp_solve(pts, cfg.c_str(), &part, &result));
            partition_handle guard(part);
            json r = json::parse(take_string(result));
            sum_parts += r.at("num_cliques").get<double>();
            sum_ms += r.at("elapsed_ms").get<double>();
            if (!r.at("ratio").is_null()) {
                double ratio = r.at("ratio").get<double>();
                sum_ratio += ratio;
                max_ratio = std::max(max_ratio, ratio);
                ++with_ratio;
            }
            if (jsonl.is_open()) jsonl << r.dump() << "\n";
        }
        double denom = bench_count > 0 ? bench_count : 1;
        std::cout << "instances: " << bench_count << "\n";
        std::cout << "mean cliques: " << sum_parts / denom << "\n";
        std::cout << "mean elapsed_ms: " << sum_ms / denom << "\n";
        if (with_ratio > 0) {
            std::cout << "mean ratio: " << sum_ratio / with_ratio << " over " << with_ratio
                      << " oracle-sized runs\n";
            std::cout << "max ratio: " << max_ratio << "\n";
        } else {
            std::cout << "ratio: no oracle-sized runs\n";
        }
        return 0;
    }

    return 1;
}
