#include "harness.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "errors.hpp"
#include "exact.hpp"
#include "rng.hpp"

namespace udgmcp {

namespace {

using nlohmann::json;

std::string strip_comment(const std::string& line) {
    auto pos = line.find('#');
    return pos == std::string::npos ? line : line.substr(0, pos);
}

bool blank(const std::string& s) {
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) return false;
    return true;
}

[[noreturn]] void parse_fail(std::size_t line_no, const std::string& what) {
    raise(errc::parse, "line " + std::to_string(line_no) + ": " + what);
}

}  // namespace

point_set generate_instance(const instance_spec& spec) {
    if (spec.n < 0) raise(errc::invalid_argument, "instance size must be nonnegative");
    if (spec.box_w <= 0.0 || spec.box_h <= 0.0)
        raise(errc::invalid_argument, "instance box dimensions must be positive");
    splitmix64 rng(spec.seed);
    std::vector<point> pts;
    pts.reserve(static_cast<std::size_t>(spec.n));
    if (spec.dist == distribution_kind::uniform) {
        for (int i = 0; i < spec.n; ++i) {
            double x = rng.uniform(spec.box_w);
            double y = rng.uniform(spec.box_h);
            pts.push_back({x, y, i});
        }
    } else {
        int centers = (spec.n + 4) / 5;
        std::vector<point> mu;
        mu.reserve(static_cast<std::size_t>(centers));
        for (int c = 0; c < centers; ++c) {
            double x = rng.uniform(spec.box_w);
            double y = rng.uniform(spec.box_h);
            mu.push_back({x, y, c});
        }
        for (int i = 0; i < spec.n; ++i) {
            const point& c = mu[static_cast<std::size_t>(i % centers)];
            double x = c.x + 0.3 * rng.gaussian();
            double y = c.y + 0.3 * rng.gaussian();
            pts.push_back({x, y, i});
        }
    }
    return point_set(std::move(pts));
}

point_set parse_points(const std::string& text) {
    std::vector<point> pts;
    std::istringstream in(text);
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        if (!raw.empty() && raw.back() == '\r') raw.pop_back();
        std::string line = strip_comment(raw);
        if (blank(line)) continue;
        std::istringstream ls(line);
        double x = 0.0, y = 0.0;
        if (!(ls >> x >> y)) parse_fail(line_no, "expected two decimal coordinates");
        std::string extra;
        if (ls >> extra) parse_fail(line_no, "trailing content after the two coordinates");
        pts.push_back({x, y, static_cast<int>(pts.size())});
    }
    return point_set(std::move(pts));
}

point_set read_points(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) raise(errc::io, "cannot open points file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return parse_points(buf.str());
    } catch (const error& e) {
        if (e.code() == errc::parse) raise(errc::parse, path + ": " + e.what());
        throw;
    }
}

std::string format_points(const point_set& ps) {
    std::string out;
    char buf[80];
    for (const point& p : ps.points) {
        std::snprintf(buf, sizeof buf, "%.17g %.17g\n", p.x, p.y);
        out += buf;
    }
    return out;
}

void write_points(const std::string& path, const point_set& ps) {
    std::ofstream out(path, std::ios::binary);
    if (!out) raise(errc::io, "cannot open output file: " + path);
    out << format_points(ps);
    if (!out) raise(errc::io, "failed writing points file: " + path);
}

std::string algorithm_name(algorithm_id id) {
    switch (id) {
        case algorithm_id::exact: return "exact";
        case algorithm_id::strips3: return "strips3";
        case algorithm_id::strips_rand: return "strips-rand";
        case algorithm_id::grid_ptas: return "grid-ptas";
    }
    raise(errc::invalid_argument, "unknown algorithm id");
}

algorithm_id parse_algorithm(const std::string& name) {
    if (name == "exact") return algorithm_id::exact;
    if (name == "strips3") return algorithm_id::strips3;
    if (name == "strips-rand") return algorithm_id::strips_rand;
    if (name == "grid-ptas") return algorithm_id::grid_ptas;
    raise(errc::invalid_argument,
          "unknown algorithm '" + name + "' (expected exact, strips3, strips-rand, or grid-ptas)");
}

experiment_config parse_config_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        raise(errc::parse, std::string("config is not valid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("algorithm"))
        raise(errc::parse, "config must be a JSON object with an \"algorithm\" key");
    experiment_config cfg;
    try {
        cfg.algo = parse_algorithm(j.at("algorithm").get<std::string>());
        if (j.contains("eps")) cfg.eps = j.at("eps").get<double>();
        if (j.contains("delta")) cfg.delta = j.at("delta").get<double>();
        if (j.contains("seed")) cfg.seed = j.at("seed").get<std::uint64_t>();
        if (j.contains("variant")) {
            std::string v = j.at("variant").get<std::string>();
            if (v == "irrational")
                cfg.variant = strip_variant::irrational;
            else if (v == "rational")
                cfg.variant = strip_variant::rational;
            else
                raise(errc::parse, "variant must be \"irrational\" or \"rational\"");
        }
        if (j.contains("rational_t") && !j.at("rational_t").is_null())
            cfg.rational_t = j.at("rational_t").get<long>();
        if (j.contains("rounds") && !j.at("rounds").is_null())
            cfg.rounds_override = j.at("rounds").get<long>();
        if (j.contains("k") && !j.at("k").is_null()) cfg.k_override = j.at("k").get<int>();
        if (j.contains("cell_solver")) {
            std::string v = j.at("cell_solver").get<std::string>();
            if (v == "oracle")
                cfg.cell_solver = cell_solver_kind::oracle;
            else if (v == "enum")
                cfg.cell_solver = cell_solver_kind::enumerative;
            else
                raise(errc::parse, "cell_solver must be \"oracle\" or \"enum\"");
        }
        if (j.contains("oracle_cap")) cfg.oracle_cap = j.at("oracle_cap").get<int>();
        if (j.contains("threads")) cfg.threads = j.at("threads").get<int>();
        if (j.contains("enum_max_n") || j.contains("enum_max_q")) {
            enumerative_caps caps;
            if (j.contains("enum_max_n")) caps.max_n = j.at("enum_max_n").get<int>();
            if (j.contains("enum_max_q")) caps.max_q = j.at("enum_max_q").get<int>();
            cfg.enum_caps = caps;
        }
    } catch (const json::exception& e) {
        raise(errc::parse, std::string("bad config value: ") + e.what());
    }
    return cfg;
}

run_result run_experiment(const point_set& ps, const experiment_config& cfg) {
    run_result rr;
    rr.algo = cfg.algo;
    rr.n = ps.n();
    rr.seed = cfg.seed;
    unit_disk_graph g = build_graph(ps);
    auto t0 = std::chrono::steady_clock::now();
    switch (cfg.algo) {
        case algorithm_id::exact: {
            rr.partition = exact_mcp(g, cfg.oracle_cap);
            break;
        }
        case algorithm_id::strips3: {
            rr.partition = deterministic_3approx(ps);
            rr.sqrt3_width = true;
            break;
        }
        case algorithm_id::strips_rand: {
            randomized_options opt;
            opt.eps = cfg.eps;
            opt.delta = cfg.delta;
            opt.seed = cfg.seed;
            opt.variant = cfg.variant;
            opt.rational_t = cfg.rational_t;
            opt.rounds_override = cfg.rounds_override;
            opt.threads = cfg.threads;
            solve_stats stats;
            rr.partition = randomized_solve(ps, opt, &stats);
            rr.rounds = stats.rounds_executed;
            if (cfg.variant == strip_variant::rational)
                rr.width = cfg.rational_t ? width_from_convergent(*cfg.rational_t)
                                          : select_width(cfg.eps);
            else
                rr.sqrt3_width = true;
            break;
        }
        case algorithm_id::grid_ptas: {
            ptas_options opt;
            opt.eps = cfg.eps;
            opt.delta = cfg.delta;
            opt.seed = cfg.seed;
            opt.k_override = cfg.k_override;
            opt.cell_solver = cfg.cell_solver;
            opt.rounds_override = cfg.rounds_override;
            opt.oracle_cap = cfg.oracle_cap;
            if (cfg.enum_caps) opt.enum_caps = *cfg.enum_caps;
            solve_stats stats;
            rr.partition = ptas_solve(ps, opt, &stats);
            rr.rounds = stats.rounds_executed;
            break;
        }
    }
    auto t1 = std::chrono::steady_clock::now();
    rr.elapsed_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    partition_report report = validate_partition(g, rr.partition);
    if (!report.valid())
        raise(errc::solver, "solver emitted an invalid partition: " + report.to_string());
    if (cfg.algo == algorithm_id::exact) {
        rr.optimal = static_cast<int>(rr.partition.size());
        if (*rr.optimal > 0) rr.ratio = 1.0;
    } else if (rr.n <= cfg.oracle_cap && rr.n <= exact_mcp_hard_limit) {
        rr.optimal = exact_mcp_count(g, cfg.oracle_cap);
        if (*rr.optimal > 0)
            rr.ratio = static_cast<double>(rr.partition.size()) / static_cast<double>(*rr.optimal);
    }
    return rr;
}

std::string run_result_to_json(const run_result& rr) {
    json j;
    j["algorithm"] = algorithm_name(rr.algo);
    j["n"] = rr.n;
    j["num_cliques"] = rr.partition.size();
    json cliques = json::array();
    for (const auto& part : rr.partition.parts) cliques.push_back(part);
    j["cliques"] = std::move(cliques);
    j["optimal"] = rr.optimal ? json(*rr.optimal) : json(nullptr);
    j["ratio"] = rr.ratio ? json(*rr.ratio) : json(nullptr);
    j["seed"] = rr.seed;
    j["rounds"] = rr.rounds;
    if (rr.width)
        j["width"] = json{{"p", rr.width->d_num.str()}, {"q", rr.width->d_den.str()}};
    else if (rr.sqrt3_width)
        j["width"] = "sqrt3/2";
    else
        j["width"] = nullptr;
    j["elapsed_ms"] = rr.elapsed_ms;
    return j.dump(2);
}

std::string partition_to_json(const clique_partition& cp) {
    json j;
    j["num_cliques"] = cp.size();
    json cliques = json::array();
    for (const auto& part : cp.parts) cliques.push_back(part);
    j["cliques"] = std::move(cliques);
    return j.dump(2);
}

clique_partition parse_partition_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        raise(errc::parse, std::string("partition is not valid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("cliques") || !j.at("cliques").is_array())
        raise(errc::parse, "partition must be a JSON object with a \"cliques\" list");
    clique_partition cp;
    for (const auto& entry : j.at("cliques")) {
        if (!entry.is_array()) raise(errc::parse, "each clique must be a list of indices");
        std::vector<int> part;
        for (const auto& v : entry) {
            if (!v.is_number_integer() || v.get<long long>() < 0)
                raise(errc::parse, "clique members must be nonnegative integers");
            part.push_back(v.get<int>());
        }
        cp.parts.push_back(std::move(part));
    }
    return cp;
}

}  // namespace udgmcp
