#include "udgmcp/udgmcp.h"

#include <cstdlib>
#include <cstring>
#include <string>
#include <utility>

#include <json.hpp>

#include "errors.hpp"
#include "harness.hpp"
#include "udg.hpp"
#include "uncross.hpp"
#include "widths.hpp"

struct udgmcp_points {
    udgmcp::point_set ps;
};

struct udgmcp_partition {
    udgmcp::clique_partition cp;
};

namespace {

using nlohmann::json;

thread_local std::string tls_error;

udgmcp_status map_errc(udgmcp::errc c) {
    switch (c) {
        case udgmcp::errc::invalid_argument: return UDGMCP_ERR_INVALID_ARGUMENT;
        case udgmcp::errc::io: return UDGMCP_ERR_IO;
        case udgmcp::errc::parse: return UDGMCP_ERR_PARSE;
        case udgmcp::errc::capacity: return UDGMCP_ERR_CAPACITY;
        case udgmcp::errc::solver: return UDGMCP_ERR_SOLVER;
        case udgmcp::errc::degenerate_geometry: return UDGMCP_ERR_DEGENERATE_GEOMETRY;
        case udgmcp::errc::containment: return UDGMCP_ERR_CONTAINMENT;
        case udgmcp::errc::unsupported: return UDGMCP_ERR_UNSUPPORTED;
    }
    return UDGMCP_ERR_INTERNAL;
}

// runs the body, translating exceptions into statuses and tls_error
template <typename F>
udgmcp_status guarded(F&& body) {
    try {
        udgmcp_status s = body();
        if (s == UDGMCP_OK) tls_error.clear();
        return s;
    } catch (const udgmcp::error& e) {
        tls_error = e.what();
        return map_errc(e.code());
    } catch (const std::exception& e) {
        tls_error = e.what();
        return UDGMCP_ERR_INTERNAL;
    } catch (...) {
        tls_error = "unknown error";
        return UDGMCP_ERR_INTERNAL;
    }
}

udgmcp_status fail(udgmcp_status s, const char* message) {
    tls_error = message;
    return s;
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

// width metadata shared by the convergent queries
json width_json(long t) {
    udgmcp::convergent c = udgmcp::xi_convergent(t);
    json j;
    j["t"] = c.t;
    j["p"] = c.p.str();
    j["q"] = c.q.str();
    if (t % 2 == 1) {
        udgmcp::rational_width w = udgmcp::width_from_convergent(t);
        j["width"] = json{{"p", w.d_num.str()}, {"q", w.d_den.str()}};
        j["value"] = w.value();
    } else {
        j["width"] = nullptr;
        j["value"] = nullptr;
    }
    return j;
}

}  // namespace

extern "C" {

const char* udgmcp_version(void) { return "1.0.0"; }

const char* udgmcp_last_error(void) { return tls_error.c_str(); }

void udgmcp_string_free(char* s) { std::free(s); }

udgmcp_status udgmcp_points_from_coords(const double* xy, int n, udgmcp_points** out) {
    if (!out || (n > 0 && !xy) || n < 0)
        return fail(UDGMCP_ERR_INVALID_ARGUMENT, "bad arguments to points_from_coords");
    return guarded([&] {
        auto ps = udgmcp::point_set::from_coords(
            std::span<const double>(xy, static_cast<std::size_t>(2 * n)));
        *out = new udgmcp_points{std::move(ps)};
        return UDGMCP_OK;
    });
}

udgmcp_status udgmcp_points_parse(const char* text, udgmcp_points** out) {
    if (!text || !out) return fail(UDGMCP_ERR_INVALID_ARGUMENT, "bad arguments to points_parse");
    return guarded([&] {
        *out = new udgmcp_points{udgmcp::parse_points(text)};
        return UDGMCP_OK;
    });
}

udgmcp_status udgmcp_points_read(const char* path, udgmcp_points** out) {
    if (!path || !out) return fail(UDGMCP_ERR_INVALID_ARGUMENT, "bad arguments to points_read");
    return guarded([&] {
        *out = new udgmcp_points{udgmcp::read_points(path)};
        return UDGMCP_OK;
    });
}

udgmcp_status udgmcp_points_format(const udgmcp_points* pts, char** out) {
    if (!pts || !out) return fail(UDGMCP_ERR_INVALID_ARGUMENT, "bad arguments to points_format");
    return guarded([&] {
        *out = dup_string(udgmcp::format_points(pts->ps));
        return *out ? UDGMCP_OK : fail(UDGMCP_ERR_INTERNAL, "allocation failed");
    });
}

udgmcp_status udgmcp_points_write(const udgmcp_points* pts, const char* path) {
    if (!pts || !path) return fail(UDGMCP_ERR_INVALID_ARGUMENT, "bad arguments to points_write");
    return guarded([&] {
        udgmcp::write_points(path, pts->ps);
        return UDGMCP_OK;
    });
}

udgmcp_status udgmcp_points_generate(const char* spec_json, udgmcp_points** out) {
    if (!spec_json || !out)
        return fail(UDGMCP_ERR_INVALID_ARGUMENT, "bad arguments to points_generate");
    return guarded([&]() -> udgmcp_status {
        json j;
        try {
            j = json::parse(spec_json);
        } catch (const json::exception& e) {
            udgmcp::raise(udgmcp::errc::parse, std::string("spec is not valid JSON: ") + e.what());
        }
        if (!j.is_object() || !j.contains("n"))
            udgmcp::raise(udgmcp::errc::parse, "spec must be a JSON object with an \"n\" key");
        udgmcp::instance_spec spec;
        try {
            spec.n = j.at("n").get<int>();
            if (j.contains("box_w")) spec.box_w = j.at("box_w").get<double>();
            if (j.contains("box_h")) spec.box_h = j.at("box_h").get<double>();
            if (j.contains("seed")) spec.seed = j.at("seed").get<std::uint64_t>();
            if (j.contains("dist")) {
                std::string d = j.at("dist").get<std::string>();
                if (d == "uniform")
                    spec.dist = udgmcp::distribution_kind::uniform;
                else if (d == "clustered")
                    spec.dist = udgmcp::distribution_kind::clustered;
                else
                    udgmcp::raise(udgmcp::errc::parse,
                                  "dist must be \"uniform\" or \"clustered\"");
            }
        } catch (const json::exception& e) {
            udgmcp::raise(udgmcp::errc::parse, std::string("bad spec value: ") + e.what());
        }
        *out = new udgmcp_points{udgmcp::generate_instance(spec)};
        return UDGMCP_OK;
    });
}

int udgmcp_points_count(const udgmcp_points* pts) { return pts ? pts->ps.n() : -1; }

udgmcp_status udgmcp_points_get(const udgmcp_points* pts, int index, double* x, double* y) {
    if (!pts || !x || !y) return fail(UDGMCP_ERR_INVALID_ARGUMENT, "bad arguments to points_get");
    if (index < 0 || index >= pts->ps.n())
        return fail(UDGMCP_ERR_INVALID_ARGUMENT, "point index out of range");
    *x = pts->ps[index].x;
    *y = pts->ps[index].y;
    tls_error.clear();
    return UDGMCP_OK;
}

void udgmcp_points_free(udgmcp_points* pts) { delete pts; }

udgmcp_status udgmcp_solve(const udgmcp_points* pts, const char* config_json,
                           udgmcp_partition** out_partition, char** out_result_json) {
    if (!pts || !config_json || !out_partition)
        return fail(UDGMCP_ERR_INVALID_ARGUMENT, "bad arguments to solve");
    return guarded([&]() -> udgmcp_status {
        udgmcp::experiment_config cfg = udgmcp::parse_config_json(config_json);
        udgmcp::run_result rr = udgmcp::run_experiment(pts->ps, cfg);
        if (out_result_json) {
            *out_result_json = dup_string(udgmcp::run_result_to_json(rr));
            if (!*out_result_json) return fail(UDGMCP_ERR_INTERNAL, "allocation failed");
        }
        *out_partition = new udgmcp_partition{std::move(rr.partition)};
        return UDGMCP_OK;
    });
}

udgmcp_status udgmcp_partition_parse(const char* json_text, udgmcp_partition** out) {
    if (!json_text || !out)
        return fail(UDGMCP_ERR_INVALID_ARGUMENT, "bad arguments to partition_parse");
    return guarded([&] {
        *out = new udgmcp_partition{udgmcp::parse_partition_json(json_text)};
        return UDGMCP_OK;
    });
}

udgmcp_status udgmcp_partition_to_json(const udgmcp_partition* part, char** out) {
    if (!part || !out)
        return fail(UDGMCP_ERR_INVALID_ARGUMENT, "bad arguments to partition_to_json");
    return guarded([&] {
        *out = dup_string(udgmcp::partition_to_json(part->cp));
        return *out ? UDGMCP_OK : fail(UDGMCP_ERR_INTERNAL, "allocation failed");
    });
}

int udgmcp_partition_count(const udgmcp_partition* part) {
    return part ? static_cast<int>(part->cp.size()) : -1;
}

int udgmcp_partition_part_size(const udgmcp_partition* part, int index) {
    if (!part || index < 0 || index >= static_cast<int>(part->cp.size())) return -1;
    return static_cast<int>(part->cp.parts[static_cast<std::size_t>(index)].size());
}

int udgmcp_partition_member(const udgmcp_partition* part, int index, int pos) {
    if (!part || index < 0 || index >= static_cast<int>(part->cp.size())) return -1;
    const auto& p = part->cp.parts[static_cast<std::size_t>(index)];
    if (pos < 0 || pos >= static_cast<int>(p.size())) return -1;
    return p[static_cast<std::size_t>(pos)];
}

udgmcp_status udgmcp_partition_validate(const udgmcp_points* pts, const udgmcp_partition* part,
                                        int* valid, char** out_report) {
    if (!pts || !part || !valid)
        return fail(UDGMCP_ERR_INVALID_ARGUMENT, "bad arguments to partition_validate");
    return guarded([&]() -> udgmcp_status {
        udgmcp::unit_disk_graph g = udgmcp::build_graph(pts->ps);
        udgmcp::partition_report report = udgmcp::validate_partition(g, part->cp);
        *valid = report.valid() ? 1 : 0;
        if (out_report) {
            *out_report = dup_string(report.valid() ? "" : report.to_string());
            if (!*out_report) return fail(UDGMCP_ERR_INTERNAL, "allocation failed");
        }
        return UDGMCP_OK;
    });
}

udgmcp_status udgmcp_uncross(const udgmcp_points* pts, const udgmcp_partition* part,
                             udgmcp_partition** out, char** out_trace_json) {
    if (!pts || !part || !out) return fail(UDGMCP_ERR_INVALID_ARGUMENT, "bad arguments to uncross");
    return guarded([&]() -> udgmcp_status {
        udgmcp::uncross_trace trace;
        udgmcp::clique_partition fixed = udgmcp::uncross_partition(part->cp, pts->ps, &trace);
        if (out_trace_json) {
            json t;
            t["psi"] = trace.psi_values;
            t["moves"] = trace.moves;
            *out_trace_json = dup_string(t.dump(2));
            if (!*out_trace_json) return fail(UDGMCP_ERR_INTERNAL, "allocation failed");
        }
        *out = new udgmcp_partition{std::move(fixed)};
        return UDGMCP_OK;
    });
}

void udgmcp_partition_free(udgmcp_partition* part) { delete part; }

udgmcp_status udgmcp_convergent_json(long t, char** out) {
    if (!out) return fail(UDGMCP_ERR_INVALID_ARGUMENT, "bad arguments to convergent_json");
    return guarded([&] {
        *out = dup_string(width_json(t).dump(2));
        return *out ? UDGMCP_OK : fail(UDGMCP_ERR_INTERNAL, "allocation failed");
    });
}

udgmcp_status udgmcp_select_width_json(double eps, char** out) {
    if (!out) return fail(UDGMCP_ERR_INVALID_ARGUMENT, "bad arguments to select_width_json");
    return guarded([&] {
        udgmcp::rational_width w = udgmcp::select_width(eps);
        *out = dup_string(width_json(w.t).dump(2));
        return *out ? UDGMCP_OK : fail(UDGMCP_ERR_INTERNAL, "allocation failed");
    });
}

}  // extern "C"
