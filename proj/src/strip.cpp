#include "strip.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "errors.hpp"

namespace udgmcp {

namespace {

constexpr double membership_slack = 1e-9;

std::vector<int> sorted_order(const point_set& ps) {
    std::vector<int> order(static_cast<std::size_t>(ps.n()));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        const point& pa = ps[a];
        const point& pb = ps[b];
        if (pa.x != pb.x) return pa.x < pb.x;
        if (pa.y != pb.y) return pa.y < pb.y;
        return a < b;
    });
    return order;
}

void check_membership(const strip_instance& inst) {
    for (const point& p : inst.points.points) {
        double off = p.y - inst.y_base;
        if (off < -membership_slack || off >= inst.width + membership_slack)
            raise(errc::invalid_argument,
                  "solve_strip: point " + std::to_string(p.id) + " lies outside the strip");
    }
}

}  // namespace

clique_partition solve_strip(const strip_instance& inst) {
    if (inst.width <= 0.0) raise(errc::invalid_argument, "solve_strip: width must be positive");
    check_membership(inst);

    const point_set& ps = inst.points;
    int n = ps.n();
    clique_partition out;
    if (n == 0) return out;

    std::vector<int> order = sorted_order(ps);

    // label = longest precedence chain ending here; chains advance x by more
    // than 1/2 per step inside a legal strip, which is what makes them cliques
    std::vector<int> label(static_cast<std::size_t>(n), 1);
    int max_label = 1;
    for (int a = 0; a < n; ++a) {
        int i = order[static_cast<std::size_t>(a)];
        for (int b = 0; b < a; ++b) {
            int j = order[static_cast<std::size_t>(b)];
            if (sqdist(ps[j], ps[i]) > 1.0)
                label[static_cast<std::size_t>(i)] =
                    std::max(label[static_cast<std::size_t>(i)], label[static_cast<std::size_t>(j)] + 1);
        }
        max_label = std::max(max_label, label[static_cast<std::size_t>(i)]);
    }

    out.parts.assign(static_cast<std::size_t>(max_label), {});
    for (int i = 0; i < n; ++i)
        out.parts[static_cast<std::size_t>(label[static_cast<std::size_t>(i)]) - 1].push_back(i);
    out.canonicalize();

    // cliqueness of every class is the solver's own correctness witness; it
    // only fails when the width precondition was violated
    for (std::size_t c = 0; c < out.parts.size(); ++c) {
        const auto& part = out.parts[c];
        for (std::size_t a = 0; a < part.size(); ++a)
            for (std::size_t b = a + 1; b < part.size(); ++b)
                if (sqdist(ps[part[a]], ps[part[b]]) > 1.0)
                    raise(errc::solver,
                          "solve_strip: label class " + std::to_string(c) +
                              " is not a clique (vertices " + std::to_string(part[a]) + ", " +
                              std::to_string(part[b]) + "); strip width " +
                              std::to_string(inst.width) + " exceeds the exactness limit");
    }
    return out;
}

bool check_transitive(const strip_instance& inst) {
    const point_set& ps = inst.points;
    int n = ps.n();
    std::vector<int> order = sorted_order(ps);

    auto precedes = [&](int a, int b) {  // positions in sorted order
        return a < b && sqdist(ps[order[static_cast<std::size_t>(a)]],
                               ps[order[static_cast<std::size_t>(b)]]) > 1.0;
    };
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            if (!precedes(a, b)) continue;
            for (int c = b + 1; c < n; ++c)
                if (precedes(b, c) && !precedes(a, c)) return false;
        }
    return true;
}

}  // namespace udgmcp
