#include "udg.hpp"

#include <algorithm>
#include <sstream>

#include "errors.hpp"

namespace udgmcp {

point_set::point_set(std::vector<point> pts) : points(std::move(pts)) {
    for (std::size_t i = 0; i < points.size(); ++i) points[i].id = static_cast<int>(i);
}

point_set point_set::from_coords(std::span<const double> xy) {
    if (xy.size() % 2 != 0)
        raise(errc::invalid_argument, "point_set: odd number of coordinates");
    std::vector<point> pts;
    pts.reserve(xy.size() / 2);
    for (std::size_t i = 0; i < xy.size(); i += 2)
        pts.push_back({xy[i], xy[i + 1], static_cast<int>(i / 2)});
    return point_set(std::move(pts));
}

unit_disk_graph::unit_disk_graph(const point_set& ps) : n_(ps.n()) {
    degree_.assign(static_cast<std::size_t>(n_), 0);
    auto edge = [&](int i, int j) { return sqdist(ps[i], ps[j]) <= 1.0; };

    if (n_ <= bitset_limit) {
        words_per_row_ = static_cast<std::size_t>((n_ + 63) / 64);
        bits_.assign(static_cast<std::size_t>(n_) * words_per_row_, 0);
        for (int i = 0; i < n_; ++i)
            for (int j = i + 1; j < n_; ++j) {
                if (!edge(i, j)) continue;
                bits_[static_cast<std::size_t>(i) * words_per_row_ + static_cast<std::size_t>(j) / 64] |=
                    1ull << (j % 64);
                bits_[static_cast<std::size_t>(j) * words_per_row_ + static_cast<std::size_t>(i) / 64] |=
                    1ull << (i % 64);
                ++degree_[static_cast<std::size_t>(i)];
                ++degree_[static_cast<std::size_t>(j)];
            }
    } else {
        neighbors_.assign(static_cast<std::size_t>(n_), {});
        for (int i = 0; i < n_; ++i)
            for (int j = i + 1; j < n_; ++j) {
                if (!edge(i, j)) continue;
                neighbors_[static_cast<std::size_t>(i)].push_back(j);
                neighbors_[static_cast<std::size_t>(j)].push_back(i);
            }
        for (int i = 0; i < n_; ++i) {
            auto& nb = neighbors_[static_cast<std::size_t>(i)];
            std::sort(nb.begin(), nb.end());
            degree_[static_cast<std::size_t>(i)] = static_cast<int>(nb.size());
        }
    }
}

bool unit_disk_graph::adjacent(int i, int j) const {
    if (i == j) return false;
    if (!bits_.empty()) {
        return (bits_[static_cast<std::size_t>(i) * words_per_row_ + static_cast<std::size_t>(j) / 64] >>
                (j % 64)) &
               1ull;
    }
    const auto& nb = neighbors_[static_cast<std::size_t>(i)];
    return std::binary_search(nb.begin(), nb.end(), j);
}

unit_disk_graph build_graph(const point_set& ps) { return unit_disk_graph(ps); }

bool is_clique(const unit_disk_graph& g, std::span<const int> part) {
    for (std::size_t a = 0; a < part.size(); ++a)
        for (std::size_t b = a + 1; b < part.size(); ++b)
            if (!g.adjacent(part[a], part[b])) return false;
    return true;
}

void clique_partition::canonicalize() {
    for (auto& part : parts) std::sort(part.begin(), part.end());
    std::sort(parts.begin(), parts.end(), [](const std::vector<int>& a, const std::vector<int>& b) {
        if (a.empty() || b.empty()) return b.empty() < a.empty();
        return a[0] < b[0];
    });
}

std::string partition_report::to_string() const {
    if (valid()) return "valid";
    std::ostringstream os;
    for (int v : out_of_range) os << "vertex " << v << " out of range\n";
    for (int v : duplicated) os << "vertex " << v << " appears in more than one part\n";
    for (int v : uncovered) os << "vertex " << v << " is uncovered\n";
    for (const auto& [part, pair] : non_clique)
        os << "part " << part << " is not a clique (vertices " << pair.first << ", " << pair.second
           << " are farther than 1 apart)\n";
    return os.str();
}

partition_report validate_partition(const unit_disk_graph& g, const clique_partition& cp) {
    partition_report rep;
    std::vector<int> seen(static_cast<std::size_t>(g.n()), 0);
    for (std::size_t pi = 0; pi < cp.parts.size(); ++pi) {
        const auto& part = cp.parts[pi];
        for (int v : part) {
            if (v < 0 || v >= g.n()) {
                rep.out_of_range.push_back(v);
                continue;
            }
            ++seen[static_cast<std::size_t>(v)];
        }
        for (std::size_t a = 0; a < part.size(); ++a) {
            bool done = false;
            for (std::size_t b = a + 1; b < part.size() && !done; ++b) {
                int u = part[a], v = part[b];
                if (u < 0 || u >= g.n() || v < 0 || v >= g.n()) continue;
                if (!g.adjacent(u, v)) {
                    rep.non_clique.push_back({static_cast<int>(pi), {u, v}});
                    done = true;  // report the first offending pair per part
                }
            }
            if (done) break;
        }
    }
    for (int v = 0; v < g.n(); ++v) {
        if (seen[static_cast<std::size_t>(v)] == 0) rep.uncovered.push_back(v);
        if (seen[static_cast<std::size_t>(v)] > 1) rep.duplicated.push_back(v);
    }
    return rep;
}

}  // namespace udgmcp
