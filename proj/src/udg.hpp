#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "geometry.hpp"

namespace udgmcp {

// Planar instance; points[i].id == i always holds.
struct point_set {
    std::vector<point> points;

    point_set() = default;
    explicit point_set(std::vector<point> pts);
    static point_set from_coords(std::span<const double> xy);

    int n() const { return static_cast<int>(points.size()); }
    const point& operator[](int i) const { return points[static_cast<std::size_t>(i)]; }
};

// Unit disk graph in the proximity model: i ~ j iff their squared distance is
// at most 1 (inclusive, compared exactly in doubles). Adjacency is kept in
// packed bit rows for moderate n and in sorted lists beyond that; both answer
// the same queries.
class unit_disk_graph {
public:
    explicit unit_disk_graph(const point_set& ps);

    int n() const { return n_; }
    bool adjacent(int i, int j) const;
    int degree(int i) const { return degree_[static_cast<std::size_t>(i)]; }

private:
    static constexpr int bitset_limit = 4096;

    int n_ = 0;
    std::size_t words_per_row_ = 0;
    std::vector<std::uint64_t> bits_;           // used when n <= bitset_limit
    std::vector<std::vector<int>> neighbors_;   // used otherwise
    std::vector<int> degree_;
};

unit_disk_graph build_graph(const point_set& ps);

bool is_clique(const unit_disk_graph& g, std::span<const int> part);

// Partition of vertex indices into parts; parts hold 0-based indices.
struct clique_partition {
    std::vector<std::vector<int>> parts;

    std::size_t size() const { return parts.size(); }

    // sorts members within parts and parts by their smallest member, giving
    // every solver a single canonical output form
    void canonicalize();
};

struct partition_report {
    std::vector<int> out_of_range;                    // vertex indices outside [0, n)
    std::vector<int> duplicated;                      // vertices in more than one part
    std::vector<int> uncovered;                       // vertices in no part
    std::vector<std::pair<int, std::pair<int, int>>> non_clique;  // part -> offending pair

    bool valid() const {
        return out_of_range.empty() && duplicated.empty() && uncovered.empty() &&
               non_clique.empty();
    }
    std::string to_string() const;
};

partition_report validate_partition(const unit_disk_graph& g, const clique_partition& cp);

}  // namespace udgmcp
