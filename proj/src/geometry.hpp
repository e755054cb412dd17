#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace udgmcp {

struct point {
    double x = 0.0;
    double y = 0.0;
    int id = -1;  // index into the owning instance; -1 for synthetic points
};

inline double sqdist(const point& a, const point& b) {
    double dx = a.x - b.x, dy = a.y - b.y;
    return dx * dx + dy * dy;
}

double dist(const point& a, const point& b);

// squared distance from p to the closed segment [a, b]
double point_segment_sqdist(const point& p, const point& a, const point& b);

// cross product (b-a) x (c-a); positive when c lies left of the directed line a->b
inline double orient(const point& a, const point& b, const point& c) {
    return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

// Tolerances are absolute; instances live at unit-disk scale (coordinates of
// magnitude ~1e1), where double noise sits around 1e-14.
inline constexpr double orient_eps = 1e-12;
inline constexpr double area_eps = 1e-12;

// -1 / 0 / +1 with a dead zone of orient_eps around zero
int orient_sign(const point& a, const point& b, const point& c);

// Convex polygon as a CCW vertex cycle without repeated or collinear
// vertices. Degenerate forms are first-class: one vertex is a point
// (perimeter 0), two vertices a segment (perimeter twice its length).
class convex_polygon {
public:
    convex_polygon() = default;
    explicit convex_polygon(std::vector<point> ccw_vertices);

    const std::vector<point>& vertices() const { return verts_; }
    std::size_t size() const { return verts_.size(); }
    bool empty() const { return verts_.empty(); }
    bool is_degenerate() const { return verts_.size() < 3; }

    double area() const;       // shoelace; 0 for degenerate forms
    double perimeter() const;  // closed boundary length under the conventions above

    // closed region membership (boundary counts as inside)
    bool contains(const point& p, double eps = 1e-9) const;
    // interior membership at tolerance eps (only meaningful for 2-D polygons)
    bool contains_strict(const point& p, double eps = 1e-9) const;

private:
    std::vector<point> verts_;
};

// Hull of a nonempty point span. Collinear chains collapse: the result has
// strict corners only, degenerating to a segment or single point as needed.
convex_polygon convex_hull(std::span<const point> pts);

double perimeter(const convex_polygon& poly);

// Geometric intersection p cap q, which may be 2-D, a segment, a point, or
// nothing. Degenerate inputs are intersected exactly (segment clipping,
// membership tests) rather than rejected.
std::optional<convex_polygon> convex_intersection(const convex_polygon& p, const convex_polygon& q);

// true iff the intersection has area above area_eps; shared boundary alone
// (edge contact, a vertex touch, any degenerate input) does not count
bool overlaps(const convex_polygon& p, const convex_polygon& q);

// For disjoint p, q: two vertices of V(p) u V(q) whose line leaves all of p
// weakly on its left and all of q weakly on its right. Search order is
// deterministic, so equal inputs give equal witnesses. For two single points
// the returned pair is (p0, q0); consumers that need a genuine separator for
// that case use the perpendicular bisector of the pair.
std::pair<point, point> separating_line(const convex_polygon& p, const convex_polygon& q);

// Simple polygon (CCW vertex cycle, not necessarily convex). Petals carry one
// boundary arc of each input polygon, and the arc borrowed from the other
// polygon may bend inward, so petals are generally not convex.
struct simple_polygon {
    std::vector<point> boundary;

    double signed_area() const;
    bool contains(const point& p, double eps = 1e-9) const;  // closed region
};

// Transversal crossing of the two boundaries: position plus the boundary
// parameter (edge index + fraction along the edge) on each polygon.
struct boundary_crossing {
    point pos;
    double t_p = 0.0;
    double t_q = 0.0;
};

// Petal structure of two overlapping 2-D convex polygons in general position.
//
// crossings lists the 2k transversal boundary crossings in the cyclic order
// shared by both boundaries (CCW), rotated so that the p-arc from crossings[0]
// to crossings[1] lies outside q. Petal cycle positions interleave:
// position 2i holds petals_p[i] (between crossings 2i and 2i+1), position
// 2i+1 holds petals_q[i]. In particular petals_p[0] and petals_q[0] are
// consecutive.
struct petal_decomposition_result {
    std::vector<simple_polygon> petals_p;   // components of p \ q
    std::vector<simple_polygon> petals_q;   // components of q \ p
    std::vector<boundary_crossing> crossings;
    convex_polygon intersection;            // I = p cap q, 2-D here
    int k = 0;                              // petals per polygon; crossings.size() == 2k
};

// Decomposes the symmetric difference of two overlapping polygons into
// petals. Containment (overlap without boundary crossings) raises
// errc::containment; tangential or otherwise degenerate boundary contact
// raises errc::degenerate_geometry.
petal_decomposition_result petal_decomposition(const convex_polygon& p, const convex_polygon& q);

// Boundary length of p u q, traced arc by arc (it is not computed from the
// perimeter identity, so it can serve as that identity's witness).
// Requires overlaps(p, q); containment degrades to the outer perimeter.
double union_perimeter(const convex_polygon& p, const convex_polygon& q);

}  // namespace udgmcp
