#include "geometry.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <cstddef>
#include <sstream>

#include "errors.hpp"

namespace udgmcp {

double dist(const point& a, const point& b) { return std::sqrt(sqdist(a, b)); }

int orient_sign(const point& a, const point& b, const point& c) {
    double v = orient(a, b, c);
    if (v > orient_eps) return 1;
    if (v < -orient_eps) return -1;
    return 0;
}

double point_segment_sqdist(const point& p, const point& a, const point& b) {
    double abx = b.x - a.x, aby = b.y - a.y;
    double len2 = abx * abx + aby * aby;
    double t = 0.0;
    if (len2 > 0.0) t = std::clamp(((p.x - a.x) * abx + (p.y - a.y) * aby) / len2, 0.0, 1.0);
    point proj{a.x + t * abx, a.y + t * aby, -1};
    return sqdist(p, proj);
}

namespace {

bool near_same(const point& a, const point& b, double eps = 1e-10) {
    return std::abs(a.x - b.x) <= eps && std::abs(a.y - b.y) <= eps;
}

double shoelace2(const std::vector<point>& v) {
    double s = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const point& a = v[i];
        const point& b = v[(i + 1) % v.size()];
        s += a.x * b.y - a.y * b.x;
    }
    return s;  // twice the signed area
}

double sq_point_segment(const point& p, const point& a, const point& b) {
    return point_segment_sqdist(p, a, b);
}

// Collapse a raw vertex cycle: merge near-equal neighbours, drop collinear
// vertices, and reduce flat cycles to their extreme pair (or a single point).
std::vector<point> tidy_cycle(std::vector<point> v) {
    std::vector<point> w;
    for (const point& p : v) {
        if (w.empty() || !near_same(w.back(), p)) w.push_back(p);
    }
    while (w.size() > 1 && near_same(w.front(), w.back())) w.pop_back();
    if (w.size() < 3) return w;

    if (std::abs(shoelace2(w)) <= 2.0 * area_eps) {
        auto before = [](const point& a, const point& b) {
            return a.x < b.x || (a.x == b.x && a.y < b.y);
        };
        point lo = w[0], hi = w[0];
        for (const point& p : w) {
            if (before(p, lo)) lo = p;
            if (before(hi, p)) hi = p;
        }
        if (near_same(lo, hi)) return {lo};
        return {lo, hi};
    }

    std::vector<point> out;
    std::size_t n = w.size();
    for (std::size_t i = 0; i < n; ++i) {
        const point& prev = w[(i + n - 1) % n];
        const point& cur = w[i];
        const point& next = w[(i + 1) % n];
        if (orient_sign(prev, cur, next) != 0) out.push_back(cur);
    }
    return out;
}

}  // namespace

convex_polygon::convex_polygon(std::vector<point> ccw_vertices)
    : verts_(tidy_cycle(std::move(ccw_vertices))) {
#ifndef NDEBUG
    if (verts_.size() >= 3) {
        assert(shoelace2(verts_) > 0.0 && "vertex cycle must be counterclockwise");
        for (std::size_t i = 0; i < verts_.size(); ++i) {
            const point& a = verts_[i];
            const point& b = verts_[(i + 1) % verts_.size()];
            const point& c = verts_[(i + 2) % verts_.size()];
            assert(orient_sign(a, b, c) > 0 && "vertex cycle must be convex");
        }
    }
#endif
}

double convex_polygon::area() const {
    if (verts_.size() < 3) return 0.0;
    return 0.5 * std::abs(shoelace2(verts_));
}

double convex_polygon::perimeter() const {
    if (verts_.size() < 2) return 0.0;
    if (verts_.size() == 2) return 2.0 * dist(verts_[0], verts_[1]);
    double s = 0.0;
    for (std::size_t i = 0; i < verts_.size(); ++i)
        s += dist(verts_[i], verts_[(i + 1) % verts_.size()]);
    return s;
}

bool convex_polygon::contains(const point& p, double eps) const {
    if (verts_.empty()) return false;
    if (verts_.size() == 1) return sqdist(p, verts_[0]) <= eps * eps;
    if (verts_.size() == 2) return sq_point_segment(p, verts_[0], verts_[1]) <= eps * eps;
    for (std::size_t i = 0; i < verts_.size(); ++i)
        if (orient(verts_[i], verts_[(i + 1) % verts_.size()], p) < -eps) return false;
    return true;
}

bool convex_polygon::contains_strict(const point& p, double eps) const {
    if (verts_.size() < 3) return false;
    for (std::size_t i = 0; i < verts_.size(); ++i)
        if (orient(verts_[i], verts_[(i + 1) % verts_.size()], p) <= eps) return false;
    return true;
}

convex_polygon convex_hull(std::span<const point> pts) {
    if (pts.empty()) raise(errc::invalid_argument, "convex_hull: empty point set");
    std::vector<point> p(pts.begin(), pts.end());
    std::sort(p.begin(), p.end(), [](const point& a, const point& b) {
        return a.x < b.x || (a.x == b.x && a.y < b.y);
    });
    p.erase(std::unique(p.begin(), p.end(),
                        [](const point& a, const point& b) { return near_same(a, b); }),
            p.end());
    std::size_t n = p.size();
    if (n == 1) return convex_polygon({p[0]});

    // monotone chain with strict turns, so collinear interior vertices drop out
    std::vector<point> h(2 * n);
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i) {
        while (k >= 2 && orient(h[k - 2], h[k - 1], p[i]) <= orient_eps) --k;
        h[k++] = p[i];
    }
    for (std::size_t i = n - 1, t = k + 1; i-- > 0;) {
        while (k >= t && orient(h[k - 2], h[k - 1], p[i]) <= orient_eps) --k;
        h[k++] = p[i];
    }
    h.resize(k - 1);
    return convex_polygon(std::move(h));
}

double perimeter(const convex_polygon& poly) { return poly.perimeter(); }

namespace {

// keeps the part of the cycle weakly left of the directed line a -> b
std::vector<point> clip_halfplane(const std::vector<point>& poly, const point& a, const point& b) {
    std::vector<point> out;
    std::size_t n = poly.size();
    for (std::size_t i = 0; i < n; ++i) {
        const point& cur = poly[i];
        const point& nxt = poly[(i + 1) % n];
        double dc = orient(a, b, cur);
        double dn = orient(a, b, nxt);
        bool in_cur = dc >= -orient_eps;
        bool in_nxt = dn >= -orient_eps;
        if (in_cur) out.push_back(cur);
        if (in_cur != in_nxt) {
            double t = dc / (dc - dn);
            out.push_back({cur.x + t * (nxt.x - cur.x), cur.y + t * (nxt.y - cur.y), -1});
        }
    }
    return out;
}

std::optional<convex_polygon> finish_intersection(std::vector<point> verts) {
    verts = tidy_cycle(std::move(verts));
    if (verts.empty()) return std::nullopt;
    return convex_polygon(std::move(verts));
}

// intersection of a point or segment with a 2-D convex polygon
std::optional<convex_polygon> clip_degenerate(const convex_polygon& d, const convex_polygon& poly) {
    const double eps = 1e-9;
    if (d.size() == 1) {
        if (poly.contains(d.vertices()[0], eps)) return d;
        return std::nullopt;
    }
    const point& a = d.vertices()[0];
    const point& b = d.vertices()[1];
    double t0 = 0.0, t1 = 1.0;
    const auto& pv = poly.vertices();
    for (std::size_t i = 0; i < pv.size(); ++i) {
        const point& e1 = pv[i];
        const point& e2 = pv[(i + 1) % pv.size()];
        double da = orient(e1, e2, a);
        double db = orient(e1, e2, b);
        if (da < -orient_eps && db < -orient_eps) return std::nullopt;
        if (da >= -orient_eps && db >= -orient_eps) continue;
        double t = da / (da - db);
        if (da < db) t0 = std::max(t0, t);  // entering the half-plane
        else t1 = std::min(t1, t);          // leaving it
    }
    if (t0 > t1 + 1e-12) return std::nullopt;
    point p0{a.x + t0 * (b.x - a.x), a.y + t0 * (b.y - a.y), -1};
    point p1{a.x + t1 * (b.x - a.x), a.y + t1 * (b.y - a.y), -1};
    if (near_same(p0, p1)) return convex_polygon({p0});
    return convex_polygon({p0, p1});
}

// both inputs are points or segments
std::optional<convex_polygon> degenerate_pair(const convex_polygon& p, const convex_polygon& q) {
    const double eps = 1e-9;
    if (p.size() == 1) {
        if (q.contains(p.vertices()[0], eps)) return p;
        return std::nullopt;
    }
    if (q.size() == 1) return degenerate_pair(q, p);

    const point& a = p.vertices()[0];
    const point& b = p.vertices()[1];
    const point& c = q.vertices()[0];
    const point& d = q.vertices()[1];
    double d1x = b.x - a.x, d1y = b.y - a.y;
    double d2x = d.x - c.x, d2y = d.y - c.y;
    double den = d1x * d2y - d1y * d2x;
    if (std::abs(den) <= orient_eps) {
        if (std::abs((c.x - a.x) * d1y - (c.y - a.y) * d1x) > eps) return std::nullopt;
        // collinear: overlap interval in parameters of p
        double len2 = d1x * d1x + d1y * d1y;
        double sc = ((c.x - a.x) * d1x + (c.y - a.y) * d1y) / len2;
        double sd = ((d.x - a.x) * d1x + (d.y - a.y) * d1y) / len2;
        double lo = std::max(0.0, std::min(sc, sd));
        double hi = std::min(1.0, std::max(sc, sd));
        if (lo > hi + 1e-12) return std::nullopt;
        point p0{a.x + lo * d1x, a.y + lo * d1y, -1};
        point p1{a.x + hi * d1x, a.y + hi * d1y, -1};
        if (near_same(p0, p1)) return convex_polygon({p0});
        return convex_polygon({p0, p1});
    }
    double t = ((c.x - a.x) * d2y - (c.y - a.y) * d2x) / den;
    double u = ((c.x - a.x) * d1y - (c.y - a.y) * d1x) / den;
    const double pe = 1e-12;
    if (t < -pe || t > 1.0 + pe || u < -pe || u > 1.0 + pe) return std::nullopt;
    return convex_polygon({point{a.x + t * d1x, a.y + t * d1y, -1}});
}

}  // namespace

std::optional<convex_polygon> convex_intersection(const convex_polygon& p, const convex_polygon& q) {
    if (p.empty() || q.empty()) return std::nullopt;
    if (p.is_degenerate() && q.is_degenerate()) return degenerate_pair(p, q);
    if (p.is_degenerate()) return clip_degenerate(p, q);
    if (q.is_degenerate()) return clip_degenerate(q, p);

    std::vector<point> cur = p.vertices();
    const auto& qv = q.vertices();
    for (std::size_t i = 0; i < qv.size() && !cur.empty(); ++i)
        cur = clip_halfplane(cur, qv[i], qv[(i + 1) % qv.size()]);
    if (cur.empty()) return std::nullopt;
    return finish_intersection(std::move(cur));
}

bool overlaps(const convex_polygon& p, const convex_polygon& q) {
    if (p.is_degenerate() || q.is_degenerate()) return false;
    auto isect = convex_intersection(p, q);
    return isect.has_value() && isect->area() > area_eps;
}

std::pair<point, point> separating_line(const convex_polygon& p, const convex_polygon& q) {
    if (p.empty() || q.empty()) raise(errc::invalid_argument, "separating_line: empty polygon");
    const double eps = 1e-9;
    std::vector<point> all = p.vertices();
    all.insert(all.end(), q.vertices().begin(), q.vertices().end());

    auto weakly_separates = [&](const point& a, const point& b) {
        for (const point& v : p.vertices())
            if (orient(a, b, v) < -eps) return false;
        for (const point& v : q.vertices())
            if (orient(a, b, v) > eps) return false;
        return true;
    };
    for (std::size_t i = 0; i < all.size(); ++i)
        for (std::size_t j = 0; j < all.size(); ++j) {
            if (i == j || near_same(all[i], all[j])) continue;
            if (weakly_separates(all[i], all[j])) return {all[i], all[j]};
        }
    raise(errc::invalid_argument, "separating_line: polygons are not disjoint");
}

double simple_polygon::signed_area() const { return 0.5 * shoelace2(boundary); }

bool simple_polygon::contains(const point& p, double eps) const {
    std::size_t n = boundary.size();
    if (n == 0) return false;
    for (std::size_t i = 0; i < n; ++i)
        if (sq_point_segment(p, boundary[i], boundary[(i + 1) % n]) <= eps * eps) return true;
    bool in = false;
    for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
        const point& a = boundary[i];
        const point& b = boundary[j];
        if ((a.y > p.y) != (b.y > p.y)) {
            double xc = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y);
            if (p.x < xc) in = !in;
        }
    }
    return in;
}

namespace {

// vertex parameters are integers, crossing parameters interior to edges
point param_point(const std::vector<point>& v, double t) {
    std::size_t n = v.size();
    double tt = std::fmod(t, static_cast<double>(n));
    if (tt < 0) tt += static_cast<double>(n);
    std::size_t e = std::min(n - 1, static_cast<std::size_t>(tt));
    double f = tt - static_cast<double>(e);
    const point& a = v[e];
    const point& b = v[(e + 1) % n];
    return {a.x + f * (b.x - a.x), a.y + f * (b.y - a.y), -1};
}

std::vector<point> verts_between(const std::vector<point>& v, double t1, double t2) {
    std::size_t n = v.size();
    if (t2 <= t1) t2 += static_cast<double>(n);
    std::vector<point> out;
    for (double idx = std::floor(t1) + 1.0; idx < t2 - 1e-12; idx += 1.0) {
        if (idx <= t1 + 1e-12) continue;
        out.push_back(v[static_cast<std::size_t>(idx) % n]);
    }
    return out;
}

double arc_length(const std::vector<point>& v, double t1, double t2) {
    std::size_t n = v.size();
    if (t2 <= t1) t2 += static_cast<double>(n);
    double len = 0.0;
    double t = t1;
    while (t < t2 - 1e-12) {
        double edge_end = std::floor(t) + 1.0;
        if (edge_end <= t + 1e-12) edge_end += 1.0;
        double seg_end = std::min(edge_end, t2);
        std::size_t e = static_cast<std::size_t>(std::floor(t)) % n;
        len += (seg_end - t) * dist(v[e], v[(e + 1) % n]);
        t = seg_end;
    }
    return len;
}

std::vector<boundary_crossing> find_crossings(const convex_polygon& p, const convex_polygon& q) {
    const auto& pv = p.vertices();
    const auto& qv = q.vertices();
    const double endpoint_eps = 1e-9;
    std::vector<boundary_crossing> out;
    for (std::size_t i = 0; i < pv.size(); ++i) {
        const point& a1 = pv[i];
        const point& a2 = pv[(i + 1) % pv.size()];
        double d1x = a2.x - a1.x, d1y = a2.y - a1.y;
        for (std::size_t j = 0; j < qv.size(); ++j) {
            const point& b1 = qv[j];
            const point& b2 = qv[(j + 1) % qv.size()];
            double d2x = b2.x - b1.x, d2y = b2.y - b1.y;
            double den = d1x * d2y - d1y * d2x;
            double ex = b1.x - a1.x, ey = b1.y - a1.y;
            if (std::abs(den) <= orient_eps) {
                if (std::abs(ex * d1y - ey * d1x) <= 1e-9) {
                    // collinear edges: any shared stretch breaks general position
                    double len2 = d1x * d1x + d1y * d1y;
                    double s1 = (ex * d1x + ey * d1y) / len2;
                    double s2 = ((b2.x - a1.x) * d1x + (b2.y - a1.y) * d1y) / len2;
                    double lo = std::max(0.0, std::min(s1, s2));
                    double hi = std::min(1.0, std::max(s1, s2));
                    if (lo < hi - 1e-12)
                        raise(errc::degenerate_geometry,
                              "petal_decomposition: collinear boundary contact");
                }
                continue;
            }
            double t = (ex * d2y - ey * d2x) / den;
            double u = (ex * d1y - ey * d1x) / den;
            bool in_t = t > -endpoint_eps && t < 1.0 + endpoint_eps;
            bool in_u = u > -endpoint_eps && u < 1.0 + endpoint_eps;
            if (!in_t || !in_u) continue;
            bool strict_t = t > endpoint_eps && t < 1.0 - endpoint_eps;
            bool strict_u = u > endpoint_eps && u < 1.0 - endpoint_eps;
            if (!strict_t || !strict_u)
                raise(errc::degenerate_geometry,
                      "petal_decomposition: boundary contact at a polygon vertex");
            out.push_back({{a1.x + t * d1x, a1.y + t * d1y, -1},
                           static_cast<double>(i) + t,
                           static_cast<double>(j) + u});
        }
    }
    std::sort(out.begin(), out.end(),
              [](const boundary_crossing& a, const boundary_crossing& b) { return a.t_p < b.t_p; });
    return out;
}

// crossings must appear in the same cyclic order along both boundaries
void check_cyclic_consistency(const std::vector<boundary_crossing>& cross) {
    std::size_t m = cross.size();
    std::vector<std::size_t> order(m);
    for (std::size_t i = 0; i < m; ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return cross[a].t_q < cross[b].t_q; });
    std::size_t start = 0;
    while (start < m && order[start] != 0) ++start;
    for (std::size_t i = 0; i < m; ++i) {
        if (order[(start + i) % m] != i)
            raise(errc::degenerate_geometry,
                  "petal_decomposition: boundaries cross out of cyclic order");
    }
}

}  // namespace

petal_decomposition_result petal_decomposition(const convex_polygon& p, const convex_polygon& q) {
    if (p.is_degenerate() || q.is_degenerate())
        raise(errc::invalid_argument, "petal_decomposition: polygons must be two-dimensional");
    if (!overlaps(p, q)) {
        // boundary contact without area is tangential, not merely disjoint
        if (convex_intersection(p, q).has_value())
            raise(errc::degenerate_geometry,
                  "petal_decomposition: tangential boundary contact without overlap");
        raise(errc::invalid_argument, "petal_decomposition: polygons do not overlap");
    }

    auto cross = find_crossings(p, q);
    if (cross.empty())
        raise(errc::containment,
              "petal_decomposition: one polygon contains the other (no boundary crossings)");
    if (cross.size() % 2 != 0)
        raise(errc::degenerate_geometry, "petal_decomposition: odd boundary crossing count");
    check_cyclic_consistency(cross);

    const auto& pv = p.vertices();
    const auto& qv = q.vertices();
    std::size_t m = cross.size();

    std::vector<char> p_arc_outside(m);
    for (std::size_t i = 0; i < m; ++i) {
        double t1 = cross[i].t_p;
        double t2 = cross[(i + 1) % m].t_p;
        if (t2 <= t1) t2 += static_cast<double>(pv.size());
        point probe = param_point(pv, 0.5 * (t1 + t2));
        p_arc_outside[i] = !q.contains(probe, 1e-9);
    }
    for (std::size_t i = 0; i < m; ++i) {
        if (p_arc_outside[i] == p_arc_outside[(i + 1) % m])
            raise(errc::degenerate_geometry,
                  "petal_decomposition: boundary arcs do not alternate");
    }

    // rotate so the arc from crossings[0] to crossings[1] lies outside q
    if (!p_arc_outside[0]) {
        std::rotate(cross.begin(), cross.begin() + 1, cross.end());
    }

    petal_decomposition_result res;
    res.crossings = cross;
    res.k = static_cast<int>(m / 2);
    auto isect = convex_intersection(p, q);
    assert(isect.has_value());
    res.intersection = *isect;

    for (std::size_t i = 0; i < m; i += 2) {
        const boundary_crossing& c0 = cross[i];
        const boundary_crossing& c1 = cross[(i + 1) % m];
        const boundary_crossing& c2 = cross[(i + 2) % m];

        // petal of p between c0 and c1: p-arc outward, q-arc borrowed (reversed)
        simple_polygon px;
        px.boundary.push_back(c0.pos);
        for (const point& v : verts_between(pv, c0.t_p, c1.t_p)) px.boundary.push_back(v);
        px.boundary.push_back(c1.pos);
        auto qarc = verts_between(qv, c0.t_q, c1.t_q);
        for (auto it = qarc.rbegin(); it != qarc.rend(); ++it) px.boundary.push_back(*it);
        if (px.signed_area() <= 0.0)
            raise(errc::degenerate_geometry, "petal_decomposition: collapsed petal of p");
        res.petals_p.push_back(std::move(px));

        // petal of q between c1 and c2: q-arc outward, p-arc borrowed (reversed)
        simple_polygon qy;
        qy.boundary.push_back(c1.pos);
        for (const point& v : verts_between(qv, c1.t_q, c2.t_q)) qy.boundary.push_back(v);
        qy.boundary.push_back(c2.pos);
        auto parc = verts_between(pv, c1.t_p, c2.t_p);
        for (auto it = parc.rbegin(); it != parc.rend(); ++it) qy.boundary.push_back(*it);
        if (qy.signed_area() <= 0.0)
            raise(errc::degenerate_geometry, "petal_decomposition: collapsed petal of q");
        res.petals_q.push_back(std::move(qy));
    }
    assert(static_cast<int>(res.petals_p.size()) == res.k);
    assert(static_cast<int>(res.petals_q.size()) == res.k);
    return res;
}

double union_perimeter(const convex_polygon& p, const convex_polygon& q) {
    if (!overlaps(p, q))
        raise(errc::invalid_argument, "union_perimeter: polygons do not overlap");

    auto cross = find_crossings(p, q);
    if (cross.empty()) {
        // containment: the union boundary is the outer polygon's
        return p.area() >= q.area() ? p.perimeter() : q.perimeter();
    }
    if (cross.size() % 2 != 0)
        raise(errc::degenerate_geometry, "union_perimeter: odd boundary crossing count");

    const auto& pv = p.vertices();
    const auto& qv = q.vertices();
    std::size_t m = cross.size();
    double total = 0.0;

    for (std::size_t i = 0; i < m; ++i) {
        double t1 = cross[i].t_p;
        double t2 = cross[(i + 1) % m].t_p;
        double tm = t2 <= t1 ? t2 + static_cast<double>(pv.size()) : t2;
        point probe = param_point(pv, 0.5 * (t1 + tm));
        if (!q.contains(probe, 1e-9)) total += arc_length(pv, t1, t2);
    }

    std::vector<std::size_t> order(m);
    for (std::size_t i = 0; i < m; ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return cross[a].t_q < cross[b].t_q; });
    for (std::size_t i = 0; i < m; ++i) {
        double t1 = cross[order[i]].t_q;
        double t2 = cross[order[(i + 1) % m]].t_q;
        double tm = t2 <= t1 ? t2 + static_cast<double>(qv.size()) : t2;
        point probe = param_point(qv, 0.5 * (t1 + tm));
        if (!p.contains(probe, 1e-9)) total += arc_length(qv, t1, t2);
    }
    return total;
}

}  // namespace udgmcp
