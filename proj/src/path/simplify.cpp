#include "searoute/path/simplify.hpp"

#include <algorithm>
#include <optional>
#include <vector>

#include <boost/geometry.hpp>
#include <boost/geometry/index/rtree.hpp>
#include <boost/iterator/function_output_iterator.hpp>

namespace searoute::path {

namespace bg = boost::geometry;
namespace bgi = boost::geometry::index;

using geo::GeoPoint;
using geo::Polyline;

namespace {

using BPoint = bg::model::point<double, 2, bg::cs::cartesian>;
using BBox = bg::model::box<BPoint>;
using Entry = std::pair<BBox, std::size_t>;
using LegTree = bgi::rtree<Entry, bgi::quadratic<16>>;

double orient(GeoPoint p, GeoPoint q, GeoPoint r) {
    return (q.lon - p.lon) * (r.lat - p.lat) - (q.lat - p.lat) * (r.lon - p.lon);
}

double param_on(GeoPoint a, GeoPoint b, GeoPoint c) {
    const double dx = b.lon - a.lon;
    const double dy = b.lat - a.lat;
    const double len2 = dx * dx + dy * dy;
    return len2 == 0.0 ? 0.0 : ((c.lon - a.lon) * dx + (c.lat - a.lat) * dy) / len2;
}

bool opposite(double x, double y) { return (x > 0.0 && y < 0.0) || (x < 0.0 && y > 0.0); }

// Smallest parameter along the closed leg [p1, p2] where it meets [q1, q2].
std::optional<double> contact_on(GeoPoint p1, GeoPoint p2, GeoPoint q1, GeoPoint q2) {
    const double o1 = orient(q1, q2, p1);
    const double o2 = orient(q1, q2, p2);
    const double o3 = orient(p1, p2, q1);
    const double o4 = orient(p1, p2, q2);

    if (o1 == 0.0 && o2 == 0.0) {
        double u1 = param_on(p1, p2, q1);
        double u2 = param_on(p1, p2, q2);
        if (u1 > u2) std::swap(u1, u2);
        const double lo = std::max(u1, 0.0);
        const double hi = std::min(u2, 1.0);
        if (lo <= hi) return lo;
        return std::nullopt;
    }
    if (opposite(o1, o2) && opposite(o3, o4)) return o1 / (o1 - o2);

    std::optional<double> best;
    auto take = [&](double u) {
        if (!best || u < *best) best = u;
    };
    auto within = [](double t) { return t >= 0.0 && t <= 1.0; };
    if (o1 == 0.0 && within(param_on(q1, q2, p1))) take(0.0);
    if (o2 == 0.0 && within(param_on(q1, q2, p2))) take(1.0);
    if (o3 == 0.0) {
        const double u = param_on(p1, p2, q1);
        if (within(u)) take(u);
    }
    if (o4 == 0.0) {
        const double u = param_on(p1, p2, q2);
        if (within(u)) take(u);
    }
    return best;
}

BBox leg_box(GeoPoint a, GeoPoint b) {
    return BBox(BPoint(std::min(a.lon, b.lon), std::min(a.lat, b.lat)),
                BPoint(std::max(a.lon, b.lon), std::max(a.lat, b.lat)));
}

}  // namespace

Polyline simplify_remove_loops(const Polyline& path) {
    if (path.points.size() < 3) return path;
    const auto& pts = path.points;

    std::vector<GeoPoint> res{pts.front()};
    LegTree tree;
    auto entry = [&](std::size_t k) { return Entry(leg_box(res[k], res[k + 1]), k); };

    for (std::size_t j = 1; j < pts.size(); ++j) {
        const GeoPoint end = pts[j];
        if (end == res.back()) continue;
        bool reached = false;

        for (;;) {
            const GeoPoint start = res.back();
            const bool has_adjacent = res.size() >= 2;
            const std::size_t adjacent = has_adjacent ? res.size() - 2 : 0;

            // Doubling back along the previous leg: drop its far vertex.
            if (has_adjacent) {
                const GeoPoint prev = res[adjacent];
                const double dx1 = start.lon - prev.lon, dy1 = start.lat - prev.lat;
                const double dx2 = end.lon - start.lon, dy2 = end.lat - start.lat;
                if (dx1 * dy2 - dy1 * dx2 == 0.0 && dx1 * dx2 + dy1 * dy2 < 0.0) {
                    tree.remove(entry(adjacent));
                    res.pop_back();
                    if (res.back() == end) {
                        reached = true;
                        break;
                    }
                    continue;
                }
            }

            std::optional<std::size_t> hit_leg;
            double hit_u = 0.0;
            tree.query(bgi::intersects(leg_box(start, end)),
                       boost::make_function_output_iterator([&](const Entry& e) {
                           const std::size_t k = e.second;
                           if (has_adjacent && k == adjacent) return;
                           if (hit_leg && k > *hit_leg) return;
                           if (const auto u = contact_on(res[k], res[k + 1], start, end)) {
                               if (!hit_leg || k < *hit_leg) {
                                   hit_leg = k;
                                   hit_u = *u;
                               }
                           }
                       }));
            if (!hit_leg) break;

            const std::size_t k = *hit_leg;
            const GeoPoint a = res[k];
            const GeoPoint b = res[k + 1];
            const GeoPoint cut{a.lon + (b.lon - a.lon) * hit_u, a.lat + (b.lat - a.lat) * hit_u};
            for (std::size_t m = k; m + 1 < res.size(); ++m) tree.remove(entry(m));
            res.resize(k + 1);
            if (!(cut == res[k])) {
                res.push_back(cut);
                tree.insert(entry(k));
            }
            if (res.back() == end) {
                reached = true;
                break;
            }
        }

        if (!reached) {
            res.push_back(end);
            tree.insert(entry(res.size() - 2));
        }
    }

    if (res.size() < 2) res.push_back(res.back());
    return Polyline{std::move(res)};
}

}  // namespace searoute::path
