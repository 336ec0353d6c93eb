#include "searoute/geo/coast_index.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <tuple>

#include <boost/geometry.hpp>
#include <boost/geometry/index/rtree.hpp>
#include <boost/iterator/function_output_iterator.hpp>

namespace searoute::geo {

namespace bg = boost::geometry;
namespace bgi = boost::geometry::index;

namespace {

using BPoint = bg::model::point<double, 2, bg::cs::cartesian>;
using BBox = bg::model::box<BPoint>;
using EdgeEntry = std::pair<BBox, std::uint32_t>;
using EdgeTree = bgi::rtree<EdgeEntry, bgi::rstar<16>>;

constexpr double kBoundaryToleranceDeg = 1e-9;

double orient(GeoPoint p, GeoPoint q, GeoPoint r) {
    return (q.lon - p.lon) * (r.lat - p.lat) - (q.lat - p.lat) * (r.lon - p.lon);
}

// Parameter of `c` projected onto the line through a, b.
double param_on(GeoPoint a, GeoPoint b, GeoPoint c) {
    const double dx = b.lon - a.lon;
    const double dy = b.lat - a.lat;
    const double len2 = dx * dx + dy * dy;
    if (len2 == 0.0) return 0.0;
    return ((c.lon - a.lon) * dx + (c.lat - a.lat) * dy) / len2;
}

bool strictly_inside_unit(double t) { return t > 0.0 && t < 1.0; }

// Contact between the open segment (a, b) and the closed edge [c, d].
// Returns the smallest contact parameter along (a, b).
std::optional<double> open_segment_contact(GeoPoint a, GeoPoint b, GeoPoint c, GeoPoint d) {
    const double d1 = orient(c, d, a);
    const double d2 = orient(c, d, b);
    const double d3 = orient(a, b, c);
    const double d4 = orient(a, b, d);

    if (d1 == 0.0 && d2 == 0.0) {
        // Collinear: overlap of [tc, td] with the open interval (0, 1).
        double tc = param_on(a, b, c);
        double td = param_on(a, b, d);
        if (tc > td) std::swap(tc, td);
        const double lo = std::max(tc, 0.0);
        const double hi = std::min(td, 1.0);
        if (lo < hi || (lo == hi && strictly_inside_unit(lo))) return lo;
        return std::nullopt;
    }

    if (((d1 > 0.0 && d2 < 0.0) || (d1 < 0.0 && d2 > 0.0)) &&
        ((d3 > 0.0 && d4 < 0.0) || (d3 < 0.0 && d4 > 0.0))) {
        return d1 / (d1 - d2);
    }

    std::optional<double> best;
    auto consider = [&](double t) {
        if (strictly_inside_unit(t) && (!best || t < *best)) best = t;
    };
    // An edge vertex lying on the interior of (a, b).
    if (d3 == 0.0) {
        const double t = param_on(a, b, c);
        consider(t);
    }
    if (d4 == 0.0) {
        const double t = param_on(a, b, d);
        consider(t);
    }
    // a or b lying on the edge is an endpoint contact and does not count.
    return best;
}

double point_segment_distance_deg(GeoPoint p, GeoPoint a, GeoPoint b) {
    const Vec2 pp{p.lon, p.lat};
    const Vec2 c = closest_on_segment(pp, {a.lon, a.lat}, {b.lon, b.lat});
    return (pp - c).norm();
}

BBox edge_box(GeoPoint u, GeoPoint v) {
    return BBox(BPoint(std::min(u.lon, v.lon), std::min(u.lat, v.lat)),
                BPoint(std::max(u.lon, v.lon), std::max(u.lat, v.lat)));
}

bool canonical_less(const LandPolygon& x, const LandPolygon& y) {
    if (x.id != y.id) return x.id < y.id;
    if (x.ring.size() != y.ring.size()) return x.ring.size() < y.ring.size();
    for (std::size_t i = 0; i < x.ring.size(); ++i) {
        const auto& p = x.ring[i];
        const auto& q = y.ring[i];
        if (p.lon != q.lon) return p.lon < q.lon;
        if (p.lat != q.lat) return p.lat < q.lat;
    }
    return x.area_km2 < y.area_km2;
}

}  // namespace

struct CoastIndex::Impl {
    std::vector<LandPolygon> polygons;
    std::vector<bool> filtered;
    std::vector<int> orientation;
    std::vector<std::uint32_t> edge_offset;  // first global edge id per polygon
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edge_owner;  // global id -> (polygon, edge)
    EdgeTree tree;
    double min_island_area_km2 = kDefaultMinIslandAreaKm2;
    double max_lon = 180.0;
    std::size_t filtered_count = 0;

    GeoPoint vertex(std::uint32_t global_edge, bool second) const {
        const auto [poly, edge] = edge_owner[global_edge];
        return polygons[poly].ring[edge + (second ? 1 : 0)];
    }
};

CoastIndex::CoastIndex() : CoastIndex(std::vector<LandPolygon>{}) {}

CoastIndex::CoastIndex(std::vector<LandPolygon> polygons, double min_island_area_km2) {
    auto impl = std::make_shared<Impl>();
    std::sort(polygons.begin(), polygons.end(), canonical_less);
    impl->polygons = std::move(polygons);
    impl->min_island_area_km2 = min_island_area_km2;

    std::vector<EdgeEntry> entries;
    double max_lon = -180.0;
    for (std::size_t pi = 0; pi < impl->polygons.size(); ++pi) {
        const auto& poly = impl->polygons[pi];
        const bool filtered = poly.area_km2 < min_island_area_km2;
        impl->filtered.push_back(filtered);
        if (filtered) ++impl->filtered_count;
        impl->orientation.push_back(planar_signed_area_deg2(poly.ring) >= 0.0 ? 1 : -1);
        impl->edge_offset.push_back(static_cast<std::uint32_t>(impl->edge_owner.size()));
        for (std::size_t e = 0; e + 1 < poly.ring.size(); ++e) {
            const auto id = static_cast<std::uint32_t>(impl->edge_owner.size());
            impl->edge_owner.emplace_back(static_cast<std::uint32_t>(pi), static_cast<std::uint32_t>(e));
            entries.emplace_back(edge_box(poly.ring[e], poly.ring[e + 1]), id);
            max_lon = std::max({max_lon, poly.ring[e].lon, poly.ring[e + 1].lon});
        }
    }
    impl->max_lon = max_lon;
    impl->tree = EdgeTree(entries.begin(), entries.end());
    impl_ = std::move(impl);
}

const std::vector<LandPolygon>& CoastIndex::polygons() const { return impl_->polygons; }
double CoastIndex::min_island_area_km2() const { return impl_->min_island_area_km2; }
bool CoastIndex::is_filtered(std::size_t polygon) const { return impl_->filtered.at(polygon); }
std::size_t CoastIndex::filtered_count() const { return impl_->filtered_count; }
std::size_t CoastIndex::active_count() const {
    return impl_->polygons.size() - impl_->filtered_count;
}
int CoastIndex::orientation(std::size_t polygon) const { return impl_->orientation.at(polygon); }

bool CoastIndex::point_on_land(GeoPoint p, bool apply_island_filter) const {
    const Impl& s = *impl_;
    if (s.polygons.empty()) return false;
    auto skip = [&](std::uint32_t poly) { return apply_island_filter && s.filtered[poly]; };

    // Boundary contact counts as land.
    const BBox near(BPoint(p.lon - kBoundaryToleranceDeg, p.lat - kBoundaryToleranceDeg),
                    BPoint(p.lon + kBoundaryToleranceDeg, p.lat + kBoundaryToleranceDeg));
    bool on_boundary = false;
    s.tree.query(bgi::intersects(near), boost::make_function_output_iterator([&](const EdgeEntry& e) {
        if (on_boundary || skip(s.edge_owner[e.second].first)) return;
        if (point_segment_distance_deg(p, s.vertex(e.second, false), s.vertex(e.second, true)) <=
            kBoundaryToleranceDeg) {
            on_boundary = true;
        }
    }));
    if (on_boundary) return true;

    if (p.lon > s.max_lon) return false;
    // Even-odd ray cast towards +lon, parity tracked per polygon.
    const BBox ray(BPoint(p.lon, p.lat), BPoint(s.max_lon, p.lat));
    std::map<std::uint32_t, bool> parity;
    s.tree.query(bgi::intersects(ray), boost::make_function_output_iterator([&](const EdgeEntry& e) {
        const std::uint32_t poly = s.edge_owner[e.second].first;
        if (skip(poly)) return;
        const GeoPoint u = s.vertex(e.second, false);
        const GeoPoint v = s.vertex(e.second, true);
        if ((u.lat > p.lat) == (v.lat > p.lat)) return;
        const double x = u.lon + (p.lat - u.lat) * (v.lon - u.lon) / (v.lat - u.lat);
        if (p.lon < x) parity[poly] = !parity[poly];
    }));
    return std::any_of(parity.begin(), parity.end(), [](const auto& kv) { return kv.second; });
}

std::vector<EdgeHit> CoastIndex::edge_hits(GeoPoint a, GeoPoint b) const {
    const Impl& s = *impl_;
    std::vector<EdgeHit> hits;
    if (a == b || s.polygons.empty()) return hits;
    s.tree.query(bgi::intersects(edge_box(a, b)), boost::make_function_output_iterator([&](const EdgeEntry& e) {
        const auto [poly, edge] = s.edge_owner[e.second];
        if (s.filtered[poly]) return;
        const auto t = open_segment_contact(a, b, s.vertex(e.second, false), s.vertex(e.second, true));
        if (!t) return;
        hits.push_back({*t, poly, edge, GeoPoint{a.lon + (b.lon - a.lon) * *t, a.lat + (b.lat - a.lat) * *t}});
    }));
    std::sort(hits.begin(), hits.end(), [](const EdgeHit& x, const EdgeHit& y) {
        return std::tie(x.t, x.polygon, x.edge) < std::tie(y.t, y.polygon, y.edge);
    });
    return hits;
}

bool CoastIndex::segment_intersects_land(GeoPoint a, GeoPoint b) const {
    if (a == b || impl_->polygons.empty()) return false;
    const Impl& s = *impl_;
    bool hit = false;
    s.tree.query(bgi::intersects(edge_box(a, b)), boost::make_function_output_iterator([&](const EdgeEntry& e) {
        if (hit || s.filtered[s.edge_owner[e.second].first]) return;
        if (open_segment_contact(a, b, s.vertex(e.second, false), s.vertex(e.second, true))) hit = true;
    }));
    if (hit) return true;
    // No boundary contact: the open segment lies wholly inside or outside.
    return point_on_land({(a.lon + b.lon) * 0.5, (a.lat + b.lat) * 0.5}, true);
}

Vec2 CoastIndex::edge_outward(std::size_t polygon, std::size_t edge, const LocalFrame& frame) const {
    const auto& ring = impl_->polygons.at(polygon).ring;
    const Vec2 d = frame.to_plane(ring.at(edge + 1)) - frame.to_plane(ring.at(edge));
    const Vec2 right = d.perp_right().unit();
    return impl_->orientation[polygon] > 0 ? right : right * -1.0;
}

std::optional<CoastProximity> CoastIndex::nearest_coast(GeoPoint p) const {
    const Impl& s = *impl_;
    if (s.polygons.size() == s.filtered_count) return std::nullopt;
    const LocalFrame frame(p);
    const Vec2 origin = frame.to_plane(p);

    double radius_km = 8.0;
    for (;;) {
        const double dlat = radius_km / kKmPerDegree;
        const double coslat = std::max(std::cos(deg2rad(p.lat)), 1e-6);
        const double dlon = radius_km / (kKmPerDegree * coslat);
        const bool whole_world = dlat >= 180.0 || dlon >= 360.0;
        const BBox box = whole_world ? BBox(BPoint(-1e9, -1e9), BPoint(1e9, 1e9))
                                     : BBox(BPoint(p.lon - dlon, p.lat - dlat), BPoint(p.lon + dlon, p.lat + dlat));

        double best = std::numeric_limits<double>::infinity();
        std::uint32_t best_edge = 0;
        Vec2 best_point;
        s.tree.query(bgi::intersects(box), boost::make_function_output_iterator([&](const EdgeEntry& e) {
            if (s.filtered[s.edge_owner[e.second].first]) return;
            const Vec2 u = frame.to_plane(s.vertex(e.second, false));
            const Vec2 v = frame.to_plane(s.vertex(e.second, true));
            const Vec2 c = closest_on_segment(origin, u, v);
            const double d = (c - origin).norm();
            if (d < best || (d == best && e.second < best_edge)) {
                best = d;
                best_edge = e.second;
                best_point = c;
            }
        }));
        if (best <= radius_km || (whole_world && std::isfinite(best))) {
            const auto [poly, edge] = s.edge_owner[best_edge];
            CoastProximity out;
            out.polygon = poly;
            out.edge = edge;
            out.point = frame.to_geo(best_point);
            out.distance_km = best;

            // At a vertex the outward direction is the mean of both edge normals.
            const auto& ring = s.polygons[poly].ring;
            const LocalFrame foot_frame(out.point);
            Vec2 normal = edge_outward(poly, edge, foot_frame);
            const std::size_t edges = ring.size() - 1;
            const Vec2 u = frame.to_plane(ring[edge]);
            const Vec2 v = frame.to_plane(ring[edge + 1]);
            constexpr double kVertexEps = 1e-9;
            if ((best_point - u).norm() <= kVertexEps) {
                normal = normal + edge_outward(poly, (edge + edges - 1) % edges, foot_frame);
            } else if ((best_point - v).norm() <= kVertexEps) {
                normal = normal + edge_outward(poly, (edge + 1) % edges, foot_frame);
            }
            out.outward = normal.norm() > 1e-12 ? normal.unit() : edge_outward(poly, edge, foot_frame);
            return out;
        }
        if (whole_world) return std::nullopt;
        radius_km *= 2.0;
    }
}

}  // namespace searoute::geo
