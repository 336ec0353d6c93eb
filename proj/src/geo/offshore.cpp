#include "searoute/geo/offshore.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <sstream>
#include <stdexcept>

#include "searoute/error.hpp"

namespace searoute::geo {

Vec2 Rng::direction() {
    const double theta = 2.0 * kPi * uniform();
    return {std::cos(theta), std::sin(theta)};
}

namespace {

// Offset `from` by `v` km in the tangent frame at `from`.
GeoPoint displace(GeoPoint from, Vec2 v) {
    const LocalFrame frame(from);
    return frame.to_geo(v);
}

struct Candidate {
    GeoPoint point;
    double coast_km = 0.0;
    bool at_sea = false;
};

Candidate evaluate(GeoPoint c, const CoastIndex& index) {
    Candidate out{c, 0.0, !index.point_on_land(c, true)};
    if (const auto near = index.nearest_coast(c)) out.coast_km = near->distance_km;
    else out.coast_km = std::numeric_limits<double>::infinity();
    return out;
}

}  // namespace

GeoPoint project_offshore(GeoPoint p, const CoastIndex& index, double offshore_km,
                          const OffshoreOptions& options) {
    const auto near = index.nearest_coast(p);
    if (!near) return p;
    const bool on_land = index.point_on_land(p, true);
    if (!on_land && near->distance_km >= offshore_km) return p;

    const double tol = options.tolerance * offshore_km;
    auto within_budget = [&](GeoPoint c) { return haversine_distance(p, c) <= options.max_shift_km; };
    auto acceptable = [&](const Candidate& c) {
        return c.at_sea && std::abs(c.coast_km - offshore_km) <= tol && within_budget(c.point);
    };

    // Push a candidate out along the local coast normal until it sits on the
    // offshore line.
    auto refine = [&](GeoPoint start) -> std::optional<GeoPoint> {
        GeoPoint c = start;
        for (int i = 0; i < options.refine_iterations; ++i) {
            const Candidate cand = evaluate(c, index);
            if (acceptable(cand)) return c;
            const auto n = index.nearest_coast(c);
            if (!n) return std::nullopt;
            Vec2 dir = n->outward;
            if (cand.at_sea && n->distance_km > 1e-9) {
                dir = LocalFrame(n->point).to_plane(c).unit();
            }
            c = displace(n->point, dir * offshore_km);
        }
        return std::nullopt;
    };

    Vec2 seed_dir = near->outward;
    if (!on_land && near->distance_km > 1e-9) seed_dir = LocalFrame(near->point).to_plane(p).unit();
    if (auto c = refine(displace(near->point, seed_dir * offshore_km))) return *c;

    // Radial search for narrow waters where the normal push oscillates.
    const double step = std::max(offshore_km * 0.5, 0.1);
    std::optional<Candidate> best;
    for (double r = step; r <= options.max_shift_km + 1e-9; r += step) {
        const int directions = std::clamp(static_cast<int>(2.0 * kPi * r / step), 16, 256);
        std::vector<Candidate> ring_hits;
        for (int k = 0; k < directions; ++k) {
            const double theta = 2.0 * kPi * k / directions;
            const GeoPoint c = displace(p, Vec2{std::cos(theta), std::sin(theta)} * r);
            if (!c.valid()) continue;
            const Candidate cand = evaluate(c, index);
            if (!cand.at_sea) continue;
            if (acceptable(cand)) return cand.point;
            ring_hits.push_back(cand);
        }
        for (const auto& cand : ring_hits) {
            if (auto c = refine(cand.point)) return *c;
            if (!best || std::abs(cand.coast_km - offshore_km) < std::abs(best->coast_km - offshore_km)) best = cand;
        }
        if (best) break;
    }
    if (best) return best->point;

    std::ostringstream msg;
    msg << "no sea point within " << options.max_shift_km << " km of (" << p.lon << ", " << p.lat << ")";
    throw NoSeaFound(msg.str());
}

GeoPoint reflect_across_coast(GeoPoint p, const CoastIndex& index, Rng& rng, int max_retries) {
    if (!index.point_on_land(p, true)) {
        throw std::invalid_argument("reflect_across_coast: point is not on land");
    }
    const auto near = index.nearest_coast(p);
    if (!near) throw NoSeaFound("reflect_across_coast: index has no coastline");

    const LocalFrame frame(near->point);
    const Vec2 inside = frame.to_plane(p);
    const Vec2 mirror = inside * -1.0;
    if (inside.norm() > 1e-9) {
        const GeoPoint m = frame.to_geo(mirror);
        if (!index.point_on_land(m, true)) return m;
    }

    double amplitude = std::max(2.0 * near->distance_km, 0.5);
    for (int attempt = 0; attempt < max_retries; ++attempt) {
        if (attempt > 0 && attempt % 8 == 0) amplitude *= 2.0;
        const Vec2 jitter = near->outward * 0.5 + rng.direction();
        const GeoPoint c = frame.to_geo(mirror + jitter * amplitude);
        if (c.valid() && !index.point_on_land(c, true)) return c;
    }
    std::ostringstream msg;
    msg << "no sea point found around (" << p.lon << ", " << p.lat << ") after " << max_retries
        << " draws";
    throw NoSeaFound(msg.str());
}

namespace {

double edge_param(GeoPoint a, GeoPoint b, GeoPoint c) {
    const double dx = b.lon - a.lon;
    const double dy = b.lat - a.lat;
    const double len2 = dx * dx + dy * dy;
    if (len2 == 0.0) return 0.0;
    return ((c.lon - a.lon) * dx + (c.lat - a.lat) * dy) / len2;
}

// Coastline walk between two contact points. `direction` is +1 when the walk
// follows the ring order, -1 otherwise.
struct CoastArc {
    std::vector<GeoPoint> points;
    std::vector<double> cumulative_km;
    int direction = 1;

    double length() const { return cumulative_km.back(); }

    GeoPoint at(double l) const {
        l = std::clamp(l, 0.0, length());
        auto it = std::upper_bound(cumulative_km.begin(), cumulative_km.end(), l);
        std::size_t i = it == cumulative_km.end() ? points.size() - 1
                                                  : static_cast<std::size_t>(it - cumulative_km.begin());
        if (i == 0) return points.front();
        const double seg = cumulative_km[i] - cumulative_km[i - 1];
        const double f = seg > 0.0 ? (l - cumulative_km[i - 1]) / seg : 0.0;
        const GeoPoint& u = points[i - 1];
        const GeoPoint& v = points[i];
        return {u.lon + (v.lon - u.lon) * f, u.lat + (v.lat - u.lat) * f};
    }
};

CoastArc make_arc(std::vector<GeoPoint> pts, int direction) {
    CoastArc arc;
    arc.direction = direction;
    arc.cumulative_km.reserve(pts.size());
    double acc = 0.0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (i > 0) acc += haversine_distance(pts[i - 1], pts[i]);
        arc.cumulative_km.push_back(acc);
    }
    arc.points = std::move(pts);
    return arc;
}

std::pair<CoastArc, CoastArc> arcs_between(const LandPolygon& poly, const EdgeHit& in, const EdgeHit& out) {
    const auto& ring = poly.ring;
    const std::size_t n = ring.size() - 1;
    const std::size_t ei = in.edge;
    const std::size_t eo = out.edge;
    const double s_in = edge_param(ring[ei], ring[ei + 1], in.point);
    const double s_out = edge_param(ring[eo], ring[eo + 1], out.point);

    std::vector<GeoPoint> fwd{in.point};
    if (!(ei == eo && s_out >= s_in)) {
        std::size_t j = (ei + 1) % n;
        for (;;) {
            fwd.push_back(ring[j]);
            if (j == eo) break;
            j = (j + 1) % n;
        }
    }
    fwd.push_back(out.point);

    std::vector<GeoPoint> bwd{in.point};
    if (!(ei == eo && s_out <= s_in)) {
        std::size_t j = ei;
        const std::size_t stop = (eo + 1) % n;
        for (;;) {
            bwd.push_back(ring[j]);
            if (j == stop) break;
            j = (j + n - 1) % n;
        }
    }
    bwd.push_back(out.point);
    return {make_arc(std::move(fwd), 1), make_arc(std::move(bwd), -1)};
}

struct OffsetSamples {
    std::vector<GeoPoint> points;
    double max_deviation_km = 0.0;
};

OffsetSamples offset_samples(const CoastArc& arc, const CoastIndex& index, std::size_t polygon,
                             std::size_t fallback_edge, double offset_km, double spacing_km,
                             GeoPoint a, GeoPoint b) {
    OffsetSamples out;
    const double length = arc.length();
    const std::size_t intervals = std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(length / spacing_km)));
    const double window = std::max(spacing_km * 0.5, 1e-3);
    const int side = index.orientation(polygon) * arc.direction;

    const GeoPoint mid{(a.lon + b.lon) * 0.5, (a.lat + b.lat) * 0.5};
    const LocalFrame chord_frame(mid);
    const Vec2 pa = chord_frame.to_plane(a);
    const Vec2 dir = (chord_frame.to_plane(b) - pa).unit();

    for (std::size_t k = 0; k <= intervals; ++k) {
        const double l = length * static_cast<double>(k) / static_cast<double>(intervals);
        const GeoPoint s = arc.at(l);
        const LocalFrame frame(s);
        const Vec2 tangent = frame.to_plane(arc.at(l + window)) - frame.to_plane(arc.at(l - window));
        Vec2 normal;
        if (tangent.norm() > 1e-9) {
            normal = tangent.perp_right().unit() * (side > 0 ? 1.0 : -1.0);
        } else {
            normal = index.edge_outward(polygon, fallback_edge, frame);
        }
        const GeoPoint c = frame.to_geo(normal * offset_km);
        out.points.push_back(c);
        const Vec2 rel = chord_frame.to_plane(c) - pa;
        out.max_deviation_km = std::max(out.max_deviation_km, std::abs(dir.cross(rel)));
    }
    return out;
}

}  // namespace

std::vector<GeoPoint> coast_detour_points(GeoPoint a, GeoPoint b, const CoastIndex& index,
                                          double offset_km, double spacing_km, Rng& rng,
                                          int max_retries) {
    const auto hits = index.edge_hits(a, b);
    if (hits.empty()) {
        throw NoDetourFound("segment has no coastline contact to detour around");
    }

    // First and last contact per polygon, polygons taken in order of first contact.
    std::map<std::size_t, std::pair<EdgeHit, EdgeHit>> span;
    std::vector<std::size_t> order;
    for (const auto& h : hits) {
        auto it = span.find(h.polygon);
        if (it == span.end()) {
            span.emplace(h.polygon, std::make_pair(h, h));
            order.push_back(h.polygon);
        } else {
            it->second.second = h;
        }
    }

    std::vector<GeoPoint> result;
    for (const std::size_t poly : order) {
        const auto& [in, out] = span.at(poly);
        const auto [fwd, bwd] = arcs_between(index.polygons()[poly], in, out);
        OffsetSamples sides[2] = {
            offset_samples(fwd, index, poly, in.edge, offset_km, spacing_km, a, b),
            offset_samples(bwd, index, poly, in.edge, offset_km, spacing_km, a, b),
        };
        const int first = sides[0].max_deviation_km <= sides[1].max_deviation_km ? 0 : 1;

        for (const int pick : {first, 1 - first}) {
            std::vector<GeoPoint> kept;
            for (const GeoPoint& c : sides[pick].points) {
                if (!c.valid()) continue;
                GeoPoint q = c;
                if (index.point_on_land(q, true)) {
                    try {
                        q = reflect_across_coast(q, index, rng, max_retries);
                    } catch (const NoSeaFound&) {
                        continue;
                    }
                }
                if (kept.empty() || !(kept.back() == q)) kept.push_back(q);
            }
            if (!kept.empty()) {
                result.insert(result.end(), kept.begin(), kept.end());
                break;
            }
        }
    }
    if (result.empty()) {
        throw NoDetourFound("offset coast section yields no sea points");
    }
    return result;
}

}  // namespace searoute::geo
