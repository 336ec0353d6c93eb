#include "searoute/path/sea_route.hpp"

#include <algorithm>
#include <chrono>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "searoute/error.hpp"
#include "searoute/geo/measure.hpp"
#include "searoute/path/simplify.hpp"

namespace searoute::path {

using geo::haversine_distance;
using geo::LocalFrame;
using geo::Rng;

void RouteParams::validate() const {
    if (!(offset_km > 0.0) || !(spacing_km > 0.0) || !(offshore_km > 0.0) || !(min_island_area_km2 > 0.0)) {
        throw std::invalid_argument("route parameters: distances and areas must be positive");
    }
    if (max_depth < 1) throw std::invalid_argument("route parameters: max_depth must be >= 1");
    if (max_retries < 1) throw std::invalid_argument("route parameters: max_retries must be >= 1");
    if (escalation_levels < 0) throw std::invalid_argument("route parameters: escalation_levels must be >= 0");
}

RouteParams adapt_params(double straight_distance_km, const RouteParams& base) {
    constexpr double kShortKm = 60.0;
    constexpr double kLongKm = 150.0;
    const double t = std::clamp((straight_distance_km - kShortKm) / (kLongKm - kShortKm), 0.0, 1.0);
    RouteParams out = base;
    out.offset_km = 5.0 + 15.0 * t;
    out.spacing_km = 10.0 + 10.0 * t;
    return out;
}

namespace {

struct BudgetExceeded {};

class Router {
public:
    Router(const CoastIndex& index, const RouteParams& params, double offset_km, double spacing_km,
           std::uint64_t seed)
        : index_(index), params_(params), offset_km_(offset_km), spacing_km_(spacing_km), rng_(seed) {}

    std::vector<GeoPoint> route(GeoPoint s, GeoPoint e, int depth) {
        deepest_ = std::max(deepest_, depth);
        if (!index_.segment_intersects_land(s, e)) return {s, e};
        if (depth >= params_.max_depth || ++work_ > params_.work_budget) throw BudgetExceeded{};

        std::vector<GeoPoint> waypoints{s};
        if (haversine_distance(s, e) < spacing_km_) {
            waypoints.push_back(split_point(s, e));
        } else {
            for (const GeoPoint& p : geo::coast_detour_points(s, e, index_, offset_km_, spacing_km_, rng_,
                                                              params_.max_retries)) {
                if (!(p == waypoints.back()) && !(p == e)) waypoints.push_back(p);
            }
        }
        waypoints.push_back(e);

        std::vector<GeoPoint> out{s};
        for (std::size_t i = 0; i + 1 < waypoints.size(); ++i) {
            const auto leg = route(waypoints[i], waypoints[i + 1], depth + 1);
            out.insert(out.end(), leg.begin() + 1, leg.end());
        }
        return out;
    }

    int deepest() const { return deepest_; }

private:
    // Sea point to split a short leg at: the reflected middle of its land part.
    GeoPoint split_point(GeoPoint s, GeoPoint e) {
        const auto hits = index_.edge_hits(s, e);
        double t = 0.5;
        if (!hits.empty()) {
            const double t_end = hits.size() >= 2 ? hits[1].t : hits.front().t;
            t = 0.5 * (hits.front().t + t_end);
        }
        const GeoPoint m{s.lon + (e.lon - s.lon) * t, s.lat + (e.lat - s.lat) * t};
        if (index_.point_on_land(m, true)) {
            return geo::reflect_across_coast(m, index_, rng_, params_.max_retries);
        }
        // Grazing contact: step off the coast along its normal.
        const auto near = index_.nearest_coast(m);
        if (!near) throw BudgetExceeded{};
        const double push = std::max(offset_km_ * 0.25, 0.05);
        const GeoPoint c = LocalFrame(near->point).to_geo(near->outward * push);
        if (index_.point_on_land(c, true)) throw BudgetExceeded{};
        return c;
    }

    const CoastIndex& index_;
    const RouteParams& params_;
    double offset_km_;
    double spacing_km_;
    Rng rng_;
    int deepest_ = 0;
    int work_ = 0;
};

bool land_free(const Polyline& path, const CoastIndex& index) {
    for (std::size_t i = 0; i + 1 < path.points.size(); ++i) {
        if (index.segment_intersects_land(path.points[i], path.points[i + 1])) return false;
    }
    return true;
}

}  // namespace

RouteResult compute_sea_route(GeoPoint from, GeoPoint to, const CoastIndex& base_index,
                              const RouteParams& params) {
    params.validate();
    const auto started = std::chrono::steady_clock::now();

    std::optional<CoastIndex> refiltered;
    if (params.min_island_area_km2 != base_index.min_island_area_km2()) {
        refiltered.emplace(base_index.polygons(), params.min_island_area_km2);
    }
    const CoastIndex& index = refiltered ? *refiltered : base_index;

    GeoPoint start;
    GeoPoint end;
    try {
        start = geo::project_offshore(from, index, params.offshore_km);
        end = geo::project_offshore(to, index, params.offshore_km);
    } catch (const NoSeaFound& e) {
        throw InvalidEndpoint(std::string("offshore projection failed: ") + e.what());
    }

    auto finish = [&](Polyline path, double offset, double spacing, int depth) {
        RouteResult r;
        r.path = std::move(path);
        r.offset_used_km = offset;
        r.spacing_used_km = spacing;
        r.recursion_depth_reached = depth;
        r.point_count = r.path.points.size();
        r.duration_ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();
        return r;
    };

    if (start == end) return finish(Polyline{{start, end}}, params.offset_km, params.spacing_km, 0);

    double offset = params.offset_km;
    double spacing = params.spacing_km;
    for (int level = 0; level <= params.escalation_levels; ++level) {
        const std::uint64_t seed = params.rng_seed + 0x9E3779B97F4A7C15ULL * static_cast<std::uint64_t>(level);
        Router router(index, params, offset, spacing, seed);
        try {
            Polyline raw{router.route(start, end, 1)};
            raw = geo::dedupe_consecutive(std::move(raw));
            Polyline simple = geo::dedupe_consecutive(simplify_remove_loops(raw));
            // Splices lie on already-checked legs; re-check guards rounding at the cut points.
            if (!land_free(simple, index)) simple = raw;
            return finish(std::move(simple), offset, spacing, router.deepest());
        } catch (const BudgetExceeded&) {
        } catch (const NoDetourFound&) {
        } catch (const NoSeaFound&) {
        }
        offset *= 2.0;
        spacing *= 2.0;
    }

    std::ostringstream msg;
    msg << "no land-free route from (" << from.lon << ", " << from.lat << ") to (" << to.lon << ", " << to.lat
        << ") after " << params.escalation_levels << " escalations";
    throw NoRouteFound(msg.str());
}

}  // namespace searoute::path
