#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <vector>

#include "searoute/geo/measure.hpp"
#include "searoute/geo/types.hpp"

namespace searoute::geo {

/// Where a query segment meets a polygon edge. `t` is the parameter along
/// the query segment (0 at its start, 1 at its end).
struct EdgeHit {
    double t = 0.0;
    std::size_t polygon = 0;
    std::size_t edge = 0;
    GeoPoint point;
};

/// The closest coastline location to a query point.
struct CoastProximity {
    std::size_t polygon = 0;
    std::size_t edge = 0;
    GeoPoint point;
    double distance_km = 0.0;
    /// Unit vector (local frame at `point`) pointing out of the polygon.
    Vec2 outward;
};

/// Immutable land-polygon set with an R-tree over every ring edge.
///
/// Polygons are kept in a canonical order (by id, then geometry) so that
/// every query, tie-breaks included, is independent of the order in which
/// they were supplied. Polygons smaller than `min_island_area_km2` are
/// "filtered": they stay in the index but are ignored by every query that
/// honors the island filter, i.e. ships sail straight over them.
///
/// Copies share the same immutable state; concurrent reads are safe.
class CoastIndex {
public:
    static constexpr double kDefaultMinIslandAreaKm2 = 1.0;

    CoastIndex();
    explicit CoastIndex(std::vector<LandPolygon> polygons,
                        double min_island_area_km2 = kDefaultMinIslandAreaKm2);

    const std::vector<LandPolygon>& polygons() const;
    double min_island_area_km2() const;
    bool is_filtered(std::size_t polygon) const;
    std::size_t filtered_count() const;
    std::size_t active_count() const;

    /// True when `p` is inside or on the boundary of a land polygon.
    bool point_on_land(GeoPoint p, bool apply_island_filter = true) const;

    /// True when the open segment (a, b) crosses or touches the boundary or
    /// interior of any unfiltered polygon. Straight line in lon/lat space.
    bool segment_intersects_land(GeoPoint a, GeoPoint b) const;

    /// Every contact between the open segment (a, b) and unfiltered polygon
    /// edges, sorted by `t` (ties by polygon then edge).
    std::vector<EdgeHit> edge_hits(GeoPoint a, GeoPoint b) const;

    /// Nearest unfiltered coastline point, or nullopt for an empty index.
    std::optional<CoastProximity> nearest_coast(GeoPoint p) const;

    /// Outward unit normal of ring edge `edge` of `polygon`, expressed in
    /// `frame`.
    Vec2 edge_outward(std::size_t polygon, std::size_t edge,
                      const LocalFrame& frame) const;

    /// +1 for counter-clockwise rings (lon/lat plane), -1 otherwise.
    int orientation(std::size_t polygon) const;

private:
    struct Impl;
    std::shared_ptr<const Impl> impl_;
};

}  // namespace searoute::geo
