#pragma once

#include <cstdint>

#include "searoute/geo/coast_index.hpp"
#include "searoute/geo/offshore.hpp"
#include "searoute/geo/types.hpp"

namespace searoute::path {

using geo::CoastIndex;
using geo::GeoPoint;
using geo::Polyline;

struct RouteParams {
    double offset_km = 5.0;     ///< buffer width along the coast
    double spacing_km = 10.0;   ///< distance between intermediate points
    double offshore_km = geo::kDefaultOffshoreKm;
    double min_island_area_km2 = CoastIndex::kDefaultMinIslandAreaKm2;
    int max_depth = 12;
    int max_retries = 64;
    std::uint64_t rng_seed = 1787;
    /// Number of times offset and spacing are doubled after a failed attempt.
    int escalation_levels = 4;
    /// Upper bound on recursive sub-segment evaluations per attempt.
    int work_budget = 20000;

    /// Throws std::invalid_argument unless all distances are positive and
    /// max_depth >= 1.
    void validate() const;
};

/// Offset and spacing for a leg of the given straight-line length:
/// (5, 10) km up to 60 km, (20, 20) km from 150 km, linear in between.
/// Every other field is copied from `base`.
RouteParams adapt_params(double straight_distance_km, const RouteParams& base = {});

struct RouteResult {
    Polyline path;
    double offset_used_km = 0.0;
    double spacing_used_km = 0.0;
    double duration_ms = 0.0;
    int recursion_depth_reached = 0;
    std::size_t point_count = 0;
    bool cache_hit = false;

    friend bool operator==(const RouteResult&, const RouteResult&) = default;
};

/// Land-avoiding route between two positions.
///
/// Both ends are first projected onto the offshore line. The straight leg is
/// kept when it misses land; otherwise the crossed coast section is replaced
/// by offset detour points and every sub-leg is routed recursively. A leg
/// shorter than the spacing that still meets land is split at the reflected
/// midpoint of its land portion. A failed attempt is retried with doubled
/// offset and spacing. The result is loop-simplified and deterministic for
/// a given seed.
///
/// Throws InvalidEndpoint if an end cannot be moved to sea, NoRouteFound once
/// every escalation level has failed.
RouteResult compute_sea_route(GeoPoint from, GeoPoint to, const CoastIndex& index,
                              const RouteParams& params);

}  // namespace searoute::path
