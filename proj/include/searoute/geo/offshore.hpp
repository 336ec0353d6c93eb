#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "searoute/geo/coast_index.hpp"

namespace searoute::geo {

/// Seeded random stream. Draws are derived from raw mt19937_64 output, so a
/// seed produces the same sequence on every standard library.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform in [0, 1).
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    /// Uniformly distributed unit vector.
    Vec2 direction();

private:
    std::mt19937_64 engine_;
};

/// One nautical mile: the offshore line ports are projected onto.
inline constexpr double kDefaultOffshoreKm = 1.852;

struct OffshoreOptions {
    /// Largest allowed displacement from the input point.
    double max_shift_km = 100.0;
    /// Relative tolerance on the resulting coast distance.
    double tolerance = 0.02;
    int refine_iterations = 24;
};

/// Moves a port out to sea, `offshore_km` from the nearest unfiltered
/// coastline. Points already at sea and at least that far from every coast
/// are returned unchanged. Throws NoSeaFound when no sea point exists within
/// `max_shift_km`.
GeoPoint project_offshore(GeoPoint p, const CoastIndex& index,
                          double offshore_km = kDefaultOffshoreKm,
                          const OffshoreOptions& options = {});

/// Replaces a land point by its mirror image across the nearest coastline
/// edge. If the mirror is still on land, random displacements (seaward bias,
/// amplitude doubling every 8 failed draws) are tried up to `max_retries`
/// times before NoSeaFound. Throws std::invalid_argument if `p` is at sea.
GeoPoint reflect_across_coast(GeoPoint p, const CoastIndex& index, Rng& rng, int max_retries = 64);

/// Intermediate sea points for a segment that meets land: for every polygon
/// the segment crosses (in order along a->b), the coast between the first
/// and last contact is offset `offset_km` seawards and sampled every
/// ~`spacing_km`. Of the two ways around the polygon the one staying closer
/// to the segment is used. Points that fall on land are reflected out.
/// Throws NoDetourFound when no usable sea point remains.
std::vector<GeoPoint> coast_detour_points(GeoPoint a, GeoPoint b, const CoastIndex& index,
                                          double offset_km, double spacing_km, Rng& rng,
                                          int max_retries = 64);

}  // namespace searoute::geo
