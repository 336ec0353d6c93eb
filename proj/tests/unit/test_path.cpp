#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "searoute/error.hpp"
#include "searoute/geo/measure.hpp"
#include "searoute/path/route_json.hpp"
#include "searoute/path/router.hpp"
#include "searoute/path/simplify.hpp"

using namespace searoute;
using namespace searoute::geo;
using namespace searoute::path;

namespace {

const GeoPoint kOrigin{-3.0, 47.0};

}  // namespace

TEST_CASE("adapt_params anchors and clamps") {
    const RouteParams base;
    auto p = adapt_params(0, base);
    CHECK(p.offset_km == 5.0);
    CHECK(p.spacing_km == 10.0);
    p = adapt_params(60, base);
    CHECK(p.offset_km == 5.0);
    CHECK(p.spacing_km == 10.0);
    p = adapt_params(150, base);
    CHECK(p.offset_km == 20.0);
    CHECK(p.spacing_km == 20.0);
    p = adapt_params(5000, base);
    CHECK(p.offset_km == 20.0);
    CHECK(p.spacing_km == 20.0);
    p = adapt_params(105, base);
    CHECK(p.offset_km == doctest::Approx(12.5));
    CHECK(p.spacing_km == doctest::Approx(15.0));

    RouteParams custom;
    custom.rng_seed = 5;
    custom.max_depth = 3;
    p = adapt_params(100, custom);
    CHECK(p.rng_seed == 5);
    CHECK(p.max_depth == 3);
}

TEST_CASE("RouteParams validation") {
    RouteParams p;
    CHECK_NOTHROW(p.validate());
    p.offset_km = 0;
    CHECK_THROWS_AS(p.validate(), std::invalid_argument);
    p = {};
    p.max_depth = 0;
    CHECK_THROWS_AS(p.validate(), std::invalid_argument);
}

TEST_CASE("degenerate route") {
    const auto sq = fixtures::square("sq", kOrigin, 10);
    CoastIndex index({sq});
    const GeoPoint port = sq.ring[1];
    const auto r = compute_sea_route(port, port, index, RouteParams{});
    REQUIRE(r.path.points.size() == 2);
    CHECK(r.path.points[0] == r.path.points[1]);
    CHECK(r.path.points[0] == project_offshore(port, index));
    CHECK(r.point_count == 2);
}

TEST_CASE("open ocean route is the straight leg") {
    const auto sq = fixtures::square("sq", kOrigin, 10);
    CoastIndex index({sq});
    const GeoPoint a = fixtures::offset(kOrigin, -100, 100), b = fixtures::offset(kOrigin, 100, 120);
    const auto r = compute_sea_route(a, b, index, RouteParams{});
    REQUIRE(r.path.points.size() == 2);
    CHECK(r.path.points.front() == a);
    CHECK(r.path.points.back() == b);
    CHECK(r.offset_used_km == 5.0);
    CHECK(r.spacing_used_km == 10.0);
    CHECK(r.duration_ms >= 0.0);
}

TEST_CASE("route around a square island") {
    const auto sq = fixtures::square("sq", kOrigin, 30);
    CoastIndex index({sq});
    const GeoPoint a = fixtures::offset(kOrigin, -40, 0), b = fixtures::offset(kOrigin, 40, 0);
    const auto r = compute_sea_route(a, b, index, RouteParams{});
    CHECK(r.path.points.size() > 2);
    CHECK(r.path.points.front() == a);
    CHECK(r.path.points.back() == b);
    CHECK(oracle::path_land_free(r.path.points, {sq}));
    CHECK(oracle::path_is_simple(r.path.points));
    CHECK(r.point_count == r.path.points.size());
    CHECK(r.recursion_depth_reached >= 1);
}

TEST_CASE("ports on the coast") {
    const auto sq = fixtures::square("sq", kOrigin, 30);
    CoastIndex index({sq});
    const GeoPoint west{(sq.ring[3].lon + sq.ring[0].lon) / 2, (sq.ring[3].lat + sq.ring[0].lat) / 2};
    const GeoPoint east{(sq.ring[1].lon + sq.ring[2].lon) / 2, (sq.ring[1].lat + sq.ring[2].lat) / 2};
    const auto r = compute_sea_route(west, east, index, RouteParams{});
    CHECK(oracle::path_land_free(r.path.points, {sq}));
    CHECK(oracle::distance_to_coast_km(r.path.points.front(), {sq}) == doctest::Approx(1.852).epsilon(0.1));
    CHECK(oracle::distance_to_coast_km(r.path.points.back(), {sq}) == doctest::Approx(1.852).epsilon(0.1));
}

TEST_CASE("islets below the threshold are sailed over") {
    const auto islet = fixtures::square("islet", kOrigin, 0.7);
    CoastIndex index({islet});
    const GeoPoint a = fixtures::offset(kOrigin, -20, 0), b = fixtures::offset(kOrigin, 20, 0);
    const auto r = compute_sea_route(a, b, index, RouteParams{});
    CHECK(r.path.points.size() == 2);
    RouteParams strict;
    strict.min_island_area_km2 = 0.1;
    const auto r2 = compute_sea_route(a, b, index, strict);
    CHECK(r2.path.points.size() > 2);
    CHECK(oracle::path_land_free(r2.path.points, {islet}, 0.1));
}

TEST_CASE("landlocked endpoint") {
    CoastIndex index({fixtures::square("continent", kOrigin, 500)});
    CHECK_THROWS_AS(compute_sea_route(kOrigin, fixtures::offset(kOrigin, 400, 0), index, RouteParams{}),
                    InvalidEndpoint);
}

TEST_CASE("routes are deterministic") {
    const auto arch = fixtures::archipelago(5);
    CoastIndex index(arch.polygons);
    const GeoPoint a = fixtures::offset(arch.south_west, 5, 150), b = fixtures::offset(arch.south_west, 295, 160);
    const auto r1 = compute_sea_route(a, b, index, RouteParams{});
    const auto r2 = compute_sea_route(a, b, index, RouteParams{});
    CHECK(r1.path.points == r2.path.points);
    CHECK(oracle::path_land_free(r1.path.points, arch.polygons));
}

TEST_CASE("archipelago routes avoid land") {
    const auto arch = fixtures::archipelago(9);
    CoastIndex index(arch.polygons);
    std::mt19937_64 rng(4);
    std::uniform_real_distribution<double> lon(arch.south_west.lon, arch.north_east.lon);
    std::uniform_real_distribution<double> lat(arch.south_west.lat, arch.north_east.lat);
    for (int i = 0; i < 40; ++i) {
        const GeoPoint a{lon(rng), lat(rng)}, b{lon(rng), lat(rng)};
        const auto params = adapt_params(haversine_distance(a, b));
        const auto r = compute_sea_route(a, b, index, params);
        REQUIRE(oracle::path_land_free(r.path.points, arch.polygons));
        REQUIRE(oracle::path_is_simple(r.path.points));
    }
}

TEST_CASE("simplify removes a figure-eight crossing") {
    const Polyline eight{{{0, 0}, {2, 0}, {2, 1}, {1, -1}, {0, -1}}};
    REQUIRE_FALSE(oracle::path_is_simple(eight.points));
    const auto s = simplify_remove_loops(eight);
    CHECK(oracle::path_is_simple(s.points));
    CHECK(s.points.front() == eight.points.front());
    CHECK(s.points.back() == eight.points.back());
    // Loop cut at the crossing (1.5, 0).
    REQUIRE(s.points.size() == 4);
    CHECK(s.points[1].lon == doctest::Approx(1.5));
    CHECK(s.points[1].lat == doctest::Approx(0.0));
}

TEST_CASE("simplify leaves simple and collinear paths alone") {
    const Polyline simple{{{0, 0}, {1, 0}, {1, 1}, {2, 1}, {2, 3}}};
    CHECK(simplify_remove_loops(simple).points == simple.points);
    const Polyline collinear{{{0, 0}, {1, 1}, {2, 2}}};
    CHECK(simplify_remove_loops(collinear).points == collinear.points);
    const Polyline two{{{0, 0}, {1, 1}}};
    CHECK(simplify_remove_loops(two).points == two.points);
}

TEST_CASE("simplify removes a backtracking spike") {
    const Polyline spike{{{0, 0}, {2, 0}, {1, 0}, {1, 1}}};
    const auto s = simplify_remove_loops(spike);
    CHECK(oracle::path_is_simple(s.points));
    CHECK(s.points.front() == spike.points.front());
    CHECK(s.points.back() == spike.points.back());
}

TEST_CASE("simplify random walks") {
    std::mt19937_64 rng(77);
    std::normal_distribution<double> step(0.0, 1.0);
    for (int trial = 0; trial < 100; ++trial) {
        Polyline p;
        GeoPoint cur{0, 0};
        const int n = 5 + trial * 2;
        for (int i = 0; i < n; ++i) {
            p.points.push_back(cur);
            cur = {cur.lon + step(rng) * 0.1 + 0.02, cur.lat + step(rng) * 0.1};
        }
        const auto s = simplify_remove_loops(p);
        REQUIRE(oracle::path_is_simple(s.points));
        REQUIRE(s.points.front() == p.points.front());
        REQUIRE(s.points.back() == p.points.back());
        REQUIRE(s.points.size() <= p.points.size());
    }
}

TEST_CASE("route GeoJSON round trip") {
    RouteResult r;
    r.path = Polyline{{{-2.0, 48.7}, {-2.5, 48.8}, {-2.76, 48.55}}};
    r.offset_used_km = 5;
    r.spacing_used_km = 10;
    r.duration_ms = 3.5;
    r.recursion_depth_reached = 2;
    r.point_count = 3;
    const auto j = route_to_geojson(r);
    CHECK(j["type"] == "Feature");
    CHECK(j["geometry"]["type"] == "LineString");
    CHECK(j["properties"]["duration_ms"] == 3.5);
    CHECK(route_from_geojson(j) == r);
    const auto k = route_to_geojson(r, {.include_duration = false});
    CHECK_FALSE(k["properties"].contains("duration_ms"));
    nlohmann::json bad = j;
    bad["geometry"]["type"] = "Point";
    CHECK_THROWS_AS(route_from_geojson(bad), UnsupportedGeometry);
}

TEST_CASE("route_between_stops caching") {
    const auto sq = fixtures::square("sq", kOrigin, 30);
    CoastIndex index({sq});
    const std::map<std::string, GeoPoint> places{
        {"A", fixtures::offset(kOrigin, -40, 0)}, {"B", fixtures::offset(kOrigin, 40, 0)}};
    PlaceResolver resolve = [&](const std::string& id) -> std::optional<GeoPoint> {
        auto it = places.find(id);
        if (it == places.end()) return std::nullopt;
        return it->second;
    };
    MemoryRouteStore store;
    RouterConfig config;
    config.fingerprint = "fp1";

    const auto first = route_between_stops("A", "B", index, resolve, store, config);
    CHECK_FALSE(first.cache_hit);
    const auto second = route_between_stops("A", "B", index, resolve, store, config);
    CHECK(second.cache_hit);
    CHECK(second.path.points == first.path.points);
    CHECK(second.duration_ms == first.duration_ms);
    CHECK(store.size() == 1);

    CHECK_THROWS_AS(route_between_stops("A", "XXXX", index, resolve, store, config), UnknownPlace);
    CHECK_THROWS_AS(route_between_stops("XXXX", "A", index, resolve, store, config), UnknownPlace);

    SUBCASE("reverse reuse") {
        config.reverse_reuse = true;
        const auto back = route_between_stops("B", "A", index, resolve, store, config);
        CHECK(back.cache_hit);
        CHECK(back.path.points == reversed(first.path).points);
        CHECK(oracle::path_land_free(back.path.points, {sq}));
    }
    SUBCASE("no reverse reuse computes afresh") {
        const auto back = route_between_stops("B", "A", index, resolve, store, config);
        CHECK_FALSE(back.cache_hit);
        CHECK(oracle::path_land_free(back.path.points, {sq}));
        CHECK(store.size() == 2);
    }
    SUBCASE("fingerprint change misses") {
        config.fingerprint = "fp2";
        CHECK_FALSE(route_between_stops("A", "B", index, resolve, store, config).cache_hit);
    }
}
