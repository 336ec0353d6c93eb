#include "searoute/service/corpus.hpp"

#include <charconv>

#include "searoute/error.hpp"
#include "searoute/ingest/route_cache.hpp"

namespace searoute::service {

namespace {

std::optional<geo::GeoPoint> parse_lon_lat(const std::string& text) {
    const auto comma = text.find(',');
    if (comma == std::string::npos) return std::nullopt;
    double lon = 0, lat = 0;
    const char* begin = text.data();
    const char* end = begin + text.size();
    auto r1 = std::from_chars(begin, begin + comma, lon);
    if (r1.ec != std::errc() || r1.ptr != begin + comma) return std::nullopt;
    auto r2 = std::from_chars(begin + comma + 1, end, lat);
    if (r2.ec != std::errc() || r2.ptr != end) return std::nullopt;
    return geo::checked_point(lon, lat);
}

}  // namespace

std::optional<geo::GeoPoint> Corpus::resolve(const std::string& place) const {
    if (auto p = gazetteer.position(place)) return p;
    return parse_lon_lat(place);
}

path::RouteResult Corpus::route(const std::string& from, const std::string& to) const {
    return path::route_between_stops(
        from, to, coast.index, [this](const std::string& id) { return resolve(id); }, *routes, router);
}

std::shared_ptr<const Corpus> load_corpus(const CorpusConfig& config) {
    auto corpus = std::make_shared<Corpus>();
    corpus->coast = ingest::load_coastline(config.coast, config.min_island_area_km2);
    corpus->gazetteer = ingest::load_gazetteer(config.gazetteer);
    corpus->pointcalls = ingest::load_pointcalls(config.pointcalls, corpus->gazetteer);
    corpus->registry_ports =
        config.registry_ports ? ingest::load_id_list(*config.registry_ports) : corpus->gazetteer.ports();
    for (auto& it : itinerary::reconstruct_all(corpus->pointcalls.records, corpus->registry_ports)) {
        const std::string ship = it.ship_id;
        corpus->itineraries.emplace(ship, std::move(it));
    }
    corpus->router = config.router;
    corpus->router.base.min_island_area_km2 = config.min_island_area_km2;
    corpus->router.fingerprint =
        corpus->coast.fingerprint.key() + "@" + std::to_string(config.min_island_area_km2);
    if (config.route_cache) {
        corpus->routes = std::make_shared<ingest::FileRouteCache>(*config.route_cache);
    } else {
        corpus->routes = std::make_shared<path::MemoryRouteStore>();
    }
    return corpus;
}

}  // namespace searoute::service
