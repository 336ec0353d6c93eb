#pragma once

#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <string>

#include "searoute/ingest/coastline.hpp"
#include "searoute/ingest/gazetteer.hpp"
#include "searoute/ingest/pointcalls.hpp"
#include "searoute/itinerary/engine.hpp"
#include "searoute/path/router.hpp"

namespace searoute::service {

struct CorpusConfig {
    std::filesystem::path coast;
    std::filesystem::path gazetteer;
    std::filesystem::path pointcalls;
    /// One geo_id per line; defaults to every gazetteer entry of kind port.
    std::optional<std::filesystem::path> registry_ports;
    /// JSON-lines route cache; in-memory when unset.
    std::optional<std::filesystem::path> route_cache;
    double min_island_area_km2 = geo::CoastIndex::kDefaultMinIslandAreaKm2;
    path::RouterConfig router;
};

/// Immutable snapshot of everything the API serves.
struct Corpus {
    ingest::CoastlineLoad coast;
    ingest::Gazetteer gazetteer;
    ingest::PointcallLoad pointcalls;
    std::set<std::string> registry_ports;
    std::map<std::string, itinerary::Itinerary> itineraries;  ///< by ship_id
    path::RouterConfig router;
    /// Shared, internally synchronised.
    std::shared_ptr<path::RouteStore> routes;

    /// Gazetteer id, or "lon,lat" in decimal degrees.
    std::optional<geo::GeoPoint> resolve(const std::string& place) const;
    /// Cached route between two places (ids or "lon,lat").
    path::RouteResult route(const std::string& from, const std::string& to) const;
};

/// Loads and reconstructs every itinerary. The route-cache fingerprint
/// combines the coastline content hash and the island threshold.
std::shared_ptr<const Corpus> load_corpus(const CorpusConfig& config);

/// Holds the current snapshot; readers take a reference-counted copy, a
/// reload swaps the pointer under a mutex.
class CorpusHolder {
public:
    explicit CorpusHolder(std::shared_ptr<const Corpus> corpus) : corpus_(std::move(corpus)) {}

    std::shared_ptr<const Corpus> snapshot() const {
        std::lock_guard lock(mutex_);
        return corpus_;
    }
    void replace(std::shared_ptr<const Corpus> corpus) {
        std::lock_guard lock(mutex_);
        corpus_ = std::move(corpus);
    }

private:
    mutable std::mutex mutex_;
    std::shared_ptr<const Corpus> corpus_;
};

}  // namespace searoute::service
