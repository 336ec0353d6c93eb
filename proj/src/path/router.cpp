#include "searoute/path/router.hpp"

#include "searoute/error.hpp"
#include "searoute/geo/measure.hpp"

namespace searoute::path {

std::optional<RouteResult> MemoryRouteStore::find(const RouteKey& key) const {
    std::lock_guard lock(mutex_);
    if (auto it = routes_.find(key); it != routes_.end()) return it->second;
    return std::nullopt;
}

RouteResult MemoryRouteStore::store(const RouteKey& key, RouteResult result) {
    std::lock_guard lock(mutex_);
    return routes_.try_emplace(key, std::move(result)).first->second;
}

std::size_t MemoryRouteStore::size() const {
    std::lock_guard lock(mutex_);
    return routes_.size();
}

RouteResult route_between_stops(const std::string& from_id, const std::string& to_id,
                                const CoastIndex& index, const PlaceResolver& resolve,
                                RouteStore& store, const RouterConfig& config) {
    const auto from = resolve(from_id);
    if (!from) throw UnknownPlace("unknown place id: " + from_id);
    const auto to = resolve(to_id);
    if (!to) throw UnknownPlace("unknown place id: " + to_id);

    const RouteKey key{from_id, to_id, config.fingerprint};
    if (auto cached = store.find(key)) {
        cached->cache_hit = true;
        return *cached;
    }
    if (config.reverse_reuse) {
        if (auto cached = store.find(RouteKey{to_id, from_id, config.fingerprint})) {
            cached->path = geo::reversed(std::move(cached->path));
            cached->cache_hit = true;
            return *cached;
        }
    }

    const RouteParams params =
        config.adapt ? adapt_params(geo::haversine_distance(*from, *to), config.base) : config.base;
    RouteResult fresh = compute_sea_route(*from, *to, index, params);
    RouteResult kept = store.store(key, fresh);
    kept.cache_hit = !(kept == fresh);
    return kept;
}

}  // namespace searoute::path
