#pragma once

#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <tuple>

#include "searoute/path/sea_route.hpp"

namespace searoute::path {

/// Cache key: ordered pair of gazetteer ids plus the coastline fingerprint.
struct RouteKey {
    std::string from;
    std::string to;
    std::string fingerprint;

    friend bool operator<(const RouteKey& a, const RouteKey& b) {
        return std::tie(a.from, a.to, a.fingerprint) < std::tie(b.from, b.to, b.fingerprint);
    }
    friend bool operator==(const RouteKey&, const RouteKey&) = default;
};

/// Persistence behind route_between_stops. Implementations must be safe for
/// concurrent use; `store` keeps the first result written for a key and
/// returns whichever result is now cached.
class RouteStore {
public:
    virtual ~RouteStore() = default;
    virtual std::optional<RouteResult> find(const RouteKey& key) const = 0;
    virtual RouteResult store(const RouteKey& key, RouteResult result) = 0;
};

class MemoryRouteStore final : public RouteStore {
public:
    std::optional<RouteResult> find(const RouteKey& key) const override;
    RouteResult store(const RouteKey& key, RouteResult result) override;
    std::size_t size() const;

private:
    mutable std::mutex mutex_;
    std::map<RouteKey, RouteResult> routes_;
};

using PlaceResolver = std::function<std::optional<GeoPoint>(const std::string& id)>;

struct RouterConfig {
    RouteParams base;
    /// Pick offset/spacing from the straight-line distance of each leg.
    bool adapt = true;
    /// Serve (B, A) from a cached (A, B) by reversing it.
    bool reverse_reuse = false;
    std::string fingerprint;
};

/// Memoised compute_sea_route between two gazetteer places. Cached results
/// come back with `cache_hit` set and the original `duration_ms`.
/// Throws UnknownPlace when an id does not resolve.
RouteResult route_between_stops(const std::string& from_id, const std::string& to_id,
                                const CoastIndex& index, const PlaceResolver& resolve,
                                RouteStore& store, const RouterConfig& config);

}  // namespace searoute::path
