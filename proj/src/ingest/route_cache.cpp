#include "searoute/ingest/route_cache.hpp"

#include <fstream>

#include "searoute/error.hpp"
#include "searoute/path/route_json.hpp"

namespace searoute::ingest {

using nlohmann::json;

FileRouteCache::FileRouteCache(std::filesystem::path file) : file_(std::move(file)) {
    if (std::ifstream in(file_); in) {
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            try {
                const json j = json::parse(line);
                path::RouteKey key{j.at("from"), j.at("to"), j.at("fingerprint")};
                routes_.try_emplace(std::move(key), path::route_from_geojson(j.at("route")));
            } catch (const std::exception&) {
                ++skipped_;
            }
        }
    }
    out_.open(file_, std::ios::app);
    if (!out_) throw CorruptFile("cannot open route cache " + file_.string());
}

std::optional<path::RouteResult> FileRouteCache::find(const path::RouteKey& key) const {
    std::lock_guard lock(mutex_);
    if (auto it = routes_.find(key); it != routes_.end()) return it->second;
    return std::nullopt;
}

path::RouteResult FileRouteCache::store(const path::RouteKey& key, path::RouteResult result) {
    std::lock_guard lock(mutex_);
    auto [it, fresh] = routes_.try_emplace(key, std::move(result));
    if (fresh) {
        it->second.cache_hit = false;
        const json line = {{"from", key.from},
                           {"to", key.to},
                           {"fingerprint", key.fingerprint},
                           {"route", path::route_to_geojson(it->second)}};
        out_ << line.dump() << '\n';
        out_.flush();
    }
    return it->second;
}

std::size_t FileRouteCache::size() const {
    std::lock_guard lock(mutex_);
    return routes_.size();
}

}  // namespace searoute::ingest
