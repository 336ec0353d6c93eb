#pragma once

#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>

#include "searoute/path/router.hpp"

namespace searoute::ingest {

/// Append-only JSON-lines route store. Each line holds the key and the
/// route. Existing lines are read on open; on duplicate keys the first line
/// wins. Unparsable lines (e.g. a write cut short) are skipped and counted.
class FileRouteCache final : public path::RouteStore {
public:
    explicit FileRouteCache(std::filesystem::path file);

    std::optional<path::RouteResult> find(const path::RouteKey& key) const override;
    path::RouteResult store(const path::RouteKey& key, path::RouteResult result) override;

    std::size_t size() const;
    std::size_t skipped_lines() const { return skipped_; }
    const std::filesystem::path& file() const { return file_; }

private:
    std::filesystem::path file_;
    mutable std::mutex mutex_;
    std::map<path::RouteKey, path::RouteResult> routes_;
    std::ofstream out_;
    std::size_t skipped_ = 0;
};

}  // namespace searoute::ingest
