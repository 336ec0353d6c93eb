#pragma once

#include <stdexcept>
#include <string>

namespace searoute {

/// Base class for every recoverable failure raised by the library. `kind()`
/// is a stable machine-readable tag (used as the `error` field of API
/// responses and in CLI diagnostics).
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& message)
        : std::runtime_error(message), kind_(std::move(kind)) {}

    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

#define SEAROUTE_DEFINE_ERROR(Name)                                          \
    class Name : public ::searoute::Error {                                   \
    public:                                                                  \
        explicit Name(const std::string& message) : Error(#Name, message) {} \
    }

// geo-core
SEAROUTE_DEFINE_ERROR(NoSeaFound);
SEAROUTE_DEFINE_ERROR(NoDetourFound);

// pathfinder
SEAROUTE_DEFINE_ERROR(NoRouteFound);
SEAROUTE_DEFINE_ERROR(InvalidEndpoint);
SEAROUTE_DEFINE_ERROR(UnknownPlace);

// itinerary-engine
SEAROUTE_DEFINE_ERROR(MalformedDate);
SEAROUTE_DEFINE_ERROR(UnknownDate);

// data-ingest
SEAROUTE_DEFINE_ERROR(UnsupportedGeometry);
SEAROUTE_DEFINE_ERROR(CorruptFile);
SEAROUTE_DEFINE_ERROR(DuplicateId);
SEAROUTE_DEFINE_ERROR(BadCoordinates);
SEAROUTE_DEFINE_ERROR(SchemaMismatch);

// route-service
SEAROUTE_DEFINE_ERROR(EmptyCriteria);
SEAROUTE_DEFINE_ERROR(UnknownShip);
SEAROUTE_DEFINE_ERROR(TooManyItineraries);
SEAROUTE_DEFINE_ERROR(BadCursor);

#undef SEAROUTE_DEFINE_ERROR

}  // namespace searoute
