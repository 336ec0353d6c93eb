#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "searoute/service/corpus.hpp"

namespace searoute::service {

struct ItineraryQuery {
    /// Matches ship_id or ship_name.
    std::optional<std::string> ship;
    std::optional<std::string> ship_id;
    std::optional<std::string> ship_name;
    std::optional<std::string> captain_id;
    /// Matched against captain_id: the pointcall table carries no separate name.
    std::optional<std::string> captain_name;
    std::optional<std::string> flag;
    std::optional<std::string> homeport;
    std::optional<double> tonnage_min;
    std::optional<double> tonnage_max;
    /// ISO dates, inclusive.
    std::optional<std::string> date_from;
    std::optional<std::string> date_to;

    /// Throws EmptyCriteria unless an identity field is set.
    void validate() const;
};

struct ItinerarySummary {
    std::string ship_id;
    std::string ship_name;
    std::string captain;
    std::string first_date;  ///< ISO, "" when unknown
    std::string last_date;
    std::size_t stop_count = 0;
    int worst_travel_uncertainty = 0;

    nlohmann::json to_json() const;
};

struct SearchPage {
    std::vector<ItinerarySummary> items;
    std::size_t total = 0;
    /// Opaque; empty on the last page.
    std::string next_cursor;

    nlohmann::json to_json() const;
};

inline constexpr std::size_t kPageSize = 50;

/// Identity fields match case-insensitively as substrings (ship_id and
/// captain_id exactly when given as such). Results are ordered by ship_id.
/// Throws EmptyCriteria, or BadCursor for a cursor this corpus did not issue.
SearchPage search_itineraries(const Corpus& corpus, const ItineraryQuery& query, const std::string& cursor = {},
                              std::size_t page_size = kPageSize);

/// FeatureCollection: one LineString per segment (geometry null with a
/// `route_error` property when no sea route is found), then one Point per
/// stop. Dates are ISO. Segments are restricted to those departing (or, when
/// undated, arriving) within the optional range. Throws UnknownShip.
nlohmann::json get_itinerary(const Corpus& corpus, const std::string& ship_id,
                             const std::optional<std::string>& date_from = {},
                             const std::optional<std::string>& date_to = {});

/// Up to two itineraries, tagged "a" and "b" (also set as each feature's
/// `track` property). Throws TooManyItineraries or UnknownShip.
nlohmann::json compare_itineraries(const Corpus& corpus, const std::vector<std::string>& ship_ids);

/// Route feature between two places (gazetteer ids or "lon,lat").
nlohmann::json route_feature(const Corpus& corpus, const std::string& from, const std::string& to);

/// Lower-cases ASCII and the Latin-1 range of UTF-8.
std::string fold_case(const std::string& text);

}  // namespace searoute::service
