#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "searoute/itinerary/flexdate.hpp"

namespace searoute::itinerary {

/// Only 'O' (the observation point of a document) carries meaning; 'T' and
/// 'A' are kept as read.
enum class Function { Unset, O, T, A };

/// Past event, declared future intention, intention known unrealised.
enum class Status { PC, FC, PU };

enum class Marker { Unset, A, Z };

enum class UncertaintyLevel { Observed, Confirmed, Declared, Controversial, Unverifiable, Invalidated };

inline constexpr UncertaintyLevel kAllLevels[] = {
    UncertaintyLevel::Observed,      UncertaintyLevel::Confirmed,    UncertaintyLevel::Declared,
    UncertaintyLevel::Controversial, UncertaintyLevel::Unverifiable, UncertaintyLevel::Invalidated,
};

std::string_view to_string(Function f);
std::string_view to_string(Status s);
std::string_view to_string(Marker m);
std::string_view to_string(UncertaintyLevel u);

/// Inverse of to_string; std::nullopt for anything else. Empty text maps to
/// Unset for Function and Marker.
std::optional<Function> parse_function(std::string_view text);
std::optional<Status> parse_status(std::string_view text);
std::optional<Marker> parse_marker(std::string_view text);
std::optional<UncertaintyLevel> parse_uncertainty(std::string_view text);

/// One stopover row of a source document.
struct Pointcall {
    std::string data_block_local_id;
    std::string ship_id;
    std::string ship_name;
    std::string captain_id;
    std::string toponym;
    std::string geo_id;
    FlexDate out_date;
    FlexDate in_date;
    int rank = 1;
    Function function = Function::Unset;
    Status status = Status::PC;
    Marker net_route_marker = Marker::Unset;
    Marker historian_marker = Marker::Unset;
    std::optional<UncertaintyLevel> uncertainty;
    /// tonnage, flag, homeport, crew size ... as read.
    std::map<std::string, std::string> attributes;
    /// Set by order_pointcalls when the document has no datable point.
    bool missing_observation_date = false;

    friend bool operator==(const Pointcall&, const Pointcall&) = default;
};

}  // namespace searoute::itinerary
