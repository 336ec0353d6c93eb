#include "searoute/itinerary/pointcall.hpp"

namespace searoute::itinerary {

std::string_view to_string(Function f) {
    switch (f) {
        case Function::Unset: return "";
        case Function::O: return "O";
        case Function::T: return "T";
        case Function::A: return "A";
    }
    return "";
}

std::string_view to_string(Status s) {
    switch (s) {
        case Status::PC: return "PC";
        case Status::FC: return "FC";
        case Status::PU: return "PU";
    }
    return "";
}

std::string_view to_string(Marker m) {
    switch (m) {
        case Marker::Unset: return "";
        case Marker::A: return "A";
        case Marker::Z: return "Z";
    }
    return "";
}

std::string_view to_string(UncertaintyLevel u) {
    switch (u) {
        case UncertaintyLevel::Observed: return "observed";
        case UncertaintyLevel::Confirmed: return "confirmed";
        case UncertaintyLevel::Declared: return "declared";
        case UncertaintyLevel::Controversial: return "controversial";
        case UncertaintyLevel::Unverifiable: return "unverifiable";
        case UncertaintyLevel::Invalidated: return "invalidated";
    }
    return "";
}

std::optional<Function> parse_function(std::string_view text) {
    for (auto f : {Function::Unset, Function::O, Function::T, Function::A}) {
        if (to_string(f) == text) return f;
    }
    return std::nullopt;
}

std::optional<Status> parse_status(std::string_view text) {
    for (auto s : {Status::PC, Status::FC, Status::PU}) {
        if (to_string(s) == text) return s;
    }
    return std::nullopt;
}

std::optional<Marker> parse_marker(std::string_view text) {
    for (auto m : {Marker::Unset, Marker::A, Marker::Z}) {
        if (to_string(m) == text) return m;
    }
    return std::nullopt;
}

std::optional<UncertaintyLevel> parse_uncertainty(std::string_view text) {
    for (auto u : kAllLevels) {
        if (to_string(u) == text) return u;
    }
    return std::nullopt;
}

}  // namespace searoute::itinerary
