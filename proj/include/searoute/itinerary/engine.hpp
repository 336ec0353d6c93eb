#pragma once

#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "searoute/itinerary/pointcall.hpp"

namespace searoute::itinerary {

/// Orders one ship's records: documents by the date of their 'O' point
/// (out_date, else in_date; failing that the earliest dated point), ties by
/// data_block_local_id; rows within a document by rank. Documents with no
/// date at all go last with `missing_observation_date` set.
/// Throws std::invalid_argument if the records belong to several ships.
std::vector<Pointcall> order_pointcalls(std::vector<Pointcall> records);

/// Assigns net_route_marker on an ordered sequence.
///
/// An FC point gets Z when the next point is a PC at the same place, or when
/// the next point is a PC elsewhere whose own document later records a PC at
/// the intended place. Then, among consecutive kept points at the same
/// place, the weaker one gets Z ('O' beats PC beats FC; the earlier wins a
/// tie). Everything else gets A. PU points are marked A and never collapse.
std::vector<Pointcall> mark_route(std::vector<Pointcall> sequence);

/// Keyed by (data_block_local_id, rank).
using HistorianMarkers = std::map<std::pair<std::string, int>, Marker>;

/// Assigns a six-level uncertainty to every point of a marked sequence.
///
/// 'O' points and PC points of arrival registers (documents whose 'O' point
/// has only an in_date) are Observed; other PC points are Declared and PU
/// points Invalidated. An FC intention is Confirmed when the next document
/// observes the ship at that place, Unverifiable when it comes after the
/// ship's last observation or targets a place outside `registry_ports`,
/// Invalidated when it targets a registry port the ship is never recorded
/// at afterwards, and Declared otherwise. A point whose historian marker is
/// set and differs from net_route_marker is Controversial.
///
/// `historian` overrides the markers carried by the records when given.
std::vector<Pointcall> qualify_pointcalls(std::vector<Pointcall> sequence,
                                          const std::set<std::string>& registry_ports,
                                          const HistorianMarkers& historian = {});

/// Kept by build_segments: not PU, and not Z unless Controversial.
bool is_retained(const Pointcall& p);

struct TravelSegment {
    std::string ship_id;
    Pointcall from;
    Pointcall to;
    FlexDate departure;
    FlexDate arrival;
    /// False for legs inferred between stops no document connects.
    bool direct = true;
    int travel_uncertainty = 0;
    std::string color;

    friend bool operator==(const TravelSegment&, const TravelSegment&) = default;
};

/// Joins consecutive retained points. A leg is direct when both points come
/// from one document, or when the departure's document names the arrival
/// place later on, or the arrival's document names the departure place
/// earlier on.
std::vector<TravelSegment> build_segments(const std::vector<Pointcall>& qualified);

/// 0, -1, -2 or -3: the worst endpoint decides.
int derive_travel_uncertainty(UncertaintyLevel from, UncertaintyLevel to);

/// green, grey, red, orange for 0, -1, -2, -3. Throws std::out_of_range
/// otherwise.
std::string_view uncertainty_color(int travel_uncertainty);

struct Itinerary {
    std::string ship_id;
    std::vector<Pointcall> sequence;
    std::vector<TravelSegment> segments;

    /// Retained points in sequence order.
    std::vector<Pointcall> stops() const;
};

/// order -> mark -> qualify -> build for one ship.
Itinerary reconstruct_itinerary(std::vector<Pointcall> records, const std::set<std::string>& registry_ports,
                                const HistorianMarkers& historian = {});

/// Splits records by ship_id and reconstructs each, ordered by ship_id.
std::vector<Itinerary> reconstruct_all(const std::vector<Pointcall>& records,
                                       const std::set<std::string>& registry_ports);

nlohmann::json pointcall_to_json(const Pointcall& p);
nlohmann::json segment_to_json(const TravelSegment& s);

/// One JSON object per line, in segment order.
std::string segments_to_jsonl(const std::vector<TravelSegment>& segments);

}  // namespace searoute::itinerary
