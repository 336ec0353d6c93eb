#include "searoute/service/api.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

#include "searoute/error.hpp"
#include "searoute/path/route_json.hpp"

namespace searoute::service {

using itinerary::Itinerary;
using itinerary::Pointcall;
using itinerary::TravelSegment;
using nlohmann::json;

namespace {

bool contains(const std::string& haystack, const std::string& needle) {
    return fold_case(haystack).find(fold_case(needle)) != std::string::npos;
}

std::string iso(const itinerary::FlexDate& d) { return itinerary::flexdate_to_iso(d); }

json iso_or_null(const itinerary::FlexDate& d) {
    if (!d.known()) return nullptr;
    return iso(d);
}

std::string attribute(const Itinerary& it, const std::string& key) {
    for (const auto& p : it.sequence) {
        if (p.function == itinerary::Function::O) {
            if (auto a = p.attributes.find(key); a != p.attributes.end()) return a->second;
        }
    }
    for (const auto& p : it.sequence) {
        if (auto a = p.attributes.find(key); a != p.attributes.end()) return a->second;
    }
    return {};
}

template <typename Field>
std::string first_field(const Itinerary& it, Field field) {
    for (const auto& p : it.sequence) {
        if (p.function == itinerary::Function::O && !(p.*field).empty()) return p.*field;
    }
    for (const auto& p : it.sequence) {
        if (!(p.*field).empty()) return p.*field;
    }
    return {};
}

ItinerarySummary summarize(const Itinerary& it) {
    ItinerarySummary s;
    s.ship_id = it.ship_id;
    s.ship_name = first_field(it, &Pointcall::ship_name);
    s.captain = first_field(it, &Pointcall::captain_id);
    const auto stops = it.stops();
    s.stop_count = stops.size();
    for (const auto& p : stops) {
        for (const auto* d : {&p.out_date, &p.in_date}) {
            if (!d->known()) continue;
            const std::string v = iso(*d);
            if (s.first_date.empty() || v < s.first_date) s.first_date = v;
            if (s.last_date.empty() || v > s.last_date) s.last_date = v;
        }
    }
    for (const auto& seg : it.segments) s.worst_travel_uncertainty = std::min(s.worst_travel_uncertainty, seg.travel_uncertainty);
    return s;
}

bool matches(const Itinerary& it, const ItinerarySummary& s, const ItineraryQuery& q) {
    if (q.ship && !contains(s.ship_id, *q.ship) && !contains(s.ship_name, *q.ship)) return false;
    if (q.ship_id && fold_case(s.ship_id) != fold_case(*q.ship_id)) return false;
    if (q.ship_name && !contains(s.ship_name, *q.ship_name)) return false;
    if (q.captain_id && fold_case(s.captain) != fold_case(*q.captain_id)) return false;
    if (q.captain_name && !contains(s.captain, *q.captain_name)) return false;
    if (q.flag && !contains(attribute(it, "flag"), *q.flag)) return false;
    if (q.homeport && !contains(attribute(it, "homeport"), *q.homeport)) return false;
    if (q.tonnage_min || q.tonnage_max) {
        const std::string t = attribute(it, "tonnage");
        char* end = nullptr;
        const double value = std::strtod(t.c_str(), &end);
        if (t.empty() || end != t.c_str() + t.size()) return false;
        if (q.tonnage_min && value < *q.tonnage_min) return false;
        if (q.tonnage_max && value > *q.tonnage_max) return false;
    }
    if (q.date_from && (s.last_date.empty() || s.last_date < *q.date_from)) return false;
    if (q.date_to && (s.first_date.empty() || s.first_date > *q.date_to)) return false;
    return true;
}

std::string encode_cursor(std::size_t offset) {
    static constexpr char hex[] = "0123456789abcdef";
    const std::string plain = "v1:" + std::to_string(offset);
    std::string out;
    for (unsigned char c : plain) {
        out += hex[c >> 4];
        out += hex[c & 0xf];
    }
    return out;
}

std::size_t decode_cursor(const std::string& cursor) {
    auto nibble = [&](char c) -> int {
        if (c >= '0' && c <= '9') return c - '0';
        if (c >= 'a' && c <= 'f') return c - 'a' + 10;
        throw BadCursor("malformed cursor");
    };
    if (cursor.size() % 2 != 0) throw BadCursor("malformed cursor");
    std::string plain;
    for (std::size_t i = 0; i < cursor.size(); i += 2) {
        plain += static_cast<char>(nibble(cursor[i]) * 16 + nibble(cursor[i + 1]));
    }
    if (plain.rfind("v1:", 0) != 0 || plain.size() == 3) throw BadCursor("malformed cursor");
    std::size_t offset = 0;
    for (std::size_t i = 3; i < plain.size(); ++i) {
        if (plain[i] < '0' || plain[i] > '9') throw BadCursor("malformed cursor");
        offset = offset * 10 + static_cast<std::size_t>(plain[i] - '0');
    }
    return offset;
}

const Itinerary& find_ship(const Corpus& corpus, const std::string& ship_id) {
    auto it = corpus.itineraries.find(ship_id);
    if (it == corpus.itineraries.end()) throw UnknownShip("unknown ship_id: " + ship_id);
    return it->second;
}

bool in_range(const std::string& date, const std::optional<std::string>& from, const std::optional<std::string>& to) {
    if (!from && !to) return true;
    if (date.empty()) return false;
    return (!from || date >= *from) && (!to || date <= *to);
}

std::string anchor_date(const Pointcall& p) {
    return iso(p.out_date.known() ? p.out_date : p.in_date);
}

json segment_feature(const Corpus& corpus, const ItinerarySummary& s, const TravelSegment& seg, std::size_t index) {
    json props = {
        {"kind", "segment"},
        {"segment_index", index},
        {"ship_id", seg.ship_id},
        {"ship_name", s.ship_name},
        {"captain", s.captain},
        {"departure_iso", iso_or_null(seg.departure)},
        {"arrival_iso", iso_or_null(seg.arrival)},
        {"travel_uncertainty", seg.travel_uncertainty},
        {"color", seg.color},
        {"direct", seg.direct},
        {"tonnage", seg.from.attributes.count("tonnage") ? json(seg.from.attributes.at("tonnage")) : json(nullptr)},
        {"flag", seg.from.attributes.count("flag") ? json(seg.from.attributes.at("flag")) : json(nullptr)},
        {"from_geo_id", seg.from.geo_id},
        {"from_toponym", seg.from.toponym},
        {"to_geo_id", seg.to.geo_id},
        {"to_toponym", seg.to.toponym},
        {"from_uncertainty", to_string(seg.from.uncertainty.value_or(itinerary::UncertaintyLevel::Declared))},
        {"to_uncertainty", to_string(seg.to.uncertainty.value_or(itinerary::UncertaintyLevel::Declared))},
    };
    json geometry = nullptr;
    try {
        const auto route = corpus.route(seg.from.geo_id, seg.to.geo_id);
        geometry = {{"type", "LineString"}, {"coordinates", path::line_coordinates(route.path)}};
        props["offset_used_km"] = route.offset_used_km;
        props["spacing_used_km"] = route.spacing_used_km;
        props["point_count"] = route.point_count;
    } catch (const Error& e) {
        props["route_error"] = e.kind();
        props["route_error_message"] = e.what();
    }
    return {{"type", "Feature"}, {"geometry", std::move(geometry)}, {"properties", std::move(props)}};
}

json stop_feature(const Corpus& corpus, const Pointcall& p, std::size_t index) {
    const auto* place = corpus.gazetteer.find(p.geo_id);
    json props = {
        {"kind", "stop"},
        {"stop_index", index},
        {"toponym", p.toponym},
        {"geo_id", p.geo_id},
        {"uncertainty", to_string(p.uncertainty.value_or(itinerary::UncertaintyLevel::Declared))},
        {"in_date", iso_or_null(p.in_date)},
        {"out_date", iso_or_null(p.out_date)},
        {"lat", place ? json(place->position.lat) : json(nullptr)},
        {"data_block_local_id", p.data_block_local_id},
        {"rank", p.rank},
        {"status", to_string(p.status)},
        {"net_route_marker", to_string(p.net_route_marker)},
    };
    json geometry = nullptr;
    if (place) geometry = {{"type", "Point"}, {"coordinates", {place->position.lon, place->position.lat}}};
    return {{"type", "Feature"}, {"geometry", std::move(geometry)}, {"properties", std::move(props)}};
}

}  // namespace

std::string fold_case(const std::string& text) {
    std::string out = text;
    for (std::size_t i = 0; i < out.size(); ++i) {
        auto c = static_cast<unsigned char>(out[i]);
        if (c >= 'A' && c <= 'Z') {
            out[i] = static_cast<char>(c + 32);
        } else if (c == 0xC3 && i + 1 < out.size()) {
            auto n = static_cast<unsigned char>(out[i + 1]);
            if (n >= 0x80 && n <= 0x9E && n != 0x97) out[i + 1] = static_cast<char>(n + 0x20);
            ++i;
        }
    }
    return out;
}

void ItineraryQuery::validate() const {
    auto set = [](const std::optional<std::string>& v) { return v && !v->empty(); };
    if (!set(ship) && !set(ship_id) && !set(ship_name) && !set(captain_id) && !set(captain_name)) {
        throw EmptyCriteria("a ship or captain criterion is required");
    }
}

json ItinerarySummary::to_json() const {
    return {
        {"ship_id", ship_id},
        {"ship_name", ship_name},
        {"captain", captain},
        {"first_date", first_date.empty() ? json(nullptr) : json(first_date)},
        {"last_date", last_date.empty() ? json(nullptr) : json(last_date)},
        {"stop_count", stop_count},
        {"worst_travel_uncertainty", worst_travel_uncertainty},
    };
}

json SearchPage::to_json() const {
    json items_json = json::array();
    for (const auto& s : items) items_json.push_back(s.to_json());
    return {{"items", std::move(items_json)},
            {"total", total},
            {"next_cursor", next_cursor.empty() ? json(nullptr) : json(next_cursor)}};
}

SearchPage search_itineraries(const Corpus& corpus, const ItineraryQuery& query, const std::string& cursor,
                              std::size_t page_size) {
    query.validate();
    std::vector<ItinerarySummary> all;
    for (const auto& [ship, it] : corpus.itineraries) {
        auto s = summarize(it);
        if (matches(it, s, query)) all.push_back(std::move(s));
    }
    const std::size_t offset = cursor.empty() ? 0 : decode_cursor(cursor);
    if (offset > all.size()) throw BadCursor("cursor beyond the result set");
    SearchPage page;
    page.total = all.size();
    const std::size_t end = std::min(all.size(), offset + page_size);
    page.items.assign(all.begin() + static_cast<std::ptrdiff_t>(offset), all.begin() + static_cast<std::ptrdiff_t>(end));
    if (end < all.size()) page.next_cursor = encode_cursor(end);
    return page;
}

json get_itinerary(const Corpus& corpus, const std::string& ship_id, const std::optional<std::string>& date_from,
                   const std::optional<std::string>& date_to) {
    const Itinerary& it = find_ship(corpus, ship_id);
    const ItinerarySummary summary = summarize(it);
    json features = json::array();
    std::set<std::pair<std::string, int>> endpoints;
    for (std::size_t i = 0; i < it.segments.size(); ++i) {
        const auto& seg = it.segments[i];
        const std::string date = seg.departure.known() ? iso(seg.departure) : iso(seg.arrival);
        if (!in_range(date, date_from, date_to)) continue;
        endpoints.insert({seg.from.data_block_local_id, seg.from.rank});
        endpoints.insert({seg.to.data_block_local_id, seg.to.rank});
        features.push_back(segment_feature(corpus, summary, seg, i));
    }
    const auto stops = it.stops();
    for (std::size_t i = 0; i < stops.size(); ++i) {
        const auto& p = stops[i];
        const bool listed = endpoints.count({p.data_block_local_id, p.rank}) > 0;
        if (!in_range(anchor_date(p), date_from, date_to) && !listed) continue;
        features.push_back(stop_feature(corpus, p, i));
    }
    return {{"type", "FeatureCollection"},
            {"ship_id", summary.ship_id},
            {"ship_name", summary.ship_name},
            {"features", std::move(features)}};
}

json compare_itineraries(const Corpus& corpus, const std::vector<std::string>& ship_ids) {
    if (ship_ids.size() > 2) throw TooManyItineraries("at most two itineraries can be compared");
    if (ship_ids.empty()) throw EmptyCriteria("no itinerary to compare");
    static constexpr const char* tags[] = {"a", "b"};
    json out = json::array();
    for (std::size_t i = 0; i < ship_ids.size(); ++i) {
        json fc = get_itinerary(corpus, ship_ids[i]);
        for (auto& f : fc["features"]) f["properties"]["track"] = tags[i];
        out.push_back({{"tag", tags[i]}, {"ship_id", ship_ids[i]}, {"collection", std::move(fc)}});
    }
    return {{"itineraries", std::move(out)}};
}

json route_feature(const Corpus& corpus, const std::string& from, const std::string& to) {
    json f = path::route_to_geojson(corpus.route(from, to));
    f["properties"]["from"] = from;
    f["properties"]["to"] = to;
    return f;
}

}  // namespace searoute::service
