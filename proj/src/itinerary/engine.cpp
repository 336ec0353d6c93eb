#include "searoute/itinerary/engine.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace searoute::itinerary {

namespace {

struct Document {
    std::string id;
    std::vector<Pointcall> rows;
    std::optional<FlexDate> anchor;
};

const FlexDate* date_of(const Pointcall& p) {
    if (p.out_date.known()) return &p.out_date;
    if (p.in_date.known()) return &p.in_date;
    return nullptr;
}

std::optional<FlexDate> document_anchor(const std::vector<Pointcall>& rows) {
    for (const auto& p : rows) {
        if (p.function == Function::O) {
            if (const FlexDate* d = date_of(p)) return *d;
        }
    }
    const FlexDate* best = nullptr;
    for (const auto& p : rows) {
        for (const FlexDate* d : {&p.out_date, &p.in_date}) {
            if (d->known() && (!best || flexdate_compare(*d, *best) < 0)) best = d;
        }
    }
    if (!best) return std::nullopt;
    return *best;
}

// Index of the first and one-past-last row of each document in a sequence.
struct Span {
    std::size_t begin, end;
};

std::vector<Span> document_spans(const std::vector<Pointcall>& seq) {
    std::vector<Span> spans;
    for (std::size_t i = 0; i < seq.size(); ++i) {
        if (spans.empty() || seq[i].data_block_local_id != seq[spans.back().begin].data_block_local_id) {
            spans.push_back({i, i + 1});
        } else {
            spans.back().end = i + 1;
        }
    }
    return spans;
}

std::vector<std::size_t> document_of_rows(const std::vector<Span>& spans, std::size_t n) {
    std::vector<std::size_t> doc(n);
    for (std::size_t d = 0; d < spans.size(); ++d) {
        for (std::size_t i = spans[d].begin; i < spans[d].end; ++i) doc[i] = d;
    }
    return doc;
}

int priority(const Pointcall& p) {
    if (p.function == Function::O) return 2;
    return p.status == Status::PC ? 1 : 0;
}

bool arrival_register(const std::vector<Pointcall>& seq, Span span) {
    for (std::size_t i = span.begin; i < span.end; ++i) {
        if (seq[i].function == Function::O) return seq[i].in_date.known() && !seq[i].out_date.known();
    }
    return false;
}

int severity(UncertaintyLevel u) {
    switch (u) {
        case UncertaintyLevel::Controversial: return -3;
        case UncertaintyLevel::Invalidated: return -2;
        case UncertaintyLevel::Declared:
        case UncertaintyLevel::Unverifiable: return -1;
        case UncertaintyLevel::Observed:
        case UncertaintyLevel::Confirmed: return 0;
    }
    return 0;
}

nlohmann::json date_json(const FlexDate& d) {
    if (!d.known()) return nullptr;
    return d.raw;
}

nlohmann::json iso_json(const FlexDate& d) {
    if (!d.known()) return nullptr;
    return flexdate_to_iso(d);
}

}  // namespace

std::vector<Pointcall> order_pointcalls(std::vector<Pointcall> records) {
    for (const auto& p : records) {
        if (p.ship_id != records.front().ship_id) {
            throw std::invalid_argument("order_pointcalls: records of several ships");
        }
    }
    std::vector<Document> docs;
    std::map<std::string, std::size_t> by_id;
    for (auto& p : records) {
        auto [it, fresh] = by_id.try_emplace(p.data_block_local_id, docs.size());
        if (fresh) docs.push_back({p.data_block_local_id, {}, std::nullopt});
        docs[it->second].rows.push_back(std::move(p));
    }
    for (auto& doc : docs) {
        std::stable_sort(doc.rows.begin(), doc.rows.end(),
                         [](const Pointcall& a, const Pointcall& b) { return a.rank < b.rank; });
        doc.anchor = document_anchor(doc.rows);
        if (!doc.anchor) {
            for (auto& p : doc.rows) p.missing_observation_date = true;
        }
    }
    std::sort(docs.begin(), docs.end(), [](const Document& a, const Document& b) {
        if (!a.anchor || !b.anchor) {
            if (a.anchor) return true;
            if (b.anchor) return false;
            return a.id < b.id;
        }
        const auto c = flexdate_compare(*a.anchor, *b.anchor);
        if (c != 0) return c < 0;
        return a.id < b.id;
    });
    std::vector<Pointcall> out;
    out.reserve(records.size());
    for (auto& doc : docs) {
        for (auto& p : doc.rows) out.push_back(std::move(p));
    }
    return out;
}

std::vector<Pointcall> mark_route(std::vector<Pointcall> seq) {
    const auto spans = document_spans(seq);
    const auto doc = document_of_rows(spans, seq.size());
    for (auto& p : seq) p.net_route_marker = Marker::A;

    for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
        if (seq[i].status != Status::FC) continue;
        const Pointcall& next = seq[i + 1];
        if (next.status != Status::PC) continue;
        if (next.geo_id == seq[i].geo_id) {
            seq[i].net_route_marker = Marker::Z;
            continue;
        }
        const Span s = spans[doc[i + 1]];
        for (std::size_t j = i + 2; j < s.end; ++j) {
            if (seq[j].status == Status::PC && seq[j].geo_id == seq[i].geo_id) {
                seq[i].net_route_marker = Marker::Z;
                break;
            }
        }
    }

    std::optional<std::size_t> prev;
    for (std::size_t i = 0; i < seq.size(); ++i) {
        if (seq[i].net_route_marker == Marker::Z || seq[i].status == Status::PU) continue;
        if (prev && seq[*prev].geo_id == seq[i].geo_id) {
            if (priority(seq[i]) > priority(seq[*prev])) {
                seq[*prev].net_route_marker = Marker::Z;
                prev = i;
            } else {
                seq[i].net_route_marker = Marker::Z;
            }
            continue;
        }
        prev = i;
    }
    return seq;
}

std::vector<Pointcall> qualify_pointcalls(std::vector<Pointcall> seq, const std::set<std::string>& registry_ports,
                                          const HistorianMarkers& historian) {
    const auto spans = document_spans(seq);
    const auto doc = document_of_rows(spans, seq.size());

    std::vector<bool> observed(seq.size(), false);
    for (std::size_t d = 0; d < spans.size(); ++d) {
        const bool arrivals = arrival_register(seq, spans[d]);
        for (std::size_t i = spans[d].begin; i < spans[d].end; ++i) {
            observed[i] = seq[i].function == Function::O || (arrivals && seq[i].status == Status::PC);
        }
    }
    std::optional<std::size_t> last_observed;
    for (std::size_t i = 0; i < seq.size(); ++i) {
        if (observed[i]) last_observed = i;
    }

    for (std::size_t i = 0; i < seq.size(); ++i) {
        Pointcall& p = seq[i];
        UncertaintyLevel level;
        if (observed[i]) {
            level = UncertaintyLevel::Observed;
        } else if (p.status == Status::PU) {
            level = UncertaintyLevel::Invalidated;
        } else if (p.status == Status::PC) {
            level = UncertaintyLevel::Declared;
        } else {
            bool confirmed = false;
            if (doc[i] + 1 < spans.size()) {
                const Span next = spans[doc[i] + 1];
                for (std::size_t j = next.begin; j < next.end && !confirmed; ++j) {
                    confirmed = observed[j] && seq[j].geo_id == p.geo_id;
                }
            }
            bool seen_later = false;
            for (std::size_t j = i + 1; j < seq.size() && !seen_later; ++j) {
                seen_later = seq[j].status == Status::PC && seq[j].geo_id == p.geo_id;
            }
            if (confirmed) {
                level = UncertaintyLevel::Confirmed;
            } else if (!last_observed || i > *last_observed) {
                level = UncertaintyLevel::Unverifiable;
            } else if (!registry_ports.count(p.geo_id)) {
                level = UncertaintyLevel::Unverifiable;
            } else if (!seen_later) {
                level = UncertaintyLevel::Invalidated;
            } else {
                level = UncertaintyLevel::Declared;
            }
        }
        if (auto it = historian.find({p.data_block_local_id, p.rank}); it != historian.end()) {
            p.historian_marker = it->second;
        }
        if (p.historian_marker != Marker::Unset && p.historian_marker != p.net_route_marker) {
            level = UncertaintyLevel::Controversial;
        }
        p.uncertainty = level;
    }
    return seq;
}

bool is_retained(const Pointcall& p) {
    if (p.status == Status::PU) return false;
    return p.net_route_marker != Marker::Z || p.uncertainty == UncertaintyLevel::Controversial;
}

std::vector<TravelSegment> build_segments(const std::vector<Pointcall>& seq) {
    const auto spans = document_spans(seq);
    const auto doc = document_of_rows(spans, seq.size());
    std::vector<std::size_t> kept;
    for (std::size_t i = 0; i < seq.size(); ++i) {
        if (is_retained(seq[i])) kept.push_back(i);
    }
    std::vector<TravelSegment> out;
    for (std::size_t k = 0; k + 1 < kept.size(); ++k) {
        const std::size_t u = kept[k], v = kept[k + 1];
        bool direct = doc[u] == doc[v];
        for (std::size_t j = u + 1; j < spans[doc[u]].end && !direct; ++j) direct = seq[j].geo_id == seq[v].geo_id;
        for (std::size_t j = spans[doc[v]].begin; j < v && !direct; ++j) direct = seq[j].geo_id == seq[u].geo_id;

        TravelSegment s;
        s.ship_id = seq[u].ship_id;
        s.from = seq[u];
        s.to = seq[v];
        s.departure = seq[u].out_date.known() ? seq[u].out_date : seq[u].in_date;
        s.arrival = seq[v].in_date.known() ? seq[v].in_date : seq[v].out_date;
        s.direct = direct;
        s.travel_uncertainty = derive_travel_uncertainty(seq[u].uncertainty.value_or(UncertaintyLevel::Declared),
                                                         seq[v].uncertainty.value_or(UncertaintyLevel::Declared));
        s.color = std::string(uncertainty_color(s.travel_uncertainty));
        out.push_back(std::move(s));
    }
    return out;
}

int derive_travel_uncertainty(UncertaintyLevel from, UncertaintyLevel to) {
    return std::min(severity(from), severity(to));
}

std::string_view uncertainty_color(int travel_uncertainty) {
    switch (travel_uncertainty) {
        case 0: return "green";
        case -1: return "grey";
        case -2: return "red";
        case -3: return "orange";
        default: throw std::out_of_range("travel_uncertainty must be 0, -1, -2 or -3");
    }
}

std::vector<Pointcall> Itinerary::stops() const {
    std::vector<Pointcall> out;
    for (const auto& p : sequence) {
        if (is_retained(p)) out.push_back(p);
    }
    return out;
}

Itinerary reconstruct_itinerary(std::vector<Pointcall> records, const std::set<std::string>& registry_ports,
                                const HistorianMarkers& historian) {
    Itinerary it;
    if (records.empty()) return it;
    it.ship_id = records.front().ship_id;
    it.sequence = qualify_pointcalls(mark_route(order_pointcalls(std::move(records))), registry_ports, historian);
    it.segments = build_segments(it.sequence);
    return it;
}

std::vector<Itinerary> reconstruct_all(const std::vector<Pointcall>& records,
                                       const std::set<std::string>& registry_ports) {
    std::map<std::string, std::vector<Pointcall>> by_ship;
    for (const auto& p : records) by_ship[p.ship_id].push_back(p);
    std::vector<Itinerary> out;
    for (auto& [ship, rows] : by_ship) out.push_back(reconstruct_itinerary(std::move(rows), registry_ports));
    return out;
}

nlohmann::json pointcall_to_json(const Pointcall& p) {
    nlohmann::json j = {
        {"data_block_local_id", p.data_block_local_id},
        {"ship_id", p.ship_id},
        {"ship_name", p.ship_name},
        {"captain_id", p.captain_id},
        {"toponym", p.toponym},
        {"geo_id", p.geo_id},
        {"out_date", date_json(p.out_date)},
        {"in_date", date_json(p.in_date)},
        {"rank", p.rank},
        {"function", to_string(p.function)},
        {"status", to_string(p.status)},
        {"net_route_marker", to_string(p.net_route_marker)},
        {"historian_marker", to_string(p.historian_marker)},
        {"uncertainty", p.uncertainty ? nlohmann::json(to_string(*p.uncertainty)) : nlohmann::json(nullptr)},
        {"attributes", p.attributes},
    };
    if (p.missing_observation_date) j["missing_observation_date"] = true;
    return j;
}

nlohmann::json segment_to_json(const TravelSegment& s) {
    return {
        {"ship_id", s.ship_id},
        {"from", pointcall_to_json(s.from)},
        {"to", pointcall_to_json(s.to)},
        {"departure", date_json(s.departure)},
        {"departure_iso", iso_json(s.departure)},
        {"arrival", date_json(s.arrival)},
        {"arrival_iso", iso_json(s.arrival)},
        {"direct", s.direct},
        {"travel_uncertainty", s.travel_uncertainty},
        {"color", s.color},
        {"geometry", nullptr},
    };
}

std::string segments_to_jsonl(const std::vector<TravelSegment>& segments) {
    std::string out;
    for (const auto& s : segments) {
        out += segment_to_json(s).dump();
        out += '\n';
    }
    return out;
}

}  // namespace searoute::itinerary
