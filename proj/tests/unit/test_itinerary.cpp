#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "searoute/error.hpp"
#include "searoute/ingest/gazetteer.hpp"
#include "searoute/ingest/pointcalls.hpp"
#include "searoute/itinerary/engine.hpp"

using namespace searoute;
using namespace searoute::itinerary;

namespace {

const std::string kFixtures = SEAROUTE_FIXTURES;

std::vector<Pointcall> load_table(const std::string& name) {
    const auto gazetteer = ingest::load_gazetteer(kFixtures + "/gazetteer.csv");
    return ingest::load_pointcalls(kFixtures + "/" + name, gazetteer).records;
}

std::set<std::string> registry() { return ingest::load_gazetteer(kFixtures + "/gazetteer.csv").ports(); }

Pointcall make(std::string doc, int rank, std::string geo, Status status, Function function = Function::Unset,
               std::string out = {}, std::string in = {}) {
    Pointcall p;
    p.data_block_local_id = std::move(doc);
    p.ship_id = "S";
    p.rank = rank;
    p.geo_id = geo;
    p.toponym = geo;
    p.status = status;
    p.function = function;
    p.out_date = parse_flexdate(out);
    p.in_date = parse_flexdate(in);
    return p;
}

const Pointcall& find(const std::vector<Pointcall>& seq, const std::string& doc, int rank) {
    auto it = std::find_if(seq.begin(), seq.end(),
                           [&](const Pointcall& p) { return p.data_block_local_id == doc && p.rank == rank; });
    REQUIRE(it != seq.end());
    return *it;
}

}  // namespace

TEST_CASE("parse_flexdate examples") {
    const auto d = parse_flexdate("1787=05=10");
    CHECK(d.year == 1787);
    CHECK(d.month == 5);
    CHECK(d.day == 10);
    CHECK(d.qualifier == Qualifier::Exact);
    CHECK_FALSE(d.flagged);

    const auto b = parse_flexdate("1787<10<10!");
    CHECK(b.qualifier == Qualifier::Before);
    CHECK(b.flagged);
    CHECK(b.month == 10);
    CHECK(serialize(b) == "1787<10<10!");

    CHECK_FALSE(parse_flexdate("").known());
    CHECK_THROWS_AS(parse_flexdate("1787=05>10"), MalformedDate);
    CHECK_THROWS_AS(parse_flexdate("1787=0a=10"), MalformedDate);
    CHECK_THROWS_AS(parse_flexdate("1787-05-10"), MalformedDate);
    CHECK_THROWS_AS(parse_flexdate("87=05=10"), MalformedDate);
    CHECK_THROWS_AS(parse_flexdate("1787=13=10"), MalformedDate);
    CHECK_THROWS_AS(parse_flexdate("1787=05=10!!"), MalformedDate);

    const auto partial = parse_flexdate("1787=05=00");
    CHECK(partial.month == 5);
    CHECK_FALSE(partial.day);
}

TEST_CASE("flexdate ISO conversion") {
    CHECK(flexdate_to_iso(parse_flexdate("1787=05=10")) == "1787-05-10");
    CHECK(flexdate_to_iso(parse_flexdate("1787>08>04!")) == "1787-08-04");
    CHECK(flexdate_to_iso(FlexDate{}) == "");
}

TEST_CASE("flexdate comparison") {
    CHECK(flexdate_compare(parse_flexdate("1787=01=05"), parse_flexdate("1787=03=16")) < 0);
    CHECK(flexdate_compare(parse_flexdate("1787=06=19"), parse_flexdate("1787=08=04")) < 0);
    const auto d = parse_flexdate("1787=06=19");
    CHECK(flexdate_compare(d, d) == 0);
    CHECK(flexdate_compare(parse_flexdate("1787=06=19"), parse_flexdate("1787=06=19!")) == 0);
    CHECK(flexdate_compare(parse_flexdate("1787<06<19"), parse_flexdate("1787=06=19")) < 0);
    CHECK(flexdate_compare(parse_flexdate("1787>06>19"), parse_flexdate("1787=06=19")) > 0);
    CHECK_THROWS_AS(flexdate_compare(FlexDate{}, d), UnknownDate);
}

TEST_CASE("random dates: round trip and order") {
    std::mt19937_64 rng(1787);
    std::uniform_int_distribution<int> year(1700, 1800), month(1, 12), day(1, 28);
    const char qs[] = {'=', '<', '>'};
    std::vector<std::pair<std::tuple<int, int, int>, FlexDate>> dates;
    for (int i = 0; i < 2000; ++i) {
        const int y = year(rng), m = month(rng), dd = day(rng);
        const char q = qs[i % 3];
        char buf[16];
        std::snprintf(buf, sizeof buf, "%04d%c%02d%c%02d%s", y, q, m, q, dd, i % 5 == 0 ? "!" : "");
        const auto parsed = parse_flexdate(buf);
        REQUIRE(serialize(parsed) == buf);
        REQUIRE(parse_flexdate(serialize(parsed)) == parsed);
        if (q == '=') dates.push_back({{y, m, dd}, parsed});
    }
    auto by_date = dates;
    std::sort(by_date.begin(), by_date.end(), [](auto& a, auto& b) { return a.first < b.first; });
    auto by_flex = dates;
    std::stable_sort(by_flex.begin(), by_flex.end(),
                     [](auto& a, auto& b) { return flexdate_compare(a.second, b.second) < 0; });
    for (std::size_t i = 0; i < dates.size(); ++i) REQUIRE(by_date[i].first == by_flex[i].first);
}

TEST_CASE("Fidèle Mariane order, markers, levels, segments") {
    auto records = load_table("fidele_mariane.csv");
    REQUIRE(records.size() == 13);
    const auto expected_order = records;  // the file lists rows in table order
    std::mt19937_64 rng(3);
    std::shuffle(records.begin(), records.end(), rng);
    const auto ordered = order_pointcalls(records);
    REQUIRE(ordered.size() == 13);
    for (std::size_t i = 0; i < 13; ++i) {
        CHECK(ordered[i].data_block_local_id == expected_order[i].data_block_local_id);
        CHECK(ordered[i].rank == expected_order[i].rank);
    }

    const auto marked = mark_route(ordered);
    const Marker table[] = {Marker::A, Marker::Z, Marker::A, Marker::Z, Marker::A, Marker::Z, Marker::A,
                            Marker::Z, Marker::A, Marker::Z, Marker::A, Marker::A, Marker::A};
    for (std::size_t i = 0; i < 13; ++i) CHECK(marked[i].net_route_marker == table[i]);

    const auto q = qualify_pointcalls(marked, registry());
    for (std::size_t i = 0; i < 10; ++i) {
        const auto want = i % 2 == 0 ? UncertaintyLevel::Observed : UncertaintyLevel::Confirmed;
        CHECK(q[i].uncertainty == want);
    }
    CHECK(q[10].uncertainty == UncertaintyLevel::Observed);
    CHECK(q[11].toponym == "Saint-Brieuc");
    CHECK(q[11].uncertainty == UncertaintyLevel::Unverifiable);
    CHECK(q[12].toponym == "Côtes de Bretagne");
    CHECK(q[12].uncertainty == UncertaintyLevel::Unverifiable);

    const auto segs = build_segments(q);
    REQUIRE(segs.size() == 7);
    const std::vector<std::string> stops{"Les Sables-d'Olonne", "Bayonne",    "Dunkerque",   "Les Sables-d'Olonne",
                                         "Bayonne",             "Saint-Malo", "Saint-Brieuc", "Côtes de Bretagne"};
    const int levels[] = {0, 0, 0, 0, 0, -1, -1};
    for (std::size_t i = 0; i < 7; ++i) {
        CHECK(segs[i].from.toponym == stops[i]);
        CHECK(segs[i].to.toponym == stops[i + 1]);
        CHECK(segs[i].travel_uncertainty == levels[i]);
        CHECK(segs[i].direct);
        CHECK(segs[i].color == uncertainty_color(levels[i]));
    }
    CHECK(segs[0].departure.raw == "1787=01=05");
    CHECK(segs[0].arrival.raw == "1787=03=16");
}

TEST_CASE("Suzanne markers, controversy and inferred leg") {
    const auto it = reconstruct_itinerary(load_table("suzanne.csv"), registry());
    const auto& seq = it.sequence;
    REQUIRE(seq.size() == 10);
    const std::vector<std::pair<std::string, int>> order{{"00294615", 1}, {"00294615", 2}, {"00149798", 1},
                                                         {"00151273", 1}, {"00151273", 2}, {"00162284", 1},
                                                         {"00162284", 2}, {"00188143", 1}, {"00188143", 2},
                                                         {"00188143", 3}};
    for (std::size_t i = 0; i < 10; ++i) {
        CHECK(seq[i].data_block_local_id == order[i].first);
        CHECK(seq[i].rank == order[i].second);
    }
    const Marker algo[] = {Marker::A, Marker::A, Marker::A, Marker::A, Marker::Z,
                           Marker::A, Marker::Z, Marker::Z, Marker::A, Marker::A};
    for (std::size_t i = 0; i < 10; ++i) CHECK(seq[i].net_route_marker == algo[i]);

    const auto& gibraltar = find(seq, "00188143", 2);
    CHECK(gibraltar.historian_marker == Marker::Z);
    CHECK(gibraltar.uncertainty == UncertaintyLevel::Controversial);
    for (const auto& p : seq) {
        if (&p != &gibraltar) CHECK(p.uncertainty != UncertaintyLevel::Controversial);
    }

    bool orange_at_gibraltar = false, inferred = false;
    for (const auto& s : it.segments) {
        if (s.travel_uncertainty == -3) {
            CHECK(s.color == "orange");
            orange_at_gibraltar |= s.from.toponym == "Détroit de Gibraltar" || s.to.toponym == "Détroit de Gibraltar";
        }
        if (s.from.toponym == "La Tremblade" && s.to.toponym == "Marennes") {
            inferred = !s.direct;
            CHECK(s.departure.raw == "1787=06=05");
            CHECK(s.arrival.raw == "1787=06=19");
        }
    }
    CHECK(orange_at_gibraltar);
    CHECK(inferred);
    CHECK(it.stops().size() == 7);
}

TEST_CASE("historian marker map overrides records") {
    auto seq = mark_route(order_pointcalls(load_table("fidele_mariane.csv")));
    HistorianMarkers h{{{"00142100", 3}, Marker::Z}};
    const auto q = qualify_pointcalls(seq, registry(), h);
    CHECK(find(q, "00142100", 3).uncertainty == UncertaintyLevel::Controversial);
    // A Controversial Z point stays in the itinerary.
    CHECK(build_segments(q).size() == 7);
}

TEST_CASE("single document cases") {
    const std::vector<Pointcall> one{make("d1", 1, "P", Status::PC, Function::O, "1787=01=01")};
    CHECK(order_pointcalls(one).size() == 1);
    CHECK(build_segments(qualify_pointcalls(mark_route(one), {})).empty());

    const std::vector<Pointcall> doc{make("d1", 1, "P", Status::PC, Function::O, "1787=01=01"),
                                     make("d1", 2, "Q", Status::FC, Function::T)};
    const auto marked = mark_route(order_pointcalls(doc));
    for (const auto& p : marked) CHECK(p.net_route_marker == Marker::A);
    const auto q = qualify_pointcalls(marked, {"P", "Q"});
    CHECK(q[1].uncertainty == UncertaintyLevel::Unverifiable);  // after the last observation
}

TEST_CASE("mixed ships are rejected") {
    auto a = make("d1", 1, "P", Status::PC, Function::O, "1787=01=01");
    auto b = make("d2", 1, "P", Status::PC, Function::O, "1787=02=01");
    b.ship_id = "T";
    CHECK_THROWS_AS(order_pointcalls({a, b}), std::invalid_argument);
}

TEST_CASE("undated documents go last and are flagged") {
    const std::vector<Pointcall> recs{make("z", 1, "R", Status::PC, Function::O),
                                      make("b", 1, "Q", Status::PC, Function::O, "1787=03=01"),
                                      make("a", 1, "P", Status::PC, Function::O, "1787=01=01"),
                                      make("c", 1, "S", Status::PC, Function::T, "", "1786=12=30")};
    const auto seq = order_pointcalls(recs);
    CHECK(seq[0].data_block_local_id == "c");  // earliest dated point stands in for the anchor
    CHECK(seq[1].data_block_local_id == "a");
    CHECK(seq[2].data_block_local_id == "b");
    CHECK(seq[3].data_block_local_id == "z");
    CHECK(seq[3].missing_observation_date);
    CHECK_FALSE(seq[0].missing_observation_date);
}

TEST_CASE("equal anchors break ties by document id") {
    const std::vector<Pointcall> recs{make("b", 1, "Q", Status::PC, Function::O, "1787=03=01"),
                                      make("a", 1, "P", Status::PC, Function::O, "1787=03=01")};
    const auto seq = order_pointcalls(recs);
    CHECK(seq[0].data_block_local_id == "a");
}

TEST_CASE("invalidated intention to a registry port") {
    // Declares Marseille, never recorded there; later observed at Cadiz.
    const std::vector<Pointcall> recs{make("d1", 1, "Nantes", Status::PC, Function::O, "1787=01=01"),
                                      make("d1", 2, "Marseille", Status::FC, Function::T),
                                      make("d2", 1, "Bordeaux", Status::PC, Function::O, "1787=03=01"),
                                      make("d3", 1, "Cadiz", Status::PC, Function::O, "1787=05=01")};
    const auto q = qualify_pointcalls(mark_route(order_pointcalls(recs)), {"Marseille", "Nantes", "Bordeaux"});
    CHECK(q[1].uncertainty == UncertaintyLevel::Invalidated);
    const auto segs = build_segments(q);
    REQUIRE(segs.size() == 3);
    CHECK(segs[0].travel_uncertainty == -2);
    CHECK(segs[0].color == "red");
    CHECK(segs[1].travel_uncertainty == -2);
    CHECK_FALSE(segs[1].direct);  // Marseille -> Bordeaux: no document connects them

    // Outside registry coverage it stays unverifiable.
    const auto u = qualify_pointcalls(mark_route(order_pointcalls(recs)), {"Nantes", "Bordeaux"});
    CHECK(u[1].uncertainty == UncertaintyLevel::Unverifiable);
}

TEST_CASE("farther confirmation is declared") {
    const std::vector<Pointcall> recs{make("d1", 1, "A", Status::PC, Function::O, "1787=01=01"),
                                      make("d1", 2, "B", Status::FC, Function::T),
                                      make("d2", 1, "C", Status::PC, Function::O, "1787=02=01"),
                                      make("d3", 1, "B", Status::PC, Function::O, "1787=03=01")};
    const auto q = qualify_pointcalls(mark_route(order_pointcalls(recs)), {"A", "B", "C"});
    CHECK(q[1].uncertainty == UncertaintyLevel::Declared);
}

TEST_CASE("PC rows of departure documents are declared; PU rows invalidated and skipped") {
    const std::vector<Pointcall> recs{make("d1", 1, "Prev", Status::PC, Function::Unset),
                                      make("d1", 2, "Here", Status::PC, Function::O, "1787=01=01"),
                                      make("d1", 3, "Never", Status::PU, Function::Unset),
                                      make("d1", 4, "Next", Status::FC, Function::T)};
    const auto it = reconstruct_itinerary(recs, {"Next"});
    CHECK(it.sequence[0].uncertainty == UncertaintyLevel::Declared);
    CHECK(it.sequence[2].uncertainty == UncertaintyLevel::Invalidated);
    CHECK(it.segments.size() == 2);
    for (const auto& s : it.segments) CHECK(s.to.geo_id != "Never");
}

TEST_CASE("derive_travel_uncertainty examples and properties") {
    using U = UncertaintyLevel;
    CHECK(derive_travel_uncertainty(U::Observed, U::Confirmed) == 0);
    CHECK(derive_travel_uncertainty(U::Observed, U::Declared) == -1);
    CHECK(derive_travel_uncertainty(U::Confirmed, U::Invalidated) == -2);
    CHECK(derive_travel_uncertainty(U::Invalidated, U::Controversial) == -3);
    auto rank = [](U u) {  // worse is larger
        switch (u) {
            case U::Observed: case U::Confirmed: return 0;
            case U::Declared: case U::Unverifiable: return 1;
            case U::Invalidated: return 2;
            case U::Controversial: return 3;
        }
        return 0;
    };
    for (U a : kAllLevels) {
        for (U b : kAllLevels) {
            CHECK(derive_travel_uncertainty(a, b) == derive_travel_uncertainty(b, a));
            for (U worse : kAllLevels) {
                if (rank(worse) >= rank(a)) CHECK(derive_travel_uncertainty(worse, b) <= derive_travel_uncertainty(a, b));
            }
        }
    }
    CHECK(uncertainty_color(0) == "green");
    CHECK(uncertainty_color(-1) == "grey");
    CHECK(uncertainty_color(-2) == "red");
    CHECK(uncertainty_color(-3) == "orange");
    CHECK_THROWS_AS(uncertainty_color(1), std::out_of_range);
}

TEST_CASE("JSON lines output") {
    const auto it = reconstruct_itinerary(load_table("fidele_mariane.csv"), registry());
    const auto text = segments_to_jsonl(it.segments);
    CHECK(std::count(text.begin(), text.end(), '\n') == 7);
    const auto first = nlohmann::json::parse(text.substr(0, text.find('\n')));
    CHECK(first["ship_id"] == "0002931N");
    CHECK(first["departure_iso"] == "1787-01-05");
    CHECK(first["color"] == "green");
    CHECK(first["direct"] == true);
    CHECK(first["from"]["uncertainty"] == "observed");
    CHECK(first["from"]["attributes"]["tonnage"] == "60");
    CHECK(first["geometry"].is_null());
}

TEST_CASE("enum text round trips") {
    for (auto u : kAllLevels) CHECK(parse_uncertainty(to_string(u)) == u);
    CHECK(parse_function("") == Function::Unset);
    CHECK(parse_function("X") == std::nullopt);
    CHECK(parse_status("PU") == Status::PU);
    CHECK(parse_marker("Z") == Marker::Z);
}
