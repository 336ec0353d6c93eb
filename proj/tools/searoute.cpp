// Command-line entry points: route computation, data ingest, itinerary
// building and the HTTP server.

#include <CLI11.hpp>

#include <atomic>
#include <chrono>
#include <csignal>
#include <fstream>
#include <iostream>
#include <thread>

#include "searoute/error.hpp"
#include "searoute/geo/measure.hpp"
#include "searoute/ingest/coastline.hpp"
#include "searoute/ingest/gazetteer.hpp"
#include "searoute/ingest/pointcalls.hpp"
#include "searoute/path/route_json.hpp"
#include "searoute/path/router.hpp"
#include "searoute/service/api.hpp"
#include "searoute/service/corpus.hpp"
#include "searoute/service/http.hpp"

using namespace searoute;
using nlohmann::json;

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitInvalid = 2;

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text << std::flush;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
    if (!out) throw std::runtime_error("write failed: " + path);
}

std::string dump(const json& j) { return j.dump(2, ' ', false, json::error_handler_t::replace) + "\n"; }

struct CorpusOptions {
    std::string coast, gazetteer, pointcalls, registry_ports, route_cache;
    double min_island_area = geo::CoastIndex::kDefaultMinIslandAreaKm2;

    void add_to(CLI::App* app) {
        app->add_option("--coast", coast, "coastline shapefile or GeoJSON")->required()->check(CLI::ExistingFile);
        app->add_option("--gazetteer", gazetteer, "gazetteer CSV")->required()->check(CLI::ExistingFile);
        app->add_option("--pointcalls", pointcalls, "pointcall CSV")->required()->check(CLI::ExistingFile);
        app->add_option("--registry-ports", registry_ports, "geo_ids of registry ports, one per line")
            ->check(CLI::ExistingFile);
        app->add_option("--route-cache", route_cache, "JSON-lines route cache file");
        app->add_option("--min-island-area", min_island_area, "islands below this area (km2) are ignored")
            ->check(CLI::NonNegativeNumber);
    }

    service::CorpusConfig config() const {
        service::CorpusConfig c;
        c.coast = coast;
        c.gazetteer = gazetteer;
        c.pointcalls = pointcalls;
        if (!registry_ports.empty()) c.registry_ports = registry_ports;
        if (!route_cache.empty()) c.route_cache = route_cache;
        c.min_island_area_km2 = min_island_area;
        return c;
    }
};

std::atomic<bool> g_stop{false};
std::atomic<bool> g_reload{false};

extern "C" void on_signal(int sig) {
    if (sig == SIGHUP) {
        g_reload = true;
    } else {
        g_stop = true;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Sea routes and qualified itineraries from historical pointcalls"};
    app.require_subcommand(1);

    // route compute
    auto* route = app.add_subcommand("route", "sea route computation");
    route->require_subcommand(1);
    auto* compute = route->add_subcommand("compute", "compute one land-avoiding route");
    std::string from, to, coast_path, gazetteer_path, route_out = "-";
    std::optional<double> offset, spacing;
    std::uint64_t seed = path::RouteParams{}.rng_seed;
    double route_min_area = geo::CoastIndex::kDefaultMinIslandAreaKm2;
    bool omit_timing = false;
    compute->add_option("--from", from, "gazetteer id or lon,lat")->required();
    compute->add_option("--to", to, "gazetteer id or lon,lat")->required();
    compute->add_option("--coast", coast_path, "coastline shapefile or GeoJSON")->required()->check(CLI::ExistingFile);
    compute->add_option("--gazetteer", gazetteer_path, "gazetteer CSV for place ids")->check(CLI::ExistingFile);
    compute->add_option("--offset", offset, "coast offset in km (default: adapted to the leg length)")
        ->check(CLI::PositiveNumber);
    compute->add_option("--spacing", spacing, "detour point spacing in km (default: adapted)")
        ->check(CLI::PositiveNumber);
    compute->add_option("--seed", seed, "random seed");
    compute->add_option("--min-island-area", route_min_area, "islands below this area (km2) are ignored")
        ->check(CLI::NonNegativeNumber);
    compute->add_option("--out", route_out, "output GeoJSON path (default stdout)");
    compute->add_flag("--omit-timing", omit_timing, "leave duration_ms out for reproducible output");

    // ingest
    auto* ingest_cmd = app.add_subcommand("ingest", "validate and summarise input files");
    ingest_cmd->require_subcommand(1);
    std::string ingest_path, report_path, ingest_gazetteer, segments_out;
    double ingest_min_area = geo::CoastIndex::kDefaultMinIslandAreaKm2;
    auto* ingest_coast = ingest_cmd->add_subcommand("coast", "coastline shapefile or GeoJSON");
    auto* ingest_gaz = ingest_cmd->add_subcommand("gazetteer", "gazetteer CSV");
    auto* ingest_pc = ingest_cmd->add_subcommand("pointcalls", "pointcall CSV");
    for (auto* sub : {ingest_coast, ingest_gaz, ingest_pc}) {
        sub->add_option("path", ingest_path, "input file")->required()->check(CLI::ExistingFile);
        sub->add_option("--report", report_path, "write the JSON report here (default stdout)");
    }
    ingest_coast->add_option("--min-island-area", ingest_min_area, "islands below this area (km2) are ignored")
        ->check(CLI::NonNegativeNumber);
    ingest_pc->add_option("--gazetteer", ingest_gazetteer, "gazetteer CSV used to check geo_ids")
        ->required()
        ->check(CLI::ExistingFile);
    ingest_pc->add_option("--segments", segments_out, "also write qualified travel segments as JSON lines");

    // itinerary build
    auto* itinerary_cmd = app.add_subcommand("itinerary", "qualified itineraries");
    itinerary_cmd->require_subcommand(1);
    auto* build = itinerary_cmd->add_subcommand("build", "write one ship's itinerary as GeoJSON");
    CorpusOptions build_corpus;
    std::string ship, build_out = "-", jsonl_out;
    std::optional<std::string> date_from, date_to;
    build->add_option("--ship", ship, "ship_id")->required();
    build->add_option("--out", build_out, "output GeoJSON path (default stdout)");
    build->add_option("--jsonl", jsonl_out, "also write the travel segments as JSON lines");
    build->add_option("--date-from", date_from, "ISO date, inclusive");
    build->add_option("--date-to", date_to, "ISO date, inclusive");
    build_corpus.add_to(build);

    // serve
    auto* serve = app.add_subcommand("serve", "HTTP/JSON API");
    CorpusOptions serve_corpus;
    std::string host = "127.0.0.1";
    int port = 8080;
    serve_corpus.add_to(serve);
    serve->add_option("--port", port, "TCP port (0 picks a free one)")->check(CLI::Range(0, 65535));
    serve->add_option("--host", host, "listen address");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitInvalid;
    }

    try {
        if (compute->parsed()) {
            const auto coast = ingest::load_coastline(coast_path, route_min_area);
            ingest::Gazetteer gazetteer;
            if (!gazetteer_path.empty()) gazetteer = ingest::load_gazetteer(gazetteer_path);
            service::Corpus lookup;
            lookup.gazetteer = gazetteer;
            auto resolve = [&](const std::string& place) {
                auto p = lookup.resolve(place);
                if (!p) throw UnknownPlace("cannot resolve " + place);
                return *p;
            };
            const geo::GeoPoint a = resolve(from), b = resolve(to);
            path::RouteParams base;
            base.rng_seed = seed;
            base.min_island_area_km2 = route_min_area;
            path::RouteParams params = path::adapt_params(geo::haversine_distance(a, b), base);
            if (offset) params.offset_km = *offset;
            if (spacing) params.spacing_km = *spacing;
            params.validate();
            const auto result = path::compute_sea_route(a, b, coast.index, params);
            json feature = path::route_to_geojson(result, {.include_duration = !omit_timing});
            feature["properties"]["from"] = from;
            feature["properties"]["to"] = to;
            write_output(route_out, dump(feature));
        } else if (ingest_coast->parsed()) {
            const auto load = ingest::load_coastline(ingest_path, ingest_min_area);
            write_output(report_path, dump(load.report()));
        } else if (ingest_gaz->parsed()) {
            const auto gazetteer = ingest::load_gazetteer(ingest_path);
            json kinds = json::object();
            for (const auto& [id, e] : gazetteer.entries()) {
                static constexpr const char* names[] = {"port", "zone", "strait", "other"};
                kinds[names[static_cast<int>(e.kind)]] = kinds.value(names[static_cast<int>(e.kind)], 0) + 1;
            }
            write_output(report_path, dump({{"entries", gazetteer.size()}, {"kinds", kinds}}));
        } else if (ingest_pc->parsed()) {
            const auto gazetteer = ingest::load_gazetteer(ingest_gazetteer);
            const auto load = ingest::load_pointcalls(ingest_path, gazetteer);
            write_output(report_path, dump(load.report()));
            if (!segments_out.empty()) {
                std::string lines;
                for (const auto& it : itinerary::reconstruct_all(load.records, gazetteer.ports())) {
                    lines += itinerary::segments_to_jsonl(it.segments);
                }
                write_output(segments_out, lines);
            }
        } else if (build->parsed()) {
            const auto corpus = service::load_corpus(build_corpus.config());
            const json fc = service::get_itinerary(*corpus, ship, date_from, date_to);
            write_output(build_out, dump(fc));
            if (!jsonl_out.empty()) {
                write_output(jsonl_out, itinerary::segments_to_jsonl(corpus->itineraries.at(ship).segments));
            }
        } else if (serve->parsed()) {
            service::CorpusHolder holder(service::load_corpus(serve_corpus.config()));
            service::HttpServer server(holder);
            const int bound = server.bind(host, port);
            if (bound < 0) throw std::runtime_error("cannot bind " + host + ":" + std::to_string(port));
            std::signal(SIGINT, on_signal);
            std::signal(SIGTERM, on_signal);
            std::signal(SIGHUP, on_signal);
            std::cout << "listening on http://" << host << ":" << bound << std::endl;
            std::thread watcher([&] {
                while (!g_stop) {
                    std::this_thread::sleep_for(std::chrono::milliseconds(100));
                    if (g_reload.exchange(false)) {
                        try {
                            holder.replace(service::load_corpus(serve_corpus.config()));
                            std::cerr << "corpus reloaded" << std::endl;
                        } catch (const std::exception& e) {
                            std::cerr << "reload failed, keeping the current corpus: " << e.what() << std::endl;
                        }
                    }
                }
                server.stop();
            });
            server.listen();
            g_stop = true;
            watcher.join();
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.kind() << ": " << e.what() << std::endl;
        return kExitInvalid;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << std::endl;
        return kExitInvalid;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << std::endl;
        return kExitFailure;
    }
    return 0;
}
