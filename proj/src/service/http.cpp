#include "searoute/service/http.hpp"

#include <httplib.h>

#include <charconv>
#include <functional>

#include "searoute/error.hpp"
#include "searoute/service/api.hpp"

namespace searoute::service {

using nlohmann::json;

namespace {

std::optional<std::string> param(const httplib::Request& req, const char* name) {
    if (!req.has_param(name)) return std::nullopt;
    return req.get_param_value(name);
}

std::optional<double> number_param(const httplib::Request& req, const char* name) {
    auto text = param(req, name);
    if (!text) return std::nullopt;
    double value = 0;
    auto r = std::from_chars(text->data(), text->data() + text->size(), value);
    if (r.ec != std::errc() || r.ptr != text->data() + text->size()) {
        throw Error("BadParameter", std::string(name) + " is not a number");
    }
    return value;
}

void send(httplib::Response& res, int status, const json& body) {
    res.status = status;
    res.set_content(body.dump(-1, ' ', false, json::error_handler_t::replace), "application/json");
}

using Handler = std::function<json(const Corpus&, const httplib::Request&)>;

httplib::Server::Handler wrap(CorpusHolder& holder, Handler handler) {
    return [&holder, handler = std::move(handler)](const httplib::Request& req, httplib::Response& res) {
        try {
            const auto corpus = holder.snapshot();
            send(res, 200, handler(*corpus, req));
        } catch (const Error& e) {
            send(res, status_for(e.kind()), {{"error", e.kind()}, {"message", e.what()}});
        } catch (const std::exception& e) {
            send(res, 500, {{"error", "Internal"}, {"message", e.what()}});
        }
    };
}

ItineraryQuery filters(const httplib::Request& req) {
    ItineraryQuery q;
    q.flag = param(req, "flag");
    q.homeport = param(req, "homeport");
    q.tonnage_min = number_param(req, "tonnage_min");
    q.tonnage_max = number_param(req, "tonnage_max");
    q.date_from = param(req, "from");
    q.date_to = param(req, "to");
    return q;
}

json search(const Corpus& corpus, const httplib::Request& req, ItineraryQuery q) {
    return search_itineraries(corpus, q, param(req, "cursor").value_or("")).to_json();
}

}  // namespace

int status_for(const std::string& kind) {
    if (kind == "UnknownShip" || kind == "UnknownPlace") return 404;
    if (kind == "EmptyCriteria" || kind == "TooManyItineraries" || kind == "BadCoordinates" ||
        kind == "BadCursor" || kind == "BadParameter" || kind == "MalformedDate") {
        return 400;
    }
    if (kind == "NoRouteFound" || kind == "InvalidEndpoint" || kind == "NoSeaFound") return 422;
    return 500;
}

HttpServer::HttpServer(CorpusHolder& holder) : holder_(holder), server_(std::make_unique<httplib::Server>()) {
    auto& s = *server_;
    s.Get("/health", wrap(holder_, [](const Corpus& c, const httplib::Request&) {
              return json{{"status", "ok"}, {"ships", c.itineraries.size()}, {"coast", c.coast.fingerprint.key()}};
          }));
    s.Get("/ships", wrap(holder_, [](const Corpus& c, const httplib::Request& req) {
              auto q = filters(req);
              q.ship = param(req, "q");
              return search(c, req, std::move(q));
          }));
    s.Get("/captains", wrap(holder_, [](const Corpus& c, const httplib::Request& req) {
              auto q = filters(req);
              q.captain_name = param(req, "q");
              return search(c, req, std::move(q));
          }));
    // Registered before the {id} pattern so "compare" is not taken as a ship id.
    s.Get("/itineraries/compare", wrap(holder_, [](const Corpus& c, const httplib::Request& req) {
              std::vector<std::string> ids;
              for (const char* key : {"a", "b", "c"}) {
                  for (std::size_t i = 0; i < req.get_param_value_count(key); ++i) {
                      ids.push_back(req.get_param_value(key, i));
                  }
              }
              return compare_itineraries(c, ids);
          }));
    s.Get(R"(/itineraries/([^/]+))", wrap(holder_, [](const Corpus& c, const httplib::Request& req) {
              return get_itinerary(c, req.matches[1].str(), param(req, "from"), param(req, "to"));
          }));
    s.Get("/route", wrap(holder_, [](const Corpus& c, const httplib::Request& req) {
              auto from = param(req, "from");
              auto to = param(req, "to");
              if (!from || !to) throw Error("BadParameter", "from and to are required");
              return route_feature(c, *from, *to);
          }));
    s.set_error_handler([](const httplib::Request&, httplib::Response& res) {
        if (res.body.empty() && res.status == 404) send(res, 404, {{"error", "NotFound"}, {"message", "no such endpoint"}});
    });
}

HttpServer::~HttpServer() = default;

int HttpServer::bind(const std::string& host, int port) {
    if (port == 0) return server_->bind_to_any_port(host);
    return server_->bind_to_port(host, port) ? port : -1;
}

bool HttpServer::listen() { return server_->listen_after_bind(); }

void HttpServer::stop() { server_->stop(); }

}  // namespace searoute::service
