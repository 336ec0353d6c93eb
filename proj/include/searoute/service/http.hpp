#pragma once

#include <memory>
#include <string>

#include "searoute/service/corpus.hpp"

namespace httplib {
class Server;
}

namespace searoute::service {

/// HTTP status for an error kind.
int status_for(const std::string& kind);

/// Read-only JSON API over the holder's current snapshot.
///
///   GET /ships?q=            GET /captains?q=
///   GET /itineraries/{id}    GET /itineraries/compare?a=&b=
///   GET /route?from=&to=     GET /health
///
/// Search endpoints accept flag, homeport, tonnage_min, tonnage_max, from,
/// to and cursor. Errors are {"error": kind, "message": text}.
class HttpServer {
public:
    explicit HttpServer(CorpusHolder& holder);
    ~HttpServer();
    HttpServer(const HttpServer&) = delete;
    HttpServer& operator=(const HttpServer&) = delete;

    /// Returns the bound port (an ephemeral one when `port` is 0), or -1.
    int bind(const std::string& host, int port);
    /// Blocks until stop().
    bool listen();
    void stop();

private:
    CorpusHolder& holder_;
    std::unique_ptr<httplib::Server> server_;
};

}  // namespace searoute::service
