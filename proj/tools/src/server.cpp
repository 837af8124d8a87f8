#include "server.hpp"

#include <httplib.h>

namespace rulekit::cli {

struct ApiServer::Impl {
    RuleStore store;
    httplib::Server http;
};

namespace {

void reply(httplib::Response& res, const ApiResponse& r) {
    res.status = r.status;
    res.set_content(r.body, "application/json; charset=utf-8");
}

QueryParams params(const httplib::Request& req) { return {req.params.begin(), req.params.end()}; }

}  // namespace

ApiServer::ApiServer(RuleStore store) : impl_(new Impl{std::move(store), {}}) {
    auto& s = impl_->store;
    impl_->http.Get("/api/meta", [&s](const httplib::Request&, httplib::Response& res) { reply(res, api_meta(s)); });
    impl_->http.Get("/api/rules", [&s](const httplib::Request& req, httplib::Response& res) {
        reply(res, api_rules(s, params(req)));
    });
    impl_->http.Get("/api/scatter", [&s](const httplib::Request& req, httplib::Response& res) {
        reply(res, api_scatter(s, params(req)));
    });
    impl_->http.Get("/api/graph", [&s](const httplib::Request& req, httplib::Response& res) {
        reply(res, api_graph(s, params(req)));
    });
    impl_->http.set_default_headers({{"Access-Control-Allow-Origin", "*"}});
    // no SO_REUSEPORT, so an occupied port fails to bind
    impl_->http.set_socket_options([](auto sock) {
        int yes = 1;
        setsockopt(sock, SOL_SOCKET, SO_REUSEADDR, reinterpret_cast<const void*>(&yes), sizeof(yes));
    });
}

ApiServer::~ApiServer() { stop(); }

bool ApiServer::bind(const std::string& host, int port) { return impl_->http.bind_to_port(host, port); }

int ApiServer::bind_any(const std::string& host) { return impl_->http.bind_to_any_port(host); }

bool ApiServer::listen() { return impl_->http.listen_after_bind(); }

void ApiServer::stop() {
    if (impl_ && impl_->http.is_running()) impl_->http.stop();
}

void ApiServer::wait_until_ready() const { impl_->http.wait_until_ready(); }

}  // namespace rulekit::cli
