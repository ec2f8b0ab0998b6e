#include "httplib.h"

#include "copsrobber/errors.hpp"
#include "copsrobber/service.hpp"

namespace copsrobber::service {

namespace {

constexpr const char* kIndexPage = R"(<!doctype html>
<html><head><meta charset="utf-8"><title>Cops and robber</title></head>
<body>
<h1>Cops and robber</h1>
<p>No UI assets are installed. The JSON API is available:</p>
<ul>
<li>GET /api/presets</li>
<li>GET /api/graphs/{preset}</li>
<li>POST /api/sessions</li>
<li>GET /api/sessions/{id}</li>
<li>POST /api/sessions/{id}/robber</li>
</ul>
</body></html>
)";

void reply(httplib::Response& res, const ApiResult& r) {
  res.status = r.status;
  res.set_content(r.body.dump(), "application/json");
}

std::optional<json> parse_body(const httplib::Request& req, httplib::Response& res) {
  auto body = json::parse(req.body, nullptr, false);
  if (body.is_discarded()) {
    reply(res, {400, {{"error", "request body is not valid JSON"}}});
    return std::nullopt;
  }
  return body;
}

}  // namespace

struct HttpServer::Impl {
  explicit Impl(GameService& s) : service(s) {}
  GameService& service;
  httplib::Server server;
};

HttpServer::HttpServer(GameService& service, std::optional<std::filesystem::path> static_dir)
    : impl_(std::make_unique<Impl>(service)) {
  auto& svr = impl_->server;
  GameService& svc = impl_->service;
  // The library default adds SO_REUSEPORT, which would let a busy port bind twice.
  svr.set_socket_options([](socket_t sock) {
    int yes = 1;
    setsockopt(sock, SOL_SOCKET, SO_REUSEADDR, &yes, sizeof yes);
  });

  svr.Post("/api/sessions", [&svc](const httplib::Request& req, httplib::Response& res) {
    if (auto body = parse_body(req, res)) reply(res, svc.create_session(*body));
  });
  svr.Post(R"(/api/sessions/([0-9a-zA-Z]+)/robber)", [&svc](const httplib::Request& req, httplib::Response& res) {
    if (auto body = parse_body(req, res)) reply(res, svc.robber_action(req.matches[1], *body));
  });
  svr.Get(R"(/api/sessions/([0-9a-zA-Z]+))", [&svc](const httplib::Request& req, httplib::Response& res) {
    reply(res, svc.get_session(req.matches[1]));
  });
  svr.Get("/api/presets", [&svc](const httplib::Request&, httplib::Response& res) { reply(res, svc.list_presets()); });
  svr.Get(R"(/api/graphs/([^/]+))", [&svc](const httplib::Request& req, httplib::Response& res) {
    reply(res, svc.get_graph(req.matches[1]));
  });

  if (static_dir) {
    if (!svr.set_mount_point("/", static_dir->string())) {
      throw EnvironmentError("static asset directory not found: " + static_dir->string());
    }
  } else {
    svr.Get("/", [](const httplib::Request&, httplib::Response& res) { res.set_content(kIndexPage, "text/html"); });
  }

  svr.set_exception_handler([](const httplib::Request&, httplib::Response& res, std::exception_ptr ep) {
    std::string what = "internal error";
    try {
      std::rethrow_exception(ep);
    } catch (const std::exception& e) {
      what = e.what();
    } catch (...) {
    }
    reply(res, {500, {{"error", what}}});
  });
  svr.set_error_handler([](const httplib::Request&, httplib::Response& res) {
    if (res.body.empty()) reply(res, {res.status, {{"error", httplib::status_message(res.status)}}});
  });
}

HttpServer::~HttpServer() { stop(); }

int HttpServer::bind(const std::string& host, int port) {
  auto& svr = impl_->server;
  if (port == 0) {
    const int bound = svr.bind_to_any_port(host);
    if (bound < 0) throw EnvironmentError("cannot bind to " + host);
    return bound;
  }
  if (port < 0 || port > 65535 || !svr.bind_to_port(host, port)) {
    throw EnvironmentError("cannot bind to " + host + ":" + std::to_string(port));
  }
  return port;
}

void HttpServer::serve() { impl_->server.listen_after_bind(); }

void HttpServer::stop() {
  if (impl_ && impl_->server.is_running()) impl_->server.stop();
}

}  // namespace copsrobber::service
