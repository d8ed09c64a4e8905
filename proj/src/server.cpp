#include "kritwahl/server.hpp"

#include <algorithm>

#include "httplib.h"

namespace kritwahl::api {

void parse_address(const std::string& addr, ServerOptions& options) {
  auto colon = addr.rfind(':');
  if (colon == std::string::npos) {
    throw Error(ErrorCode::InvalidArgument, "address must be HOST:PORT, got '" + addr + "'");
  }
  std::string host = addr.substr(0, colon);
  if (host.size() >= 2 && host.front() == '[' && host.back() == ']') {
    host = host.substr(1, host.size() - 2);
  }
  int port = 0;
  try {
    std::size_t used = 0;
    port = std::stoi(addr.substr(colon + 1), &used);
    if (used != addr.size() - colon - 1) throw std::invalid_argument("trailing");
  } catch (const std::exception&) {
    throw Error(ErrorCode::InvalidArgument, "bad port in '" + addr + "'");
  }
  if (port < 0 || port > 65535) throw Error(ErrorCode::InvalidArgument, "port out of range");
  options.host = host.empty() ? "0.0.0.0" : host;
  options.port = port;
}

HttpServer::HttpServer(Api& api, ServerOptions options)
    : api_(api), options_(std::move(options)), server_(std::make_unique<httplib::Server>()) {
  auto forward = [this](const httplib::Request& req, httplib::Response& res) {
    Response r = api_.handle(req.method, req.path, req.body);
    res.status = r.status;
    res.set_content(r.body.dump(), "application/json");
  };
  const std::string pattern = std::string(kPrefix) + "(/.*)?";
  server_->Get(pattern, forward);
  server_->Post(pattern, forward);
  server_->Put(pattern, forward);
  server_->Delete(pattern, forward);
  server_->Options(pattern, [](const httplib::Request&, httplib::Response& res) {
    res.status = 204;
  });

  server_->set_post_routing_handler([this](const httplib::Request& req, httplib::Response& res) {
    if (!req.has_header("Origin")) return;
    std::string origin = req.get_header_value("Origin");
    const auto& allowed = options_.allowed_origins;
    bool any = std::find(allowed.begin(), allowed.end(), "*") != allowed.end();
    if (!any && std::find(allowed.begin(), allowed.end(), origin) == allowed.end()) return;
    res.set_header("Access-Control-Allow-Origin", any ? "*" : origin);
    res.set_header("Access-Control-Allow-Methods", "GET, POST, PUT, OPTIONS");
    res.set_header("Access-Control-Allow-Headers", "Content-Type");
    if (!any) res.set_header("Vary", "Origin");
  });

  if (options_.static_dir) server_->set_mount_point("/", options_.static_dir->string());
}

HttpServer::~HttpServer() { stop(); }

int HttpServer::bind() {
  int port = options_.port;
  if (port == 0) {
    port = server_->bind_to_any_port(options_.host);
  } else if (!server_->bind_to_port(options_.host, port)) {
    port = -1;
  }
  if (port < 0) {
    throw Error(ErrorCode::InvalidArgument,
                "cannot bind " + options_.host + ":" + std::to_string(options_.port));
  }
  options_.port = port;
  return port;
}

bool HttpServer::run() { return server_->listen_after_bind(); }

void HttpServer::stop() {
  if (server_ && server_->is_running()) server_->stop();
}

void HttpServer::wait_until_ready() const { server_->wait_until_ready(); }

}  // namespace kritwahl::api
