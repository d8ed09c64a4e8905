#pragma once

#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "kritwahl/api.hpp"

namespace httplib {
class Server;
}

namespace kritwahl::api {

struct ServerOptions {
  std::string host = "127.0.0.1";
  int port = 8080;  // 0 picks a free port
  std::vector<std::string> allowed_origins;  // "*" allows any origin
  std::optional<std::filesystem::path> static_dir;  // served at "/"
};

/// Parses "HOST:PORT" (IPv6 hosts in brackets) into the options.
void parse_address(const std::string& addr, ServerOptions& options);

/// HTTP/1.1 front end forwarding /api/v1 requests to an Api instance.
class HttpServer {
 public:
  HttpServer(Api& api, ServerOptions options);
  ~HttpServer();

  HttpServer(const HttpServer&) = delete;
  HttpServer& operator=(const HttpServer&) = delete;

  /// Binds the socket; returns the bound port.
  int bind();
  /// Blocks serving requests until stop() is called.
  bool run();
  void stop();
  void wait_until_ready() const;

 private:
  Api& api_;
  ServerOptions options_;
  std::unique_ptr<httplib::Server> server_;
};

}  // namespace kritwahl::api
