#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include "quasicartan/session.hpp"

namespace qc::api {

struct Response {
  int status = 200;
  io::json body;
};

struct ApiOptions {
  // When set, the store is written here after every state-changing request.
  std::optional<std::string> snapshot_path;
};

// Transport-independent request dispatch for the session API:
//   POST /api/session                      {"B": matrix} | {"preset": name}
//   GET  /api/session/{id}
//   POST /api/session/{id}/mutate          {"k": int}
//   POST /api/session/{id}/undo
//   GET  /api/session/{id}/find-companion
Response handle(SessionStore& store, std::string_view method, std::string_view path, std::string_view body,
                const ApiOptions& options = {});

// Environment variable consulted for the default port.
inline constexpr const char* kPortEnv = "QCARTAN_PORT";
inline constexpr int kDefaultPort = 8080;

int default_port();

// Blocks serving HTTP on host:port until stop() or process exit.
class Server {
 public:
  explicit Server(SessionStore& store, ApiOptions options = {});
  ~Server();
  Server(const Server&) = delete;
  Server& operator=(const Server&) = delete;

  // Binds; returns the bound port (useful with port 0) or -1 on failure.
  int bind(const std::string& host, int port);
  void listen();  // blocks
  void stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace qc::api
