#include "quasicartan/api.hpp"

#include <cstdlib>

#include <httplib.h>

#include "quasicartan/fixtures.hpp"

namespace qc::api {

namespace {

Response error(int status, std::string_view code, const std::string& detail) {
  return {status, {{"error", code}, {"detail", detail}}};
}

Response from_error(const Error& e) {
  switch (e.code()) {
    case ErrorCode::sign_coherence_lost: return error(409, to_string(e.code()), e.what());
    case ErrorCode::overflow: return error(422, to_string(e.code()), e.what());
    case ErrorCode::parse_error:
    case ErrorCode::invalid_argument:
    case ErrorCode::not_sign_skew_symmetric:
    case ErrorCode::no_symmetrizer:
    case ErrorCode::dimension_mismatch: return error(400, to_string(e.code()), e.what());
    default: return error(422, to_string(e.code()), e.what());
  }
}

std::vector<std::string_view> split_path(std::string_view path) {
  std::vector<std::string_view> parts;
  while (!path.empty()) {
    const auto slash = path.find('/');
    if (slash != 0) parts.push_back(path.substr(0, slash));
    if (slash == std::string_view::npos) break;
    path.remove_prefix(slash + 1);
  }
  return parts;
}

io::json parse_body(std::string_view body) {
  if (body.empty()) return io::json::object();
  try {
    io::json j = io::json::parse(body);
    if (!j.is_object()) throw Error(ErrorCode::parse_error, "request body must be an object");
    return j;
  } catch (const io::json::exception& e) {
    throw Error(ErrorCode::parse_error, std::string("malformed request body: ") + e.what());
  }
}

Response create_session(SessionStore& store, const io::json& body) {
  std::optional<ExchangeMatrix> b0;
  if (body.contains("preset")) {
    if (!body.at("preset").is_string()) throw Error(ErrorCode::parse_error, "preset must be a string");
    b0 = fixtures::preset(body.at("preset").get<std::string>());
    if (!b0) throw Error(ErrorCode::invalid_argument, "unknown preset '" + body.at("preset").get<std::string>() + "'");
  } else if (body.contains("B")) {
    b0 = ExchangeMatrix::validate(io::matrix_from_json(body.at("B")));
  } else {
    throw Error(ErrorCode::parse_error, "body needs \"B\" or \"preset\"");
  }
  const std::string id = store.create(*b0);
  auto locked = store.find(id);
  return {201, {{"id", id}, {"state", locked.session->state()}}};
}

Response mutate(Session& s, const io::json& body) {
  if (!body.contains("k") || !body.at("k").is_number_integer())
    throw Error(ErrorCode::parse_error, "body needs an integer \"k\"");
  const int k = body.at("k").get<int>();
  if (k < 1 || static_cast<std::size_t>(k) > s.initial_matrix().size())
    throw Error(ErrorCode::invalid_argument, "vertex " + std::to_string(k) + " out of range");
  const std::vector<int> before = s.history();
  try {
    s.mutate(k - 1);
    return {200, s.state()};
  } catch (const Error& e) {
    // Leave the cursor where the client last saw it.
    if (s.history() != before) s.undo();
    Response r = from_error(e);
    std::vector<int> walk = before;
    walk.push_back(k - 1);
    r.body["replay"] = {{"B0", io::to_json(s.initial_matrix().entries())}, {"walk", io::walk_json(walk)}};
    return r;
  }
}

}  // namespace

Response handle(SessionStore& store, std::string_view method, std::string_view path, std::string_view body,
                const ApiOptions& options) {
  try {
    const auto parts = split_path(path);
    if (parts.size() < 2 || parts[0] != "api" || parts[1] != "session") return error(404, "NotFound", "no such route");

    Response r;
    bool changed = false;
    if (parts.size() == 2) {
      if (method != "POST") return error(405, "MethodNotAllowed", "use POST to create a session");
      r = create_session(store, parse_body(body));
      changed = true;
    } else {
      auto locked = store.find(std::string(parts[2]));
      if (!locked) return error(404, "UnknownSession", "no session '" + std::string(parts[2]) + "'");
      Session& s = *locked.session;
      const std::string_view action = parts.size() > 3 ? parts[3] : "";
      if (parts.size() > 4) return error(404, "NotFound", "no such route");
      if (action.empty() && method == "GET") {
        r = {200, s.state()};
      } else if (action == "mutate" && method == "POST") {
        r = mutate(s, parse_body(body));
        changed = r.status == 200;
      } else if (action == "undo" && method == "POST") {
        if (!s.undo()) return error(409, "AtRoot", "session is at its initial seed");
        r = {200, s.state()};
        changed = true;
      } else if (action == "find-companion" && method == "GET") {
        r = {200, companion_decision_json(s.current_seed().matrix())};
      } else {
        return error(404, "NotFound", "no such route");
      }
    }
    if (changed && options.snapshot_path) store.save(*options.snapshot_path);
    return r;
  } catch (const Error& e) {
    return from_error(e);
  }
}

int default_port() {
  if (const char* env = std::getenv(kPortEnv)) {
    char* end = nullptr;
    const long p = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && p > 0 && p < 65536) return static_cast<int>(p);
  }
  return kDefaultPort;
}

struct Server::Impl {
  SessionStore& store;
  ApiOptions options;
  httplib::Server http;
};

Server::Server(SessionStore& store, ApiOptions options) : impl_(new Impl{store, std::move(options), {}}) {
  auto dispatch = [this](const httplib::Request& req, httplib::Response& res) {
    const Response r = handle(impl_->store, req.method, req.path, req.body, impl_->options);
    res.status = r.status;
    res.set_content(r.body.dump(), "application/json");
  };
  impl_->http.set_default_headers({{"Access-Control-Allow-Origin", "*"},
                                   {"Access-Control-Allow-Headers", "Content-Type"},
                                   {"Access-Control-Allow-Methods", "GET, POST, OPTIONS"}});
  impl_->http.Get(R"(/api/.*)", dispatch);
  impl_->http.Post(R"(/api/.*)", dispatch);
  impl_->http.Options(R"(/api/.*)", [](const httplib::Request&, httplib::Response& res) { res.status = 204; });
}

Server::~Server() { stop(); }

int Server::bind(const std::string& host, int port) {
  if (port == 0) return impl_->http.bind_to_any_port(host);
  return impl_->http.bind_to_port(host, port) ? port : -1;
}

void Server::listen() { impl_->http.listen_after_bind(); }

void Server::stop() { impl_->http.stop(); }

}  // namespace qc::api
