#include "quasicartan/session.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>

namespace qc {

namespace {

std::optional<QuasiCartan> cvector_companion(const ExchangeMatrix& b0, const YSeed& seed) {
  if (!is_acyclic(Diagram(b0))) return std::nullopt;
  try {
    return companion_from_cvectors(cartan_of(b0), seed);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::overflow) throw;
    return std::nullopt;
  }
}

}  // namespace

io::json seed_state(const ExchangeMatrix& b0, const YSeed& seed, const std::vector<int>& history) {
  const ExchangeMatrix& b = seed.matrix();
  io::json state{{"n", b.size()}, {"B", io::to_json(b.entries())}, {"c", seed.coords()},
                 {"history", io::walk_json(history)}};

  std::optional<QuasiCartan> companion = cvector_companion(b0, seed);
  std::string source = "cvectors";
  if (!companion) {
    source = "parity";
    companion = find_admissible_companion(b).companion;
  }
  if (companion) {
    state["companion"] = io::companion_json(*companion);
    state["companion_source"] = source;
    state["admissible"] = is_admissible(*companion, b).admissible;
    try {
      state["cut"] = io::edges_json(admissible_cut(*companion, b));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::not_admissible) throw;
      state["cut"] = nullptr;
    }
  } else {
    state["companion"] = nullptr;
    state["companion_source"] = nullptr;
    state["admissible"] = false;
    state["cut"] = nullptr;
  }

  io::json cycles = io::json::array();
  for (const Cycle& c : chordless_cycles(Diagram(b))) cycles.push_back(io::to_json(c));
  state["cycles"] = std::move(cycles);
  return state;
}

io::json replay_state(const ExchangeMatrix& b0, const std::vector<int>& history) {
  return seed_state(b0, apply_walk(initial_seed(b0), history).last(), history);
}

io::json companion_decision_json(const ExchangeMatrix& b) { return io::to_json(find_admissible_companion(b)); }

Session::Session(std::string id, ExchangeMatrix b0, std::int64_t created_unix)
    : id_(std::move(id)), b0_(b0), created_(created_unix) {
  nodes_.push_back({initial_seed(b0_), std::nullopt, -1, {}});
}

std::vector<int> Session::history() const {
  std::vector<int> labels;
  for (std::size_t v = current_; nodes_[v].parent; v = *nodes_[v].parent) labels.push_back(nodes_[v].label);
  return {labels.rbegin(), labels.rend()};
}

void Session::mutate(int k) {
  if (k < 0 || static_cast<std::size_t>(k) >= b0_.size())
    throw Error(ErrorCode::invalid_argument, "vertex " + std::to_string(k + 1) + " out of range");
  const Node& node = nodes_[current_];
  if (node.parent && node.label == k) {
    current_ = *node.parent;
    return;
  }
  if (auto it = node.children.find(k); it != node.children.end()) {
    current_ = it->second;
    return;
  }
  YSeed next = mutate_seed(node.seed, k);
  ++computed_;
  const std::size_t id = nodes_.size();
  nodes_.push_back({std::move(next), current_, k, {}});
  nodes_[current_].children.emplace(k, id);
  current_ = id;
}

bool Session::undo() {
  if (!nodes_[current_].parent) return false;
  current_ = *nodes_[current_].parent;
  return true;
}

io::json Session::state() const { return seed_state(b0_, current_seed(), history()); }

io::json Session::to_json() const {
  io::json nodes = io::json::array();
  for (const Node& n : nodes_)
    nodes.push_back({{"parent", n.parent ? io::json(*n.parent) : io::json(nullptr)}, {"k", n.label + 1}});
  return {{"id", id_}, {"B0", io::to_json(b0_.entries())}, {"created", created_}, {"current", current_},
          {"nodes", std::move(nodes)}};
}

Session Session::from_json(const io::json& j) {
  try {
    Session s(j.at("id").get<std::string>(), ExchangeMatrix::validate(io::matrix_from_json(j.at("B0"))),
              j.at("created").get<std::int64_t>());
    const io::json& nodes = j.at("nodes");
    for (std::size_t v = 1; v < nodes.size(); ++v) {
      const std::size_t parent = nodes[v].at("parent").get<std::size_t>();
      const int k = nodes[v].at("k").get<int>() - 1;
      if (parent >= v || k < 0 || static_cast<std::size_t>(k) >= s.b0_.size())
        throw Error(ErrorCode::parse_error, "malformed session tree");
      s.nodes_.push_back({mutate_seed(s.nodes_[parent].seed, k), parent, k, {}});
      s.nodes_[parent].children.emplace(k, v);
    }
    s.current_ = j.at("current").get<std::size_t>();
    if (s.current_ >= s.nodes_.size()) throw Error(ErrorCode::parse_error, "session cursor out of range");
    return s;
  } catch (const io::json::exception& e) {
    throw Error(ErrorCode::parse_error, std::string("malformed session snapshot: ") + e.what());
  }
}

std::string SessionStore::create(const ExchangeMatrix& b0) {
  static thread_local std::mt19937_64 rng{std::random_device{}()};
  const auto now = std::chrono::duration_cast<std::chrono::seconds>(
                       std::chrono::system_clock::now().time_since_epoch())
                       .count();
  std::lock_guard guard(mutex_);
  std::ostringstream id;
  id << std::hex << (rng() & 0xffffffffffffULL) << '-' << ++counter_;
  auto entry = std::make_shared<Entry>(Session(id.str(), b0, now));
  sessions_.emplace(id.str(), std::move(entry));
  return id.str();
}

SessionStore::Locked SessionStore::find(const std::string& id) {
  std::shared_ptr<Entry> entry;
  {
    std::lock_guard guard(mutex_);
    auto it = sessions_.find(id);
    if (it == sessions_.end()) return {};
    entry = it->second;
  }
  // Entries are never erased, so the raw pointer outlives the lock.
  return {std::unique_lock(entry->mutex), &entry->session};
}

std::size_t SessionStore::size() const {
  std::lock_guard guard(mutex_);
  return sessions_.size();
}

io::json SessionStore::snapshot() const {
  std::vector<std::shared_ptr<Entry>> entries;
  {
    std::lock_guard guard(mutex_);
    for (const auto& [_, e] : sessions_) entries.push_back(e);
  }
  io::json out = io::json::array();
  for (const auto& e : entries) {
    std::lock_guard guard(e->mutex);
    out.push_back(e->session.to_json());
  }
  return {{"sessions", std::move(out)}};
}

void SessionStore::restore(const io::json& j) {
  std::lock_guard guard(mutex_);
  for (const io::json& s : j.at("sessions")) {
    Session session = Session::from_json(s);
    const std::string id = session.id();
    sessions_[id] = std::make_shared<Entry>(std::move(session));
  }
}

void SessionStore::save(const std::string& path) const {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) throw Error(ErrorCode::invalid_argument, "cannot write snapshot " + path);
    out << snapshot().dump(2) << '\n';
  }
  std::rename(tmp.c_str(), path.c_str());
}

void SessionStore::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) return;
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    restore(io::json::parse(buf.str()));
  } catch (const io::json::exception& e) {
    throw Error(ErrorCode::parse_error, std::string("malformed snapshot file: ") + e.what());
  }
}

}  // namespace qc
