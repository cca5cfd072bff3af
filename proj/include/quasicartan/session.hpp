#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "quasicartan/serialize.hpp"

namespace qc {

// The view of one Y-seed served to clients. Depends only on the initial
// matrix and the walk, so replaying the labels offline reproduces it byte
// for byte.
io::json seed_state(const ExchangeMatrix& b0, const YSeed& seed, const std::vector<int>& history);
io::json replay_state(const ExchangeMatrix& b0, const std::vector<int>& history);

// Existence decision for the current matrix: companion or certificate.
io::json companion_decision_json(const ExchangeMatrix& b);

// A finite subtree of the n-regular tree of Y-seeds rooted at the standard
// basis seed, with a cursor.
class Session {
 public:
  Session(std::string id, ExchangeMatrix b0, std::int64_t created_unix);

  const std::string& id() const noexcept { return id_; }
  const ExchangeMatrix& initial_matrix() const noexcept { return b0_; }
  std::int64_t created() const noexcept { return created_; }
  const YSeed& current_seed() const { return nodes_[current_].seed; }
  std::size_t current_node() const noexcept { return current_; }
  std::size_t node_count() const noexcept { return nodes_.size(); }

  // 0-based labels from the root to the cursor.
  std::vector<int> history() const;

  // Moves along the edge labelled k (0-based). Stepping back over the
  // incoming edge, or onto an existing child, reuses the stored seed.
  void mutate(int k);
  // Moves to the parent; false at the root.
  bool undo();

  // Number of seeds computed by Y-seed mutation so far.
  std::size_t computed_seeds() const noexcept { return computed_; }

  io::json state() const;

  // Snapshot of the whole tree; from_json recomputes every seed from the
  // stored labels.
  io::json to_json() const;
  static Session from_json(const io::json& j);

 private:
  struct Node {
    YSeed seed;
    std::optional<std::size_t> parent;
    int label = -1;
    std::map<int, std::size_t> children;
  };

  std::string id_;
  ExchangeMatrix b0_;
  std::int64_t created_ = 0;
  std::vector<Node> nodes_;
  std::size_t current_ = 0;
  std::size_t computed_ = 0;
};

// Thread-safe session registry. Requests on one session are serialized;
// different sessions proceed concurrently.
class SessionStore {
 public:
  struct Locked {
    std::unique_lock<std::mutex> lock;
    Session* session = nullptr;
    explicit operator bool() const noexcept { return session != nullptr; }
  };

  std::string create(const ExchangeMatrix& b0);
  Locked find(const std::string& id);
  std::size_t size() const;

  io::json snapshot() const;
  void restore(const io::json& j);
  void save(const std::string& path) const;
  void load(const std::string& path);

 private:
  struct Entry {
    std::mutex mutex;
    Session session;
    explicit Entry(Session s) : session(std::move(s)) {}
  };

  mutable std::mutex mutex_;
  std::map<std::string, std::shared_ptr<Entry>> sessions_;
  std::uint64_t counter_ = 0;
};

}  // namespace qc
