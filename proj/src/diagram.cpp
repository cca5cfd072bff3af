#include "quasicartan/diagram.hpp"

#include <algorithm>

namespace qc {

Diagram::Diagram(const ExchangeMatrix& b) : Diagram(b.size()) {
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      if (i != j && b(j, i) > 0)
        add_arrow(static_cast<int>(i), static_cast<int>(j), checked_abs(checked_mul(b(i, j), b(j, i))));
}

Diagram Diagram::from_arrows(std::size_t n, std::span<const Arrow> arrows) {
  Diagram d(n);
  for (const Arrow& a : arrows) {
    if (a.from < 0 || a.to < 0 || idx(a.from) >= n || idx(a.to) >= n || a.from == a.to || a.weight <= 0)
      throw Error(ErrorCode::invalid_argument, "invalid arrow");
    if (d.adjacent(a.from, a.to)) throw Error(ErrorCode::invalid_argument, "two arrows on one vertex pair");
    d.add_arrow(a.from, a.to, a.weight);
  }
  return d;
}

void Diagram::add_arrow(int from, int to, Int w) {
  weight_(idx(from), idx(to)) = w;
  auto insert_sorted = [](std::vector<int>& v, int x) { v.insert(std::upper_bound(v.begin(), v.end(), x), x); };
  insert_sorted(neighbours_[idx(from)], to);
  insert_sorted(neighbours_[idx(to)], from);
}

std::vector<Arrow> Diagram::arrows() const {
  std::vector<Arrow> out;
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      if (weight_(i, j) > 0) out.push_back({static_cast<int>(i), static_cast<int>(j), weight_(i, j)});
  return out;
}

std::vector<Edge> Diagram::edges() const {
  std::vector<Edge> out;
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j)
      if (weight_(i, j) > 0 || weight_(j, i) > 0) out.push_back({static_cast<int>(i), static_cast<int>(j)});
  return out;
}

std::vector<int> Cycle::vertex_set() const {
  std::vector<int> s = vertices;
  std::sort(s.begin(), s.end());
  return s;
}

std::vector<Edge> Cycle::edges() const {
  std::vector<Edge> out;
  for (std::size_t i = 0; i < vertices.size(); ++i)
    out.push_back(Edge::of(vertices[i], vertices[(i + 1) % vertices.size()]));
  return out;
}

bool is_acyclic(const Diagram& d) {
  // Kahn's algorithm.
  const std::size_t n = d.size();
  std::vector<int> indegree(n, 0);
  for (const Arrow& a : d.arrows()) ++indegree[static_cast<std::size_t>(a.to)];
  std::vector<int> ready;
  for (std::size_t v = 0; v < n; ++v)
    if (indegree[v] == 0) ready.push_back(static_cast<int>(v));
  std::size_t removed = 0;
  while (!ready.empty()) {
    const int v = ready.back();
    ready.pop_back();
    ++removed;
    for (int w : d.neighbours(v))
      if (d.has_arrow(v, w) && --indegree[static_cast<std::size_t>(w)] == 0) ready.push_back(w);
  }
  return removed == n;
}

namespace {

bool is_oriented(const Diagram& d, const std::vector<int>& cyc) {
  const std::size_t m = cyc.size();
  bool forward = true, backward = true;
  for (std::size_t i = 0; i < m; ++i) {
    const int u = cyc[i], v = cyc[(i + 1) % m];
    forward = forward && d.has_arrow(u, v);
    backward = backward && d.has_arrow(v, u);
  }
  return forward || backward;
}

// Grows chordless paths s = p[0], p[1], ... using only vertices > s. A path
// closes into a cycle when its newest vertex touches s; each cycle is found
// twice (once per direction) and kept only when p[1] < p.back().
void extend(const Diagram& d, std::vector<int>& path, std::vector<char>& on_path, std::vector<Cycle>& out) {
  const int s = path.front();
  const int last = path.back();
  for (int v : d.neighbours(last)) {
    if (v <= s || on_path[static_cast<std::size_t>(v)]) continue;
    bool chord = false;
    for (std::size_t i = 1; i + 1 < path.size(); ++i)
      if (d.adjacent(v, path[i])) {
        chord = true;
        break;
      }
    if (chord) continue;
    if (path.size() >= 2 && d.adjacent(v, s)) {
      if (path[1] < v) {
        std::vector<int> cyc = path;
        cyc.push_back(v);
        out.push_back({cyc, is_oriented(d, cyc)});
      }
      continue;
    }
    path.push_back(v);
    on_path[static_cast<std::size_t>(v)] = 1;
    extend(d, path, on_path, out);
    on_path[static_cast<std::size_t>(v)] = 0;
    path.pop_back();
  }
}

}  // namespace

std::vector<Cycle> chordless_cycles(const Diagram& d) {
  std::vector<Cycle> out;
  std::vector<char> on_path(d.size(), 0);
  for (std::size_t s = 0; s < d.size(); ++s) {
    std::vector<int> path{static_cast<int>(s)};
    on_path[s] = 1;
    extend(d, path, on_path, out);
    on_path[s] = 0;
  }
  std::sort(out.begin(), out.end(), [](const Cycle& a, const Cycle& b) {
    const auto sa = a.vertex_set(), sb = b.vertex_set();
    return sa != sb ? sa < sb : a.vertices < b.vertices;
  });
  return out;
}

namespace {

void walk_paths(const Diagram& d, std::size_t max_len, std::vector<int>& path, std::vector<char>& on_path,
                const std::function<void(std::span<const int>)>& visit) {
  if (path.size() >= 2) visit(path);
  if (path.size() >= max_len) return;
  for (int w : d.neighbours(path.back())) {
    if (on_path[static_cast<std::size_t>(w)] || !d.has_arrow(path.back(), w)) continue;
    on_path[static_cast<std::size_t>(w)] = 1;
    path.push_back(w);
    walk_paths(d, max_len, path, on_path, visit);
    path.pop_back();
    on_path[static_cast<std::size_t>(w)] = 0;
  }
}

}  // namespace

void for_each_directed_path(const Diagram& d, std::size_t max_len,
                            const std::function<void(std::span<const int>)>& visit) {
  if (max_len < 2) throw Error(ErrorCode::invalid_argument, "max_len must be at least 2");
  std::vector<char> on_path(d.size(), 0);
  for (std::size_t s = 0; s < d.size(); ++s) {
    std::vector<int> path{static_cast<int>(s)};
    on_path[s] = 1;
    walk_paths(d, max_len, path, on_path, visit);
    on_path[s] = 0;
  }
}

std::vector<std::vector<int>> directed_paths(const Diagram& d, std::size_t max_len) {
  std::vector<std::vector<int>> out;
  for_each_directed_path(d, max_len, [&](std::span<const int> p) { out.emplace_back(p.begin(), p.end()); });
  return out;
}

bool is_induced_path(const Diagram& d, std::span<const int> path) {
  for (std::size_t a = 0; a < path.size(); ++a)
    for (std::size_t b = a + 2; b < path.size(); ++b)
      if (d.adjacent(path[a], path[b])) return false;
  return true;
}

}  // namespace qc
