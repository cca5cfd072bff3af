#include "quasicartan/mutation_class.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>

#include "quasicartan/diagram.hpp"

namespace qc {

IntMatrix canonical_form(const IntMatrix& m) {
  const std::size_t n = m.size();
  if (n > kMaxCanonicalSize)
    throw Error(ErrorCode::invalid_argument,
                "canonical form is limited to n <= " + std::to_string(kMaxCanonicalSize));
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<int> best = perm;
  auto entry = [&](const std::vector<int>& p, std::size_t idx) {
    return m(static_cast<std::size_t>(p[idx / n]), static_cast<std::size_t>(p[idx % n]));
  };
  while (std::next_permutation(perm.begin(), perm.end())) {
    for (std::size_t idx = 0; idx < n * n; ++idx) {
      const Int a = entry(perm, idx), b = entry(best, idx);
      if (a < b) {
        best = perm;
        break;
      }
      if (a > b) break;
    }
  }
  return permute(m, best);
}

MutationClassReport mutation_class(const ExchangeMatrix& b, std::size_t max_class_size, std::size_t max_depth) {
  if (max_class_size == 0 || max_depth == 0)
    throw Error(ErrorCode::invalid_argument, "class bounds must be positive");

  struct Node {
    ExchangeMatrix matrix;
    std::vector<int> walk;
  };

  MutationClassReport report;
  report.max_class_size = max_class_size;
  report.max_depth = max_depth;

  std::map<IntMatrix, std::size_t> seen;
  std::deque<Node> frontier;
  bool truncated = false;

  auto note_acyclic = [&](const Node& node) {
    if (!report.acyclic && is_acyclic(Diagram(node.matrix)))
      report.acyclic = AcyclicWitness{node.walk, node.matrix.entries()};
  };

  Node root{b, {}};
  seen.emplace(canonical_form(b.entries()), 0);
  note_acyclic(root);
  frontier.push_back(std::move(root));

  while (!frontier.empty() && !truncated) {
    Node node = std::move(frontier.front());
    frontier.pop_front();
    report.depth_reached = std::max(report.depth_reached, node.walk.size());
    const std::size_t n = node.matrix.size();
    for (std::size_t k = 0; k < n; ++k) {
      ExchangeMatrix next = mutate_matrix(node.matrix, static_cast<int>(k));
      IntMatrix key = canonical_form(next.entries());
      if (seen.contains(key)) continue;
      if (node.walk.size() >= max_depth || seen.size() >= max_class_size) {
        truncated = true;
        break;
      }
      seen.emplace(std::move(key), seen.size());
      Node child{std::move(next), node.walk};
      child.walk.push_back(static_cast<int>(k));
      note_acyclic(child);
      frontier.push_back(std::move(child));
    }
  }

  for (const auto& [key, _] : seen) report.representatives.push_back(key);
  report.complete = !truncated;
  if (truncated)
    throw BoundsExceeded("mutation class did not close within size " + std::to_string(max_class_size) +
                             " and depth " + std::to_string(max_depth),
                         std::move(report));
  return report;
}

}  // namespace qc
