#include "quasicartan/fixtures.hpp"

namespace qc::fixtures {

ExchangeMatrix from_quiver(std::size_t n, std::initializer_list<std::tuple<int, int, Int>> arrows) {
  IntMatrix b(n);
  for (const auto& [from, to, count] : arrows) {
    b(static_cast<std::size_t>(to - 1), static_cast<std::size_t>(from - 1)) += count;
    b(static_cast<std::size_t>(from - 1), static_cast<std::size_t>(to - 1)) -= count;
  }
  return ExchangeMatrix::validate(b);
}

ExchangeMatrix a2() { return ExchangeMatrix::validate({{0, 1}, {-1, 0}}); }
ExchangeMatrix a3() { return from_quiver(3, {{1, 2, 1}, {2, 3, 1}}); }
ExchangeMatrix c3() { return from_quiver(3, {{1, 2, 1}, {2, 3, 1}, {3, 1, 1}}); }
ExchangeMatrix k4() {
  return from_quiver(4, {{1, 3, 1}, {3, 4, 1}, {3, 2, 1}, {1, 4, 1}, {2, 1, 1}, {2, 4, 1}});
}
ExchangeMatrix markov() { return from_quiver(3, {{1, 2, 2}, {2, 3, 2}, {3, 1, 2}}); }
ExchangeMatrix a4() { return from_quiver(4, {{1, 2, 1}, {2, 3, 1}, {3, 4, 1}}); }
ExchangeMatrix d4() { return from_quiver(4, {{1, 2, 1}, {2, 3, 1}, {2, 4, 1}}); }
ExchangeMatrix a5() { return from_quiver(5, {{1, 2, 1}, {2, 3, 1}, {3, 4, 1}, {4, 5, 1}}); }
ExchangeMatrix b2() { return ExchangeMatrix::validate({{0, 1}, {-2, 0}}); }

std::optional<ExchangeMatrix> preset(std::string_view name) {
  if (name == "a2") return a2();
  if (name == "a3") return a3();
  if (name == "c3") return c3();
  if (name == "k4") return k4();
  if (name == "markov") return markov();
  return std::nullopt;
}

std::vector<std::string_view> preset_names() { return {"a2", "a3", "c3", "k4", "markov"}; }

}  // namespace qc::fixtures
