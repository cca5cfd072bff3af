#pragma once

#include <optional>
#include <string_view>
#include <tuple>
#include <vector>

#include "quasicartan/exchange_matrix.hpp"

namespace qc::fixtures {

// Skew-symmetric matrix of a quiver given by 1-based (from, to, arrow count).
ExchangeMatrix from_quiver(std::size_t n, std::initializer_list<std::tuple<int, int, Int>> arrows);

ExchangeMatrix a2();      // 2 → 1
ExchangeMatrix a3();      // 1 → 2 → 3
ExchangeMatrix c3();      // oriented triangle 1 → 2 → 3 → 1
ExchangeMatrix k4();      // four vertices, no admissible companion
ExchangeMatrix markov();  // oriented triangle with double arrows
ExchangeMatrix a4();      // 1 → 2 → 3 → 4
ExchangeMatrix d4();      // 1 → 2, 2 → 3, 2 → 4
ExchangeMatrix a5();      // 1 → 2 → 3 → 4 → 5
ExchangeMatrix b2();      // [[0,1],[-2,0]]

// Session presets: a2, a3, c3, k4, markov.
std::optional<ExchangeMatrix> preset(std::string_view name);
std::vector<std::string_view> preset_names();

}  // namespace qc::fixtures
