#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "quasicartan/companion.hpp"
#include "quasicartan/mutation_class.hpp"
#include "quasicartan/verify.hpp"

// Wire and file formats. Vertex indices are 1-based on this side of the
// boundary and 0-based everywhere else.
namespace qc::io {

using json = nlohmann::json;

// "n" on the first line, then n rows of n integers.
IntMatrix parse_matrix_text(std::string_view text);
std::string format_matrix_text(const IntMatrix& m);

// Matrix text, a matrix object {"n", "rows"}, or a companion object {"A"}.
IntMatrix parse_matrix(std::string_view text);
IntMatrix matrix_from_json(const json& j);

json to_json(const IntMatrix& m);  // {"n", "rows"}
json rows_json(const IntMatrix& m);
json to_json(const YSeed& s);      // {"c", "B"}
json companion_json(const QuasiCartan& a);  // {"A"}
json to_json(const Edge& e);
json edges_json(const std::vector<Edge>& edges);
json to_json(const Cycle& c);
json walk_json(const std::vector<int>& walk);
json to_json(const CompanionDecision& d);
json to_json(const MutationClassReport& r);
json to_json(const VerificationReport& r);
json to_json(const RealRootCheck& r);

// 1-based vertex list → 0-based; throws invalid_argument when out of range.
std::vector<int> walk_from_external(const std::vector<int>& ks, std::size_t n);

}  // namespace qc::io
