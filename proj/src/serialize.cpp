#include "quasicartan/serialize.hpp"

#include <cctype>
#include <sstream>

namespace qc::io {

IntMatrix parse_matrix_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  long long n = 0;
  if (!(in >> n) || n <= 0) throw Error(ErrorCode::parse_error, "expected a positive dimension on the first line");
  std::vector<std::vector<Int>> rows(static_cast<std::size_t>(n), std::vector<Int>(static_cast<std::size_t>(n)));
  for (auto& row : rows)
    for (Int& x : row) {
      long long v;
      if (!(in >> v)) throw Error(ErrorCode::parse_error, "expected " + std::to_string(n * n) + " integer entries");
      x = v;
    }
  std::string rest;
  if (in >> rest) throw Error(ErrorCode::parse_error, "unexpected trailing input '" + rest + "'");
  return IntMatrix::from_rows(rows);
}

std::string format_matrix_text(const IntMatrix& m) {
  std::ostringstream os;
  os << m.size() << '\n';
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) os << (j ? " " : "") << m(i, j);
    os << '\n';
  }
  return os.str();
}

IntMatrix matrix_from_json(const json& j) {
  try {
    if (j.is_object() && j.contains("A")) return matrix_from_json(j.at("A"));
    if (j.is_object() && j.contains("B")) return matrix_from_json(j.at("B"));
    const json& rows = j.is_object() ? j.at("rows") : j;
    if (!rows.is_array()) throw Error(ErrorCode::parse_error, "matrix rows must be an array");
    IntMatrix m = IntMatrix::from_rows(rows.get<std::vector<std::vector<Int>>>());
    if (j.is_object() && j.contains("n") && j.at("n").get<std::size_t>() != m.size())
      throw Error(ErrorCode::parse_error, "field n disagrees with the number of rows");
    return m;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::parse_error, std::string("malformed matrix object: ") + e.what());
  } catch (const Error& e) {
    if (e.code() == ErrorCode::parse_error) throw;
    throw Error(ErrorCode::parse_error, e.what());
  }
}

IntMatrix parse_matrix(std::string_view text) {
  std::size_t p = 0;
  while (p < text.size() && std::isspace(static_cast<unsigned char>(text[p]))) ++p;
  if (p < text.size() && (text[p] == '{' || text[p] == '[')) {
    json j;
    try {
      j = json::parse(text);
    } catch (const json::exception& e) {
      throw Error(ErrorCode::parse_error, std::string("invalid JSON: ") + e.what());
    }
    return matrix_from_json(j);
  }
  return parse_matrix_text(text);
}

json rows_json(const IntMatrix& m) { return m.rows(); }

json to_json(const IntMatrix& m) { return {{"n", m.size()}, {"rows", rows_json(m)}}; }

json to_json(const YSeed& s) { return {{"c", s.coords()}, {"B", to_json(s.matrix().entries())}}; }

json companion_json(const QuasiCartan& a) { return {{"A", rows_json(a.entries())}}; }

json to_json(const Edge& e) { return json::array({e.a + 1, e.b + 1}); }

json edges_json(const std::vector<Edge>& edges) {
  json out = json::array();
  for (const Edge& e : edges) out.push_back(to_json(e));
  return out;
}

json walk_json(const std::vector<int>& walk) {
  json out = json::array();
  for (int k : walk) out.push_back(k + 1);
  return out;
}

json to_json(const Cycle& c) { return {{"vertices", walk_json(c.vertices)}, {"oriented", c.oriented}}; }

json to_json(const CompanionDecision& d) {
  json out{{"exists", d.companion.has_value()}, {"cross_checked", d.cross_checked}};
  if (d.companion) {
    out["companion"] = companion_json(*d.companion);
  } else {
    json cert = json::array();
    for (const ParityEquation& eq : d.certificate)
      cert.push_back({{"cycle", walk_json(eq.cycle.vertices)}, {"oriented", eq.cycle.oriented}, {"parity", eq.parity}});
    out["certificate"] = std::move(cert);
  }
  return out;
}

json to_json(const MutationClassReport& r) {
  json reps = json::array();
  for (const IntMatrix& m : r.representatives) reps.push_back(to_json(m));
  json out{{"class_size", r.class_size()},
           {"complete", r.complete},
           {"bounds", {{"max_class_size", r.max_class_size}, {"max_depth", r.max_depth}}},
           {"depth_reached", r.depth_reached},
           {"representatives", std::move(reps)}};
  if (r.acyclic)
    out["acyclic"] = {{"found", true}, {"walk", walk_json(r.acyclic->walk)}, {"matrix", to_json(r.acyclic->matrix)}};
  else
    out["acyclic"] = {{"found", false}};
  return out;
}

namespace {

std::string_view outcome_name(Outcome o) {
  switch (o) {
    case Outcome::pass: return "pass";
    case Outcome::fail: return "fail";
    case Outcome::unknown: return "unknown";
  }
  return "unknown";
}

}  // namespace

json to_json(const VerificationReport& r) {
  json tallies = json::object();
  for (const auto& [c, t] : r.tallies)
    tallies[std::string(to_string(c))] = {{"pass", t.pass}, {"fail", t.fail}, {"unknown", t.unknown}};
  json findings = json::array();
  for (const Finding& f : r.findings)
    findings.push_back({{"trial", f.trial},
                        {"step", f.step},
                        {"check", std::string(to_string(f.check))},
                        {"outcome", std::string(outcome_name(f.outcome))},
                        {"detail", f.detail},
                        {"replay", {{"B0", to_json(f.replay.b0)}, {"walk", walk_json(f.replay.walk)}}}});
  json walks = json::array();
  for (const auto& w : r.walks) walks.push_back(walk_json(w));
  json out{{"mode", r.mode},
           {"experimental", r.experimental},
           {"B0", to_json(r.b0)},
           {"depth", r.depth},
           {"trials", r.trials},
           {"walks", std::move(walks)},
           {"tallies", std::move(tallies)},
           {"findings", std::move(findings)},
           {"failures", r.failures()},
           {"unknowns", r.unknowns()},
           {"clean", r.clean()}};
  out["seed"] = r.seed ? json(*r.seed) : json(nullptr);
  return out;
}

json to_json(const RealRootCheck& r) {
  json out{{"verdict", r.verdict == Verdict::yes ? "yes" : r.verdict == Verdict::no ? "no" : "unknown"},
           {"bound", r.bound}};
  if (r.verdict == Verdict::yes) {
    out["simple_root"] = r.simple + 1;
    out["word"] = walk_json(r.word);
    out["sign"] = to_int(r.sign);
  }
  return out;
}

std::vector<int> walk_from_external(const std::vector<int>& ks, std::size_t n) {
  std::vector<int> out;
  out.reserve(ks.size());
  for (int k : ks) {
    if (k < 1 || static_cast<std::size_t>(k) > n)
      throw Error(ErrorCode::invalid_argument, "vertex " + std::to_string(k) + " is outside 1.." + std::to_string(n));
    out.push_back(k - 1);
  }
  return out;
}

}  // namespace qc::io
