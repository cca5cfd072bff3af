#include "quasicartan/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "quasicartan/api.hpp"
#include "quasicartan/serialize.hpp"

namespace qc::cli {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::parse_error, "cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

ExchangeMatrix load_matrix(const std::string& path) { return ExchangeMatrix::validate(io::parse_matrix(read_file(path))); }

std::string format_edges(const std::vector<Edge>& edges) {
  std::string s = "{";
  for (std::size_t i = 0; i < edges.size(); ++i)
    s += (i ? "," : "") + std::string("{") + std::to_string(edges[i].a + 1) + "," + std::to_string(edges[i].b + 1) + "}";
  return s + "}";
}

std::string format_walk(const std::vector<int>& walk) {
  std::string s = "[";
  for (std::size_t i = 0; i < walk.size(); ++i) s += (i ? "," : "") + std::to_string(walk[i] + 1);
  return s + "]";
}

std::string format_cycle(const Cycle& c) {
  std::string s = "{";
  for (std::size_t i = 0; i < c.vertices.size(); ++i) s += (i ? "," : "") + std::to_string(c.vertices[i] + 1);
  return s + "} " + (c.oriented ? "oriented" : "non-oriented");
}

struct Options {
  bool json = false;
  std::string file;
  std::vector<int> ks;
  bool cvectors = false;
  bool companion = false;
  std::string companion_file;
  std::size_t max_size = 10000;
  std::size_t max_depth = 100;
  std::vector<std::uint64_t> fuzz;
  bool conjecture = false;
  unsigned threads = 1;
  int port = 0;
  std::string host = "127.0.0.1";
  std::string snapshot;
};

int cmd_mutate(const Options& o, std::ostream& out) {
  ExchangeMatrix b = load_matrix(o.file);
  for (int k : io::walk_from_external(o.ks, b.size())) b = mutate_matrix(b, k);
  if (o.json)
    out << io::to_json(b.entries()).dump() << '\n';
  else
    out << io::format_matrix_text(b.entries());
  return kOk;
}

int cmd_walk(const Options& o, std::ostream& out) {
  const ExchangeMatrix b0 = load_matrix(o.file);
  const std::vector<int> walk = io::walk_from_external(o.ks, b0.size());
  const WalkRecord rec = apply_walk(initial_seed(b0), walk);
  std::optional<CartanMatrix> a0;
  if (o.companion) a0 = cartan_of(b0);

  std::vector<const YSeed*> seeds{&rec.start};
  for (const WalkStep& s : rec.steps) seeds.push_back(&s.seed);

  if (o.json) {
    io::json steps = io::json::array();
    for (std::size_t t = 0; t < seeds.size(); ++t) {
      io::json step{{"step", t}, {"B", io::to_json(seeds[t]->matrix().entries())}};
      if (t) step["k"] = walk[t - 1] + 1;
      if (o.cvectors) step["c"] = seeds[t]->coords();
      if (a0) {
        const QuasiCartan a = companion_from_cvectors(*a0, *seeds[t]);
        step["companion"] = io::companion_json(a);
        step["cut"] = io::edges_json(admissible_cut(a, seeds[t]->matrix()));
      }
      steps.push_back(std::move(step));
    }
    out << io::json{{"steps", std::move(steps)}}.dump() << '\n';
    return kOk;
  }

  for (std::size_t t = 0; t < seeds.size(); ++t) {
    if (t == 0)
      out << "step 0\n";
    else
      out << "step " << t << " k=" << walk[t - 1] + 1 << '\n';
    out << io::format_matrix_text(seeds[t]->matrix().entries());
    if (o.cvectors) out << format_vectors(seeds[t]->coords()) << '\n';
    if (a0) {
      const QuasiCartan a = companion_from_cvectors(*a0, *seeds[t]);
      out << "companion\n" << io::format_matrix_text(a.entries());
      out << "cut " << format_edges(admissible_cut(a, seeds[t]->matrix())) << '\n';
    }
  }
  return kOk;
}

QuasiCartan walk_companion(const Options& o, ExchangeMatrix& b_out) {
  const ExchangeMatrix b0 = load_matrix(o.file);
  const CartanMatrix a0 = cartan_of(b0);
  const YSeed seed = apply_walk(initial_seed(b0), io::walk_from_external(o.ks, b0.size())).last();
  b_out = seed.matrix();
  return companion_from_cvectors(a0, seed);
}

int cmd_companion(const Options& o, std::ostream& out) {
  ExchangeMatrix b = ExchangeMatrix::validate({{0}});
  const QuasiCartan a = walk_companion(o, b);
  const std::vector<Edge> cut = admissible_cut(a, b);
  if (o.json) {
    io::json j = io::companion_json(a);
    j["cut"] = io::edges_json(cut);
    out << j.dump() << '\n';
  } else {
    out << io::format_matrix_text(a.entries()) << "cut " << format_edges(cut) << '\n';
  }
  return kOk;
}

int cmd_cut(const Options& o, std::ostream& out) {
  ExchangeMatrix b = ExchangeMatrix::validate({{0}});
  const QuasiCartan a = walk_companion(o, b);
  const std::vector<Edge> cut = admissible_cut(a, b);
  if (o.json)
    out << io::edges_json(cut).dump() << '\n';
  else
    out << format_edges(cut) << '\n';
  return kOk;
}

int cmd_admissible(const Options& o, std::ostream& out) {
  const ExchangeMatrix b = load_matrix(o.file);
  if (!o.companion_file.empty()) {
    const IntMatrix m = io::parse_matrix(read_file(o.companion_file));
    if (!is_companion_of(m, b)) throw Error(ErrorCode::not_a_companion, "given matrix is not a companion of B");
    const AdmissibilityResult r = is_admissible(QuasiCartan(m), b);
    if (o.json) {
      io::json j{{"admissible", r.admissible}};
      if (r.witness) j["witness"] = io::to_json(*r.witness);
      out << j.dump() << '\n';
    } else if (r.admissible) {
      out << "admissible\n";
    } else {
      out << "not admissible; violating cycle " << format_cycle(*r.witness) << '\n';
    }
    return kOk;
  }

  const CompanionDecision d = find_admissible_companion(b);
  if (o.json) {
    out << io::to_json(d).dump() << '\n';
    return kOk;
  }
  if (d.companion) {
    out << "admissible companion found\n" << io::format_matrix_text(d.companion->entries());
  } else {
    out << "no admissible companion\n";
    out << "certificate: " << d.certificate.size() << " cycle equations summing to 0 = 1 over GF(2)\n";
    for (const ParityEquation& eq : d.certificate)
      out << "  " << format_cycle(eq.cycle) << " parity " << eq.parity << '\n';
  }
  if (d.cross_checked) out << "exhaustive sign search agrees\n";
  return kOk;
}

int cmd_class(const Options& o, std::ostream& out) {
  const ExchangeMatrix b = load_matrix(o.file);
  auto print = [&](const MutationClassReport& r) {
    if (o.json) {
      out << io::to_json(r).dump() << '\n';
      return;
    }
    out << "class size " << r.class_size() << (r.complete ? " (complete)" : " (truncated)") << '\n';
    if (r.acyclic)
      out << "acyclic member reached by walk " << format_walk(r.acyclic->walk) << '\n';
    else
      out << "no acyclic member" << (r.complete ? "" : " within bounds") << '\n';
    for (const IntMatrix& m : r.representatives) out << io::format_matrix_text(m);
  };
  try {
    print(mutation_class(b, o.max_size, o.max_depth));
    return kOk;
  } catch (const BoundsExceeded& e) {
    print(e.partial());
    return kBoundsExceeded;
  }
}

int cmd_verify(const Options& o, std::ostream& out) {
  const ExchangeMatrix b0 = load_matrix(o.file);
  VerificationReport report;
  if (!o.ks.empty()) {
    report = verify_walk(b0, io::walk_from_external(o.ks, b0.size()), o.conjecture);
  } else {
    std::uint64_t depth = 12, trials = 1000, seed = 0;
    if (!o.fuzz.empty()) {
      depth = o.fuzz[0];
      trials = o.fuzz[1];
      seed = o.fuzz[2];
    }
    report = o.conjecture ? conjecture_search(b0, depth, trials, seed, o.threads)
                          : fuzz(b0, depth, trials, seed, o.threads);
  }
  if (o.json) {
    out << io::to_json(report).dump() << '\n';
  } else {
    out << report.mode << (report.experimental ? " (experimental)" : "") << ": " << report.trials
        << " walk(s), depth " << report.depth << '\n';
    for (const auto& [c, t] : report.tallies)
      out << "  " << to_string(c) << ": pass " << t.pass << ", fail " << t.fail << ", unknown " << t.unknown << '\n';
    for (const Finding& f : report.findings)
      out << (f.outcome == Outcome::fail ? "FAIL " : "UNKNOWN ") << to_string(f.check) << " trial " << f.trial
          << " step " << f.step << " replay " << format_walk(f.replay.walk) << ": " << f.detail << '\n';
    out << (report.clean() ? "clean" : report.failures() ? "violations found" : "indeterminate") << '\n';
  }
  if (report.failures()) return kPropertyViolation;
  if (report.unknowns()) return kIndeterminate;
  return kOk;
}

int cmd_serve(const Options& o, std::ostream& out, std::ostream& err) {
  SessionStore store;
  api::ApiOptions options;
  if (!o.snapshot.empty()) {
    store.load(o.snapshot);
    options.snapshot_path = o.snapshot;
  }
  api::Server server(store, options);
  const int port = server.bind(o.host, o.port ? o.port : api::default_port());
  if (port < 0) {
    err << "cannot bind " << o.host << ':' << (o.port ? o.port : api::default_port()) << '\n';
    return kMalformedInput;
  }
  out << "serving on http://" << o.host << ':' << port << '\n' << std::flush;
  server.listen();
  return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact mutation combinatorics of exchange matrices, c-vectors and quasi-Cartan companions"};
  app.require_subcommand(1);
  Options o;
  app.add_flag("--json", o.json, "Print structured output");

  auto add_file = [&](CLI::App* sub) { sub->add_option("file", o.file, "Matrix file (text or JSON)")->required(); };
  auto add_walk = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("-k", o.ks, "1-based mutation vertices, in order")->allow_extra_args()->take_all();
    opt->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
    if (required) opt->required();
  };

  auto* mutate = app.add_subcommand("mutate", "Apply matrix mutations and print the result");
  add_file(mutate);
  add_walk(mutate, true);

  auto* walk = app.add_subcommand("walk", "Mutate the standard-basis Y-seed along a walk");
  add_file(walk);
  add_walk(walk, false);
  walk->add_flag("--cvectors", o.cvectors, "Print c-vectors per step");
  walk->add_flag("--companion", o.companion, "Print the c-vector companion per step");

  auto* companion = app.add_subcommand("companion", "Companion from c-vectors at the end of a walk, with its cut");
  add_file(companion);
  add_walk(companion, false);

  auto* admissible = app.add_subcommand("admissible", "Decide admissibility or admissible-companion existence");
  add_file(admissible);
  admissible->add_option("--companion", o.companion_file, "Companion matrix file to test");

  auto* cut = app.add_subcommand("cut", "Admissible cut at the end of a walk");
  add_file(cut);
  add_walk(cut, false);

  auto* cls = app.add_subcommand("class", "Enumerate the mutation class up to permutation");
  add_file(cls);
  cls->add_option("--max-size", o.max_size, "Maximum number of matrices in the class")->check(CLI::PositiveNumber);
  cls->add_option("--max-depth", o.max_depth, "Maximum mutation depth")->check(CLI::PositiveNumber);

  auto* verify = app.add_subcommand("verify", "Check the c-vector companion properties along walks");
  add_file(verify);
  verify->add_option("--fuzz", o.fuzz, "Random walks: depth trials seed")->expected(3);
  add_walk(verify, false);
  verify->add_flag("--conjecture", o.conjecture, "Allow skew-symmetrizable input (experimental)");
  verify->add_option("--threads", o.threads, "Worker threads for random trials")->check(CLI::PositiveNumber);

  auto* serve = app.add_subcommand("serve", "Run the session API");
  serve->add_option("--port", o.port, std::string("Port (default $") + api::kPortEnv + " or 8080)");
  serve->add_option("--host", o.host, "Bind address");
  serve->add_option("--snapshot", o.snapshot, "Persist sessions to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kMalformedInput;
  }

  try {
    if (mutate->parsed()) return cmd_mutate(o, out);
    if (walk->parsed()) return cmd_walk(o, out);
    if (companion->parsed()) return cmd_companion(o, out);
    if (admissible->parsed()) return cmd_admissible(o, out);
    if (cut->parsed()) return cmd_cut(o, out);
    if (cls->parsed()) return cmd_class(o, out);
    if (verify->parsed()) return cmd_verify(o, out);
    if (serve->parsed()) return cmd_serve(o, out, err);
  } catch (const BoundsExceeded& e) {
    err << "error: " << to_string(e.code()) << ": " << e.what() << '\n';
    return kBoundsExceeded;
  } catch (const Error& e) {
    err << "error: " << to_string(e.code()) << ": " << e.what() << '\n';
    switch (e.code()) {
      case ErrorCode::sign_coherence_lost:
      case ErrorCode::not_a_companion:
      case ErrorCode::not_admissible: return e.code() == ErrorCode::not_a_companion && !o.companion_file.empty()
                                                 ? kMalformedInput
                                                 : kPropertyViolation;
      case ErrorCode::overflow: return kBoundsExceeded;
      default: return kMalformedInput;
    }
  }
  return kMalformedInput;
}

}  // namespace qc::cli
