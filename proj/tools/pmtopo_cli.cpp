#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pmtopo/complex.hpp"
#include "pmtopo/error.hpp"
#include "pmtopo/hexgraph.hpp"
#include "pmtopo/homology.hpp"
#include "pmtopo/morse.hpp"
#include "pmtopo/partitions.hpp"
#include "pmtopo/verify.hpp"

namespace {

using namespace pmtopo;

struct RunConfig {
  std::string command;
  int k = 0, m = 0, n = 0;
  std::vector<std::string> sequence;
  std::string output;
  std::string format = "json";
  std::size_t face_cap = kDefaultFaceCap;
  std::string theorem;
  bool verbose = false;
  bool timings = false;
};

std::string dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

std::string cmd_graph(const RunConfig& cfg) {
  auto g = build_honeycomb(cfg.k, cfg.m, cfg.n);
  if (cfg.format == "dot") return to_dot(g);
  if (cfg.format == "csv") {
    std::ostringstream os;
    os << "edge,u,v,label\n";
    for (int e = 0; e < g.edge_count(); ++e)
      os << e << ',' << g.graph().edge(e).u << ',' << g.graph().edge(e).v << ',' << g.label_of(e) << '\n';
    return os.str();
  }
  if (cfg.format == "text") {
    std::ostringstream os;
    os << "H_" << g.k() << 'x' << g.m() << 'x' << g.n() << ": " << g.vertex_count() << " vertices, " << g.edge_count()
       << " edges\n";
    return os.str();
  }
  return dump(to_json(g));
}

std::string cmd_matchings(const RunConfig& cfg) {
  auto g = build_honeycomb(cfg.k, cfg.m, cfg.n);
  auto pps = enumerate_plane_partitions(cfg.k, cfg.m, cfg.n);
  if (cfg.format == "csv") {
    std::ostringstream os;
    os << "k,m,n,count\n" << cfg.k << ',' << cfg.m << ',' << cfg.n << ',' << pps.size() << '\n';
    return os.str();
  }
  if (cfg.format == "text") {
    std::ostringstream os;
    for (const auto& p : pps) {
      os << '[';
      for (std::size_t i = 0; i < p.entries.size(); ++i) os << (i ? " " : "") << p.entries[i];
      os << "]:";
      for (int e : pp_to_matching(g, p).elements()) os << ' ' << g.label_of(e);
      os << '\n';
    }
    return os.str();
  }
  nlohmann::json out;
  out["k"] = cfg.k;
  out["m"] = cfg.m;
  out["n"] = cfg.n;
  out["count"] = pps.size();
  auto list = nlohmann::json::array();
  for (const auto& p : pps) {
    auto edges = pp_to_matching(g, p).elements();
    nlohmann::json labels = nlohmann::json::array();
    for (int e : edges) labels.push_back(g.label_of(e));
    list.push_back({{"partition", to_json(p)}, {"edges", edges}, {"labels", labels}});
  }
  out["matchings"] = std::move(list);
  return dump(out);
}

std::string cmd_morse(const RunConfig& cfg) {
  if (cfg.sequence.empty()) throw Error("usage", "--sequence is required");
  auto g = build_honeycomb(cfg.k, cfg.m, cfg.n);
  std::vector<int> xs;
  for (const auto& s : cfg.sequence) xs.push_back(g.resolve(parse_label(s)));
  auto c = perfect_matching_complex(g, cfg.face_cap);
  auto p = sequential_pairing(c, xs);
  auto label = [&](int e) { return g.label_of(e); };
  if (cfg.format == "text") {
    std::ostringstream os;
    os << "pairs: " << p.pairs.size() << "\nacyclic: " << (p.acyclic ? "yes" : "no") << "\ncritical: " << p.critical.size()
       << '\n';
    for (const auto& f : p.critical) {
      os << "  dim " << f.dim() << ':';
      f.for_each([&](int e) { os << ' ' << label(e); });
      os << '\n';
    }
    if (p.acyclic) os << "homotopy type: " << morse_summary(p).homotopy_type << '\n';
    return os.str();
  }
  return dump(to_json(p, label));
}

std::string cmd_homology(const RunConfig& cfg) {
  auto g = build_honeycomb(cfg.k, cfg.m, cfg.n);
  auto c = perfect_matching_complex(g, cfg.face_cap);
  auto h = reduced_homology(c);
  if (cfg.format == "text" || cfg.format == "csv") {
    std::ostringstream os;
    if (cfg.format == "csv") os << "dim,betti_reduced\n";
    for (const auto& [d, b] : h.betti_reduced)
      os << (cfg.format == "csv" ? std::to_string(d) + "," : "b~" + std::to_string(d) + " = ") << b << '\n';
    if (cfg.format == "text")
      for (const auto& [d, ts] : h.torsion) {
        os << "torsion in dimension " << d << ':';
        for (const auto& t : ts) os << " Z/" << t;
        os << '\n';
      }
    return os.str();
  }
  return dump(to_json(h));
}

std::vector<TheoremReport> run_theorem(const RunConfig& cfg) {
  const auto& t = cfg.theorem;
  if (t == "line") return {verify_line(cfg.n)};
  if (t == "1x2xn") return {verify_1x2xn(cfg.n)};
  if (t == "1xmxn") return {verify_1xmxn(cfg.m, cfg.n, cfg.face_cap)};
  if (t == "2x2x2") return {verify_2x2x2()};
  if (t == "baselines") return {verify_baselines()};
  if (t == "lemmas") return {verify_lemmas(cfg.n)};
  std::vector<TheoremReport> all{verify_baselines(), verify_lemmas(4)};
  for (int n = 2; n <= 6; ++n) all.push_back(verify_line(n));
  for (int n = 2; n <= 5; ++n) all.push_back(verify_1x2xn(n));
  all.push_back(verify_1xmxn(3, 3, cfg.face_cap));
  all.push_back(verify_2x2x2());
  return all;
}

std::string cmd_verify(const RunConfig& cfg, bool& all_passed) {
  auto reports = run_theorem(cfg);
  all_passed = true;
  for (const auto& r : reports) all_passed = all_passed && r.passed();
  if (cfg.verbose)
    for (const auto& r : reports)
      for (const auto& [stage, secs] : r.timings) std::cerr << r.theorem << ' ' << stage << ' ' << secs << "s\n";
  if (cfg.format == "text") {
    std::ostringstream os;
    for (const auto& r : reports) {
      os << (r.passed() ? "PASS " : "FAIL ") << r.theorem << " (k=" << r.k << ", m=" << r.m << ", n=" << r.n << ")\n";
      if (!r.note.empty()) os << "  note: " << r.note << '\n';
      for (const auto& c : r.claims) {
        os << "  [" << (c.passed ? "ok" : "FAILED") << "] " << c.id << ": " << c.statement;
        if (!c.detail.empty()) os << " (" << c.detail << ')';
        os << '\n';
      }
    }
    return os.str();
  }
  if (reports.size() == 1) return dump(to_json(reports[0], cfg.timings));
  auto arr = nlohmann::json::array();
  for (const auto& r : reports) arr.push_back(to_json(r, cfg.timings));
  return dump(arr);
}

void fail(const std::string& code, const std::string& message) {
  std::string flat = message;
  for (auto& ch : flat)
    if (ch == '\n') ch = ' ';
  std::cerr << "error: " << code << ": " << flat << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;
  cfg.face_cap = face_cap_from_env();

  CLI::App app{"Perfect matching complexes of honeycomb graphs"};
  app.require_subcommand(1, 1);

  auto add_common = [&](CLI::App* sub, bool dims, const std::vector<std::string>& formats) {
    if (dims) {
      sub->add_option("--k", cfg.k, "rows of the plane partition box")->required()->check(CLI::Range(1, 1000));
      sub->add_option("--m", cfg.m, "columns of the plane partition box")->required()->check(CLI::Range(1, 1000));
      sub->add_option("--n", cfg.n, "maximum entry")->required()->check(CLI::Range(1, 1000));
    }
    sub->add_option("--format", cfg.format, "output format")->check(CLI::IsMember(formats));
    sub->add_option("--output,-o", cfg.output, "write to this file instead of stdout");
    sub->add_option("--seed-cap", cfg.face_cap, "face cap for complex enumeration")->check(CLI::PositiveNumber);
    sub->add_flag("--verbose,-v", cfg.verbose, "stage timings on stderr");
  };

  auto* graph = app.add_subcommand("graph", "honeycomb graph as JSON, DOT or CSV");
  add_common(graph, true, {"json", "dot", "csv", "text"});
  auto* matchings = app.add_subcommand("matchings", "perfect matchings with their plane partitions");
  add_common(matchings, true, {"json", "csv", "text"});
  auto* morse = app.add_subcommand("morse", "sequential element pairing on the matching complex");
  add_common(morse, true, {"json", "text"});
  morse->add_option("--sequence", cfg.sequence, "pairing vertices, e.g. x,y")->delimiter(',')->required();
  auto* homology = app.add_subcommand("homology", "reduced integral homology of the matching complex");
  add_common(homology, true, {"json", "csv", "text"});
  auto* verify = app.add_subcommand("verify", "theorem reports");
  add_common(verify, false, {"json", "text"});
  verify->add_option("--theorem", cfg.theorem, "which report")
      ->required()
      ->check(CLI::IsMember({"line", "1x2xn", "1xmxn", "2x2x2", "baselines", "lemmas", "all"}));
  verify->add_option("--m", cfg.m, "columns (1xmxn)");
  verify->add_option("--n", cfg.n, "size parameter (line, 1x2xn, 1xmxn, lemmas)");
  verify->add_flag("--timings", cfg.timings, "include stage timings in the JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    fail("usage", e.what());
    return 2;
  }

  int status = 0;
  std::string out;
  try {
    cfg.command = app.get_subcommands().front()->get_name();
    if (cfg.command == "graph") {
      out = cmd_graph(cfg);
    } else if (cfg.command == "matchings") {
      out = cmd_matchings(cfg);
    } else if (cfg.command == "morse") {
      out = cmd_morse(cfg);
    } else if (cfg.command == "homology") {
      out = cmd_homology(cfg);
    } else {
      if (cfg.theorem == "1xmxn" && cfg.m == 0) cfg.m = 3;
      if (cfg.n == 0) cfg.n = cfg.theorem == "lemmas" ? 4 : 3;
      bool ok = false;
      out = cmd_verify(cfg, ok);
      if (!ok) status = 1;
    }
  } catch (const Error& e) {
    fail(e.code(), e.what());
    return 2;
  } catch (const std::exception& e) {
    fail("internal", e.what());
    return 2;
  }

  if (cfg.output.empty()) {
    std::cout << out;
  } else {
    std::ofstream f(cfg.output, std::ios::binary);
    if (!f) {
      fail("io", "cannot open " + cfg.output);
      return 2;
    }
    f << out;
  }
  return status;
}
