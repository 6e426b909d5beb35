// Acceptance run: one PASS/FAIL line per criterion, exit 1 if any fails.
// Usage: acceptance [fixture-dir]

#include "sweeps.hpp"

#include "equicolor/cli.hpp"
#include "equicolor/discharge.hpp"
#include "equicolor/error.hpp"
#include "equicolor/generators.hpp"
#include "equicolor/oracle.hpp"
#include "equicolor/solver.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>

using namespace equicolor;

namespace {

// Pinned limits.
constexpr int kCorpusSize = 200;
constexpr int kMaxVertices = 2000;           // criteria 1, 2, approximate
constexpr double kInstanceSeconds = 5.0;     // criteria 1, 2
constexpr double kFixtureSeconds = 60.0;     // criterion 4
constexpr double kSweepSeconds = 600.0;      // criterion 5
constexpr int kOracleMaxVertices = 20;       // criterion 3

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string fmt(double s) {
  std::ostringstream o;
  o << std::fixed << std::setprecision(3) << s;
  return o.str();
}

struct Outcome {
  bool pass = true;
  std::string detail;
  std::string first_failure;

  void fail(const std::string& what) {
    if (pass) first_failure = what;
    pass = false;
  }
};

// Test-side check, independent of verify_equitable.
bool equitable_ok(const Graph& g, const Coloring& f, int m) {
  if (f.m() != m) return false;
  std::vector<long> count(static_cast<std::size_t>(m), 0);
  for (VertexId v : g.vertices()) {
    const Color c = f[v];
    if (c < 1 || c > m) return false;
    ++count[static_cast<std::size_t>(c - 1)];
  }
  for (auto [a, b] : g.edges())
    if (f[a] == f[b]) return false;
  const auto [lo, hi] = std::minmax_element(count.begin(), count.end());
  return *hi - *lo <= 1;
}

int min_degree(const Graph& g) {
  int d = std::numeric_limits<int>::max();
  for (VertexId v : g.vertices()) d = std::min(d, g.degree(v));
  return d;
}

struct Entry {
  std::string name;
  Graph g;
  int girth = 0;
  Rational mad;
};

bool meets(const Entry& e, int girth_min, const Rational& mad_max) {
  return min_degree(e.g) >= 2 && e.girth >= girth_min && e.mad < mad_max;
}

Entry make_entry(std::string name, Graph g) {
  Entry e{std::move(name), std::move(g), 0, 0};
  const Girth gi = girth_by_edges(e.g);
  e.girth = gi ? *gi : std::numeric_limits<int>::max();
  e.mad = mad_exact(e.g);
  return e;
}

// Random subdivided graphs; `girth_min` 10 pairs with mad < 5/2, 14 with mad < 7/3.
std::vector<Entry> random_corpus(int girth_min, int& rejected) {
  const bool m3 = girth_min >= 14;
  const std::vector<std::pair<int, int>> qs =
      m3 ? std::vector<std::pair<int, int>>{{4, 6}, {4, 5}, {5, 7}, {3, 5}, {4, 7}}
         : std::vector<std::pair<int, int>>{{3, 5}, {3, 4}, {4, 6}, {3, 6}, {4, 5}};
  std::vector<Entry> out;
  for (int i = 0; i < kCorpusSize; ++i) {
    RandomSpec s;
    // About 7.8 (girth 10) or 8.9 (girth 14) vertices per base vertex.
    const int max_base = kMaxVertices * 10 / (m3 ? 89 : 78);
    s.base_size = 4 + i * (max_base - 4) / (kCorpusSize - 1);
    s.q_min = qs[static_cast<std::size_t>(i) % qs.size()].first;
    s.q_max = qs[static_cast<std::size_t>(i) % qs.size()].second;
    s.girth_min = girth_min;
    s.mad_max = m3 ? Rational(7, 3) : Rational(5, 2);
    s.base_girth = m3 ? 4 : 3;
    s.seed = static_cast<std::uint64_t>(1000 * girth_min + i);
    try {
      Entry e = make_entry("random n0=" + std::to_string(s.base_size) + " seed=" + std::to_string(s.seed),
                           random_sparse(s));
      if (meets(e, girth_min, s.mad_max)) out.push_back(std::move(e));
      else ++rejected;
    } catch (const Error&) {
      ++rejected;
    }
  }
  return out;
}

struct Run {
  std::size_t graphs = 0;
  std::size_t instances = 0;
  int max_n = 0;
  double worst = 0;
};

Outcome color_corpus(const std::vector<Entry>& corpus, int rejected, const std::function<std::vector<int>(int)>& ms) {
  Outcome o;
  Run r;
  for (const Entry& e : corpus) {
    const int n = static_cast<int>(e.g.vertex_count());
    r.max_n = std::max(r.max_n, n);
    ++r.graphs;
    for (int m : ms(n)) {
      const auto t0 = Clock::now();
      try {
        const Coloring f = solve(e.g, m).coloring;
        if (!equitable_ok(e.g, f, m)) o.fail(e.name + " m=" + std::to_string(m) + ": not equitable");
      } catch (const Error& err) {
        o.fail(e.name + " m=" + std::to_string(m) + ": " + err.what());
      }
      const double s = since(t0);
      r.worst = std::max(r.worst, s);
      if (s >= kInstanceSeconds) o.fail(e.name + " m=" + std::to_string(m) + ": " + fmt(s) + "s");
      ++r.instances;
    }
  }
  if (static_cast<int>(r.graphs) < kCorpusSize) o.fail(std::to_string(rejected) + " generated graphs rejected");
  o.detail = std::to_string(r.graphs) + " graphs, " + std::to_string(r.instances) + " instances, max n " +
             std::to_string(r.max_n) + ", worst " + fmt(r.worst) + "s (limit " + fmt(kInstanceSeconds) + "s)";
  return o;
}

std::vector<int> m4_values(int n) {
  std::set<int> ms{4, 5, 6, 7, 8, n - 1, n};
  return {ms.begin(), ms.end()};
}

Outcome oracle_agreement(const std::vector<Entry>& c4, const std::vector<Entry>& c3) {
  Outcome o;
  std::vector<Entry> small;
  for (const auto* c : {&c4, &c3})
    for (const Entry& e : *c)
      if (static_cast<int>(e.g.vertex_count()) <= kOracleMaxVertices) small.push_back(e);
  for (int n = 10; n <= kOracleMaxVertices; ++n) small.push_back(make_entry("cycle " + std::to_string(n), cycle_graph(n)));
  for (int a = 1; a <= 10; ++a)
    for (int b = a; b <= 20; ++b)
      for (int c = b; a + b + c - 1 <= kOracleMaxVertices; ++c)
        if (a + b >= 10)
          small.push_back(make_entry("theta " + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c),
                                     theta_graph(a, b, c)));
  for (Gadget& gd : gadget_catalog())
    if (static_cast<int>(gd.graph.vertex_count()) <= kOracleMaxVertices)
      small.push_back(make_entry("gadget " + gd.name, std::move(gd.graph)));

  int graphs = 0, pairs = 0, disagreements = 0;
  for (const Entry& e : small) {
    std::set<int> ms;
    const int n = static_cast<int>(e.g.vertex_count());
    if (meets(e, 10, Rational(5, 2)))
      for (int m : m4_values(n)) ms.insert(m);
    if (meets(e, 14, Rational(7, 3))) ms.insert(3);
    if (ms.empty()) continue;
    ++graphs;
    for (int m : ms) {
      ++pairs;
      bool solver_ok = false;
      try {
        solver_ok = equitable_ok(e.g, solve(e.g, m).coloring, m);
      } catch (const Error&) {
      }
      const auto witness = brute_equitable(e.g, m);
      const bool oracle_ok = witness && equitable_ok(e.g, *witness, m);
      if (!solver_ok || !oracle_ok) {
        ++disagreements;
        o.fail(e.name + " m=" + std::to_string(m) + (solver_ok ? ": oracle infeasible" : ": solver failed"));
      }
    }
  }
  if (pairs == 0) o.fail("no small hypothesis graphs");
  o.detail = std::to_string(graphs) + " graphs, " + std::to_string(pairs) + " (graph, m) pairs, " +
             std::to_string(disagreements) + " disagreements";
  return o;
}

Outcome threshold_fixtures() {
  Outcome o;
  const auto t0 = Clock::now();
  int checks = 0;
  for (int n = 2; n <= 10; ++n) {
    const int want = (n + 2) / 3 + 1;
    const ThresholdResult r = brute_threshold(complete_bipartite(2, n));
    ++checks;
    if (r.chi_eq_star != want)
      o.fail("K_{2," + std::to_string(n) + "}: chi*_eq " + std::to_string(r.chi_eq_star) + ", want " +
             std::to_string(want));
  }
  for (int n = 1; n <= 9; ++n) {
    const Graph star = complete_bipartite(1, n);
    for (int k = 1; k <= 5; ++k) {
      const bool feasible = brute_equitable(star, k).has_value();
      ++checks;
      if (feasible == (n >= 2 * k - 1))
        o.fail("K_{1," + std::to_string(n) + "} k=" + std::to_string(k) + (feasible ? " feasible" : " infeasible"));
    }
  }
  const ThresholdResult k77 = brute_threshold(complete_bipartite(7, 7));
  ++checks;
  std::set<int> infeasible;
  for (const auto& [k, ok] : k77.per_k)
    if (!ok && k >= 2) infeasible.insert(k);  // k = 1 fails on any edge
  if (k77.chi_eq != 2 || k77.chi_eq_star != 8 || infeasible != std::set<int>{3, 5, 7})
    o.fail("K_{7,7}: chi_eq " + std::to_string(k77.chi_eq) + ", chi*_eq " + std::to_string(k77.chi_eq_star));
  const double s = since(t0);
  if (s >= kFixtureSeconds) o.fail("took " + fmt(s) + "s");
  o.detail = std::to_string(checks) + " fixtures in " + fmt(s) + "s (limit " + fmt(kFixtureSeconds) + "s)";
  return o;
}

Outcome lemma_sweeps() {
  Outcome o;
  const auto t0 = Clock::now();
  long runs = 0, oracle = 0, exceptions = 0;
  std::ostringstream per;
  for (const auto& sw : sweeps::all()) {
    const sweeps::Tally t = sw.run(1);
    runs += t.runs;
    oracle += t.oracle_checks;
    exceptions += t.exceptions;
    per << " " << sw.name << "=" << t.runs;
    if (t.runs == 0) o.fail(std::string(sw.name) + ": empty");
    if (t.failures) o.fail(std::string(sw.name) + ": " + std::to_string(t.failures) + " failures, " + t.first_failure);
  }
  if (exceptions == 0) o.fail("the excluded 4/5-thread positions never raised");
  const double s = since(t0);
  if (s >= kSweepSeconds) o.fail("took " + fmt(s) + "s");
  o.detail = std::to_string(runs) + " instances (" + per.str().substr(1) + "), " + std::to_string(oracle) +
             " oracle checks, " + std::to_string(exceptions) + " exception cases, " + fmt(s) + "s (limit " +
             fmt(kSweepSeconds) + "s)";
  return o;
}

Outcome discharging(const std::vector<Entry>& c4, const std::vector<Entry>& c3) {
  Outcome o;
  int audits = 0, negatives = 0, falsified = 0;
  auto run = [&](const Entry& e, DischargeMode mode) {
    ++audits;
    const std::string tag = e.name + " " + std::string(mode_name(mode));
    AuditReport r;
    try {
      r = audit(e.g, mode);
    } catch (const Error& err) {
      o.fail(tag + ": " + err.what());
      return;
    }
    if (!r.conserved) o.fail(tag + ": charge not conserved");
    if (e.mad < mode_d0(mode) && !r.total_negative) o.fail(tag + ": total charge " + to_string(r.total));
    negatives += static_cast<int>(r.negatives.size());
    falsified += r.falsified;
    if (r.falsified) o.fail(tag + ": " + std::to_string(r.falsified) + " FALSIFIED");
  };
  for (const Entry& e : c4) run(e, DischargeMode::M4);
  for (const Entry& e : c3) {
    run(e, DischargeMode::M3);
    run(e, DischargeMode::M4);
  }
  o.detail = std::to_string(audits) + " audits, " + std::to_string(negatives) + " negative vertices, " +
             std::to_string(falsified) + " FALSIFIED";
  return o;
}

struct CliRun {
  int code;
  std::string out;
};

CliRun cli(const std::vector<std::string>& args) {
  std::istringstream in;
  std::ostringstream out, err;
  const int code = run_cli(args, in, out, err);
  return {code, out.str()};
}

Outcome gadget_coverage(const std::filesystem::path& dir) {
  Outcome o;
  std::set<ConfigKind> covered;
  int files = 0;
  const auto scratch = std::filesystem::temp_directory_path() / "equicolor_acceptance";
  std::filesystem::create_directories(scratch);
  std::vector<std::filesystem::path> paths;
  if (std::filesystem::is_directory(dir))
    for (const auto& de : std::filesystem::directory_iterator(dir))
      if (de.path().extension() == ".col") paths.push_back(de.path());
  std::sort(paths.begin(), paths.end());
  for (const auto& p : paths) {
    ++files;
    const std::string name = p.stem().string();
    // Header: "c gadget <name>" then "c <Kind> / <variant>, m = <m>".
    std::ifstream in(p);
    std::string line, kind_text, variant;
    int m = 0;
    while (std::getline(in, line) && line.rfind("c ", 0) == 0) {
      std::istringstream ls(line.substr(2));
      std::string k, slash, v;
      if (ls >> k >> slash >> v && slash == "/" && parse_kind(k)) {
        kind_text = k;
        variant = v.substr(0, v.find(','));
        const auto eq = line.rfind('=');
        if (eq != std::string::npos) m = std::stoi(line.substr(eq + 1));
      }
    }
    const auto kind = parse_kind(kind_text);
    if (!kind || m == 0) {
      o.fail(name + ": no kind header");
      continue;
    }
    try {
      const Graph g = load_graph_file(p.string());
      const Config c = find_config(g, m);
      if (c.kind != *kind || c.variant != variant) {
        o.fail(name + ": find_config gives " + std::string(kind_name(c.kind)) + "/" + c.variant);
        continue;
      }
    } catch (const Error& err) {
      o.fail(name + ": " + err.what());
      continue;
    }
    const CliRun col = cli({"color", "--m", std::to_string(m), "--input", p.string(), "--trace"});
    if (col.code != kExitOk) {
      o.fail(name + ": color exit " + std::to_string(col.code));
      continue;
    }
    const auto j = nlohmann::json::parse(col.out);
    if (j["trace"].empty() || j["trace"][0]["kind"] != kind_text) {
      o.fail(name + ": trace does not start with " + kind_text);
      continue;
    }
    const auto cf = scratch / (name + ".json");
    std::ofstream(cf) << col.out;
    const CliRun ver = cli({"verify", "--input", p.string(), "--coloring", cf.string()});
    if (ver.code != kExitOk || nlohmann::json::parse(ver.out)["status"] != "VALID") {
      o.fail(name + ": verify rejects the coloring");
      continue;
    }
    covered.insert(*kind);
  }
  for (ConfigKind k : kAllKinds)
    if (!covered.count(k)) o.fail(std::string(kind_name(k)) + " not covered");
  o.detail = std::to_string(files) + " fixtures, " + std::to_string(covered.size()) + "/" +
             std::to_string(std::size(kAllKinds)) + " kinds covered end to end";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  const std::filesystem::path fixtures = argc > 1 ? argv[1] : EQUICOLOR_FIXTURES;
  int rejected4 = 0, rejected3 = 0;
  const std::vector<Entry> c4 = random_corpus(10, rejected4);
  const std::vector<Entry> c3 = random_corpus(14, rejected3);

  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {"girth>=10, mad<5/2 corpus, m in {4..8, n-1, n}", [&] { return color_corpus(c4, rejected4, m4_values); }},
      {"girth>=14, mad<7/3 corpus, m = 3",
       [&] { return color_corpus(c3, rejected3, [](int) { return std::vector<int>{3}; }); }},
      {"oracle agreement on hypothesis graphs with <= 20 vertices", [&] { return oracle_agreement(c4, c3); }},
      {"threshold fixtures K_{2,n}, K_{1,n}, K_{7,7}", threshold_fixtures},
      {"extension and list-coloring sweeps", lemma_sweeps},
      {"discharging conservation, sign and locality", [&] { return discharging(c4, c3); }},
      {"gadget coverage through color + verify", [&] { return gadget_coverage(fixtures / "gadgets"); }},
  };
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = Clock::now();
    Outcome o;
    try {
      o = criteria[i].run();
    } catch (const std::exception& e) {
      o.fail(std::string("uncaught: ") + e.what());
    }
    all &= o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " " << i + 1 << " " << criteria[i].name << ": " << o.detail << " ["
              << fmt(since(t0)) << "s]";
    if (!o.pass) std::cout << " first failure: " << o.first_failure;
    std::cout << std::endl;
  }
  return all ? 0 : 1;
}
