#include "equicolor/cli.hpp"

#include "equicolor/discharge.hpp"
#include "equicolor/error.hpp"
#include "equicolor/generators.hpp"
#include "equicolor/oracle.hpp"
#include "equicolor/threads.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace equicolor {

using ojson = nlohmann::ordered_json;

namespace {

std::string id(VertexId v) { return std::to_string(v + 1); }

ojson ids(std::span<const VertexId> vs) {
  ojson a = ojson::array();
  for (VertexId v : vs) a.push_back(v + 1);
  return a;
}

ojson girth_json(const Girth& g) { return g ? ojson(*g) : ojson(nullptr); }

int exit_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::Infeasible:
    case ErrorCode::HypothesisViolation:
    case ErrorCode::NoConfigFound:
    case ErrorCode::ExtensionFailed:
    case ErrorCode::ExceptionCase:
      return kExitNegative;
    default:
      return kExitUsage;
  }
}

Graph read_graph(const std::string& input, std::istream& in) {
  if (input == "-") return load_graph(in);
  return load_graph_file(input);
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      out.push_back(std::stoi(item));
    } catch (const std::exception&) {
      throw Error(ErrorCode::ParseError, "bad integer '" + item + "'");
    }
  }
  return out;
}

std::pair<int, int> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const int v = std::stoi(text);
      return {v, v};
    }
    return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
  } catch (const std::exception&) {
    throw Error(ErrorCode::ParseError, "bad range '" + text + "', expected A..B");
  }
}

ojson audit_json(const AuditReport& r) {
  ojson j;
  j["mode"] = std::string(mode_name(r.mode));
  j["d0"] = to_string(r.ledger.d0);
  j["total_initial"] = to_string(r.total);
  j["total_final"] = to_string(r.ledger.total_final());
  j["conserved"] = r.conserved;
  j["total_negative"] = r.total_negative;
  j["pure_cycle"] = r.pure_cycle;
  ojson neg = ojson::array();
  for (const NegativeVertex& nv : r.negatives) {
    ojson e;
    e["vertex"] = nv.vertex + 1;
    e["charge"] = to_string(nv.charge);
    e["on_pure_cycle"] = nv.on_pure_cycle;
    ojson viol = ojson::array();
    for (const auto& [w, tag] : nv.violations) viol.push_back({{"vertex", w + 1}, {"claim", tag}});
    e["violations"] = std::move(viol);
    e["witness"] = nv.witness ? config_to_json(*nv.witness) : ojson(nullptr);
    e["status"] = nv.on_pure_cycle ? "PURE_CYCLE" : nv.falsified ? "FALSIFIED" : "WITNESSED";
    neg.push_back(std::move(e));
  }
  j["negative_vertices"] = std::move(neg);
  j["falsified"] = r.falsified;
  ojson charges = ojson::object();
  for (std::size_t v = 0; v < r.ledger.final.size(); ++v)
    charges[id(static_cast<VertexId>(v))] = {{"initial", to_string(r.ledger.initial[v])},
                                             {"final", to_string(r.ledger.final[v])}};
  j["charges"] = std::move(charges);
  ojson tr = ojson::array();
  for (const Transfer& t : r.ledger.transfers)
    tr.push_back({{"from", t.from + 1}, {"to", t.to + 1}, {"amount", to_string(t.amount)}, {"rule", t.rule}});
  j["transfers"] = std::move(tr);
  return j;
}

struct BenchRow {
  std::string graph;
  std::size_t n = 0;
  std::string girth;
  std::string mad;
  int m = 0;
  double seconds = 0;
  bool valid = false;
};

}  // namespace

ojson coloring_to_json(const Coloring& f) {
  ojson j;
  j["m"] = f.m();
  ojson a = ojson::object();
  for (VertexId v : f.domain()) a[id(v)] = f[v];
  j["assignment"] = std::move(a);
  j["class_sizes"] = std::vector<int>(f.class_sizes().begin(), f.class_sizes().end());
  return j;
}

Coloring coloring_from_json(const nlohmann::json& j) {
  try {
    const int m = j.at("m").get<int>();
    if (m < 1) throw Error(ErrorCode::InvalidColorCount, "m = " + std::to_string(m));
    VertexId bound = 0;
    std::vector<std::pair<VertexId, int>> items;
    for (const auto& [key, val] : j.at("assignment").items()) {
      const VertexId v = static_cast<VertexId>(std::stol(key)) - 1;
      if (v < 0) throw Error(ErrorCode::UnknownVertex, "vertex " + key);
      items.emplace_back(v, val.get<int>());
      bound = std::max(bound, v + 1);
    }
    Coloring f(m, bound);
    for (auto [v, c] : items) {
      if (c < 1 || c > m) throw Error(ErrorCode::InvalidColorCount, "color " + std::to_string(c) + " at vertex " + id(v));
      f.assign(v, c);
    }
    return f;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("coloring JSON: ") + e.what());
  } catch (const std::logic_error& e) {
    throw Error(ErrorCode::ParseError, std::string("coloring JSON: ") + e.what());
  }
}

ojson config_to_json(const Config& c) {
  ojson j;
  j["kind"] = std::string(kind_name(c.kind));
  j["variant"] = c.variant;
  j["center"] = c.center == kNoVertex ? ojson(nullptr) : ojson(c.center + 1);
  j["deletion"] = ids(c.deletion);
  ojson a = ojson::object();
  for (const auto& [name, v] : c.anchors) a[name] = v + 1;
  j["anchors"] = std::move(a);
  ojson p = ojson::array();
  for (const auto& path : c.paths) p.push_back(ids(path));
  j["paths"] = std::move(p);
  return j;
}

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Equitable coloring of sparse graphs with minimum degree 2"};
  app.require_subcommand(1);
  std::string input = "-";
  int m = 0;
  bool unchecked = false, trace = false;
  std::string coloring_file, mode = "m4", family_name, params, random_spec, gadget_name, corpus, m_range = "4..8",
                               output;
  int cap = oracle_cap();

  auto* color = app.add_subcommand("color", "Equitably color a graph");
  color->add_option("--input", input, "DIMACS file or - for stdin");
  color->add_option("--m", m, "Number of colors")->required();
  color->add_flag("--unchecked", unchecked, "Skip the girth / mad hypothesis check");
  color->add_flag("--trace", trace, "Include the configuration sequence");

  auto* verify = app.add_subcommand("verify", "Check a coloring for equitability");
  verify->add_option("--input", input, "DIMACS file or - for stdin");
  verify->add_option("--coloring", coloring_file, "Coloring JSON file")->required();

  auto* metrics = app.add_subcommand("metrics", "Girth, mad and degree bounds");
  metrics->add_option("--input", input, "DIMACS file or - for stdin");

  auto* threads = app.add_subcommand("threads", "Thread decomposition");
  threads->add_option("--input", input, "DIMACS file or - for stdin");

  auto* audit_cmd = app.add_subcommand("audit", "Discharging audit");
  audit_cmd->add_option("--input", input, "DIMACS file or - for stdin");
  audit_cmd->add_option("--mode", mode, "m4 or m3")->check(CLI::IsMember({"m4", "m3"}));

  auto* oracle = app.add_subcommand("oracle", "Exhaustive search");
  oracle->require_subcommand(1);
  auto* oracle_eq = oracle->add_subcommand("equitable", "Decide equitable m-colorability");
  oracle_eq->add_option("--input", input, "DIMACS file or - for stdin");
  oracle_eq->add_option("--m", m, "Number of colors")->required();
  oracle_eq->add_option("--cap", cap, "Maximum vertex count");
  auto* oracle_th = oracle->add_subcommand("threshold", "Equitable chromatic number and threshold");
  oracle_th->add_option("--input", input, "DIMACS file or - for stdin");
  oracle_th->add_option("--cap", cap, "Maximum vertex count");

  auto* gen = app.add_subcommand("gen", "Generate a graph as DIMACS");
  auto* gen_family = gen->add_option("--family", family_name, "cycle, theta, star, k2n, kab, k77, petersen, complete");
  gen->add_option("--params", params, "Comma-separated family parameters");
  auto* gen_random = gen->add_option("--random", random_spec, "n0=8,q=3..5,girth=10,seed=42");
  auto* gen_gadget = gen->add_option("--gadget", gadget_name, "Gadget name");
  gen_family->excludes(gen_random)->excludes(gen_gadget);
  gen_random->excludes(gen_gadget);

  auto* bench = app.add_subcommand("bench", "Color every .col file of a corpus");
  bench->add_option("--corpus", corpus, "Directory of DIMACS files")->required();
  bench->add_option("--m-range", m_range, "A..B");
  bench->add_option("--output", output, "CSV file (default stdout)");
  bench->add_flag("--unchecked", unchecked, "Skip the hypothesis check");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    if (color->parsed()) {
      const Graph g = read_graph(input, in);
      SolveOptions opt;
      opt.check_hypotheses = !unchecked;
      opt.trace = trace;
      const SolveResult r = solve(g, m, opt);
      ojson j = coloring_to_json(r.coloring);
      if (trace) {
        ojson t = ojson::array();
        for (const Config& c : r.trace) t.push_back(config_to_json(c));
        j["trace"] = std::move(t);
      }
      out << j.dump(2) << "\n";
      return kExitOk;
    }
    if (verify->parsed()) {
      const Graph g = read_graph(input, in);
      std::ifstream cf(coloring_file);
      if (!cf) throw Error(ErrorCode::ParseError, "cannot open " + coloring_file);
      nlohmann::json cj;
      try {
        cj = nlohmann::json::parse(cf);
      } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::ParseError, std::string("coloring JSON: ") + e.what());
      }
      const Coloring f = coloring_from_json(cj);
      const EquitableReport rep = verify_equitable(g, f);
      ojson j;
      j["status"] = rep.valid ? "VALID" : "INVALID";
      j["valid"] = rep.valid;
      j["m"] = f.m();
      j["class_sizes"] = rep.class_sizes;
      j["sizes_ok"] = rep.sizes_ok;
      ojson uncolored = ojson::array();
      for (VertexId v : g.vertices())
        if (!f.is_colored(v)) uncolored.push_back(v + 1);
      j["uncolored"] = std::move(uncolored);
      ojson ev = ojson::array();
      for (auto [u, v] : rep.edge_violations) ev.push_back({u + 1, v + 1});
      j["edge_violations"] = std::move(ev);
      out << j.dump(2) << "\n";
      return rep.valid ? kExitOk : kExitNegative;
    }
    if (metrics->parsed()) {
      const Graph g = read_graph(input, in);
      const Metrics mt = compute_metrics(g);
      const DensestSubgraph d = densest_subgraph(g);
      ojson j;
      j["vertices"] = g.vertex_count();
      j["edges"] = g.edge_count();
      j["girth"] = girth_json(mt.girth);
      j["mad"] = to_string(mt.mad);
      j["densest_subgraph"] = ids(d.vertices);
      j["min_degree"] = mt.min_degree;
      j["max_degree"] = mt.max_degree;
      j["components"] = components(g).size();
      const auto up = g.min_degree() >= 2 ? upper_threshold(g) : std::nullopt;
      j["upper_threshold"] = up ? ojson(*up) : ojson(nullptr);
      out << j.dump(2) << "\n";
      return kExitOk;
    }
    if (threads->parsed()) {
      const Graph g = read_graph(input, in);
      ThreadIndex idx(g);
      ojson j;
      ojson ts = ojson::array();
      for (const Thread& t : idx.threads())
        ts.push_back({{"a", t.a + 1}, {"b", t.b + 1}, {"length", t.length()}, {"cycle", t.is_cycle()}, {"interior", ids(t.interior)}});
      j["threads"] = std::move(ts);
      ojson pc = ojson::array();
      for (const auto& c : idx.pure_cycles()) pc.push_back(ids(c));
      j["pure_cycles"] = std::move(pc);
      ojson prof = ojson::object();
      for (VertexId v : idx.branch_vertices()) {
        const ThreadProfile p = idx.profile(v);
        prof[id(v)] = {{"degree", g.degree(v)}, {"counts", p.counts}, {"t", p.t}, {"thread_cycle", p.has_thread_cycle}};
      }
      j["profiles"] = std::move(prof);
      out << j.dump(2) << "\n";
      return kExitOk;
    }
    if (audit_cmd->parsed()) {
      const Graph g = read_graph(input, in);
      const AuditReport r = audit(g, *parse_mode(mode));
      out << audit_json(r).dump(2) << "\n";
      return r.falsified == 0 ? kExitOk : kExitNegative;
    }
    if (oracle_eq->parsed()) {
      const Graph g = read_graph(input, in);
      SearchStats stats;
      const auto f = brute_equitable(g, m, cap, &stats);
      ojson j;
      j["m"] = m;
      j["feasible"] = f.has_value();
      j["coloring"] = f ? coloring_to_json(*f) : ojson(nullptr);
      j["nodes"] = stats.nodes;
      out << j.dump(2) << "\n";
      return f ? kExitOk : kExitNegative;
    }
    if (oracle_th->parsed()) {
      const Graph g = read_graph(input, in);
      const ThresholdResult t = brute_threshold(g, cap);
      ojson j;
      j["chi_eq"] = t.chi_eq;
      j["chi_eq_star"] = t.chi_eq_star;
      ojson per = ojson::object();
      for (auto [k, ok] : t.per_k) per[std::to_string(k)] = ok;
      j["per_k"] = std::move(per);
      out << j.dump(2) << "\n";
      return kExitOk;
    }
    if (gen->parsed()) {
      Graph g;
      std::vector<std::string> comments;
      if (!family_name.empty()) {
        g = family(family_name, parse_int_list(params));
        comments.push_back("family " + family_name + (params.empty() ? "" : " " + params));
      } else if (!random_spec.empty()) {
        g = random_sparse(parse_random_spec(random_spec));
        comments.push_back("random " + random_spec);
      } else if (!gadget_name.empty()) {
        const Gadget gd = gadget_named(gadget_name);
        g = gd.graph;
        comments = {"gadget " + gd.name,
                    std::string(kind_name(gd.kind)) + " / " + gd.variant + ", m = " + std::to_string(gd.m),
                    gd.provenance};
      } else {
        err << "gen needs one of --family, --random, --gadget\n\n" << gen->help();
        return kExitUsage;
      }
      write_dimacs(out, g, comments);
      return kExitOk;
    }
    if (bench->parsed()) {
      const auto [lo, hi] = parse_range(m_range);
      std::vector<std::filesystem::path> files;
      if (!std::filesystem::is_directory(corpus)) throw Error(ErrorCode::ParseError, "not a directory: " + corpus);
      for (const auto& e : std::filesystem::directory_iterator(corpus))
        if (e.is_regular_file() && e.path().extension() == ".col") files.push_back(e.path());
      std::sort(files.begin(), files.end());
      std::vector<Graph> graphs;
      std::vector<Metrics> mets;
      for (const auto& p : files) {
        graphs.push_back(load_graph_file(p.string()));
        mets.push_back(compute_metrics(graphs.back()));
      }
      std::vector<std::pair<std::size_t, int>> jobs;
      for (std::size_t i = 0; i < files.size(); ++i)
        for (int k = lo; k <= hi; ++k) jobs.emplace_back(i, k);
      std::vector<BenchRow> rows(jobs.size());
#pragma omp parallel for schedule(dynamic)
      for (std::size_t j = 0; j < jobs.size(); ++j) {
        const auto [i, k] = jobs[j];
        BenchRow& row = rows[j];
        row.graph = files[i].filename().string();
        row.n = graphs[i].vertex_count();
        row.girth = mets[i].girth ? std::to_string(*mets[i].girth) : "inf";
        row.mad = to_string(mets[i].mad);
        row.m = k;
        const auto t0 = std::chrono::steady_clock::now();
        try {
          SolveOptions opt;
          opt.check_hypotheses = !unchecked;
          row.valid = verify_equitable(graphs[i], equitable_color(graphs[i], k, opt)).valid;
        } catch (const Error&) {
          row.valid = false;
        }
        row.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      }
      std::ofstream file;
      if (!output.empty()) {
        file.open(output);
        if (!file) throw Error(ErrorCode::ParseError, "cannot write " + output);
      }
      std::ostream& csv = output.empty() ? out : file;
      csv << "graph,n,girth,mad,m,time,valid\n";
      for (const BenchRow& r : rows)
        csv << r.graph << ',' << r.n << ',' << r.girth << ',' << r.mad << ',' << r.m << ',' << r.seconds << ','
            << (r.valid ? "true" : "false") << '\n';
      return std::all_of(rows.begin(), rows.end(), [](const BenchRow& r) { return r.valid; }) ? kExitOk : kExitNegative;
    }
  } catch (const Error& e) {
    err << e.what() << "\n";
    out << ojson{{"error", std::string(error_name(e.code()))}, {"message", e.what()}}.dump(2) << "\n";
    return exit_for(e.code());
  } catch (const std::exception& e) {
    err << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace equicolor
