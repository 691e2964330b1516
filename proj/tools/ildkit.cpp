// ildkit command-line frontend: exact parameters, set checking, constructive
// solving, family generators, censuses, hypothesis scans, and realization
// searches over graph6 / edge-list inputs. Machine output is JSON-lines on
// stdout; diagnostics go to stderr.
//
// Exit codes: 0 success, 1 usage error, 2 instance too large,
// 3 hypothesis counterexample found.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "ildkit/census.hpp"
#include "ildkit/constructive.hpp"
#include "ildkit/exact.hpp"
#include "ildkit/families.hpp"
#include "ildkit/graph.hpp"
#include "ildkit/report.hpp"
#include "ildkit/serialize.hpp"

namespace {

using nlohmann::json;
using namespace ildkit;

constexpr int exit_ok = 0;
constexpr int exit_usage = 1;
constexpr int exit_too_large = 2;
constexpr int exit_counterexample = 3;

bool g_pretty = false;

void emit(const json& j) {
  if (g_pretty)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << j.dump() << "\n";
}

struct NamedGraph {
  Graph graph;
  std::string source;
  std::string graph6;
};

std::string slurp(const std::string& path, std::string* source_name) {
  if (path == "-" || path == "--") {
    *source_name = "stdin";
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open input file '" + path + "'");
  *source_name = path;
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// graph6 lines when the first byte is printable >= '?', one edge list
// otherwise (an edge list starts with a decimal order)
std::vector<NamedGraph> load_graphs(const std::string& path) {
  std::string source;
  std::string text = slurp(path, &source);
  std::size_t first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos)
    throw std::invalid_argument("empty input from " + source);
  std::vector<NamedGraph> out;
  if (static_cast<unsigned char>(text[first]) >= 63) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      while (!line.empty() && (line.back() == '\r' || line.back() == '\n'))
        line.pop_back();
      if (line.empty()) continue;
      Graph g = parse_graph6(line);
      out.push_back({g, source + ":" + std::to_string(lineno), line});
    }
  } else {
    Graph g = parse_edge_list(text);
    out.push_back({g, source, write_graph6(g)});
  }
  if (out.empty()) throw std::invalid_argument("no graphs in " + source);
  return out;
}

ReportDocument make_report(const std::string& op, const NamedGraph& in,
                           json result, std::int64_t ms) {
  ReportDocument doc;
  doc.operation = op;
  doc.input = json{{"source", in.source}, {"graph6", in.graph6}};
  doc.result = std::move(result);
  doc.provenance.runtime_ms = ms;
  return doc;
}

std::vector<int> parse_label_list(const std::string& csv) {
  std::vector<int> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    out.push_back(std::stoi(item));
  }
  return out;
}

class Stopwatch {
 public:
  std::int64_t ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ =
      std::chrono::steady_clock::now();
};

int cmd_params(const std::string& input) {
  for (const NamedGraph& ng : load_graphs(input)) {
    if (!ng.graph.connected()) {
      std::cerr << "ildkit: params requires a connected graph (" << ng.source
                << ")\n";
      return exit_usage;
    }
    Stopwatch sw;
    ParameterReport rep = parameters(ng.graph);
    json doc = make_report("params", ng, report_to_json(rep), sw.ms());
    emit(doc);
    if (g_pretty) {
      std::cout << "  n=" << ng.graph.order() << " gamma=" << rep.gamma
                << " iota=" << rep.iota << " gamma_l=" << rep.gamma_l
                << " iota_l="
                << (rep.iota_l ? std::to_string(*rep.iota_l) : "none")
                << " alpha=" << rep.alpha << "\n";
    }
  }
  return exit_ok;
}

int cmd_check(const std::string& input, const std::string& set_csv) {
  for (const NamedGraph& ng : load_graphs(input)) {
    Stopwatch sw;
    VertexSet s =
        VertexSet::from_labels(parse_label_list(set_csv), ng.graph.order());
    CheckFlags f = check(ng.graph, s);
    json result{{"set", set_to_json(s)},
                {"dominating", f.dominating},
                {"independent", f.independent},
                {"locating_dominating", f.locating_dominating},
                {"ild", f.ild}};
    emit(make_report("check", ng, result, sw.ms()));
  }
  return exit_ok;
}

int cmd_solve(const std::string& input, const std::string& method) {
  for (const NamedGraph& ng : load_graphs(input)) {
    const Graph& g = ng.graph;
    if (!g.connected()) {
      std::cerr << "ildkit: solve requires a connected graph (" << ng.source
                << ")\n";
      return exit_usage;
    }
    Stopwatch sw;
    json result;
    if (method == "algo1") {
      ConstructionResult r = tree_ild(g);
      result = {{"ild_graph", true},
                {"set", set_to_json(r.set)},
                {"size", r.set.size()},
                {"method", method_name(r.method)},
                {"verified", r.verified}};
    } else if (method == "algo2") {
      ConstructionResult r = unicyclic_ild_algo2(g);
      result = {{"ild_graph", true},
                {"set", set_to_json(r.set)},
                {"size", r.set.size()},
                {"method", method_name(r.method)},
                {"verified", r.verified}};
    } else {  // auto
      if (is_tree(g)) {
        ConstructionResult r = tree_ild(g);
        result = {{"ild_graph", true},
                  {"set", set_to_json(r.set)},
                  {"size", r.set.size()},
                  {"method", method_name(r.method)},
                  {"verified", r.verified}};
      } else if (is_unicyclic(g) && is_twin_free(g)) {
        ConstructionResult r = unicyclic_ild(g);
        result = {{"ild_graph", true},
                  {"set", set_to_json(r.set)},
                  {"size", r.set.size()},
                  {"method", method_name(r.method)},
                  {"verified", r.verified}};
      } else {
        auto opt = parameter(g, Param::IotaL);
        if (!opt) {
          result = {{"ild_graph", false}};
        } else {
          result = {{"ild_graph", true},
                    {"set", set_to_json(opt->witness)},
                    {"size", opt->value},
                    {"method", method_name(Method::FallbackExact)},
                    {"verified", true}};
        }
      }
    }
    emit(make_report("solve", ng, result, sw.ms()));
  }
  return exit_ok;
}

int cmd_family(const std::string& kind_name, int n, int r, int s, int h, int k,
               const std::string& inc, const std::string& format) {
  auto kind = family_kind_from_name(kind_name);
  if (!kind) throw CLI::ValidationError("unknown family kind '" + kind_name + "'");
  FamilySpec spec;
  spec.kind = *kind;
  spec.n = n;
  spec.r = r;
  spec.s = s;
  spec.h = h;
  spec.k = k;
  if (!inc.empty()) {
    std::stringstream ss(inc);
    std::string pair;
    while (std::getline(ss, pair, ',')) {
      auto dash = pair.find('-');
      if (dash == std::string::npos)
        throw CLI::ValidationError("--inc expects i-j pairs, got '" + pair +
                                   "'");
      spec.split_incidence.emplace_back(std::stoi(pair.substr(0, dash)),
                                        std::stoi(pair.substr(dash + 1)));
    }
  }
  Graph g = generate(spec);
  if (format == "graph6")
    std::cout << write_graph6(g) << "\n";
  else if (format == "dot")
    std::cout << write_dot(g);
  else if (format == "edges")
    std::cout << write_edge_list(g);
  else
    throw CLI::ValidationError("unknown --emit format '" + format + "'");
  return exit_ok;
}

int cmd_census(int order, bool upto, bool twin_free_flag,
               std::optional<int> girth_filter, const std::string& from) {
  Stopwatch sw;
  CensusFilters filters;
  if (twin_free_flag) filters.twin_free = true;
  if (girth_filter) filters.girth = *girth_filter;

  std::uint64_t count = 0, enumerated = 0;
  std::vector<std::string> witnesses;
  bool overflow = false;
  std::vector<int> orders;

  if (!from.empty()) {
    std::ifstream in(from, std::ios::binary);
    if (!in)
      throw std::invalid_argument("cannot open graph6 stream '" + from + "'");
    std::vector<Graph> ext = read_graph6_stream(in);
    if (order > 0) {
      std::vector<Graph> filtered;
      for (Graph& g : ext)
        if (g.order() == order) filtered.push_back(std::move(g));
      ext = std::move(filtered);
    }
    CensusResult r = non_ild_census(order, filters, &ext);
    count = r.count;
    enumerated = r.total_enumerated;
    witnesses = r.witnesses_graph6;
    overflow = r.witness_overflow;
    orders.push_back(order);
  } else {
    int lo = upto ? 1 : order;
    for (int n = lo; n <= order; ++n) {
      CensusResult r = non_ild_census(n, filters);
      count += r.count;
      enumerated += r.total_enumerated;
      for (auto& w : r.witnesses_graph6) {
        if (witnesses.size() < census_witness_cap)
          witnesses.push_back(w);
        else
          overflow = true;
      }
      orders.push_back(n);
    }
  }

  json j{{"n", order},
         {"orders", orders},
         {"filters",
          {{"twin_free",
            filters.twin_free ? json(*filters.twin_free) : json()},
           {"girth", filters.girth ? json(*filters.girth) : json()}}},
         {"enumerated", enumerated},
         {"count", count},
         {"witnesses_graph6", witnesses},
         {"witness_overflow", overflow},
         {"runtime_ms", sw.ms()}};
  emit(j);
  return exit_ok;
}

int cmd_scan(const std::string& family_name, int max_n,
             const std::string& hypothesis) {
  auto family = hypothesis_family_from_name(family_name);
  if (!family)
    throw CLI::ValidationError("unknown family '" + family_name +
                               "' (use trees|unicyclic)");
  Stopwatch sw;
  HypothesisReport rep = hypothesis_scan(*family, max_n, hypothesis);
  json j{{"hypothesis", rep.id},
         {"family", family_name},
         {"max_n", rep.n_max},
         {"holds", rep.holds},
         {"checked", rep.checked},
         {"witnesses_graph6", rep.witnesses_graph6},
         {"witness_overflow", rep.witness_overflow},
         {"runtime_ms", sw.ms()}};
  emit(j);
  return rep.holds ? exit_ok : exit_counterexample;
}

int cmd_realize(int r, int s, bool twin_free_region, int max_n) {
  Stopwatch sw;
  Realization real = realization_search(
      r, s,
      twin_free_region ? RealizationRegion::TwinFreeTree
                       : RealizationRegion::Tree,
      max_n);
  json j{{"r", r},
         {"s", s},
         {"region", twin_free_region ? "twin_free_tree" : "tree"},
         {"graph6", write_graph6(real.witness)},
         {"n", real.witness.order()},
         {"gamma_l", real.gamma_l},
         {"iota_l", real.iota_l},
         {"runtime_ms", sw.ms()}};
  emit(j);
  return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ildkit: exact and constructive independent locating-domination"};
  app.set_help_flag("--help", "print this help message and exit");
  app.set_version_flag("--version",
                       std::string(tool_name) + " " + tool_version);
  app.require_subcommand(1);
  app.fallthrough();  // global flags (--pretty) may follow the subcommand
  app.add_flag("--pretty", g_pretty, "human-readable output next to the JSON");
  std::uint64_t seed = 0;
  app.add_option("--seed", seed,
                 "reserved; every algorithm here is deterministic")
      ->group("");

  std::string input = "-", set_csv, method = "auto";
  auto* params = app.add_subcommand("params", "exact five-parameter report");
  params->add_option("input", input, "graph file (graph6/edge list) or -");

  auto* checkc = app.add_subcommand("check", "flags of a candidate set");
  checkc->add_option("input", input, "graph file or -");
  checkc->add_option("--set", set_csv, "comma-separated 1-based labels")
      ->required();

  auto* solve = app.add_subcommand("solve", "constructive ILD-set");
  solve->add_option("input", input, "graph file or -");
  solve->add_option("--method", method, "algo1|algo2|auto")
      ->check(CLI::IsMember({"algo1", "algo2", "auto"}));

  std::string kind, inc, format = "graph6";
  int fn = 0, fr = 0, fs = 0, fh = 0, fk = 0;
  auto* family = app.add_subcommand("family", "named family generator");
  family->set_help_flag("--help", "print this help message and exit");
  family->add_option("kind", kind,
                     "path|cycle|complete|complete_bipartite|star|wheel|"
                     "split|gamma_r|fig5_tree")
      ->required();
  family->add_option("--n", fn, "order");
  family->add_option("--r", fr, "first parameter");
  family->add_option("--s", fs, "second parameter");
  family->add_option("--h", fh, "pendant-leaf count (fig5_tree)");
  family->add_option("--k", fk, "leaf count (fig5_tree)");
  family->add_option("--inc", inc, "split incidence, e.g. 1-1,1-2,2-3");
  family->add_option("--emit", format, "graph6|dot|edges");

  int order = 0;
  bool upto = false, twin_free_flag = false;
  int girth_value = -1;
  std::string from;
  auto* census = app.add_subcommand("census", "non-ILD census");
  census->add_option("--order", order, "order n")->required();
  census->add_flag("--upto", upto, "accumulate orders 1..n");
  census->add_flag("--twin-free", twin_free_flag, "keep twin-free graphs only");
  census->add_option("--girth", girth_value, "keep graphs of this girth only");
  census->add_option("--from", from, "external graph6 stream instead of the "
                                     "built-in enumeration");

  std::string scan_family = "trees", hypothesis;
  int max_n = 0;
  auto* scan = app.add_subcommand("scan", "hypothesis scan over a family");
  scan->add_option("--family", scan_family, "trees|unicyclic");
  scan->add_option("--max-n", max_n, "largest order")->required();
  scan->add_option("--hypothesis", hypothesis, "registered hypothesis id")
      ->required();

  int rr = 0, rs = 0, rmax_n = 13;
  bool twin_free_region = false;
  auto* realize = app.add_subcommand("realize",
                                     "tree with prescribed (gamma_l, iota_l)");
  realize->add_option("--r", rr, "gamma_l target")->required();
  realize->add_option("--s", rs, "iota_l target")->required();
  realize->add_flag("--twin-free", twin_free_region, "twin-free tree region");
  realize->add_option("--max-n", rmax_n, "search cap for the twin-free region");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_usage;
  }

  try {
    if (*params) return cmd_params(input);
    if (*checkc) return cmd_check(input, set_csv);
    if (*solve) return cmd_solve(input, method);
    if (*family) return cmd_family(kind, fn, fr, fs, fh, fk, inc, format);
    if (*census)
      return cmd_census(order, upto, twin_free_flag,
                        girth_value >= 0 ? std::optional<int>(girth_value)
                                         : std::nullopt,
                        from);
    if (*scan) return cmd_scan(scan_family, max_n, hypothesis);
    if (*realize) return cmd_realize(rr, rs, twin_free_region, rmax_n);
  } catch (const too_large_error& e) {
    std::cerr << "ildkit: " << e.what() << "\n";
    return exit_too_large;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "ildkit: " << e.what() << "\n";
    return exit_usage;
  } catch (const std::exception& e) {
    std::cerr << "ildkit: " << e.what() << "\n";
    return exit_usage;
  }
  return exit_usage;
}
