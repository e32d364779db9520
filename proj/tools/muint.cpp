// muint: generate, color, verify, solve, scan, and print interval edge
// colorings with bounded impropriety.
//
// Exit codes: 0 success, 1 verification or bound failure, 2 usage error,
// 3 search budget exceeded.

#include <cctype>
#include <cstdint>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "muint/coloring.hpp"
#include "muint/constructions.hpp"
#include "muint/exact.hpp"
#include "muint/families.hpp"
#include "muint/graph.hpp"
#include "muint/json_io.hpp"
#include "muint/table.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace muint;

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ---- shared flag bundles ---------------------------------------------------

struct FamilyFlags {
  std::string family;
  long long n = -1;
  long long s = -1, t = -1, ell = -1;
  std::string legs;   // "2,1,1"
  std::string leaves; // "1,0,2"
  std::string parts;  // "3,2,2"
  std::uint64_t seed = 0;
  std::string base; // compact operand spec, e.g. "cycle:4"
  std::string copy;
};

void add_family_flags(CLI::App* cmd, FamilyFlags& f) {
  cmd->add_option("--family", f.family, "family name");
  cmd->add_option("--n", f.n, "size parameter (meaning per family)");
  cmd->add_option("--s", f.s, "multipartite part size s");
  cmd->add_option("--t", f.t, "multipartite part size t");
  cmd->add_option("--ell", f.ell, "multipartite: 2^ell parts");
  cmd->add_option("--legs", f.legs, "spider leg lengths, comma separated");
  cmd->add_option("--leaves", f.leaves, "caterpillar leaves per spine vertex");
  cmd->add_option("--parts", f.parts, "general multipartite part sizes");
  cmd->add_option("--seed", f.seed, "seed for randomized families");
  cmd->add_option("--base", f.base, "corona/strong product base, e.g. cycle:4");
  cmd->add_option("--copy", f.copy, "corona/strong product copy, e.g. path:3");
}

struct BudgetFlags {
  std::uint64_t max_nodes = 0;
  double time_limit = 0.0;
};

void add_budget_flags(CLI::App* cmd, BudgetFlags& b) {
  cmd->add_option("--max-nodes", b.max_nodes, "search node budget (0 = unlimited)");
  cmd->add_option("--time-limit", b.time_limit, "search time budget in seconds");
}

SearchBudget to_budget(const BudgetFlags& b) {
  SearchBudget sb;
  sb.max_nodes = b.max_nodes;
  sb.max_seconds = b.time_limit;
  return sb;
}

std::vector<int> parse_int_list(const std::string& text, const char* what) {
  std::vector<int> out;
  std::string cur;
  for (char ch : text + ",") {
    if (ch == ',') {
      if (cur.empty()) throw UsageError(std::string(what) + ": empty entry");
      try {
        out.push_back(std::stoi(cur));
      } catch (const std::exception&) {
        throw UsageError(std::string(what) + ": '" + cur + "' is not an integer");
      }
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(ch))) {
      cur += ch;
    }
  }
  return out;
}

FamilyRecipe recipe_from_flags(const FamilyFlags& f) {
  if (f.family.empty()) throw UsageError("--family is required");
  auto need_n = [&](const char* fam) {
    if (f.n < 0) throw UsageError(std::string("--n is required for family '") + fam + "'");
  };
  FamilyRecipe r;
  r.seed = f.seed;
  const std::string& fam = f.family;
  if (fam == "path" || fam == "cycle" || fam == "star" || fam == "wheel" ||
      fam == "complete" || fam == "square_of_path" || fam == "triangulation" ||
      fam == "two_path" || fam == "two_tree") {
    need_n(fam.c_str());
    r.n = f.n;
    static const std::map<std::string, Family> kinds = {
        {"path", Family::Path},
        {"cycle", Family::Cycle},
        {"star", Family::Star},
        {"wheel", Family::Wheel},
        {"complete", Family::Complete},
        {"square_of_path", Family::SquareOfPath},
        {"triangulation", Family::IteratedTriangulation},
        {"two_path", Family::TwoPath},
        {"two_tree", Family::TwoTree},
    };
    r.kind = kinds.at(fam);
  } else if (fam == "spider") {
    if (f.legs.empty()) throw UsageError("--legs is required for family 'spider'");
    r.kind = Family::Spider;
    r.legs = parse_int_list(f.legs, "--legs");
  } else if (fam == "caterpillar") {
    if (f.leaves.empty()) throw UsageError("--leaves is required for family 'caterpillar'");
    r.kind = Family::Caterpillar;
    r.leaf_counts = parse_int_list(f.leaves, "--leaves");
  } else if (fam == "multipartite" || fam == "complete_multipartite") {
    r.kind = Family::CompleteMultipartite;
    if (!f.parts.empty()) {
      r.part_sizes = parse_int_list(f.parts, "--parts");
    } else {
      if (f.s < 0 || f.t < 0 || f.ell < 0)
        throw UsageError("family 'multipartite' needs --s --t --ell (or --parts)");
      r.s = f.s;
      r.t = f.t;
      r.ell = f.ell;
    }
  } else if (fam == "corona" || fam == "strong_product") {
    if (f.base.empty() || f.copy.empty())
      throw UsageError("family '" + fam + "' needs --base and --copy");
    r.kind = fam == "corona" ? Family::Corona : Family::StrongProduct;
    r.sub.push_back(parse_family_spec(f.base));
    r.sub.push_back(parse_family_spec(f.copy));
  } else {
    throw UsageError("unknown family '" + fam + "'");
  }
  return r;
}

// ---- JSON helpers ------------------------------------------------------------

json recipe_to_json(const FamilyRecipe& r) {
  json j;
  j["family"] = family_name(r.kind);
  switch (r.kind) {
    case Family::Path:
    case Family::Cycle:
    case Family::Star:
    case Family::Wheel:
    case Family::Complete:
    case Family::SquareOfPath:
    case Family::IteratedTriangulation:
      j["n"] = r.n;
      break;
    case Family::Spider:
      j["legs"] = r.legs;
      break;
    case Family::Caterpillar:
      j["leaf_counts"] = r.leaf_counts;
      break;
    case Family::CompleteMultipartite:
      if (!r.part_sizes.empty()) {
        j["part_sizes"] = r.part_sizes;
      } else {
        j["s"] = r.s;
        j["t"] = r.t;
        j["ell"] = r.ell;
      }
      break;
    case Family::TwoPath:
    case Family::TwoTree:
      j["n"] = r.n;
      j["seed"] = r.seed;
      break;
    case Family::Corona:
    case Family::StrongProduct:
      j["base"] = recipe_to_json(r.sub.at(0));
      j["copy"] = recipe_to_json(r.sub.at(1));
      break;
  }
  return j;
}

json meta_to_json(const FamilyMeta& meta) {
  json j;
  if (const auto* lab = std::get_if<MultipartiteLabels>(&meta)) {
    j["parts"] = lab->parts;
    json names = json::array();
    int n = 0;
    for (const auto& part : lab->parts) n += static_cast<int>(part.size());
    for (int v = 0; v < n; ++v) names.push_back(lab->name(v));
    j["names"] = std::move(names);
  } else if (const auto* seq = std::get_if<TwoPathSequence>(&meta)) {
    json edges = json::array();
    for (auto [u, v] : seq->seq_edges) edges.push_back(json::array({u, v}));
    j["seq_edges"] = std::move(edges);
    json tris = json::array();
    for (const auto& t : seq->triangles) tris.push_back(json::array({t[0], t[1], t[2]}));
    j["triangles"] = std::move(tris);
  } else if (const auto* trace = std::get_if<TwoTreeTrace>(&meta)) {
    j["base"] = json::array({trace->base[0], trace->base[1], trace->base[2]});
    json steps = json::array();
    for (const auto& st : trace->steps)
      steps.push_back(json::array({st.vertex, st.u, st.w}));
    j["steps"] = std::move(steps);
  } else if (const auto* tri = std::get_if<TriangulationTrace>(&meta)) {
    j["levels"] = tri->levels;
    json steps = json::array();
    for (const auto& st : tri->steps)
      steps.push_back(json::array({st.vertex, st.face[0], st.face[1], st.face[2]}));
    j["steps"] = std::move(steps);
  } else if (const auto* lay = std::get_if<CoronaLayout>(&meta)) {
    j["base_n"] = lay->base_n;
    j["copy_n"] = lay->copy_n;
    j["base_edges"] = lay->base_edges;
    j["copy_edges"] = lay->copy_edges;
  }
  return j;
}

void emit(const std::string& out_path, const std::string& text) {
  if (out_path.empty())
    std::cout << text;
  else
    write_text_file(out_path, text);
}

Graph load_graph(const std::string& path) { return graph_from_json(read_text_file(path)); }

// ---- subcommand: gen -----------------------------------------------------------

int run_gen(const FamilyFlags& ff, const std::string& out) {
  FamilyRecipe recipe = recipe_from_flags(ff);
  Generated gen = generate(recipe);
  json j;
  j["n"] = gen.graph.n;
  json edges = json::array();
  for (auto [u, v] : gen.graph.edges) edges.push_back(json::array({u, v}));
  j["edges"] = std::move(edges);
  j["recipe"] = recipe_to_json(recipe);
  json meta = meta_to_json(gen.meta);
  if (!meta.is_null() && !meta.empty()) j["meta"] = std::move(meta);
  emit(out, j.dump(2) + "\n");
  return kExitOk;
}

// ---- subcommand: color -----------------------------------------------------------

struct ColorProduct {
  Graph graph;
  EdgeColoring coloring;
  std::vector<std::string> names; // for the table; empty = numeric
};

EdgeColoring base_interval_coloring(const Graph& base) {
  if (base.edge_count() == 0) return {};
  if (is_forest(base)) return color_forest(base);
  SolveOutcome out = exact_impropriety(base);
  if (out.budget_exceeded)
    throw ConstructionError("could not color the corona base exactly");
  return out.witness;
}

CoronaStrategy default_strategy(Family copy_kind) {
  switch (copy_kind) {
    case Family::Path: return CoronaStrategy::Path;
    case Family::Cycle: return CoronaStrategy::Cycle;
    case Family::Star: return CoronaStrategy::Star;
    case Family::Spider: return CoronaStrategy::Spider;
    case Family::Caterpillar: return CoronaStrategy::Caterpillar;
    default: return CoronaStrategy::General;
  }
}

ColorProduct color_product(const FamilyFlags& ff, const std::string& graph_path,
                           const std::string& strategy_flag) {
  if (!graph_path.empty()) {
    // Arbitrary graph input: the outerplanar procedure is the only colorer
    // that accepts one.
    Graph g = load_graph(graph_path);
    OuterplanarColoring oc = color_outerplanar(g);
    return {std::move(g), std::move(oc.coloring), {}};
  }
  FamilyRecipe recipe = recipe_from_flags(ff);
  switch (recipe.kind) {
    case Family::Path:
    case Family::Star:
    case Family::Spider:
    case Family::Caterpillar: {
      Graph g = generate(recipe).graph;
      EdgeColoring c = color_forest(g);
      return {std::move(g), std::move(c), {}};
    }
    case Family::CompleteMultipartite: {
      if (!recipe.part_sizes.empty())
        throw UsageError("no constructive coloring for general part sizes; "
                         "use --s --t --ell or 'solve'");
      MultipartiteColoring mc = color_multipartite_stst(
          static_cast<int>(recipe.s), static_cast<int>(recipe.t),
          static_cast<int>(recipe.ell));
      std::vector<std::string> names;
      for (int v = 0; v < mc.graph.n; ++v) names.push_back(mc.labels.name(v));
      return {std::move(mc.graph), std::move(mc.coloring), std::move(names)};
    }
    case Family::SquareOfPath: {
      SquareOfPathColoring sc = color_square_of_path(static_cast<int>(recipe.n));
      return {std::move(sc.graph), std::move(sc.coloring), {}};
    }
    case Family::TwoPath: {
      TwoPathSequence seq = random_two_path(static_cast<int>(recipe.n), recipe.seed);
      TwoPathColoring tc = color_two_path(seq);
      return {std::move(tc.graph), std::move(tc.coloring), {}};
    }
    case Family::TwoTree: {
      TwoTreeTrace trace = random_two_tree(static_cast<int>(recipe.n), recipe.seed);
      TwoTreeColoring tc = color_two_tree(trace);
      return {std::move(tc.graph), std::move(tc.coloring), {}};
    }
    case Family::IteratedTriangulation: {
      TriangulationColoring tc =
          color_iterated_triangulation(static_cast<int>(recipe.n));
      return {std::move(tc.graph), std::move(tc.coloring), {}};
    }
    case Family::Wheel: {
      // W_n = K_1 corona C_{n-1}; reuse the cycle strategy.
      if (recipe.n < 4) throw UsageError("wheel needs --n >= 4");
      CoronaColoring cc =
          color_corona(make_complete(1), {}, make_cycle(static_cast<int>(recipe.n) - 1),
                       CoronaStrategy::Cycle);
      return {std::move(cc.graph), std::move(cc.coloring), {}};
    }
    case Family::Corona: {
      Graph base = generate(recipe.sub.at(0)).graph;
      Graph copy = generate(recipe.sub.at(1)).graph;
      CoronaStrategy strat = default_strategy(recipe.sub.at(1).kind);
      if (!strategy_flag.empty()) {
        auto parsed = strategy_from_name(strategy_flag);
        if (!parsed) throw UsageError("unknown strategy '" + strategy_flag + "'");
        strat = *parsed;
      }
      CoronaColoring cc = color_corona(base, base_interval_coloring(base), copy, strat);
      return {std::move(cc.graph), std::move(cc.coloring), {}};
    }
    default:
      throw UsageError("no constructive coloring for family '" +
                       family_name(recipe.kind) + "'; use 'solve'");
  }
}

int run_color(const FamilyFlags& ff, const std::string& graph_path,
              const std::string& strategy_flag, bool table, const std::string& out) {
  if (ff.family.empty() && graph_path.empty())
    throw UsageError("color needs --family or --graph");
  if (!ff.family.empty() && !graph_path.empty())
    throw UsageError("pass either --family or --graph, not both");
  ColorProduct p = color_product(ff, graph_path, strategy_flag);
  VerificationReport rep = verify(p.graph, p.coloring);
  if (!rep.all_intervals || !impropriety_of(rep)) {
    std::cerr << "error: produced coloring failed verification\n";
    return kExitFail;
  }
  if (table)
    emit(out, render_color_table(p.graph, p.coloring, p.names));
  else
    emit(out, coloring_to_json(p.coloring) + "\n");
  return kExitOk;
}

// ---- subcommand: verify / table ----------------------------------------------

int report_gaps(const VerificationReport& rep) {
  for (int v : rep.offending) {
    const VertexProfile& p = rep.vertices[v];
    std::cout << "vertex " << v << ": incident colors not an interval (span ["
              << p.min_color << ", " << p.max_color << "], " << p.distinct
              << " distinct)\n";
  }
  std::cout << "intervals: FAIL\n";
  return kExitFail;
}

int run_verify(const std::string& graph_path, const std::string& coloring_path, int k) {
  Graph g = load_graph(graph_path);
  EdgeColoring c = coloring_from_json(read_text_file(coloring_path));
  VerificationReport rep = verify(g, c);
  if (!rep.all_intervals) return report_gaps(rep);
  std::cout << "intervals: ok\n";
  std::cout << "impropriety = " << rep.max_multiplicity << "\n";
  if (k > 0 && rep.max_multiplicity > k) {
    std::cout << "impropriety exceeds k = " << k << "\n";
    return kExitFail;
  }
  return kExitOk;
}

int run_table(const std::string& graph_path, const std::string& coloring_path,
              const std::string& out) {
  Graph g = load_graph(graph_path);
  EdgeColoring c = coloring_from_json(read_text_file(coloring_path));
  VerificationReport rep = verify(g, c);
  if (!rep.all_intervals) return report_gaps(rep);
  emit(out, render_color_table(g, c));
  return kExitOk;
}

// ---- subcommand: solve -----------------------------------------------------------

int run_solve(const FamilyFlags& ff, const std::string& graph_path, int k,
              const BudgetFlags& bf, const std::string& out) {
  if (ff.family.empty() && graph_path.empty())
    throw UsageError("solve needs --family or --graph");
  if (!ff.family.empty() && !graph_path.empty())
    throw UsageError("pass either --family or --graph, not both");
  Graph g = graph_path.empty() ? generate(recipe_from_flags(ff)).graph
                               : load_graph(graph_path);
  SearchBudget budget = to_budget(bf);
  if (k > 0) {
    SearchResult res = exists_k_improper(g, k, budget);
    std::cerr << "nodes = " << res.nodes << ", ms = " << res.ms << "\n";
    switch (res.status) {
      case SearchStatus::Witness:
        std::cout << "k = " << k << ": witness\n";
        if (!out.empty())
          write_text_file(out, coloring_to_json(res.witness.colors.empty()
                                                    ? res.witness
                                                    : normalize(res.witness)) +
                                   "\n");
        return kExitOk;
      case SearchStatus::Exhausted:
        std::cout << "k = " << k << ": exhausted\n";
        return kExitOk;
      case SearchStatus::BudgetExceeded:
        std::cerr << "error: search budget exceeded\n";
        return kExitBudget;
    }
  }
  SolveOutcome res = exact_impropriety(g, budget);
  std::cerr << "nodes = " << res.nodes << ", ms = " << res.ms << "\n";
  if (res.budget_exceeded) {
    std::cerr << "error: search budget exceeded\n";
    return kExitBudget;
  }
  std::cout << "mu_int = " << res.impropriety << "\n";
  if (!out.empty())
    write_text_file(out, coloring_to_json(res.witness.colors.empty()
                                              ? res.witness
                                              : normalize(res.witness)) +
                             "\n");
  return kExitOk;
}

// ---- subcommand: scan -----------------------------------------------------------

std::vector<ScanInstance> scan_two_trees(int max_n) {
  if (max_n < 3 || max_n > 10) throw UsageError("two_tree scan needs 3 <= --n <= 10");
  std::vector<ScanInstance> out;
  for (int n = 3; n <= max_n; ++n) {
    auto all = enumerate_two_trees(n);
    for (size_t i = 0; i < all.size(); ++i)
      out.push_back({"two_tree", "n" + std::to_string(n) + "#" + std::to_string(i),
                     all[i].graph});
  }
  return out;
}

std::vector<ScanInstance> scan_delta5(int max_n) {
  if (max_n < 2 || max_n > 6) throw UsageError("delta5 scan needs 2 <= --n <= 6");
  std::vector<ScanInstance> out;
  for (int n = 2; n <= max_n; ++n) {
    std::vector<std::pair<int, int>> all_edges;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) all_edges.emplace_back(u, v);
    int mbits = static_cast<int>(all_edges.size());
    std::set<Certificate> seen;
    int idx = 0;
    for (std::uint32_t mask = 0; mask < (1u << mbits); ++mask) {
      std::vector<std::pair<int, int>> edges;
      for (int b = 0; b < mbits; ++b)
        if (mask & (1u << b)) edges.push_back(all_edges[b]);
      Graph g = make_graph(n, edges);
      if (!is_connected(g) || max_degree(g) > 5) continue;
      if (!seen.insert(certificate(g)).second) continue;
      out.push_back({"delta5", "n" + std::to_string(n) + "#" + std::to_string(idx++),
                     std::move(g)});
    }
  }
  return out;
}

std::vector<ScanInstance> scan_wheels(int max_n) {
  if (max_n < 4) throw UsageError("wheel scan needs --n >= 4");
  std::vector<ScanInstance> out;
  for (int n = 4; n <= max_n; ++n)
    out.push_back({"wheel", "W" + std::to_string(n), make_wheel(n)});
  return out;
}

std::vector<ScanInstance> scan_outerplanar(int max_n, int count, std::uint64_t seed) {
  if (max_n < 7) throw UsageError("outerplanar scan needs --n >= 7");
  std::vector<ScanInstance> out;
  for (int i = 0; i < count; ++i) {
    int n = 7 + static_cast<int>(i % (max_n - 6));
    Graph g = random_maximal_outerplanar(n, seed + static_cast<std::uint64_t>(i));
    std::string tag = "n" + std::to_string(n) + "s" + std::to_string(i);
    Graph sub = random_connected_edge_subgraph(g, seed + 1000u + i);
    out.push_back({"outerplanar", "mop" + tag, std::move(g)});
    out.push_back({"outerplanar", "sub" + tag, std::move(sub)});
  }
  return out;
}

std::vector<ScanInstance> scan_multipartite(int max_n) {
  if (max_n < 2 || max_n > 8) throw UsageError("multipartite scan needs 2 <= --n <= 8");
  std::vector<ScanInstance> out;
  // All complete multipartite graphs on 2..max_n vertices with >= 2 parts:
  // descending partitions, at least two parts.
  std::vector<int> cur;
  auto id_of = [](const std::vector<int>& p) {
    std::string s = "K";
    for (size_t i = 0; i < p.size(); ++i)
      s += (i ? "," : "_") + std::to_string(p[i]);
    return s;
  };
  std::function<void(int, int)> rec = [&](int rest, int cap) {
    if (rest == 0) {
      if (cur.size() >= 2)
        out.push_back({"multipartite", id_of(cur),
                       make_complete_multipartite(cur).first});
      return;
    }
    for (int next = std::min(rest, cap); next >= 1; --next) {
      cur.push_back(next);
      rec(rest - next, next);
      cur.pop_back();
    }
  };
  for (int n = 2; n <= max_n; ++n) rec(n, n);
  return out;
}

int run_scan(const std::string& family, int n, int count, std::uint64_t seed,
             const std::string& bound, const BudgetFlags& bf, const std::string& out) {
  auto kind = bound_from_name(bound);
  if (!kind) throw UsageError("unknown bound '" + bound + "'");
  std::vector<ScanInstance> instances;
  if (family == "two_tree")
    instances = scan_two_trees(n > 0 ? n : 7);
  else if (family == "delta5")
    instances = scan_delta5(n > 0 ? n : 6);
  else if (family == "wheel")
    instances = scan_wheels(n > 0 ? n : 10);
  else if (family == "outerplanar")
    instances = scan_outerplanar(n > 0 ? n : 14, count > 0 ? count : 20, seed);
  else if (family == "multipartite")
    instances = scan_multipartite(n > 0 ? n : 6);
  else
    throw UsageError("unknown scan family '" + family +
                     "' (two_tree, delta5, wheel, outerplanar, multipartite)");
  std::vector<ScanRow> rows = conjecture_scan(instances, *kind, to_budget(bf));
  emit(out, scan_csv(rows));
  bool violated = false, budget = false;
  for (const ScanRow& r : rows) {
    if (r.budget_exceeded)
      budget = true;
    else if (!r.ok)
      violated = true;
  }
  if (violated) return kExitFail;
  if (budget) return kExitBudget;
  return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"interval edge colorings with bounded impropriety"};
  app.require_subcommand(1);

  FamilyFlags gen_ff;
  std::string gen_out;
  CLI::App* gen = app.add_subcommand("gen", "generate a graph as JSON");
  add_family_flags(gen, gen_ff);
  gen->add_option("--out", gen_out, "write to file instead of stdout");

  FamilyFlags color_ff;
  std::string color_graph, color_strategy, color_out;
  bool color_table = false;
  CLI::App* color = app.add_subcommand("color", "run a constructive coloring");
  add_family_flags(color, color_ff);
  color->add_option("--graph", color_graph, "graph JSON file (outerplanar procedure)");
  color->add_option("--strategy", color_strategy,
                    "corona strategy (path, cycle, star, spider, caterpillar, "
                    "general, three-set)");
  color->add_flag("--table", color_table, "render the color matrix");
  color->add_option("--out", color_out, "write to file instead of stdout");

  std::string verify_graph, verify_coloring;
  int verify_k = 0;
  CLI::App* verify_cmd = app.add_subcommand("verify", "check a coloring");
  verify_cmd->add_option("--graph", verify_graph, "graph JSON file")->required();
  verify_cmd->add_option("--coloring", verify_coloring, "coloring JSON file")->required();
  verify_cmd->add_option("--k", verify_k, "also require impropriety <= k");

  FamilyFlags solve_ff;
  std::string solve_graph, solve_out;
  int solve_k = 0;
  BudgetFlags solve_bf;
  CLI::App* solve = app.add_subcommand("solve", "exact impropriety search");
  add_family_flags(solve, solve_ff);
  solve->add_option("--graph", solve_graph, "graph JSON file");
  solve->add_option("--k", solve_k, "decide a single k instead of minimizing");
  add_budget_flags(solve, solve_bf);
  solve->add_option("--out", solve_out, "write the witness coloring to a file");

  std::string scan_family, scan_bound, scan_out;
  int scan_n = 0, scan_count = 0;
  std::uint64_t scan_seed = 0;
  BudgetFlags scan_bf;
  CLI::App* scan = app.add_subcommand("scan", "exact solve a family against a bound");
  scan->add_option("--family", scan_family,
                   "two_tree, delta5, wheel, outerplanar, multipartite")
      ->required();
  scan->add_option("--n", scan_n, "size limit (meaning per family)");
  scan->add_option("--count", scan_count, "sample count (outerplanar)");
  scan->add_option("--seed", scan_seed, "sample seed (outerplanar)");
  scan->add_option("--bound", scan_bound,
                   "2, ceil(delta/3), ceil(delta/4)+1, ceil(delta/5), delta")
      ->required();
  add_budget_flags(scan, scan_bf);
  scan->add_option("--out", scan_out, "write CSV to file instead of stdout");

  std::string table_graph, table_coloring, table_out;
  CLI::App* table = app.add_subcommand("table", "render a coloring as a matrix");
  table->add_option("--graph", table_graph, "graph JSON file")->required();
  table->add_option("--coloring", table_coloring, "coloring JSON file")->required();
  table->add_option("--out", table_out, "write to file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (gen->parsed()) return run_gen(gen_ff, gen_out);
    if (color->parsed())
      return run_color(color_ff, color_graph, color_strategy, color_table, color_out);
    if (verify_cmd->parsed()) return run_verify(verify_graph, verify_coloring, verify_k);
    if (solve->parsed())
      return run_solve(solve_ff, solve_graph, solve_k, solve_bf, solve_out);
    if (scan->parsed())
      return run_scan(scan_family, scan_n, scan_count, scan_seed, scan_bound,
                      scan_bf, scan_out);
    if (table->parsed()) return run_table(table_graph, table_coloring, table_out);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    // recipe/trace/graph/coloring/solver preconditions
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ConstructionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitUsage;
}
