#include "nusubdiv/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "nlohmann/json.hpp"
#include "nusubdiv/algebra.hpp"
#include "nusubdiv/errors.hpp"
#include "nusubdiv/flow.hpp"
#include "nusubdiv/graph.hpp"
#include "nusubdiv/path.hpp"
#include "nusubdiv/tamari.hpp"
#include "nusubdiv/triangulate.hpp"
#include "nusubdiv/verify.hpp"

namespace nusubdiv {

namespace {

constexpr int kBuildGuard = 12;   // largest a+b for constructions
constexpr int kVerifyGuard = 8;   // largest a+b verified exhaustively

std::string set_str(const std::vector<int>& xs) {
  std::string s = "{";
  for (std::size_t k = 0; k < xs.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(xs[k]);
  }
  return s + "}";
}

void guard_size(const LatticePath& nu, int limit, bool force) {
  if (!force && nu.size() > limit) {
    throw ResourceLimitError("path has " + std::to_string(nu.size()) +
                             " steps; guarded at " + std::to_string(limit) +
                             " (use --force to override)");
  }
}

ReductionOrder make_order(const RunConfig& cfg, int n) {
  const LengthVariant variant = cfg.length_variant == "complement"
                                    ? LengthVariant::Complement
                                    : LengthVariant::Span;
  if (cfg.order == "rho-len") return rho_len_order(n, variant);
  if (cfg.order == "lex") return lex_order();
  if (cfg.order == "random") {
    if (!cfg.seed_set) {
      throw std::invalid_argument("--order random needs --seed");
    }
    return random_order(cfg.seed);
  }
  throw std::invalid_argument("unknown order '" + cfg.order + "'");
}

MixedGraph make_graph(const RunConfig& cfg, const IndexedPath& p) {
  if (cfg.kind == "nu") return nu_graph(p);
  if (cfg.kind == "nu-b") return bidirectional_nu_graph(p);
  if (cfg.kind == "tilde") return partial_augment(nu_graph(p), p);
  if (cfg.kind == "tilde-b") return partial_augment(bidirectional_nu_graph(p), p);
  if (cfg.kind == "cell") return cell_graph(p, cfg.cell);
  if (cfg.kind == "tilde-cell") return partial_augment(cell_graph(p, cfg.cell), p);
  throw std::invalid_argument("unknown graph kind '" + cfg.kind + "'");
}

std::string graph_text(const MixedGraph& g) {
  std::string s;
  for (const Edge& e : g.edges) {
    const std::string tail = g.is_source(e.tail) ? "s" : std::to_string(e.tail);
    const std::string head = g.is_sink(e.head) ? "t" : std::to_string(e.head);
    const char* arrow = e.dir == Orientation::Forward    ? " -> "
                        : e.dir == Orientation::Backward ? " <- "
                                                         : " <-> ";
    s += tail + arrow + head;
    if (e.label != 0) {
      s += std::string(" [") + (g.is_source(e.tail) ? "E" : "N") +
           std::to_string(e.label) + "]";
    }
    s += "\n";
  }
  return s;
}

int cmd_index(const RunConfig& cfg, std::ostream& out) {
  const LatticePath nu = LatticePath::parse(cfg.word);
  guard_size(nu, kBuildGuard, cfg.force);
  const IndexedPath p = index_path(nu);
  if (cfg.format == "json") {
    out << p.to_json() << "\n";
  } else if (cfg.format == "text") {
    out << "closed: " << p.str() << "\n";
    out << "I: " << set_str(p.I) << "\n";
    out << "J: " << set_str(p.J) << "\n";
    out << "V: " << set_str(p.V) << "\n";
    out << "n: " << p.n << "\n";
    out << "w: " << p.w << "\n";
    out << "cyclic peaks:";
    for (const auto& [np, ep] : p.cyclic_peaks) {
      out << " (" << np << "," << ep << ")";
    }
    out << "\n";
  } else {
    throw std::invalid_argument("format '" + cfg.format + "' is not supported by index");
  }
  return 0;
}

int cmd_graph(const RunConfig& cfg, std::ostream& out) {
  const LatticePath nu = LatticePath::parse(cfg.word);
  guard_size(nu, kBuildGuard, cfg.force);
  const IndexedPath p = index_path(nu);
  const MixedGraph g = make_graph(cfg, p);
  if (cfg.format == "json") {
    out << to_json(g) << "\n";
  } else if (cfg.format == "dot") {
    out << to_dot(g);
  } else {
    out << graph_text(g);
  }
  return 0;
}

int cmd_routes(const RunConfig& cfg, std::ostream& out) {
  const LatticePath nu = LatticePath::parse(cfg.word);
  guard_size(nu, kBuildGuard, cfg.force);
  const IndexedPath p = index_path(nu);
  if (cfg.kind != "tilde" && cfg.kind != "tilde-b" && cfg.kind != "tilde-cell") {
    throw std::invalid_argument("routes needs an augmented graph kind (tilde, tilde-b, tilde-cell)");
  }
  const MixedGraph g = make_graph(cfg, p);
  const std::vector<Route> routes = enumerate_routes(g);
  if (cfg.format == "json") {
    out << routes_to_json(routes, g) << "\n";
  } else if (cfg.format == "text") {
    for (const Route& r : routes) {
      std::string line;
      for (std::size_t k = 0; k < r.verts.size(); ++k) {
        if (k) line += " ";
        const int v = r.verts[k];
        line += g.is_source(v) ? "s" : g.is_sink(v) ? "t" : std::to_string(v);
      }
      line += "  signs:";
      for (int s : r.signs) line += s > 0 ? " +" : " -";
      out << line << "\n";
    }
  } else {
    throw std::invalid_argument("format '" + cfg.format + "' is not supported by routes");
  }
  return 0;
}

int cmd_reduce(const RunConfig& cfg, std::ostream& out) {
  const LatticePath nu = LatticePath::parse(cfg.word);
  guard_size(nu, kBuildGuard, cfg.force);
  const IndexedPath p = index_path(nu);
  BetaPoly poly;
  if (cfg.target == "p-nu") {
    poly = build_p_nu(p);
  } else if (cfg.target == "cell") {
    poly = BetaPoly::monomial(monomial_of_graph(cell_graph(p, cfg.cell)));
  } else {
    throw std::invalid_argument("unknown reduce target '" + cfg.target + "'");
  }
  const bool simple = cfg.beta == "0";
  if (simple) poly = specialize_beta_zero(poly);
  ReductionLog log;
  const BetaPoly red = reduce_to_normal_form(poly, make_order(cfg, p.n), simple, &log);
  if (cfg.format == "json") {
    nlohmann::ordered_json j;
    j["reduced"] = nlohmann::ordered_json::parse(red.to_json());
    j["steps"] = nlohmann::ordered_json::array();
    for (const StepRecord& s : log.steps) {
      nlohmann::ordered_json js;
      js["triple"] = {s.triple.i, s.triple.j, s.triple.k};
      js["rule"] = s.simple ? "simple" : "full";
      j["steps"].push_back(js);
    }
    out << j.dump() << "\n";
  } else if (cfg.format == "text") {
    out << "steps: " << log.steps.size() << "\n";
    for (const StepRecord& s : log.steps) {
      out << "  (" << s.triple.i << "," << s.triple.j << "," << s.triple.k << ") "
          << (s.simple ? "simple" : "full") << "\n";
    }
    out << "reduced: " << red.str() << "\n";
  } else {
    throw std::invalid_argument("format '" + cfg.format + "' is not supported by reduce");
  }
  return 0;
}

int cmd_triangulate(const RunConfig& cfg, std::ostream& out) {
  const LatticePath nu = LatticePath::parse(cfg.word);
  guard_size(nu, kBuildGuard, cfg.force);
  const IndexedPath p = index_path(nu);
  const BetaPoly red = reduce_to_normal_form(build_p_nu(p), make_order(cfg, p.n),
                                             /*simple=*/false);
  const Triangulation t = triangulation_from_reduced(red, p);
  if (cfg.format == "json") {
    out << t.to_json() << "\n";
  } else if (cfg.format == "dot") {
    std::string s = "graph D {\n";
    for (std::size_t k = 0; k < t.facets.size(); ++k) {
      s += "  F" + std::to_string(k) + " [label=\"" + t.facets[k].mono.str() + "\"];\n";
    }
    for (const auto& [f1, f2] : t.dual_edges) {
      s += "  F" + std::to_string(f1) + " -- F" + std::to_string(f2) + ";\n";
    }
    s += "}\n";
    out << s;
  } else {
    out << "facets: " << t.facets.size() << "\n";
    for (const Simplex& s : t.facets) out << "  " << s.mono.str() << "\n";
    out << "lower faces: " << t.lower_faces.size() << "\n";
    out << "dual edges: " << t.dual_edges.size() << "\n";
  }
  return 0;
}

int cmd_tamari(const RunConfig& cfg, std::ostream& out) {
  const LatticePath nu = LatticePath::parse(cfg.word);
  guard_size(nu, kBuildGuard, cfg.force);
  const IndexedPath p = index_path(nu);
  std::vector<IJForest> trees;
  if (cfg.mode == "cyclic") {
    trees = enumerate_cyclic_ij_trees(p, cfg.force ? nu.size() : kBuildGuard);
  } else if (cfg.mode == "increasing") {
    trees = enumerate_increasing_ij_trees(p, cfg.force ? nu.size() : kBuildGuard);
  } else {
    throw std::invalid_argument("unknown tamari mode '" + cfg.mode + "'");
  }
  if (cfg.format == "json") {
    out << trees_to_json(trees) << "\n";
  } else if (cfg.format == "dot") {
    out << hasse_to_dot(trees, increasing_flip_covers(trees));
  } else {
    out << "trees: " << trees.size() << "\n";
    for (const IJForest& t : trees) {
      std::string line = "  ";
      for (const Arc& a : t.arcs) {
        line += "(" + std::to_string(a.i) + "," + std::to_string(a.j) + ")";
      }
      out << line << "\n";
    }
    if (cfg.mode == "cyclic") {
      out << "maximal arc classes:\n";
      std::map<std::pair<int, int>, int> classes;
      for (const IJForest& t : trees) {
        const Arc m = maximal_arc(t, p);
        ++classes[{m.i, m.j}];
      }
      for (const auto& [arc, count] : classes) {
        out << "  (" << arc.first << "," << arc.second << "): " << count << "\n";
      }
    }
  }
  return 0;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  const LatticePath nu = LatticePath::parse(cfg.word);
  guard_size(nu, kVerifyGuard, cfg.force);
  VerifyOptions opt;
  opt.trials = cfg.trials;
  opt.seed = cfg.seed_set ? cfg.seed : 1;
  opt.guard = std::max(kVerifyGuard, nu.size());
  const VerifyReport rep = verify_path(nu, opt);
  if (cfg.format == "json") {
    out << rep.to_json() << "\n";
  } else {
    out << rep.text();
  }
  return rep.ok() ? 0 : 1;
}

int cmd_sweep(const RunConfig& cfg, std::ostream& out) {
  if (!cfg.force && cfg.max_size > kVerifyGuard) {
    throw ResourceLimitError("sweep is guarded at " + std::to_string(kVerifyGuard) +
                             " steps (use --force to override)");
  }
  VerifyOptions opt;
  opt.trials = cfg.trials;
  opt.seed = cfg.seed_set ? cfg.seed : 1;
  opt.guard = std::max(kVerifyGuard, cfg.max_size);
  const SweepReport rep = sweep_paths(cfg.max_size, opt);
  if (cfg.format == "json") {
    out << rep.to_json() << "\n";
  } else {
    out << rep.text();
  }
  return rep.ok() ? 0 : 1;
}

}  // namespace

ParseResult parse_args(const std::vector<std::string>& args, std::ostream& out,
                       std::ostream& err) {
  ParseResult pr;
  RunConfig& cfg = pr.cfg;
  CLI::App app{"Lattice path subdivisions: graphs, routes, rewriting, trees"};
  app.name("nu-subdiv");
  app.require_subcommand(1);

  std::vector<std::pair<std::string, CLI::App*>> subs;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "Output format: text, json or dot");
    sub->add_option("--out", cfg.out, "Write the report to this file");
    sub->add_flag("--force", cfg.force, "Override size guards");
    sub->add_option("--seed", cfg.seed, "Seed for randomised choices");
  };

  auto* index = app.add_subcommand("index", "Close and index a path");
  index->add_option("word", cfg.word, "Path word over E and N");
  auto* graph = app.add_subcommand("graph", "Print a path graph");
  graph->add_option("word", cfg.word)->required();
  graph->add_option("--kind", cfg.kind, "nu, nu-b, tilde, tilde-b, cell or tilde-cell");
  graph->add_option("--cell", cfg.cell, "Cell index for kind=cell");
  auto* routes = app.add_subcommand("routes", "Enumerate source-to-sink routes");
  routes->add_option("word", cfg.word)->required();
  routes->add_option("--kind", cfg.kind, "tilde, tilde-b or tilde-cell");
  routes->add_option("--cell", cfg.cell, "Cell index for kind=tilde-cell");
  auto* reduce = app.add_subcommand("reduce", "Rewrite to a reduced form");
  reduce->add_option("word", cfg.word)->required();
  reduce->add_option("--target", cfg.target, "p-nu or cell");
  reduce->add_option("--cell", cfg.cell, "Cell index for target=cell");
  reduce->add_option("--order", cfg.order, "rho-len, lex or random");
  reduce->add_option("--length-variant", cfg.length_variant, "span or complement");
  reduce->add_option("--beta", cfg.beta, "full keeps beta terms, 0 drops them");
  auto* triangulate = app.add_subcommand("triangulate", "Reduce and report the facets");
  triangulate->add_option("word", cfg.word)->required();
  triangulate->add_option("--order", cfg.order, "rho-len, lex or random");
  triangulate->add_option("--length-variant", cfg.length_variant, "span or complement");
  auto* tamari = app.add_subcommand("tamari", "Enumerate non-crossing arc trees");
  tamari->add_option("word", cfg.word)->required();
  tamari->add_option("--mode", cfg.mode, "cyclic or increasing");
  auto* verify = app.add_subcommand("verify", "Run the verification battery");
  verify->add_option("word", cfg.word)->required();
  verify->add_option("--trials", cfg.trials, "Covering probes per triangulation");
  auto* sweep = app.add_subcommand("sweep", "Verify every path up to a size");
  sweep->add_option("--max-size", cfg.max_size, "Largest number of path steps");
  sweep->add_option("--trials", cfg.trials, "Covering probes per triangulation");

  for (CLI::App* sub : {index, graph, routes, reduce, triangulate, tamari, verify, sweep}) {
    add_common(sub);
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    pr.exit_code = 0;
    return pr;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    pr.exit_code = 2;
    return pr;
  }
  CLI::App* active = app.get_subcommands().front();
  cfg.command = active->get_name();
  cfg.seed_set = active->count("--seed") > 0;
  return pr;
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  std::ofstream file;
  std::ostream* sink = &out;
  if (!cfg.out.empty()) {
    file.open(cfg.out);
    if (!file) {
      err << "cannot open output file '" << cfg.out << "'\n";
      return 2;
    }
    sink = &file;
  }
  try {
    if (cfg.command == "index") return cmd_index(cfg, *sink);
    if (cfg.command == "graph") return cmd_graph(cfg, *sink);
    if (cfg.command == "routes") return cmd_routes(cfg, *sink);
    if (cfg.command == "reduce") return cmd_reduce(cfg, *sink);
    if (cfg.command == "triangulate") return cmd_triangulate(cfg, *sink);
    if (cfg.command == "tamari") return cmd_tamari(cfg, *sink);
    if (cfg.command == "verify") return cmd_verify(cfg, *sink);
    if (cfg.command == "sweep") return cmd_sweep(cfg, *sink);
    err << "unknown command '" << cfg.command << "'\n";
    return 2;
  } catch (const ResourceLimitError& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

int run_main(int argc, char** argv) {
  std::vector<std::string> args;
  for (int k = 1; k < argc; ++k) args.emplace_back(argv[k]);
  const ParseResult pr = parse_args(args, std::cout, std::cerr);
  if (pr.exit_code >= 0) return pr.exit_code;
  return run(pr.cfg, std::cout, std::cerr);
}

}  // namespace nusubdiv
