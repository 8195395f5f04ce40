#include "cliquegame/errors.hpp"
#include "cliquegame/harness.hpp"
#include "cliquegame/json_io.hpp"
#include "cliquegame/oracles.hpp"

#include "CLI11.hpp"

#include <charconv>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using namespace cliquegame;

namespace {

enum Exit { kOk = 0, kFailure = 1, kUsage = 2, kParse = 3, kOracle = 4 };

struct Config {
  std::string builder = "sort";
  std::uint64_t seed = 0;
  double depth_factor = kDefaultDepthFactor;
  std::size_t oracle_limit = kBicliqueOracleLimit;
  std::string output;  // empty: the command's own default
  int verbosity = 0;

  ThresholdOptions thresholds() const {
    ThresholdOptions t;
    t.engine = parse_engine(builder);
    t.valiant.seed = seed;
    t.valiant.depth_factor = depth_factor;
    return t;
  }
  bool json(bool by_default) const { return output.empty() ? by_default : output == "json"; }
};

// "1,2,5" -> vertices of g by external label.
VertexSet parse_label_list(const Graph& g, const std::string& text, const char* flag) {
  VertexSet out(g.vertex_count());
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string::npos) comma = text.size();
    std::string item = text.substr(pos, comma - pos);
    std::uint32_t label = 0;
    auto [end, ec] = std::from_chars(item.data(), item.data() + item.size(), label);
    if (item.empty() || ec != std::errc() || end != item.data() + item.size()) {
      throw CLI::ValidationError(flag, "bad vertex label '" + item + "'");
    }
    auto v = g.vertex_of_label(label);
    if (!v) throw PreconditionError(std::string(flag) + ": vertex " + item + " is not in the (star-stripped) graph");
    out.insert(*v);
    pos = comma + 1;
  }
  return out;
}

GameKind game_kind(const std::string& name, const Graph& g, std::optional<std::uint64_t> edge_bound,
                   std::size_t oracle_limit) {
  Game game = parse_game(name);
  switch (game) {
    case Game::Biclique: return GameKind::biclique();
    case Game::Clique: return GameKind::clique();
    case Game::RelaxedClique: return GameKind::relaxed_clique();
    case Game::EdgeBiclique:
      if (edge_bound) return GameKind::edge_biclique(*edge_bound);
      return edge_game_for(g, oracle_limit);
  }
  return GameKind::biclique();
}

Graph load_stripped(const std::string& path, int verbosity) {
  StripResult r = strip_stars(read_graph_file(path));
  if (verbosity > 0 && !r.removed.empty()) {
    std::cerr << "stripped " << r.removed.size() << " complete star(s)\n";
  }
  return std::move(r.graph);
}

int cmd_oracle(const Config& cfg, const std::string& file) {
  Graph g = read_graph_file(file);
  const std::size_t limit = cfg.oracle_limit;
  const std::size_t omega = max_clique_size(g, limit);
  const std::size_t omega_b = max_biclique_size(g, limit);
  const std::size_t mc = maximal_cliques(g).size();
  const std::uint64_t edge = max_edge_biclique(g, limit);
  if (cfg.json(false)) {
    Json j;
    j["omega"] = omega;
    j["omega_b"] = omega_b;
    j["mc"] = mc;
    j["edge_biclique"] = edge;
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << "omega=" << omega << " omega_b=" << omega_b << " mc=" << mc << " edge_biclique=" << edge << '\n';
  }
  return kOk;
}

int cmd_build(const Config& cfg, const std::string& file, const std::string& game, std::size_t k) {
  Graph g = load_stripped(file, cfg.verbosity);
  ThresholdFactory thr(cfg.thresholds());
  GameCircuits circuits(g, thr);
  const Game which = parse_game(game);
  if (k < 1 || k > circuits.max_k(which)) {
    throw PreconditionError("k must be in 1.." + std::to_string(circuits.max_k(which)));
  }
  const Circuit& c = circuits.for_game(which, k);
  if (cfg.json(false)) {
    Json j;
    j["game"] = game_name(which);
    j["k"] = k;
    j["var_count"] = c.var_count();
    j["depth"] = c.depth();
    j["size"] = c.size();
    j["circuit"] = serialize_circuit(c);
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << "c depth=" << c.depth() << "\nc size=" << c.size() << '\n';
    write_circuit(std::cout, c);
  }
  return kOk;
}

int cmd_play(const Config& cfg, const std::string& file, const std::string& game, const std::string& a_text,
             const std::string& b_text, std::optional<std::uint64_t> edge_bound) {
  Graph g = load_stripped(file, cfg.verbosity);
  const GameKind kind = game_kind(game, g, edge_bound, cfg.oracle_limit);
  VertexSet a = parse_label_list(g, a_text, "--a");
  VertexSet b = parse_label_list(g, b_text, "--b");
  ThresholdFactory thr(cfg.thresholds());
  GameCircuits circuits(g, thr);
  Outcome out = play(kind, circuits, a, b, PlayOptions{cfg.oracle_limit});
  if (cfg.json(true)) {
    std::cout << transcript_json(kind, g, a, b, out, {cfg.builder, cfg.seed}).dump(2) << '\n';
  } else {
    for (const auto& e : out.transcript.entries()) {
      std::cout << e.round << ' ' << sender_tag(e.sender) << ' ' << e.bits << ' ' << e.meaning << '\n';
    }
    std::cout << "total_bits=" << out.transcript.total_bits() << " nonedge=" << g.label(out.nonedge.u) << ','
              << g.label(out.nonedge.v) << " kind=" << answer_kind_name(out.kind_of_answer) << '\n';
  }
  return kOk;
}

struct VerifyArgs {
  std::string suite;
  std::size_t n_max = 5;
  std::size_t random_count = 0;
  std::string random_n = "6-7";
  double random_p = 0.5;
};

int cmd_verify(const Config& cfg, const VerifyArgs& args) {
  std::vector<Suite> suites;
  if (args.suite == "all") {
    suites = all_suites();
  } else {
    suites.push_back(parse_suite(args.suite));
  }
  if (args.n_max > 7) throw PreconditionError("--n-max is limited to 7");
  std::vector<catalog::Selector> sel;
  for (std::size_t n = 2; n <= args.n_max; ++n) sel.push_back(catalog::AllGraphs{n});
  if (args.random_count > 0) {
    std::size_t lo = 0, hi = 0;
    char dash = 0;
    std::istringstream in(args.random_n);
    if (!(in >> lo)) throw CLI::ValidationError("--random-n", "expected N or N-M");
    if (in >> dash) {
      if (dash != '-' || !(in >> hi)) throw CLI::ValidationError("--random-n", "expected N or N-M");
    } else {
      hi = lo;
    }
    if (lo < 2 || hi < lo) throw CLI::ValidationError("--random-n", "need 2 <= N <= M");
    sel.push_back(catalog::Random{lo, hi, args.random_p, args.random_count});
  }
  const std::vector<Graph> graphs = graph_catalog(sel, cfg.seed);
  SuiteOptions opts{cfg.thresholds(), cfg.oracle_limit};
  bool all_passed = true;
  Json reports = Json::array();
  for (const auto& s : suites) {
    SuiteReport r = run_suite(s, graphs, opts);
    all_passed = all_passed && r.passed();
    if (cfg.json(true)) {
      reports.push_back(report_json(r));
    } else {
      std::cout << r.suite << ": " << (r.passed() ? "pass" : "FAIL") << " graphs=" << r.graphs_tested
                << " inputs=" << r.inputs_tested << " failures=" << r.failure_count << '\n';
      for (const auto& f : r.failures) {
        std::cout << "  k=" << f.k << " a=" << labels_json(f.graph, f.a).dump() << " b=" << labels_json(f.graph, f.b).dump()
                  << ": " << f.what << '\n';
      }
    }
  }
  if (cfg.json(true)) std::cout << (reports.size() == 1 ? reports.front() : reports).dump(2) << '\n';
  return all_passed ? kOk : kFailure;
}

int cmd_stats(const Config& cfg, const std::string& file, const std::string& game,
              std::optional<std::uint64_t> edge_bound) {
  Graph g = load_stripped(file, cfg.verbosity);
  const GameKind kind = game_kind(game, g, edge_bound, cfg.oracle_limit);
  ThresholdFactory thr(cfg.thresholds());
  GameCircuits circuits(g, thr);
  WorstCase w = worst_case_bits(kind, circuits, cfg.oracle_limit);
  const std::size_t bound = bit_bound(kind, circuits);
  if (cfg.json(true)) {
    std::cout << worst_case_json(kind, g, w, bound).dump(2) << '\n';
  } else {
    std::cout << "inputs=" << w.inputs << " max_bits=" << w.bits << " bound=" << bound << '\n';
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Monotone circuits and clique/biclique communication games"};
  app.require_subcommand(1);
  app.fallthrough();
  Config cfg;
  app.add_option("--builder", cfg.builder, "threshold builder")
      ->check(CLI::IsMember({"sort", "valiant"}))
      ->envname("CLIQUEGAME_BUILDER")
      ->capture_default_str();
  app.add_option("--seed", cfg.seed, "seed for the randomized builder and catalogs")
      ->envname("CLIQUEGAME_SEED")
      ->capture_default_str();
  app.add_option("--depth-factor", cfg.depth_factor, "levels per log2 of the padded input count (valiant)")
      ->envname("CLIQUEGAME_DEPTH_FACTOR")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--oracle-limit", cfg.oracle_limit, "largest n for exact oracles")
      ->envname("CLIQUEGAME_ORACLE_LIMIT")
      ->capture_default_str();
  app.add_option("--output", cfg.output, "json or text")
      ->check(CLI::IsMember({"json", "text"}))
      ->envname("CLIQUEGAME_OUTPUT");
  app.add_flag("-v,--verbose", cfg.verbosity, "more diagnostics on stderr");

  std::string file, game, a_text, b_text;
  std::size_t k = 0;
  std::optional<std::uint64_t> edge_bound;
  VerifyArgs vargs;

  auto* oracle = app.add_subcommand("oracle", "print omega, omega_b, mc and the max edge biclique");
  oracle->add_option("file", file)->required();

  auto* build = app.add_subcommand("build-circuit", "emit the separating circuit for one k");
  build->add_option("file", file)->required();
  build->add_option("--game", game)->required();
  build->add_option("--k", k)->required();

  auto* playc = app.add_subcommand("play", "play one game and print its transcript");
  playc->add_option("file", file)->required();
  playc->add_option("--game", game)->required();
  playc->add_option("--a", a_text, "Alice's vertices, comma-separated labels")->required();
  playc->add_option("--b", b_text, "Bob's vertices, comma-separated labels")->required();
  playc->add_option("--K", edge_bound, "edge bound for edge-biclique (default: the graph's max)");

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", vargs.suite, "lemma1|lemma2|lemma3|lemma6|protocol-<game>|all")->required();
  verify->add_option("--n-max", vargs.n_max, "exhaustive labeled graphs up to this n")->capture_default_str();
  verify->add_option("--random", vargs.random_count, "additional seeded random graphs")->capture_default_str();
  verify->add_option("--random-n", vargs.random_n, "vertex count range of the random graphs")->capture_default_str();
  verify->add_option("--random-p", vargs.random_p, "edge probability of the random graphs")->capture_default_str();

  auto* stats = app.add_subcommand("stats", "worst-case transcript length over all valid inputs");
  stats->add_option("file", file)->required();
  stats->add_option("--game", game)->required();
  stats->add_option("--K", edge_bound, "edge bound for edge-biclique (default: the graph's max)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*oracle) return cmd_oracle(cfg, file);
    if (*build) return cmd_build(cfg, file, game, k);
    if (*playc) return cmd_play(cfg, file, game, a_text, b_text, edge_bound);
    if (*verify) return cmd_verify(cfg, vargs);
    if (*stats) return cmd_stats(cfg, file, game, edge_bound);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kParse;
  } catch (const OracleLimitError& e) {
    std::cerr << "oracle limit: " << e.what() << '\n';
    return kOracle;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFailure;
  }
  return kFailure;
}
