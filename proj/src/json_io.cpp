#include "cliquegame/json_io.hpp"

#include "cliquegame/errors.hpp"

namespace cliquegame {

std::string sender_tag(Sender s) { return s == Sender::Alice ? "A" : "B"; }

Json labels_json(const Graph& g, const VertexSet& s) {
  Json out = Json::array();
  for (Vertex v : s.members()) out.push_back(g.label(v));
  return out;
}

Json graph_json(const Graph& g) {
  Json j;
  j["n"] = g.vertex_count();
  if (g.bipartite()) j["left_part_size"] = *g.left_part_size();
  Json edges = Json::array();
  for (const auto& e : g.edges()) edges.push_back({g.label(e.u), g.label(e.v)});
  j["edges"] = std::move(edges);
  return j;
}

Json transcript_json(const GameKind& kind, const Graph& g, const VertexSet& a, const VertexSet& b,
                     const Outcome& outcome, const PlayContext& ctx) {
  Json j;
  j["game"] = game_name(kind.game);
  if (kind.game == Game::EdgeBiclique) j["edge_bound"] = kind.edge_bound;
  j["n"] = g.vertex_count();
  j["a"] = labels_json(g, a);
  j["b"] = labels_json(g, b);
  j["builder"] = ctx.builder;
  j["seed"] = ctx.seed;
  Json entries = Json::array();
  for (const auto& e : outcome.transcript.entries()) {
    Json item;
    item["round"] = e.round;
    item["sender"] = sender_tag(e.sender);
    item["bits"] = e.bits;
    item["meaning"] = e.meaning;
    entries.push_back(std::move(item));
  }
  j["entries"] = std::move(entries);
  j["total_bits"] = outcome.transcript.total_bits();
  j["nonedge"] = {g.label(outcome.nonedge.u), g.label(outcome.nonedge.v)};
  j["kind_of_answer"] = answer_kind_name(outcome.kind_of_answer);
  j["promise_verified"] = outcome.promise_verified;
  return j;
}

Transcript transcript_from_json(const Json& j) {
  Transcript t;
  try {
    for (const auto& e : j.at("entries")) {
      const std::string s = e.at("sender").get<std::string>();
      if (s != "A" && s != "B") throw ProtocolError("bad sender tag '" + s + "'");
      t.append(s == "A" ? Sender::Alice : Sender::Bob, e.at("bits").get<std::string>(), e.at("meaning").get<std::string>());
    }
  } catch (const nlohmann::json::exception& e) {
    throw ProtocolError(std::string("malformed transcript JSON: ") + e.what());
  }
  return t;
}

Json report_json(const SuiteReport& r) {
  Json j;
  j["suite"] = r.suite;
  j["builder"] = r.builder;
  j["seed"] = r.seed;
  j["passed"] = r.passed();
  j["graphs_tested"] = r.graphs_tested;
  j["inputs_tested"] = r.inputs_tested;
  j["failure_count"] = r.failure_count;
  j["max_bits_observed"] = r.max_bits_observed;
  j["bound"] = r.bound;
  j["wall_time_seconds"] = r.wall_time_seconds;
  Json failures = Json::array();
  for (const auto& f : r.failures) {
    Json item;
    item["graph"] = graph_json(f.graph);
    item["k"] = f.k;
    item["a"] = labels_json(f.graph, f.a);
    item["b"] = labels_json(f.graph, f.b);
    item["what"] = f.what;
    failures.push_back(std::move(item));
  }
  j["failures"] = std::move(failures);
  return j;
}

Json worst_case_json(const GameKind& kind, const Graph& g, const WorstCase& w, std::size_t bound) {
  Json j;
  j["game"] = game_name(kind.game);
  if (kind.game == Game::EdgeBiclique) j["edge_bound"] = kind.edge_bound;
  j["n"] = g.vertex_count();
  j["inputs"] = w.inputs;
  j["max_bits"] = w.bits;
  j["bound"] = bound;
  j["witness"] = {{"a", labels_json(g, w.witness.a)}, {"b", labels_json(g, w.witness.b)}};
  return j;
}

}  // namespace cliquegame
