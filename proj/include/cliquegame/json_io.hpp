#pragma once

#include "cliquegame/harness.hpp"

#include "json.hpp"

#include <cstdint>
#include <string>

namespace cliquegame {

using Json = nlohmann::ordered_json;

std::string sender_tag(Sender s);  // "A" or "B"

// Vertex sets and pairs are written with the graph's external labels.
Json labels_json(const Graph& g, const VertexSet& s);
Json graph_json(const Graph& g);

struct PlayContext {
  std::string builder;
  std::uint64_t seed = 0;
};

Json transcript_json(const GameKind& kind, const Graph& g, const VertexSet& a, const VertexSet& b,
                     const Outcome& outcome, const PlayContext& ctx);
Transcript transcript_from_json(const Json& j);

Json report_json(const SuiteReport& r);
Json worst_case_json(const GameKind& kind, const Graph& g, const WorstCase& w, std::size_t bound);

}  // namespace cliquegame
