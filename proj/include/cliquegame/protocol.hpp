#pragma once

#include "cliquegame/games.hpp"
#include "cliquegame/oracles.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace cliquegame {

enum class Sender { Alice, Bob };

struct TranscriptEntry {
  std::size_t round = 0;
  Sender sender = Sender::Alice;
  std::string bits;     // '0'/'1' characters, most significant first
  std::string meaning;  // annotation tag, see meaning:: below

  friend bool operator==(const TranscriptEntry&, const TranscriptEntry&) = default;
};

namespace meaning {
inline constexpr const char* kAliceClique = "a_is_clique";
inline constexpr const char* kBobClique = "b_is_clique";
inline constexpr const char* kAliceNonedge = "nonedge_in_a";
inline constexpr const char* kBobNonedge = "nonedge_in_b";
inline constexpr const char* kSize = "size";
inline constexpr const char* kAndChild = "and_child";
inline constexpr const char* kOrChild = "or_child";
}  // namespace meaning

class Transcript {
 public:
  // Rounds number from 1 in append order.
  void append(Sender sender, std::string bits, std::string meaning);
  const std::vector<TranscriptEntry>& entries() const noexcept { return entries_; }
  std::size_t total_bits() const noexcept { return total_bits_; }

  friend bool operator==(const Transcript&, const Transcript&) = default;

 private:
  std::vector<TranscriptEntry> entries_;
  std::size_t total_bits_ = 0;
};

// The only path between the parties: everything sent lands in the transcript.
class Channel {
 public:
  void send(Sender from, std::string bits, std::string meaning) {
    transcript_.append(from, std::move(bits), std::move(meaning));
  }
  const Transcript& transcript() const noexcept { return transcript_; }

 private:
  Transcript transcript_;
};

// Walks c from the output towards a leaf keeping c'(alice)=1 and c'(bob)=0:
// Bob picks the child of an AND gate, Alice the child of an OR gate, each
// sending one bit (0 for the left child, also when both children qualify).
// Returns the variable reached, which separates the two assignments.
// Throws ProtocolError("separation failure") when the precondition fails.
std::size_t kw_traverse(const Circuit& c, const Assignment& alice, const Assignment& bob, Channel& channel);

enum class AnswerKind { Crossing, WithinA, WithinB, ToCommonNeighbor };
std::string answer_kind_name(AnswerKind k);

struct Outcome {
  VertexPair nonedge;
  VertexPair alice_answer;
  VertexPair bob_answer;
  Transcript transcript;
  AnswerKind kind_of_answer = AnswerKind::Crossing;
  bool promise_verified = false;
};

struct PlayOptions {
  std::size_t oracle_limit = kBicliqueOracleLimit;
};

// Bit widths of the fixed encodings.
std::size_t size_field_width(std::size_t n);    // ceil(log2(n+1))
std::size_t vertex_field_width(std::size_t n);  // ceil(log2 n)

// Checks the game's input contract (disjointness, bipartite sides, and the
// promise when oracles are within limits). Returns whether the promise was
// verified; throws PromiseViolation or PreconditionError.
bool validate_input(const GameKind& kind, const Graph& g, const VertexSet& a, const VertexSet& b,
                    const PlayOptions& options = {});

// Runs one session: Alice and Bob are separate state machines that only see
// their own set, the shared circuits, and the transcript.
Outcome play(const GameKind& kind, GameCircuits& circuits, const VertexSet& a, const VertexSet& b,
             const PlayOptions& options = {});

// Feeds a recorded transcript through fresh party state machines, checking
// that each party would have sent exactly the recorded bits, and returns the
// reproduced outcome. Throws ProtocolError on any divergence.
Outcome replay(const GameKind& kind, GameCircuits& circuits, const VertexSet& a, const VertexSet& b,
               const Transcript& transcript, const PlayOptions& options = {});

// The nonedge determined by a transcript alone, as an observer with no
// private input would decode it.
VertexPair decode_transcript(const GameKind& kind, GameCircuits& circuits, const Transcript& transcript);

// Whether `nonedge` is a legal answer of the game for (a, b).
bool satisfies_goal(const GameKind& kind, const Graph& g, const VertexSet& a, const VertexSet& b,
                    const VertexPair& nonedge);

// Worst-case bits the protocol can spend on this graph with these circuits:
// size announcement plus the deepest circuit over all k, plus the 2-bit
// clique handshake for the clique games, or the handshake shortcut when
// that is longer.
std::size_t bit_bound(const GameKind& kind, GameCircuits& circuits);

}  // namespace cliquegame
