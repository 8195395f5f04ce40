#include "cliquegame/protocol.hpp"

#include "cliquegame/errors.hpp"
#include "cliquegame/oracles.hpp"

#include <algorithm>
#include <bit>

namespace cliquegame {

void Transcript::append(Sender sender, std::string bits, std::string meaning) {
  total_bits_ += bits.size();
  entries_.push_back({entries_.size() + 1, sender, std::move(bits), std::move(meaning)});
}

std::string answer_kind_name(AnswerKind k) {
  switch (k) {
    case AnswerKind::Crossing: return "crossing";
    case AnswerKind::WithinA: return "within_a";
    case AnswerKind::WithinB: return "within_b";
    case AnswerKind::ToCommonNeighbor: return "to_common_neighbor";
  }
  return "?";
}

std::size_t size_field_width(std::size_t n) { return static_cast<std::size_t>(std::bit_width(n)); }

std::size_t vertex_field_width(std::size_t n) {
  return n <= 1 ? 0 : static_cast<std::size_t>(std::bit_width(n - 1));
}

namespace {

std::string encode(std::uint64_t value, std::size_t width) {
  std::string s(width, '0');
  for (std::size_t i = 0; i < width; ++i) {
    if ((value >> (width - 1 - i)) & 1U) s[i] = '1';
  }
  return s;
}

std::uint64_t decode(const std::string& bits) {
  std::uint64_t v = 0;
  for (char ch : bits) v = (v << 1) | (ch == '1' ? 1U : 0U);
  return v;
}

// One side's view of a traversal: its own node values plus the shared position.
class KwSide {
 public:
  KwSide(const Circuit& c, const Assignment& x) : circuit_(&c), values_(eval_nodes(c, x)) {}

  bool value(NodeId id) const { return values_[id] != 0; }

  // Child to walk to when this side owns the gate: for an AND gate (Bob) a
  // child evaluating to 0, for an OR gate (Alice) one evaluating to 1.
  char choose(NodeId id) const {
    const Gate& g = circuit_->gate(id);
    const bool want = g.kind == GateKind::Or;
    if (value(g.left) == want) return '0';
    if (value(g.right) == want) return '1';
    throw ProtocolError("separation failure: no child keeps the invariant");
  }

 private:
  const Circuit* circuit_;
  std::vector<std::uint8_t> values_;
};

NodeId step(const Circuit& c, NodeId id, char bit) {
  const Gate& g = c.gate(id);
  return bit == '1' ? g.right : g.left;
}

enum class Phase { AliceClique, AliceNonedge, BobClique, BobNonedge, Size, Traverse, Done };

// A protocol participant. The public part of the state evolves identically
// for every participant hearing the same messages; the private part (own
// set, own vector's node values) is only used when speaking. A participant
// without a private set is a passive observer.
class Party {
 public:
  Party(std::optional<Sender> role, const GameKind& kind, GameCircuits& circuits,
        std::optional<VertexSet> own = std::nullopt)
      : role_(role), kind_(kind), circuits_(&circuits), own_(std::move(own)) {
    phase_ = kind_.clique_family() ? Phase::AliceClique : Phase::Size;
  }

  bool done() const { return phase_ == Phase::Done; }

  Sender turn() const {
    switch (phase_) {
      case Phase::AliceClique:
      case Phase::AliceNonedge:
      case Phase::Size: return Sender::Alice;
      case Phase::BobClique:
      case Phase::BobNonedge: return Sender::Bob;
      case Phase::Traverse:
        return circuit_->gate(node_).kind == GateKind::And ? Sender::Bob : Sender::Alice;
      case Phase::Done: break;
    }
    throw ProtocolError("no turn after the protocol finished");
  }

  std::pair<std::string, std::string> speak() const {
    if (!role_ || !own_ || *role_ != turn()) throw ProtocolError("party asked to speak out of turn");
    const Graph& g = circuits_->graph();
    const std::size_t w = vertex_field_width(g.vertex_count());
    switch (phase_) {
      case Phase::AliceClique:
      case Phase::BobClique:
        return {g.is_clique(*own_) ? "1" : "0",
                phase_ == Phase::AliceClique ? meaning::kAliceClique : meaning::kBobClique};
      case Phase::AliceNonedge:
      case Phase::BobNonedge: {
        auto e = find_nonedge_within(g, *own_);
        if (!e) throw ProtocolError("announced a non-clique but found no nonedge inside it");
        return {encode(e->u, w) + encode(e->v, w),
                phase_ == Phase::AliceNonedge ? meaning::kAliceNonedge : meaning::kBobNonedge};
      }
      case Phase::Size:
        return {encode(own_->size(), size_field_width(g.vertex_count())), meaning::kSize};
      case Phase::Traverse: {
        const bool is_and = circuit_->gate(node_).kind == GateKind::And;
        return {std::string(1, side_->choose(node_)), is_and ? meaning::kAndChild : meaning::kOrChild};
      }
      case Phase::Done: break;
    }
    throw ProtocolError("nothing to say");
  }

  void hear(Sender from, const std::string& bits) {
    if (done() || from != turn()) throw ProtocolError("message from the wrong party");
    const Graph& g = circuits_->graph();
    const std::size_t n = g.vertex_count();
    const std::size_t w = vertex_field_width(n);
    auto expect_width = [&](std::size_t width) {
      if (bits.size() != width || bits.find_first_not_of("01") != std::string::npos) {
        throw ProtocolError("malformed message: expected " + std::to_string(width) + " bits");
      }
    };
    switch (phase_) {
      case Phase::AliceClique:
        expect_width(1);
        phase_ = bits == "1" ? Phase::BobClique : Phase::AliceNonedge;
        return;
      case Phase::BobClique:
        expect_width(1);
        phase_ = bits == "1" ? Phase::Size : Phase::BobNonedge;
        return;
      case Phase::AliceNonedge:
      case Phase::BobNonedge: {
        expect_width(2 * w);
        auto u = decode(bits.substr(0, w)), v = decode(bits.substr(w));
        if (u >= n || v >= n || u == v || g.adjacent(static_cast<Vertex>(u), static_cast<Vertex>(v))) {
          throw ProtocolError("announced pair is not a nonedge");
        }
        answer_ = VertexPair::of(static_cast<Vertex>(u), static_cast<Vertex>(v));
        shortcut_ = phase_ == Phase::AliceNonedge ? AnswerKind::WithinA : AnswerKind::WithinB;
        phase_ = Phase::Done;
        return;
      }
      case Phase::Size: {
        expect_width(size_field_width(n));
        std::size_t k = decode(bits);
        if (k < 1 || k > circuits_->max_k(kind_.game)) {
          throw ProtocolError("separation failure: announced size " + std::to_string(k) + " has no circuit");
        }
        start_traversal(k);
        return;
      }
      case Phase::Traverse:
        expect_width(1);
        node_ = step(*circuit_, node_, bits[0]);
        settle();
        return;
      case Phase::Done: break;
    }
  }

  VertexPair answer() const {
    if (!answer_) throw ProtocolError("protocol has not produced an answer");
    return *answer_;
  }
  std::optional<AnswerKind> shortcut() const { return shortcut_; }
  std::size_t announced_k() const { return k_; }

 private:
  void start_traversal(std::size_t k) {
    k_ = k;
    circuit_ = &circuits_->for_game(kind_.game, k);
    node_ = circuit_->output();
    phase_ = Phase::Traverse;
    if (role_ && own_) {
      const Graph& g = circuits_->graph();
      const NonedgeIndex& idx = circuits_->index();
      Assignment x = *role_ == Sender::Alice ? vector_p(g, idx, *own_)
                     : kind_.game == Game::RelaxedClique ? vector_q_relaxed(g, idx, *own_)
                                                         : vector_q(g, idx, *own_);
      side_.emplace(*circuit_, x);
      const bool want = *role_ == Sender::Alice;
      if (side_->value(node_) != want) {
        throw ProtocolError(std::string("separation failure: circuit (") + game_name(kind_.game) +
                            ", k=" + std::to_string(k) + ") evaluates to " + (want ? "0 on p_a" : "1 on Bob's vector"));
      }
    }
    settle();
  }

  void settle() {
    const Gate& gate = circuit_->gate(node_);
    if (gate.kind == GateKind::Var) {
      answer_ = circuits_->index()[gate.left];
      phase_ = Phase::Done;
    } else if (gate.kind == GateKind::Const) {
      throw ProtocolError("internal invariant error: traversal reached a constant leaf");
    }
  }

  std::optional<Sender> role_;
  GameKind kind_;
  GameCircuits* circuits_;
  std::optional<VertexSet> own_;

  Phase phase_ = Phase::Size;
  std::size_t k_ = 0;
  const Circuit* circuit_ = nullptr;
  NodeId node_ = 0;
  std::optional<KwSide> side_;
  std::optional<VertexPair> answer_;
  std::optional<AnswerKind> shortcut_;
};

constexpr std::size_t kMaxRounds = 1U << 20;

AnswerKind classify(const GameKind& kind, const Graph& g, const VertexSet& a, const VertexSet& b,
                    const VertexPair& e, std::optional<AnswerKind> shortcut) {
  if (!satisfies_goal(kind, g, a, b, e)) {
    throw ProtocolError("answer " + std::to_string(e.u) + "-" + std::to_string(e.v) + " violates the goal of the " +
                        game_name(kind.game) + " game");
  }
  if (shortcut) return *shortcut;
  const bool crossing = (a.contains(e.u) && b.contains(e.v)) || (a.contains(e.v) && b.contains(e.u));
  if (crossing) return AnswerKind::Crossing;
  if (a.contains(e.u) && a.contains(e.v)) return AnswerKind::WithinA;
  if (b.contains(e.u) && b.contains(e.v)) return AnswerKind::WithinB;
  return AnswerKind::ToCommonNeighbor;
}

Outcome run_session(const GameKind& kind, GameCircuits& circuits, const VertexSet& a, const VertexSet& b,
                    const PlayOptions& options, const Transcript* recorded) {
  const Graph& g = circuits.graph();
  Outcome out;
  out.promise_verified = validate_input(kind, g, a, b, options);

  Party alice(Sender::Alice, kind, circuits, a);
  Party bob(Sender::Bob, kind, circuits, b);
  Channel channel;
  std::size_t round = 0;
  while (!alice.done() || !bob.done()) {
    if (alice.done() != bob.done() || alice.turn() != bob.turn()) {
      throw ProtocolError("parties disagree on the protocol state");
    }
    if (++round > kMaxRounds) throw ProtocolError("round limit exceeded");
    const Sender speaker = alice.turn();
    auto [bits, tag] = speaker == Sender::Alice ? alice.speak() : bob.speak();
    if (recorded) {
      if (round > recorded->entries().size()) throw ProtocolError("replay: transcript ended early");
      const auto& rec = recorded->entries()[round - 1];
      if (rec.sender != speaker || rec.bits != bits || rec.meaning != tag) {
        throw ProtocolError("replay: divergence at round " + std::to_string(round));
      }
    }
    channel.send(speaker, bits, tag);
    alice.hear(speaker, bits);
    bob.hear(speaker, bits);
  }
  if (recorded && recorded->entries().size() != channel.transcript().entries().size()) {
    throw ProtocolError("replay: transcript has trailing entries");
  }

  out.alice_answer = alice.answer();
  out.bob_answer = bob.answer();
  if (out.alice_answer != out.bob_answer) throw ProtocolError("parties output different nonedges");
  out.nonedge = out.alice_answer;
  out.transcript = channel.transcript();
  out.kind_of_answer = classify(kind, g, a, b, out.nonedge, alice.shortcut());
  return out;
}

}  // namespace

std::size_t kw_traverse(const Circuit& c, const Assignment& alice, const Assignment& bob, Channel& channel) {
  KwSide a(c, alice), b(c, bob);
  NodeId at = c.output();
  if (!a.value(at) || b.value(at)) throw ProtocolError("separation failure: need C(alice)=1 and C(bob)=0");
  for (;;) {
    const Gate& g = c.gate(at);
    if (g.kind == GateKind::Var) return g.left;
    if (g.kind == GateKind::Const) throw ProtocolError("internal invariant error: traversal reached a constant leaf");
    const bool is_and = g.kind == GateKind::And;
    const char bit = is_and ? b.choose(at) : a.choose(at);
    channel.send(is_and ? Sender::Bob : Sender::Alice, std::string(1, bit),
                 is_and ? meaning::kAndChild : meaning::kOrChild);
    at = step(c, at, bit);
  }
}

bool satisfies_goal(const GameKind& kind, const Graph& g, const VertexSet& a, const VertexSet& b,
                    const VertexPair& e) {
  if (e.u >= g.vertex_count() || e.v >= g.vertex_count() || !g.admissible_pair(e.u, e.v) || g.adjacent(e.u, e.v)) {
    return false;
  }
  auto between = [&](const VertexSet& x, const VertexSet& y) {
    return (x.contains(e.u) && y.contains(e.v)) || (x.contains(e.v) && y.contains(e.u));
  };
  const VertexSet ab = a | b;
  const bool within = ab.contains(e.u) && ab.contains(e.v);
  switch (kind.game) {
    case Game::Biclique:
    case Game::EdgeBiclique: return between(a, b);
    case Game::Clique: return within;
    case Game::RelaxedClique: return within || between(a, b | common_neighbors(g, b));
  }
  return false;
}

bool validate_input(const GameKind& kind, const Graph& g, const VertexSet& a, const VertexSet& b,
                    const PlayOptions& options) {
  const std::size_t n = g.vertex_count();
  if (a.universe() != n || b.universe() != n) throw PreconditionError("vertex set does not belong to this graph");
  if (a.intersects(b)) throw PromiseViolation("a and b must be disjoint");
  if (g.bipartite()) {
    if (kind.clique_family()) throw PreconditionError("clique games are not defined on bipartite-declared graphs");
    if (!a.is_subset_of(g.left_part()) || !b.is_subset_of(g.right_part())) {
      throw PromiseViolation("bipartite mode needs a within V1 and b within V2");
    }
  }
  const bool in_limit = n <= options.oracle_limit;
  switch (kind.game) {
    case Game::Biclique: {
      if (a.empty() || b.empty()) throw PromiseViolation("biclique game needs nonempty a and b");
      if (!in_limit) return false;
      const std::size_t wb = max_biclique_size(g, options.oracle_limit);
      if (a.size() + b.size() <= wb) {
        throw PromiseViolation("promise |a|+|b| > omega_b fails: " + std::to_string(a.size() + b.size()) +
                               " <= " + std::to_string(wb));
      }
      return true;
    }
    case Game::EdgeBiclique: {
      if (static_cast<std::uint64_t>(a.size()) * b.size() <= kind.edge_bound) {
        throw PromiseViolation("promise |a|*|b| > K fails");
      }
      if (!in_limit) return false;
      const std::uint64_t best = max_edge_biclique(g, options.oracle_limit);
      if (best > kind.edge_bound) {
        throw PromiseViolation("K=" + std::to_string(kind.edge_bound) + " is below the largest biclique edge count " +
                               std::to_string(best));
      }
      return true;
    }
    case Game::Clique:
    case Game::RelaxedClique: {
      if (!in_limit) return false;
      const std::size_t w = max_clique_size(g, options.oracle_limit);
      if (a.size() + b.size() <= w) {
        throw PromiseViolation("promise |a|+|b| > omega fails: " + std::to_string(a.size() + b.size()) +
                               " <= " + std::to_string(w));
      }
      return true;
    }
  }
  return false;
}

Outcome play(const GameKind& kind, GameCircuits& circuits, const VertexSet& a, const VertexSet& b,
             const PlayOptions& options) {
  return run_session(kind, circuits, a, b, options, nullptr);
}

Outcome replay(const GameKind& kind, GameCircuits& circuits, const VertexSet& a, const VertexSet& b,
               const Transcript& transcript, const PlayOptions& options) {
  return run_session(kind, circuits, a, b, options, &transcript);
}

VertexPair decode_transcript(const GameKind& kind, GameCircuits& circuits, const Transcript& transcript) {
  Party observer(std::nullopt, kind, circuits);
  for (const auto& e : transcript.entries()) observer.hear(e.sender, e.bits);
  if (!observer.done()) throw ProtocolError("transcript ends before the protocol does");
  return observer.answer();
}

std::size_t bit_bound(const GameKind& kind, GameCircuits& circuits) {
  const std::size_t n = circuits.graph().vertex_count();
  std::size_t deepest = 0;
  for (std::size_t k = 1; k <= circuits.max_k(kind.game); ++k) {
    deepest = std::max(deepest, circuits.for_game(kind.game, k).depth());
  }
  const std::size_t traversal = size_field_width(n) + deepest;
  if (!kind.clique_family()) return traversal;
  return std::max<std::size_t>(2 + traversal, 2 + 2 * vertex_field_width(n));
}

}  // namespace cliquegame
