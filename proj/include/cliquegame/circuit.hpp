#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace cliquegame {

using NodeId = std::uint32_t;

enum class GateKind : std::uint8_t { Var, Const, And, Or };

struct Gate {
  GateKind kind = GateKind::Const;
  std::uint32_t left = 0;   // Var: variable index; Const: bit value; And/Or: child id
  std::uint32_t right = 0;  // And/Or: child id

  friend bool operator==(const Gate&, const Gate&) = default;
};

// Bit vector indexed by circuit variables (one per nonedge in the games).
class Assignment {
 public:
  Assignment() = default;
  explicit Assignment(std::size_t size, bool value = false) : bits_(size, value ? 1 : 0) {}
  // From a string of '0'/'1' characters.
  static Assignment parse(std::string_view bits);

  std::size_t size() const noexcept { return bits_.size(); }
  bool operator[](std::size_t i) const { return bits_[i] != 0; }
  void set(std::size_t i, bool value) { bits_[i] = value ? 1 : 0; }
  std::size_t weight() const;
  std::string to_string() const;

  friend bool operator==(const Assignment&, const Assignment&) = default;

 private:
  std::vector<std::uint8_t> bits_;
};

// Immutable monotone circuit: fanin-2 AND/OR gates over variable and
// constant leaves. Children always precede their parent, so the gate array is
// a topological order and the last gate is the output.
class Circuit {
 public:
  std::size_t var_count() const noexcept { return var_count_; }
  NodeId output() const noexcept { return output_; }
  std::span<const Gate> gates() const noexcept { return gates_; }
  const Gate& gate(NodeId id) const { return gates_[id]; }
  std::size_t node_count() const noexcept { return gates_.size(); }

  // Longest leaf-to-output path counted in AND/OR gates.
  std::size_t depth() const noexcept { return depth_; }
  // Number of AND/OR gates.
  std::size_t size() const noexcept { return size_; }
  // Per-node depth, parallel to gates().
  const std::vector<std::uint32_t>& node_depths() const noexcept { return node_depth_; }

  bool is_constant() const { return gates_[output_].kind == GateKind::Const; }

  friend bool operator==(const Circuit& a, const Circuit& b) {
    return a.var_count_ == b.var_count_ && a.output_ == b.output_ && a.gates_ == b.gates_;
  }

 private:
  friend class CircuitBuilder;
  friend Circuit parse_circuit(std::string_view text, std::size_t var_count);
  Circuit(std::vector<Gate> gates, NodeId output, std::size_t var_count);

  std::vector<Gate> gates_;
  NodeId output_ = 0;
  std::size_t var_count_ = 0;
  std::size_t depth_ = 0;
  std::size_t size_ = 0;
  std::vector<std::uint32_t> node_depth_;
};

// Append-only construction arena. Leaves are shared (one node per variable
// and per constant), and AND/OR fold constants and identical operands; no
// other simplification happens. finish() keeps only the output's cone.
class CircuitBuilder {
 public:
  explicit CircuitBuilder(std::size_t var_count);

  std::size_t var_count() const noexcept { return var_count_; }
  NodeId var(std::size_t index);
  NodeId constant(bool value);
  NodeId op_and(NodeId left, NodeId right);
  NodeId op_or(NodeId left, NodeId right);
  NodeId maj3(NodeId x, NodeId y, NodeId z);

  // Balanced trees; depth ceil(log2(size)). Empty input throws.
  NodeId and_tree(std::span<const NodeId> inputs);
  NodeId or_tree(std::span<const NodeId> inputs);

  // Copies `templ` with its variable i wired to inputs[i]; returns the copy's output.
  NodeId splice(const Circuit& templ, std::span<const NodeId> inputs);

  bool is_const(NodeId id, bool value) const;
  const Gate& gate(NodeId id) const { return gates_[id]; }

  Circuit finish(NodeId output) const;

 private:
  NodeId push(Gate g);
  template <GateKind K>
  NodeId tree(std::span<const NodeId> inputs);

  std::size_t var_count_;
  std::vector<Gate> gates_;
  std::vector<NodeId> var_nodes_;
  NodeId const_nodes_[2];
  bool has_const_[2] = {false, false};
};

// Value of the output on x. Throws PreconditionError on length mismatch.
bool eval(const Circuit& c, const Assignment& x);
// Value of every node on x (0/1 per node), parallel to c.gates().
std::vector<std::uint8_t> eval_nodes(const Circuit& c, const Assignment& x);
// 64 assignments at once: bit j of columns[i] is variable i of assignment j.
// Bit j of the result is the output on assignment j.
std::uint64_t eval_packed(const Circuit& c, std::span<const std::uint64_t> columns);

// Evaluates many assignments with eval_packed in batches of 64.
std::vector<bool> eval_many(const Circuit& c, std::span<const Assignment> xs);

// Line format: `<id> VAR <i>`, `<id> CONST <0|1>`, `<id> AND <l> <r>`,
// `<id> OR <l> <r>`, then `OUTPUT <id>`. Lines starting with `c` are comments.
void write_circuit(std::ostream& os, const Circuit& c);
std::string serialize_circuit(const Circuit& c);
// var_count 0 infers it as one past the largest variable index.
Circuit parse_circuit(std::string_view text, std::size_t var_count = 0);

// Circuit of a single variable, handy for tests and degenerate builders.
Circuit single_variable(std::size_t var_count, std::size_t index);
Circuit constant_circuit(std::size_t var_count, bool value);

}  // namespace cliquegame
