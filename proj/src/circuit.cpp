#include "cliquegame/circuit.hpp"

#include "cliquegame/errors.hpp"

#include <algorithm>
#include <optional>
#include <ostream>
#include <sstream>

namespace cliquegame {

Assignment Assignment::parse(std::string_view bits) {
  Assignment a(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] != '0' && bits[i] != '1') throw PreconditionError("assignment string must contain only 0/1");
    a.bits_[i] = bits[i] == '1' ? 1 : 0;
  }
  return a;
}

std::size_t Assignment::weight() const {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), std::uint8_t{1}));
}

std::string Assignment::to_string() const {
  std::string s(bits_.size(), '0');
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (bits_[i]) s[i] = '1';
  }
  return s;
}

Circuit::Circuit(std::vector<Gate> gates, NodeId output, std::size_t var_count)
    : gates_(std::move(gates)), output_(output), var_count_(var_count), node_depth_(gates_.size(), 0) {
  for (NodeId id = 0; id < gates_.size(); ++id) {
    const Gate& g = gates_[id];
    switch (g.kind) {
      case GateKind::Var:
        if (g.left >= var_count_) throw PreconditionError("variable index beyond var_count");
        break;
      case GateKind::Const:
        if (g.left > 1) throw PreconditionError("constant must be 0 or 1");
        break;
      case GateKind::And:
      case GateKind::Or:
        if (g.left >= id || g.right >= id) throw PreconditionError("gate child must precede the gate");
        node_depth_[id] = 1 + std::max(node_depth_[g.left], node_depth_[g.right]);
        ++size_;
        break;
    }
  }
  if (gates_.empty() || output_ >= gates_.size()) throw PreconditionError("circuit output out of range");
  depth_ = node_depth_[output_];
}

CircuitBuilder::CircuitBuilder(std::size_t var_count)
    : var_count_(var_count), var_nodes_(var_count, ~NodeId{0}), const_nodes_{0, 0} {}

NodeId CircuitBuilder::push(Gate g) {
  gates_.push_back(g);
  return static_cast<NodeId>(gates_.size() - 1);
}

NodeId CircuitBuilder::var(std::size_t index) {
  if (index >= var_count_) throw PreconditionError("variable index " + std::to_string(index) + " out of range");
  if (var_nodes_[index] == ~NodeId{0}) {
    var_nodes_[index] = push({GateKind::Var, static_cast<std::uint32_t>(index), 0});
  }
  return var_nodes_[index];
}

NodeId CircuitBuilder::constant(bool value) {
  int b = value ? 1 : 0;
  if (!has_const_[b]) {
    const_nodes_[b] = push({GateKind::Const, static_cast<std::uint32_t>(b), 0});
    has_const_[b] = true;
  }
  return const_nodes_[b];
}

bool CircuitBuilder::is_const(NodeId id, bool value) const {
  const Gate& g = gates_[id];
  return g.kind == GateKind::Const && (g.left != 0) == value;
}

NodeId CircuitBuilder::op_and(NodeId left, NodeId right) {
  if (is_const(left, false) || is_const(right, false)) return constant(false);
  if (is_const(left, true)) return right;
  if (is_const(right, true) || left == right) return left;
  return push({GateKind::And, left, right});
}

NodeId CircuitBuilder::op_or(NodeId left, NodeId right) {
  if (is_const(left, true) || is_const(right, true)) return constant(true);
  if (is_const(left, false)) return right;
  if (is_const(right, false) || left == right) return left;
  return push({GateKind::Or, left, right});
}

NodeId CircuitBuilder::maj3(NodeId x, NodeId y, NodeId z) {
  // Sequenced so node numbering does not depend on argument evaluation order.
  const NodeId both = op_and(x, y);
  const NodeId either = op_or(x, y);
  const NodeId third = op_and(either, z);
  return op_or(both, third);
}

template <GateKind K>
NodeId CircuitBuilder::tree(std::span<const NodeId> inputs) {
  if (inputs.empty()) throw PreconditionError("gate tree over an empty input list");
  std::vector<NodeId> level(inputs.begin(), inputs.end());
  while (level.size() > 1) {
    std::vector<NodeId> next;
    next.reserve((level.size() + 1) / 2);
    for (std::size_t i = 0; i + 1 < level.size(); i += 2) {
      next.push_back(K == GateKind::And ? op_and(level[i], level[i + 1]) : op_or(level[i], level[i + 1]));
    }
    if (level.size() % 2) next.push_back(level.back());
    level = std::move(next);
  }
  return level.front();
}

NodeId CircuitBuilder::and_tree(std::span<const NodeId> inputs) { return tree<GateKind::And>(inputs); }
NodeId CircuitBuilder::or_tree(std::span<const NodeId> inputs) { return tree<GateKind::Or>(inputs); }

NodeId CircuitBuilder::splice(const Circuit& templ, std::span<const NodeId> inputs) {
  if (inputs.size() != templ.var_count()) throw PreconditionError("splice input count differs from template arity");
  std::vector<NodeId> map(templ.node_count());
  for (NodeId id = 0; id < templ.node_count(); ++id) {
    const Gate& g = templ.gate(id);
    switch (g.kind) {
      case GateKind::Var: map[id] = inputs[g.left]; break;
      case GateKind::Const: map[id] = constant(g.left != 0); break;
      case GateKind::And: map[id] = op_and(map[g.left], map[g.right]); break;
      case GateKind::Or: map[id] = op_or(map[g.left], map[g.right]); break;
    }
  }
  return map[templ.output()];
}

Circuit CircuitBuilder::finish(NodeId output) const {
  if (output >= gates_.size()) throw PreconditionError("finish() on unknown node");
  std::vector<char> live(gates_.size(), 0);
  live[output] = 1;
  for (NodeId id = output + 1; id-- > 0;) {
    if (!live[id]) continue;
    const Gate& g = gates_[id];
    if (g.kind == GateKind::And || g.kind == GateKind::Or) live[g.left] = live[g.right] = 1;
  }
  std::vector<NodeId> renum(gates_.size(), 0);
  std::vector<Gate> out;
  for (NodeId id = 0; id <= output; ++id) {
    if (!live[id]) continue;
    Gate g = gates_[id];
    if (g.kind == GateKind::And || g.kind == GateKind::Or) {
      g.left = renum[g.left];
      g.right = renum[g.right];
    }
    renum[id] = static_cast<NodeId>(out.size());
    out.push_back(g);
  }
  return Circuit(std::move(out), renum[output], var_count_);
}

bool eval(const Circuit& c, const Assignment& x) { return eval_nodes(c, x)[c.output()] != 0; }

std::vector<std::uint8_t> eval_nodes(const Circuit& c, const Assignment& x) {
  if (x.size() != c.var_count()) {
    throw PreconditionError("assignment length " + std::to_string(x.size()) + " differs from var_count " +
                            std::to_string(c.var_count()));
  }
  const auto gates = c.gates();
  std::vector<std::uint8_t> val(gates.size());
  for (std::size_t id = 0; id < gates.size(); ++id) {
    const Gate& g = gates[id];
    switch (g.kind) {
      case GateKind::Var: val[id] = x[g.left] ? 1 : 0; break;
      case GateKind::Const: val[id] = static_cast<std::uint8_t>(g.left); break;
      case GateKind::And: val[id] = val[g.left] & val[g.right]; break;
      case GateKind::Or: val[id] = val[g.left] | val[g.right]; break;
    }
  }
  return val;
}

std::uint64_t eval_packed(const Circuit& c, std::span<const std::uint64_t> columns) {
  if (columns.size() != c.var_count()) throw PreconditionError("packed column count differs from var_count");
  const auto gates = c.gates();
  std::vector<std::uint64_t> val(gates.size());
  for (std::size_t id = 0; id < gates.size(); ++id) {
    const Gate& g = gates[id];
    switch (g.kind) {
      case GateKind::Var: val[id] = columns[g.left]; break;
      case GateKind::Const: val[id] = g.left ? ~std::uint64_t{0} : 0; break;
      case GateKind::And: val[id] = val[g.left] & val[g.right]; break;
      case GateKind::Or: val[id] = val[g.left] | val[g.right]; break;
    }
  }
  return val[c.output()];
}

std::vector<bool> eval_many(const Circuit& c, std::span<const Assignment> xs) {
  std::vector<bool> out(xs.size());
  std::vector<std::uint64_t> columns(c.var_count());
  for (std::size_t base = 0; base < xs.size(); base += 64) {
    std::size_t batch = std::min<std::size_t>(64, xs.size() - base);
    std::fill(columns.begin(), columns.end(), 0);
    for (std::size_t j = 0; j < batch; ++j) {
      const Assignment& x = xs[base + j];
      if (x.size() != c.var_count()) throw PreconditionError("assignment length differs from var_count");
      for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i]) columns[i] |= std::uint64_t{1} << j;
      }
    }
    std::uint64_t r = eval_packed(c, columns);
    for (std::size_t j = 0; j < batch; ++j) out[base + j] = (r >> j) & 1U;
  }
  return out;
}

void write_circuit(std::ostream& os, const Circuit& c) {
  const auto gates = c.gates();
  for (std::size_t id = 0; id < gates.size(); ++id) {
    const Gate& g = gates[id];
    os << id << ' ';
    switch (g.kind) {
      case GateKind::Var: os << "VAR " << g.left; break;
      case GateKind::Const: os << "CONST " << g.left; break;
      case GateKind::And: os << "AND " << g.left << ' ' << g.right; break;
      case GateKind::Or: os << "OR " << g.left << ' ' << g.right; break;
    }
    os << '\n';
  }
  os << "OUTPUT " << c.output() << '\n';
}

std::string serialize_circuit(const Circuit& c) {
  std::ostringstream os;
  write_circuit(os, c);
  return os.str();
}

Circuit parse_circuit(std::string_view text, std::size_t var_count) {
  std::istringstream in{std::string(text)};
  std::vector<Gate> gates;
  std::optional<NodeId> output;
  std::size_t line_no = 0;
  std::size_t max_var = 0;
  bool any_var = false;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first) || first == "c") continue;
    if (output) throw ParseError(line_no, "content after OUTPUT line");
    if (first == "OUTPUT") {
      std::uint64_t id = 0;
      if (!(ls >> id) || id >= gates.size()) throw ParseError(line_no, "OUTPUT names an unknown node");
      output = static_cast<NodeId>(id);
      continue;
    }
    std::uint64_t id = 0;
    try {
      std::size_t used = 0;
      id = std::stoull(first, &used);
      if (used != first.size()) throw ParseError(line_no, "bad node id");
    } catch (const std::logic_error&) {
      throw ParseError(line_no, "bad node id");
    }
    if (id != gates.size()) throw ParseError(line_no, "node ids must be consecutive from 0");
    std::string kind;
    std::uint64_t a = 0, b = 0;
    if (!(ls >> kind >> a)) throw ParseError(line_no, "malformed node line");
    Gate g;
    if (kind == "VAR") {
      g = {GateKind::Var, static_cast<std::uint32_t>(a), 0};
      max_var = std::max<std::size_t>(max_var, a);
      any_var = true;
    } else if (kind == "CONST") {
      if (a > 1) throw ParseError(line_no, "constant must be 0 or 1");
      g = {GateKind::Const, static_cast<std::uint32_t>(a), 0};
    } else if (kind == "AND" || kind == "OR") {
      if (!(ls >> b)) throw ParseError(line_no, "gate needs two children");
      if (a >= id || b >= id) throw ParseError(line_no, "gate child must precede the gate");
      g = {kind == "AND" ? GateKind::And : GateKind::Or, static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b)};
    } else {
      throw ParseError(line_no, "unknown node kind '" + kind + "'");
    }
    gates.push_back(g);
  }
  if (!output) throw ParseError(0, "missing OUTPUT line");
  if (var_count == 0 && any_var) var_count = max_var + 1;
  if (any_var && max_var >= var_count) throw ParseError(0, "variable index beyond declared var_count");
  return Circuit(std::move(gates), *output, var_count);
}

Circuit single_variable(std::size_t var_count, std::size_t index) {
  CircuitBuilder b(var_count);
  return b.finish(b.var(index));
}

Circuit constant_circuit(std::size_t var_count, bool value) {
  CircuitBuilder b(var_count);
  return b.finish(b.constant(value));
}

}  // namespace cliquegame
