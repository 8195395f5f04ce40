#include "cliquegame/vertex_set.hpp"

#include "cliquegame/errors.hpp"

#include <algorithm>
#include <sstream>

namespace cliquegame {

VertexSet::VertexSet(std::size_t universe, std::initializer_list<Vertex> members)
    : bits_(universe) {
  for (Vertex v : members) {
    if (v >= universe) throw PreconditionError("vertex " + std::to_string(v) + " outside set universe");
    bits_.set(v);
  }
}

VertexSet::VertexSet(std::size_t universe, const std::vector<Vertex>& members) : bits_(universe) {
  for (Vertex v : members) {
    if (v >= universe) throw PreconditionError("vertex " + std::to_string(v) + " outside set universe");
    bits_.set(v);
  }
}

VertexSet VertexSet::full(std::size_t universe) {
  VertexSet s(universe);
  s.bits_.set();
  return s;
}

VertexSet VertexSet::from_mask(std::size_t universe, std::uint64_t mask) {
  if (universe > 64) throw PreconditionError("mask construction needs universe <= 64");
  VertexSet s(universe);
  for (std::size_t v = 0; v < universe; ++v) {
    if ((mask >> v) & 1U) s.bits_.set(v);
  }
  return s;
}

Vertex VertexSet::first() const {
  auto i = bits_.find_first();
  return i == Bits::npos ? static_cast<Vertex>(bits_.size()) : static_cast<Vertex>(i);
}

Vertex VertexSet::next(Vertex v) const {
  auto i = bits_.find_next(v);
  return i == Bits::npos ? static_cast<Vertex>(bits_.size()) : static_cast<Vertex>(i);
}

std::vector<Vertex> VertexSet::members() const {
  std::vector<Vertex> out;
  out.reserve(size());
  for_each([&](Vertex v) { out.push_back(v); });
  return out;
}

std::uint64_t VertexSet::to_mask() const {
  if (bits_.size() > 64) throw PreconditionError("mask conversion needs universe <= 64");
  std::uint64_t m = 0;
  for_each([&](Vertex v) { m |= std::uint64_t{1} << v; });
  return m;
}

bool lex_less(const VertexSet& a, const VertexSet& b) {
  auto ma = a.members();
  auto mb = b.members();
  return std::lexicographical_compare(ma.begin(), ma.end(), mb.begin(), mb.end());
}

std::string VertexSet::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first_member = true;
  for_each([&](Vertex v) {
    if (!first_member) os << ',';
    os << v;
    first_member = false;
  });
  os << '}';
  return os.str();
}

}  // namespace cliquegame
