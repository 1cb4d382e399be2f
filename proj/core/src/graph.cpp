#include "muflow/graph.hpp"

#include <algorithm>
#include <string>

namespace muflow {

const char* to_string(InputErrorCode code) {
  switch (code) {
    case InputErrorCode::kMalformedDocument:
      return "malformed-document";
    case InputErrorCode::kDanglingReference:
      return "dangling-reference";
    case InputErrorCode::kNegativeCapacity:
      return "negative-capacity";
    case InputErrorCode::kNegativeLength:
      return "negative-length";
    case InputErrorCode::kDisconnectedSubtree:
      return "disconnected-subtree";
    case InputErrorCode::kNotATree:
      return "not-a-tree";
    case InputErrorCode::kUnknownVertex:
      return "unknown-vertex";
    case InputErrorCode::kUnknownTerminal:
      return "unknown-terminal";
    case InputErrorCode::kUnknownArc:
      return "unknown-arc";
    case InputErrorCode::kDuplicateId:
      return "duplicate-id";
    case InputErrorCode::kInvalidCut:
      return "invalid-cut";
    case InputErrorCode::kInvalidArgument:
      return "invalid-argument";
    case InputErrorCode::kOverflow:
      return "overflow";
    case InputErrorCode::kNotEulerian:
      return "not-eulerian";
  }
  return "unknown";
}

void throw_contract_violation(const std::string& what) {
  throw ContractViolation(what);
}

Capacity checked_add(Capacity a, Capacity b) {
  Capacity r;
  if (__builtin_add_overflow(a, b, &r)) {
    throw InputError(InputErrorCode::kOverflow, "capacity sum overflows");
  }
  return r;
}

Digraph::Digraph(std::vector<VertexId> vertices, std::vector<Arc> arcs)
    : vertices_(std::move(vertices)) {
  std::sort(vertices_.begin(), vertices_.end());
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (!vertex_index_.emplace(vertices_[i], i).second) {
      throw InputError(
          InputErrorCode::kDuplicateId,
          "duplicate vertex id " + std::to_string(vertices_[i].value()));
    }
  }
  std::sort(arcs.begin(), arcs.end(),
            [](const Arc& a, const Arc& b) { return a.id < b.id; });
  arcs_.reserve(arcs.size());
  out_.resize(vertices_.size());
  in_.resize(vertices_.size());
  for (const Arc& a : arcs) {
    if (!has_vertex(a.tail) || !has_vertex(a.head)) {
      throw InputError(InputErrorCode::kDanglingReference,
                       "arc " + std::to_string(a.id.value()) +
                           " references an unknown vertex");
    }
    if (arc_index_.contains(a.id)) {
      throw InputError(InputErrorCode::kDuplicateId,
                       "duplicate arc id " + std::to_string(a.id.value()));
    }
    if (a.tail == a.head) continue;  // loop
    const std::size_t idx = arcs_.size();
    arc_index_.emplace(a.id, idx);
    arcs_.push_back(a);
    out_[vertex_index_.at(a.tail)].push_back(idx);
    in_[vertex_index_.at(a.head)].push_back(idx);
  }
}

std::size_t Digraph::vertex_index(VertexId v) const {
  auto it = vertex_index_.find(v);
  if (it == vertex_index_.end()) {
    throw InputError(InputErrorCode::kUnknownVertex,
                     "unknown vertex " + std::to_string(v.value()));
  }
  return it->second;
}

std::size_t Digraph::arc_index(ArcId a) const {
  auto it = arc_index_.find(a);
  if (it == arc_index_.end()) {
    throw InputError(InputErrorCode::kUnknownArc,
                     "unknown arc " + std::to_string(a.value()));
  }
  return it->second;
}

std::optional<std::size_t> Digraph::find_arc(ArcId a) const {
  auto it = arc_index_.find(a);
  if (it == arc_index_.end()) return std::nullopt;
  return it->second;
}

std::int64_t Digraph::max_vertex_id() const {
  return vertices_.empty() ? -1 : vertices_.back().value();
}

std::int64_t Digraph::max_arc_id() const {
  return arcs_.empty() ? -1 : arcs_.back().id.value();
}

void ArcFunction::set(ArcId a, Capacity value) {
  if (value == 0) {
    values_.erase(a);
  } else {
    values_[a] = value;
  }
}

void ArcFunction::add(ArcId a, Capacity delta) {
  if (delta == 0) return;
  auto [it, inserted] = values_.try_emplace(a, 0);
  it->second = checked_add(it->second, delta);
  if (it->second == 0) values_.erase(it);
}

void ArcFunction::add(const ArcFunction& other) {
  for (const auto& [a, v] : other.values_) add(a, v);
}

Network::Network(std::vector<VertexId> vertices, std::vector<ArcSpec> arcs,
                 std::vector<VertexId> terminals) {
  std::vector<Arc> plain;
  plain.reserve(arcs.size());
  for (const ArcSpec& a : arcs) {
    if (a.capacity < 0) {
      throw InputError(
          InputErrorCode::kNegativeCapacity,
          "arc " + std::to_string(a.id.value()) + " has negative capacity");
    }
    plain.push_back({a.id, a.tail, a.head});
  }
  graph_ = Digraph(std::move(vertices), std::move(plain));
  capacity_.assign(graph_.num_arcs(), 0);
  for (const ArcSpec& a : arcs) {
    if (auto idx = graph_.find_arc(a.id)) capacity_[*idx] = a.capacity;
  }
  std::sort(terminals.begin(), terminals.end());
  terminals.erase(std::unique(terminals.begin(), terminals.end()),
                  terminals.end());
  for (VertexId t : terminals) {
    if (!graph_.has_vertex(t)) {
      throw InputError(
          InputErrorCode::kDanglingReference,
          "terminal " + std::to_string(t.value()) + " is not a vertex");
    }
  }
  terminals_ = std::move(terminals);
}

bool Network::is_terminal(VertexId v) const {
  return std::binary_search(terminals_.begin(), terminals_.end(), v);
}

Capacity Network::out_capacity(VertexId v) const {
  Capacity sum = 0;
  for (std::size_t a : graph_.out_arcs(graph_.vertex_index(v))) {
    sum = checked_add(sum, capacity_[a]);
  }
  return sum;
}

Capacity Network::in_capacity(VertexId v) const {
  Capacity sum = 0;
  for (std::size_t a : graph_.in_arcs(graph_.vertex_index(v))) {
    sum = checked_add(sum, capacity_[a]);
  }
  return sum;
}

Capacity Network::total_capacity() const {
  Capacity sum = 0;
  for (Capacity c : capacity_) sum = checked_add(sum, c);
  return sum;
}

std::vector<ArcSpec> Network::arc_specs() const {
  std::vector<ArcSpec> out;
  out.reserve(graph_.num_arcs());
  for (std::size_t i = 0; i < graph_.num_arcs(); ++i) {
    const Arc& a = graph_.arc(i);
    out.push_back({a.id, a.tail, a.head, capacity_[i]});
  }
  return out;
}

Network Network::with_terminals(std::vector<VertexId> terminals) const {
  Network copy = *this;
  std::sort(terminals.begin(), terminals.end());
  terminals.erase(std::unique(terminals.begin(), terminals.end()),
                  terminals.end());
  for (VertexId t : terminals) graph_.vertex_index(t);
  copy.terminals_ = std::move(terminals);
  return copy;
}

Cut::Cut(std::vector<VertexId> source_side)
    : source_side_(std::move(source_side)) {
  std::sort(source_side_.begin(), source_side_.end());
  source_side_.erase(std::unique(source_side_.begin(), source_side_.end()),
                     source_side_.end());
}

bool Cut::contains(VertexId v) const {
  return std::binary_search(source_side_.begin(), source_side_.end(), v);
}

Capacity divergence(const Network& net, const ArcFunction& f, VertexId v) {
  const Digraph& g = net.graph();
  const std::size_t vi = g.vertex_index(v);
  Capacity d = 0;
  for (std::size_t a : g.out_arcs(vi)) d = checked_add(d, f[g.arc(a).id]);
  for (std::size_t a : g.in_arcs(vi)) d = checked_add(d, -f[g.arc(a).id]);
  return d;
}

bool is_eulerian_at(const Network& net, VertexId v) {
  return net.in_capacity(v) == net.out_capacity(v);
}

std::vector<char> vertex_mask(const Digraph& g, std::span<const VertexId> set) {
  std::vector<char> mask(g.num_vertices(), 0);
  for (VertexId v : set) mask[g.vertex_index(v)] = 1;
  return mask;
}

namespace {

std::vector<char> checked_cut_mask(const Network& net, const Cut& x) {
  const Digraph& g = net.graph();
  if (x.size() == 0 || x.size() >= g.num_vertices()) {
    throw InputError(InputErrorCode::kInvalidCut,
                     "cut side must be a nonempty proper vertex subset");
  }
  return vertex_mask(g, x.source_side());
}

}  // namespace

Capacity cut_capacity(const Network& net, const Cut& x) {
  const auto mask = checked_cut_mask(net, x);
  const Digraph& g = net.graph();
  Capacity sum = 0;
  for (std::size_t i = 0; i < g.num_arcs(); ++i) {
    const Arc& a = g.arc(i);
    if (mask[g.vertex_index(a.tail)] && !mask[g.vertex_index(a.head)]) {
      sum = checked_add(sum, net.capacity_at(i));
    }
  }
  return sum;
}

Capacity cut_in_capacity(const Network& net, const Cut& x) {
  const auto mask = checked_cut_mask(net, x);
  const Digraph& g = net.graph();
  Capacity sum = 0;
  for (std::size_t i = 0; i < g.num_arcs(); ++i) {
    const Arc& a = g.arc(i);
    if (!mask[g.vertex_index(a.tail)] && mask[g.vertex_index(a.head)]) {
      sum = checked_add(sum, net.capacity_at(i));
    }
  }
  return sum;
}

Network contract(const Network& net, std::span<const VertexId> x, VertexId z) {
  if (x.empty()) {
    throw InputError(InputErrorCode::kInvalidArgument,
                     "cannot contract an empty vertex set");
  }
  const Digraph& g = net.graph();
  if (g.has_vertex(z)) {
    throw InputError(
        InputErrorCode::kDuplicateId,
        "contraction vertex " + std::to_string(z.value()) + " already exists");
  }
  const auto mask = vertex_mask(g, x);
  std::vector<VertexId> vertices;
  vertices.reserve(g.num_vertices() - x.size() + 1);
  for (std::size_t i = 0; i < g.num_vertices(); ++i) {
    if (!mask[i]) vertices.push_back(g.vertex(i));
  }
  vertices.push_back(z);

  std::vector<ArcSpec> arcs;
  arcs.reserve(g.num_arcs());
  for (std::size_t i = 0; i < g.num_arcs(); ++i) {
    const Arc& a = g.arc(i);
    const bool tail_in = mask[g.vertex_index(a.tail)];
    const bool head_in = mask[g.vertex_index(a.head)];
    if (tail_in && head_in) continue;
    arcs.push_back(
        {a.id, tail_in ? z : a.tail, head_in ? z : a.head, net.capacity_at(i)});
  }

  std::vector<VertexId> terminals;
  for (VertexId t : net.terminals()) {
    if (!mask[g.vertex_index(t)]) terminals.push_back(t);
  }
  terminals.push_back(z);
  return Network(std::move(vertices), std::move(arcs), std::move(terminals));
}

}  // namespace muflow
