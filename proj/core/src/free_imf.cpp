#include <algorithm>
#include <deque>
#include <random>

#include "flow_util.hpp"
#include "muflow/solver.hpp"

namespace muflow {

namespace {

using internal::complement;
using internal::complement_set;
using internal::without_arcs;

struct Piece {
  std::vector<ArcId> arcs;
  Capacity remaining = 0;
};

using PieceQueue = std::map<ArcId, std::deque<Piece>>;

// One unit of capacity on an arc of the core network, where every minimal
// terminal cut has been shrunk to its terminal.
struct Unit {
  ArcId arc;
  std::size_t tail;
  std::size_t head;
};

// Decomposes the unit arcs of the core into terminal-to-terminal trails and
// removes trails that return to their own terminal by exchanging transitions
// at inner vertices.
class CoreTrails {
 public:
  CoreTrails(std::vector<Unit> units, std::size_t num_terminals,
             std::size_t num_vertices)
      : units_(std::move(units)),
        k_(num_terminals),
        ins_(num_vertices),
        outs_(num_vertices),
        next_(units_.size(), -1) {
    for (std::size_t i = 0; i < units_.size(); ++i) {
      outs_[units_[i].tail].push_back(i);
      ins_[units_[i].head].push_back(i);
    }
    for (std::size_t v = k_; v < num_vertices; ++v) {
      MUFLOW_ENSURE(ins_[v].size() == outs_[v].size(),
                    "non-terminal vertex is not Eulerian");
      for (std::size_t j = 0; j < ins_[v].size(); ++j) {
        next_[ins_[v][j]] = static_cast<long>(outs_[v][j]);
      }
    }
  }

  std::vector<std::vector<std::size_t>> solve() {
    std::mt19937 rng(0x5eed);
    const std::size_t round_limit = 200 + 2 * units_.size();
    for (std::size_t round = 0;; ++round) {
      build();
      std::vector<std::size_t> loops;
      for (std::size_t k = 0; k < trails_.size(); ++k) {
        if (start(k) == end(k)) loops.push_back(k);
      }
      if (loops.empty()) return trails_;
      if (round == round_limit) {
        split_off();
        build();
        for (std::size_t k = 0; k < trails_.size(); ++k) {
          MUFLOW_ENSURE(start(k) != end(k), "splitting left a loop");
        }
        return trails_;
      }
      std::vector<char> dirty(trails_.size(), 0);
      for (std::size_t k : loops) {
        if (!dirty[k]) fix(k, dirty, rng);
      }
    }
  }

 private:
  std::size_t start(std::size_t k) const {
    return units_[trails_[k].front()].tail;
  }
  std::size_t end(std::size_t k) const {
    return units_[trails_[k].back()].head;
  }

  void build() {
    trails_.clear();
    owner_.assign(units_.size(), -1);
    for (std::size_t t = 0; t < k_; ++t) {
      for (std::size_t o : outs_[t]) {
        std::vector<std::size_t> trail{o};
        while (units_[trail.back()].head >= k_) {
          trail.push_back(static_cast<std::size_t>(next_[trail.back()]));
        }
        for (std::size_t u : trail) {
          owner_[u] = static_cast<long>(trails_.size());
        }
        trails_.push_back(std::move(trail));
      }
    }
  }

  void fix(std::size_t k, std::vector<char>& dirty, std::mt19937& rng) {
    const std::vector<std::size_t>& p = trails_[k];
    const std::size_t t = start(k);
    std::vector<std::pair<std::size_t, std::size_t>> neutral;
    for (std::size_t pos = 0; pos + 1 < p.size(); ++pos) {
      const std::size_t i = p[pos];
      for (std::size_t j : ins_[units_[i].head]) {
        if (j == i) continue;
        const long q = owner_[j];
        if (q == static_cast<long>(k)) continue;
        if (q >= 0 && dirty[q]) continue;
        if (q >= 0 && start(q) != t && end(q) != t) {
          std::swap(next_[i], next_[j]);
          dirty[k] = dirty[q] = 1;
          return;
        }
        neutral.emplace_back(i, j);
      }
    }
    if (neutral.empty()) return;
    const auto [i, j] = neutral[std::uniform_int_distribution<std::size_t>(
        0, neutral.size() - 1)(rng)];
    std::swap(next_[i], next_[j]);
    dirty[k] = 1;
    if (owner_[j] >= 0) dirty[owner_[j]] = 1;
  }

  // A chain of units that splitting has fused into one arc.
  struct Chain {
    std::size_t first;
    std::size_t last;
    bool alive = true;
  };

  std::size_t tail_of(const Chain& c) const { return units_[c.first].tail; }
  std::size_t head_of(const Chain& c) const { return units_[c.last].head; }

  // True iff every terminal can still send one unit per outgoing arc to the
  // other terminals.
  bool tight(const std::vector<Chain>& chains) const {
    std::map<std::pair<std::size_t, std::size_t>, Capacity> caps;
    std::vector<Capacity> out(k_, 0);
    for (const Chain& c : chains) {
      if (!c.alive) continue;
      // A chain from a terminal back to itself still counts as an outgoing
      // arc, so closing one always fails the test.
      if (tail_of(c) < k_) ++out[tail_of(c)];
      if (tail_of(c) != head_of(c)) ++caps[{tail_of(c), head_of(c)}];
    }
    std::vector<VertexId> vertices;
    for (std::size_t v = 0; v < ins_.size(); ++v) {
      vertices.emplace_back(static_cast<std::int64_t>(v));
    }
    std::vector<ArcSpec> arcs;
    for (const auto& [ends, c] : caps) {
      arcs.push_back({ArcId(static_cast<std::int64_t>(arcs.size())),
                      VertexId(static_cast<std::int64_t>(ends.first)),
                      VertexId(static_cast<std::int64_t>(ends.second)), c});
    }
    std::vector<VertexId> terminals;
    for (std::size_t t = 0; t < k_; ++t) {
      terminals.emplace_back(static_cast<std::int64_t>(t));
    }
    const Network net(std::move(vertices), std::move(arcs), terminals);
    for (std::size_t t = 0; t < k_; ++t) {
      if (out[t] == 0) continue;
      std::vector<VertexId> others;
      for (std::size_t u = 0; u < k_; ++u) {
        if (u != t) others.push_back(terminals[u]);
      }
      const VertexId src[] = {terminals[t]};
      if (max_flow(net, src, others).value != out[t]) return false;
    }
    return true;
  }

  // Exact fallback: at every inner vertex, fuse each incoming arc with an
  // outgoing one such that every terminal cut stays tight. Some optimal
  // decomposition pairs the arcs that way, so a choice always exists. The
  // current pairing is tried first.
  void split_off() {
    std::vector<Chain> chains;
    for (std::size_t i = 0; i < units_.size(); ++i) chains.push_back({i, i});
    std::vector<std::vector<std::size_t>> in_chains(ins_.size());
    std::vector<std::vector<std::size_t>> out_chains(ins_.size());
    for (std::size_t i = 0; i < units_.size(); ++i) {
      in_chains[units_[i].head].push_back(i);
      out_chains[units_[i].tail].push_back(i);
    }
    std::vector<long> paired(units_.size(), -1);

    for (std::size_t v = k_; v < ins_.size(); ++v) {
      // A chain that is closed into a circuit at v comes back as incoming,
      // so keep going until no chain ends at v.
      for (;;) {
        const auto in = std::find_if(
            in_chains[v].begin(), in_chains[v].end(), [&](std::size_t c) {
              return chains[c].alive && head_of(chains[c]) == v;
            });
        if (in == in_chains[v].end()) break;
        const std::size_t i = *in;
        const std::size_t last_i = chains[i].last;
        const auto want = static_cast<std::size_t>(next_[last_i]);
        std::vector<std::size_t> candidates;
        for (std::size_t j : out_chains[v]) {
          if (!chains[j].alive) continue;
          candidates.push_back(j);
          if (chains[j].first == want) {
            std::swap(candidates.front(), candidates.back());
          }
        }
        bool done = false;
        for (std::size_t j : candidates) {
          const std::size_t first_j = chains[j].first;
          if (j == i) {
            // Closing a circuit through v leaves every terminal alone.
            chains[i].alive = false;
          } else {
            chains[i].last = chains[j].last;
            chains[j].alive = false;
            if (!tight(chains)) {
              chains[i].last = last_i;
              chains[j].alive = true;
              continue;
            }
            std::replace(in_chains[head_of(chains[i])].begin(),
                         in_chains[head_of(chains[i])].end(), j, i);
          }
          paired[last_i] = static_cast<long>(first_j);
          done = true;
          break;
        }
        MUFLOW_ENSURE(done, "no admissible pairing at an inner vertex");
      }
    }
    for (std::size_t u = 0; u < units_.size(); ++u) {
      if (paired[u] >= 0) next_[u] = paired[u];
    }
  }

  std::vector<Unit> units_;
  std::size_t k_;
  std::vector<std::vector<std::size_t>> ins_;
  std::vector<std::vector<std::size_t>> outs_;
  std::vector<long> next_;
  std::vector<std::vector<std::size_t>> trails_;
  std::vector<long> owner_;
};

std::vector<ArcId> take(PieceQueue& queue, ArcId a) {
  auto it = queue.find(a);
  MUFLOW_ENSURE(it != queue.end() && !it->second.empty(),
                "boundary arc has no matching inner path");
  Piece& front = it->second.front();
  std::vector<ArcId> arcs = front.arcs;
  if (--front.remaining == 0) it->second.pop_front();
  return arcs;
}

}  // namespace

Capacity total_value(const Network& net, const Multiflow& f) {
  Capacity total = 0;
  for (const auto& [pair, flow] : f.components()) {
    total += Multiflow::value_of(net, flow, pair.first);
  }
  return total;
}

FreeMultiflow free_imf(const Network& net) {
  FreeMultiflow out;
  const auto terminals = net.terminals();
  const std::size_t k = terminals.size();
  if (k < 2) return out;
  const Digraph& g = net.graph();
  const std::size_t n = g.num_vertices();

  // Inclusion-minimal (t, S - t)-cuts; they are pairwise disjoint.
  std::vector<long> region(n, -1);
  std::vector<Cut> cuts;
  for (std::size_t ti = 0; ti < k; ++ti) {
    const VertexId src[] = {terminals[ti]};
    std::vector<VertexId> others;
    for (VertexId u : terminals) {
      if (u != terminals[ti]) others.push_back(u);
    }
    const MaxFlowResult mf = max_flow(net, src, others);
    Cut x = min_cut_source_side(net, mf.flow, src, others);
    for (VertexId v : x.source_side()) {
      long& r = region[g.vertex_index(v)];
      MUFLOW_ENSURE(r < 0, "minimal terminal cuts overlap");
      r = static_cast<long>(ti);
    }
    out.cuts.emplace(terminals[ti], x);
    cuts.push_back(std::move(x));
  }

  // Inside each cut: flow from t to the boundary and back.
  const VertexId z(g.max_vertex_id() + 1);
  std::vector<PieceQueue> exits(k);
  std::vector<PieceQueue> entries(k);
  for (std::size_t ti = 0; ti < k; ++ti) {
    const VertexId t = terminals[ti];
    const Network inner =
        contract(net, complement_set(g, cuts[ti].source_side()), z);
    const Network limited = without_arcs(
        inner, [&](const Arc& a) { return a.head == t || a.tail == z; });
    const VertexId src[] = {t};
    const VertexId snk[] = {z};
    const MaxFlowResult mf = max_flow(limited, src, snk);
    MUFLOW_ENSURE(mf.value == cut_capacity(net, cuts[ti]),
                  "terminal cut is not saturated from inside");
    for (WeightedPath& p : decompose(inner, mf.flow, src, snk)) {
      const ArcId last = p.arcs.back();
      exits[ti][last].push_back({std::move(p.arcs), p.weight});
    }
    const FlowFunction back = complement(inner, mf.flow);
    for (WeightedPath& p : decompose(inner, back, snk, src)) {
      const ArcId first = p.arcs.front();
      entries[ti][first].push_back({std::move(p.arcs), p.weight});
    }
  }

  // Core network: cut regions shrunk to their terminal (ids 0..k-1).
  auto core_vertex = [&](VertexId v) {
    const std::size_t i = g.vertex_index(v);
    return region[i] >= 0 ? static_cast<std::size_t>(region[i]) : k + i;
  };
  std::vector<Unit> units;
  for (std::size_t i = 0; i < g.num_arcs(); ++i) {
    const Arc& a = g.arc(i);
    const std::size_t u = core_vertex(a.tail);
    const std::size_t v = core_vertex(a.head);
    if (u == v) continue;
    for (Capacity c = 0; c < net.capacity_at(i); ++c) {
      units.push_back({a.id, u, v});
    }
  }
  CoreTrails core(units, k, k + n);
  for (const auto& trail : core.solve()) {
    const Unit& first = units[trail.front()];
    const Unit& last = units[trail.back()];
    WeightedPath path;
    path.from = terminals[first.tail];
    path.to = terminals[last.head];
    path.weight = 1;
    path.arcs = take(exits[first.tail], first.arc);
    for (std::size_t i = 1; i < trail.size(); ++i) {
      path.arcs.push_back(units[trail[i]].arc);
    }
    const std::vector<ArcId> tail = take(entries[last.head], last.arc);
    path.arcs.insert(path.arcs.end(), tail.begin() + 1, tail.end());
    out.multiflow.add_path(path);
  }
  return out;
}

}  // namespace muflow
