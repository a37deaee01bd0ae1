#include "cactus/graph.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <stdexcept>
#include <string>

namespace cactus {

namespace {

std::string edge_str(Edge e) {
  return "(" + std::to_string(e.first) + "," + std::to_string(e.second) + ")";
}

}  // namespace

Graph::Graph(Vertex n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  if (n_ < 1) throw std::invalid_argument("graph needs at least one vertex");
  for (auto& [u, v] : edges_) {
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    if (u < 1 || v < 1 || u > n_ || v > n_) {
      throw std::invalid_argument("edge " + edge_str({u, v}) + " out of range 1.." +
                                  std::to_string(n_));
    }
    if (u > v) std::swap(u, v);
  }
  std::sort(edges_.begin(), edges_.end());
  const auto dup = std::adjacent_find(edges_.begin(), edges_.end());
  if (dup != edges_.end()) throw std::invalid_argument("duplicate edge " + edge_str(*dup));

  adj_offsets_.assign(static_cast<size_t>(n_) + 2, 0);
  for (const auto& [u, v] : edges_) {
    ++adj_offsets_[u + 1];
    ++adj_offsets_[v + 1];
  }
  std::partial_sum(adj_offsets_.begin(), adj_offsets_.end(), adj_offsets_.begin());
  adj_.resize(2 * edges_.size());
  std::vector<std::uint32_t> cursor(adj_offsets_.begin(), adj_offsets_.end());
  for (const auto& [u, v] : edges_) {
    adj_[cursor[u]++] = v;
    adj_[cursor[v]++] = u;
  }
  for (Vertex v = 1; v <= n_; ++v) {
    std::sort(adj_.begin() + adj_offsets_[v], adj_.begin() + adj_offsets_[v + 1]);
  }
}

std::span<const Vertex> Graph::neighbors(Vertex v) const {
  assert(v >= 1 && v <= n_);
  return {adj_.data() + adj_offsets_[v], adj_.data() + adj_offsets_[v + 1]};
}

Count Graph::degree(Vertex v) const {
  assert(v >= 1 && v <= n_);
  return adj_offsets_[v + 1] - adj_offsets_[v];
}

std::string_view family_name(Family f) {
  switch (f) {
    case Family::Forest: return "forest";
    case Family::Tree: return "tree";
    case Family::Unicyclic: return "unicyclic";
    case Family::BiUnicyclic: return "bi-unicyclic";
    case Family::BridgelessCactus: return "bridgeless-cactus";
    case Family::TriangulatedCactus: return "triangulated-cactus";
    case Family::BridgelessBicactus: return "bridgeless-bicactus";
    case Family::CoreCactus: return "core-cactus";
    case Family::CoreBicactus: return "core-bicactus";
    case Family::Cactus: return "cactus";
    case Family::Bicactus: return "bicactus";
    case Family::ForciblyBicactus: return "forcibly-bicactus";
    case Family::ForciblyBipartiteUnicyclic: return "forcibly-bipartite-unicyclic";
  }
  return "?";
}

std::optional<Family> family_from_name(std::string_view name) {
  std::string compact;
  compact.reserve(name.size());
  for (char c : name) {
    if (c == '-' || c == '_') continue;
    compact.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  }
  for (Family f : kAllFamilies) {
    std::string canonical;
    for (char c : family_name(f)) {
      if (c != '-') canonical.push_back(c);
    }
    if (compact == canonical) return f;
  }
  return std::nullopt;
}

bool is_graph_family(Family f) {
  return f != Family::ForciblyBicactus && f != Family::ForciblyBipartiteUnicyclic;
}

namespace {

// Reachability sweep; returns the number of connected components.
Count component_count(const Graph& g) {
  const Vertex n = g.vertex_count();
  std::vector<bool> seen(static_cast<size_t>(n) + 1, false);
  std::vector<Vertex> queue;
  Count components = 0;
  for (Vertex s = 1; s <= n; ++s) {
    if (seen[s]) continue;
    ++components;
    seen[s] = true;
    queue.assign(1, s);
    while (!queue.empty()) {
      const Vertex v = queue.back();
      queue.pop_back();
      for (Vertex w : g.neighbors(v)) {
        if (!seen[w]) {
          seen[w] = true;
          queue.push_back(w);
        }
      }
    }
  }
  return components;
}

struct BlockSummary {
  Count bridgeCount = 0;
  Count cycleCount = 0;
  Count otherCount = 0;
  bool allCyclesTriangles = true;
  Count cyclicComponents = 0;  // components with a cycle once bridges are gone
};

struct DsuScratch {
  std::vector<Vertex> parent;
  Vertex find(Vertex v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  }
};

// Lowlink pass over a connected graph: biconnected components via an edge
// stack, iteratively to keep the stack flat on path-like inputs. Fills `out`
// when non-null; always fills the summary.
BlockSummary analyze_blocks(const Graph& g, BlockDecomposition* out) {
  const Vertex n = g.vertex_count();
  BlockSummary sum;
  std::vector<std::uint32_t> disc(static_cast<size_t>(n) + 1, 0);
  std::vector<std::uint32_t> low(static_cast<size_t>(n) + 1, 0);
  std::vector<Vertex> parent(static_cast<size_t>(n) + 1, 0);
  std::vector<bool> is_cut(static_cast<size_t>(n) + 1, false);
  std::vector<Edge> estack;
  estack.reserve(static_cast<size_t>(g.edge_count()));

  DsuScratch dsu;
  dsu.parent.resize(static_cast<size_t>(n) + 1);
  std::iota(dsu.parent.begin(), dsu.parent.end(), 0u);
  std::vector<Vertex> cycle_reps;

  struct Frame {
    Vertex v;
    std::uint32_t next;  // cursor into neighbors(v)
  };
  std::vector<Frame> frames;
  std::uint32_t timer = 0;
  Count root_children = 0;
  const Vertex root = 1;

  auto block_vertices = [](std::span<const Edge> es) {
    std::vector<Vertex> vs;
    vs.reserve(es.size() + 1);
    for (const auto& [a, b] : es) {
      vs.push_back(a);
      vs.push_back(b);
    }
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    return vs;
  };

  // Recovers the vertex order of a cycle block by walking its (degree-2)
  // adjacency, starting at the smallest vertex toward its smaller neighbor.
  auto cycle_order = [](std::span<const Edge> es, std::vector<Vertex> vs) {
    std::vector<std::array<Vertex, 2>> nb(vs.size(), {0, 0});
    auto idx = [&](Vertex v) {
      return static_cast<size_t>(std::lower_bound(vs.begin(), vs.end(), v) - vs.begin());
    };
    auto add = [&](Vertex a, Vertex b) {
      auto& slots = nb[idx(a)];
      (slots[0] == 0 ? slots[0] : slots[1]) = b;
    };
    for (const auto& [a, b] : es) {
      add(a, b);
      add(b, a);
    }
    std::vector<Vertex> order;
    order.reserve(vs.size());
    Vertex start = vs.front();
    Vertex prev = 0;
    Vertex cur = start;
    do {
      order.push_back(cur);
      const auto& slots = nb[idx(cur)];
      Vertex nxt = (slots[0] != prev) ? slots[0] : slots[1];
      if (order.size() == 1) nxt = std::min(slots[0], slots[1]);
      prev = cur;
      cur = nxt;
    } while (cur != start);
    return order;
  };

  auto emit_block = [&](std::span<const Edge> es) {
    auto vs = block_vertices(es);
    const Count ec = static_cast<Count>(es.size());
    BlockDecomposition::BlockKind kind;
    if (ec == 1) {
      kind = BlockDecomposition::BlockKind::Bridge;
      ++sum.bridgeCount;
    } else if (ec == static_cast<Count>(vs.size())) {
      kind = BlockDecomposition::BlockKind::Cycle;
      ++sum.cycleCount;
      if (ec != 3) sum.allCyclesTriangles = false;
      cycle_reps.push_back(vs.front());
      for (const auto& [a, b] : es) {
        dsu.parent[dsu.find(a)] = dsu.find(b);
      }
    } else {
      kind = BlockDecomposition::BlockKind::Other;
      ++sum.otherCount;
      for (const auto& [a, b] : es) {
        dsu.parent[dsu.find(a)] = dsu.find(b);
      }
    }
    if (out != nullptr) {
      BlockDecomposition::Block blk;
      blk.kind = kind;
      blk.edgeCount = ec;
      if (kind == BlockDecomposition::BlockKind::Cycle) {
        blk.vertices = cycle_order(es, vs);
      } else {
        blk.vertices = std::move(vs);
      }
      out->blocks.push_back(std::move(blk));
      if (kind == BlockDecomposition::BlockKind::Bridge) {
        Edge e = es.front();
        if (e.first > e.second) std::swap(e.first, e.second);
        out->bridges.push_back(e);
      }
    }
  };

  disc[root] = low[root] = ++timer;
  frames.push_back({root, 0});
  while (!frames.empty()) {
    Frame& fr = frames.back();
    const Vertex v = fr.v;
    const auto nbrs = g.neighbors(v);
    if (fr.next < nbrs.size()) {
      const Vertex w = nbrs[fr.next++];
      if (disc[w] == 0) {
        parent[w] = v;
        if (v == root) ++root_children;
        estack.push_back({v, w});
        disc[w] = low[w] = ++timer;
        frames.push_back({w, 0});
      } else if (w != parent[v] && disc[w] < disc[v]) {
        estack.push_back({v, w});
        low[v] = std::min(low[v], disc[w]);
      }
    } else {
      frames.pop_back();
      if (!frames.empty()) {
        const Vertex u = frames.back().v;
        low[u] = std::min(low[u], low[v]);
        if (low[v] >= disc[u]) {
          if (u != root) is_cut[u] = true;
          size_t first = estack.size();
          while (first > 0 && !(estack[first - 1] == Edge{u, v})) --first;
          assert(first > 0);
          emit_block(std::span<const Edge>(estack).subspan(first - 1));
          estack.resize(first - 1);
        }
      }
    }
  }
  if (root_children > 1) is_cut[root] = true;
  assert(estack.empty());

  {
    std::sort(cycle_reps.begin(), cycle_reps.end(),
              [&](Vertex a, Vertex b) { return dsu.find(a) < dsu.find(b); });
    Count distinct = 0;
    Vertex last = 0;
    for (Vertex r : cycle_reps) {
      const Vertex root_of = dsu.find(r);
      if (distinct == 0 || root_of != last) {
        ++distinct;
        last = root_of;
      }
    }
    sum.cyclicComponents = distinct;
  }

  if (out != nullptr) {
    out->cycleCount = sum.cycleCount;
    out->otherBlockCount = sum.otherCount;
    for (Vertex v = 1; v <= n; ++v) {
      if (is_cut[v]) out->cutVertices.push_back(v);
    }
    for (size_t b = 0; b < out->blocks.size(); ++b) {
      if (out->blocks[b].kind == BlockDecomposition::BlockKind::Cycle) {
        out->cycleBlocks.push_back(out->blocks[b].vertices);
      }
      for (Vertex v : out->blocks[b].vertices) {
        if (is_cut[v]) out->bcEdges.push_back({v, b});
      }
    }
  }
  return sum;
}

}  // namespace

bool is_connected(const Graph& g) { return component_count(g) == 1; }

bool is_bipartite(const Graph& g) {
  const Vertex n = g.vertex_count();
  std::vector<std::int8_t> color(static_cast<size_t>(n) + 1, -1);
  std::vector<Vertex> queue;
  for (Vertex s = 1; s <= n; ++s) {
    if (color[s] != -1) continue;
    color[s] = 0;
    queue.assign(1, s);
    while (!queue.empty()) {
      const Vertex v = queue.back();
      queue.pop_back();
      for (Vertex w : g.neighbors(v)) {
        if (color[w] == -1) {
          color[w] = static_cast<std::int8_t>(1 - color[v]);
          queue.push_back(w);
        } else if (color[w] == color[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

BlockDecomposition block_decomposition(const Graph& g) {
  if (component_count(g) != 1) {
    throw std::invalid_argument("block decomposition requires a connected graph");
  }
  BlockDecomposition out;
  analyze_blocks(g, &out);
  return out;
}

FamilyProfile family_profile(const Graph& g) {
  FamilyProfile p;
  p.n = g.vertex_count();
  p.m = g.edge_count();
  const Count components = component_count(g);
  p.connected = components == 1;
  p.acyclic = p.m == p.n - components;
  p.bipartite = is_bipartite(g);
  if (p.connected) {
    const BlockSummary sum = analyze_blocks(g, nullptr);
    p.bridgeCount = sum.bridgeCount;
    p.cycleCount = sum.cycleCount;
    p.cactus = sum.otherCount == 0;
    p.bridgeless = p.cactus && sum.bridgeCount == 0;
    p.triangulated = p.bridgeless && sum.allCyclesTriangles;
    p.core = p.cactus && sum.cyclicComponents <= 1;
    p.unicyclic = p.m == p.n;
    assert(!p.unicyclic || sum.cycleCount == 1 || !p.cactus);
  }
  return p;
}

bool FamilyProfile::test(Family f) const {
  switch (f) {
    case Family::Forest: return acyclic;
    case Family::Tree: return connected && m == n - 1;
    case Family::Unicyclic: return connected && unicyclic;
    case Family::BiUnicyclic: return connected && unicyclic && bipartite;
    case Family::BridgelessCactus: return bridgeless;
    case Family::TriangulatedCactus: return triangulated;
    case Family::BridgelessBicactus: return bridgeless && bipartite;
    case Family::CoreCactus: return core;
    case Family::CoreBicactus: return core && bipartite;
    case Family::Cactus: return cactus;
    case Family::Bicactus: return cactus && bipartite;
    case Family::ForciblyBicactus:
    case Family::ForciblyBipartiteUnicyclic:
      throw std::invalid_argument("forcibly predicates apply to sequences, not graphs");
  }
  return false;
}

DegreeSequence degree_sequence_of(const Graph& g) {
  std::vector<Count> degrees(g.vertex_count());
  for (Vertex v = 1; v <= g.vertex_count(); ++v) {
    degrees[v - 1] = g.degree(v);
    if (degrees[v - 1] == 0) {
      throw std::invalid_argument("vertex " + std::to_string(v) + " is isolated");
    }
  }
  return sequence_from_entries(std::move(degrees));
}

bool is_member(Family f, const Graph& g) {
  if (!is_graph_family(f)) {
    throw std::invalid_argument("forcibly predicates apply to sequences, not graphs");
  }
  return family_profile(g).test(f);
}

bool euler_cycle_identity(const Graph& g) {
  const FamilyProfile p = family_profile(g);
  if (!p.cactus) throw std::invalid_argument("not a cactus");
  return p.m == p.n + p.cycleCount - 1;
}

bool verify_realization(Family f, const DegreeSequence& d, const Graph& g) {
  if (f == Family::ForciblyBicactus) f = Family::Bicactus;
  if (f == Family::ForciblyBipartiteUnicyclic) f = Family::BiUnicyclic;
  if (static_cast<Count>(g.vertex_count()) != d.size()) return false;
  std::vector<Count> degrees(g.vertex_count());
  for (Vertex v = 1; v <= g.vertex_count(); ++v) degrees[v - 1] = g.degree(v);
  std::sort(degrees.begin(), degrees.end(), std::greater<>());
  if (degrees != d.entries) return false;
  return is_member(f, g);
}

}  // namespace cactus
