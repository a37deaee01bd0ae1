#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "cactus/seq.hpp"

namespace cactus {

using Vertex = std::uint32_t;  // 1-based labels
using Edge = std::pair<Vertex, Vertex>;

// Simple undirected graph on vertices 1..n. The constructor rejects loops,
// duplicates and out-of-range endpoints, normalizes every edge to u < v and
// stores the edge list lexicographically sorted.
class Graph {
 public:
  Graph(Vertex n, std::vector<Edge> edges);

  Vertex vertex_count() const { return n_; }
  Count edge_count() const { return static_cast<Count>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  std::span<const Vertex> neighbors(Vertex v) const;
  Count degree(Vertex v) const;

 private:
  Vertex n_;
  std::vector<Edge> edges_;
  std::vector<std::uint32_t> adj_offsets_;
  std::vector<Vertex> adj_;
};

enum class Family {
  Forest,
  Tree,
  Unicyclic,
  BiUnicyclic,
  BridgelessCactus,
  TriangulatedCactus,
  BridgelessBicactus,
  CoreCactus,
  CoreBicactus,
  Cactus,
  Bicactus,
  ForciblyBicactus,
  ForciblyBipartiteUnicyclic,
};

// The eleven families with a graph-membership predicate. The two forcibly
// predicates are properties of sequences, not of single graphs.
inline constexpr std::array<Family, 11> kGraphFamilies = {
    Family::Forest,           Family::Tree,
    Family::Unicyclic,        Family::BiUnicyclic,
    Family::BridgelessCactus, Family::TriangulatedCactus,
    Family::BridgelessBicactus, Family::CoreCactus,
    Family::CoreBicactus,     Family::Cactus,
    Family::Bicactus,
};

inline constexpr std::array<Family, 13> kAllFamilies = {
    Family::Forest,           Family::Tree,
    Family::Unicyclic,        Family::BiUnicyclic,
    Family::BridgelessCactus, Family::TriangulatedCactus,
    Family::BridgelessBicactus, Family::CoreCactus,
    Family::CoreBicactus,     Family::Cactus,
    Family::Bicactus,         Family::ForciblyBicactus,
    Family::ForciblyBipartiteUnicyclic,
};

// Canonical kebab-case name, e.g. "bridgeless-bicactus".
std::string_view family_name(Family f);

// Accepts the canonical names plus hyphen/underscore variants such as
// "bi-cactus" or "core_bi_cactus" (matching is done on the compacted form).
std::optional<Family> family_from_name(std::string_view name);

bool is_graph_family(Family f);

// Blocks of a connected graph: bridges, simple cycles, and anything else
// (which a cactus never has), plus the cut vertices and the bipartite
// block-cutpoint structure connecting them.
struct BlockDecomposition {
  enum class BlockKind { Bridge, Cycle, Other };
  struct Block {
    BlockKind kind;
    std::vector<Vertex> vertices;  // cycle blocks: in cycle order
    Count edgeCount = 0;
  };

  std::vector<Block> blocks;
  std::vector<Edge> bridges;
  std::vector<std::vector<Vertex>> cycleBlocks;
  std::vector<Vertex> cutVertices;  // ascending
  Count cycleCount = 0;
  Count otherBlockCount = 0;
  // (cut vertex, index into blocks) incidences; with the blocks these form
  // the block-cutpoint tree.
  std::vector<std::pair<Vertex, std::size_t>> bcEdges;
};

bool is_connected(const Graph& g);
bool is_bipartite(const Graph& g);

// Throws std::invalid_argument on disconnected input.
BlockDecomposition block_decomposition(const Graph& g);

// Every family membership of one graph, computed in a single pass so the
// enumeration oracle and is_member share one code path.
struct FamilyProfile {
  bool connected = false;
  bool bipartite = false;
  bool acyclic = false;
  bool cactus = false;
  bool bridgeless = false;
  bool triangulated = false;
  bool core = false;
  bool unicyclic = false;
  Count n = 0;
  Count m = 0;
  Count bridgeCount = 0;
  Count cycleCount = 0;

  bool test(Family f) const;
};

FamilyProfile family_profile(const Graph& g);

// Canonical degree sequence of g; throws if some vertex is isolated (the
// sequences handled here are positive).
DegreeSequence degree_sequence_of(const Graph& g);

// Exact membership; total over the eleven graph families. Throws
// std::invalid_argument for the two forcibly predicates.
bool is_member(Family f, const Graph& g);

// m == n + c - 1 with c the cycle count; throws if g is not a cactus.
bool euler_cycle_identity(const Graph& g);

// True iff the degree multiset of g equals d and g lies in the family. The
// forcibly predicates verify against the family they force (bicactus resp.
// bipartite unicyclic).
bool verify_realization(Family f, const DegreeSequence& d, const Graph& g);

}  // namespace cactus
