#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "symdig/base.hpp"
#include "symdig/permaction.hpp"

namespace symdig {

/// Directed graph on an indexed vertex set, no loops, each vertex optionally
/// carrying a fixed-width tuple label over a named alphabet. The in/out
/// adjacency lists are kept sorted; the undirected flag is recomputed from
/// the arc set, never trusted.
class Digraph {
 public:
  Digraph(Vertex vertex_count, std::vector<VertexPair> arcs,
          std::vector<std::vector<Vertex>> labels = {},
          std::vector<std::string> alphabet = {});

  Vertex vertex_count() const { return static_cast<Vertex>(out_.size()); }
  std::uint64_t arc_count() const { return arc_count_; }

  const std::vector<Vertex>& out_neighbors(Vertex v) const;
  const std::vector<Vertex>& in_neighbors(Vertex v) const;

  bool has_arc(Vertex u, Vertex v) const;
  /// Arc in either direction.
  bool adjacent(Vertex u, Vertex v) const { return has_arc(u, v) || has_arc(v, u); }

  /// True iff the arc set is symmetric.
  bool is_symmetric() const { return symmetric_; }

  bool labeled() const { return !labels_.empty(); }
  const std::vector<Vertex>& label(Vertex v) const;
  std::string label_string(Vertex v) const;
  const std::vector<std::vector<Vertex>>& labels() const { return labels_; }
  const std::vector<std::string>& alphabet() const { return alphabet_; }
  Vertex label_width() const { return label_width_; }

  /// All arcs in lexicographic order.
  std::vector<VertexPair> arcs() const;

  /// Number of coordinates where the labels of u and v differ.
  Vertex hamming_dist(Vertex u, Vertex v) const;

  /// Arc-reversed digraph, labels preserved.
  Digraph opp() const;

 private:
  void check_vertex(Vertex v) const;

  std::vector<std::vector<Vertex>> out_, in_;
  std::vector<std::vector<Vertex>> labels_;
  std::vector<std::string> alphabet_;
  std::uint64_t arc_count_ = 0;
  Vertex label_width_ = 0;
  bool symmetric_ = false;
};

enum class PairTag { arcs, a2plus, a2mixed, a2minus };

/// Ordered pairs of distinct, non-adjacent vertices related through a
/// common neighbour, tagged by which kind.
struct PairSet {
  PairTag tag;
  std::vector<VertexPair> pairs;  // sorted
};

struct A2Sets {
  PairSet plus;   // common out-neighbour
  PairSet mixed;  // out-neighbour of u is in-neighbour of v
  PairSet minus;  // common in-neighbour
};

/// The three distance-2 pair sets. Scans, for each vertex w, the pairs of
/// in-neighbours (plus), out-neighbours (minus) and in/out combinations
/// (mixed), keeping non-adjacent pairs. The scan over w is OpenMP-parallel;
/// a2_sets_serial is the reference implementation kept for testing.
A2Sets a2_sets(const Digraph& g);
A2Sets a2_sets_serial(const Digraph& g);

enum class Connectivity { weak, strong };

bool is_connected(const Digraph& g, Connectivity mode);

/// Quotient by the orbits of sub on the vertex set: one vertex per orbit,
/// blocks indexed by least original member, an arc (A, B) between distinct
/// blocks iff some a in A and b in B are joined by an arc. Loops dropped.
/// When blocks_out is non-null it receives the orbit blocks.
Digraph normal_quotient(const Digraph& g, const GeneratedAction& sub,
                        std::vector<std::vector<Vertex>>* blocks_out = nullptr);

/// Backtracking isomorphism search with degree-sequence and distance-profile
/// pruning. Returns a vertex bijection g1 -> g2 preserving arcs exactly, or
/// nothing. Throws when either graph exceeds cap vertices.
std::optional<std::vector<Vertex>> find_isomorphism(const Digraph& g1, const Digraph& g2,
                                                    Vertex cap = 512);

/// True iff map is an arc-preserving bijection g1 -> g2 (both directions).
/// Rejects non-bijective maps.
bool check_map_is_isomorphism(const Digraph& g1, const Digraph& g2,
                              const std::vector<Vertex>& map);

}  // namespace symdig
