#include "symdig/digraph.hpp"

#include <algorithm>
#include <map>
#include <set>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace symdig {

Digraph::Digraph(Vertex vertex_count, std::vector<VertexPair> arcs,
                 std::vector<std::vector<Vertex>> labels, std::vector<std::string> alphabet)
    : out_(vertex_count), in_(vertex_count), labels_(std::move(labels)),
      alphabet_(std::move(alphabet)) {
  std::sort(arcs.begin(), arcs.end());
  arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
  for (const auto& [u, v] : arcs) {
    if (u >= vertex_count || v >= vertex_count) throw Error("digraph arc endpoint out of range");
    if (u == v) throw Error("digraph loops are not allowed");
    out_[u].push_back(v);
    in_[v].push_back(u);
  }
  for (auto& list : in_) std::sort(list.begin(), list.end());
  arc_count_ = arcs.size();

  symmetric_ = true;
  for (const auto& [u, v] : arcs) {
    if (!std::binary_search(out_[v].begin(), out_[v].end(), u)) {
      symmetric_ = false;
      break;
    }
  }

  if (!labels_.empty()) {
    if (labels_.size() != vertex_count) throw Error("digraph labels do not cover the vertex set");
    label_width_ = static_cast<Vertex>(labels_[0].size());
    std::set<std::vector<Vertex>> distinct;
    for (const auto& tuple : labels_) {
      if (tuple.size() != label_width_) throw Error("digraph labels have mixed widths");
      for (Vertex s : tuple)
        if (s >= alphabet_.size()) throw Error("digraph label symbol outside the alphabet");
      if (!distinct.insert(tuple).second) throw Error("digraph labels are not pairwise distinct");
    }
  }
}

void Digraph::check_vertex(Vertex v) const {
  if (v >= vertex_count()) throw Error("vertex " + std::to_string(v) + " out of range");
}

const std::vector<Vertex>& Digraph::out_neighbors(Vertex v) const {
  check_vertex(v);
  return out_[v];
}

const std::vector<Vertex>& Digraph::in_neighbors(Vertex v) const {
  check_vertex(v);
  return in_[v];
}

bool Digraph::has_arc(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  return std::binary_search(out_[u].begin(), out_[u].end(), v);
}

const std::vector<Vertex>& Digraph::label(Vertex v) const {
  check_vertex(v);
  if (!labeled()) throw Error("digraph is unlabeled");
  return labels_[v];
}

std::string Digraph::label_string(Vertex v) const {
  const auto& tuple = label(v);
  std::string out;
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    if (i) out += '|';
    out += alphabet_[tuple[i]];
  }
  return out;
}

std::vector<VertexPair> Digraph::arcs() const {
  std::vector<VertexPair> result;
  result.reserve(arc_count_);
  for (Vertex u = 0; u < vertex_count(); ++u)
    for (Vertex v : out_[u]) result.emplace_back(u, v);
  return result;
}

Vertex Digraph::hamming_dist(Vertex u, Vertex v) const {
  const auto& lu = label(u);
  const auto& lv = label(v);
  Vertex dist = 0;
  for (Vertex i = 0; i < label_width_; ++i)
    if (lu[i] != lv[i]) ++dist;
  return dist;
}

Digraph Digraph::opp() const {
  std::vector<VertexPair> reversed;
  reversed.reserve(arc_count_);
  for (Vertex u = 0; u < vertex_count(); ++u)
    for (Vertex v : out_[u]) reversed.emplace_back(v, u);
  return Digraph(vertex_count(), std::move(reversed), labels_, alphabet_);
}

namespace {

void scan_vertex_a2(const Digraph& g, Vertex w, std::vector<VertexPair>& plus,
                    std::vector<VertexPair>& mixed, std::vector<VertexPair>& minus) {
  const auto& ins = g.in_neighbors(w);
  const auto& outs = g.out_neighbors(w);
  for (Vertex u : ins)
    for (Vertex v : ins)
      if (u != v && !g.adjacent(u, v)) plus.emplace_back(u, v);
  for (Vertex u : outs)
    for (Vertex v : outs)
      if (u != v && !g.adjacent(u, v)) minus.emplace_back(u, v);
  for (Vertex u : ins)
    for (Vertex v : outs)
      if (u != v && !g.adjacent(u, v)) mixed.emplace_back(u, v);
}

std::vector<VertexPair> finalize(std::vector<VertexPair> pairs) {
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  return pairs;
}

}  // namespace

A2Sets a2_sets_serial(const Digraph& g) {
  std::vector<VertexPair> plus, mixed, minus;
  for (Vertex w = 0; w < g.vertex_count(); ++w) scan_vertex_a2(g, w, plus, mixed, minus);
  return {{PairTag::a2plus, finalize(std::move(plus))},
          {PairTag::a2mixed, finalize(std::move(mixed))},
          {PairTag::a2minus, finalize(std::move(minus))}};
}

A2Sets a2_sets(const Digraph& g) {
#ifdef _OPENMP
  const int threads = omp_get_max_threads();
  std::vector<std::vector<VertexPair>> plus(threads), mixed(threads), minus(threads);
#pragma omp parallel for schedule(dynamic, 16)
  for (Vertex w = 0; w < g.vertex_count(); ++w) {
    const int t = omp_get_thread_num();
    scan_vertex_a2(g, w, plus[t], mixed[t], minus[t]);
  }
  const auto merge = [](std::vector<std::vector<VertexPair>>& parts) {
    std::vector<VertexPair> all;
    for (auto& part : parts) all.insert(all.end(), part.begin(), part.end());
    return finalize(std::move(all));
  };
  return {{PairTag::a2plus, merge(plus)},
          {PairTag::a2mixed, merge(mixed)},
          {PairTag::a2minus, merge(minus)}};
#else
  return a2_sets_serial(g);
#endif
}

bool is_connected(const Digraph& g, Connectivity mode) {
  const Vertex n = g.vertex_count();
  if (n == 0) return true;

  const auto reach_count = [&](bool forward, bool both) {
    std::vector<bool> seen(n, false);
    std::vector<Vertex> queue{0};
    seen[0] = true;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vertex x = queue[head];
      const auto expand = [&](const std::vector<Vertex>& nbrs) {
        for (Vertex y : nbrs)
          if (!seen[y]) {
            seen[y] = true;
            queue.push_back(y);
          }
      };
      if (both || forward) expand(g.out_neighbors(x));
      if (both || !forward) expand(g.in_neighbors(x));
    }
    return queue.size();
  };

  if (mode == Connectivity::weak) return reach_count(true, true) == n;
  return reach_count(true, false) == n && reach_count(false, false) == n;
}

Digraph normal_quotient(const Digraph& g, const GeneratedAction& sub,
                        std::vector<std::vector<Vertex>>* blocks_out) {
  if (sub.domain != g.vertex_count())
    throw Error("normal_quotient: subgroup domain differs from the vertex set");
  const auto blocks = orbit_partition(sub);
  std::vector<Vertex> block_of(g.vertex_count());
  for (Vertex b = 0; b < blocks.size(); ++b)
    for (Vertex v : blocks[b]) block_of[v] = b;

  std::set<VertexPair> arcs;
  for (Vertex u = 0; u < g.vertex_count(); ++u)
    for (Vertex v : g.out_neighbors(u))
      if (block_of[u] != block_of[v]) arcs.emplace(block_of[u], block_of[v]);

  if (blocks_out) *blocks_out = blocks;
  return Digraph(static_cast<Vertex>(blocks.size()),
                 std::vector<VertexPair>(arcs.begin(), arcs.end()));
}

namespace {

// Per-vertex invariant used to prune the isomorphism search: degrees plus
// the BFS level profiles along out-arcs and in-arcs.
struct VertexProfile {
  Vertex outdeg = 0, indeg = 0;
  std::vector<Vertex> fwd, bwd;
  auto tie() const { return std::tie(outdeg, indeg, fwd, bwd); }
  bool operator==(const VertexProfile& o) const { return tie() == o.tie(); }
  bool operator<(const VertexProfile& o) const { return tie() < o.tie(); }
};

std::vector<Vertex> bfs_levels(const Digraph& g, Vertex start, bool forward) {
  std::vector<int> dist(g.vertex_count(), -1);
  std::vector<Vertex> queue{start};
  dist[start] = 0;
  std::vector<Vertex> levels;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex x = queue[head];
    const auto& nbrs = forward ? g.out_neighbors(x) : g.in_neighbors(x);
    for (Vertex y : nbrs) {
      if (dist[y] < 0) {
        dist[y] = dist[x] + 1;
        if (static_cast<std::size_t>(dist[y]) > levels.size()) levels.resize(dist[y], 0);
        ++levels[dist[y] - 1];
        queue.push_back(y);
      }
    }
  }
  return levels;
}

std::vector<VertexProfile> profiles(const Digraph& g) {
  std::vector<VertexProfile> out(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    out[v].outdeg = static_cast<Vertex>(g.out_neighbors(v).size());
    out[v].indeg = static_cast<Vertex>(g.in_neighbors(v).size());
    out[v].fwd = bfs_levels(g, v, true);
    out[v].bwd = bfs_levels(g, v, false);
  }
  return out;
}

bool extend_mapping(const Digraph& g1, const Digraph& g2, const std::vector<Vertex>& order,
                    const std::vector<std::vector<Vertex>>& candidates, std::size_t depth,
                    std::vector<Vertex>& map, std::vector<bool>& used) {
  if (depth == order.size()) return true;
  const Vertex u = order[depth];
  for (Vertex x : candidates[u]) {
    if (used[x]) continue;
    bool ok = true;
    for (std::size_t d = 0; d < depth && ok; ++d) {
      const Vertex v = order[d];
      ok = g1.has_arc(u, v) == g2.has_arc(x, map[v]) &&
           g1.has_arc(v, u) == g2.has_arc(map[v], x);
    }
    if (!ok) continue;
    map[u] = x;
    used[x] = true;
    if (extend_mapping(g1, g2, order, candidates, depth + 1, map, used)) return true;
    used[x] = false;
  }
  return false;
}

}  // namespace

std::optional<std::vector<Vertex>> find_isomorphism(const Digraph& g1, const Digraph& g2,
                                                    Vertex cap) {
  if (g1.vertex_count() > cap || g2.vertex_count() > cap)
    throw Error("find_isomorphism: vertex count exceeds cap of " + std::to_string(cap));
  if (g1.vertex_count() != g2.vertex_count() || g1.arc_count() != g2.arc_count())
    return std::nullopt;
  const Vertex n = g1.vertex_count();
  if (n == 0) return std::vector<Vertex>{};

  const auto prof1 = profiles(g1);
  const auto prof2 = profiles(g2);
  {
    auto s1 = prof1, s2 = prof2;
    std::sort(s1.begin(), s1.end());
    std::sort(s2.begin(), s2.end());
    if (!(s1 == s2)) return std::nullopt;
  }

  std::vector<std::vector<Vertex>> candidates(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex x = 0; x < n; ++x)
      if (prof1[u] == prof2[x]) candidates[u].push_back(x);

  std::vector<Vertex> order(n);
  for (Vertex u = 0; u < n; ++u) order[u] = u;
  std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
    return candidates[a].size() < candidates[b].size();
  });

  std::vector<Vertex> map(n, 0);
  std::vector<bool> used(n, false);
  if (extend_mapping(g1, g2, order, candidates, 0, map, used)) return map;
  return std::nullopt;
}

bool check_map_is_isomorphism(const Digraph& g1, const Digraph& g2,
                              const std::vector<Vertex>& map) {
  const Vertex n = g1.vertex_count();
  if (g2.vertex_count() != n || map.size() != n)
    throw Error("check_map_is_isomorphism: map is not a bijection between the vertex sets");
  std::vector<bool> hit(n, false);
  for (Vertex img : map) {
    if (img >= n || hit[img]) throw Error("check_map_is_isomorphism: map is not a bijection");
    hit[img] = true;
  }
  if (g1.arc_count() != g2.arc_count()) return false;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v : g1.out_neighbors(u))
      if (!g2.has_arc(map[u], map[v])) return false;
  return true;
}

}  // namespace symdig
