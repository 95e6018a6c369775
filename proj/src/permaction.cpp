#include "symdig/permaction.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

namespace symdig {

Permutation::Permutation(std::vector<Vertex> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Vertex img : images_) {
    if (img >= images_.size() || seen[img])
      throw Error("permutation image array is not a bijection");
    seen[img] = true;
  }
}

Permutation Permutation::identity(Vertex n) {
  std::vector<Vertex> images(n);
  std::iota(images.begin(), images.end(), 0u);
  return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
  std::vector<Vertex> inv(images_.size());
  for (Vertex x = 0; x < images_.size(); ++x) inv[images_[x]] = x;
  return Permutation(std::move(inv));
}

bool Permutation::is_identity() const {
  for (Vertex x = 0; x < images_.size(); ++x)
    if (images_[x] != x) return false;
  return true;
}

Permutation compose(const Permutation& g, const Permutation& h) {
  if (g.degree() != h.degree()) throw Error("compose: domain size mismatch");
  std::vector<Vertex> images(g.degree());
  for (Vertex x = 0; x < g.degree(); ++x) images[x] = h(g(x));
  return Permutation(std::move(images));
}

std::string GeneratedAction::label_string(Vertex v) const {
  if (!labeled()) return std::to_string(v);
  std::string out;
  const auto& tuple = labels[v];
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    if (i) out += '|';
    out += alphabet[tuple[i]];
  }
  return out;
}

void GeneratedAction::validate() const {
  for (const auto& g : generators)
    if (g.degree() != domain) throw Error("action generator degree differs from domain size");
  if (labeled() && labels.size() != domain)
    throw Error("action label list does not cover the domain");
}

std::vector<Vertex> orbit(const GeneratedAction& action, Vertex point) {
  if (point >= action.domain) throw Error("orbit: point out of range");
  std::vector<bool> seen(action.domain, false);
  std::vector<Vertex> queue{point};
  seen[point] = true;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex x = queue[head];
    for (const auto& g : action.generators) {
      const Vertex y = g(x);
      if (!seen[y]) {
        seen[y] = true;
        queue.push_back(y);
      }
    }
  }
  std::sort(queue.begin(), queue.end());
  return queue;
}

std::vector<std::vector<Vertex>> orbit_partition(const GeneratedAction& action) {
  std::vector<bool> done(action.domain, false);
  std::vector<std::vector<Vertex>> blocks;
  for (Vertex v = 0; v < action.domain; ++v) {
    if (done[v]) continue;
    auto block = orbit(action, v);
    for (Vertex u : block) done[u] = true;
    blocks.push_back(std::move(block));
  }
  return blocks;  // already sorted by least member
}

std::vector<VertexPair> pair_orbit(const GeneratedAction& action, VertexPair seed) {
  if (seed.first >= action.domain || seed.second >= action.domain)
    throw Error("pair_orbit: index out of range");
  const std::uint64_t n = action.domain;
  const auto key = [n](VertexPair p) { return std::uint64_t{p.first} * n + p.second; };

  // Dense visited map for small domains, hash set otherwise.
  const bool dense = n <= 4096;
  std::vector<bool> seen_dense;
  std::unordered_set<std::uint64_t> seen_sparse;
  if (dense) seen_dense.assign(n * n, false);

  const auto mark = [&](std::uint64_t k) {
    if (dense) {
      if (seen_dense[k]) return false;
      seen_dense[k] = true;
      return true;
    }
    return seen_sparse.insert(k).second;
  };

  std::vector<VertexPair> queue{seed};
  mark(key(seed));
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const VertexPair p = queue[head];
    for (const auto& g : action.generators) {
      const VertexPair q{g(p.first), g(p.second)};
      if (mark(key(q))) queue.push_back(q);
    }
  }
  std::sort(queue.begin(), queue.end());
  return queue;
}

TransitivityCheck is_transitive_on(const GeneratedAction& action,
                                   const std::vector<Vertex>& points) {
  if (points.empty()) return {true, true};
  auto sorted = points;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  return {orbit(action, sorted.front()) == sorted, false};
}

TransitivityCheck is_transitive_on_pairs(const GeneratedAction& action,
                                         const std::vector<VertexPair>& pairs) {
  if (pairs.empty()) return {true, true};
  auto sorted = pairs;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  return {pair_orbit(action, sorted.front()) == sorted, false};
}

namespace {

struct ImageHash {
  std::size_t operator()(const std::vector<Vertex>& v) const {
    std::size_t h = 1469598103934665603ull;
    for (Vertex x : v) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return h;
  }
};

}  // namespace

std::vector<Permutation> group_enumerate(const GeneratedAction& action, std::uint64_t cap) {
  if (cap == 0) throw Error("group_enumerate: cap must be positive");
  std::unordered_set<std::vector<Vertex>, ImageHash> seen;
  std::vector<Permutation> queue{Permutation::identity(action.domain)};
  seen.insert(queue.front().images());
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Permutation current = queue[head];
    for (const auto& g : action.generators) {
      Permutation next = compose(current, g);
      if (seen.insert(next.images()).second) {
        if (seen.size() > cap)
          throw Error("group_enumerate: cap of " + std::to_string(cap) + " elements exceeded");
        queue.push_back(std::move(next));
      }
    }
  }
  return queue;
}

OrbitDuality orbit_length_duality(const GeneratedAction& action, Vertex eta, Vertex nu,
                                  std::uint64_t cap) {
  if (eta >= action.domain || nu >= action.domain)
    throw Error("orbit_length_duality: point out of range");
  const auto elements = group_enumerate(action, cap);

  const auto orbit_under_stabilizer = [&](Vertex fixed, Vertex moved) {
    std::vector<bool> seen(action.domain, false);
    std::size_t count = 0;
    for (const auto& g : elements) {
      if (g(fixed) != fixed) continue;
      const Vertex img = g(moved);
      if (!seen[img]) {
        seen[img] = true;
        ++count;
      }
    }
    return count;
  };

  OrbitDuality result;
  result.eta_under_stab_nu = orbit_under_stabilizer(nu, eta);
  result.nu_under_stab_eta = orbit_under_stabilizer(eta, nu);
  result.equal = result.eta_under_stab_nu == result.nu_under_stab_eta;
  return result;
}

bool orbit_length_duality_check(const GeneratedAction& action, Vertex eta, Vertex nu,
                                std::uint64_t cap) {
  return orbit_length_duality(action, eta, nu, cap).equal;
}

bool pair_set_invariant(const std::vector<Permutation>& generators,
                        const std::vector<VertexPair>& pairs) {
  auto sorted = pairs;
  std::sort(sorted.begin(), sorted.end());
  for (const auto& g : generators) {
    for (const auto& [u, v] : pairs) {
      const VertexPair img{g(u), g(v)};
      if (!std::binary_search(sorted.begin(), sorted.end(), img)) return false;
    }
  }
  return true;
}

std::vector<Vertex> wreath_apply(const WreathElement& g, const std::vector<Vertex>& tuple) {
  const Vertex n = g.top.degree();
  if (tuple.size() != n || g.base.size() != n)
    throw Error("wreath_apply: tuple length mismatch");
  const Vertex point_domain = g.base.empty() ? 0 : g.base[0].degree();
  for (const auto& h : g.base)
    if (h.degree() != point_domain) throw Error("wreath_apply: base entries on mixed domains");
  const Permutation top_inv = g.top.inverse();
  std::vector<Vertex> out(n);
  for (Vertex i = 0; i < n; ++i) {
    if (tuple[top_inv(i)] >= point_domain) throw Error("wreath_apply: tuple entry out of range");
    out[i] = g.base[i](tuple[top_inv(i)]);
  }
  return out;
}

WreathElement wreath_compose(const WreathElement& g, const WreathElement& h) {
  const Vertex n = g.top.degree();
  if (h.top.degree() != n) throw Error("wreath_compose: mismatched coordinate counts");
  const Permutation h_top_inv = h.top.inverse();
  std::vector<Permutation> base;
  base.reserve(n);
  for (Vertex i = 0; i < n; ++i) base.push_back(compose(g.base[h_top_inv(i)], h.base[i]));
  return {compose(g.top, h.top), std::move(base)};
}

Vertex tuple_index(const std::vector<Vertex>& tuple, Vertex m) {
  std::uint64_t index = 0;
  for (Vertex coord : tuple) {
    if (coord >= m) throw Error("tuple_index: coordinate out of range");
    index = index * m + coord;
  }
  return static_cast<Vertex>(index);
}

std::vector<Vertex> tuple_of_index(Vertex index, Vertex m, Vertex n) {
  std::vector<Vertex> tuple(n);
  for (Vertex i = n; i-- > 0;) {
    tuple[i] = index % m;
    index /= m;
  }
  return tuple;
}

GeneratedAction wreath_generators(const GeneratedAction& point_action, Vertex n) {
  if (n < 1) throw Error("wreath_generators: n must be >= 1");
  point_action.validate();
  const Vertex m = point_action.domain;

  std::uint64_t size = 1;
  for (Vertex i = 0; i < n; ++i) {
    size *= m;
    if (size > static_cast<std::uint64_t>(kMaxDomain))
      throw Error("wreath_generators: tuple domain exceeds the 2^20 size guard");
  }
  const Vertex domain = static_cast<Vertex>(size);

  GeneratedAction action;
  action.domain = domain;
  action.labels.reserve(domain);
  for (Vertex v = 0; v < domain; ++v) action.labels.push_back(tuple_of_index(v, m, n));
  action.alphabet.reserve(m);
  for (Vertex s = 0; s < m; ++s) action.alphabet.push_back(point_action.label_string(s));

  // Point generators acting in coordinate 0.
  for (const auto& h : point_action.generators) {
    std::vector<Vertex> images(domain);
    for (Vertex v = 0; v < domain; ++v) {
      auto tuple = action.labels[v];
      tuple[0] = h(tuple[0]);
      images[v] = tuple_index(tuple, m);
    }
    action.generators.emplace_back(std::move(images));
  }
  // Adjacent coordinate transpositions generating Sym(n) on top.
  for (Vertex i = 0; i + 1 < n; ++i) {
    std::vector<Vertex> images(domain);
    for (Vertex v = 0; v < domain; ++v) {
      auto tuple = action.labels[v];
      std::swap(tuple[i], tuple[i + 1]);
      images[v] = tuple_index(tuple, m);
    }
    action.generators.emplace_back(std::move(images));
  }
  return action;
}

}  // namespace symdig
