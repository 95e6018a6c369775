#include "symdig/constructions.hpp"

#include <algorithm>

namespace symdig {

Matrix2 matrix2(const FiniteField& f, std::int64_t a, std::int64_t b, std::int64_t c,
                std::int64_t d) {
  const std::int64_t det = f.sub(f.mul(a, d), f.mul(b, c));
  return {a, b, c, d, det};
}

Matrix2 matrix_mul(const FiniteField& f, const Matrix2& m1, const Matrix2& m2) {
  return matrix2(f, f.add(f.mul(m1.a, m2.a), f.mul(m1.b, m2.c)),
                 f.add(f.mul(m1.a, m2.b), f.mul(m1.b, m2.d)),
                 f.add(f.mul(m1.c, m2.a), f.mul(m1.d, m2.c)),
                 f.add(f.mul(m1.c, m2.b), f.mul(m1.d, m2.d)));
}

Matrix2 matrix_identity(const FiniteField& f) { return matrix2(f, 1, 0, 0, 1); }

Matrix2 matrix_minus_identity(const FiniteField& f) {
  const std::int64_t m1 = f.neg(1);
  return matrix2(f, m1, 0, 0, m1);
}

Matrix2 matrix_rot90(const FiniteField& f) { return matrix2(f, 0, f.neg(1), 1, 0); }

Matrix2 matrix_swap(const FiniteField& f) { return matrix2(f, 0, 1, 1, 0); }

namespace {

void require_xq_field(const FiniteField& f) {
  if (f.order() % 4 != 3)
    throw Error("construction requires q = 3 mod 4 (got q = " + std::to_string(f.order()) + ")");
  if (f.order() < 7)
    throw Error("construction requires q >= 7 (got q = " + std::to_string(f.order()) + ")");
}

}  // namespace

OrbitClass canonicalize(const FiniteField& f, std::int64_t a, std::int64_t b) {
  if (f.order() % 4 != 3) throw Error("canonicalize requires q = 3 mod 4");
  if (a == 0 && b == 0) throw Error("canonicalize: zero vector has no class");
  if (b != 0) {
    const std::int64_t b_inv = f.inv(b);
    if (f.is_square(b)) return {f.mul(a, b_inv), 1};
    // -b^-1 is a square since -1 is not; it scales b to -1.
    const std::int64_t s = f.neg(b_inv);
    return {f.mul(a, s), f.neg(1)};
  }
  return f.is_square(a) ? OrbitClass{1, 0} : OrbitClass{f.neg(1), 0};
}

std::vector<OrbitClass> delta_domain(const FiniteField& f) {
  require_xq_field(f);
  const std::int64_t q = f.order();
  std::vector<OrbitClass> domain;
  domain.reserve(2 * (q + 1));
  for (std::int64_t a = 0; a < q; ++a) domain.push_back({a, 1});
  const std::int64_t minus_one = f.neg(1);
  for (std::int64_t a = 0; a < q; ++a) domain.push_back({a, minus_one});
  domain.push_back({1, 0});
  domain.push_back({minus_one, 0});
  return domain;
}

Vertex delta_index(const FiniteField& f, const OrbitClass& cls) {
  const std::int64_t q = f.order();
  if (cls.b == 1) return static_cast<Vertex>(cls.a);
  if (cls.b == f.neg(1)) return static_cast<Vertex>(q + cls.a);
  if (cls.b == 0) return static_cast<Vertex>(cls.a == 1 ? 2 * q : 2 * q + 1);
  throw Error("delta_index: class is not canonical");
}

std::string delta_label(const OrbitClass& cls) {
  return "[" + std::to_string(cls.a) + "," + std::to_string(cls.b) + "]";
}

Permutation delta_perm(const FiniteField& f, const Matrix2& m) {
  const auto domain = delta_domain(f);
  std::vector<Vertex> images(domain.size());
  for (std::size_t i = 0; i < domain.size(); ++i) {
    const auto& [a, b] = domain[i];
    // Row vector times matrix.
    const std::int64_t ia = f.add(f.mul(a, m.a), f.mul(b, m.c));
    const std::int64_t ib = f.add(f.mul(a, m.b), f.mul(b, m.d));
    images[i] = delta_index(f, canonicalize(f, ia, ib));
  }
  return Permutation(std::move(images));
}

namespace {

GeneratedAction labeled_delta_action(const FiniteField& f, std::vector<Permutation> generators) {
  const auto domain = delta_domain(f);
  GeneratedAction action;
  action.domain = static_cast<Vertex>(domain.size());
  action.generators = std::move(generators);
  action.labels.reserve(domain.size());
  action.alphabet.reserve(domain.size());
  for (Vertex i = 0; i < domain.size(); ++i) {
    action.labels.push_back({i});
    action.alphabet.push_back(delta_label(domain[i]));
  }
  action.validate();
  return action;
}

}  // namespace

GeneratedAction sl2_action(const FiniteField& f) {
  require_xq_field(f);
  std::vector<Permutation> generators;
  for (std::int64_t lambda : f.additive_basis()) {
    generators.push_back(delta_perm(f, matrix2(f, 1, lambda, 0, 1)));
    generators.push_back(delta_perm(f, matrix2(f, 1, 0, lambda, 1)));
  }
  auto action = labeled_delta_action(f, std::move(generators));
  if (f.order() <= 11) {
    const std::int64_t q = f.order();
    const std::uint64_t expected = static_cast<std::uint64_t>(q) * (q * q - 1);
    if (group_enumerate(action, expected + 1).size() != expected)
      throw Error("sl2_action: generating set does not produce a group of order q(q^2-1)");
  }
  return action;
}

GeneratedAction borel_stabilizer_generators(const FiniteField& f) {
  require_xq_field(f);
  const std::int64_t g = f.primitive_root();
  const std::int64_t g2 = f.mul(g, g);
  std::vector<Permutation> generators;
  generators.push_back(delta_perm(f, matrix2(f, g2, 0, 0, f.inv(g2))));
  for (std::int64_t lambda : f.additive_basis())
    generators.push_back(delta_perm(f, matrix2(f, 1, 0, lambda, 1)));

  auto action = labeled_delta_action(f, std::move(generators));
  const Vertex v10 = delta_index(f, {1, 0});
  for (const auto& perm : action.generators)
    if (perm(v10) != v10) throw Error("borel generator does not fix [1,0]");
  return action;
}

Digraph orbital_graph(const GeneratedAction& action, VertexPair seed) {
  if (seed.first == seed.second) throw Error("orbital_graph: seed would create a loop");
  auto arcs = pair_orbit(action, seed);
  return Digraph(action.domain, std::move(arcs), action.labels, action.alphabet);
}

Digraph build_xq(const FiniteField& f) { return build_xq_instance(f).graph; }

XqInstance build_xq_instance(const FiniteField& f) {
  require_xq_field(f);
  XqInstance inst{sl2_action(f),
                  Digraph(0, {}),
                  delta_perm(f, matrix_minus_identity(f)),
                  delta_perm(f, matrix_rot90(f)),
                  delta_perm(f, matrix_swap(f)),
                  delta_index(f, {1, 0}),
                  delta_index(f, {0, 1}),
                  delta_index(f, {f.neg(1), 0}),
                  f.order()};
  inst.graph = orbital_graph(inst.action, {inst.v10, inst.v01});
  return inst;
}

std::pair<Digraph, GeneratedAction> build_xqn(const FiniteField& f, Vertex n) {
  auto inst = build_xqn_instance(f, n);
  return {std::move(inst.graph), std::move(inst.action)};
}

XqnInstance build_xqn_instance(const FiniteField& f, Vertex n) {
  require_xq_field(f);
  if (n < 1) throw Error("build_xqn: n must be >= 1");
  const auto point_action = sl2_action(f);
  auto action = wreath_generators(point_action, n);

  const Vertex m = point_action.domain;
  const Vertex v10 = delta_index(f, {1, 0});
  const Vertex v01 = delta_index(f, {0, 1});
  std::vector<Vertex> alpha_tuple(n, v10);
  std::vector<Vertex> beta_tuple(n, v10);
  beta_tuple[0] = v01;
  const Vertex alpha = tuple_index(alpha_tuple, m);
  const Vertex beta = tuple_index(beta_tuple, m);

  XqnInstance inst{orbital_graph(action, {beta, alpha}), std::move(action), alpha, beta, n};
  return inst;
}

GeneratedAction sym_action(Vertex m) {
  if (m < 1) throw Error("sym_action: m must be >= 1");
  GeneratedAction action;
  action.domain = m;
  for (Vertex i = 0; i < m; ++i) {
    action.labels.push_back({i});
    action.alphabet.push_back(std::to_string(i));
  }
  if (m >= 2) {
    std::vector<Vertex> swap01(m);
    std::vector<Vertex> cycle(m);
    for (Vertex i = 0; i < m; ++i) {
      swap01[i] = i;
      cycle[i] = (i + 1) % m;
    }
    std::swap(swap01[0], swap01[1]);
    action.generators.emplace_back(std::move(swap01));
    action.generators.emplace_back(std::move(cycle));
  }
  return action;
}

GeneratedAction hamming_wreath_action(Vertex m, Vertex n) {
  return wreath_generators(sym_action(m), n);
}

Digraph build_hamming(Vertex m, Vertex n, bool complement) {
  if (m < 2) throw Error("build_hamming: m must be >= 2");
  if (n < 1) throw Error("build_hamming: n must be >= 1");
  if (complement && n != 2) throw Error("build_hamming: the complement is defined for n = 2 only");

  std::uint64_t size = 1;
  for (Vertex i = 0; i < n; ++i) {
    size *= m;
    if (size > static_cast<std::uint64_t>(kMaxDomain))
      throw Error("build_hamming: m^n exceeds the 2^20 size guard");
  }
  const Vertex count = static_cast<Vertex>(size);

  std::vector<std::vector<Vertex>> labels;
  labels.reserve(count);
  for (Vertex v = 0; v < count; ++v) labels.push_back(tuple_of_index(v, m, n));
  std::vector<std::string> alphabet;
  alphabet.reserve(m);
  for (Vertex s = 0; s < m; ++s) alphabet.push_back(std::to_string(s));

  std::vector<VertexPair> arcs;
  if (!complement) {
    for (Vertex v = 0; v < count; ++v) {
      auto tuple = labels[v];
      for (Vertex i = 0; i < n; ++i) {
        const Vertex original = tuple[i];
        for (Vertex s = 0; s < m; ++s) {
          if (s == original) continue;
          tuple[i] = s;
          arcs.emplace_back(v, tuple_index(tuple, m));
        }
        tuple[i] = original;
      }
    }
  } else {
    for (Vertex u = 0; u < count; ++u)
      for (Vertex v = 0; v < count; ++v)
        if (labels[u][0] != labels[v][0] && labels[u][1] != labels[v][1])
          arcs.emplace_back(u, v);
  }
  return Digraph(count, std::move(arcs), std::move(labels), std::move(alphabet));
}

std::pair<Digraph, GeneratedAction> build_paley(const FiniteField& f) {
  if (f.order() % 4 != 3)
    throw Error("build_paley requires q = 3 mod 4, otherwise the arc relation is symmetric");
  const std::int64_t q = f.order();
  const Vertex count = static_cast<Vertex>(q);

  std::vector<VertexPair> arcs;
  for (std::int64_t a = 0; a < q; ++a)
    for (std::int64_t b = 0; b < q; ++b)
      if (a != b && f.is_square(f.sub(b, a)))
        arcs.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));

  GeneratedAction action;
  action.domain = count;
  for (Vertex v = 0; v < count; ++v) {
    action.labels.push_back({v});
    action.alphabet.push_back(std::to_string(v));
  }
  const std::int64_t g2 = f.mul(f.primitive_root(), f.primitive_root());
  std::vector<Vertex> translate(count), scale(count);
  for (std::int64_t a = 0; a < q; ++a) {
    translate[a] = static_cast<Vertex>(f.add(a, 1));
    scale[a] = static_cast<Vertex>(f.mul(a, g2));
  }
  action.generators.emplace_back(std::move(translate));
  action.generators.emplace_back(std::move(scale));

  Digraph graph(count, std::move(arcs), action.labels, action.alphabet);
  return {std::move(graph), std::move(action)};
}

GeneratedAction paley_translation_action(const FiniteField& f) {
  const std::int64_t q = f.order();
  const Vertex count = static_cast<Vertex>(q);
  GeneratedAction action;
  action.domain = count;
  for (Vertex v = 0; v < count; ++v) {
    action.labels.push_back({v});
    action.alphabet.push_back(std::to_string(v));
  }
  for (std::int64_t t : f.additive_basis()) {
    std::vector<Vertex> images(count);
    for (std::int64_t a = 0; a < q; ++a) images[a] = static_cast<Vertex>(f.add(a, t));
    action.generators.emplace_back(std::move(images));
  }
  return action;
}

}  // namespace symdig
