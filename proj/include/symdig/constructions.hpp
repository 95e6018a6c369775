#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "symdig/base.hpp"
#include "symdig/digraph.hpp"
#include "symdig/finfield.hpp"
#include "symdig/permaction.hpp"

namespace symdig {

/// A 2x2 matrix over a finite field, row-major (a b; c d), with its
/// determinant cached at construction.
struct Matrix2 {
  std::int64_t a, b, c, d;
  std::int64_t det;
};

Matrix2 matrix2(const FiniteField& f, std::int64_t a, std::int64_t b, std::int64_t c,
                std::int64_t d);
Matrix2 matrix_mul(const FiniteField& f, const Matrix2& m1, const Matrix2& m2);

Matrix2 matrix_identity(const FiniteField& f);
/// The central involution -I.
Matrix2 matrix_minus_identity(const FiniteField& f);
/// (0 -1; 1 0): carries the in-neighbourhood of [0,1] onto that of [1,0].
Matrix2 matrix_rot90(const FiniteField& f);
/// (0 1; 1 0): induces the arc-reversing vertex map v -> v^o.
Matrix2 matrix_swap(const FiniteField& f);

/// Canonical representative [a, b] of the orbit of a nonzero row vector
/// under scaling by nonzero squares. For q = 3 mod 4 the representatives
/// are exactly [a, 1], [a, -1], [1, 0] and [-1, 0].
struct OrbitClass {
  std::int64_t a = 0, b = 0;
  bool operator==(const OrbitClass&) const = default;
};

/// Requires (a, b) != (0, 0) and q = 3 mod 4.
OrbitClass canonicalize(const FiniteField& f, std::int64_t a, std::int64_t b);

/// The vertex alphabet: all [a,1] by ascending encoding of a, then all
/// [a,-1], then [1,0], [-1,0]. Size 2(q+1). Requires q = 3 mod 4, q >= 7.
std::vector<OrbitClass> delta_domain(const FiniteField& f);
Vertex delta_index(const FiniteField& f, const OrbitClass& cls);
std::string delta_label(const OrbitClass& cls);

/// The permutation of the class domain induced by v -> canonicalize(v * M).
Permutation delta_perm(const FiniteField& f, const Matrix2& m);

/// SL(2,q) acting on the class domain, generated by the upper and lower
/// transvections over the fixed additive basis of the field. The generated
/// group order is validated against q(q^2 - 1) for q <= 11.
GeneratedAction sl2_action(const FiniteField& f);

/// The stabilizer of [1,0]: diag(g^2, g^-2) for the primitive root g plus
/// the lower transvections. Every generator fixes [1,0].
GeneratedAction borel_stabilizer_generators(const FiniteField& f);

/// Digraph on the action domain with arc set the orbit of the seed pair;
/// arcs run from the first seed entry's side to the second's. Labels are
/// inherited from the action.
Digraph orbital_graph(const GeneratedAction& action, VertexPair seed);

/// The SL(2,q)-orbital digraph with seed ([1,0], [0,1]): 2(q+1) vertices,
/// in- and out-valency q, no symmetric arc pairs.
Digraph build_xq(const FiniteField& f);

/// build_xq together with the acting group and the distinguished vertex
/// maps used by the verification suites.
struct XqInstance {
  GeneratedAction action;  // SL(2,q) on the class domain
  Digraph graph;           // the orbital digraph
  Permutation z;           // induced by -I
  Permutation rot90;       // induced by (0 -1; 1 0)
  Permutation o_map;       // induced by (0 1; 1 0)
  Vertex v10, v01, vm10;   // indices of [1,0], [0,1], [-1,0]
  std::int64_t q;
};
XqInstance build_xq_instance(const FiniteField& f);

/// The wreath-power analogue on n-tuples: W = SL(2,q) wr Sym(n) and the
/// orbital digraph of (([0,1],[1,0],...,[1,0]), ([1,0],...,[1,0])).
std::pair<Digraph, GeneratedAction> build_xqn(const FiniteField& f, Vertex n);

struct XqnInstance {
  Digraph graph;
  GeneratedAction action;
  Vertex alpha, beta;  // the seed pair: arcs run beta -> alpha
  Vertex n;
};
XqnInstance build_xqn_instance(const FiniteField& f, Vertex n);

/// Sym(m) acting naturally on m points, labeled 0 .. m-1.
GeneratedAction sym_action(Vertex m);
/// Sym(m) wr Sym(n) on tuples, the full automorphism supply for the
/// Hamming families.
GeneratedAction hamming_wreath_action(Vertex m, Vertex n);

/// Graph on m^n labeled tuples joining tuples at Hamming distance 1, or,
/// for the complement (n = 2 only), at Hamming distance 2.
Digraph build_hamming(Vertex m, Vertex n, bool complement);

/// Tournament on the field elements with an arc a -> b iff b - a is a
/// nonzero square; requires q = 3 mod 4. Returns the tournament together
/// with the affine action generated by a -> a + 1 and a -> g^2 a.
std::pair<Digraph, GeneratedAction> build_paley(const FiniteField& f);

/// The translation action a -> a + t over the additive basis.
GeneratedAction paley_translation_action(const FiniteField& f);

}  // namespace symdig
