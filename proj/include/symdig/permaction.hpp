#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "symdig/base.hpp"

namespace symdig {

/// A permutation of {0, ..., n-1} stored as its image array.
/// Composition follows the right-action convention x^(gh) = (x^g)^h.
class Permutation {
 public:
  explicit Permutation(std::vector<Vertex> images);
  static Permutation identity(Vertex n);

  Vertex degree() const { return static_cast<Vertex>(images_.size()); }
  Vertex operator()(Vertex x) const { return images_[x]; }
  const std::vector<Vertex>& images() const { return images_; }

  Permutation inverse() const;
  bool is_identity() const;

  bool operator==(const Permutation& o) const { return images_ == o.images_; }
  bool operator<(const Permutation& o) const { return images_ < o.images_; }

 private:
  std::vector<Vertex> images_;
};

/// gh with x^(gh) = (x^g)^h.
Permutation compose(const Permutation& g, const Permutation& h);

/// A finite domain together with generator permutations. Optionally each
/// domain point carries a tuple label over a named alphabet (a single
/// symbol for point actions, an n-tuple for product actions).
struct GeneratedAction {
  Vertex domain = 0;
  std::vector<Permutation> generators;
  std::vector<std::vector<Vertex>> labels;  // empty when unlabeled
  std::vector<std::string> alphabet;

  bool labeled() const { return !labels.empty(); }
  std::string label_string(Vertex v) const;
  void validate() const;
};

/// BFS closure of a point under the generators, ascending order.
std::vector<Vertex> orbit(const GeneratedAction& action, Vertex point);

/// Orbits of the action on its whole domain, as blocks sorted by least
/// member (and each block ascending).
std::vector<std::vector<Vertex>> orbit_partition(const GeneratedAction& action);

/// Orbit of an ordered pair under the diagonal action, sorted.
std::vector<VertexPair> pair_orbit(const GeneratedAction& action, VertexPair seed);

struct TransitivityCheck {
  bool transitive = false;
  bool vacuous = false;  // set when the tested set was empty
};

/// True iff the orbit of one element of S equals S exactly.
/// An empty S is vacuously transitive and flagged as such.
TransitivityCheck is_transitive_on(const GeneratedAction& action,
                                   const std::vector<Vertex>& points);
TransitivityCheck is_transitive_on_pairs(const GeneratedAction& action,
                                         const std::vector<VertexPair>& pairs);

/// Full BFS enumeration of the generated permutation group.
/// Throws once more than cap elements have been found.
std::vector<Permutation> group_enumerate(const GeneratedAction& action, std::uint64_t cap);

struct OrbitDuality {
  std::size_t eta_under_stab_nu = 0;
  std::size_t nu_under_stab_eta = 0;
  bool equal = false;
};

/// Compares |eta^{G_nu}| with |nu^{G_eta}|, stabilizers obtained by
/// filtering the enumerated group.
OrbitDuality orbit_length_duality(const GeneratedAction& action, Vertex eta, Vertex nu,
                                  std::uint64_t cap);
bool orbit_length_duality_check(const GeneratedAction& action, Vertex eta, Vertex nu,
                                std::uint64_t cap);

/// True iff applying every generator to every pair maps the set onto itself.
bool pair_set_invariant(const std::vector<Permutation>& generators,
                        const std::vector<VertexPair>& pairs);

// --- wreath products acting on tuple domains -------------------------------

/// An element sigma(h_1, ..., h_n) of H wr Sym(n): sigma permutes the n
/// coordinates, the base tuple acts coordinate-wise.
struct WreathElement {
  Permutation top;                // on {0, ..., n-1}
  std::vector<Permutation> base;  // each on the point domain
};

/// Coordinate i of the image is base[i] applied to t[i^(top^-1)].
std::vector<Vertex> wreath_apply(const WreathElement& g, const std::vector<Vertex>& tuple);

WreathElement wreath_compose(const WreathElement& g, const WreathElement& h);

/// Mixed-radix index of a tuple over an m-point alphabet, coordinate 0
/// most significant.
Vertex tuple_index(const std::vector<Vertex>& tuple, Vertex m);
std::vector<Vertex> tuple_of_index(Vertex index, Vertex m, Vertex n);

/// The action of H wr Sym(n) on tuples, generated by the point-action
/// generators in coordinate 0 plus the adjacent coordinate transpositions.
/// Domain points are labeled with their tuples.
GeneratedAction wreath_generators(const GeneratedAction& point_action, Vertex n);

}  // namespace symdig
