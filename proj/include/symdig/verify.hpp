#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "symdig/constructions.hpp"
#include "symdig/digraph.hpp"
#include "symdig/finfield.hpp"
#include "symdig/permaction.hpp"

namespace symdig {

inline constexpr std::uint64_t kDefaultSeed = 0x5EED;
/// Pair scans are exhaustive up to this many pairs, sampled above it.
inline constexpr std::uint64_t kFullScanCap = 1'000'000;
inline constexpr std::size_t kSampleSize = 100'000;
inline constexpr std::uint64_t kDefaultEnumCap = 1'000'000;

/// One verified property: what was checked, what was measured, what was
/// expected. Vacuous records pass on an empty set and carry a warning.
struct ClaimRecord {
  std::string id;
  std::string anchor;  // the property the record checks, as a formula
  bool pass = false;
  std::string measured;
  std::string expected;
  bool vacuous = false;
  double millis = 0.0;
};

struct InstanceDesc {
  std::string family;
  std::int64_t q = -1;
  std::int64_t m = -1;
  std::int64_t n = -1;
};

struct PropertyReport {
  InstanceDesc instance;
  std::uint64_t seed = kDefaultSeed;
  std::vector<ClaimRecord> claims;
  bool pass = false;

  /// Recomputes the overall flag: pass iff every record passes.
  void finalize();
};

/// Canonical JSON form of a report. Deterministic: fixed key order, and the
/// per-claim wall times are emitted as 0 unless with_timings is set.
nlohmann::ordered_json report_json(const PropertyReport& report, bool with_timings = false);

/// Two records: the arcs form a single pair-orbit of the action, and the
/// common-out-neighbour distance-2 set forms a single pair-orbit (vacuous
/// pass when that set is empty).
std::vector<ClaimRecord> check_wedge_transitive(const Digraph& g, const GeneratedAction& action,
                                                const std::string& id_prefix = "");

/// Every generator preserves the Hamming distance of every vertex pair.
/// Full scan when the pair count is within scan_cap, otherwise a seeded
/// sample whose size is recorded in the measurement.
ClaimRecord check_hamming_preserved(const GeneratedAction& action,
                                    std::uint64_t seed = kDefaultSeed,
                                    std::uint64_t scan_cap = kFullScanCap);

/// The ten structural claims about the orbital digraph on the class domain
/// (vertex count, valencies, the four distinguished neighbourhoods, the
/// unique non-neighbour, the empty common-out-neighbour set, the arc
/// reversing vertex map, the centre quotient, the rot90 neighbourhood map).
std::vector<ClaimRecord> xq_claim_records(const XqInstance& inst);
PropertyReport check_xq_claims(const FiniteField& f);

/// The seven claims about the stabilizer tournament structure of the
/// orbital digraph (induced tournaments, neighbour counts, the *-pairing,
/// vertex count, the induced directed 4-cycles, the unique involution).
PropertyReport check_proposition_claims(const FiniteField& f,
                                        std::uint64_t enum_cap = kDefaultEnumCap,
                                        std::uint64_t seed = kDefaultSeed);

/// Tournament property, regularity, arc-transitivity of the affine square
/// action, regularity of the translation subgroup.
PropertyReport check_paley_claims(const FiniteField& f,
                                  std::uint64_t enum_cap = kDefaultEnumCap);

/// The wreath-power suite: transitivity on arcs and on both distance-2
/// sets, arc and distance-2 Hamming profiles, the in-neighbourhood block
/// union at the base vertex, the coordinate-wise arc-reversing isomorphism.
/// Delegates to check_xq_claims when n = 1.
PropertyReport check_xqn_claims(const FiniteField& f, Vertex n,
                                std::uint64_t seed = kDefaultSeed);

/// Hamming family suite: wedge transitivity under the full wreath product
/// plus Hamming-distance preservation; for the complement also the
/// distance-1 profile of the common-out-neighbour set.
PropertyReport check_hamming_claims(Vertex m, Vertex n, bool complement,
                                    std::uint64_t seed = kDefaultSeed,
                                    std::uint64_t scan_cap = kFullScanCap);

}  // namespace symdig
