#include "symdig/verify.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <set>
#include <sstream>

namespace symdig {

namespace {

template <typename Fn>
ClaimRecord timed_claim(std::string id, std::string anchor, Fn&& fill) {
  ClaimRecord rec;
  rec.id = std::move(id);
  rec.anchor = std::move(anchor);
  const auto start = std::chrono::steady_clock::now();
  fill(rec);
  rec.millis =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rec;
}

std::string size_str(std::size_t n) { return std::to_string(n); }

bool same_set(std::vector<Vertex> a, std::vector<Vertex> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

std::size_t count_in(const std::vector<Vertex>& sorted_set, const std::vector<Vertex>& items) {
  std::size_t count = 0;
  for (Vertex x : items)
    if (std::binary_search(sorted_set.begin(), sorted_set.end(), x)) ++count;
  return count;
}

// Hamming distance profile of a pair set, as the sorted set of distances.
std::set<Vertex> distance_profile(const Digraph& g, const std::vector<VertexPair>& pairs) {
  std::set<Vertex> profile;
  for (const auto& [u, v] : pairs) profile.insert(g.hamming_dist(u, v));
  return profile;
}

std::string profile_str(const std::set<Vertex>& profile) {
  std::string out = "{";
  for (auto it = profile.begin(); it != profile.end(); ++it) {
    if (it != profile.begin()) out += ",";
    out += std::to_string(*it);
  }
  return out + "}";
}

std::size_t count_pair_orbits(const GeneratedAction& action,
                              const std::vector<VertexPair>& pairs) {
  std::set<VertexPair> remaining(pairs.begin(), pairs.end());
  std::size_t orbits = 0;
  while (!remaining.empty()) {
    ++orbits;
    for (const auto& p : pair_orbit(action, *remaining.begin())) remaining.erase(p);
  }
  return orbits;
}

}  // namespace

void PropertyReport::finalize() {
  pass = true;
  for (const auto& rec : claims) pass = pass && rec.pass;
}

nlohmann::ordered_json report_json(const PropertyReport& report, bool with_timings) {
  nlohmann::ordered_json j;
  const auto param = [](std::int64_t v) {
    return v < 0 ? nlohmann::ordered_json(nullptr) : nlohmann::ordered_json(v);
  };
  j["instance"] = {{"family", report.instance.family},
                   {"q", param(report.instance.q)},
                   {"m", param(report.instance.m)},
                   {"n", param(report.instance.n)}};
  j["seed"] = report.seed;
  j["claims"] = nlohmann::ordered_json::array();
  for (const auto& rec : report.claims) {
    nlohmann::ordered_json c;
    c["id"] = rec.id;
    c["anchor"] = rec.anchor;
    c["pass"] = rec.pass;
    c["measured"] = rec.vacuous ? rec.measured + " (vacuous; warning)" : rec.measured;
    c["expected"] = rec.expected;
    c["millis"] = with_timings ? nlohmann::ordered_json(rec.millis) : nlohmann::ordered_json(0);
    j["claims"].push_back(std::move(c));
  }
  j["pass"] = report.pass;
  return j;
}

std::vector<ClaimRecord> check_wedge_transitive(const Digraph& g, const GeneratedAction& action,
                                                const std::string& id_prefix) {
  if (action.domain != g.vertex_count())
    throw Error("check_wedge_transitive: action domain differs from the vertex set");

  std::vector<ClaimRecord> records;
  records.push_back(timed_claim(
      id_prefix + "arc-transitive", "arc set is one orbit of the group", [&](ClaimRecord& rec) {
        const auto check = is_transitive_on_pairs(action, g.arcs());
        rec.pass = check.transitive;
        rec.vacuous = check.vacuous;
        rec.measured = size_str(g.arc_count()) + " arcs, single orbit: " +
                       (check.transitive ? "yes" : "no");
        rec.expected = "single orbit";
      }));
  records.push_back(timed_claim(
      id_prefix + "a2plus-transitive",
      "non-adjacent pairs with a common out-neighbour form one orbit", [&](ClaimRecord& rec) {
        const auto plus = a2_sets(g).plus.pairs;
        const auto check = is_transitive_on_pairs(action, plus);
        rec.pass = check.transitive;
        rec.vacuous = check.vacuous;
        rec.measured = size_str(plus.size()) + " pairs, single orbit: " +
                       (check.transitive ? "yes" : "no");
        rec.expected = "single orbit (vacuous on the empty set)";
      }));
  return records;
}

ClaimRecord check_hamming_preserved(const GeneratedAction& action, std::uint64_t seed,
                                    std::uint64_t scan_cap) {
  if (!action.labeled()) throw Error("check_hamming_preserved: action domain is unlabeled");
  return timed_claim(
      "hamming-preserved", "every generator preserves the Hamming distance of every pair",
      [&](ClaimRecord& rec) {
        const Vertex n = action.domain;
        const auto& labels = action.labels;
        const auto dist = [&](Vertex u, Vertex v) {
          Vertex d = 0;
          for (std::size_t i = 0; i < labels[u].size(); ++i)
            if (labels[u][i] != labels[v][i]) ++d;
          return d;
        };

        const std::uint64_t total_pairs = std::uint64_t{n} * (n - 1) / 2;
        std::uint64_t violations = 0;
        std::uint64_t checked = 0;
        const bool full = total_pairs <= scan_cap;

        if (full) {
          std::int64_t bad = 0;
#pragma omp parallel for schedule(dynamic, 8) reduction(+ : bad)
          for (Vertex u = 0; u < n; ++u) {
            for (Vertex v = u + 1; v < n; ++v) {
              const Vertex d = dist(u, v);
              for (const auto& g : action.generators)
                if (dist(g(u), g(v)) != d) ++bad;
            }
          }
          violations = static_cast<std::uint64_t>(bad);
          checked = total_pairs;
        } else {
          std::mt19937_64 rng(seed);
          std::uniform_int_distribution<Vertex> pick(0, n - 1);
          for (std::size_t i = 0; i < kSampleSize; ++i) {
            Vertex u = pick(rng), v = pick(rng);
            if (u == v) continue;
            ++checked;
            const Vertex d = dist(u, v);
            for (const auto& g : action.generators)
              if (dist(g(u), g(v)) != d) ++violations;
          }
        }

        rec.pass = violations == 0;
        std::ostringstream measured;
        measured << (full ? "full scan of " : "seeded sample of ") << checked << " pairs x "
                 << action.generators.size() << " generators, " << violations << " violations";
        rec.measured = measured.str();
        rec.expected = "0 violations";
      });
}

std::vector<ClaimRecord> xq_claim_records(const XqInstance& inst) {
  const Digraph& g = inst.graph;
  const std::int64_t q = inst.q;
  std::vector<ClaimRecord> records;

  records.push_back(timed_claim("xq.vertex-count", "|V| = 2(q+1)", [&](ClaimRecord& rec) {
    rec.measured = size_str(g.vertex_count());
    rec.expected = size_str(2 * (q + 1));
    rec.pass = g.vertex_count() == 2 * (q + 1);
  }));

  records.push_back(
      timed_claim("xq.valency", "in- and out-valency q at every vertex", [&](ClaimRecord& rec) {
        bool ok = true;
        for (Vertex v = 0; v < g.vertex_count(); ++v)
          ok = ok && g.out_neighbors(v).size() == static_cast<std::size_t>(q) &&
               g.in_neighbors(v).size() == static_cast<std::size_t>(q);
        rec.pass = ok;
        rec.measured = ok ? "all valencies " + std::to_string(q) : "irregular valencies";
        rec.expected = "in = out = " + std::to_string(q);
      }));

  records.push_back(timed_claim("xq.out-neighbourhood",
                                "out-neighbours of [1,0] are the classes [a,1]",
                                [&](ClaimRecord& rec) {
                                  std::vector<Vertex> expected(q);
                                  for (std::int64_t a = 0; a < q; ++a)
                                    expected[a] = static_cast<Vertex>(a);
                                  rec.pass = g.out_neighbors(inst.v10) == expected;
                                  rec.measured = size_str(g.out_neighbors(inst.v10).size()) +
                                                 " out-neighbours, block match: " +
                                                 (rec.pass ? "yes" : "no");
                                  rec.expected = "the q classes [a,1]";
                                }));

  records.push_back(timed_claim("xq.in-neighbourhood",
                                "in-neighbours of [1,0] are the classes [a,-1]",
                                [&](ClaimRecord& rec) {
                                  std::vector<Vertex> expected(q);
                                  for (std::int64_t a = 0; a < q; ++a)
                                    expected[a] = static_cast<Vertex>(q + a);
                                  rec.pass = g.in_neighbors(inst.v10) == expected;
                                  rec.measured = size_str(g.in_neighbors(inst.v10).size()) +
                                                 " in-neighbours, block match: " +
                                                 (rec.pass ? "yes" : "no");
                                  rec.expected = "the q classes [a,-1]";
                                }));

  records.push_back(timed_claim(
      "xq.unique-non-neighbour", "the unique non-neighbour of v is v^z", [&](ClaimRecord& rec) {
        bool ok = true;
        for (Vertex v = 0; v < g.vertex_count() && ok; ++v) {
          std::vector<Vertex> non;
          for (Vertex u = 0; u < g.vertex_count(); ++u)
            if (u != v && !g.adjacent(u, v)) non.push_back(u);
          ok = non.size() == 1 && non[0] == inst.z(v);
        }
        rec.pass = ok;
        rec.measured = ok ? "one non-neighbour per vertex, equal to v^z" : "mismatch";
        rec.expected = "exactly v^z";
      }));

  records.push_back(timed_claim(
      "xq.z-exchange", "out(v) = in(v^z) and in(v) = out(v^z)", [&](ClaimRecord& rec) {
        bool ok = true;
        for (Vertex v = 0; v < g.vertex_count() && ok; ++v) {
          const Vertex vz = inst.z(v);
          ok = g.out_neighbors(v) == g.in_neighbors(vz) &&
               g.in_neighbors(v) == g.out_neighbors(vz);
        }
        rec.pass = ok;
        rec.measured = ok ? "all vertices" : "mismatch";
        rec.expected = "equality for every vertex";
      }));

  records.push_back(timed_claim("xq.a2plus-empty",
                                "no non-adjacent pair shares an out-neighbour",
                                [&](ClaimRecord& rec) {
                                  const auto plus = a2_sets(g).plus.pairs;
                                  rec.pass = plus.empty();
                                  rec.measured = size_str(plus.size()) + " pairs";
                                  rec.expected = "0 pairs";
                                }));

  records.push_back(timed_claim("xq.opp-isomorphism",
                                "v -> v^o is an isomorphism onto the arc-reversed digraph",
                                [&](ClaimRecord& rec) {
                                  rec.pass =
                                      check_map_is_isomorphism(g, g.opp(), inst.o_map.images());
                                  rec.measured = rec.pass ? "witness map verified" : "map fails";
                                  rec.expected = "arc-preserving bijection";
                                }));

  records.push_back(timed_claim(
      "xq.centre-quotient", "the quotient by <z> is complete on q+1 vertices",
      [&](ClaimRecord& rec) {
        GeneratedAction centre;
        centre.domain = g.vertex_count();
        centre.generators.push_back(inst.z);
        const Digraph quotient = normal_quotient(g, centre);
        bool complete = quotient.vertex_count() == q + 1;
        for (Vertex u = 0; u < quotient.vertex_count() && complete; ++u)
          for (Vertex v = 0; v < quotient.vertex_count() && complete; ++v)
            if (u != v) complete = quotient.has_arc(u, v);
        rec.pass = complete;
        rec.measured = size_str(quotient.vertex_count()) + " vertices, " +
                       size_str(quotient.arc_count()) + " arcs";
        rec.expected = size_str(q + 1) + " vertices, " + size_str((q + 1) * q) + " arcs";
      }));

  records.push_back(timed_claim(
      "xq.rot90-in-neighbourhoods", "(0 -1; 1 0) carries in([0,1]) onto in([1,0])",
      [&](ClaimRecord& rec) {
        std::vector<Vertex> image;
        for (Vertex u : g.in_neighbors(inst.v01)) image.push_back(inst.rot90(u));
        rec.pass = same_set(image, g.in_neighbors(inst.v10));
        rec.measured = rec.pass ? "image equals in([1,0])" : "image differs";
        rec.expected = "set equality";
      }));

  return records;
}

PropertyReport check_xq_claims(const FiniteField& f) {
  const auto inst = build_xq_instance(f);
  PropertyReport report;
  report.instance = {"xq", f.order(), -1, -1};
  report.claims = xq_claim_records(inst);
  report.finalize();
  return report;
}

PropertyReport check_proposition_claims(const FiniteField& f, std::uint64_t enum_cap,
                                        std::uint64_t seed) {
  const auto inst = build_xq_instance(f);
  const Digraph& g = inst.graph;
  const std::int64_t q = inst.q;
  const std::int64_t half = (q - 1) / 2;
  const auto& s_out = g.out_neighbors(inst.v10);
  const auto& s_in = g.in_neighbors(inst.v10);

  const auto induced_arcs = [&](const std::vector<Vertex>& set) {
    std::vector<VertexPair> arcs;
    for (Vertex u : set)
      for (Vertex v : set)
        if (u != v && g.has_arc(u, v)) arcs.emplace_back(u, v);
    std::sort(arcs.begin(), arcs.end());
    return arcs;
  };

  PropertyReport report;
  report.instance = {"proposition", q, -1, -1};
  report.seed = seed;

  report.claims.push_back(timed_claim(
      "prop.c1",
      "the induced digraph on out([1,0]) is a stabilizer-arc-transitive tournament of valency "
      "(q-1)/2",
      [&](ClaimRecord& rec) {
        bool tournament = true;
        for (Vertex u : s_out)
          for (Vertex v : s_out)
            if (u < v) tournament = tournament && (g.has_arc(u, v) != g.has_arc(v, u));
        bool regular = true;
        for (Vertex u : s_out) {
          const std::size_t ins = count_in(s_out, g.in_neighbors(u));
          const std::size_t outs = count_in(s_out, g.out_neighbors(u));
          regular = regular && ins == static_cast<std::size_t>(half) &&
                    outs == static_cast<std::size_t>(half);
        }
        const auto borel = borel_stabilizer_generators(f);
        const auto arcs = induced_arcs(s_out);
        const auto transitive = is_transitive_on_pairs(borel, arcs);
        rec.pass = tournament && regular && transitive.transitive;
        std::ostringstream m;
        m << "tournament: " << (tournament ? "yes" : "no") << ", valency " << half << ": "
          << (regular ? "yes" : "no") << ", stabilizer arc-transitive: "
          << (transitive.transitive ? "yes" : "no");
        rec.measured = m.str();
        rec.expected = "tournament, regular of valency " + std::to_string(half) +
                       ", arcs one stabilizer orbit";
      }));

  report.claims.push_back(timed_claim(
      "prop.c2", "each v in out([1,0]) has (q-1)/2 in-neighbours in out([1,0]) and in in([1,0])",
      [&](ClaimRecord& rec) {
        bool ok = true;
        for (Vertex u : s_out) {
          ok = ok && count_in(s_out, g.in_neighbors(u)) == static_cast<std::size_t>(half) &&
               count_in(s_in, g.in_neighbors(u)) == static_cast<std::size_t>(half);
        }
        rec.pass = ok;
        rec.measured = ok ? "both counts " + std::to_string(half) + " for all" : "mismatch";
        rec.expected = std::to_string(half) + " and " + std::to_string(half);
      }));

  report.claims.push_back(
      timed_claim("prop.c3", "in([1,0]^z) = out([1,0])", [&](ClaimRecord& rec) {
        rec.pass = g.in_neighbors(inst.z(inst.v10)) == s_out;
        rec.measured = rec.pass ? "equal" : "differ";
        rec.expected = "set equality";
      }));

  report.claims.push_back(
      timed_claim("prop.c4", "out([1,0]^z) = in([1,0])", [&](ClaimRecord& rec) {
        rec.pass = g.out_neighbors(inst.z(inst.v10)) == s_in;
        rec.measured = rec.pass ? "equal" : "differ";
        rec.expected = "set equality";
      }));

  report.claims.push_back(timed_claim("prop.c5", "|V| = 2(1+q)", [&](ClaimRecord& rec) {
    rec.measured = size_str(g.vertex_count());
    rec.expected = size_str(2 * (1 + q));
    rec.pass = g.vertex_count() == 2 * (1 + q);
  }));

  report.claims.push_back(timed_claim(
      "prop.c6", "for v' outside {v, v^z} the vertices v, v^z, v', v'^z induce a directed 4-cycle",
      [&](ClaimRecord& rec) {
        const auto four_cycle = [&](Vertex v, Vertex w) {
          const Vertex quad[4] = {v, inst.z(v), w, inst.z(w)};
          // Exactly four induced arcs, each vertex with in- and out-degree
          // one, and the successor walk closes after visiting all four.
          Vertex succ[4];
          for (int i = 0; i < 4; ++i) {
            int outs = 0, ins = 0;
            for (int j = 0; j < 4; ++j) {
              if (i == j) continue;
              if (g.has_arc(quad[i], quad[j])) {
                succ[i] = static_cast<Vertex>(j);
                ++outs;
              }
              if (g.has_arc(quad[j], quad[i])) ++ins;
            }
            if (outs != 1 || ins != 1) return false;
          }
          std::set<Vertex> seen;
          Vertex at = 0;
          for (int step = 0; step < 4; ++step) {
            seen.insert(at);
            at = succ[at];
          }
          return at == 0 && seen.size() == 4;
        };

        const std::uint64_t total =
            std::uint64_t{g.vertex_count()} * (g.vertex_count() - 2);
        bool ok = true;
        std::uint64_t checked = 0;
        if (total <= kFullScanCap) {
          for (Vertex v = 0; v < g.vertex_count(); ++v)
            for (Vertex w = 0; w < g.vertex_count(); ++w) {
              if (w == v || w == inst.z(v)) continue;
              ++checked;
              ok = ok && four_cycle(v, w);
            }
        } else {
          std::mt19937_64 rng(seed);
          std::uniform_int_distribution<Vertex> pick(0, g.vertex_count() - 1);
          for (std::size_t i = 0; i < kSampleSize; ++i) {
            const Vertex v = pick(rng), w = pick(rng);
            if (w == v || w == inst.z(v)) continue;
            ++checked;
            ok = ok && four_cycle(v, w);
          }
        }
        rec.pass = ok;
        rec.measured = size_str(checked) + " quadruples checked, all 4-cycles: " +
                       (ok ? "yes" : "no");
        rec.expected = "directed 4-cycle for every choice";
      }));

  report.claims.push_back(timed_claim(
      "prop.c7", "the acting group contains exactly one element of order 2",
      [&](ClaimRecord& rec) {
        const auto elements = group_enumerate(inst.action, enum_cap);
        std::size_t involutions = 0;
        for (const auto& h : elements)
          if (!h.is_identity() && compose(h, h).is_identity()) ++involutions;
        rec.pass = involutions == 1;
        rec.measured = size_str(elements.size()) + " elements, " + size_str(involutions) +
                       " involution(s)";
        rec.expected = size_str(static_cast<std::size_t>(q) * (q * q - 1)) +
                       " elements, 1 involution";
        rec.pass = rec.pass && elements.size() == static_cast<std::size_t>(q) * (q * q - 1);
      }));

  report.finalize();
  return report;
}

PropertyReport check_paley_claims(const FiniteField& f, std::uint64_t enum_cap) {
  auto [g, affine] = build_paley(f);
  const std::int64_t q = f.order();
  const std::int64_t half = (q - 1) / 2;

  PropertyReport report;
  report.instance = {"paley", q, -1, -1};

  report.claims.push_back(timed_claim(
      "paley.tournament", "every vertex pair is joined by exactly one arc",
      [&](ClaimRecord& rec) {
        bool ok = true;
        for (Vertex u = 0; u < g.vertex_count(); ++u)
          for (Vertex v = u + 1; v < g.vertex_count(); ++v)
            ok = ok && (g.has_arc(u, v) != g.has_arc(v, u));
        rec.pass = ok;
        rec.measured = ok ? "tournament" : "not a tournament";
        rec.expected = "tournament";
      }));

  report.claims.push_back(
      timed_claim("paley.valency", "every vertex has (q-1)/2 in- and out-neighbours",
                  [&](ClaimRecord& rec) {
                    bool ok = true;
                    for (Vertex v = 0; v < g.vertex_count(); ++v)
                      ok = ok && g.out_neighbors(v).size() == static_cast<std::size_t>(half) &&
                           g.in_neighbors(v).size() == static_cast<std::size_t>(half);
                    rec.pass = ok;
                    rec.measured = ok ? "all valencies " + std::to_string(half) : "irregular";
                    rec.expected = std::to_string(half);
                  }));

  report.claims.push_back(timed_claim(
      "paley.affine-arc-transitive",
      "the affine square-scaling group has order q(q-1)/2 and is arc-transitive",
      [&](ClaimRecord& rec) {
        const auto elements = group_enumerate(affine, enum_cap);
        const auto transitive = is_transitive_on_pairs(affine, g.arcs());
        const std::size_t expected_order = static_cast<std::size_t>(q) * half;
        rec.pass = transitive.transitive && elements.size() == expected_order;
        rec.measured = size_str(elements.size()) + " elements, arc-transitive: " +
                       (transitive.transitive ? "yes" : "no");
        rec.expected = size_str(expected_order) + " elements, arc-transitive";
      }));

  report.claims.push_back(timed_claim(
      "paley.translations-regular", "the translation subgroup acts regularly on the vertices",
      [&](ClaimRecord& rec) {
        const auto translations = paley_translation_action(f);
        const auto elements = group_enumerate(translations, enum_cap);
        const bool transitive = orbit(translations, 0).size() == g.vertex_count();
        rec.pass = transitive && elements.size() == g.vertex_count();
        rec.measured = size_str(elements.size()) + " translations, transitive: " +
                       (transitive ? "yes" : "no");
        rec.expected = size_str(g.vertex_count()) + " elements acting transitively";
      }));

  report.finalize();
  return report;
}

PropertyReport check_xqn_claims(const FiniteField& f, Vertex n, std::uint64_t seed) {
  if (n == 1) {
    auto report = check_xq_claims(f);
    report.instance = {"xqn", f.order(), -1, 1};
    return report;
  }

  const auto inst = build_xqn_instance(f, n);
  const Digraph& g = inst.graph;
  const GeneratedAction& w = inst.action;
  const std::int64_t q = f.order();

  PropertyReport report;
  report.instance = {"xqn", q, -1, n};
  report.seed = seed;

  const auto a2 = a2_sets(g);

  for (auto& rec : check_wedge_transitive(g, w, "xqn.")) report.claims.push_back(std::move(rec));

  report.claims.push_back(timed_claim(
      "xqn.a2plus-hamming",
      "non-adjacent pairs with a common out-neighbour lie at Hamming distance 2",
      [&](ClaimRecord& rec) {
        const auto profile = distance_profile(g, a2.plus.pairs);
        rec.pass = profile == std::set<Vertex>{2};
        rec.measured = size_str(a2.plus.pairs.size()) + " pairs, distances " +
                       profile_str(profile);
        rec.expected = "distances {2}";
      }));

  report.claims.push_back(
      timed_claim("xqn.arcs-hamming", "adjacent vertices lie at Hamming distance 1",
                  [&](ClaimRecord& rec) {
                    const auto profile = distance_profile(g, g.arcs());
                    rec.pass = profile == std::set<Vertex>{1};
                    rec.measured = "distances " + profile_str(profile);
                    rec.expected = "distances {1}";
                  }));

  report.claims.push_back(timed_claim(
      "xqn.in-neighbourhood", "in(alpha) is the union of the n one-coordinate blocks of size q",
      [&](ClaimRecord& rec) {
        const auto borel = borel_stabilizer_generators(f);
        const Vertex v01 = delta_index(f, {0, 1});
        const auto block = orbit(borel, v01);  // the q classes [a,1]
        const Vertex m = static_cast<Vertex>(2 * (q + 1));
        std::vector<Vertex> expected;
        for (Vertex i = 0; i < n; ++i) {
          auto tuple = g.label(inst.alpha);
          for (Vertex b : block) {
            tuple[i] = b;
            expected.push_back(tuple_index(tuple, m));
          }
        }
        rec.pass = same_set(g.in_neighbors(inst.alpha), expected) &&
                   g.in_neighbors(inst.alpha).size() == static_cast<std::size_t>(n) * q;
        rec.measured = size_str(g.in_neighbors(inst.alpha).size()) +
                       " in-neighbours, block union match: " + (rec.pass ? "yes" : "no");
        rec.expected = size_str(static_cast<std::size_t>(n) * q) +
                       " in-neighbours in n blocks of size q";
      }));

  report.claims.push_back(timed_claim(
      "xqn.opp-isomorphism",
      "coordinate-wise v -> v^o is an isomorphism onto the arc-reversed digraph",
      [&](ClaimRecord& rec) {
        const auto o_map = delta_perm(f, matrix_swap(f));
        const Vertex m = static_cast<Vertex>(2 * (q + 1));
        std::vector<Vertex> map(g.vertex_count());
        for (Vertex v = 0; v < g.vertex_count(); ++v) {
          auto tuple = g.label(v);
          for (auto& coord : tuple) coord = o_map(coord);
          map[v] = tuple_index(tuple, m);
        }
        rec.pass = check_map_is_isomorphism(g, g.opp(), map);
        rec.measured = rec.pass ? "witness map verified" : "map fails";
        rec.expected = "arc-preserving bijection";
      }));

  report.claims.push_back(timed_claim(
      "xqn.a2minus-transitive",
      "non-adjacent pairs with a common in-neighbour form one orbit", [&](ClaimRecord& rec) {
        const auto check = is_transitive_on_pairs(w, a2.minus.pairs);
        rec.pass = check.transitive;
        rec.vacuous = check.vacuous;
        rec.measured = size_str(a2.minus.pairs.size()) + " pairs, single orbit: " +
                       (check.transitive ? "yes" : "no");
        rec.expected = "single orbit";
      }));

  report.claims.push_back(timed_claim(
      "xqn.distance2-orbit-counts", "orbit counts on the three distance-2 pair sets",
      [&](ClaimRecord& rec) {
        std::ostringstream m;
        m << "a2plus: " << count_pair_orbits(w, a2.plus.pairs)
          << ", a2mixed: " << count_pair_orbits(w, a2.mixed.pairs)
          << ", a2minus: " << count_pair_orbits(w, a2.minus.pairs);
        rec.measured = m.str();
        rec.expected = "informational";
        rec.pass = true;
      }));

  report.finalize();
  return report;
}

PropertyReport check_hamming_claims(Vertex m, Vertex n, bool complement, std::uint64_t seed,
                                    std::uint64_t scan_cap) {
  const Digraph g = build_hamming(m, n, complement);
  const GeneratedAction w = hamming_wreath_action(m, n);

  PropertyReport report;
  report.instance = {complement ? "hamming-complement" : "hamming", -1, m, n};
  report.seed = seed;

  const std::string prefix = complement ? "hamming-complement." : "hamming.";
  for (auto& rec : check_wedge_transitive(g, w, prefix)) report.claims.push_back(std::move(rec));
  report.claims.push_back(check_hamming_preserved(w, seed, scan_cap));

  if (complement) {
    report.claims.push_back(timed_claim(
        prefix + "a2plus-hamming",
        "non-adjacent pairs with a common out-neighbour lie at Hamming distance 1",
        [&](ClaimRecord& rec) {
          const auto plus = a2_sets(g).plus.pairs;
          const auto profile = distance_profile(g, plus);
          rec.pass = profile == std::set<Vertex>{1};
          rec.measured = size_str(plus.size()) + " pairs, distances " + profile_str(profile);
          rec.expected = "distances {1}";
        }));
  }

  report.finalize();
  return report;
}

}  // namespace symdig
