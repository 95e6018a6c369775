// Acceptance suite: runs every acceptance criterion, prints one pass/fail
// line per criterion with its wall time, and exits nonzero if any fail.
//
// Usage: acceptance [--cli <path-to-symdig-binary>]
// The determinism criterion shells out to the CLI and needs --cli.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "symdig/constructions.hpp"
#include "symdig/digraph.hpp"
#include "symdig/finfield.hpp"
#include "symdig/io.hpp"
#include "symdig/verify.hpp"

using namespace symdig;

namespace {

std::string g_cli_path;

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;

  void require(bool condition, const std::string& what) {
    if (!condition) {
      pass = false;
      notes.push_back(what);
    }
  }
};

void require_report(Outcome& out, const PropertyReport& report, const std::string& label) {
  for (const auto& rec : report.claims)
    out.require(rec.pass, label + ": claim '" + rec.id + "' failed (measured: " + rec.measured +
                              ", expected: " + rec.expected + ")");
}

const ClaimRecord* find_claim(const PropertyReport& report, const std::string& id) {
  for (const auto& rec : report.claims)
    if (rec.id == id) return &rec;
  return nullptr;
}

// --- criteria ----------------------------------------------------------------

void xq_suite(Outcome& out, std::int64_t p, std::int64_t k) {
  const auto f = FiniteField::make(p, k);
  const std::int64_t q = f.order();
  const std::string label = "q=" + std::to_string(q);
  const auto report = check_xq_claims(f);
  require_report(out, report, label);
  const auto inst = build_xq_instance(f);
  out.require(inst.graph.vertex_count() == 2 * (q + 1),
              label + ": vertex count " + std::to_string(inst.graph.vertex_count()));
  for (Vertex v = 0; v < inst.graph.vertex_count(); ++v) {
    out.require(inst.graph.out_neighbors(v).size() == static_cast<std::size_t>(q) &&
                    inst.graph.in_neighbors(v).size() == static_cast<std::size_t>(q),
                label + ": valency mismatch at vertex " + std::to_string(v));
  }
}

void criterion1(Outcome& out) { xq_suite(out, 7, 1); }

void criterion2(Outcome& out) {
  for (const std::int64_t q : {11, 19}) {
    const auto start = std::chrono::steady_clock::now();
    xq_suite(out, q, 1);
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    out.require(secs < 5.0, "q=" + std::to_string(q) + " suite exceeded 5 s");
  }
}

void criterion3(Outcome& out) { xq_suite(out, 3, 3); }  // q = 27, |V| = 56

void criterion4(Outcome& out) {
  const auto f = FiniteField::make(7, 1);
  const auto report = check_xqn_claims(f, 2);
  require_report(out, report, "q=7 n=2");

  const auto inst = build_xqn_instance(f, 2);
  out.require(inst.graph.vertex_count() == 256, "vertex count is not 256");
  out.require(inst.graph.in_neighbors(inst.alpha).size() == 14, "in-valency of alpha is not 14");

  const auto* in_rec = find_claim(report, "xqn.in-neighbourhood");
  out.require(in_rec && in_rec->pass, "two-block union shape record missing or failing");
  const auto* arcs_rec = find_claim(report, "xqn.arc-transitive");
  out.require(arcs_rec && arcs_rec->pass, "arc orbit record missing or failing");
  const auto* plus_rec = find_claim(report, "xqn.a2plus-transitive");
  out.require(plus_rec && plus_rec->pass && !plus_rec->vacuous,
              "common-out-neighbour orbit record missing, failing or vacuous");
  const auto* dist_rec = find_claim(report, "xqn.a2plus-hamming");
  out.require(dist_rec && dist_rec->pass, "distance profile record missing or failing");
  const auto* opp_rec = find_claim(report, "xqn.opp-isomorphism");
  out.require(opp_rec && opp_rec->pass, "coordinate-wise reversal record missing or failing");
}

void criterion5(Outcome& out) {
  for (const std::int64_t q : {7, 11}) {
    const auto report = check_proposition_claims(FiniteField::make(q, 1));
    require_report(out, report, "q=" + std::to_string(q));
  }
  const auto report7 = check_proposition_claims(FiniteField::make(7, 1));
  const auto* c7 = find_claim(report7, "prop.c7");
  out.require(c7 && c7->measured == "336 elements, 1 involution(s)",
              "group order / involution count mismatch for q=7");
}

void criterion6(Outcome& out) {
  for (const std::int64_t q : {7, 11, 19}) {
    const auto start = std::chrono::steady_clock::now();
    const auto report = check_paley_claims(FiniteField::make(q, 1));
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    require_report(out, report, "q=" + std::to_string(q));
    out.require(secs < 2.0, "q=" + std::to_string(q) + " suite exceeded 2 s");
  }
}

void criterion7(Outcome& out) {
  const std::vector<std::tuple<Vertex, Vertex, bool>> cases = {
      {3, 2, false}, {4, 2, false}, {3, 3, false}, {3, 2, true}, {4, 2, true}};
  for (const auto& [m, n, complement] : cases) {
    const auto report = check_hamming_claims(m, n, complement);
    const std::string label = (complement ? "complement of H(" : "H(") + std::to_string(m) +
                              "," + std::to_string(n) + ")";
    require_report(out, report, label);
    const auto* scan = find_claim(report, "hamming-preserved");
    out.require(scan && scan->measured.rfind("full scan", 0) == 0,
                label + ": distance preservation was not a full scan");
  }
}

void criterion8(Outcome& out) {
  // (a) canonical representatives against scaling-orbit enumeration.
  const auto f7 = FiniteField::make(7, 1);
  for (std::int64_t a = 0; a < 7; ++a) {
    for (std::int64_t b = 0; b < 7; ++b) {
      if (a == 0 && b == 0) continue;
      const auto cls = canonicalize(f7, a, b);
      const auto orbit_set = oracles::scaling_orbit(f7, a, b);
      out.require(orbit_set.count({cls.a, cls.b}) == 1,
                  "representative outside its own orbit for (" + std::to_string(a) + "," +
                      std::to_string(b) + ")");
      for (const auto& [oa, ob] : orbit_set)
        out.require(canonicalize(f7, oa, ob) == cls, "orbit-mates canonicalize differently");
    }
  }

  // (b) isomorphism search against the all-bijections oracle.
  std::mt19937_64 rng(0x5EED);
  for (int trial = 0; trial < 200; ++trial) {
    const auto g1 = oracles::random_digraph(rng, 7);
    const auto g2 = trial % 2 == 0 ? oracles::relabel(g1, rng) : oracles::random_digraph(rng, 7);
    const auto witness = find_isomorphism(g1, g2);
    out.require(witness.has_value() == oracles::isomorphic_exhaustive(g1, g2),
                "search disagrees with the exhaustive oracle on trial " + std::to_string(trial));
    if (witness)
      out.require(check_map_is_isomorphism(g1, g2, *witness),
                  "returned witness is not an isomorphism on trial " + std::to_string(trial));
  }

  // (c) square testing against exhaustive enumeration.
  for (const auto [p, k] :
       {std::pair<std::int64_t, std::int64_t>{7, 1}, {11, 1}, {19, 1}, {3, 3}}) {
    const auto f = FiniteField::make(p, k);
    const auto table = oracles::squares(f);
    for (std::int64_t x = 1; x < f.order(); ++x)
      out.require(f.is_square(x) == (table.count(x) == 1),
                  "square test mismatch at q=" + std::to_string(f.order()) + ", x=" +
                      std::to_string(x));
  }
}

void criterion9(Outcome& out) {
  const auto f = FiniteField::make(7, 1);
  const auto inst = build_xq_instance(f);
  const auto arcs = inst.graph.arcs();
  const std::set<std::string> watched = {"xq.valency", "xq.unique-non-neighbour",
                                         "xq.a2plus-empty", "xq.opp-isomorphism"};

  std::mt19937_64 rng(0x5EED);
  std::uniform_int_distribution<std::size_t> pick(0, arcs.size() - 1);
  for (int trial = 0; trial < 20; ++trial) {
    auto mutated_arcs = arcs;
    const auto [u, v] = mutated_arcs[pick(rng)];
    mutated_arcs.erase(std::find(mutated_arcs.begin(), mutated_arcs.end(), VertexPair{u, v}));
    mutated_arcs.emplace_back(v, u);

    XqInstance mutated = inst;
    mutated.graph = Digraph(inst.graph.vertex_count(), std::move(mutated_arcs),
                            inst.graph.labels(), inst.graph.alphabet());
    bool detected = false;
    for (const auto& rec : xq_claim_records(mutated))
      if (!rec.pass && watched.count(rec.id)) detected = true;
    out.require(detected, "flip of arc (" + std::to_string(u) + "," + std::to_string(v) +
                              ") went undetected");
  }
}

void criterion10(Outcome& out) {
  if (g_cli_path.empty()) {
    out.require(false, "no --cli path given; cannot invoke the binary twice");
    return;
  }
  const auto dir = std::filesystem::temp_directory_path();
  const auto run1 = dir / "symdig_accept_run1.json";
  const auto run2 = dir / "symdig_accept_run2.json";
  for (const auto& path : {run1, run2}) {
    const std::string cmd =
        g_cli_path + " verify --family xqn --q 7 --n 2 --out " + path.string();
    const int status = std::system(cmd.c_str());
    out.require(WEXITSTATUS(status) == 0, "verify run exited " +
                                              std::to_string(WEXITSTATUS(status)));
  }
  const auto slurp = [](const std::filesystem::path& path) {
    std::ifstream file(path, std::ios::binary);
    std::ostringstream os;
    os << file.rdbuf();
    return os.str();
  };
  const auto text1 = slurp(run1), text2 = slurp(run2);
  out.require(!text1.empty(), "first report is empty");
  out.require(text1 == text2, "reports differ between runs");
}

struct Criterion {
  std::string name;
  double limit_seconds;
  std::function<void(Outcome&)> run;
};

}  // namespace

int main(int argc, char** argv) {
  for (int i = 1; i + 1 < argc; ++i)
    if (std::string(argv[i]) == "--cli") g_cli_path = argv[i + 1];

  const std::vector<Criterion> criteria = {
      {"X_7 suite (16 vertices, valency 7, quotient K_8)", 1.0, criterion1},
      {"X_q suites for q = 11 and q = 19", 10.0, criterion2},
      {"extension-field suite for q = 27 (|V| = 56)", 30.0, criterion3},
      {"X_7(2): 256 vertices, in-valency 14, orbit and reversal checks", 60.0, criterion4},
      {"stabilizer tournament claims 1-7 on X_7 and X_11", 30.0, criterion5},
      {"tournament suites for q = 7, 11, 19", 6.0, criterion6},
      {"Hamming suites H(3,2), H(4,2), H(3,3) and complements", 10.0, criterion7},
      {"oracle equivalences (representatives, isomorphism, squares)", 60.0, criterion8},
      {"mutation sensitivity over 20 single-arc flips", 30.0, criterion9},
      {"byte-identical verify reports across two runs", 30.0, criterion10},
  };

  bool all_pass = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome outcome;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[i].run(outcome);
    } catch (const std::exception& e) {
      outcome.pass = false;
      outcome.notes.push_back(std::string("exception: ") + e.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs >= criteria[i].limit_seconds) {
      outcome.pass = false;
      outcome.notes.push_back("runtime limit of " + std::to_string(criteria[i].limit_seconds) +
                              " s exceeded");
    }
    std::printf("criterion %2zu: %s  %7.3fs  %s\n", i + 1, outcome.pass ? "PASS" : "FAIL", secs,
                criteria[i].name.c_str());
    for (const auto& note : outcome.notes) std::printf("              - %s\n", note.c_str());
    all_pass = all_pass && outcome.pass;
  }
  return all_pass ? 0 : 1;
}
