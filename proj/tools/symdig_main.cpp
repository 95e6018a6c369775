// Command-line front end: construct the digraph families, run the
// verification suites, compute centre quotients, test isomorphism.
//
// Exit codes: 0 success / all claims pass, 1 verified failure (a failing
// claim or proven non-isomorphism), 2 usage or input error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "symdig/constructions.hpp"
#include "symdig/digraph.hpp"
#include "symdig/finfield.hpp"
#include "symdig/io.hpp"
#include "symdig/verify.hpp"

namespace {

using namespace symdig;

struct CliConfig {
  std::string family;
  std::int64_t q = 0;
  std::int64_t m = 0;
  std::int64_t n = 0;
  std::string out;
  std::string format = "edgelist";
  std::uint64_t seed = kDefaultSeed;
  std::uint64_t cap_enum = kDefaultEnumCap;
  std::uint64_t cap_iso = 512;
  std::uint64_t cap_scan = kFullScanCap;
  std::string subgroup = "center";
  bool timings = false;
};

FiniteField field_for(std::int64_t q) {
  if (q < 2) throw Error("q must be at least 2");
  std::int64_t p = 0;
  for (std::int64_t d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0) p = q;  // q itself is prime
  std::int64_t k = 0;
  std::int64_t rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++k;
  }
  if (rest != 1) throw Error("q = " + std::to_string(q) + " is not a prime power");
  return FiniteField::make(p, k);
}

void require_params(const CliConfig& cfg, bool wants_q, bool wants_m, bool wants_n) {
  const auto check = [&](bool wanted, std::int64_t value, const char* name) {
    if (wanted && value == 0)
      throw Error(std::string("family '") + cfg.family + "' requires --" + name);
    if (!wanted && value != 0)
      throw Error(std::string("family '") + cfg.family + "' does not take --" + name);
  };
  check(wants_q, cfg.q, "q");
  check(wants_m, cfg.m, "m");
  check(wants_n, cfg.n, "n");
}

Digraph construct_family(const CliConfig& cfg) {
  if (cfg.family == "xq") {
    require_params(cfg, true, false, false);
    return build_xq(field_for(cfg.q));
  }
  if (cfg.family == "xqn") {
    require_params(cfg, true, false, true);
    return build_xqn(field_for(cfg.q), static_cast<Vertex>(cfg.n)).first;
  }
  if (cfg.family == "hamming" || cfg.family == "hamming-complement") {
    require_params(cfg, false, true, true);
    return build_hamming(static_cast<Vertex>(cfg.m), static_cast<Vertex>(cfg.n),
                         cfg.family == "hamming-complement");
  }
  if (cfg.family == "paley") {
    require_params(cfg, true, false, false);
    return build_paley(field_for(cfg.q)).first;
  }
  throw Error("unknown family '" + cfg.family + "'");
}

void write_output(const CliConfig& cfg, const std::string& text) {
  if (cfg.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(cfg.out);
  if (!file) throw Error("cannot open output path '" + cfg.out + "'");
  file << text;
}

int cmd_construct(const CliConfig& cfg) {
  const Digraph g = construct_family(cfg);
  std::ostringstream out;
  if (cfg.format == "edgelist") {
    write_edgelist(out, g);
  } else if (cfg.format == "dot") {
    write_dot(out, g);
  } else if (cfg.format == "json") {
    out << graph_json(g).dump(2) << "\n";
  } else {
    throw Error("unknown format '" + cfg.format + "'");
  }
  write_output(cfg, out.str());
  return 0;
}

int cmd_verify(const CliConfig& cfg) {
  PropertyReport report;
  if (cfg.family == "xq") {
    require_params(cfg, true, false, false);
    report = check_xq_claims(field_for(cfg.q));
  } else if (cfg.family == "xqn") {
    require_params(cfg, true, false, true);
    report = check_xqn_claims(field_for(cfg.q), static_cast<Vertex>(cfg.n), cfg.seed);
  } else if (cfg.family == "paley") {
    require_params(cfg, true, false, false);
    report = check_paley_claims(field_for(cfg.q), cfg.cap_enum);
  } else if (cfg.family == "hamming" || cfg.family == "hamming-complement") {
    require_params(cfg, false, true, true);
    report = check_hamming_claims(static_cast<Vertex>(cfg.m), static_cast<Vertex>(cfg.n),
                                  cfg.family == "hamming-complement", cfg.seed, cfg.cap_scan);
  } else {
    throw Error("unknown family '" + cfg.family + "'");
  }
  write_output(cfg, report_json(report, cfg.timings).dump(2) + "\n");
  return report.pass ? 0 : 1;
}

int cmd_quotient(const CliConfig& cfg) {
  if (cfg.family != "xq")
    throw Error("quotient supports --family xq only (centre quotient of the orbital digraph)");
  if (cfg.subgroup != "center") throw Error("unsupported subgroup '" + cfg.subgroup + "'");
  require_params(cfg, true, false, false);

  const auto inst = build_xq_instance(field_for(cfg.q));
  GeneratedAction centre;
  centre.domain = inst.graph.vertex_count();
  centre.generators.push_back(inst.z);
  std::vector<std::vector<Vertex>> blocks;
  const Digraph quotient = normal_quotient(inst.graph, centre, &blocks);

  std::ostringstream graph_text, block_text;
  write_edgelist(graph_text, quotient);
  write_blocks(block_text, blocks);

  if (cfg.out.empty()) {
    std::cout << graph_text.str() << "# blocks\n" << block_text.str();
  } else {
    std::ofstream graph_file(cfg.out);
    if (!graph_file) throw Error("cannot open output path '" + cfg.out + "'");
    graph_file << graph_text.str();
    std::ofstream block_file(cfg.out + ".blocks");
    if (!block_file) throw Error("cannot open output path '" + cfg.out + ".blocks'");
    block_file << block_text.str();
  }
  return 0;
}

int cmd_iso(const CliConfig& cfg, const std::string& path1, const std::string& path2) {
  const auto load = [](const std::string& path) {
    std::ifstream file(path);
    if (!file) throw Error("cannot open input '" + path + "'");
    return read_edgelist(file);
  };
  const Digraph g1 = load(path1);
  const Digraph g2 = load(path2);
  const auto witness = find_isomorphism(g1, g2, static_cast<Vertex>(cfg.cap_iso));
  if (!witness) {
    std::cerr << "non-isomorphic\n";
    return 1;
  }
  std::ostringstream out;
  for (Vertex v = 0; v < witness->size(); ++v) out << v << " " << (*witness)[v] << "\n";
  write_output(cfg, out.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"constructs vertex-transitive digraph families from finite-field group actions "
               "and verifies their structural properties"};
  app.require_subcommand(1);

  CliConfig cfg;
  std::string iso_path1, iso_path2;

  const auto add_common = [&cfg](CLI::App* cmd, bool with_family) {
    if (with_family)
      cmd->add_option("--family", cfg.family,
                      "one of xq, xqn, hamming, hamming-complement, paley")
          ->envname("SYMDIG_FAMILY")
          ->required();
    cmd->add_option("--q", cfg.q, "field order (prime power, q = 3 mod 4 families)")
        ->envname("SYMDIG_Q");
    cmd->add_option("--m", cfg.m, "alphabet size for the Hamming families")->envname("SYMDIG_M");
    cmd->add_option("--n", cfg.n, "tuple length")->envname("SYMDIG_N");
    cmd->add_option("--out", cfg.out, "output path (stdout when omitted)")->envname("SYMDIG_OUT");
    cmd->add_option("--seed", cfg.seed, "seed for sampled checks")->envname("SYMDIG_SEED");
    cmd->add_option("--cap-enum", cfg.cap_enum, "group enumeration cap")
        ->envname("SYMDIG_CAP_ENUM");
    cmd->add_option("--cap-iso", cfg.cap_iso, "isomorphism search vertex cap")
        ->envname("SYMDIG_CAP_ISO");
    cmd->add_option("--cap-scan", cfg.cap_scan, "full pair-scan cap")->envname("SYMDIG_CAP_SCAN");
  };

  auto* construct = app.add_subcommand("construct", "build a family member and export it");
  add_common(construct, true);
  construct->add_option("--format", cfg.format, "edgelist, dot or json")
      ->envname("SYMDIG_FORMAT");

  auto* verify = app.add_subcommand("verify", "run the verification suite for a family member");
  add_common(verify, true);
  verify->add_flag("--timings", cfg.timings, "emit per-claim wall times in the report");

  auto* quotient = app.add_subcommand("quotient", "export the quotient by a normal subgroup");
  add_common(quotient, true);
  quotient->add_option("--subgroup", cfg.subgroup, "subgroup selector (center)")
      ->envname("SYMDIG_SUBGROUP");

  auto* iso = app.add_subcommand("iso", "decide isomorphism of two exported digraphs");
  iso->add_option("graph1", iso_path1, "first edge-list file")->required();
  iso->add_option("graph2", iso_path2, "second edge-list file")->required();
  add_common(iso, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;  // usage errors are exit 2, --help is 0
  }

  try {
    if (construct->parsed()) return cmd_construct(cfg);
    if (verify->parsed()) return cmd_verify(cfg);
    if (quotient->parsed()) return cmd_quotient(cfg);
    if (iso->parsed()) return cmd_iso(cfg, iso_path1, iso_path2);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
