#pragma once

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <semigroup_lab/families.hpp>

namespace semigroup_lab::cli {

enum ExitCode { kOk = 0, kFailure = 1, kUsage = 2 };

struct CommandConfig {
  std::string gens;
  std::string family;
  std::string n;
  std::string format;
  std::string output;
  std::string strategy = "auto";
  bool check = false;
  bool fallback_oracle = false;
  bool timing = false;
  unsigned jobs = 1;
};

inline std::vector<Int> parse_gens(const std::string& text) {
  std::vector<Int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      out.push_back(parse_int(item));
    } catch (const std::exception&) {
      throw CLI::ValidationError("--gens", "not an integer: " + item);
    }
  }
  return out;
}

/// "a..b" inclusive, or a single integer.
inline std::pair<Int, Int> parse_range(const std::string& text) {
  try {
    auto dots = text.find("..");
    if (dots == std::string::npos) {
      Int n = parse_int(text);
      return {n, n};
    }
    return {parse_int(text.substr(0, dots)), parse_int(text.substr(dots + 2))};
  } catch (const std::exception&) {
    throw CLI::ValidationError("--n", "expected a..b, got " + text);
  }
}

inline BettiStrategy parse_strategy(const std::string& s) {
  if (s == "apery") return BettiStrategy::Apery;
  if (s == "u") return BettiStrategy::U;
  return BettiStrategy::Auto;
}

/// Errors in the input map to 2, failed geometric certificates to 1.
inline int exit_code_for(const SemigroupError& e) {
  switch (e.code()) {
    case ErrorCode::ArrangementNotFound:
    case ErrorCode::CardinalityMismatch:
    case ErrorCode::ShapeMismatch:
    case ErrorCode::NonIntegralGenus:
    case ErrorCode::AssumptionViolated:
    case ErrorCode::HypothesisNotMet:
    case ErrorCode::IdentityViolated:
      return kFailure;
    default:
      return kUsage;
  }
}

inline std::string join(const std::vector<Int>& xs) {
  std::string out;
  for (std::size_t t = 0; t < xs.size(); ++t) {
    if (t) out += ',';
    out += to_string(xs[t]);
  }
  return out;
}

inline int cmd_invariants(const CommandConfig& cfg, std::ostream& out) {
  NumericalSemigroup s(parse_gens(cfg.gens));
  Int frob = frobenius(s);
  Int gen = genus(s);
  BettiStrategy strategy = parse_strategy(cfg.strategy);
  auto betti = betti_elements(s, strategy);
  Int cat = 0;
  std::size_t rho = 0;
  for (Int b : betti.elements) {
    auto z = factorizations(s, b);
    cat = std::max(cat, catenary_of_set(z));
    rho += r_classes(z).size() - 1;
  }
  const auto& mg = s.minimal_generators();
  Int apery_size = s.multiplicity();

  if (cfg.format == "json") {
    auto num = [](Int v) { return static_cast<long long>(v); };
    nlohmann::ordered_json j;
    j["minimal_generators"] = nlohmann::json::array();
    for (Int g : mg) j["minimal_generators"].push_back(num(g));
    j["embedding_dimension"] = s.embedding_dimension();
    j["frobenius"] = num(frob);
    j["genus"] = num(gen);
    j["apery_size"] = num(apery_size);
    j["betti"] = nlohmann::json::array();
    for (Int b : betti.elements) j["betti"].push_back(num(b));
    j["betti_strategy"] = strategy_name(betti.candidates_used);
    j["catenary"] = num(cat);
    j["presentation_cardinality"] = rho;
    out << j.dump(2) << '\n';
  } else if (cfg.format == "csv") {
    out << "minimal_generators,embedding_dimension,frobenius,genus,apery_size,betti,catenary,"
           "presentation_cardinality\n";
    out << '"' << join(mg) << "\"," << s.embedding_dimension() << ',' << to_string(frob) << ','
        << to_string(gen) << ',' << to_string(apery_size) << ",\"" << join(betti.elements)
        << "\"," << to_string(cat) << ',' << rho << '\n';
  } else {
    out << "minimal generators: " << join(mg) << '\n'
        << "embedding dimension: " << s.embedding_dimension() << '\n'
        << "Frobenius number: " << to_string(frob) << '\n'
        << "genus: " << to_string(gen) << '\n'
        << "Apery set size: " << to_string(apery_size) << '\n'
        << "Betti elements: " << join(betti.elements) << '\n'
        << "catenary degree: " << to_string(cat) << '\n'
        << "minimal presentation size: " << rho << '\n';
  }
  return kOk;
}

inline VoxelFormat parse_voxel_format(const std::string& f) {
  if (f == "obj") return VoxelFormat::Obj;
  if (f == "json") return VoxelFormat::Json;
  return VoxelFormat::Text;
}

inline int cmd_lshape(const CommandConfig& cfg, std::ostream& out, std::ostream& err) {
  Quad sorted{};
  if (!cfg.gens.empty()) {
    NumericalSemigroup s(parse_gens(cfg.gens));
    sorted = quad_of(s);
  } else {
    auto [lo, hi] = parse_range(cfg.n);
    if (lo != hi) throw CLI::ValidationError("--n", "lshape takes a single n");
    sorted = family_generators(parse_family(cfg.family), lo);
    quad_of(NumericalSemigroup(std::vector<Int>(sorted.begin(), sorted.end())));
  }
  NumericalSemigroup s(std::vector<Int>(sorted.begin(), sorted.end()));

  LShape ls;
  bool warned = false;
  try {
    ls = lshape_for(sorted, select_arrangement(sorted));
    if (cfg.check && ls.labels() != apery_set(s, ls.d[0]).sorted()) {
      throw SemigroupError(ErrorCode::ShapeMismatch, "labels differ from the Apéry set");
    }
  } catch (const SemigroupError& e) {
    if (exit_code_for(e) != kFailure || !cfg.fallback_oracle) throw;
    out << "WARN=" << e.what() << '\n';
    warned = true;
    Arrangement arr;
    try {
      arr = select_arrangement(sorted);
    } catch (const SemigroupError&) {
    }
    ls = lshape_from_apery(sorted, arr);
  }

  if (!cfg.output.empty()) {
    std::ofstream file(cfg.output, std::ios::binary);
    if (!file) {
      err << "cannot write " << cfg.output << '\n';
      return kUsage;
    }
    file << export_voxels(ls, parse_voxel_format(cfg.format));
  }

  auto stats = lshape_stats(ls);
  out << "arrangement=" << mode_name(ls.arrangement.mode) << " order=" << ls.arrangement.order[0]
      << ',' << ls.arrangement.order[1] << ',' << ls.arrangement.order[2] << ','
      << ls.arrangement.order[3] << '\n'
      << "generators=" << join({ls.d.begin(), ls.d.end()}) << '\n'
      << "cubes=" << ls.cubes.size() << '\n'
      << "F=" << to_string(stats.frobenius) << '\n'
      << "G=" << to_string(stats.genus) << '\n'
      << "unique=" << (is_unique_lshape(ls.d) ? "true" : "false") << '\n';
  if (cfg.check) out << "check=" << (warned ? "oracle" : "pass") << '\n';
  return kOk;
}

inline int cmd_verify(const CommandConfig& cfg, std::ostream& out, std::ostream& err) {
  Family f = parse_family(cfg.family);
  auto [lo, hi] = parse_range(cfg.n);
  Report report = verify_family(f, lo, hi, {cfg.jobs, cfg.timing});
  std::string text = cfg.format == "json" ? report.to_json().dump(2) + "\n" : report.to_csv();
  if (cfg.output.empty()) {
    out << text;
  } else {
    std::ofstream file(cfg.output, std::ios::binary);
    if (!file) {
      err << "cannot write " << cfg.output << '\n';
      return kUsage;
    }
    file << text;
  }
  return report.ok() ? kOk : kFailure;
}

inline unsigned default_jobs() {
  if (const char* env = std::getenv("SEMIGROUP_LAB_JOBS")) {
    try {
      long v = std::stol(env);
      if (v >= 1) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
  }
  return 1;
}

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Numerical semigroup invariants and L-shapes"};
  app.require_subcommand(1);
  CommandConfig cfg;
  cfg.jobs = default_jobs();
  std::string inv_format, ls_format, ver_format;

  auto* inv = app.add_subcommand("invariants", "Invariants of the semigroup generated by --gens");
  inv->add_option("--gens", cfg.gens, "Comma separated generators")->required();
  inv->add_option("--format", inv_format, "human, json or csv")
      ->default_val("human")
      ->check(CLI::IsMember({"human", "json", "csv"}));
  inv->add_option("--strategy", cfg.strategy, "Betti candidates: auto, apery or u")
      ->default_val("auto")
      ->check(CLI::IsMember({"auto", "apery", "u"}));

  auto* ls = app.add_subcommand("lshape", "Build and export the L-shape");
  auto* g = ls->add_option("--gens", cfg.gens, "Comma separated generators");
  auto* fam = ls->add_option("--family", cfg.family, "squares or triangular");
  auto* n = ls->add_option("--n", cfg.n, "Family parameter");
  g->excludes(fam)->excludes(n);
  fam->needs(n);
  n->needs(fam);
  ls->add_option("-o,--output", cfg.output, "Voxel file to write");
  ls->add_option("--format", ls_format, "text, obj or json")
      ->default_val("text")
      ->check(CLI::IsMember({"text", "obj", "json"}));
  ls->add_flag("--check", cfg.check, "Compare labels against the Apéry set");
  ls->add_flag("--fallback-oracle", cfg.fallback_oracle,
               "Use the Apéry staircase when the geometric build fails");

  auto* ver = app.add_subcommand("verify", "Check closed forms for a family against the oracles");
  ver->add_option("--family", cfg.family, "squares or triangular")->required();
  ver->add_option("--n", cfg.n, "Range a..b")->required();
  ver->add_option("--jobs", cfg.jobs, "Worker threads")->check(CLI::PositiveNumber);
  ver->add_option("--format", ver_format, "csv or json")
      ->default_val("csv")
      ->check(CLI::IsMember({"csv", "json"}));
  ver->add_option("-o,--output", cfg.output, "Report file to write");
  ver->add_flag("--timing", cfg.timing, "Record per-check milliseconds");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
    if (ls->parsed() && cfg.gens.empty() && cfg.family.empty()) {
      throw CLI::ValidationError("lshape", "give --gens or --family with --n");
    }
    if (inv->parsed()) {
      cfg.format = inv_format;
      return cmd_invariants(cfg, out);
    }
    if (ls->parsed()) {
      cfg.format = ls_format;
      return cmd_lshape(cfg, out, err);
    }
    cfg.format = ver_format;
    return cmd_verify(cfg, out, err);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kUsage;
  } catch (const SemigroupError& e) {
    err << e.what() << '\n';
    return exit_code_for(e);
  } catch (const std::exception& e) {
    err << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace semigroup_lab::cli
