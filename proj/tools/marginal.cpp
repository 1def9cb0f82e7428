// Command-line surface for the marginal-polytope library.  Every subcommand
// reads/writes JSON files under --out and exits with a uniform code scheme:
// 0 ok, 2 cap exceeded, 3 classification requested outside d=1, 4 invalid
// input, 5 verification failure.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "shiftpoly/compiler.hpp"
#include "shiftpoly/dimension_one.hpp"
#include "shiftpoly/errors.hpp"
#include "shiftpoly/invariance.hpp"
#include "shiftpoly/serialize.hpp"
#include "shiftpoly/sft.hpp"
#include "shiftpoly/substitution.hpp"
#include "shiftpoly/tower.hpp"

using namespace shiftpoly;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCaps = 2;
constexpr int kExitWrongDim = 3;
constexpr int kExitInvalid = 4;
constexpr int kExitVerify = 5;

struct RunConfig {
  int d = 1;
  int n = 1;
  std::string alphabet = "0,1";
  std::string out = ".";
  Caps caps;
};

Json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open input file: " + path);
  Json j;
  try {
    in >> j;
  } catch (const Json::exception& e) {
    throw InvalidInput("cannot parse " + path + ": " + e.what());
  }
  return j;
}

void write_json(const RunConfig& cfg, const std::string& name, const Json& j) {
  const std::string path = cfg.out + "/" + name;
  std::ofstream out(path);
  if (!out) throw InvalidInput("cannot open output file: " + path);
  out << dump_json(j);
  if (!out) throw VerificationFailure("write failed: " + path);
  std::cout << "wrote " << path << "\n";
}

std::vector<int> parse_int_csv(const std::string& csv) {
  std::vector<int> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t pos = 0;
      const int v = std::stoi(item, &pos);
      if (pos != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw InvalidInput("not an integer list: " + csv);
    }
  }
  if (out.empty()) throw InvalidInput("empty integer list");
  return out;
}

int cmd_polytope(const RunConfig& cfg) {
  const Alphabet ab = Alphabet::parse(cfg.alphabet);
  const PatternIndex ix = PatternIndex::make(cfg.d, cfg.n, ab, cfg.caps);
  const HPolytope H = build_Iloc(ix, cfg.caps);
  write_json(cfg, "polytope_h.json", hpolytope_json(H));
  const VPolytope V = vertex_enumeration(H, cfg.caps);
  write_json(cfg, "polytope_v.json", vpolytope_json(V));
  std::cout << "vertices " << V.vertices.size() << "\n";
  return kExitOk;
}

int cmd_classify(const RunConfig& cfg) {
  if (cfg.d != 1) {
    std::cerr << "error: classification is a d=1 statement\n";
    return kExitWrongDim;
  }
  const Alphabet ab = Alphabet::parse(cfg.alphabet);
  const ClassifyReport rep = classify_extreme_points(ab, cfg.n, cfg.caps);
  write_json(cfg, "classify.json", classify_json(rep, ab));
  std::cout << "matched " << (rep.matched ? "true" : "false") << "\n";
  return rep.matched ? kExitOk : kExitVerify;
}

int cmd_extend(const RunConfig& cfg, const std::string& measure_path) {
  if (cfg.d != 1) {
    std::cerr << "error: the Markov extension is a d=1 construction\n";
    return kExitWrongDim;
  }
  const Alphabet ab = Alphabet::parse(cfg.alphabet);
  const MeasureVector mu = parse_measure(load_json(measure_path), ab, cfg.caps);
  const MarkovChain chain = markov_extension(mu, cfg.caps);
  const MeasureVector back = chain_marginal(chain, cfg.caps);
  const bool round_trip = back.values == mu.values;
  write_json(cfg, "chain.json", chain_json(chain));
  std::cout << "round_trip_ok " << (round_trip ? "true" : "false") << "\n";
  return round_trip ? kExitOk : kExitVerify;
}

int cmd_face(const RunConfig& cfg, const std::string& forbidden_path) {
  const Alphabet ab = Alphabet::parse(cfg.alphabet);
  const ForbiddenSet L = parse_forbidden(load_json(forbidden_path), ab);
  const PatternIndex ix = PatternIndex::make(cfg.d, cfg.n, ab, cfg.caps);
  const FaceDescription face = face_of_forbidden(L, ix, cfg.caps);
  const FeasibilityCertificate cert = face_feasible(face);
  if (!verify_certificate(face.polytope, cert))
    throw VerificationFailure("face certificate failed substitution");
  Json out;
  out["feasible"] = cert.feasible;
  out["zeroed"] = face.zeroed;
  out["polytope"] = hpolytope_json(face.polytope);
  if (cert.feasible) {
    const VPolytope V = face_vertices(face, cfg.caps);
    out["vertices"] = vpolytope_json(V);
    std::cout << "feasible true, vertices " << V.vertices.size() << "\n";
  } else {
    Json farkas;
    farkas["eq"] = Json::array();
    for (const auto& y : cert.farkas_eq) farkas["eq"].push_back(rational_str(y));
    farkas["ineq"] = Json::array();
    for (const auto& y : cert.farkas_in) farkas["ineq"].push_back(rational_str(y));
    out["farkas"] = std::move(farkas);
    std::cout << "feasible false\n";
  }
  write_json(cfg, "face.json", out);
  return kExitOk;
}

int cmd_project(const RunConfig& cfg, int k) {
  const Alphabet ab = Alphabet::parse(cfg.alphabet);
  const VPolytope projected = project_Iloc(k, cfg.n, cfg.d, ab, cfg.caps);
  const PatternIndex small = PatternIndex::make(cfg.d, cfg.n, ab, cfg.caps);
  const VPolytope window = vertex_enumeration(build_Iloc(small, cfg.caps), cfg.caps);
  const bool equal = polytope_equal(projected, window);
  Json out;
  out["k"] = k;
  out["n"] = cfg.n;
  out["projected"] = vpolytope_json(projected);
  out["equal_to_window_polytope"] = equal;
  write_json(cfg, "project.json", out);
  std::cout << "equal_to_window_polytope " << (equal ? "true" : "false") << "\n";
  return kExitOk;
}

int cmd_compile(const RunConfig& cfg, const std::string& chain_path, bool all_permutations) {
  const PolytopeChain chain = parse_polytope_chain(load_json(chain_path));
  const std::vector<WordLanguage> langs = compile_languages(chain, cfg.caps, all_permutations);
  Json out = Json::array();
  for (std::size_t i = 0; i < langs.size(); ++i) {
    if (!verify_language(langs[i], chain.levels[i]))
      throw VerificationFailure("compiled language fails its own frequency check");
    out.push_back(language_json(langs[i]));
  }
  write_json(cfg, "languages.json", out);
  std::cout << "levels " << langs.size() << ", final N " << langs.back().N << "\n";
  return kExitOk;
}

int cmd_subst(const RunConfig& cfg, const std::string& preset, const std::string& system_path,
              bool require_exact, const std::string& ratio_types, int iterate) {
  SubstitutionSystem S = system_path.empty() ? substitution_preset(preset)
                                             : parse_substitution(load_json(system_path));
  const PerronResult P = perron_frequencies(S, require_exact);
  Json out;
  out["system"] = substitution_json(S);
  out["perron"] = perron_json(P, S);
  if (!ratio_types.empty()) {
    std::stringstream ss(ratio_types);
    std::string a, b;
    if (!std::getline(ss, a, ',') || !std::getline(ss, b, ',') || ss.rdbuf()->in_avail() > 0)
      throw InvalidInput("--ratio wants two type names: fat,thin");
    const auto find = [&](const std::string& t) {
      for (std::size_t i = 0; i < S.types.size(); ++i)
        if (S.types[i] == t) return i;
      throw InvalidInput("unknown tile type: " + t);
    };
    const RatioResult R = frequency_ratio(S, find(a), find(b));
    Json rj;
    rj["i"] = a;
    rj["j"] = b;
    if (R.exact) {
      rj["value"] = quadratic_json(R.value);
      rj["irrational"] = certify_irrational(R.value);
      std::cout << "ratio " << to_exact_string(R.value) << " = "
                << to_decimal_string(R.value, 15) << "\n";
    } else {
      rj["lo"] = rational_str(R.bounds.first);
      rj["hi"] = rational_str(R.bounds.second);
      std::cout << "ratio in [" << rational_str(R.bounds.first) << ", "
                << rational_str(R.bounds.second) << "]\n";
    }
    out["ratio"] = std::move(rj);
  }
  if (iterate > 0) {
    ZVector seed(S.M.size(), Integer(0));
    seed[0] = 1;
    Json counts = Json::array();
    for (const auto& v : iterate_counts(S, seed, iterate)) {
      Json row = Json::array();
      for (const auto& e : v) row.push_back(e.get_str());
      counts.push_back(std::move(row));
    }
    out["iterate"] = std::move(counts);
  }
  write_json(cfg, "subst.json", out);
  return kExitOk;
}

int cmd_check_word(const std::string& language_path, const std::string& word_csv, int symbols,
                   int level) {
  Json j = load_json(language_path);
  if (j.is_array()) {  // a compiled tower: pick one level, default the last
    if (j.empty()) throw InvalidInput("language file holds an empty list");
    if (level < 0) level = static_cast<int>(j.size()) - 1;
    if (level >= static_cast<int>(j.size())) throw InvalidInput("no such level in language file");
    j = j[static_cast<std::size_t>(level)];
  }
  const WordLanguage lang = parse_language(j);
  std::vector<int> word = parse_int_csv(word_csv);
  int max_symbol = 1;
  for (const auto& w : lang.words)
    for (int s : w) max_symbol = std::max(max_symbol, s);
  for (int s : word) max_symbol = std::max(max_symbol, s);
  if (symbols == 0) symbols = max_symbol;
  const LevelForbidden F = forbidden_list_for_level(lang, symbols);
  const bool bad = F.forbidden(word);
  std::cout << (bad ? "forbidden" : "allowed") << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact marginal polytopes of shift-invariant measures"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand name

  RunConfig cfg;
  app.add_option("--d", cfg.d, "lattice dimension")->check(CLI::PositiveNumber);
  app.add_option("--n", cfg.n, "window radius")->check(CLI::NonNegativeNumber);
  app.add_option("--alphabet", cfg.alphabet, "comma-separated symbols");
  app.add_option("--out", cfg.out, "output directory");
  app.add_option("--cap-patterns", cfg.caps.max_patterns, "max window patterns");
  app.add_option("--cap-triples", cfg.caps.max_triples, "max invariance triples");
  app.add_option("--cap-rays", cfg.caps.max_rays, "max double-description rays");
  app.add_option("--cap-words", cfg.caps.max_words, "max language words");
  app.add_option("--max-torus", cfg.caps.max_torus, "max periodic torus size");

  auto* polytope = app.add_subcommand("polytope", "H- and V-representations of the window polytope");
  auto* classify = app.add_subcommand("classify", "match vertices with periodic orbits (d=1)");
  auto* extend = app.add_subcommand("extend", "Markov extension of an invariant measure (d=1)");
  std::string measure_path;
  extend->add_option("measure", measure_path, "measure JSON file")->required();
  auto* face = app.add_subcommand("face", "polytope face cut out by a forbidden-pattern list");
  std::string forbidden_path;
  face->add_option("forbidden", forbidden_path, "forbidden-set JSON file")->required();
  auto* project = app.add_subcommand("project", "restriction image of a bigger window polytope");
  int k = 2;
  project->add_option("--k", k, "source window radius")->required();
  auto* compile = app.add_subcommand("compile", "word languages realizing a polytope chain");
  std::string chain_path;
  bool all_permutations = false;
  compile->add_option("chain", chain_path, "polytope-chain JSON file")->required();
  compile->add_flag("--all-permutations", all_permutations, "emit every block arrangement");
  auto* subst = app.add_subcommand("subst", "tile frequencies of a primitive substitution");
  std::string preset = "penrose-robinson", system_path, ratio_types;
  bool require_exact = false;
  int iterate = 0;
  subst->add_option("--preset", preset, "built-in system name");
  subst->add_option("--system", system_path, "system JSON file (overrides --preset)");
  subst->add_flag("--exact", require_exact, "fail instead of falling back to intervals");
  subst->add_option("--ratio", ratio_types, "two type names: fat,thin");
  subst->add_option("--iterate", iterate, "also report k inflation steps from the first type");
  auto* check = app.add_subcommand("check-word", "test a word against a compiled level language");
  std::string language_path, word_csv;
  int symbols = 0;
  check->add_option("language", language_path, "language JSON file")->required();
  check->add_option("word", word_csv, "comma-separated 1-based symbols")->required();
  check->add_option("--symbols", symbols, "alphabet size (default: largest symbol seen)");
  int level = -1;
  check->add_option("--level", level, "level index in a multi-level file (default: last)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalid;
  }

  try {
    if (polytope->parsed()) return cmd_polytope(cfg);
    if (classify->parsed()) return cmd_classify(cfg);
    if (extend->parsed()) return cmd_extend(cfg, measure_path);
    if (face->parsed()) return cmd_face(cfg, forbidden_path);
    if (project->parsed()) return cmd_project(cfg, k);
    if (compile->parsed()) return cmd_compile(cfg, chain_path, all_permutations);
    if (subst->parsed()) return cmd_subst(cfg, preset, system_path, require_exact, ratio_types, iterate);
    if (check->parsed()) return cmd_check_word(language_path, word_csv, symbols, level);
  } catch (const CapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCaps;
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const Unbounded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const VerificationFailure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerify;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerify;
  }
  return kExitInvalid;
}
