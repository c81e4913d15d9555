// cocoa: translate LTL into chains of co-Büchi automata, evaluate colors, verify, benchmark.
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "cocoa/export.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kCounterexample = 1, kUsage = 2, kResource = 3, kInternal = 4 };

struct Config {
  std::string formula;
  std::string format;
  std::string out;
  std::size_t max_states = cocoa::Budget::kDefaultMaxStates;
  double timeout_s = cocoa::Budget::kDefaultTimeoutSeconds;
  std::uint64_t seed = 1;
  bool json = false;
  std::string word;
  std::size_t prefix = 2;
  std::size_t period = 3;
  std::string mutate;
  int n = 0;
  bool singletons = false;
};

struct Parsed {
  cocoa::Formula formula;
  cocoa::Alphabet alphabet;
};

Parsed parse_input(const std::string& text) {
  const auto aps = cocoa::collect_atoms(text);
  cocoa::Alphabet alphabet(aps);
  return {cocoa::parse_ltl(text, aps), alphabet};
}

cocoa::Budget budget_of(const Config& cfg) { return cocoa::Budget(cfg.max_states, cfg.timeout_s); }

json level_summary(const cocoa::Cocoa& chain) {
  json levels = json::array();
  for (std::size_t l = 0; l < chain.k(); ++l) {
    const auto& lv = chain.levels[l];
    levels.push_back({{"level", l + 1},
                      {"dfw_states", lv.dfw.size()},
                      {"dfw_transitions", lv.dfw.transition_count()},
                      {"hd_ncw_states", lv.ncw.size()},
                      {"nfw_states", lv.nfw_states}});
  }
  return levels;
}

void print_summary(std::ostream& os, const cocoa::Cocoa& chain) {
  os << "k=" << chain.k() << "\n";
  os << "sltm_states=" << chain.sltm->size() << "\n";
  for (std::size_t l = 0; l < chain.k(); ++l) {
    const auto& lv = chain.levels[l];
    os << "level " << l + 1 << ": dfw_states=" << lv.dfw.size() << " hd_ncw_states=" << lv.ncw.size()
       << " nfw_states=" << lv.nfw_states << "\n";
  }
}

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw cocoa::InvalidParameter("cannot write " + path.string());
  out << content;
}

/// Artifacts as (file name, content) pairs for one output format.
std::vector<std::pair<std::string, std::string>> artifacts(const cocoa::Cocoa& chain,
                                                           const std::string& format) {
  std::vector<std::pair<std::string, std::string>> out;
  if (format == "json") {
    out.emplace_back("chain.json", cocoa::chain_to_json(chain).dump(2) + "\n");
  } else if (format == "dot") {
    out.emplace_back("sltm.dot", cocoa::sltm_to_dot(*chain.sltm));
    for (std::size_t l = 0; l < chain.k(); ++l) {
      const std::string name = "level" + std::to_string(l + 1);
      out.emplace_back(name + ".dot", cocoa::dfw_to_dot(chain.levels[l].dfw, *chain.sltm, name));
    }
  } else {
    for (std::size_t l = 0; l < chain.k(); ++l) {
      const std::string name = "level" + std::to_string(l + 1);
      out.emplace_back(name + ".hoa", cocoa::ncw_to_hoa(chain.levels[l].ncw, name));
    }
  }
  return out;
}

int cmd_translate(const Config& cfg) {
  const auto in = parse_input(cfg.formula);
  const auto chain = cocoa::build_chain(in.formula, in.alphabet, budget_of(cfg));
  const std::string format = cfg.format.empty() ? "json" : cfg.format;
  json files = json::array();
  if (!cfg.out.empty()) {
    fs::create_directories(cfg.out);
    for (const auto& [name, content] : artifacts(chain, format)) {
      write_file(fs::path(cfg.out) / name, content);
      files.push_back((fs::path(cfg.out) / name).string());
    }
  } else if (!cfg.format.empty()) {
    // No directory: the artifact itself is the output.
    for (const auto& [name, content] : artifacts(chain, format)) std::cout << content;
    print_summary(std::cerr, chain);
    return kOk;
  }
  if (cfg.json) {
    std::cout << json{{"formula", chain.formula.to_string()},
                      {"k", chain.k()},
                      {"sltm_states", chain.sltm->size()},
                      {"levels", level_summary(chain)},
                      {"files", files}}
                     .dump(2)
              << "\n";
  } else {
    print_summary(std::cout, chain);
  }
  return kOk;
}

int cmd_color(const Config& cfg) {
  const auto in = parse_input(cfg.formula);
  const auto word = cocoa::parse_lasso(cfg.word, in.alphabet);
  const auto chain = cocoa::build_chain(in.formula, in.alphabet, budget_of(cfg));
  const int color = cocoa::natural_color(chain, word);
  const bool member = color % 2 == 0;
  if (cfg.json) {
    std::cout << json{{"word", cocoa::format_lasso(word, in.alphabet)}, {"color", color}, {"member", member}}.dump(2)
              << "\n";
  } else {
    std::cout << "color=" << color << " member=" << (member ? "true" : "false") << "\n";
  }
  return kOk;
}

int cmd_verify(const Config& cfg) {
  const auto in = parse_input(cfg.formula);
  auto chain = cocoa::build_chain(in.formula, in.alphabet, budget_of(cfg));
  if (cfg.mutate == "drop-accepting") chain = cocoa::drop_accepting_transition(chain, cfg.seed);
  const auto report = cocoa::verify_chain(chain, chain.formula, cfg.prefix, cfg.period);
  if (cfg.json) {
    json j{{"formula", chain.formula.to_string()},
           {"k", chain.k()},
           {"lassos", report.lassos},
           {"counterexamples", report.counterexamples},
           {"monotonicity_violations", report.monotonicity_violations},
           {"color_histogram", report.color_histogram},
           {"seconds", report.seconds},
           {"ok", report.ok()}};
    if (report.first) {
      j["first_counterexample"] = {{"word", cocoa::format_lasso(report.first->word, in.alphabet)},
                                   {"color", report.first->color},
                                   {"member", report.first->member}};
    }
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "k=" << chain.k() << " lassos=" << report.lassos
              << " counterexamples=" << report.counterexamples
              << " monotonicity_violations=" << report.monotonicity_violations
              << " seconds=" << report.seconds << "\n";
    if (report.first) {
      std::cout << "first counterexample: " << cocoa::format_lasso(report.first->word, in.alphabet)
                << " color=" << report.first->color
                << " member=" << (report.first->member ? "true" : "false") << "\n";
    }
  }
  return report.ok() ? kOk : kCounterexample;
}

int cmd_bench(const Config& cfg) {
  const auto start = std::chrono::steady_clock::now();
  auto elapsed = [&] {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  };
  const auto formula = cocoa::lower_bound_family(cfg.n);
  const auto aps = cocoa::lower_bound_aps(cfg.n);
  const auto alphabet = cfg.singletons ? cocoa::Alphabet::singletons(aps) : cocoa::Alphabet(aps);
  json report{{"n", cfg.n}, {"formula_size", formula.size()}, {"letters", alphabet.size()}};
  try {
    const auto chain = cocoa::build_chain(formula, alphabet, budget_of(cfg));
    report["k"] = chain.k();
    report["sltm_states"] = chain.sltm->size();
    report["levels"] = level_summary(chain);
    report["seconds"] = elapsed();
    bool ok = true;
    if (cfg.n == 1) ok = chain.k() == 1 && chain.sltm->size() >= 4;
    report["ok"] = ok;
    if (cfg.json) {
      std::cout << report.dump(2) << "\n";
    } else {
      std::cout << "n=" << cfg.n << " letters=" << alphabet.size() << " formula_size=" << formula.size() << "\n";
      print_summary(std::cout, chain);
      std::cout << "seconds=" << report["seconds"].get<double>() << "\n";
      if (!ok) std::cout << "expected a single level and at least 4 SLTM states\n";
    }
    return ok ? kOk : kCounterexample;
  } catch (const cocoa::ResourceLimit& e) {
    report["resource_limit"] = e.what();
    report["seconds"] = elapsed();
    if (cfg.json) {
      std::cout << report.dump(2) << "\n";
    } else {
      std::cout << "n=" << cfg.n << " stopped after " << report["seconds"].get<double>() << " s: " << e.what() << "\n";
    }
    return kResource;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Translate LTL formulas into chains of co-Büchi automata"};
  app.require_subcommand(1);
  Config cfg;
  app.add_option("--format", cfg.format, "Artifact format")
      ->check(CLI::IsMember({"json", "dot", "hoa"}));
  app.add_option("--out", cfg.out, "Directory for artifacts");
  app.add_option("--max-states", cfg.max_states, "State cap per construction")->check(CLI::PositiveNumber);
  app.add_option("--timeout-s", cfg.timeout_s, "Wall-clock budget in seconds")->check(CLI::PositiveNumber);
  app.add_option("--seed", cfg.seed, "Seed for randomized choices");
  app.add_flag("--json", cfg.json, "Machine-readable report on stdout");

  auto* translate = app.add_subcommand("translate", "Build the chain and write its artifacts");
  translate->add_option("formula", cfg.formula, "LTL formula")->required();

  auto* color = app.add_subcommand("color", "Natural color of a lasso word");
  color->add_option("formula", cfg.formula, "LTL formula")->required();
  color->add_option("--word", cfg.word, "Lasso word, e.g. \"{a}{};{a}\"")->required();

  auto* verify = app.add_subcommand("verify", "Check the chain against the formula on bounded lassos");
  verify->add_option("formula", cfg.formula, "LTL formula")->required();
  verify->add_option("--prefix", cfg.prefix, "Maximal prefix length")->check(CLI::PositiveNumber);
  verify->add_option("--period", cfg.period, "Maximal period length")->check(CLI::PositiveNumber);
  verify->add_option("--mutate", cfg.mutate, "Inject a fault before verifying")
      ->check(CLI::IsMember({"drop-accepting"}));

  auto* bench = app.add_subcommand("bench", "Chain for the lower-bound formula family");
  bench->add_option("--n", cfg.n, "Family parameter")->required();
  bench->add_flag("--singletons", cfg.singletons, "Use only singleton letters");

  for (auto* sub : {translate, color, verify, bench}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*translate) return cmd_translate(cfg);
    if (*color) return cmd_color(cfg);
    if (*verify) return cmd_verify(cfg);
    if (*bench) return cmd_bench(cfg);
  } catch (const cocoa::ResourceLimit& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kResource;
  } catch (const cocoa::InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  } catch (const cocoa::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInternal;
  }
  return kUsage;
}
