#include "oracle.hpp"

#include "regsynth/constraints/chains.hpp"
#include "regsynth/game/solver.hpp"
#include "regsynth/synth/ido.hpp"
#include "regsynth/synth/pipeline.hpp"
#include "regsynth/synth/simulate.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace fs = std::filesystem;
using namespace rs;

namespace {

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitError = 2;

struct Config {
  std::string input;
  std::string domain = "nat";
  bool zero = false;
  std::uint64_t seed = 1;
  std::string out = ".";
  std::string side = "adam";
  std::string what = "spec";
  std::string transducer;
  std::size_t sizes = 0;
  bool sizes_given = false;
  bool inject_fault = false;
  int verbosity = 0;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const fs::path& path, const std::string& text) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
  out << text;
}

Domain domain_of(const Config& c) {
  auto d = parse_domain(c.domain);
  if (!d) throw std::invalid_argument("unknown domain '" + c.domain + "' (expected nat or rat)");
  return *d;
}

// One-sided view of a spec file; ido specs are reduced.
OneSidedSpec load_one_sided(const std::string& path) {
  auto doc = parse_spec_document(read_file(path));
  if (auto* ido = std::get_if<IdoSpec>(&doc)) return reduce_ido_to_one_sided(*ido);
  return std::get<OneSidedSpec>(doc);
}

int cmd_check_sat(const Config& c) {
  auto seq = parse_lasso(read_file(c.input));
  const Domain d = domain_of(c);
  bool sat = false;
  std::cout << "domain: " << domain_name(d) << (c.zero ? " (from zero)" : "") << '\n';
  if (d == Domain::Nat) {
    auto v = chain_verdict_N(seq);
    std::cout << "consistent: " << v.consistent << '\n'
              << "has_inf_decreasing_1w: " << v.has_inf_decreasing_1w << '\n'
              << "has_trespassing_inf_increasing_1w: " << v.has_trespassing_inf_increasing_1w << '\n';
    if (c.zero)
      std::cout << "c0_all_equal: " << v.c0_all_equal << '\n' << "has_decrease_from_0: " << v.has_decrease_from_0 << '\n';
    sat = c.zero ? v.zero_satisfiable() : v.satisfiable();
  } else {
    std::cout << "consistent: " << seq.consistent() << '\n';
    if (c.zero) {
      auto z = zero_start_checks(seq);
      std::cout << "c0_all_equal: " << z.c0_all_equal << '\n';
    }
    sat = c.zero ? is_zero_satisfiable_Q(seq) : is_satisfiable_Q(seq);
  }
  std::cout << "verdict: " << (sat ? "sat" : "unsat") << '\n';
  return sat ? kExitYes : kExitNo;
}

int cmd_synth(const Config& c) {
  const Domain d = domain_of(c);
  auto res = synthesize(load_one_sided(c.input), d);
  std::cout << res.summary();
  const fs::path dir(c.out);
  const std::string stem = fs::path(c.input).stem().string() + "." + domain_name(d);
  if (res.realizable) {
    write_file(dir / (stem + ".transducer.json"), dump_transducer(*res.transducer));
    write_file(dir / (stem + ".transducer.dot"), export_dot(*res.transducer));
    std::cout << "wrote " << (dir / (stem + ".transducer.json")).string() << '\n';
    return kExitYes;
  }
  // Sample play of Adam's strategy against an Eve that always answers the first label.
  auto adam = res.adam_strategy();
  auto trace = simulate_adam(res.spec, adam, [](int, std::size_t) { return 0; }, 12);
  std::ostringstream report;
  report << res.summary() << "\nsample play against the first-label Eve:\n" << format_trace(trace, res.spec);
  write_file(dir / (stem + ".adam.txt"), report.str());
  std::cout << "wrote " << (dir / (stem + ".adam.txt")).string() << '\n';
  return kExitNo;
}

int cmd_solve(const Config& c) {
  const Domain d = domain_of(c);
  auto game = build_parity_game(load_one_sided(c.input), d);
  auto sol = solve_parity(game.game);
  std::cout << solve_report(game.game, sol);
  const bool eve = sol.eve_wins(game.game.initial);
  std::cout << "winner at initial vertex: " << (eve ? "Eve" : "Adam") << '\n';
  return eve ? kExitYes : kExitNo;
}

int cmd_export_dot(const Config& c) {
  auto spec = load_one_sided(c.input);
  std::string dot;
  if (c.what == "spec") {
    dot = export_dot(spec);
  } else if (c.what == "game") {
    dot = export_dot(build_parity_game(spec, domain_of(c)).game);
  } else if (c.what == "transducer") {
    auto res = synthesize(spec, domain_of(c));
    if (!res.realizable) {
      std::cerr << "no transducer: unrealizable over " << domain_name(res.domain) << '\n';
      return kExitNo;
    }
    dot = export_dot(*res.transducer);
  } else {
    throw std::invalid_argument("--what must be spec, game or transducer");
  }
  if (c.out == "-" || c.out == ".") std::cout << dot;
  else write_file(c.out, dot);
  return kExitYes;
}

std::string format_valuation(const Valuation& v, const RegisterSet& regs) {
  std::string out;
  for (int r = 0; r < regs.size(); ++r)
    out += (r ? " " : "") + regs.name(r) + "=" + to_string(v[static_cast<std::size_t>(r)]);
  return out;
}

void report_sink(SinkKind k) {
  if (k == SinkKind::EveWins) std::cout << "  Eve-win region reached: every continuation is won by Eve\n";
  if (k == SinkKind::AdamWins) std::cout << "  Adam-win region reached: every continuation is won by Adam\n";
}

bool read_token(std::string& token) {
  std::string line;
  while (std::getline(std::cin, line)) {
    std::istringstream ls(line);
    if (ls >> token) return true;
    std::cout << "> " << std::flush;
  }
  return false;
}

bool is_quit(const std::string& t) { return t == "q" || t == "quit" || t == "exit"; }

int cmd_play(const Config& c) {
  const Domain d = domain_of(c);
  auto spec = load_one_sided(c.input);
  const auto sinks = classify_sinks(spec);
  if (c.side == "adam") {
    RegisterTransducer t;
    if (!c.transducer.empty()) {
      t = load_transducer(read_file(c.transducer));
    } else {
      auto res = synthesize(spec, d);
      if (!res.realizable) {
        std::cout << "Eve has no winning strategy over " << domain_name(d) << "; nothing to play against\n";
        return kExitNo;
      }
      t = *res.transducer;
    }
    TransducerRun run(t);
    int q = spec.initial;
    std::cout << "You are Adam: enter data values (" << domain_name(d) << "), q to quit.\n> " << std::flush;
    std::string token;
    while (read_token(token)) {
      if (is_quit(token)) break;
      auto datum = parse_value(token, d);
      if (!datum) {
        std::cout << "  not a " << domain_name(d) << " value: " << token << "\n> " << std::flush;
        continue;
      }
      auto out = run.feed(*datum);
      const AdamMove& mv = spec.adam_delta[static_cast<std::size_t>(q)][out.test.code()];
      const int next = spec.eve_delta[static_cast<std::size_t>(mv.target)][static_cast<std::size_t>(out.label)];
      std::cout << "  test " << format_test(out.test, spec.registers) << ", assign "
                << format_assignment(out.asgn, spec.registers) << "\n  registers "
                << format_valuation(run.valuation(), spec.registers) << "\n  Eve answers "
                << spec.labels[static_cast<std::size_t>(out.label)] << ", state " << spec.states[static_cast<std::size_t>(next)].name
                << '\n';
      report_sink(sinks[static_cast<std::size_t>(mv.target)]);
      q = next;
      std::cout << "> " << std::flush;
    }
    std::cout << "bye\n";
    return kExitYes;
  }
  if (c.side != "eve") throw std::invalid_argument("--side must be adam or eve");
  auto res = synthesize(spec, d);
  if (res.realizable) {
    std::cout << "Adam has no winning strategy over " << domain_name(d) << "; nothing to play against\n";
    return kExitNo;
  }
  auto adam = res.adam_strategy();
  Valuation val = zero_valuation(spec.registers.size());
  int q = spec.initial;
  std::cout << "You are Eve: answer with a label (";
  for (std::size_t l = 0; l < spec.labels.size(); ++l) std::cout << (l ? " " : "") << spec.labels[l];
  std::cout << "), q to quit.\n";
  std::string token;
  while (true) {
    auto mv = adam.next();
    const AdamMove& sm = spec.adam_delta[static_cast<std::size_t>(q)][mv.test.code()];
    val = update_valuation(val, mv.datum, sm.asgn);
    std::cout << "Adam plays " << to_string(mv.datum) << "\n  test " << format_test(mv.test, spec.registers)
              << ", assign " << format_assignment(sm.asgn, spec.registers) << "\n  registers "
              << format_valuation(val, spec.registers) << ", state " << spec.states[static_cast<std::size_t>(sm.target)].name
              << '\n';
    report_sink(sinks[static_cast<std::size_t>(sm.target)]);
    int label = -1;
    std::cout << "> " << std::flush;
    while (label < 0) {
      if (!read_token(token) || is_quit(token)) {
        std::cout << "bye\n";
        return kExitYes;
      }
      label = spec.find_label(token);
      if (label < 0) std::cout << "  unknown label: " << token << "\n> " << std::flush;
    }
    adam.observe(label);
    q = spec.eve_delta[static_cast<std::size_t>(sm.target)][static_cast<std::size_t>(label)];
  }
}

int cmd_oracle(const Config& c) {
  oracle::Options o;
  o.seed = c.seed;
  o.inject_fault = c.inject_fault;
  if (c.sizes_given) o.prefix_cases = o.lasso_cases = o.nba_cases = o.game_cases = c.sizes;
  auto results = oracle::run_all(o);
  std::cout << "seed: " << c.seed << '\n' << oracle::format_report(results);
  for (const auto& r : results)
    if (!r.passed()) return kExitNo;
  return kExitYes;
}

std::uint64_t default_seed() {
  if (const char* env = std::getenv("REGSYNTH_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      std::cerr << "ignoring malformed REGSYNTH_SEED\n";
    }
  }
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Synthesis of register transducers from one-sided register automata over N and Q"};
  app.require_subcommand(1);
  Config c;
  c.seed = default_seed();
  app.add_flag("-v,--verbose", c.verbosity, "More output");

  auto domain_opt = [&](CLI::App* sub) {
    sub->add_option("--domain", c.domain, "Data domain: nat or rat")->check(CLI::IsMember({"nat", "rat"}));
  };

  auto* check = app.add_subcommand("check-sat", "Satisfiability of a constraint lasso");
  check->add_option("path", c.input, "Constraint lasso file")->required();
  domain_opt(check);
  check->add_flag("--zero", c.zero, "Require the all-zero initial valuation");

  auto* synth = app.add_subcommand("synth", "Synthesize a transducer or an Adam strategy");
  synth->add_option("path", c.input, "Spec file (.rsa)")->required();
  domain_opt(synth);
  synth->add_option("--out", c.out, "Output directory");

  auto* solve = app.add_subcommand("solve", "Build and solve the parity game");
  solve->add_option("path", c.input, "Spec file (.rsa)")->required();
  domain_opt(solve);

  auto* play = app.add_subcommand("play", "Interactive play against a synthesized strategy");
  play->add_option("path", c.input, "Spec file (.rsa)")->required();
  domain_opt(play);
  play->add_option("--side", c.side, "Your side: adam or eve")->check(CLI::IsMember({"adam", "eve"}));
  play->add_option("--transducer", c.transducer, "Transducer dump to play against (side adam)");

  auto* dot = app.add_subcommand("export-dot", "Graphviz export of the input automaton, game or transducer");
  dot->add_option("path", c.input, "Spec file (.rsa)")->required();
  domain_opt(dot);
  dot->add_option("--what", c.what, "spec, game or transducer")->check(CLI::IsMember({"spec", "game", "transducer"}));
  dot->add_option("--out", c.out, "Output file (stdout by default)");

  auto* orc = app.add_subcommand("oracle", "Randomized cross-validation suites");
  orc->add_option("--seed", c.seed, "Random seed (default: REGSYNTH_SEED or 1)");
  orc->add_option("--sizes", c.sizes, "Cases per suite");
  orc->add_flag("--inject-fault", c.inject_fault, "Compare against deliberately wrong variants");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitError;
  }
  c.sizes_given = orc->count("--sizes") > 0;
  try {
    if (*check) return cmd_check_sat(c);
    if (*synth) return cmd_synth(c);
    if (*solve) return cmd_solve(c);
    if (*play) return cmd_play(c);
    if (*dot) return cmd_export_dot(c);
    if (*orc) return cmd_oracle(c);
  } catch (const SpecError& e) {
    std::cerr << "spec error: " << e.what() << '\n';
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}
