#include "abmod/cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include "abmod/json_out.hpp"
#include "abmod/oracle.hpp"
#include "abmod/selfcheck.hpp"

namespace abmod {

namespace {

std::uint64_t env_seed() {
  if (const char* s = std::getenv("ABMOD_SEED")) {
    try {
      return std::stoull(s);
    } catch (...) {
      throw InputError("ABMOD_SEED is not a number");
    }
  }
  return kDefaultSeed;
}

void emit(const Json& j, const std::string& json_out_path, std::ostream& out) {
  std::string text = j.dump(2);
  if (!json_out_path.empty()) {
    std::ofstream f(json_out_path);
    if (!f) throw InputError("cannot open --json-out path " + json_out_path);
    f << text << "\n";
  }
  out << text << "\n";
}

struct CommonOpts {
  std::uint64_t seed;
  unsigned max_field_deg = 3;
  unsigned max_ram = 2;
  unsigned precision = 3;
  std::size_t dnf_cap = 4096;
  std::uint64_t enum_cap = std::uint64_t{1} << 18;
  std::string json_out;
  bool timing = false;

  DecideBudget budget() const {
    DecideBudget b;
    b.max_field_deg = max_field_deg;
    b.max_ram = max_ram;
    b.max_cap = precision;
    b.max_level_assignments = enum_cap;
    b.dnf_cap = dnf_cap;
    b.seed = seed;
    return b;
  }
};

void add_common(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--seed", o.seed, "deterministic seed");
  cmd->add_option("--max-field-deg", o.max_field_deg,
                  "largest residue extension degree searched");
  cmd->add_option("--max-ram", o.max_ram, "largest ramification exponent");
  cmd->add_option("--precision", o.precision,
                  "largest truncation cap used by witness search");
  cmd->add_option("--dnf-cap", o.dnf_cap, "conjunct budget for DNF expansion");
  cmd->add_option("--enum-cap", o.enum_cap,
                  "assignment budget for exhaustive enumeration");
  cmd->add_option("--json-out", o.json_out, "also write the JSON to a file");
  cmd->add_flag("--timing", o.timing, "include elapsed_ms in the output");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"decision engine for polynomial systems over the quotients "
               "of the abelian algebraic integers modulo primes"};
  app.require_subcommand(1);

  CommonOpts opts;
  opts.seed = env_seed();

  // decide
  auto* decide = app.add_subcommand(
      "decide", "decide a sentence modulo one prime or all primes");
  std::uint64_t prime = 0;
  bool all_primes = false;
  std::uint64_t prime_bound = 50;
  std::string sentence_text;
  decide->add_option("--prime", prime, "decide modulo this prime");
  decide->add_flag("--all-primes", all_primes, "decide for every prime");
  decide->add_option("--prime-bound", prime_bound,
                     "bound for the refutation scan of general sentences");
  decide->add_option("sentence", sentence_text, "existential sentence")
      ->required();
  add_common(decide, opts);

  // reduce
  auto* reduce = app.add_subcommand(
      "reduce", "emit the DNF, padded, replicated and gap forms");
  std::string reduce_text;
  reduce->add_option("sentence", reduce_text, "existential sentence")
      ->required();
  add_common(reduce, opts);

  // oracle
  auto* oracle = app.add_subcommand(
      "oracle", "exhaustive satisfaction over an explicit finite model");
  std::uint64_t o_prime = 2;
  unsigned o_k = 1, o_e = 0;
  unsigned o_cyclotomic = 0;
  std::string oracle_text;
  oracle->add_option("--prime", o_prime, "residue characteristic")->required();
  oracle->add_option("--k", o_k, "residue extension degree");
  oracle->add_option("--e", o_e, "ramification exponent");
  oracle->add_option("--cyclotomic", o_cyclotomic,
                     "use the N-th cyclotomic quotient instead");
  oracle->add_option("sentence", oracle_text, "existential sentence")
      ->required();
  add_common(oracle, opts);

  // selfcheck
  auto* selfcheck = app.add_subcommand(
      "selfcheck", "run the built-in algebra/reduction invariant suites");
  std::string suite;
  bool inject_fault = false;
  selfcheck->add_option("--suite", suite, "run a single suite by name");
  selfcheck->add_flag("--inject-fault", inject_fault,
                      "harness hook: force one failing case");
  add_common(selfcheck, opts);

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 2;
  }

  const auto t0 = std::chrono::steady_clock::now();
  auto elapsed_ms = [&]() {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - t0)
        .count();
  };

  try {
    if (decide->parsed()) {
      if (all_primes == (prime != 0))
        throw InputError("pass exactly one of --prime or --all-primes");
      Sentence s = parse_sentence(sentence_text);
      Json j;
      j["schema"] = "abmod/1";
      j["command"] = "decide";
      j["sentence"] = to_string(s);
      j["seed"] = opts.seed;
      if (all_primes) {
        AllPrimesConfig cfg;
        cfg.per_prime = opts.budget();
        cfg.general_prime_bound = prime_bound;
        auto verdict = decide_all_primes(s, cfg);
        j["mode"] = "all_primes";
        j["result"] = all_primes_json(verdict, s);
      } else {
        auto verdict = decide_mod_p(s, prime, opts.budget());
        j["mode"] = "mod_p";
        j["result"] = verdict_json(verdict, s);
      }
      if (opts.timing) j["elapsed_ms"] = elapsed_ms();
      emit(j, opts.json_out, out);
      return 0;
    }
    if (reduce->parsed()) {
      Sentence s = parse_sentence(reduce_text);
      Json j;
      j["schema"] = "abmod/1";
      j["command"] = "reduce";
      j["result"] = reduce_json(s, opts.dnf_cap);
      if (opts.timing) j["elapsed_ms"] = elapsed_ms();
      emit(j, opts.json_out, out);
      return 0;
    }
    if (oracle->parsed()) {
      Sentence s = parse_sentence(oracle_text);
      Json j;
      j["schema"] = "abmod/1";
      j["command"] = "oracle";
      j["sentence"] = to_string(s);
      OracleBudget ob;
      ob.max_assignments = opts.enum_cap;
      Json result;
      if (o_cyclotomic > 0) {
        auto model = build_cyclotomic_model(o_cyclotomic, o_prime, ob);
        auto res = brute_sat(model.ring, s.matrix,
                             static_cast<unsigned>(s.vars.size()), ob);
        result["model"] = "F_" + std::to_string(o_prime) +
                          "[x]/Phi_" + std::to_string(o_cyclotomic);
        result["components"] = model.component_count();
        result["sat"] = res.sat;
        result["tried"] = res.tried;
        if (res.sat) {
          Json w = Json::object();
          for (std::size_t i = 0; i < res.witness.size(); ++i)
            w[s.vars[i]] = model.ring.to_string(res.witness[i]);
          result["witness"] = w;
        }
      } else {
        auto model = build_local_model(o_prime, o_k, o_e, ob);
        SeriesRingCtx R{model.ring};
        auto res = brute_sat(R, s.matrix,
                             static_cast<unsigned>(s.vars.size()), ob);
        result["model"] = "F_{" + std::to_string(o_prime) + "^" +
                          std::to_string(o_k) + "}[t^(1/p^" +
                          std::to_string(o_e) + ")]/t^" +
                          std::to_string(o_prime - 1);
        result["sat"] = res.sat;
        result["tried"] = res.tried;
        if (res.sat) {
          Json w = Json::object();
          for (std::size_t i = 0; i < res.witness.size(); ++i)
            w[s.vars[i]] = R.to_string(res.witness[i]);
          result["witness"] = w;
        }
      }
      j["result"] = result;
      if (opts.timing) j["elapsed_ms"] = elapsed_ms();
      emit(j, opts.json_out, out);
      return 0;
    }
    if (selfcheck->parsed()) {
      SelfcheckOptions so;
      so.suite_filter = suite;
      so.inject_fault = inject_fault;
      so.seed = opts.seed;
      auto results = run_selfcheck(so);
      if (results.empty()) throw InputError("unknown suite: " + suite);
      bool any_fail = false;
      Json j;
      j["schema"] = "abmod/1";
      j["command"] = "selfcheck";
      Json suites = Json::array();
      for (const auto& r : results) {
        any_fail |= r.failures > 0;
        out << (r.failures == 0 ? "[pass] " : "[FAIL] ") << r.name << ": "
            << (r.cases - r.failures) << "/" << r.cases << " checks\n";
        for (const auto& ex : r.failure_examples)
          out << "        counterexample: " << ex << "\n";
        Json sj;
        sj["name"] = r.name;
        sj["cases"] = r.cases;
        sj["failures"] = r.failures;
        sj["examples"] = r.failure_examples;
        suites.push_back(std::move(sj));
      }
      j["suites"] = suites;
      if (!opts.json_out.empty()) emit(j, opts.json_out, out);
      return any_fail ? 1 : 0;
    }
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return 2;
  } catch (const ResourceError& e) {
    err << "resource error: " << e.what() << "\n";
    return 3;
  }
  err << "error: no subcommand\n";
  return 2;
}

}  // namespace abmod
