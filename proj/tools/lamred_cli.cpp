// Command-line front end; talks to the engine exclusively through the C API
// of the shared library.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "lamred.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNonTerminating = 1;
constexpr int kExitUsage = 2;

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    return os.str();
  }
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

struct Engine {
  lamred_engine* p;
  Engine() : p(lamred_engine_new()) {}
  ~Engine() { lamred_engine_free(p); }
  const char* err() const { return lamred_engine_last_error(p); }
};

struct OwnedString {
  char* p = nullptr;
  ~OwnedString() { lamred_string_free(p); }
};

int run_normalize(const std::string& file, const std::string& strategy,
                  const std::string& form, bool trace, long long max_steps,
                  bool meter, bool unicode) {
  std::string src = read_input(file);
  if (trace && strategy != "explicit") {
    std::cerr << "--trace follows the explicit strategy's derivation; use "
                 "--strategy explicit\n";
    return kExitUsage;
  }
  if (trace) {
    Engine eng;
    lamred_term* t = nullptr;
    if (lamred_parse(eng.p, src.c_str(), &t) != LAMRED_OK) {
      std::cerr << "parse error: " << eng.err() << "\n";
      return kExitUsage;
    }
    OwnedString text;
    if (lamred_trace(eng.p, t, max_steps, unicode ? 1 : 0, &text.p) !=
        LAMRED_OK) {
      std::cerr << eng.err() << "\n";
      return kExitUsage;
    }
    std::cout << text.p;
  }
  Engine eng;
  lamred_term* t = nullptr;
  if (lamred_parse(eng.p, src.c_str(), &t) != LAMRED_OK) {
    std::cerr << "parse error: " << eng.err() << "\n";
    return kExitUsage;
  }
  lamred_meter_reset(eng.p);
  lamred_status st =
      lamred_normalize(eng.p, t, strategy.c_str(), form.c_str(), max_steps);
  if (st == LAMRED_ERR_NONTERMINATING || st == LAMRED_ERR_RESOURCE) {
    std::cerr << eng.err() << "\n";
    return kExitNonTerminating;
  }
  if (st != LAMRED_OK) {
    std::cerr << eng.err() << "\n";
    return kExitUsage;
  }
  OwnedString text;
  if (lamred_format(eng.p, t, unicode ? 1 : 0, &text.p) != LAMRED_OK) {
    std::cerr << eng.err() << "\n";
    return kExitUsage;
  }
  std::cout << text.p << "\n";
  if (meter) {
    OwnedString json;
    if (lamred_meter_json(eng.p, &json.p) == LAMRED_OK)
      std::cout << json.p << "\n";
  }
  return kExitOk;
}

int run_trace(const std::string& file, long long max_steps, bool unicode) {
  std::string src = read_input(file);
  Engine eng;
  lamred_term* t = nullptr;
  if (lamred_parse(eng.p, src.c_str(), &t) != LAMRED_OK) {
    std::cerr << "parse error: " << eng.err() << "\n";
    return kExitUsage;
  }
  OwnedString text;
  if (lamred_trace(eng.p, t, max_steps, unicode ? 1 : 0, &text.p) !=
      LAMRED_OK) {
    std::cerr << eng.err() << "\n";
    return kExitUsage;
  }
  std::cout << text.p;
  return kExitOk;
}

int run_bench(const std::string& suite, std::uint64_t seed, int count,
              int size, long long fuel, const std::string& strategy,
              const std::string& report) {
  nlohmann::json spec = {{"suite", suite},   {"seed", seed},
                         {"count", count},   {"size", size},
                         {"fuel", fuel},     {"strategy", strategy},
                         {"report", report}};
  std::string spec_str = spec.dump();
  OwnedString out, err;
  if (lamred_bench(spec_str.c_str(), &out.p, &err.p) != LAMRED_OK) {
    std::cerr << (err.p != nullptr ? err.p : "benchmark failed") << "\n";
    return kExitUsage;
  }
  std::cout << out.p;
  if (report != "table") std::cout << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"lamred: lambda-term normalization over the suspension "
               "notation, with three head-normalization strategies and "
               "heap-allocation metering"};
  app.require_subcommand(1);

  std::string file;
  std::string strategy = "combined";
  std::string form = "hnf";
  bool trace = false;
  bool meter = false;
  bool unicode = false;
  long long max_steps = 100000;

  CLI::App* normalize =
      app.add_subcommand("normalize", "parse a term and normalize it");
  normalize->add_option("file", file, "input file ('-' or absent for stdin)");
  normalize->add_option("--strategy", strategy,
                        "implicit | explicit | combined")
      ->check(CLI::IsMember({"implicit", "explicit", "combined"}));
  normalize->add_option("--form", form, "hnf | whnf | nf")
      ->check(CLI::IsMember({"hnf", "whnf", "nf"}));
  normalize->add_flag("--trace", trace,
                      "log the rule applications (explicit strategy)");
  normalize->add_option("--max-steps", max_steps, "beta-step budget");
  normalize->add_flag("--meter", meter, "print the allocation report");
  normalize->add_flag("--unicode", unicode, "unicode, fully parenthesized output");

  std::string tfile;
  bool tunicode = false;
  long long tmax_steps = 10000;
  CLI::App* trace_cmd = app.add_subcommand(
      "trace", "single-step rule log of the explicit strategy's derivation");
  trace_cmd->add_option("file", tfile, "input file ('-' or absent for stdin)");
  trace_cmd->add_option("--max-steps", tmax_steps, "maximum logged steps");
  trace_cmd->add_flag("--unicode", tunicode, "unicode, fully parenthesized output");

  std::string suite = "ski";
  std::uint64_t seed = 1;
  int count = 500;
  int size = 12;
  long long fuel = 100000;
  std::string bstrategy = "all";
  std::string report = "table";

  CLI::App* bench = app.add_subcommand("bench", "run a benchmark suite");
  bench->add_option("--suite", suite, "ski | church")
      ->check(CLI::IsMember({"ski", "church"}));
  bench->add_option("--seed", seed, "corpus seed");
  bench->add_option("--count", count, "number of cases");
  bench->add_option("--size", size,
                    "ski: internal application nodes; church: operand bound");
  bench->add_option("--fuel", fuel, "beta-step budget per case");
  bench->add_option("--strategy", bstrategy,
                    "implicit | explicit | combined | all")
      ->check(CLI::IsMember({"implicit", "explicit", "combined", "all"}));
  bench->add_option("--report", report, "table | json | csv")
      ->check(CLI::IsMember({"table", "json", "csv"}));

  std::string csuite = "ski";
  std::uint64_t cseed = 1;
  int ccount = 500;
  int csize = 12;
  long long cfuel = 100000;
  std::string creport = "table";
  CLI::App* compare = app.add_subcommand(
      "compare", "run all three strategies and tabulate their heap usage");
  compare->add_option("--suite", csuite, "ski | church")
      ->check(CLI::IsMember({"ski", "church"}));
  compare->add_option("--seed", cseed, "corpus seed");
  compare->add_option("--count", ccount, "number of cases");
  compare->add_option("--size", csize,
                      "ski: internal application nodes; church: operand bound");
  compare->add_option("--fuel", cfuel, "beta-step budget per case");
  compare->add_option("--report", creport, "table | json | csv")
      ->check(CLI::IsMember({"table", "json", "csv"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (normalize->parsed())
      return run_normalize(file, strategy, form, trace, max_steps, meter,
                           unicode);
    if (trace_cmd->parsed()) return run_trace(tfile, tmax_steps, tunicode);
    if (bench->parsed())
      return run_bench(suite, seed, count, size, fuel, bstrategy, report);
    if (compare->parsed())
      return run_bench(csuite, cseed, ccount, csize, cfuel, "all", creport);
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
