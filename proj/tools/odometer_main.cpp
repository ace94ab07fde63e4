// Command-line front door for the odometer library: truncated p-adic
// arithmetic, odometer orbits, portrait rendering, closure membership
// testing, and the seeded verification suites.

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "odometer/io.hpp"
#include "odometer/machine.hpp"
#include "odometer/verify.hpp"

namespace {

using nlohmann::json;
using namespace odometer;

constexpr int kExitOk = 0;
constexpr int kExitSuiteFailure = 1;
constexpr int kExitUsage = 2;

struct Options {
  std::int64_t p = 2;
  int precision = -1;  // -1 = not set
  bool allow_composite = false;
  std::string output = "text";
  std::uint64_t seed = 0;
  bool seed_given = false;
  std::int64_t cases = 200;
};

std::uint64_t env_seed() {
  if (const char* text = std::getenv("ODOMETER_SEED")) {
    try {
      return std::stoull(text);
    } catch (const std::exception&) {
      throw std::invalid_argument("ODOMETER_SEED is not an unsigned integer");
    }
  }
  return 0;
}

Base make_base(const Options& opt) { return Base(opt.p, opt.allow_composite); }

int require_precision(const Options& opt) {
  if (opt.precision < 1)
    throw std::invalid_argument("a positive --precision/--depth is required");
  return opt.precision;
}

void check_output(const Options& opt, bool dot_allowed) {
  if (opt.output == "text" || opt.output == "json") return;
  if (opt.output == "dot" && dot_allowed) return;
  throw std::invalid_argument("unsupported output format '" + opt.output + "'");
}

void print_portrait(const Portrait& g, const Options& opt) {
  if (opt.output == "json")
    std::cout << io::portrait_to_json(g).dump(2) << '\n';
  else if (opt.output == "dot")
    std::cout << io::portrait_to_dot(g);
  else
    std::cout << io::render_portrait_text(g);
}

int cmd_padic(const std::string& op, const std::vector<std::string>& operands,
              const Options& opt) {
  check_output(opt, false);
  const Base base = make_base(opt);
  const std::optional<int> precision =
      opt.precision >= 0 ? std::optional<int>(opt.precision) : std::nullopt;
  const std::size_t arity = (op == "neg" || op == "order") ? 1 : 2;
  if (operands.size() != arity)
    throw std::invalid_argument("padic " + op + " takes " + std::to_string(arity) +
                                " operand(s)");
  const PAdicApprox a = io::parse_padic(operands[0], base, precision);
  if (op == "neg") {
    const PAdicApprox r = padic_neg(a);
    std::cout << (opt.output == "json" ? io::padic_to_json(r).dump() : io::render_digits(r))
              << '\n';
    return kExitOk;
  }
  if (op == "order") {
    const auto k = padic_order(a);
    if (opt.output == "json")
      std::cout << json{{"order", k ? json(*k) : json()}}.dump() << '\n';
    else
      std::cout << (k ? std::to_string(*k) : "beyond precision") << '\n';
    return kExitOk;
  }
  const PAdicApprox b = io::parse_padic(operands[1], base, precision);
  if (op == "add" || op == "sub") {
    const PAdicApprox r = op == "add" ? padic_add(a, b) : padic_sub(a, b);
    std::cout << (opt.output == "json" ? io::padic_to_json(r).dump() : io::render_digits(r))
              << '\n';
    return kExitOk;
  }
  if (op == "dist") {
    const UltraDist d = padic_distance(a, b);
    std::cout << (opt.output == "json" ? io::distance_to_json(d).dump() : io::render_distance(d))
              << '\n';
    return kExitOk;
  }
  throw std::invalid_argument("unknown padic operation '" + op + "'");
}

int cmd_orbit(std::int64_t n, const std::string& word_text, const Options& opt) {
  check_output(opt, false);
  const Base base = make_base(opt);
  const Word w = io::parse_word(word_text, base);
  const Word image = adding_apply(n, w);
  if (opt.output == "json")
    std::cout << json{{"word", io::render_word(image)}}.dump() << '\n';
  else
    std::cout << io::render_word(image) << '\n';
  return kExitOk;
}

int cmd_phi(const std::string& alpha_text, const Options& opt) {
  check_output(opt, true);
  const Base base = make_base(opt);
  const int depth = require_precision(opt);
  const PAdicApprox alpha = io::parse_padic(alpha_text, base, depth);
  print_portrait(embed(alpha).portrait, opt);
  return kExitOk;
}

int cmd_a_power(std::int64_t n, const Options& opt) {
  check_output(opt, true);
  const Base base = make_base(opt);
  print_portrait(machine_power_portrait(n, base, require_precision(opt)), opt);
  return kExitOk;
}

int cmd_recognize(const std::string& path, const Options& opt) {
  check_output(opt, false);
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw std::invalid_argument("malformed portrait JSON: " + std::string(e.what()));
  }
  const Portrait g = io::portrait_from_json(j, opt.allow_composite);
  const auto digits = recognize(g);
  if (opt.output == "json") {
    json out{{"in_closure", digits.has_value()}};
    if (digits) {
      out["p"] = digits->base().p();
      out["precision"] = digits->precision();
      out["digits"] = digits->digits();
    }
    std::cout << out.dump() << '\n';
  } else {
    std::cout << (digits ? io::render_digits(*digits) : std::string("not in closure")) << '\n';
  }
  return kExitOk;
}

int cmd_verify(const std::string& suite, const Options& opt) {
  check_output(opt, false);
  const verify::Config config{make_base(opt), opt.precision >= 0 ? opt.precision : 8, opt.cases,
                              opt.seed_given ? opt.seed : env_seed()};
  if (suite != "all") {
    const auto& names = verify::suite_names();
    if (std::find(names.begin(), names.end(), suite) == names.end())
      throw std::invalid_argument("unknown suite '" + suite + "'");
  }
  const auto results = verify::run(suite, config);
  bool all_pass = true;
  for (const auto& r : results) all_pass = all_pass && r.pass();
  if (opt.output == "json") {
    json suites = json::array();
    for (const auto& r : results)
      suites.push_back({{"suite", r.suite},
                        {"cases", r.cases},
                        {"failures", r.failures},
                        {"pass", r.pass()}});
    std::cout << json{{"p", config.base.p()},
                      {"depth", config.depth},
                      {"cases", config.cases},
                      {"seed", config.seed},
                      {"suites", suites},
                      {"pass", all_pass}}
                     .dump(2)
              << '\n';
  } else {
    std::cout << "verify p=" << config.base.p() << " depth=" << config.depth
              << " cases=" << config.cases << " seed=" << config.seed << '\n';
    for (const auto& r : results)
      std::cout << "  " << r.suite << ": cases=" << r.cases << " failures=" << r.failures
                << (r.pass() ? " pass" : " FAIL") << '\n';
    std::cout << "result: " << (all_pass ? "pass" : "FAIL") << '\n';
  }
  return all_pass ? kExitOk : kExitSuiteFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact truncated p-adic integers and odometer portraits"};
  app.require_subcommand(1);

  Options opt;
  std::string padic_op;
  std::vector<std::string> padic_operands;
  std::string orbit_word;
  std::string alpha_text;
  std::string portrait_path;
  std::string suite = "all";
  std::int64_t exponent = 0;

  const auto add_common = [&](CLI::App* cmd, bool with_depth) {
    cmd->add_option("--p", opt.p, "alphabet size / digit base")->required();
    if (with_depth) cmd->add_option("--precision,--depth", opt.precision, "digits / tree depth");
    cmd->add_flag("--allow-composite", opt.allow_composite, "accept a composite base");
    cmd->add_option("--output", opt.output, "text|json|dot");
  };

  auto* padic = app.add_subcommand("padic", "digit arithmetic on truncated p-adic integers");
  padic->add_option("op", padic_op, "add|neg|sub|dist|order")->required();
  padic->add_option("operands", padic_operands, "digit lists or int:K");
  add_common(padic, true);

  auto* orbit = app.add_subcommand("orbit", "image of a word under the odometer power a^n");
  orbit->add_option("n", exponent, "exponent")->required();
  orbit->add_option("word", orbit_word, "word over {0..p-1}")->required();
  add_common(orbit, false);

  auto* phi = app.add_subcommand("phi", "embed a truncated p-adic integer as a portrait");
  phi->add_option("alpha", alpha_text, "digit list or int:K")->required();
  add_common(phi, true);

  auto* apower = app.add_subcommand("a-power", "portrait of a^n at a given depth");
  apower->add_option("n", exponent, "exponent")->required();
  add_common(apower, true);

  auto* recog = app.add_subcommand("recognize", "closure membership test for a portrait file");
  recog->add_option("file", portrait_path, "portrait JSON file")->required();
  recog->add_flag("--allow-composite", opt.allow_composite, "accept a composite base");
  recog->add_option("--output", opt.output, "text|json");

  auto* verify_cmd = app.add_subcommand("verify", "run the seeded property suites");
  verify_cmd->add_option("suite", suite,
                         "all|oracle|stabilizer|isometry|homomorphism|ultrametric|continuity");
  add_common(verify_cmd, true);
  verify_cmd->add_option("--cases", opt.cases, "cases per randomized suite");
  verify_cmd->add_option("--seed", opt.seed, "generator seed (fallback: ODOMETER_SEED)")
      ->each([&](const std::string&) { opt.seed_given = true; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (padic->parsed()) return cmd_padic(padic_op, padic_operands, opt);
    if (orbit->parsed()) return cmd_orbit(exponent, orbit_word, opt);
    if (phi->parsed()) return cmd_phi(alpha_text, opt);
    if (apower->parsed()) return cmd_a_power(exponent, opt);
    if (recog->parsed()) return cmd_recognize(portrait_path, opt);
    if (verify_cmd->parsed()) return cmd_verify(suite, opt);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
