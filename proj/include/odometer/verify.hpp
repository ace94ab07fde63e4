#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "odometer/base.hpp"
#include "odometer/padic.hpp"
#include "odometer/portrait.hpp"
#include "odometer/words.hpp"

namespace odometer::verify {

// Deterministic generator for the property suites. Draws are reduced by
// modulus so a fixed seed yields the same cases on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  std::int64_t below(std::int64_t n) {
    return static_cast<std::int64_t>(next() % static_cast<std::uint64_t>(n));
  }
  std::int64_t range(std::int64_t lo, std::int64_t hi) {  // inclusive
    return lo + below(hi - lo + 1);
  }

 private:
  std::mt19937_64 engine_;
};

PAdicApprox random_padic(Rng& rng, Base base, int precision);
Word random_word(Rng& rng, Base base, int length);
Perm random_perm(Rng& rng, std::int64_t p);
Portrait random_portrait(Rng& rng, Base base, int depth);

struct Config {
  Base base;
  int depth = 8;
  std::int64_t cases = 200;
  std::uint64_t seed = 0;
};

struct SuiteResult {
  std::string suite;
  std::int64_t cases = 0;
  std::int64_t failures = 0;

  bool pass() const { return failures == 0; }
};

// Fixed running order: oracle, stabilizer, isometry, homomorphism,
// ultrametric, continuity.
const std::vector<std::string>& suite_names();

SuiteResult run_suite(const std::string& name, const Config& config);

// name "all" runs every suite; otherwise a single named suite.
std::vector<SuiteResult> run(const std::string& name, const Config& config);

}  // namespace odometer::verify
