#include <stdexcept>

#include "doctest.h"
#include "odometer/verify.hpp"

using namespace odometer;

TEST_CASE("every suite passes at small scale") {
  for (std::int64_t p : {2, 3}) {
    const verify::Config config{Base(p), 6, 40, 12345};
    for (const auto& name : verify::suite_names()) {
      const auto result = verify::run_suite(name, config);
      CHECK(result.suite == name);
      CHECK(result.cases > 0);
      CHECK(result.failures == 0);
    }
  }
}

TEST_CASE("run all") {
  const verify::Config config{Base(2), 5, 20, 7};
  const auto results = verify::run("all", config);
  CHECK(results.size() == verify::suite_names().size());
  for (const auto& r : results) CHECK(r.pass());
}

TEST_CASE("degenerate depth") {
  const verify::Config config{Base(2), 1, 1, 0};
  CHECK(verify::run_suite("isometry", config).pass());
  CHECK(verify::run_suite("oracle", config).pass());
}

TEST_CASE("composite bases work under the override") {
  const verify::Config config{Base(10, true), 4, 25, 3};
  for (const auto& name : verify::suite_names())
    CHECK(verify::run_suite(name, config).pass());
}

TEST_CASE("identical seeds reproduce identical draws") {
  verify::Rng a(99);
  verify::Rng b(99);
  for (int i = 0; i < 1000; ++i) CHECK(a.next() == b.next());

  verify::Rng c(99);
  verify::Rng d(100);
  bool all_equal = true;
  for (int i = 0; i < 64; ++i) all_equal = all_equal && c.next() == d.next();
  CHECK_FALSE(all_equal);
}

TEST_CASE("config validation") {
  CHECK_THROWS_AS(verify::run_suite("oracle", verify::Config{Base(2), 0, 10, 0}),
                  std::invalid_argument);
  CHECK_THROWS_AS(verify::run_suite("oracle", verify::Config{Base(2), 4, 0, 0}),
                  std::invalid_argument);
  CHECK_THROWS_AS(verify::run_suite("nonsense", verify::Config{Base(2), 4, 10, 0}),
                  std::invalid_argument);
}
