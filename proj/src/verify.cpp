#include "odometer/verify.hpp"

#include <algorithm>
#include <stdexcept>

#include "odometer/machine.hpp"

namespace odometer::verify {

PAdicApprox random_padic(Rng& rng, Base base, int precision) {
  std::vector<digit_t> digits(static_cast<std::size_t>(precision));
  for (auto& d : digits) d = static_cast<digit_t>(rng.below(base.p()));
  return PAdicApprox(base, std::move(digits));
}

Word random_word(Rng& rng, Base base, int length) {
  std::vector<digit_t> letters(static_cast<std::size_t>(length));
  for (auto& x : letters) x = static_cast<digit_t>(rng.below(base.p()));
  return Word(base, std::move(letters));
}

Perm random_perm(Rng& rng, std::int64_t p) {
  std::vector<digit_t> images(static_cast<std::size_t>(p));
  for (std::int64_t x = 0; x < p; ++x) images[static_cast<std::size_t>(x)] = static_cast<digit_t>(x);
  for (std::int64_t i = p - 1; i > 0; --i)
    std::swap(images[static_cast<std::size_t>(i)],
              images[static_cast<std::size_t>(rng.below(i + 1))]);
  return Perm(std::move(images));
}

Portrait random_portrait(Rng& rng, Base base, int depth) {
  Portrait::Builder out(base, depth);
  for (int l = 0; l < depth; ++l) {
    const std::int64_t width = out.level_width(l);
    for (std::int64_t v = 0; v < width; ++v) out.set_perm(l, v, random_perm(rng, base.p()));
  }
  return std::move(out).build();
}

namespace {

void check_config(const Config& config) {
  if (config.depth < 1) throw std::invalid_argument("verify depth must be >= 1");
  if (config.cases < 1) throw std::invalid_argument("verify case count must be >= 1");
}

// Copy of g with every level >= from_level re-randomized, so the result
// stays within distance p^-from_level of g.
Portrait perturb_below(Rng& rng, const Portrait& g, int from_level) {
  Portrait::Builder out(g.base(), g.depth());
  for (int l = 0; l < g.depth(); ++l) {
    const std::int64_t width = out.level_width(l);
    for (std::int64_t v = 0; v < width; ++v) {
      if (l < from_level)
        out.set_perm(l, v, g.perm_at(l, v));
      else
        out.set_perm(l, v, random_perm(rng, g.base().p()));
    }
  }
  return std::move(out).build();
}

SuiteResult run_oracle(const Config& config) {
  SuiteResult result{"oracle"};
  Rng rng(config.seed);
  for (std::int64_t c = 0; c < config.cases; ++c) {
    const std::int64_t n = rng.range(-1'000'000, 1'000'000);
    const int length = static_cast<int>(rng.range(1, config.depth));
    const Word w = random_word(rng, config.base, length);
    const Portrait power = machine_power_portrait(n, config.base, length);
    ++result.cases;
    const Word fast = adding_apply(n, w);
    const Word lifted = adding_apply(PAdicApprox::from_int(n, config.base, length), w);
    if (!(fast == power.apply(w)) || !(lifted == fast)) ++result.failures;
  }
  return result;
}

SuiteResult run_stabilizer(const Config& config) {
  SuiteResult result{"stabilizer"};
  std::int64_t limit = 1;
  for (int k = 0; k < config.depth && limit <= 4096; ++k) limit *= config.base.p();
  limit = std::min<std::int64_t>(limit, 4096);
  for (std::int64_t n = 0; n <= limit; ++n) {
    const Portrait g = machine_power_portrait(n, config.base, config.depth);
    const auto stab = stabilizer_depth(g);
    const int fixed = stab ? *stab : g.depth();
    std::int64_t pk = 1;
    for (int k = 0; k <= config.depth; ++k) {
      ++result.cases;
      const bool fixes_level = k <= fixed;
      const bool divides = n % pk == 0;
      if (fixes_level != divides) ++result.failures;
      if (pk > (std::int64_t{1} << 60) / config.base.p()) break;
      pk *= config.base.p();
    }
  }
  return result;
}

SuiteResult run_isometry(const Config& config) {
  SuiteResult result{"isometry"};
  Rng rng(config.seed);
  for (std::int64_t c = 0; c < config.cases; ++c) {
    const PAdicApprox alpha = random_padic(rng, config.base, config.depth);
    const PAdicApprox beta = rng.below(16) == 0 ? alpha : random_padic(rng, config.base, config.depth);
    ++result.cases;
    if (!(padic_distance(alpha, beta) ==
          metric_distance(embed(alpha).portrait, embed(beta).portrait)))
      ++result.failures;
  }
  return result;
}

SuiteResult run_homomorphism(const Config& config) {
  SuiteResult result{"homomorphism"};
  Rng rng(config.seed);
  for (std::int64_t c = 0; c < config.cases; ++c) {
    const PAdicApprox alpha = random_padic(rng, config.base, config.depth);
    const PAdicApprox beta = random_padic(rng, config.base, config.depth);
    ++result.cases;
    bool ok = embed_add_check(alpha, beta);
    if (ok) {
      const auto sum = recognize(compose(embed(alpha).portrait, embed(beta).portrait));
      ok = sum && *sum == padic_add(alpha, beta);
    }
    if (ok) {
      const auto neg = recognize(inverse(embed(alpha).portrait));
      ok = neg && *neg == padic_neg(alpha);
    }
    if (!ok) ++result.failures;
  }
  return result;
}

SuiteResult run_ultrametric(const Config& config) {
  SuiteResult result{"ultrametric"};
  Rng rng(config.seed);
  for (std::int64_t c = 0; c < config.cases; ++c) {
    const Portrait g1 = random_portrait(rng, config.base, config.depth);
    const Portrait g2 = rng.below(16) == 0 ? g1 : random_portrait(rng, config.base, config.depth);
    const Portrait g3 = random_portrait(rng, config.base, config.depth);
    const Portrait f = random_portrait(rng, config.base, config.depth);
    ++result.cases;
    const UltraDist d12 = metric_distance(g1, g2);
    const UltraDist d23 = metric_distance(g2, g3);
    const UltraDist d13 = metric_distance(g1, g3);
    bool ok = d13 <= ultra_max(d12, d23);
    ok = ok && d12 == metric_distance(g2, g1);
    ok = ok && (d12.is_below_resolution() == (g1 == g2));
    ok = ok && metric_distance(compose(f, g1), compose(f, g2)) == d12;
    if (!ok) ++result.failures;
  }
  return result;
}

SuiteResult run_continuity(const Config& config) {
  SuiteResult result{"continuity"};
  Rng rng(config.seed);
  for (std::int64_t c = 0; c < config.cases; ++c) {
    const Portrait g0 = random_portrait(rng, config.base, config.depth);
    const Portrait h0 = random_portrait(rng, config.base, config.depth);
    const int n = static_cast<int>(rng.range(1, config.depth));
    const Portrait g = perturb_below(rng, g0, n);
    const Portrait h = perturb_below(rng, h0, n);
    const UltraDist bound = UltraDist::exact(n);
    ++result.cases;
    bool ok = metric_distance(compose(g, h), compose(g0, h0)) <= bound;
    ok = ok && metric_distance(inverse(g), inverse(g0)) <= bound;
    if (!ok) ++result.failures;
  }
  return result;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"oracle",       "stabilizer",  "isometry",
                                              "homomorphism", "ultrametric", "continuity"};
  return names;
}

SuiteResult run_suite(const std::string& name, const Config& config) {
  check_config(config);
  if (name == "oracle") return run_oracle(config);
  if (name == "stabilizer") return run_stabilizer(config);
  if (name == "isometry") return run_isometry(config);
  if (name == "homomorphism") return run_homomorphism(config);
  if (name == "ultrametric") return run_ultrametric(config);
  if (name == "continuity") return run_continuity(config);
  throw std::invalid_argument("unknown suite '" + name + "'");
}

std::vector<SuiteResult> run(const std::string& name, const Config& config) {
  std::vector<SuiteResult> results;
  if (name == "all") {
    for (const auto& suite : suite_names()) results.push_back(run_suite(suite, config));
  } else {
    results.push_back(run_suite(name, config));
  }
  return results;
}

}  // namespace odometer::verify
