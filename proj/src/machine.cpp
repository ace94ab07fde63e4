#include "odometer/machine.hpp"

#include <limits>
#include <stdexcept>

namespace odometer {

Word adding_apply(std::int64_t n, const Word& w) {
  const std::int64_t p = w.base().p();
  std::vector<digit_t> out(static_cast<std::size_t>(w.length()));
  std::int64_t rest = n;
  digit_t carry = 0;
  for (int i = 0; i < w.length(); ++i) {
    const std::int64_t q = floor_div(rest, p);
    const std::int64_t d = rest - q * p;
    rest = q;
    std::int64_t s = w.letters()[static_cast<std::size_t>(i)] + d + carry;
    if (s >= p) {  // s < 2p, so one subtraction settles the carry
      s -= p;
      carry = 1;
    } else {
      carry = 0;
    }
    out[static_cast<std::size_t>(i)] = static_cast<digit_t>(s);
  }
  return Word(w.base(), std::move(out));
}

Word adding_apply(const PAdicApprox& n, const Word& w) {
  if (!(n.base() == w.base()))
    throw std::invalid_argument("exponent/word base mismatch");
  if (n.precision() < w.length())
    throw std::invalid_argument("exponent precision shorter than the word");
  const std::int64_t p = w.base().p();
  std::vector<digit_t> out(static_cast<std::size_t>(w.length()));
  digit_t carry = 0;
  for (int i = 0; i < w.length(); ++i) {
    std::int64_t s = static_cast<std::int64_t>(w.letters()[static_cast<std::size_t>(i)]) +
                     n.digits()[static_cast<std::size_t>(i)] + carry;
    if (s >= p) {
      s -= p;
      carry = 1;
    } else {
      carry = 0;
    }
    out[static_cast<std::size_t>(i)] = static_cast<digit_t>(s);
  }
  return Word(w.base(), std::move(out));
}

Portrait adding_machine_portrait(Base base, int depth) {
  const std::int64_t p = base.p();
  std::map<std::string, WreathState> states;
  std::vector<std::string> machine_sections(static_cast<std::size_t>(p), "e");
  machine_sections.back() = "a";
  states.emplace("a", WreathState{std::move(machine_sections), Perm::rotation(p, 1)});
  states.emplace("e", WreathState{std::vector<std::string>(static_cast<std::size_t>(p), "e"),
                                  Perm::identity(p)});
  return unfold(WreathSpec(base, std::move(states), "a"), depth);
}

Portrait machine_power_portrait(std::int64_t n, Base base, int depth) {
  const std::int64_t p = base.p();
  Portrait::Builder out(base, depth);  // size guard; implies p^depth fits
  if (depth > 0) {
    const auto modulus = checked_pow(p, depth);
    n = mod_floor(n, *modulus);
  }
  // Section exponents: a^e at vertex v has sections a^((e+x) div p) and
  // applies the rotation by e mod p at v.
  std::vector<std::int64_t> exponents{n};
  std::vector<std::int64_t> next;
  for (int l = 0; l < depth; ++l) {
    const std::int64_t width = static_cast<std::int64_t>(exponents.size());
    const bool want_next = l + 1 < depth;
    if (want_next) next.assign(static_cast<std::size_t>(width * p), 0);
    for (std::int64_t v = 0; v < width; ++v) {
      const std::int64_t e = exponents[static_cast<std::size_t>(v)];
      const std::int64_t shift = e % p;
      auto span = out.images(l, v);
      for (std::int64_t x = 0; x < p; ++x) {
        std::int64_t y = x + shift;
        if (y >= p) y -= p;
        span[static_cast<std::size_t>(x)] = static_cast<digit_t>(y);
      }
      if (want_next)
        for (std::int64_t x = 0; x < p; ++x)
          next[static_cast<std::size_t>(v + x * width)] = (e + x) / p;
    }
    if (want_next) exponents.swap(next);
  }
  return std::move(out).build();
}

UltraDist power_distance(std::int64_t n, std::int64_t m, Base base) {
  if (n == m) return UltraDist::zero();
  const std::int64_t p = base.p();
  std::int64_t d = n - m;
  if (d < 0) d = -d;
  int v = 0;
  while (d % p == 0) {
    d /= p;
    ++v;
  }
  return UltraDist::exact(v);
}

namespace {

std::int64_t exponent_value(const PAdicApprox& alpha) {
  constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();
  const std::int64_t p = alpha.base().p();
  std::int64_t value = 0;
  std::int64_t scale = 1;
  bool scale_valid = true;
  for (int i = 0; i < alpha.precision(); ++i) {
    const std::int64_t d = alpha.digits()[static_cast<std::size_t>(i)];
    if (d != 0) {
      if (!scale_valid || d > (kMax - value) / scale)
        throw std::overflow_error("exponent exceeds 64-bit range");
      value += d * scale;
    }
    if (scale_valid) {
      if (scale > kMax / p)
        scale_valid = false;
      else
        scale *= p;
    }
  }
  return value;
}

}  // namespace

MachineElement embed(const PAdicApprox& alpha) {
  return MachineElement{
      alpha, machine_power_portrait(exponent_value(alpha), alpha.base(), alpha.precision())};
}

std::vector<std::int64_t> exponent_partial_sums(const PAdicApprox& alpha) {
  std::vector<std::int64_t> sums(static_cast<std::size_t>(alpha.precision()));
  std::int64_t value = 0;
  std::int64_t scale = 1;
  for (int i = 0; i < alpha.precision(); ++i) {
    value += alpha.digits()[static_cast<std::size_t>(i)] * scale;
    sums[static_cast<std::size_t>(i)] = value;
    if (i + 1 < alpha.precision()) {
      if (scale > std::numeric_limits<std::int64_t>::max() / alpha.base().p())
        throw std::overflow_error("partial sum exceeds 64-bit range");
      scale *= alpha.base().p();
    }
  }
  return sums;
}

std::optional<PAdicApprox> recognize(const Portrait& g) {
  const int n = g.depth();
  if (n < 1) throw std::invalid_argument("recognition needs depth >= 1");
  const Word zeros(g.base(), std::vector<digit_t>(static_cast<std::size_t>(n), 0));
  const Word image = g.apply(zeros);
  // The image letters are the base-p digits of the candidate exponent.
  const std::int64_t candidate = word_to_int(image);
  if (machine_power_portrait(candidate, g.base(), n) == g)
    return PAdicApprox(g.base(), image.letters());
  return std::nullopt;
}

bool embed_add_check(const PAdicApprox& alpha, const PAdicApprox& beta) {
  if (!(alpha.base() == beta.base()) || alpha.precision() != beta.precision())
    throw std::invalid_argument("operands must share base and precision");
  const Portrait lhs = compose(embed(alpha).portrait, embed(beta).portrait);
  return lhs == embed(padic_add(alpha, beta)).portrait;
}

}  // namespace odometer
