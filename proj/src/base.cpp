#include "odometer/base.hpp"

#include <limits>
#include <stdexcept>
#include <string>

namespace odometer {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::int64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

Base::Base(std::int64_t p, bool allow_composite) : p_(p) {
  if (p < 2) throw std::invalid_argument("base must be at least 2");
  if (!allow_composite && !is_prime(p))
    throw std::invalid_argument("composite base " + std::to_string(p) +
                                " rejected (pass the allow-composite override to accept)");
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if (a % b != 0 && a < 0) --q;
  return q;
}

std::int64_t mod_floor(std::int64_t a, std::int64_t b) {
  std::int64_t r = a % b;
  return r < 0 ? r + b : r;
}

std::optional<std::int64_t> checked_pow(std::int64_t p, int k) {
  constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();
  std::int64_t result = 1;
  for (int i = 0; i < k; ++i) {
    if (result > kMax / p) return std::nullopt;
    result *= p;
  }
  return result;
}

}  // namespace odometer
