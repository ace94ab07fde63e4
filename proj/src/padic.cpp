#include "odometer/padic.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace odometer {

PAdicApprox::PAdicApprox(Base base, std::vector<digit_t> digits)
    : base_(base), digits_(std::move(digits)) {
  if (digits_.empty())
    throw std::invalid_argument("p-adic truncation needs at least one digit");
  for (digit_t d : digits_)
    if (d < 0 || d >= base_.p())
      throw std::invalid_argument("p-adic digit out of range for base");
}

PAdicApprox PAdicApprox::zero(Base base, int precision) {
  if (precision < 1) throw std::invalid_argument("precision must be >= 1");
  return PAdicApprox(base, std::vector<digit_t>(static_cast<std::size_t>(precision), 0));
}

PAdicApprox PAdicApprox::from_int(std::int64_t n, Base base, int precision) {
  if (precision < 1) throw std::invalid_argument("precision must be >= 1");
  const std::int64_t p = base.p();
  std::vector<digit_t> digits(static_cast<std::size_t>(precision));
  for (int i = 0; i < precision; ++i) {
    const std::int64_t d = mod_floor(n, p);
    digits[i] = static_cast<digit_t>(d);
    n = (n - d) / p;
  }
  return PAdicApprox(base, std::move(digits));
}

bool PAdicApprox::is_zero() const {
  return std::all_of(digits_.begin(), digits_.end(), [](digit_t d) { return d == 0; });
}

PAdicApprox PAdicApprox::truncated(int precision) const {
  if (precision < 1 || precision > this->precision())
    throw std::invalid_argument("truncation precision out of range");
  return PAdicApprox(base_, std::vector<digit_t>(digits_.begin(), digits_.begin() + precision));
}

UltraDist UltraDist::exact(int k) {
  if (k < 0) throw std::invalid_argument("distance exponent must be >= 0");
  return UltraDist(Kind::kExact, k);
}

UltraDist UltraDist::below_resolution(int resolution) {
  if (resolution < 0) throw std::invalid_argument("resolution must be >= 0");
  return UltraDist(Kind::kBelowResolution, resolution);
}

namespace {

// Larger key = smaller distance; parity keeps Exact(k) above
// BelowResolution(k) so keys collide only on structural equality.
std::int64_t magnitude_key(const UltraDist& d) {
  switch (d.kind()) {
    case UltraDist::Kind::kZero:
      return std::numeric_limits<std::int64_t>::max();
    case UltraDist::Kind::kExact:
      return 2 * static_cast<std::int64_t>(d.exponent());
    case UltraDist::Kind::kBelowResolution:
      return 2 * static_cast<std::int64_t>(d.exponent()) + 1;
  }
  return 0;
}

}  // namespace

bool operator<(const UltraDist& a, const UltraDist& b) {
  return magnitude_key(a) > magnitude_key(b);
}

bool operator<=(const UltraDist& a, const UltraDist& b) {
  return magnitude_key(a) >= magnitude_key(b);
}

UltraDist ultra_max(const UltraDist& a, const UltraDist& b) { return a < b ? b : a; }

namespace {

void require_same_base(const PAdicApprox& a, const PAdicApprox& b) {
  if (!(a.base() == b.base()))
    throw std::invalid_argument("p-adic base mismatch");
}

}  // namespace

PAdicApprox padic_add(const PAdicApprox& a, const PAdicApprox& b) {
  require_same_base(a, b);
  const std::int64_t p = a.base().p();
  const int n = std::min(a.precision(), b.precision());
  std::vector<digit_t> digits(static_cast<std::size_t>(n));
  digit_t carry = 0;
  for (int i = 0; i < n; ++i) {
    const std::int64_t s = static_cast<std::int64_t>(a.digits()[i]) + b.digits()[i] + carry;
    digits[i] = static_cast<digit_t>(s % p);
    carry = static_cast<digit_t>(s / p);  // always 0 or 1
  }
  return PAdicApprox(a.base(), std::move(digits));
}

PAdicApprox padic_neg(const PAdicApprox& a) {
  const std::int64_t p = a.base().p();
  const int n = a.precision();
  std::vector<digit_t> digits(static_cast<std::size_t>(n), 0);
  int k = 0;
  while (k < n && a.digits()[k] == 0) ++k;
  if (k < n) {
    digits[k] = static_cast<digit_t>(p - a.digits()[k]);
    for (int i = k + 1; i < n; ++i)
      digits[i] = static_cast<digit_t>(p - 1 - a.digits()[i]);
  }
  return PAdicApprox(a.base(), std::move(digits));
}

PAdicApprox padic_sub(const PAdicApprox& a, const PAdicApprox& b) {
  require_same_base(a, b);
  return padic_add(a, padic_neg(b));
}

std::optional<int> padic_order(const PAdicApprox& a) {
  for (int i = 0; i < a.precision(); ++i)
    if (a.digits()[i] != 0) return i;
  return std::nullopt;  // order beyond this precision
}

UltraDist padic_distance(const PAdicApprox& a, const PAdicApprox& b) {
  require_same_base(a, b);
  if (a.precision() != b.precision())
    throw std::invalid_argument("p-adic precision mismatch");
  for (int i = 0; i < a.precision(); ++i)
    if (a.digits()[i] != b.digits()[i]) return UltraDist::exact(i);
  return UltraDist::below_resolution(a.precision());
}

}  // namespace odometer
