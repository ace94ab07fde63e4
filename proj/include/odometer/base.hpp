#pragma once

#include <cstdint>
#include <optional>

namespace odometer {

// Digits of truncated p-adic integers and letters of tree words share one
// type: letter i of a word is base-p digit i, least significant first.
using digit_t = std::int32_t;

bool is_prime(std::int64_t n);

// The alphabet size p shared by every type in the library. Rejects p < 2
// always, and composite p unless allow_composite is set.
class Base {
 public:
  explicit Base(std::int64_t p, bool allow_composite = false);

  std::int64_t p() const { return p_; }

  friend bool operator==(const Base& a, const Base& b) { return a.p_ == b.p_; }

 private:
  std::int64_t p_;
};

// Quotient and remainder rounding toward -infinity; b must be positive.
std::int64_t floor_div(std::int64_t a, std::int64_t b);
std::int64_t mod_floor(std::int64_t a, std::int64_t b);

// p^k, or nullopt if the result does not fit in a signed 64-bit integer.
std::optional<std::int64_t> checked_pow(std::int64_t p, int k);

}  // namespace odometer
