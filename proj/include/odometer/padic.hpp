#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "odometer/base.hpp"

namespace odometer {

// A p-adic integer truncated to N digits: the residue alpha mod p^N with
// digits stored least significant first. Immutable value; two
// truncations are equal iff base, precision and all digits agree.
class PAdicApprox {
 public:
  PAdicApprox(Base base, std::vector<digit_t> digits);

  static PAdicApprox zero(Base base, int precision);
  static PAdicApprox from_int(std::int64_t n, Base base, int precision);

  const Base& base() const { return base_; }
  int precision() const { return static_cast<int>(digits_.size()); }
  const std::vector<digit_t>& digits() const { return digits_; }
  bool is_zero() const;

  PAdicApprox truncated(int precision) const;

  bool operator==(const PAdicApprox&) const = default;

 private:
  Base base_;
  std::vector<digit_t> digits_;
};

// An ultrametric distance value: exactly p^-k, provably zero, or only
// known to be <= p^-N at resolution N. Always an exponent, never a
// float; p^-k underflows long before the portraits run out of levels.
class UltraDist {
 public:
  enum class Kind { kZero, kExact, kBelowResolution };

  static UltraDist zero() { return UltraDist(Kind::kZero, 0); }
  static UltraDist exact(int k);
  static UltraDist below_resolution(int resolution);

  Kind kind() const { return kind_; }
  bool is_zero() const { return kind_ == Kind::kZero; }
  bool is_exact() const { return kind_ == Kind::kExact; }
  bool is_below_resolution() const { return kind_ == Kind::kBelowResolution; }

  // Exact: the k of p^-k. BelowResolution: the resolution N.
  int exponent() const { return exponent_; }

  bool operator==(const UltraDist&) const = default;

  // Total order by magnitude: Zero < BelowResolution(N) < Exact(k) for
  // every k <= N, and Exact(k1) < Exact(k2) iff k1 > k2.
  friend bool operator<(const UltraDist& a, const UltraDist& b);
  friend bool operator<=(const UltraDist& a, const UltraDist& b);

 private:
  UltraDist(Kind kind, int exponent) : kind_(kind), exponent_(exponent) {}

  Kind kind_;
  int exponent_;
};

UltraDist ultra_max(const UltraDist& a, const UltraDist& b);

// Carry addition mod p^min(Na,Nb); bases must match.
PAdicApprox padic_add(const PAdicApprox& a, const PAdicApprox& b);
PAdicApprox padic_neg(const PAdicApprox& a);
PAdicApprox padic_sub(const PAdicApprox& a, const PAdicApprox& b);

// Index of the first nonzero digit; nullopt when every stored digit is
// zero, i.e. the order lies beyond this precision.
std::optional<int> padic_order(const PAdicApprox& a);

// |a - b|_p at matched precision: Exact(ord(a-b)) when the truncations
// differ, BelowResolution(N) when they are digitwise equal.
UltraDist padic_distance(const PAdicApprox& a, const PAdicApprox& b);

}  // namespace odometer
