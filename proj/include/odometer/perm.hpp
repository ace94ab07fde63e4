#pragma once

#include <cstdint>
#include <vector>

#include "odometer/base.hpp"

namespace odometer {

// A permutation of the alphabet {0,...,p-1}; images()[x] is the image
// of x. Constructors check bijectivity.
class Perm {
 public:
  explicit Perm(std::vector<digit_t> images);

  static Perm identity(std::int64_t p);
  // x -> x + shift mod p; shift may be negative.
  static Perm rotation(std::int64_t p, std::int64_t shift);

  std::int64_t degree() const { return static_cast<std::int64_t>(images_.size()); }
  digit_t image(digit_t x) const { return images_[static_cast<std::size_t>(x)]; }
  const std::vector<digit_t>& images() const { return images_; }

  bool is_identity() const;
  Perm inverse() const;

  bool operator==(const Perm&) const = default;

 private:
  std::vector<digit_t> images_;
};

// f first, then g: (f * g)(x) = g(f(x)).
Perm compose(const Perm& f, const Perm& g);

}  // namespace odometer
