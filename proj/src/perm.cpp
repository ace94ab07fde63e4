#include "odometer/perm.hpp"

#include <stdexcept>

namespace odometer {

Perm::Perm(std::vector<digit_t> images) : images_(std::move(images)) {
  const auto p = static_cast<std::int64_t>(images_.size());
  if (p < 1) throw std::invalid_argument("permutation must have positive degree");
  std::vector<char> seen(images_.size(), 0);
  for (digit_t y : images_) {
    if (y < 0 || y >= p || seen[static_cast<std::size_t>(y)])
      throw std::invalid_argument("permutation images are not a bijection");
    seen[static_cast<std::size_t>(y)] = 1;
  }
}

Perm Perm::identity(std::int64_t p) {
  std::vector<digit_t> images(static_cast<std::size_t>(p));
  for (std::int64_t x = 0; x < p; ++x) images[static_cast<std::size_t>(x)] = static_cast<digit_t>(x);
  return Perm(std::move(images));
}

Perm Perm::rotation(std::int64_t p, std::int64_t shift) {
  const std::int64_t s = mod_floor(shift, p);
  std::vector<digit_t> images(static_cast<std::size_t>(p));
  for (std::int64_t x = 0; x < p; ++x) {
    std::int64_t y = x + s;
    if (y >= p) y -= p;
    images[static_cast<std::size_t>(x)] = static_cast<digit_t>(y);
  }
  return Perm(std::move(images));
}

bool Perm::is_identity() const {
  for (std::size_t x = 0; x < images_.size(); ++x)
    if (images_[x] != static_cast<digit_t>(x)) return false;
  return true;
}

Perm Perm::inverse() const {
  std::vector<digit_t> images(images_.size());
  for (std::size_t x = 0; x < images_.size(); ++x)
    images[static_cast<std::size_t>(images_[x])] = static_cast<digit_t>(x);
  return Perm(std::move(images));
}

Perm compose(const Perm& f, const Perm& g) {
  if (f.degree() != g.degree())
    throw std::invalid_argument("permutation degree mismatch");
  std::vector<digit_t> images(static_cast<std::size_t>(f.degree()));
  for (std::int64_t x = 0; x < f.degree(); ++x)
    images[static_cast<std::size_t>(x)] = g.image(f.image(static_cast<digit_t>(x)));
  return Perm(std::move(images));
}

}  // namespace odometer
