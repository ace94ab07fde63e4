#include "odometer/words.hpp"

#include <limits>
#include <stdexcept>

namespace odometer {

Word::Word(Base base, std::vector<digit_t> letters)
    : base_(base), letters_(std::move(letters)) {
  for (digit_t x : letters_)
    if (x < 0 || x >= base_.p())
      throw std::invalid_argument("word letter out of range for base");
}

std::int64_t word_to_int(const Word& w) {
  constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();
  const std::int64_t p = w.base().p();
  std::int64_t value = 0;
  std::int64_t scale = 1;
  bool scale_valid = true;
  for (int i = 0; i < w.length(); ++i) {
    const std::int64_t x = w.letters()[i];
    if (x != 0) {
      if (!scale_valid || x > (kMax - value) / scale)
        throw std::overflow_error("word value exceeds 64-bit range");
      value += x * scale;
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

Word int_to_word(std::int64_t n, Base base, int length) {
  if (n < 0) throw std::invalid_argument("int_to_word requires n >= 0");
  if (length < 0) throw std::invalid_argument("word length must be >= 0");
  const std::int64_t p = base.p();
  std::vector<digit_t> letters(static_cast<std::size_t>(length));
  for (int i = 0; i < length; ++i) {
    letters[i] = static_cast<digit_t>(n % p);
    n /= p;
  }
  return Word(base, std::move(letters));
}

std::vector<Word> enumerate_level(Base base, int level) {
  if (level < 0) throw std::invalid_argument("level must be >= 0");
  const auto count = checked_pow(base.p(), level);
  if (!count || *count > (std::int64_t{1} << 32))
    throw std::length_error("level too large to enumerate");
  std::vector<Word> words;
  words.reserve(static_cast<std::size_t>(*count));
  for (std::int64_t i = 0; i < *count; ++i)
    words.push_back(int_to_word(i, base, level));
  return words;
}

}  // namespace odometer
