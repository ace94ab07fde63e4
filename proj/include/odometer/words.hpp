#pragma once

#include <cstdint>
#include <vector>

#include "odometer/base.hpp"

namespace odometer {

// A vertex of the p-ary rooted tree. The word's length is its level and
// the empty word is the root. Reading is least-significant-digit first,
// so the first letter is the one the odometer increments.
class Word {
 public:
  Word(Base base, std::vector<digit_t> letters);

  static Word empty(Base base) { return Word(base, {}); }

  const Base& base() const { return base_; }
  const std::vector<digit_t>& letters() const { return letters_; }
  int length() const { return static_cast<int>(letters_.size()); }

  bool operator==(const Word&) const = default;

 private:
  Base base_;
  std::vector<digit_t> letters_;
};

// Value of the word as a base-p integer; the empty word is 0.
std::int64_t word_to_int(const Word& w);

// Length-`length` word whose value is n mod p^length; n must be >= 0.
Word int_to_word(std::int64_t n, Base base, int length);

// All p^level words of the given length, ordered by word_to_int.
// Guarded to p^level <= 2^32; this is a test oracle, desk scale only.
std::vector<Word> enumerate_level(Base base, int level);

}  // namespace odometer
