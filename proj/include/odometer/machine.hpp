#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "odometer/base.hpp"
#include "odometer/padic.hpp"
#include "odometer/portrait.hpp"
#include "odometer/words.hpp"

namespace odometer {

// The odometer action computed arithmetically: the image of w under
// "add n with carry", i.e. int_to_word(word_to_int(w) + n mod p^|w|).
// O(|w|) digit work, no portrait is built.
Word adding_apply(std::int64_t n, const Word& w);
// Same with a truncated p-adic exponent; its precision must cover |w|.
Word adding_apply(const PAdicApprox& n, const Word& w);

// The generator a = (1,...,1,a)s with s the full-cycle rotation, unfolded
// from its wreath recursion.
Portrait adding_machine_portrait(Base base, int depth);

// a^n truncated to the given depth. Negative n is reduced mod p^depth,
// which is exact at that depth.
Portrait machine_power_portrait(std::int64_t n, Base base, int depth);

// Closed-form distance between a^n and a^m: Zero when n = m, else
// Exact(v) with v the exact power of p dividing n - m.
UltraDist power_distance(std::int64_t n, std::int64_t m, Base base);

// An element of the closure of the adding machine group, carried by its
// exponent digits together with the matching depth-N portrait.
struct MachineElement {
  PAdicApprox exponent;
  Portrait portrait;
};

// The isometric embedding of truncated p-adic integers into the closure:
// the portrait of a^(sum alpha_i p^i) at depth N = precision(alpha). The
// action on level k <= N depends only on alpha mod p^k, so this portrait
// is the embedded element exactly, not an approximation of it.
MachineElement embed(const PAdicApprox& alpha);

// The exponents alpha_0, alpha_0 + alpha_1 p, ... whose powers of a form
// the convergent sequence defining the embedding.
std::vector<std::int64_t> exponent_partial_sums(const PAdicApprox& alpha);

// Finite-depth inverse of the embedding. Reads the candidate exponent off
// the orbit of the all-zeros word and certifies it by portrait equality;
// nullopt means the portrait is not in the closure. Not an error: closure
// membership testing is an intended use.
std::optional<PAdicApprox> recognize(const Portrait& g);

// Test utility for the homomorphism law: whether composing the embedded
// portraits of alpha and beta equals the embedded portrait of alpha+beta.
bool embed_add_check(const PAdicApprox& alpha, const PAdicApprox& beta);

}  // namespace odometer
