#pragma once

#include <optional>
#include <string>

#include "json.hpp"
#include "odometer/padic.hpp"
#include "odometer/perm.hpp"
#include "odometer/portrait.hpp"
#include "odometer/words.hpp"

namespace odometer::io {

// "1,1,1,1 (base 2)"
std::string render_digits(const PAdicApprox& a);

// Accepts "d0,d1,...", the same with a " (base p)" suffix, or "int:K".
// The integer form needs `precision`; the digit forms must agree with it
// when it is given.
PAdicApprox parse_padic(const std::string& text, Base base, std::optional<int> precision);

// Bare letter string ("110"); dot-separated when the base exceeds 10.
std::string render_word(const Word& w);
Word parse_word(const std::string& text, Base base);

// "(01)" style cycles, fixed points omitted, identity rendered as "1".
// Letters are space-separated inside cycles when the base exceeds 10.
std::string cycle_notation(const Perm& perm);

// "0", "1/p^2", "<=1/p^4"
std::string render_distance(const UltraDist& d);
nlohmann::json distance_to_json(const UltraDist& d);

nlohmann::json padic_to_json(const PAdicApprox& a);
PAdicApprox padic_from_json(const nlohmann::json& j, bool allow_composite = false);

// {"p":2,"depth":2,"perms":{"":[1,0],"0":[0,1],"1":[1,0]}}
nlohmann::json portrait_to_json(const Portrait& g);
Portrait portrait_from_json(const nlohmann::json& j, bool allow_composite = false);

std::string render_portrait_text(const Portrait& g);

// One node per vertex, labeled with its permutation in cycle notation;
// edges labeled by letters, leaves drawn as points.
std::string portrait_to_dot(const Portrait& g);

}  // namespace odometer::io
