#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "odometer/base.hpp"
#include "odometer/padic.hpp"
#include "odometer/perm.hpp"
#include "odometer/words.hpp"

namespace odometer {

// A depth-N truncation of a tree automorphism, stored densely as one
// alphabet permutation per vertex of level < N. Vertices at level l are
// indexed by their word value in [0, p^l).
//
// Composition convention: compose(g, h) is the product g.h acting by g
// FIRST, i.e. apply(compose(g, h), w) == apply(h, apply(g, w)). This is
// the right-action wreath rule; the opposite convention is equally
// common in the literature, so call sites must not assume it.
class Portrait {
 public:
  // Dense mutable staging area; build() validates that every vertex
  // holds a bijection and freezes the result.
  class Builder {
   public:
    Builder(Base base, int depth);

    std::int64_t level_width(int level) const;  // p^level
    std::span<digit_t> images(int level, std::int64_t vertex);
    void set_perm(int level, std::int64_t vertex, const Perm& perm);

    Portrait build() &&;

   private:
    Base base_;
    int depth_;
    std::vector<std::vector<digit_t>> levels_;
  };

  static Portrait identity(Base base, int depth);

  const Base& base() const { return base_; }
  int depth() const { return depth_; }
  // Number of vertices carrying a permutation: (p^N - 1)/(p - 1).
  std::int64_t vertex_count() const;

  std::int64_t level_width(int level) const;
  digit_t image_letter(int level, std::int64_t vertex, digit_t letter) const;
  std::span<const digit_t> images(int level, std::int64_t vertex) const;
  std::span<const digit_t> level_images(int level) const;
  Perm perm_at(int level, std::int64_t vertex) const;
  Perm perm_at(const Word& vertex) const;

  Word apply(const Word& w) const;

  Portrait truncated(int depth) const;
  // The automorphism induced on the subtree below the root edge `letter`.
  Portrait section(digit_t letter) const;
  // Copy with one vertex permutation replaced.
  Portrait with_perm(int level, std::int64_t vertex, const Perm& perm) const;

  bool operator==(const Portrait&) const = default;

 private:
  Portrait(Base base, int depth, std::vector<std::vector<digit_t>> levels);

  Base base_;
  int depth_;
  std::vector<std::vector<digit_t>> levels_;  // levels_[l][vertex * p + letter]
};

// Wreath product composition, g first. Result depth is the shallower of
// the two; bases must match.
Portrait compose(const Portrait& g, const Portrait& h);
Portrait inverse(const Portrait& g);

// Exact(k) where k+1 is the first level on which the two actions differ;
// BelowResolution(N) when they agree everywhere down to the comparison
// depth N = min(depth(g1), depth(g2)). Requires N >= 1.
UltraDist metric_distance(const Portrait& g1, const Portrait& g2);

// Largest level g fixes pointwise; nullopt when g is trivial all the way
// down to its depth.
std::optional<int> stabilizer_depth(const Portrait& g);

// One state of a finite wreath recursion: p section states by name, plus
// the output permutation applied at the vertex where the state sits.
struct WreathState {
  std::vector<std::string> sections;
  Perm output;
};

class WreathSpec {
 public:
  WreathSpec(Base base, std::map<std::string, WreathState> states, std::string initial);

  const Base& base() const { return base_; }
  const std::map<std::string, WreathState>& states() const { return states_; }
  const std::string& initial() const { return initial_; }

 private:
  Base base_;
  std::map<std::string, WreathState> states_;
  std::string initial_;
};

// Unfolds the recursion to a depth-N portrait: vertex v carries the
// output permutation of the state reached from the initial state along
// the letters of v.
Portrait unfold(const WreathSpec& spec, int depth);

}  // namespace odometer
