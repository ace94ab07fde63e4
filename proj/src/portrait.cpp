#include "odometer/portrait.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace odometer {

namespace {

constexpr std::int64_t kMaxEntries = std::int64_t{1} << 31;

// Total image entries of a dense depth-N portrait: sum of p^(l+1).
std::int64_t entry_count_or_throw(std::int64_t p, int depth) {
  std::int64_t total = 0;
  std::int64_t width = 1;
  for (int l = 0; l < depth; ++l) {
    if (width > kMaxEntries / p) throw std::length_error("portrait too large");
    total += width * p;
    if (total > kMaxEntries) throw std::length_error("portrait too large");
    width *= p;
  }
  return total;
}

}  // namespace

Portrait::Builder::Builder(Base base, int depth) : base_(base), depth_(depth) {
  if (depth < 0) throw std::invalid_argument("portrait depth must be >= 0");
  entry_count_or_throw(base.p(), depth);
  levels_.resize(static_cast<std::size_t>(depth));
  std::int64_t width = 1;
  for (int l = 0; l < depth; ++l) {
    levels_[static_cast<std::size_t>(l)].assign(static_cast<std::size_t>(width * base.p()), 0);
    width *= base.p();
  }
}

std::int64_t Portrait::Builder::level_width(int level) const {
  return static_cast<std::int64_t>(levels_[static_cast<std::size_t>(level)].size()) / base_.p();
}

std::span<digit_t> Portrait::Builder::images(int level, std::int64_t vertex) {
  auto& row = levels_[static_cast<std::size_t>(level)];
  return std::span<digit_t>(row.data() + vertex * base_.p(), static_cast<std::size_t>(base_.p()));
}

void Portrait::Builder::set_perm(int level, std::int64_t vertex, const Perm& perm) {
  if (level < 0 || level >= depth_)
    throw std::invalid_argument("vertex level out of range");
  if (vertex < 0 || vertex >= level_width(level))
    throw std::invalid_argument("vertex index out of range");
  if (perm.degree() != base_.p())
    throw std::invalid_argument("permutation degree does not match base");
  auto span = images(level, vertex);
  std::copy(perm.images().begin(), perm.images().end(), span.begin());
}

Portrait Portrait::Builder::build() && {
  const std::int64_t p = base_.p();
  std::vector<char> seen;
  if (p > 64) seen.assign(static_cast<std::size_t>(p), 0);
  for (int l = 0; l < depth_; ++l) {
    const auto& row = levels_[static_cast<std::size_t>(l)];
    const std::int64_t width = static_cast<std::int64_t>(row.size()) / p;
    for (std::int64_t v = 0; v < width; ++v) {
      bool ok = true;
      if (p <= 64) {
        std::uint64_t mask = 0;
        for (std::int64_t x = 0; x < p; ++x) {
          const digit_t y = row[static_cast<std::size_t>(v * p + x)];
          if (y < 0 || y >= p) {
            ok = false;
            break;
          }
          mask |= std::uint64_t{1} << y;
        }
        ok = ok && mask == (p == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << p) - 1);
      } else {
        std::fill(seen.begin(), seen.end(), 0);
        for (std::int64_t x = 0; x < p; ++x) {
          const digit_t y = row[static_cast<std::size_t>(v * p + x)];
          if (y < 0 || y >= p || seen[static_cast<std::size_t>(y)]) {
            ok = false;
            break;
          }
          seen[static_cast<std::size_t>(y)] = 1;
        }
      }
      if (!ok) throw std::invalid_argument("portrait vertex does not hold a bijection");
    }
  }
  return Portrait(base_, depth_, std::move(levels_));
}

Portrait::Portrait(Base base, int depth, std::vector<std::vector<digit_t>> levels)
    : base_(base), depth_(depth), levels_(std::move(levels)) {}

Portrait Portrait::identity(Base base, int depth) {
  Builder out(base, depth);
  const std::int64_t p = base.p();
  for (int l = 0; l < depth; ++l) {
    const std::int64_t width = out.level_width(l);
    for (std::int64_t v = 0; v < width; ++v) {
      auto span = out.images(l, v);
      for (std::int64_t x = 0; x < p; ++x) span[static_cast<std::size_t>(x)] = static_cast<digit_t>(x);
    }
  }
  return std::move(out).build();
}

std::int64_t Portrait::vertex_count() const {
  std::int64_t total = 0;
  for (int l = 0; l < depth_; ++l) total += level_width(l);
  return total;
}

std::int64_t Portrait::level_width(int level) const {
  if (level < 0 || level >= depth_)
    throw std::invalid_argument("vertex level out of range");
  return static_cast<std::int64_t>(levels_[static_cast<std::size_t>(level)].size()) / base_.p();
}

digit_t Portrait::image_letter(int level, std::int64_t vertex, digit_t letter) const {
  return levels_[static_cast<std::size_t>(level)]
                [static_cast<std::size_t>(vertex * base_.p() + letter)];
}

std::span<const digit_t> Portrait::images(int level, std::int64_t vertex) const {
  const auto& row = levels_[static_cast<std::size_t>(level)];
  return std::span<const digit_t>(row.data() + vertex * base_.p(),
                                  static_cast<std::size_t>(base_.p()));
}

std::span<const digit_t> Portrait::level_images(int level) const {
  const auto& row = levels_[static_cast<std::size_t>(level)];
  return std::span<const digit_t>(row.data(), row.size());
}

Perm Portrait::perm_at(int level, std::int64_t vertex) const {
  if (level < 0 || level >= depth_)
    throw std::invalid_argument("vertex level out of range");
  if (vertex < 0 || vertex >= level_width(level))
    throw std::invalid_argument("vertex index out of range");
  auto span = images(level, vertex);
  return Perm(std::vector<digit_t>(span.begin(), span.end()));
}

Perm Portrait::perm_at(const Word& vertex) const {
  if (!(vertex.base() == base_))
    throw std::invalid_argument("portrait/word base mismatch");
  return perm_at(vertex.length(), word_to_int(vertex));
}

Word Portrait::apply(const Word& w) const {
  if (!(w.base() == base_))
    throw std::invalid_argument("portrait/word base mismatch");
  if (w.length() > depth_)
    throw std::invalid_argument("word is longer than the portrait depth");
  const std::int64_t p = base_.p();
  std::vector<digit_t> out(static_cast<std::size_t>(w.length()));
  std::int64_t prefix = 0;  // value of the original prefix processed so far
  std::int64_t scale = 1;
  for (int i = 0; i < w.length(); ++i) {
    const digit_t x = w.letters()[static_cast<std::size_t>(i)];
    out[static_cast<std::size_t>(i)] = image_letter(i, prefix, x);
    prefix += x * scale;
    scale *= p;
  }
  return Word(base_, std::move(out));
}

Portrait Portrait::truncated(int depth) const {
  if (depth < 0 || depth > depth_)
    throw std::invalid_argument("truncation depth out of range");
  return Portrait(base_, depth,
                  std::vector<std::vector<digit_t>>(levels_.begin(), levels_.begin() + depth));
}

Portrait Portrait::section(digit_t letter) const {
  if (depth_ < 1) throw std::invalid_argument("depth-0 portrait has no sections");
  if (letter < 0 || letter >= base_.p())
    throw std::invalid_argument("section letter out of range");
  const std::int64_t p = base_.p();
  Builder out(base_, depth_ - 1);
  for (int l = 0; l + 1 < depth_; ++l) {
    const std::int64_t width = out.level_width(l);
    for (std::int64_t v = 0; v < width; ++v) {
      auto span = out.images(l, v);
      auto src = images(l + 1, letter + p * v);
      std::copy(src.begin(), src.end(), span.begin());
    }
  }
  return std::move(out).build();
}

Portrait Portrait::with_perm(int level, std::int64_t vertex, const Perm& perm) const {
  if (level < 0 || level >= depth_)
    throw std::invalid_argument("vertex level out of range");
  if (vertex < 0 || vertex >= level_width(level))
    throw std::invalid_argument("vertex index out of range");
  if (perm.degree() != base_.p())
    throw std::invalid_argument("permutation degree does not match base");
  auto levels = levels_;
  std::copy(perm.images().begin(), perm.images().end(),
            levels[static_cast<std::size_t>(level)].begin() + vertex * base_.p());
  return Portrait(base_, depth_, std::move(levels));
}

Portrait compose(const Portrait& g, const Portrait& h) {
  if (!(g.base() == h.base()))
    throw std::invalid_argument("portrait base mismatch");
  const std::int64_t p = g.base().p();
  const int depth = std::min(g.depth(), h.depth());
  Portrait::Builder out(g.base(), depth);
  std::vector<std::int64_t> g_image{0};  // g's action on the current level
  std::vector<std::int64_t> next;
  for (int l = 0; l < depth; ++l) {
    const std::int64_t width = static_cast<std::int64_t>(g_image.size());
    const bool want_next = l + 1 < depth;
    if (want_next) next.assign(static_cast<std::size_t>(width * p), 0);
    for (std::int64_t v = 0; v < width; ++v) {
      const std::int64_t gv = g_image[static_cast<std::size_t>(v)];
      auto span = out.images(l, v);
      for (std::int64_t x = 0; x < p; ++x) {
        const digit_t gx = g.image_letter(l, v, static_cast<digit_t>(x));
        span[static_cast<std::size_t>(x)] = h.image_letter(l, gv, gx);
        if (want_next)
          next[static_cast<std::size_t>(v + x * width)] = gv + gx * width;
      }
    }
    if (want_next) g_image.swap(next);
  }
  return std::move(out).build();
}

Portrait inverse(const Portrait& g) {
  const std::int64_t p = g.base().p();
  const int depth = g.depth();
  Portrait::Builder out(g.base(), depth);
  std::vector<std::int64_t> g_image{0};
  std::vector<std::int64_t> next;
  for (int l = 0; l < depth; ++l) {
    const std::int64_t width = static_cast<std::int64_t>(g_image.size());
    const bool want_next = l + 1 < depth;
    if (want_next) next.assign(static_cast<std::size_t>(width * p), 0);
    for (std::int64_t v = 0; v < width; ++v) {
      const std::int64_t gv = g_image[static_cast<std::size_t>(v)];
      // the inverse carries perm_g(v)^(-1) at the image vertex g(v)
      auto span = out.images(l, gv);
      for (std::int64_t x = 0; x < p; ++x) {
        const digit_t gx = g.image_letter(l, v, static_cast<digit_t>(x));
        span[static_cast<std::size_t>(gx)] = static_cast<digit_t>(x);
        if (want_next)
          next[static_cast<std::size_t>(v + x * width)] = gv + gx * width;
      }
    }
    if (want_next) g_image.swap(next);
  }
  return std::move(out).build();
}

UltraDist metric_distance(const Portrait& g1, const Portrait& g2) {
  if (!(g1.base() == g2.base()))
    throw std::invalid_argument("portrait base mismatch");
  const int n = std::min(g1.depth(), g2.depth());
  if (n < 1)
    throw std::invalid_argument("metric needs comparison depth >= 1");
  // While all shallower levels agree, the actions first differ on level
  // l+1 exactly when the level-l permutation rows first differ.
  for (int l = 0; l < n; ++l) {
    auto r1 = g1.level_images(l);
    auto r2 = g2.level_images(l);
    if (!std::equal(r1.begin(), r1.end(), r2.begin(), r2.end()))
      return UltraDist::exact(l);
  }
  return UltraDist::below_resolution(n);
}

std::optional<int> stabilizer_depth(const Portrait& g) {
  for (int l = 0; l < g.depth(); ++l) {
    auto row = g.level_images(l);
    const std::int64_t p = g.base().p();
    const std::int64_t width = static_cast<std::int64_t>(row.size()) / p;
    for (std::int64_t v = 0; v < width; ++v)
      for (std::int64_t x = 0; x < p; ++x)
        if (row[static_cast<std::size_t>(v * p + x)] != static_cast<digit_t>(x))
          return l;
  }
  return std::nullopt;
}

WreathSpec::WreathSpec(Base base, std::map<std::string, WreathState> states, std::string initial)
    : base_(base), states_(std::move(states)), initial_(std::move(initial)) {
  if (!states_.contains(initial_))
    throw std::invalid_argument("initial state '" + initial_ + "' is not declared");
  for (const auto& [name, state] : states_) {
    if (static_cast<std::int64_t>(state.sections.size()) != base_.p())
      throw std::invalid_argument("state '" + name + "' must list exactly p sections");
    if (state.output.degree() != base_.p())
      throw std::invalid_argument("state '" + name + "' output degree does not match base");
    for (const auto& target : state.sections)
      if (!states_.contains(target))
        throw std::invalid_argument("state '" + name + "' references undeclared state '" +
                                    target + "'");
  }
}

Portrait unfold(const WreathSpec& spec, int depth) {
  const std::int64_t p = spec.base().p();
  // Intern states so the level sweep works on integer ids.
  std::vector<const WreathState*> states;
  std::map<std::string, int> ids;
  for (const auto& [name, state] : spec.states()) {
    ids[name] = static_cast<int>(states.size());
    states.push_back(&state);
  }
  std::vector<std::vector<int>> sections(states.size());
  for (const auto& [name, state] : spec.states()) {
    auto& row = sections[static_cast<std::size_t>(ids[name])];
    for (const auto& target : state.sections) row.push_back(ids[target]);
  }

  Portrait::Builder out(spec.base(), depth);
  std::vector<int> current{ids[spec.initial()]};
  std::vector<int> next;
  for (int l = 0; l < depth; ++l) {
    const std::int64_t width = static_cast<std::int64_t>(current.size());
    const bool want_next = l + 1 < depth;
    if (want_next) next.assign(static_cast<std::size_t>(width * p), 0);
    for (std::int64_t v = 0; v < width; ++v) {
      const int s = current[static_cast<std::size_t>(v)];
      out.set_perm(l, v, states[static_cast<std::size_t>(s)]->output);
      if (want_next)
        for (std::int64_t x = 0; x < p; ++x)
          next[static_cast<std::size_t>(v + x * width)] =
              sections[static_cast<std::size_t>(s)][static_cast<std::size_t>(x)];
    }
    if (want_next) current.swap(next);
  }
  return std::move(out).build();
}

}  // namespace odometer
