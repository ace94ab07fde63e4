#include "odometer/io.hpp"

#include <charconv>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace odometer::io {

namespace {

std::int64_t parse_int(const std::string& text) {
  std::int64_t value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last)
    throw std::invalid_argument("invalid integer '" + text + "'");
  return value;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    if (pos == std::string::npos) {
      parts.push_back(text.substr(start));
      return parts;
    }
    parts.push_back(text.substr(start, pos - start));
    start = pos + 1;
  }
}

std::string render_letter_list(const std::vector<digit_t>& values, std::int64_t p,
                               const char* wide_sep) {
  std::ostringstream out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0 && p > 10) out << wide_sep;
    out << values[i];
  }
  return out.str();
}

}  // namespace

std::string render_digits(const PAdicApprox& a) {
  std::ostringstream out;
  for (int i = 0; i < a.precision(); ++i) {
    if (i > 0) out << ',';
    out << a.digits()[static_cast<std::size_t>(i)];
  }
  out << " (base " << a.base().p() << ")";
  return out.str();
}

PAdicApprox parse_padic(const std::string& text, Base base, std::optional<int> precision) {
  if (text.starts_with("int:")) {
    if (!precision)
      throw std::invalid_argument("integer operands need an explicit precision");
    return PAdicApprox::from_int(parse_int(text.substr(4)), base, *precision);
  }
  std::string digits_part = text;
  const std::size_t suffix = text.find(" (base ");
  if (suffix != std::string::npos) {
    if (!text.ends_with(")"))
      throw std::invalid_argument("malformed base suffix in '" + text + "'");
    const std::string base_text = text.substr(suffix + 7, text.size() - suffix - 8);
    if (parse_int(base_text) != base.p())
      throw std::invalid_argument("operand base disagrees with --p");
    digits_part = text.substr(0, suffix);
  }
  std::vector<digit_t> digits;
  for (const auto& part : split(digits_part, ','))
    digits.push_back(static_cast<digit_t>(parse_int(part)));
  if (precision && static_cast<int>(digits.size()) != *precision)
    throw std::invalid_argument("digit count disagrees with the requested precision");
  return PAdicApprox(base, std::move(digits));
}

std::string render_word(const Word& w) {
  return render_letter_list(w.letters(), w.base().p(), ".");
}

Word parse_word(const std::string& text, Base base) {
  std::vector<digit_t> letters;
  if (text.empty()) return Word::empty(base);
  if (base.p() > 10) {
    for (const auto& part : split(text, '.'))
      letters.push_back(static_cast<digit_t>(parse_int(part)));
  } else {
    for (char c : text) {
      if (c < '0' || c > '9')
        throw std::invalid_argument("invalid word letter '" + std::string(1, c) + "'");
      letters.push_back(static_cast<digit_t>(c - '0'));
    }
  }
  return Word(base, std::move(letters));
}

std::string cycle_notation(const Perm& perm) {
  const std::int64_t p = perm.degree();
  std::vector<char> seen(static_cast<std::size_t>(p), 0);
  std::ostringstream out;
  bool any = false;
  for (std::int64_t start = 0; start < p; ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    std::vector<digit_t> cycle;
    digit_t x = static_cast<digit_t>(start);
    do {
      seen[static_cast<std::size_t>(x)] = 1;
      cycle.push_back(x);
      x = perm.image(x);
    } while (x != start);
    if (cycle.size() < 2) continue;
    any = true;
    out << '(';
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (i > 0 && p > 10) out << ' ';
      out << cycle[i];
    }
    out << ')';
  }
  return any ? out.str() : "1";
}

std::string render_distance(const UltraDist& d) {
  switch (d.kind()) {
    case UltraDist::Kind::kZero:
      return "0";
    case UltraDist::Kind::kExact:
      return "1/p^" + std::to_string(d.exponent());
    case UltraDist::Kind::kBelowResolution:
      return "<=1/p^" + std::to_string(d.exponent());
  }
  return {};
}

nlohmann::json distance_to_json(const UltraDist& d) {
  switch (d.kind()) {
    case UltraDist::Kind::kZero:
      return {{"kind", "zero"}};
    case UltraDist::Kind::kExact:
      return {{"kind", "exact"}, {"exponent", d.exponent()}};
    case UltraDist::Kind::kBelowResolution:
      return {{"kind", "below-resolution"}, {"resolution", d.exponent()}};
  }
  return {};
}

nlohmann::json padic_to_json(const PAdicApprox& a) {
  return {{"p", a.base().p()}, {"precision", a.precision()}, {"digits", a.digits()}};
}

PAdicApprox padic_from_json(const nlohmann::json& j, bool allow_composite) {
  const Base base(j.at("p").get<std::int64_t>(), allow_composite);
  auto digits = j.at("digits").get<std::vector<digit_t>>();
  if (j.contains("precision") &&
      j.at("precision").get<std::int64_t>() != static_cast<std::int64_t>(digits.size()))
    throw std::invalid_argument("precision field disagrees with digit count");
  return PAdicApprox(base, std::move(digits));
}

nlohmann::json portrait_to_json(const Portrait& g) {
  nlohmann::json perms = nlohmann::json::object();
  for (int l = 0; l < g.depth(); ++l) {
    const std::int64_t width = g.level_width(l);
    for (std::int64_t v = 0; v < width; ++v) {
      auto span = g.images(l, v);
      perms[render_word(int_to_word(v, g.base(), l))] =
          std::vector<digit_t>(span.begin(), span.end());
    }
  }
  return {{"p", g.base().p()}, {"depth", g.depth()}, {"perms", std::move(perms)}};
}

Portrait portrait_from_json(const nlohmann::json& j, bool allow_composite) {
  const Base base(j.at("p").get<std::int64_t>(), allow_composite);
  const int depth = j.at("depth").get<int>();
  if (depth < 0) throw std::invalid_argument("portrait depth must be >= 0");
  const auto& perms = j.at("perms");
  if (!perms.is_object()) throw std::invalid_argument("perms must be an object");
  Portrait::Builder out(base, depth);
  std::int64_t expected = 0;
  for (int l = 0; l < depth; ++l) expected += *checked_pow(base.p(), l);
  if (static_cast<std::int64_t>(perms.size()) != expected)
    throw std::invalid_argument("portrait lists " + std::to_string(perms.size()) +
                                " vertices, expected " + std::to_string(expected));
  for (const auto& [key, value] : perms.items()) {
    const Word vertex = parse_word(key, base);
    if (vertex.length() >= depth)
      throw std::invalid_argument("vertex '" + key + "' lies beyond the portrait depth");
    out.set_perm(vertex.length(), word_to_int(vertex), Perm(value.get<std::vector<digit_t>>()));
  }
  return std::move(out).build();
}

std::string render_portrait_text(const Portrait& g) {
  std::ostringstream out;
  out << "portrait p=" << g.base().p() << " depth=" << g.depth() << '\n';
  for (int l = 0; l < g.depth(); ++l) {
    const std::int64_t width = g.level_width(l);
    for (std::int64_t v = 0; v < width; ++v) {
      const std::string word = render_word(int_to_word(v, g.base(), l));
      out << (word.empty() ? std::string("\xCE\xB5") : word) << ": "
          << cycle_notation(g.perm_at(l, v)) << '\n';
    }
  }
  return out.str();
}

std::string portrait_to_dot(const Portrait& g) {
  std::ostringstream out;
  out << "digraph portrait {\n";
  out << "  node [shape=circle];\n";
  for (int l = 0; l < g.depth(); ++l) {
    const std::int64_t width = g.level_width(l);
    for (std::int64_t v = 0; v < width; ++v)
      out << "  n" << l << "_" << v << " [label=\"" << cycle_notation(g.perm_at(l, v))
          << "\"];\n";
  }
  // leaves carry no permutation; draw them as points
  if (g.depth() > 0) {
    const std::int64_t leaves = *checked_pow(g.base().p(), g.depth());
    for (std::int64_t v = 0; v < leaves; ++v)
      out << "  n" << g.depth() << "_" << v << " [shape=point, label=\"\"];\n";
  }
  const std::int64_t p = g.base().p();
  std::int64_t width = 1;
  for (int l = 0; l < g.depth(); ++l) {
    for (std::int64_t v = 0; v < width; ++v)
      for (std::int64_t x = 0; x < p; ++x)
        out << "  n" << l << "_" << v << " -> n" << l + 1 << "_" << v + x * width
            << " [label=\"" << x << "\"];\n";
    width *= p;
  }
  out << "}\n";
  return out.str();
}

}  // namespace odometer::io
