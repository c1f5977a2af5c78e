#include "gotzmann/text_format.hpp"

#include <charconv>
#include <limits>

#include "gotzmann/errors.hpp"

namespace gotzmann {

namespace {

constexpr std::string_view kSpace = " \t\r";

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(kSpace);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(kSpace);
  return s.substr(b, e - b + 1);
}

std::uint64_t parse_unsigned(std::string_view tok, std::string_view what) {
  std::uint64_t v = 0;
  const auto* end = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(tok.data(), end, v);
  if (ec != std::errc{} || ptr != end)
    throw ParseError("invalid " + std::string(what) + " '" + std::string(tok) + "'");
  return v;
}

std::vector<Monomial> parse_lines(std::string_view text, char sep) {
  std::vector<Monomial> out;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto pos = text.find(sep);
    std::string_view line = text.substr(0, pos);
    text = pos == std::string_view::npos ? std::string_view{} : text.substr(pos + 1);
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    try {
      out.push_back(parse_monomial(line));
    } catch (const ParseError& e) {
      throw ParseError(e.what(), line_no);
    }
  }
  return out;
}

}  // namespace

Monomial parse_monomial(std::string_view text) {
  std::vector<Exponent> exps;
  text = trim(text);
  while (!text.empty()) {
    const auto end = text.find_first_of(kSpace);
    const auto tok = text.substr(0, end);
    const auto v = parse_unsigned(tok, "exponent");
    if (v > std::numeric_limits<Exponent>::max()) throw ParseError("exponent too large");
    exps.push_back(static_cast<Exponent>(v));
    text = end == std::string_view::npos ? std::string_view{} : trim(text.substr(end));
  }
  if (exps.empty()) throw ParseError("empty monomial");
  return Monomial(std::move(exps));
}

std::string format_monomial(const Monomial& m) {
  std::string out;
  for (std::size_t i = 0; i < m.num_vars(); ++i) {
    if (i) out += ' ';
    out += std::to_string(m[i]);
  }
  return out;
}

std::string pretty_monomial(const Monomial& m) {
  std::string out;
  for (std::size_t i = 0; i < m.num_vars(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += "x" + std::to_string(i + 1);
    if (m[i] > 1) out += "^" + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

std::vector<Monomial> parse_set_file(std::string_view text) { return parse_lines(text, '\n'); }

std::vector<Monomial> parse_inline_set(std::string_view text) { return parse_lines(text, ';'); }

std::string format_set_line(const MonomialSet& set) {
  std::string out;
  bool first = true;
  for (const auto& m : set) {
    if (!first) out += "; ";
    first = false;
    out += format_monomial(m);
  }
  return out;
}

std::string format_set_file(const MonomialSet& set) {
  std::string out;
  for (const auto& m : set) {
    out += format_monomial(m);
    out += '\n';
  }
  return out;
}

RingSpec parse_ring(std::string_view text) {
  text = trim(text);
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) throw ParseError("ring must look like n:c1,...,cn");
  const auto n = parse_unsigned(trim(text.substr(0, colon)), "variable count");
  if (n < 1) throw ParseError("ring needs at least one variable");
  std::vector<Cap> caps;
  std::string_view rest = text.substr(colon + 1);
  while (true) {
    const auto comma = rest.find(',');
    const auto tok = trim(rest.substr(0, comma));
    if (tok == "inf") {
      caps.push_back(Cap::infinite());
    } else {
      const auto v = parse_unsigned(tok, "cap");
      if (v < 1 || v > std::numeric_limits<Exponent>::max()) throw ParseError("cap must be a positive integer or inf");
      caps.push_back(Cap::finite(static_cast<Exponent>(v)));
    }
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
  }
  if (caps.size() != n)
    throw ParseError("ring declares " + std::to_string(n) + " variables but lists " + std::to_string(caps.size()) +
                     " caps");
  return RingSpec(std::move(caps));
}

std::string format_ring(const RingSpec& ring) {
  std::string out = std::to_string(ring.num_vars()) + ":";
  for (std::size_t i = 0; i < ring.num_vars(); ++i) {
    if (i) out += ',';
    out += ring.cap(i).is_finite() ? std::to_string(ring.cap(i).value()) : "inf";
  }
  return out;
}

}  // namespace gotzmann
