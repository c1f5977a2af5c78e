#pragma once

// Brute-force reference implementations shared by the tests. Nothing here
// calls into the library's growth or shadow code.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <random>
#include <set>
#include <vector>

namespace oracle {

using Exps = std::vector<std::uint32_t>;
inline constexpr std::uint32_t kInf = std::numeric_limits<std::uint32_t>::max();

/// Monomials of degree t with e_i < caps[i], lex-descending.
inline std::vector<Exps> monomials(const std::vector<std::uint32_t>& caps, std::uint32_t t) {
  std::vector<Exps> out;
  const std::size_t n = caps.size();
  Exps cur(n, 0);
  auto rec = [&](auto&& self, std::size_t i, std::uint32_t rem) -> void {
    if (i + 1 == n) {
      if (rem < caps[i]) {
        cur[i] = rem;
        out.push_back(cur);
      }
      return;
    }
    const std::uint32_t top = caps[i] == kInf ? rem : std::min(rem, caps[i] - 1);
    for (std::int64_t e = top; e >= 0; --e) {
      cur[i] = static_cast<std::uint32_t>(e);
      self(self, i + 1, rem - static_cast<std::uint32_t>(e));
    }
  };
  if (n > 0) rec(rec, 0, t);
  return out;
}

inline std::set<Exps> shadow(const std::vector<Exps>& set, const std::vector<std::uint32_t>& caps) {
  std::set<Exps> out;
  for (const auto& m : set)
    for (std::size_t i = 0; i < caps.size(); ++i) {
      Exps e = m;
      ++e[i];
      if (caps[i] == kInf || e[i] < caps[i]) out.insert(e);
    }
  return out;
}

inline std::uint64_t lex_shadow_size(const std::vector<std::uint32_t>& caps, std::uint32_t t, std::uint64_t d) {
  auto all = monomials(caps, t);
  all.resize(d);
  return shadow(all, caps).size();
}

inline std::vector<std::uint32_t> poly(std::size_t n) { return std::vector<std::uint32_t>(n, kInf); }

inline std::vector<std::uint32_t> quot(std::size_t n, std::uint32_t a) {
  auto c = poly(n);
  c[0] = a;
  return c;
}

/// Random subset of `pool` of the given size.
inline std::vector<Exps> sample(const std::vector<Exps>& pool, std::size_t size, std::mt19937_64& rng) {
  std::vector<Exps> v = pool;
  std::shuffle(v.begin(), v.end(), rng);
  v.resize(std::min(size, v.size()));
  return v;
}

}  // namespace oracle
